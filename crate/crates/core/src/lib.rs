//! Proper orientations of graphs, with the supporting machinery: exact
//! maximum average degree, bounded out-degree orientations, capacitated
//! Hall matchings, exact independent sets, an exact `χ⃗` search for small
//! graphs and an extremal family of `r`-partite graphs.
//!
//! The main entry point is [`orient3::orient3`].

pub mod cli;
pub mod density;
pub mod error;
pub mod exactchi;
pub mod extremal;
pub mod flow;
pub mod graph;
pub mod hakimi;
pub mod hallmatch;
pub mod indset;
pub mod io;
pub mod orient3;
pub mod random;

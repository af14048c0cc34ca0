//! Maximum average degree, exactly.
//!
//! `Mad(G)` is the largest `2|E(H)|/|V(H)|` over non-empty subgraphs. Two
//! independent routes are kept: [`exact_mad`] finds a densest vertex set by
//! repeated minimum cuts, and [`ceil_half_mad`] finds `⌈Mad/2⌉` as the
//! smallest feasible out-degree bound of [`hakimi::orient_bounded`].

use num_rational::Ratio;

use crate::error::GraphError;
use crate::flow::{max_flow, FlowNetwork};
use crate::graph::Graph;
use crate::hakimi;

pub type Rational = Ratio<u64>;

/// Formats as `p/q`, keeping the denominator even when it is 1.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// A vertex set attaining the reported maximum average degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityCertificate {
    pub vertices: Vec<usize>,
    pub edges: usize,
    pub mad: Rational,
}

impl DensityCertificate {
    /// Recomputes `2|E(G[H])|/|H|` and compares with the stored value.
    pub fn holds(&self, g: &Graph) -> bool {
        if self.vertices.is_empty() {
            return g.vertex_count() == 0 && self.mad == Rational::from_integer(0);
        }
        let e = g.induced_edge_count(&self.vertices);
        e == self.edges && Rational::new(2 * e as u64, self.vertices.len() as u64) == self.mad
    }
}

/// `⌈Mad(G)/2⌉`: the least `k` for which an orientation with all
/// out-degrees at most `k` exists.
pub fn ceil_half_mad(g: &Graph) -> usize {
    let (mut lo, mut hi) = (0, g.max_degree());
    while lo < hi {
        let mid = (lo + hi) / 2;
        if hakimi::orient_bounded(g, mid).is_feasible() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

/// The set maximizing `q|E(S)| - p|S|`, taken from the source side of a
/// minimum cut in the edge/vertex network (source→edge `q`, edge→endpoints
/// unbounded, vertex→sink `p`).
fn best_response(g: &Graph, p: u64, q: u64) -> Vec<usize> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    let (s, t) = (0, 1);
    let unbounded = q * m as u64 + 1;
    let mut net = FlowNetwork::new(2 + m + n, s, t);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        net.add_arc(s, 2 + e, q);
        net.add_arc(2 + e, 2 + m + u, unbounded);
        net.add_arc(2 + e, 2 + m + v, unbounded);
    }
    for v in 0..n {
        net.add_arc(2 + m + v, t, p);
    }
    let cut = max_flow(&net).expect("density network is well formed").cut;
    (0..n).filter(|&v| cut.source_side[2 + m + v]).collect()
}

/// Exact `Mad(G)` with a witnessing vertex set.
///
/// Starting from the whole vertex set, each round asks for the set maximizing
/// `q|E(S)| - p|S|` at the current density `p/q`; a positive optimum yields a
/// strictly denser set. When the optimum is zero the current set is densest.
pub fn exact_mad(g: &Graph) -> (Rational, DensityCertificate) {
    let n = g.vertex_count();
    if n == 0 {
        let zero = Rational::from_integer(0);
        return (zero, DensityCertificate { vertices: vec![], edges: 0, mad: zero });
    }
    let mut best: Vec<usize> = (0..n).collect();
    let mut edges = g.edge_count();
    if edges == 0 {
        let zero = Rational::from_integer(0);
        return (zero, DensityCertificate { vertices: vec![0], edges: 0, mad: zero });
    }
    loop {
        let (p, q) = (edges as u64, best.len() as u64);
        let cand = best_response(g, p, q);
        let cand_edges = g.induced_edge_count(&cand);
        // strictly denser: cand_edges / |cand| > p / q
        if !cand.is_empty() && (cand_edges as u64) * q > p * cand.len() as u64 {
            best = cand;
            edges = cand_edges;
        } else {
            break;
        }
    }
    let mad = Rational::new(2 * edges as u64, best.len() as u64);
    (mad, DensityCertificate { vertices: best, edges, mad })
}

/// Default vertex cap for [`brute_force_mad`].
pub const BRUTE_FORCE_CAP: usize = 16;

/// `Mad(G)` by enumerating every non-empty vertex subset.
pub fn brute_force_mad(g: &Graph, cap: usize) -> Result<Rational, GraphError> {
    let n = g.vertex_count();
    if n > cap || n > 30 {
        return Err(GraphError::CapExceeded { n, cap: cap.min(30) });
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).fold(0u32, |a, u| a | 1 << u)).collect();
    let (mut best_e, mut best_s) = (0u64, 1u64);
    for mask in 1u32..(1u32 << n) {
        let mut twice = 0u32;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            twice += (adj[v] & mask).count_ones();
        }
        let size = mask.count_ones() as u64;
        if twice as u64 * best_s > best_e * size {
            best_e = twice as u64;
            best_s = size;
        }
    }
    Ok(Rational::new(best_e, best_s))
}

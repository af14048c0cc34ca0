//! Proper orientation of a random tripartite graph, with the step trace.
//!
//! `cargo run --example orient_random -- [seed]`

use pog::graph::verify_proper;
use pog::orient3::{orient3, Orient3Config};
use pog::random::{random_multipartite, Probability};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let (g, p) = random_multipartite(&[8, 8, 8], Probability::new(2, 5).unwrap(), seed);
    println!("n = {}, m = {}, seed = {seed}", g.vertex_count(), g.edge_count());

    let r = orient3(&g, &p, &Orient3Config::default()).expect("orientation failed");
    let rep = verify_proper(&g, &r.orientation, Some(r.k + 7)).unwrap();
    println!("k = {}, max out-degree = {}, bound = {}", r.k, r.max_outdeg, r.k + 7);
    println!("proper = {}, within bound = {:?}", rep.is_proper, rep.within_bound);
    println!();
    print!("{}", r.trace);
}

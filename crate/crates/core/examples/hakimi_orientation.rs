//! Orientations with bounded out-degree, or a dense set proving none exists.

use pog::graph::Graph;
use pog::hakimi::{orient_bounded, BoundedOrientation};

fn main() {
    let n = 6;
    let g = Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap();
    for k in 1..=3 {
        match orient_bounded(&g, k) {
            BoundedOrientation::Feasible(o) => {
                println!("k = {k}: feasible, out-degrees {:?}", o.out_degrees(&g));
            }
            BoundedOrientation::Infeasible(c) => {
                println!(
                    "k = {k}: infeasible, S = {:?} induces {} > {} edges (recount ok: {})",
                    c.vertices,
                    c.edges,
                    k * c.vertices.len(),
                    c.holds(&g, k)
                );
            }
        }
    }
}

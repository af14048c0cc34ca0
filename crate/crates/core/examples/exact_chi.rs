//! Exact proper orientation number of small graphs.

use pog::density::ceil_half_mad;
use pog::exactchi::{chi_orient, EXACT_CAP};
use pog::graph::Graph;

fn main() {
    let k33 = Graph::new(6, (0..3).flat_map(|i| (3..6).map(move |j| (i, j)))).unwrap();
    let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
    let k5 = Graph::new(5, (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j)))).unwrap();
    for (name, g) in [("K3,3", k33), ("C5", c5), ("K5", k5)] {
        let (chi, o) = chi_orient(&g, None, EXACT_CAP).unwrap().unwrap();
        println!(
            "{name}: chi_orient = {chi}, ceil(mad/2) = {}, max degree = {}, out-degrees {:?}",
            ceil_half_mad(&g),
            g.max_degree(),
            o.out_degrees(&g)
        );
    }
}

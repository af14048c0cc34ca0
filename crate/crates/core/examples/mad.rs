//! Exact maximum average degree with a densest-subgraph certificate.

use pog::density::{ceil_half_mad, exact_mad, format_rational};
use pog::graph::Graph;

fn main() {
    // K4 with a pendant path hanging off vertex 3
    let g = Graph::new(7, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
    let (mad, cert) = exact_mad(&g);
    println!("mad = {}", format_rational(&mad));
    println!("densest set = {:?} with {} edges", cert.vertices, cert.edges);
    println!("certificate holds = {}", cert.holds(&g));
    println!("k = ceil(mad/2) = {}", ceil_half_mad(&g));
}

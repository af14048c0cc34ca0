//! Out-degree bounds on 3-colourable planar and outerplanar families.

use pog::density::ceil_half_mad;
use pog::graph::{Graph, Partition};
use pog::orient3::{orient3, Orient3Config};

fn grid(a: usize, b: usize) -> (Graph, Partition) {
    let id = |i: usize, j: usize| i * b + j;
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            if j + 1 < b {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < a {
                edges.push((id(i, j), id(i + 1, j)));
                if j + 1 < b {
                    edges.push((id(i, j), id(i + 1, j + 1)));
                }
            }
        }
    }
    let parts = (0..a * b).map(|v| (v / b + v % b) % 3).collect();
    (Graph::new(a * b, edges).unwrap(), Partition::new(3, parts).unwrap())
}

fn snake(n: usize) -> (Graph, Partition) {
    let edges = (0..n - 1).map(|i| (i, i + 1)).chain((0..n - 2).map(|i| (i, i + 2)));
    (Graph::new(n, edges).unwrap(), Partition::new(3, (0..n).map(|v| v % 3).collect()).unwrap())
}

fn main() {
    for (name, (g, p), bound) in [("triangulated grid 10x10", grid(10, 10), 10), ("triangle strip 120", snake(120), 9)] {
        let r = orient3(&g, &p, &Orient3Config::default()).unwrap();
        println!(
            "{name}: ceil(mad/2) = {}, max out-degree = {} (family bound {bound})",
            ceil_half_mad(&g),
            r.max_outdeg
        );
    }
}

//! Maximum independent sets: bipartite via König, tiered weights by branch and bound.

use pog::graph::Graph;
use pog::indset::{lex_mwis, mis_bipartite, LexObjective, DEFAULT_CAP};

fn main() {
    let path = Graph::new(7, (0..6).map(|i| (i, i + 1))).unwrap();
    let evens: Vec<usize> = (0..7).step_by(2).collect();
    let odds: Vec<usize> = (1..7).step_by(2).collect();
    println!("path P7, bipartite MIS = {:?}", mis_bipartite(&path, &evens, &odds).unwrap());

    // 5-cycle, first tier favours vertex 2, second tier breaks the remaining tie
    let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
    let obj = LexObjective { tiers: vec![vec![1, 1, 2, 1, 1], vec![0, 0, 0, 3, 1]] };
    let all: Vec<usize> = (0..5).collect();
    let r = lex_mwis(&c5, &all, &obj, DEFAULT_CAP).unwrap();
    println!("C5 tiered MWIS = {:?}, tier values {:?}", r.set, r.tier_values);
}

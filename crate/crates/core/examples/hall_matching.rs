//! Capacitated semi-matchings and Hall violations.

use pog::hallmatch::{solve, BipartiteInstance, HallOutcome};

fn report(name: &str, inst: &BipartiteInstance) {
    match solve(inst) {
        HallOutcome::Matching(m) => {
            println!("{name}: matching {:?} valid = {}", m.edges().collect::<Vec<_>>(), m.is_valid(inst));
        }
        HallOutcome::Violation(c) => {
            println!(
                "{name}: violation S = {:?}, |S| = {} > w(N(S)) = {}",
                c.subset,
                c.subset.len(),
                inst.neighborhood_weight(&c.subset)
            );
        }
    }
}

fn main() {
    let ok = BipartiteInstance::new(3, vec![2, 1], vec![(0, 0), (1, 0), (1, 1), (2, 1)]);
    report("capacities 2,1", &ok);
    let bad = BipartiteInstance::new(3, vec![1, 1], vec![(0, 0), (1, 0), (2, 0), (2, 1)]);
    report("capacities 1,1", &bad);
}

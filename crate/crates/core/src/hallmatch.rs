//! Capacitated semi-matchings in bipartite graphs.
//!
//! Every `U` vertex must be matched exactly once and each `V` vertex `v` may
//! absorb at most `w(v)` of them. Such an assignment exists iff
//! `|S| <= w(N(S))` for every `S ⊆ U`; when it does not, a violating `S` is
//! read off a minimum cut. `w(v) = 0` is allowed and makes `v` unusable.

use crate::flow::{max_flow, FlowNetwork};

/// Local indices: `U = 0..u_count`, `V = 0..weights.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteInstance {
    pub u_count: usize,
    pub weights: Vec<u64>,
    /// `(u, v)` pairs.
    pub edges: Vec<(usize, usize)>,
}

impl BipartiteInstance {
    pub fn new(u_count: usize, weights: Vec<u64>, edges: Vec<(usize, usize)>) -> Self {
        assert!(
            edges.iter().all(|&(u, v)| u < u_count && v < weights.len()),
            "bipartite edge endpoint out of range"
        );
        BipartiteInstance { u_count, weights, edges }
    }

    /// `w(N(S))` for a set of `U` vertices.
    pub fn neighborhood_weight(&self, subset: &[usize]) -> u64 {
        let mut inside = vec![false; self.u_count];
        for &u in subset {
            inside[u] = true;
        }
        let mut hit = vec![false; self.weights.len()];
        for &(u, v) in &self.edges {
            if inside[u] {
                hit[v] = true;
            }
        }
        hit.iter().zip(&self.weights).filter(|(h, _)| **h).map(|(_, w)| w).sum()
    }
}

/// `assignment[u]` is the `V` vertex matched to `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiMatching {
    pub assignment: Vec<usize>,
}

impl SemiMatching {
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.assignment.iter().copied().enumerate()
    }

    /// Recounts: each assignment is an instance edge and no capacity is exceeded.
    pub fn is_valid(&self, inst: &BipartiteInstance) -> bool {
        if self.assignment.len() != inst.u_count {
            return false;
        }
        let mut load = vec![0u64; inst.weights.len()];
        for (u, v) in self.edges() {
            if !inst.edges.contains(&(u, v)) {
                return false;
            }
            load[v] += 1;
        }
        load.iter().zip(&inst.weights).all(|(l, w)| l <= w)
    }
}

/// `S ⊆ U` with `|S| > w(N(S))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallCertificate {
    pub subset: Vec<usize>,
}

impl HallCertificate {
    pub fn is_valid(&self, inst: &BipartiteInstance) -> bool {
        self.subset.len() as u64 > inst.neighborhood_weight(&self.subset)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HallOutcome {
    Matching(SemiMatching),
    Violation(HallCertificate),
}

/// Source→u (1), u→v (unbounded), v→sink (`w(v)`); feasible iff the flow
/// saturates `U`. With unbounded middle arcs a finite minimum cut keeps all
/// of `N(S)` on the source side, so the source-side `U` vertices violate Hall.
pub fn solve(inst: &BipartiteInstance) -> HallOutcome {
    let (nu, nv) = (inst.u_count, inst.weights.len());
    let (s, t) = (0, 1);
    let unode = |u: usize| 2 + u;
    let vnode = |v: usize| 2 + nu + v;
    let unbounded = nu as u64 + 1;
    let mut net = FlowNetwork::new(2 + nu + nv, s, t);
    for u in 0..nu {
        net.add_arc(s, unode(u), 1);
    }
    let middle: Vec<usize> = inst.edges.iter().map(|&(u, v)| net.add_arc(unode(u), vnode(v), unbounded)).collect();
    for (v, &w) in inst.weights.iter().enumerate() {
        net.add_arc(vnode(v), t, w);
    }
    let result = max_flow(&net).expect("matching network is well formed");
    if result.value == nu as u64 {
        let mut assignment = vec![usize::MAX; nu];
        for (&arc, &(u, v)) in middle.iter().zip(&inst.edges) {
            if result.flow[arc] > 0 {
                assignment[u] = v;
            }
        }
        HallOutcome::Matching(SemiMatching { assignment })
    } else {
        let subset = (0..nu).filter(|&u| result.cut.source_side[unode(u)]).collect();
        HallOutcome::Violation(HallCertificate { subset })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let inst = BipartiteInstance::new(1, vec![1], vec![(0, 0)]);
        assert_eq!(solve(&inst), HallOutcome::Matching(SemiMatching { assignment: vec![0] }));
    }

    #[test]
    fn overloaded_vertex() {
        let inst = BipartiteInstance::new(2, vec![1], vec![(0, 0), (1, 0)]);
        match solve(&inst) {
            HallOutcome::Violation(c) => {
                assert_eq!(c.subset, vec![0, 1]);
                assert!(c.is_valid(&inst));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn capacity_two() {
        let inst = BipartiteInstance::new(2, vec![2], vec![(0, 0), (1, 0)]);
        match solve(&inst) {
            HallOutcome::Matching(m) => {
                assert_eq!(m.assignment, vec![0, 0]);
                assert!(m.is_valid(&inst));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn zero_weight_is_unusable() {
        let inst = BipartiteInstance::new(1, vec![0, 1], vec![(0, 0), (0, 1)]);
        assert_eq!(solve(&inst), HallOutcome::Matching(SemiMatching { assignment: vec![1] }));
        let inst = BipartiteInstance::new(1, vec![0], vec![(0, 0)]);
        assert!(matches!(solve(&inst), HallOutcome::Violation(c) if c.subset == vec![0]));
    }

    #[test]
    fn isolated_u_vertex() {
        let inst = BipartiteInstance::new(2, vec![3], vec![(0, 0)]);
        match solve(&inst) {
            HallOutcome::Violation(c) => assert!(c.is_valid(&inst)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_u_side() {
        let inst = BipartiteInstance::new(0, vec![1, 2], vec![]);
        assert_eq!(solve(&inst), HallOutcome::Matching(SemiMatching { assignment: vec![] }));
    }
}

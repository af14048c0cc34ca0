//! Independent-set selection.
//!
//! [`mis_bipartite`] solves the bipartite case through König's theorem.
//! [`lex_mwis`] finds an exact lexicographic maximum-weight independent set
//! by branch and bound on each connected component of the candidates.

use crate::error::IndSetError;
use crate::graph::Graph;

/// Default component cap.
pub const DEFAULT_CAP: usize = 512;

fn membership(n: usize, vertices: &[usize], tag: u8, mark: &mut [u8]) {
    debug_assert_eq!(mark.len(), n);
    for &v in vertices {
        mark[v] = tag;
    }
}

/// Maximum matching between `left` and `right` inside `g` (Kuhn), as
/// `mate[v]` over graph vertices.
fn max_matching(g: &Graph, left: &[usize], mark: &[u8]) -> Vec<Option<usize>> {
    fn augment(g: &Graph, x: usize, mark: &[u8], seen: &mut [bool], mate: &mut [Option<usize>]) -> bool {
        for y in g.neighbors(x) {
            if mark[y] != 2 || seen[y] {
                continue;
            }
            seen[y] = true;
            if mate[y].is_none_or(|z| augment(g, z, mark, seen, mate)) {
                mate[y] = Some(x);
                mate[x] = Some(y);
                return true;
            }
        }
        false
    }
    let mut mate = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    for &x in left {
        seen.iter_mut().for_each(|s| *s = false);
        augment(g, x, mark, &mut seen, &mut mate);
    }
    mate
}

/// Maximum independent set of `G[side_a ∪ side_b]`, where every induced
/// edge must join the two sides. Returned sorted.
pub fn mis_bipartite(g: &Graph, side_a: &[usize], side_b: &[usize]) -> Result<Vec<usize>, IndSetError> {
    let n = g.vertex_count();
    let mut mark = vec![0u8; n];
    membership(n, side_a, 1, &mut mark);
    membership(n, side_b, 2, &mut mark);
    for &(u, v) in g.edges() {
        if mark[u] != 0 && mark[u] == mark[v] {
            return Err(IndSetError::NotBipartite { u, v });
        }
    }
    let mate = max_matching(g, side_a, &mark);

    // König: alternate from unmatched left vertices
    let mut reached = vec![false; n];
    let mut stack: Vec<usize> = side_a.iter().copied().filter(|&x| mate[x].is_none()).collect();
    for &x in &stack {
        reached[x] = true;
    }
    while let Some(x) = stack.pop() {
        for y in g.neighbors(x) {
            if mark[y] != 2 || reached[y] || mate[x] == Some(y) {
                continue;
            }
            reached[y] = true;
            if let Some(z) = mate[y] {
                if !reached[z] {
                    reached[z] = true;
                    stack.push(z);
                }
            }
        }
    }
    let mut out: Vec<usize> = side_a
        .iter()
        .copied()
        .filter(|&x| reached[x])
        .chain(side_b.iter().copied().filter(|&y| !reached[y]))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Tiered per-vertex weights, first tier most significant. Each tier is
/// indexed by graph vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexObjective {
    pub tiers: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndSetResult {
    pub set: Vec<usize>,
    /// Tier sums over `set`.
    pub tier_values: Vec<u64>,
}

/// Vertex sets of one component as `words`-wide bitsets.
struct Search {
    words: usize,
    /// Row `v` occupies `adj[v * words..(v + 1) * words]`.
    adj: Vec<u64>,
    weight: Vec<u128>,
    best: Option<(u128, Vec<u64>)>,
}

fn ones(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            (w != 0).then(|| {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                i * 64 + b
            })
        })
    })
}

fn has(set: &[u64], v: usize) -> bool {
    set[v / 64] >> (v % 64) & 1 == 1
}

impl Search {
    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    fn meets(&self, v: usize, p: &[u64]) -> bool {
        self.row(v).iter().zip(p).any(|(a, b)| a & b != 0)
    }

    /// Greedy clique cover of `p`: sum of the heaviest weight per clique.
    fn bound(&self, p: &[u64]) -> u128 {
        let mut cliques: Vec<(Vec<u64>, u128)> = Vec::new();
        for v in ones(p) {
            match cliques.iter_mut().find(|(common, _)| has(common, v)) {
                Some((common, top)) => {
                    common.iter_mut().zip(self.row(v)).for_each(|(c, a)| *c &= a);
                    *top = (*top).max(self.weight[v]);
                }
                None => cliques.push((self.row(v).to_vec(), self.weight[v])),
            }
        }
        cliques.iter().map(|&(_, w)| w).sum()
    }

    fn dfs(&mut self, mut p: Vec<u64>, mut cur: u128, mut set: Vec<u64>) {
        // vertices with no neighbor left in p belong to every best completion
        let free: Vec<usize> = ones(&p).filter(|&v| !self.meets(v, &p)).collect();
        for v in free {
            p[v / 64] &= !(1 << (v % 64));
            cur += self.weight[v];
            set[v / 64] |= 1 << (v % 64);
        }
        let Some(v) = ones(&p).next() else {
            if self.best.as_ref().is_none_or(|(b, _)| cur > *b) {
                self.best = Some((cur, set));
            }
            return;
        };
        if let Some((b, _)) = &self.best {
            if cur + self.bound(&p) <= *b {
                return;
            }
        }
        let mut with = p.clone();
        with.iter_mut().zip(self.row(v)).for_each(|(x, a)| *x &= !a);
        with[v / 64] &= !(1 << (v % 64));
        let mut set_with = set.clone();
        set_with[v / 64] |= 1 << (v % 64);
        self.dfs(with, cur + self.weight[v], set_with);
        p[v / 64] &= !(1 << (v % 64));
        self.dfs(p, cur, set);
    }
}

/// Exact lexicographic optimum over independent subsets of `candidates`.
///
/// Ties between optimal sets go to the one containing the lowest-indexed
/// vertex at their first difference. Fails if a connected component of the
/// induced candidate graph has more than `cap` vertices.
pub fn lex_mwis(g: &Graph, candidates: &[usize], obj: &LexObjective, cap: usize) -> Result<IndSetResult, IndSetError> {
    let n = g.vertex_count();
    for (tier, w) in obj.tiers.iter().enumerate() {
        if w.len() != n {
            return Err(IndSetError::TierLength { tier, expected: n, got: w.len() });
        }
    }
    let mut cand = candidates.to_vec();
    cand.sort_unstable();
    cand.dedup();

    // radix larger than any lower-tier total
    let radix: u128 = obj.tiers.iter().skip(1).map(|w| cand.iter().map(|&v| w[v] as u128).sum::<u128>()).max().unwrap_or(0) + 1;
    let scalar = |v: usize| -> Result<u128, IndSetError> {
        obj.tiers.iter().try_fold(0u128, |acc, w| {
            acc.checked_mul(radix).and_then(|x| x.checked_add(w[v] as u128)).ok_or(IndSetError::Overflow)
        })
    };

    let mut in_cand = vec![false; n];
    for &v in &cand {
        in_cand[v] = true;
    }
    let (sub, map) = g.induced_subgraph(&cand);
    let mut chosen = Vec::new();
    for comp in sub.components() {
        if comp.len() > cap {
            return Err(IndSetError::CapExceeded { size: comp.len(), cap });
        }
        let mut local = vec![usize::MAX; sub.vertex_count()];
        for (i, &v) in comp.iter().enumerate() {
            local[v] = i;
        }
        let words = comp.len().div_ceil(64);
        let mut adj = vec![0u64; comp.len() * words];
        for (i, &v) in comp.iter().enumerate() {
            for u in sub.neighbors(v) {
                adj[i * words + local[u] / 64] |= 1 << (local[u] % 64);
            }
        }
        let weight = comp.iter().map(|&v| scalar(map[v])).collect::<Result<Vec<_>, _>>()?;
        let mut search = Search { words, adj, weight, best: None };
        let mut all = vec![u64::MAX; words];
        if comp.len() % 64 != 0 {
            all[words - 1] = (1 << (comp.len() % 64)) - 1;
        }
        search.dfs(all, 0, vec![0; words]);
        let (_, set) = search.best.expect("search always records a leaf");
        chosen.extend(ones(&set).map(|i| map[comp[i]]));
    }
    chosen.sort_unstable();
    let tier_values = obj.tiers.iter().map(|w| chosen.iter().map(|&v| w[v]).sum()).collect();
    Ok(IndSetResult { set: chosen, tier_values })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiers(n: usize, rows: &[&[u64]]) -> LexObjective {
        LexObjective { tiers: rows.iter().map(|r| { assert_eq!(r.len(), n); r.to_vec() }).collect() }
    }

    #[test]
    fn bipartite_four_cycle() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let s = mis_bipartite(&g, &[0, 2], &[1, 3]).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s == vec![0, 2] || s == vec![1, 3]);
    }

    #[test]
    fn bipartite_edgeless() {
        let g = Graph::empty(5);
        assert_eq!(mis_bipartite(&g, &[0, 1], &[2, 3, 4]).unwrap(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn bipartite_path() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(mis_bipartite(&g, &[0, 2], &[1]).unwrap(), vec![0, 2]);
        // only induced edges count: vertex 1 excluded
        assert_eq!(mis_bipartite(&g, &[0], &[2]).unwrap(), vec![0, 2]);
    }

    #[test]
    fn bipartite_rejects_same_side_edge() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(mis_bipartite(&g, &[0, 1], &[2]), Err(IndSetError::NotBipartite { .. })));
    }

    #[test]
    fn triangle_prefers_heavy_vertex() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let r = lex_mwis(&g, &[0, 1, 2], &tiers(3, &[&[3, 1, 1]]), DEFAULT_CAP).unwrap();
        assert_eq!(r.set, vec![0]);
        assert_eq!(r.tier_values, vec![3]);
    }

    #[test]
    fn edgeless_takes_everything() {
        let g = Graph::empty(4);
        let r = lex_mwis(&g, &[0, 1, 3], &tiers(4, &[&[1, 2, 0, 1], &[1, 1, 1, 1]]), DEFAULT_CAP).unwrap();
        assert_eq!(r.set, vec![0, 1, 3]);
        assert_eq!(r.tier_values, vec![4, 3]);
    }

    #[test]
    fn first_tier_dominates() {
        // path u-v-w, tier 1 all ones, tier 2 only on v
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let r = lex_mwis(&g, &[0, 1, 2], &tiers(3, &[&[1, 1, 1], &[0, 1, 0]]), DEFAULT_CAP).unwrap();
        assert_eq!(r.set, vec![0, 2]);
        assert_eq!(r.tier_values, vec![2, 0]);
    }

    #[test]
    fn ties_go_to_lowest_index() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let r = lex_mwis(&g, &[0, 1, 2, 3], &tiers(4, &[&[1; 4]]), DEFAULT_CAP).unwrap();
        assert_eq!(r.set, vec![0, 2]);
    }

    #[test]
    fn cap_is_per_component() {
        let g = Graph::new(6, [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let obj = tiers(6, &[&[1; 6]]);
        assert_eq!(lex_mwis(&g, &[0, 1, 2, 3, 4, 5], &obj, 3).unwrap().set, vec![0, 2, 3, 5]);
        assert!(matches!(lex_mwis(&g, &[0, 1, 2, 3, 4, 5], &obj, 2), Err(IndSetError::CapExceeded { size: 3, cap: 2 })));
    }

    #[test]
    fn components_wider_than_one_word() {
        // path on 150 vertices: the even vertices win ties
        let g = Graph::new(150, (0..149).map(|i| (i, i + 1))).unwrap();
        let all: Vec<usize> = (0..150).collect();
        let r = lex_mwis(&g, &all, &tiers(150, &[&[1; 150]]), 200).unwrap();
        assert_eq!(r.set, (0..150).step_by(2).collect::<Vec<_>>());
        // triangle strip on 200 vertices
        let strip = Graph::new(200, (0..199).map(|i| (i, i + 1)).chain((0..198).map(|i| (i, i + 2)))).unwrap();
        let all: Vec<usize> = (0..200).collect();
        let r = lex_mwis(&strip, &all, &tiers(200, &[&[1; 200]]), 200).unwrap();
        assert_eq!(r.set, (0..200).step_by(3).collect::<Vec<_>>());
    }
}

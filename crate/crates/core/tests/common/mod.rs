//! Independent oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use pog::graph::{Graph, Partition};

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.iter().copied()).unwrap()
}

/// Graph whose edges are the set bits of `mask` over pairs `(i, j)`, `i < j`,
/// in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn petersen() -> Graph {
    let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    e.extend((0..5).map(|i| (i, i + 5)));
    e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    Graph::new(10, e).unwrap()
}

/// Edges induced by a vertex bitmask.
pub fn induced_edges(g: &Graph, mask: u32) -> usize {
    g.edges().iter().filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1).count()
}

/// Smallest max out-degree over all proper orientations, by enumerating
/// all `2^m` orientations.
pub fn chi_by_orientations(g: &Graph) -> usize {
    let m = g.edge_count();
    assert!(m <= 20, "too many edges for enumeration");
    let mut best = usize::MAX;
    for bits in 0u32..(1u32 << m) {
        let mut out = vec![0usize; g.vertex_count()];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            out[if bits >> e & 1 == 1 { u } else { v }] += 1;
        }
        if g.edges().iter().all(|&(u, v)| out[u] != out[v]) {
            best = best.min(out.iter().copied().max().unwrap_or(0));
        }
    }
    best
}

/// Chromatic number by trying every colouring with `c` colours, `c = 1, 2, ...`.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    for c in 1..=n {
        let total = (c as u64).pow(n as u32);
        for code in 0..total {
            let mut x = code;
            let col: Vec<u64> = (0..n)
                .map(|_| {
                    let d = x % c as u64;
                    x /= c as u64;
                    d
                })
                .collect();
            if g.edges().iter().all(|&(u, v)| col[u] != col[v]) {
                return c;
            }
        }
    }
    n
}

/// Maximum of `2|E(S)|/|S|` as a reduced pair, by subset enumeration.
pub fn mad_by_subsets(g: &Graph) -> (u64, u64) {
    let n = g.vertex_count();
    let (mut bn, mut bd) = (0u64, 1u64);
    for mask in 1u32..(1u32 << n) {
        let e = 2 * induced_edges(g, mask) as u64;
        let s = mask.count_ones() as u64;
        if e * bd > bn * s {
            (bn, bd) = (e, s);
        }
    }
    let g0 = gcd(bn, bd);
    (bn / g0, bd / g0)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

/// An orientation with out-degrees exactly `target` exists iff the targets
/// sum to `|E|` and every vertex set carries at least its induced edges.
pub fn targets_realizable(g: &Graph, target: &[usize]) -> bool {
    let n = g.vertex_count();
    if target.iter().sum::<usize>() != g.edge_count() {
        return false;
    }
    (1u32..(1u32 << n)).all(|mask| {
        let t: usize = (0..n).filter(|&v| mask >> v & 1 == 1).map(|v| target[v]).sum();
        t >= induced_edges(g, mask)
    })
}

/// Hall's condition by enumerating every subset of `U`.
pub fn hall_holds(u_count: usize, weights: &[u64], edges: &[(usize, usize)]) -> bool {
    (0u32..(1u32 << u_count)).all(|mask| {
        let mut hit = vec![false; weights.len()];
        for &(u, v) in edges {
            if mask >> u & 1 == 1 {
                hit[v] = true;
            }
        }
        let w: u64 = hit.iter().zip(weights).filter(|(h, _)| **h).map(|(_, w)| w).sum();
        mask.count_ones() as u64 <= w
    })
}

/// Best tier vector over independent subsets of `cand`, with the winning
/// set under the lowest-index-first tie rule.
pub fn lex_best_by_enumeration(g: &Graph, cand: &[usize], tiers: &[Vec<u64>]) -> (Vec<u64>, Vec<usize>) {
    let k = cand.len();
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    for mask in 0u32..(1u32 << k) {
        let set: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| cand[i]).collect();
        if set.iter().any(|&a| set.iter().any(|&b| g.has_edge(a, b))) {
            continue;
        }
        let val: Vec<u64> = tiers.iter().map(|w| set.iter().map(|&v| w[v]).sum()).collect();
        let better = match &best {
            None => true,
            Some((bv, bs)) => val > *bv || (val == *bv && prefers(&set, bs)),
        };
        if better {
            best = Some((val, set));
        }
    }
    best.unwrap()
}

/// `a` wins against `b` when the smallest vertex in exactly one of them is in `a`.
fn prefers(a: &[usize], b: &[usize]) -> bool {
    let first = a.iter().filter(|v| !b.contains(v)).chain(b.iter().filter(|v| !a.contains(v))).min();
    first.is_some_and(|v| a.contains(v))
}

/// A fixture with a supplied proper 3-colouring.
pub struct Fixture {
    pub name: String,
    pub graph: Graph,
    pub parts: Partition,
}

fn fixture(name: String, n: usize, edges: Vec<(usize, usize)>, colour: impl Fn(usize) -> usize) -> Fixture {
    let graph = Graph::new(n, edges).unwrap();
    let parts = Partition::new(3, (0..n).map(colour).collect()).unwrap();
    parts.validate(&graph).unwrap();
    Fixture { name, graph, parts }
}

/// `a x b` grid with one diagonal per square, coloured `(i + j) mod 3`.
pub fn triangulated_grid(a: usize, b: usize) -> Fixture {
    let id = |i: usize, j: usize| i * b + j;
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            if j + 1 < b {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < a {
                edges.push((id(i, j), id(i + 1, j)));
            }
            if i + 1 < a && j + 1 < b {
                edges.push((id(i, j), id(i + 1, j + 1)));
            }
        }
    }
    fixture(format!("grid{a}x{b}"), a * b, edges, |v| (v / b + v % b) % 3)
}

/// Hub `0` and an even rim `1..=rim`.
pub fn wheel(rim: usize) -> Fixture {
    assert!(rim.is_multiple_of(2));
    let mut edges: Vec<(usize, usize)> = (1..=rim).map(|i| (0, i)).collect();
    edges.extend((1..=rim).map(|i| (i, i % rim + 1)));
    fixture(format!("wheel{rim}"), rim + 1, edges, |v| if v == 0 { 2 } else { v % 2 })
}

/// `levels` nested triangles, consecutive ones joined as in an octahedron.
pub fn stacked_triangles(levels: usize) -> Fixture {
    let mut edges = Vec::new();
    for l in 0..levels {
        for i in 0..3 {
            for j in i + 1..3 {
                edges.push((3 * l + i, 3 * l + j));
            }
        }
        if l + 1 < levels {
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        edges.push((3 * l + i, 3 * (l + 1) + j));
                    }
                }
            }
        }
    }
    fixture(format!("stacked{levels}"), 3 * levels, edges, |v| v % 3)
}

/// Path `1..=len` plus hub `0`.
pub fn fan(len: usize) -> Fixture {
    let mut edges: Vec<(usize, usize)> = (1..=len).map(|i| (0, i)).collect();
    edges.extend((1..len).map(|i| (i, i + 1)));
    fixture(format!("fan{len}"), len + 1, edges, |v| if v == 0 { 2 } else { v % 2 })
}

/// Triangle strip: `i ~ i+1` and `i ~ i+2`.
pub fn snake(n: usize) -> Fixture {
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.extend((0..n.saturating_sub(2)).map(|i| (i, i + 2)));
    fixture(format!("snake{n}"), n, edges, |v| v % 3)
}

pub fn planar_fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    for (a, b) in [(2, 2), (3, 3), (4, 6), (8, 8), (12, 15), (20, 20)] {
        out.push(triangulated_grid(a, b));
    }
    for rim in [4, 6, 10, 30, 100] {
        out.push(wheel(rim));
    }
    for levels in [1, 2, 5, 20, 60] {
        out.push(stacked_triangles(levels));
    }
    out
}

pub fn outerplanar_fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    for len in [1, 2, 5, 12, 40, 150] {
        out.push(fan(len));
    }
    for n in [3, 4, 7, 25, 200] {
        out.push(snake(n));
    }
    out
}

/// Small named graphs.
pub fn named_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("K1", Graph::empty(1)),
        ("K2", complete(2)),
        ("K3", complete(3)),
        ("K4", complete(4)),
        ("K5", complete(5)),
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("C7", cycle(7)),
        ("K33", complete_bipartite(3, 3)),
        ("K24", complete_bipartite(2, 4)),
        ("K44", complete_bipartite(4, 4)),
        ("star6", complete_bipartite(1, 6)),
        ("petersen", petersen()),
        ("octahedron", stacked_triangles(2).graph),
        ("wheel6", wheel(6).graph),
        ("grid3x3", triangulated_grid(3, 3).graph),
    ]
}

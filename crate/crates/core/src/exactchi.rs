//! Exact proper orientation number for small graphs.
//!
//! A proper orientation is a labelling `ℓ(v) = d⁺(v)` with adjacent labels
//! distinct that some orientation realizes. The search enumerates such
//! labellings with `ℓ(v) <= min(k, d(v))` and `Σℓ = |E|`, prunes with the
//! subset conditions a realizable labelling must satisfy, and settles each
//! complete labelling with a flow.

use crate::density::ceil_half_mad;
use crate::error::GraphError;
use crate::flow::prescribed_outdegree_orientation;
use crate::graph::{Graph, Orientation};

/// Default vertex cap for the exact search.
pub const EXACT_CAP: usize = 14;

struct Labeler<'a> {
    g: &'a Graph,
    k: usize,
    order: Vec<usize>,
    /// Max label still available to the suffix starting at each position.
    suffix_max: Vec<usize>,
    label: Vec<Option<usize>>,
    placed: Vec<bool>,
    /// Edges with both endpoints placed.
    inner_edges: usize,
    /// Edges with at least one endpoint placed.
    touched_edges: usize,
    sum: usize,
    found: Option<Orientation>,
}

impl Labeler<'_> {
    fn cap(&self, v: usize) -> usize {
        self.k.min(self.g.degree(v))
    }

    fn search(&mut self, pos: usize) {
        if self.found.is_some() {
            return;
        }
        let m = self.g.edge_count();
        if pos == self.order.len() {
            if self.sum == m {
                let target: Vec<usize> = self.label.iter().map(|l| l.unwrap()).collect();
                self.found = prescribed_outdegree_orientation(self.g, &target).expect("targets within degree");
            }
            return;
        }
        let v = self.order[pos];
        let (mut inner, mut touched) = (0, 0);
        for u in self.g.neighbors(v) {
            if self.placed[u] {
                inner += 1;
            } else {
                touched += 1;
            }
        }
        self.placed[v] = true;
        self.inner_edges += inner;
        self.touched_edges += touched;
        for l in 0..=self.cap(v) {
            if self.g.neighbors(v).any(|u| self.label[u] == Some(l)) {
                continue;
            }
            let sum = self.sum + l;
            // placed labels must cover placed edges and fit in the edges they touch
            if sum > m || sum < self.inner_edges || sum > self.touched_edges {
                continue;
            }
            if sum + self.suffix_max[pos + 1] < m {
                continue;
            }
            self.label[v] = Some(l);
            self.sum = sum;
            self.search(pos + 1);
            self.sum -= l;
            self.label[v] = None;
            if self.found.is_some() {
                break;
            }
        }
        self.placed[v] = false;
        self.inner_edges -= inner;
        self.touched_edges -= touched;
    }
}

/// A proper orientation with maximum out-degree at most `k`, if one exists.
pub fn exists_proper_bounded(g: &Graph, k: usize, cap: usize) -> Result<Option<Orientation>, GraphError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(GraphError::CapExceeded { n, cap });
    }
    let k = k.min(g.max_degree());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut suffix_max = vec![0; n + 1];
    for i in (0..n).rev() {
        suffix_max[i] = suffix_max[i + 1] + k.min(g.degree(order[i]));
    }
    let mut s = Labeler {
        g,
        k,
        order,
        suffix_max,
        label: vec![None; n],
        placed: vec![false; n],
        inner_edges: 0,
        touched_edges: 0,
        sum: 0,
        found: None,
    };
    s.search(0);
    Ok(s.found)
}

/// `χ⃗(G)` with a witness, searching `k` upward from `⌈Mad/2⌉`.
/// `max_k` stops the search early (returning `None`).
pub fn chi_orient(g: &Graph, max_k: Option<usize>, cap: usize) -> Result<Option<(usize, Orientation)>, GraphError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(GraphError::CapExceeded { n, cap });
    }
    let hi = max_k.map_or(g.max_degree(), |m| m.min(g.max_degree()));
    for k in ceil_half_mad(g)..=hi {
        if let Some(o) = exists_proper_bounded(g, k, cap)? {
            return Ok(Some((k, o)));
        }
    }
    Ok(None)
}

//! Orientations with bounded maximum out-degree by incremental path reversal.
//!
//! A graph has an orientation with every out-degree at most `k` exactly when
//! its maximum average degree is at most `2k`. Edges are inserted in
//! lexicographic order, each leaving the endpoint with the smaller current
//! out-degree (lower index on ties). When a vertex reaches `k + 1`, a
//! breadth-first search along out-arcs looks for a vertex with out-degree at
//! most `k - 1` and reverses the path to it. If none is reachable, the
//! reachable set spans more than `k` edges per vertex.

use std::collections::VecDeque;

use crate::graph::{Graph, Orientation};

/// Vertex set `S` with `|E(G[S])| > k|S|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfeasibilityCertificate {
    pub vertices: Vec<usize>,
    pub edges: usize,
}

impl InfeasibilityCertificate {
    /// Recounts `|E(G[S])| > k|S|` on the full graph.
    pub fn holds(&self, g: &Graph, k: usize) -> bool {
        g.induced_edge_count(&self.vertices) > k * self.vertices.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundedOrientation {
    Feasible(Orientation),
    Infeasible(InfeasibilityCertificate),
}

impl BoundedOrientation {
    pub fn orientation(&self) -> Option<&Orientation> {
        match self {
            BoundedOrientation::Feasible(o) => Some(o),
            BoundedOrientation::Infeasible(_) => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self, BoundedOrientation::Feasible(_))
    }
}

/// An orientation with all out-degrees at most `k`, or a dense-set certificate.
pub fn orient_bounded(g: &Graph, k: usize) -> BoundedOrientation {
    let n = g.vertex_count();
    // tail of each inserted edge
    let mut tail: Vec<Option<usize>> = vec![None; g.edge_count()];
    let mut out = vec![0usize; n];
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut visited = vec![false; n];
    let mut touched = Vec::new();

    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let t = if out[v] < out[u] { v } else { u };
        tail[e] = Some(t);
        out[t] += 1;
        if out[t] <= k {
            continue;
        }

        // BFS from t over current out-arcs, neighbors in ascending order
        for &x in &touched {
            visited[x] = false;
            parent[x] = None;
        }
        touched.clear();
        visited[t] = true;
        touched.push(t);
        let mut queue = VecDeque::from([t]);
        let mut found = None;
        'bfs: while let Some(x) = queue.pop_front() {
            for &(y, f) in g.incident(x) {
                if tail[f] != Some(x) || visited[y] {
                    continue;
                }
                visited[y] = true;
                touched.push(y);
                parent[y] = Some((x, f));
                if out[y] < k {
                    found = Some(y);
                    break 'bfs;
                }
                queue.push_back(y);
            }
        }

        match found {
            Some(end) => {
                let mut y = end;
                while let Some((x, f)) = parent[y] {
                    tail[f] = Some(y);
                    y = x;
                }
                out[t] -= 1;
                out[end] += 1;
            }
            None => {
                let mut vertices: Vec<usize> = touched.clone();
                vertices.sort_unstable();
                let edges = g.induced_edge_count(&vertices);
                return BoundedOrientation::Infeasible(InfeasibilityCertificate { vertices, edges });
            }
        }
    }

    let forward = g.edges().iter().zip(&tail).map(|(&(u, _), t)| *t == Some(u)).collect();
    BoundedOrientation::Feasible(Orientation::from_forward(forward))
}

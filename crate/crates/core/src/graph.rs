//! Graph, partition and orientation data model.
//!
//! Vertices are `0..n` internally; the text formats in [`crate::io`] shift
//! them to `1..=n`. Edges are stored as `(u, v)` with `u < v`, sorted
//! lexicographically, and an edge's position in that order is its id.

use std::collections::VecDeque;

use crate::error::GraphError;

/// Simple undirected graph with sorted adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// `(neighbor, edge id)` sorted by neighbor.
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range
    /// endpoints. Endpoint order within a pair does not matter.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange { vertex: a.max(b), n });
            }
            if a == b {
                return Err(GraphError::Loop { vertex: a });
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge { u: w[0].0, v: w[0].1 });
        }
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in list.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Incident `(neighbor, edge id)` pairs in ascending neighbor order.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(u, _)| u)
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let row = self.adj.get(u)?;
        row.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| row[i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Number of edges with both endpoints in `set`.
    pub fn induced_edge_count(&self, set: &[usize]) -> usize {
        let mut mark = vec![false; self.n];
        for &v in set {
            mark[v] = true;
        }
        self.edges.iter().filter(|&&(u, v)| mark[u] && mark[v]).count()
    }

    /// The subgraph induced by `vertices` (relabelled `0..len` in the given
    /// order) together with the map back to the original labels.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|&(u, v)| (local[u], local[v]));
        let sub = Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph is simple");
        (sub, vertices.to_vec())
    }

    /// Connected components, each sorted ascending, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }
}

/// Assignment of every vertex to one of `r` parts (`0..r` internally).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    r: usize,
    part: Vec<usize>,
}

impl Partition {
    pub fn new(r: usize, part: Vec<usize>) -> Result<Self, GraphError> {
        if let Some((v, &p)) = part.iter().enumerate().find(|(_, &p)| p >= r) {
            return Err(GraphError::PartOutOfRange { vertex: v, part: p, r });
        }
        Ok(Partition { r, part })
    }

    pub fn part_count(&self) -> usize {
        self.r
    }

    pub fn part_of(&self, v: usize) -> usize {
        self.part[v]
    }

    pub fn len(&self) -> usize {
        self.part.len()
    }

    pub fn is_empty(&self) -> bool {
        self.part.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.part
    }

    pub fn members(&self, p: usize) -> Vec<usize> {
        (0..self.part.len()).filter(|&v| self.part[v] == p).collect()
    }

    /// Checks that the partition covers `g` and that every part is independent.
    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        if self.part.len() != g.vertex_count() {
            return Err(GraphError::PartitionSize { expected: g.vertex_count(), got: self.part.len() });
        }
        for &(u, v) in g.edges() {
            if self.part[u] == self.part[v] {
                return Err(GraphError::EdgeInsidePart { u, v, part: self.part[u] });
            }
        }
        Ok(())
    }

    pub fn restrict(&self, vertices: &[usize]) -> Partition {
        Partition { r: self.r, part: vertices.iter().map(|&v| self.part[v]).collect() }
    }

    /// Same assignment viewed as an `r`-partition with `r >= self.r`.
    pub fn widen(&self, r: usize) -> Partition {
        Partition { r: r.max(self.r), part: self.part.clone() }
    }
}

/// A total orientation: for each edge `(u, v)` with `u < v`, whether it
/// points `u -> v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    forward: Vec<bool>,
}

impl Orientation {
    pub fn from_forward(forward: Vec<bool>) -> Self {
        Orientation { forward }
    }

    /// Builds an orientation from `(tail, head)` arcs; the arcs must cover
    /// the edge set of `g` exactly once.
    pub fn from_arcs(g: &Graph, arcs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut forward = vec![false; g.edge_count()];
        let mut seen = vec![false; g.edge_count()];
        for &(t, h) in arcs {
            let e = g.edge_id(t, h).ok_or(GraphError::ArcNotInGraph { tail: t, head: h })?;
            if seen[e] {
                return Err(GraphError::DuplicateArc { tail: t, head: h });
            }
            seen[e] = true;
            forward[e] = t < h;
        }
        if let Some(e) = seen.iter().position(|s| !s) {
            let (u, v) = g.edge(e);
            return Err(GraphError::EdgeNotOriented { u, v });
        }
        Ok(Orientation { forward })
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn tail(&self, g: &Graph, e: usize) -> usize {
        let (u, v) = g.edge(e);
        if self.forward[e] {
            u
        } else {
            v
        }
    }

    /// `(tail, head)` pairs in edge-id order.
    pub fn arcs(&self, g: &Graph) -> Vec<(usize, usize)> {
        g.edges()
            .iter()
            .zip(&self.forward)
            .map(|(&(u, v), &f)| if f { (u, v) } else { (v, u) })
            .collect()
    }

    pub fn out_degrees(&self, g: &Graph) -> Vec<usize> {
        let mut out = vec![0; g.vertex_count()];
        for e in 0..g.edge_count() {
            out[self.tail(g, e)] += 1;
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeState {
    Unoriented,
    /// `u -> v` for the stored pair `(u, v)`, `u < v`.
    Forward,
    Backward,
}

/// Orientation under construction, tracking realized out-degree `d_p^+`
/// and potential out-degree `d_p` (out-edges plus unoriented edges).
#[derive(Debug, Clone)]
pub struct PartialOrientation {
    state: Vec<EdgeState>,
    outdeg: Vec<usize>,
    potential: Vec<usize>,
    oriented: usize,
}

impl PartialOrientation {
    pub fn new(g: &Graph) -> Self {
        PartialOrientation {
            state: vec![EdgeState::Unoriented; g.edge_count()],
            outdeg: vec![0; g.vertex_count()],
            potential: (0..g.vertex_count()).map(|v| g.degree(v)).collect(),
            oriented: 0,
        }
    }

    pub fn state(&self, e: usize) -> EdgeState {
        self.state[e]
    }

    pub fn is_oriented(&self, e: usize) -> bool {
        self.state[e] != EdgeState::Unoriented
    }

    /// Tail of an oriented edge.
    pub fn tail(&self, g: &Graph, e: usize) -> Option<usize> {
        let (u, v) = g.edge(e);
        match self.state[e] {
            EdgeState::Unoriented => None,
            EdgeState::Forward => Some(u),
            EdgeState::Backward => Some(v),
        }
    }

    pub fn outdeg(&self, v: usize) -> usize {
        self.outdeg[v]
    }

    pub fn potential(&self, v: usize) -> usize {
        self.potential[v]
    }

    pub fn oriented_count(&self) -> usize {
        self.oriented
    }

    pub fn unoriented_at(&self, g: &Graph, v: usize) -> usize {
        g.incident(v).iter().filter(|&&(_, e)| !self.is_oriented(e)).count()
    }

    pub fn is_vertex_oriented(&self, g: &Graph, v: usize) -> bool {
        self.potential[v] == self.outdeg[v] && self.unoriented_at(g, v) == 0
    }

    /// Orients an unoriented edge out of `tail`.
    ///
    /// Panics if the edge is already oriented or `tail` is not an endpoint.
    pub fn orient(&mut self, g: &Graph, e: usize, tail: usize) {
        assert_eq!(self.state[e], EdgeState::Unoriented, "edge {e} oriented twice");
        let (u, v) = g.edge(e);
        let head = if tail == u {
            self.state[e] = EdgeState::Forward;
            v
        } else {
            assert_eq!(tail, v, "vertex {tail} is not an endpoint of edge {e}");
            self.state[e] = EdgeState::Backward;
            u
        };
        self.outdeg[tail] += 1;
        self.potential[head] -= 1;
        self.oriented += 1;
    }

    /// The completed orientation, or `None` while edges remain unoriented.
    pub fn to_orientation(&self) -> Option<Orientation> {
        self.state
            .iter()
            .map(|s| match s {
                EdgeState::Unoriented => None,
                EdgeState::Forward => Some(true),
                EdgeState::Backward => Some(false),
            })
            .collect::<Option<Vec<_>>>()
            .map(Orientation::from_forward)
    }
}

/// Outcome of [`verify_proper`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperReport {
    pub is_proper: bool,
    pub max_outdeg: usize,
    /// Edges `(u, v)` whose endpoints share an out-degree.
    pub violations: Vec<(usize, usize)>,
    pub outdeg: Vec<usize>,
    /// `Some(max_outdeg <= bound)` when a bound was supplied.
    pub within_bound: Option<bool>,
}

/// Checks that adjacent vertices receive distinct out-degrees.
pub fn verify_proper(g: &Graph, o: &Orientation, bound: Option<usize>) -> Result<ProperReport, GraphError> {
    if o.len() != g.edge_count() {
        return Err(GraphError::OrientationSize { expected: g.edge_count(), got: o.len() });
    }
    let outdeg = o.out_degrees(g);
    let violations: Vec<_> = g.edges().iter().copied().filter(|&(u, v)| outdeg[u] == outdeg[v]).collect();
    let max_outdeg = outdeg.iter().copied().max().unwrap_or(0);
    Ok(ProperReport {
        is_proper: violations.is_empty(),
        max_outdeg,
        violations,
        within_bound: bound.map(|b| max_outdeg <= b),
        outdeg,
    })
}

/// Proper coloring with at most `colors` colors by backtracking, or `None`.
/// Colors are tried in ascending order on vertices in index order.
pub fn find_coloring_small(g: &Graph, colors: usize, cap: usize) -> Result<Option<Vec<usize>>, GraphError> {
    if g.vertex_count() > cap {
        return Err(GraphError::CapExceeded { n: g.vertex_count(), cap });
    }
    fn go(g: &Graph, v: usize, colors: usize, col: &mut Vec<usize>) -> bool {
        if v == g.vertex_count() {
            return true;
        }
        // symmetry: vertex v may open at most one new color
        let used = col[..v].iter().copied().max().map_or(0, |m| m + 1);
        for c in 0..colors.min(used + 1) {
            if g.neighbors(v).filter(|&u| u < v).all(|u| col[u] != c) {
                col[v] = c;
                if go(g, v + 1, colors, col) {
                    return true;
                }
            }
        }
        false
    }
    let mut col = vec![0; g.vertex_count()];
    Ok(go(g, 0, colors, &mut col).then_some(col))
}

/// Default vertex cap for [`find_tripartition_small`].
pub const TRIPARTITION_CAP: usize = 25;

/// A proper 3-partition found by exhaustive backtracking, or `None` if the
/// graph is not 3-colorable. Parts may be empty.
pub fn find_tripartition_small(g: &Graph, cap: usize) -> Result<Option<Partition>, GraphError> {
    Ok(find_coloring_small(g, 3, cap)?.map(|c| Partition::new(3, c).expect("colors are below 3")))
}

//! Exact integer maximum flow (Dinic) with a minimum-cut certificate, and
//! the prescribed out-degree orientation test built on it.

use std::collections::VecDeque;

use crate::error::FlowError;
use crate::graph::{Graph, Orientation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub capacity: u64,
}

#[derive(Debug, Clone)]
pub struct FlowNetwork {
    nodes: usize,
    source: usize,
    sink: usize,
    arcs: Vec<Arc>,
}

impl FlowNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> Self {
        FlowNetwork { nodes, source, sink, arcs: Vec::new() }
    }

    /// Appends an arc and returns its index.
    pub fn add_arc(&mut self, from: usize, to: usize, capacity: u64) -> usize {
        self.arcs.push(Arc { from, to, capacity });
        self.arcs.len() - 1
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    fn validate(&self) -> Result<(), FlowError> {
        for node in [self.source, self.sink] {
            if node >= self.nodes {
                return Err(FlowError::NodeOutOfRange { node, nodes: self.nodes });
            }
        }
        if self.source == self.sink {
            return Err(FlowError::SourceIsSink);
        }
        for a in &self.arcs {
            for node in [a.from, a.to] {
                if node >= self.nodes {
                    return Err(FlowError::NodeOutOfRange { node, nodes: self.nodes });
                }
            }
            if a.from == self.sink || a.to == self.source {
                return Err(FlowError::TerminalArc { from: a.from, to: a.to });
            }
        }
        Ok(())
    }
}

/// Source side of a minimum cut and its capacity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutCertificate {
    pub source_side: Vec<bool>,
    pub capacity: u64,
}

impl CutCertificate {
    /// Capacity of the arcs crossing from the source side, recomputed.
    pub fn recount(&self, net: &FlowNetwork) -> u64 {
        net.arcs
            .iter()
            .filter(|a| self.source_side[a.from] && !self.source_side[a.to])
            .map(|a| a.capacity)
            .sum()
    }
}

#[derive(Debug, Clone)]
pub struct MaxFlow {
    pub value: u64,
    /// Flow on each arc, indexed like [`FlowNetwork::arcs`].
    pub flow: Vec<u64>,
    pub cut: CutCertificate,
}

struct Residual {
    head: Vec<usize>,
    cap: Vec<u64>,
    adj: Vec<Vec<usize>>,
    level: Vec<i64>,
    cursor: Vec<usize>,
}

impl Residual {
    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &r in &self.adj[x] {
                let y = self.head[r];
                if self.cap[r] > 0 && self.level[y] < 0 {
                    self.level[y] = self.level[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, x: usize, t: usize, limit: u64) -> u64 {
        if x == t {
            return limit;
        }
        while self.cursor[x] < self.adj[x].len() {
            let r = self.adj[x][self.cursor[x]];
            let y = self.head[r];
            if self.cap[r] > 0 && self.level[y] == self.level[x] + 1 {
                let pushed = self.dfs(y, t, limit.min(self.cap[r]));
                if pushed > 0 {
                    self.cap[r] -= pushed;
                    self.cap[r ^ 1] += pushed;
                    return pushed;
                }
            }
            self.cursor[x] += 1;
        }
        0
    }
}

/// Maximum flow from source to sink with a minimum cut whose capacity equals
/// the flow value.
pub fn max_flow(net: &FlowNetwork) -> Result<MaxFlow, FlowError> {
    net.validate()?;
    let mut res = Residual {
        head: Vec::with_capacity(2 * net.arcs.len()),
        cap: Vec::with_capacity(2 * net.arcs.len()),
        adj: vec![Vec::new(); net.nodes],
        level: vec![-1; net.nodes],
        cursor: vec![0; net.nodes],
    };
    for a in &net.arcs {
        res.adj[a.from].push(res.head.len());
        res.head.push(a.to);
        res.cap.push(a.capacity);
        res.adj[a.to].push(res.head.len());
        res.head.push(a.from);
        res.cap.push(0);
    }
    let mut value = 0u64;
    while res.bfs(net.source, net.sink) {
        res.cursor.iter_mut().for_each(|c| *c = 0);
        loop {
            let pushed = res.dfs(net.source, net.sink, u64::MAX);
            if pushed == 0 {
                break;
            }
            value += pushed;
        }
    }
    // after the final BFS, level >= 0 marks the residual-reachable side
    let source_side: Vec<bool> = res.level.iter().map(|&l| l >= 0).collect();
    let flow = net.arcs.iter().enumerate().map(|(i, a)| a.capacity - res.cap[2 * i]).collect();
    let mut cut = CutCertificate { source_side, capacity: 0 };
    cut.capacity = cut.recount(net);
    debug_assert_eq!(cut.capacity, value);
    Ok(MaxFlow { value, flow, cut })
}

/// Orientation with out-degree exactly `target[v]` at every vertex, or
/// `None` if no such orientation exists.
///
/// Each edge is a node fed one unit from the source and passes it to one of
/// its endpoints; endpoint `v` drains at most `target[v]` into the sink. The
/// endpoint receiving an edge's unit becomes its tail.
pub fn prescribed_outdegree_orientation(g: &Graph, target: &[usize]) -> Result<Option<Orientation>, FlowError> {
    if target.len() != g.vertex_count() {
        return Err(FlowError::TargetLength { expected: g.vertex_count(), got: target.len() });
    }
    for (v, &t) in target.iter().enumerate() {
        if t > g.degree(v) {
            return Err(FlowError::TargetOutOfRange { vertex: v, target: t, degree: g.degree(v) });
        }
    }
    let m = g.edge_count();
    if target.iter().sum::<usize>() != m {
        return Ok(None);
    }
    let n = g.vertex_count();
    let (s, t) = (0, 1);
    let edge_node = |e: usize| 2 + e;
    let vertex_node = |v: usize| 2 + m + v;
    let mut net = FlowNetwork::new(2 + m + n, s, t);
    let mut to_tail = Vec::with_capacity(m);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        net.add_arc(s, edge_node(e), 1);
        let fwd = net.add_arc(edge_node(e), vertex_node(u), 1);
        net.add_arc(edge_node(e), vertex_node(v), 1);
        to_tail.push(fwd);
    }
    for (v, &cap) in target.iter().enumerate() {
        net.add_arc(vertex_node(v), t, cap as u64);
    }
    let result = max_flow(&net)?;
    if result.value != m as u64 {
        return Ok(None);
    }
    let forward = to_tail.iter().map(|&a| result.flow[a] == 1).collect();
    Ok(Some(Orientation::from_forward(forward)))
}

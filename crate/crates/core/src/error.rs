use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {vertex}")]
    Loop { vertex: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {vertex} assigned to part {part}, but only {r} parts exist")]
    PartOutOfRange { vertex: usize, part: usize, r: usize },
    #[error("partition covers {got} vertices, graph has {expected}")]
    PartitionSize { expected: usize, got: usize },
    #[error("edge {u}-{v} lies inside part {part}")]
    EdgeInsidePart { u: usize, v: usize, part: usize },
    #[error("arc {tail}->{head} is not an edge of the graph")]
    ArcNotInGraph { tail: usize, head: usize },
    #[error("edge {tail}-{head} oriented more than once")]
    DuplicateArc { tail: usize, head: usize },
    #[error("edge {u}-{v} is not oriented")]
    EdgeNotOriented { u: usize, v: usize },
    #[error("orientation has {got} arcs, graph has {expected} edges")]
    OrientationSize { expected: usize, got: usize },
    #[error("{n} vertices exceeds the search cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
}

/// Text-format error tagged with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("missing header")]
    MissingHeader,
    #[error("expected {expected} {what} lines, found {got}")]
    Count { what: &'static str, expected: usize, got: usize },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("part {part} out of range 1..={r}")]
    PartOutOfRange { part: usize, r: usize },
    #[error("vertex {0} has more than one part line")]
    DuplicatePart(usize),
    #[error("vertex {0} has no part line")]
    MissingPart(usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {u}-{v} lies inside part {part}")]
    EdgeInsidePart { u: usize, v: usize, part: usize },
    #[error("{0}")]
    Orientation(GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlowError {
    #[error("node {node} out of range ({nodes} nodes)")]
    NodeOutOfRange { node: usize, nodes: usize },
    #[error("source and sink coincide")]
    SourceIsSink,
    #[error("arc {from}->{to} leaves the sink or enters the source")]
    TerminalArc { from: usize, to: usize },
    #[error("target {target} at vertex {vertex} exceeds its degree {degree}")]
    TargetOutOfRange { vertex: usize, target: usize, degree: usize },
    #[error("target vector has {got} entries, graph has {expected} vertices")]
    TargetLength { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndSetError {
    #[error("edge {u}-{v} inside one side of the bipartite candidate set")]
    NotBipartite { u: usize, v: usize },
    #[error("candidate component of {size} vertices exceeds the cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("objective tier {tier} has {got} entries, graph has {expected} vertices")]
    TierLength { tier: usize, expected: usize, got: usize },
    #[error("lexicographic encoding overflows")]
    Overflow,
}

//! Proper orientations of 3-partite graphs with `Δ⁺ <= ⌈Mad/2⌉ + 7`.
//!
//! Each connected component is handled on its own: vertices are frozen at
//! out-degree levels `k+7, ..., k+2` by six selection steps, then a greedy
//! phase orients what is left. Every intermediate claim the construction
//! relies on is checked as it happens and recorded in a [`StepTrace`].

mod state;
mod trace;

pub use state::{LevelSets, PipelineState, StepFailure, Violation, HIGHEST, LOWEST};
pub use trace::{AssertionRecord, ComponentTrace, StepRecord, StepTrace};

use thiserror::Error;

use crate::error::{GraphError, IndSetError};
use crate::graph::{verify_proper, Graph, Orientation, Partition};
use crate::indset::DEFAULT_CAP;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Orient3Config {
    /// Component cap handed to the independent-set search.
    pub cap: usize,
}

impl Default for Orient3Config {
    fn default() -> Self {
        Orient3Config { cap: DEFAULT_CAP }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Orient3Error {
    #[error("invalid partition: {0}")]
    Partition(GraphError),
    #[error("vertex {vertex} lies in part {part}; at most 3 parts are supported")]
    NotTripartite { vertex: usize, part: usize },
    #[error("assertion {id} failed: {detail}")]
    Assertion { id: String, detail: String, trace: Box<StepTrace> },
    #[error("independent-set search failed: {source}")]
    IndSet { source: IndSetError, trace: Box<StepTrace> },
}

impl Orient3Error {
    /// The trace up to the failure, when one exists.
    pub fn trace(&self) -> Option<&StepTrace> {
        match self {
            Orient3Error::Assertion { trace, .. } | Orient3Error::IndSet { trace, .. } => Some(trace),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orient3Result {
    pub orientation: Orientation,
    pub trace: StepTrace,
    /// Largest per-component `⌈Mad/2⌉`, which equals `⌈Mad(G)/2⌉`.
    pub k: usize,
    pub max_outdeg: usize,
}

/// Orients `g` properly with maximum out-degree at most `⌈Mad(G)/2⌉ + 7`.
///
/// `p` may use fewer than three parts.
pub fn orient3(g: &Graph, p: &Partition, cfg: &Orient3Config) -> Result<Orient3Result, Orient3Error> {
    p.validate(g).map_err(Orient3Error::Partition)?;
    if let Some(v) = (0..g.vertex_count()).find(|&v| p.part_of(v) >= 3) {
        return Err(Orient3Error::NotTripartite { vertex: v, part: p.part_of(v) });
    }
    let p = p.widen(3);
    let mut forward = vec![false; g.edge_count()];
    let mut trace = StepTrace::default();
    for comp in g.components() {
        let (sub, names) = g.induced_subgraph(&comp);
        let sub_p = p.restrict(&names);
        let mut state = PipelineState::new(&sub, &sub_p, cfg.cap)?.with_names(names.clone());
        let outcome = state.run_all();
        trace.k = trace.k.max(state.k());
        trace.components.push(state.into_trace());
        let o = match outcome {
            Ok(o) => o,
            Err(fail) => {
                trace.bound = trace.k + HIGHEST;
                let trace = Box::new(trace);
                return Err(match fail {
                    StepFailure::Violation(v) => Orient3Error::Assertion { id: v.id, detail: v.detail, trace },
                    StepFailure::IndSet(source) => Orient3Error::IndSet { source, trace },
                });
            }
        };
        for (e, &(u, v)) in sub.edges().iter().enumerate() {
            let id = g.edge_id(names[u], names[v]).expect("induced edge");
            // names is increasing, so u < v is preserved
            forward[id] = o.tail(&sub, e) == u;
        }
    }
    let orientation = Orientation::from_forward(forward);
    let k = trace.k;
    let report = verify_proper(g, &orientation, Some(k + HIGHEST)).expect("orientation covers the graph");
    trace.bound = k + HIGHEST;
    trace.max_outdeg = report.max_outdeg;
    trace.proper = report.is_proper;
    if !report.is_proper || report.within_bound != Some(true) {
        let detail = format!("proper={} Δ+={} bound={}", report.is_proper, report.max_outdeg, k + HIGHEST);
        return Err(Orient3Error::Assertion { id: "final".into(), detail, trace: Box::new(trace) });
    }
    Ok(Orient3Result { orientation, trace, k, max_outdeg: report.max_outdeg })
}

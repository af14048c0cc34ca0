use std::fmt::{self, Write};

/// One selection step. Vertex ids are those of the input graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StepRecord {
    pub step: usize,
    /// Offset `i` of the level `k + i`.
    pub offset: usize,
    pub level: usize,
    pub candidates: Vec<usize>,
    pub chosen: Vec<usize>,
    pub rejected: Vec<usize>,
    /// Rejected vertices rescued by a matching.
    pub rescued: Vec<usize>,
    /// Matching arcs `(tail, head)`.
    pub matching: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssertionRecord {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ComponentTrace {
    pub vertices: Vec<usize>,
    pub edges: usize,
    pub k: usize,
    pub steps: Vec<StepRecord>,
    pub assertions: Vec<AssertionRecord>,
    /// Vertices oriented by the greedy phase, in selection order.
    pub greedy_order: Vec<usize>,
}

/// Full record of an `orient3` run.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StepTrace {
    pub components: Vec<ComponentTrace>,
    pub k: usize,
    pub bound: usize,
    pub max_outdeg: usize,
    pub proper: bool,
}

impl StepTrace {
    pub fn assertions(&self) -> impl Iterator<Item = &AssertionRecord> {
        self.components.iter().flat_map(|c| c.assertions.iter())
    }

    pub fn all_passed(&self) -> bool {
        self.assertions().all(|a| a.passed)
    }
}

struct Ids<'a>(&'a [usize]);

impl fmt::Display for Ids<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char('[')?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_char(' ')?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_char(']')
    }
}

impl fmt::Display for StepTrace {
    /// Line-oriented rendering; vertices are 1-based. Assertion lines read
    /// `ASSERT <id> PASS|FAIL <detail>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (ci, c) in self.components.iter().enumerate() {
            writeln!(f, "COMPONENT {} n={} m={} k={}", ci + 1, c.vertices.len(), c.edges, c.k)?;
            for s in &c.steps {
                writeln!(
                    f,
                    "STEP {} level=k+{}={} U={} A={} X={}",
                    s.step,
                    s.offset,
                    s.level,
                    Ids(&s.candidates),
                    Ids(&s.chosen),
                    Ids(&s.rejected)
                )?;
                if !s.rescued.is_empty() || !s.matching.is_empty() {
                    write!(f, "MATCH {} X'={} M=[", s.step, Ids(&s.rescued))?;
                    for (i, (t, h)) in s.matching.iter().enumerate() {
                        if i > 0 {
                            f.write_char(' ')?;
                        }
                        write!(f, "{}>{}", t + 1, h + 1)?;
                    }
                    writeln!(f, "]")?;
                }
            }
            writeln!(f, "GREEDY order={}", Ids(&c.greedy_order))?;
            for a in &c.assertions {
                writeln!(f, "ASSERT {} {} {}", a.id, if a.passed { "PASS" } else { "FAIL" }, a.detail)?;
            }
        }
        writeln!(f, "RESULT k={} bound={} max_outdeg={} proper={}", self.k, self.bound, self.max_outdeg, self.proper)
    }
}

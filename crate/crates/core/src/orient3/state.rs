use std::cmp::Reverse;
use std::collections::BTreeSet;

use super::trace::{AssertionRecord, ComponentTrace, StepRecord};
use super::Orient3Error;
use crate::density::ceil_half_mad;
use crate::graph::{verify_proper, Graph, Orientation, PartialOrientation, Partition};
use crate::hakimi::{orient_bounded, BoundedOrientation};
use crate::hallmatch::{self, BipartiteInstance, HallOutcome};
use crate::error::IndSetError;
use crate::indset::{lex_mwis, mis_bipartite, LexObjective};

/// Levels are `k + i` for `i` in `LOWEST..=HIGHEST`.
pub const LOWEST: usize = 2;
pub const HIGHEST: usize = 7;

/// A failed runtime check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub id: String,
    pub detail: String,
}

/// Independent sets frozen at each level, indexed by offset `i`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LevelSets {
    sets: [Vec<usize>; HIGHEST - LOWEST + 1],
}

impl LevelSets {
    pub fn at(&self, offset: usize) -> &[usize] {
        &self.sets[offset - LOWEST]
    }

    fn push(&mut self, offset: usize, v: usize) {
        self.sets[offset - LOWEST].push(v);
    }
}

/// Working state of the six-step construction on one graph.
///
/// Parts are `0, 1, 2` here for `V1, V2, V3`. `D0` is fixed at construction
/// and every out-edge of a vertex outside all level sets stays a `D0` arc.
pub struct PipelineState<'a> {
    g: &'a Graph,
    names: Vec<usize>,
    part: Vec<usize>,
    k: usize,
    d0_tail: Vec<usize>,
    po: PartialOrientation,
    offset_of: Vec<Option<usize>>,
    levels: LevelSets,
    cap: usize,
    trace: ComponentTrace,
}

/// Why a step stopped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepFailure {
    Violation(Violation),
    IndSet(IndSetError),
}

impl From<Violation> for StepFailure {
    fn from(v: Violation) -> Self {
        StepFailure::Violation(v)
    }
}

type Check = Result<(), Violation>;

impl<'a> PipelineState<'a> {
    /// Computes `k = ⌈Mad/2⌉` and the reference orientation `D0`.
    pub fn new(g: &'a Graph, p: &Partition, cap: usize) -> Result<Self, Orient3Error> {
        p.validate(g).map_err(Orient3Error::Partition)?;
        if let Some(v) = (0..g.vertex_count()).find(|&v| p.part_of(v) >= 3) {
            return Err(Orient3Error::NotTripartite { vertex: v, part: p.part_of(v) });
        }
        let k = ceil_half_mad(g);
        let d0 = match orient_bounded(g, k) {
            BoundedOrientation::Feasible(o) => o,
            BoundedOrientation::Infeasible(_) => unreachable!("k is feasible by construction"),
        };
        let d0_tail = (0..g.edge_count()).map(|e| d0.tail(g, e)).collect();
        Ok(PipelineState {
            g,
            names: (0..g.vertex_count()).collect(),
            part: p.as_slice().to_vec(),
            k,
            d0_tail,
            po: PartialOrientation::new(g),
            offset_of: vec![None; g.vertex_count()],
            levels: LevelSets::default(),
            cap,
            trace: ComponentTrace {
                vertices: (0..g.vertex_count()).collect(),
                edges: g.edge_count(),
                k,
                ..ComponentTrace::default()
            },
        })
    }

    /// Reports vertices under `names` (e.g. ids in an enclosing graph).
    pub fn with_names(mut self, names: Vec<usize>) -> Self {
        assert_eq!(names.len(), self.g.vertex_count());
        self.trace.vertices = names.clone();
        self.names = names;
        self
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn potential(&self, v: usize) -> usize {
        self.po.potential(v)
    }

    pub fn outdeg(&self, v: usize) -> usize {
        self.po.outdeg(v)
    }

    pub fn partial(&self) -> &PartialOrientation {
        &self.po
    }

    pub fn levels(&self) -> &LevelSets {
        &self.levels
    }

    /// Offset `i` of the level set containing `v`, if any.
    pub fn offset_of(&self, v: usize) -> Option<usize> {
        self.offset_of[v]
    }

    pub fn d0_tail(&self, e: usize) -> usize {
        self.d0_tail[e]
    }

    pub fn trace(&self) -> &ComponentTrace {
        &self.trace
    }

    pub fn into_trace(self) -> ComponentTrace {
        self.trace
    }

    fn name(&self, v: usize) -> usize {
        self.names[v] + 1
    }

    fn record(&mut self, id: String, outcome: Result<String, String>) -> Check {
        let passed = outcome.is_ok();
        let detail = match outcome {
            Ok(d) | Err(d) => d,
        };
        self.trace.assertions.push(AssertionRecord { id: id.clone(), passed, detail: detail.clone() });
        if passed {
            Ok(())
        } else {
            Err(Violation { id, detail })
        }
    }

    /// Asserts `pred` on every listed vertex.
    fn check_all(
        &mut self,
        id: impl Into<String>,
        items: impl IntoIterator<Item = usize>,
        pred: impl Fn(&Self, usize) -> bool,
        describe: impl Fn(&Self, usize) -> String,
    ) -> Check {
        let mut count = 0;
        let mut outcome = Ok(());
        for v in items {
            count += 1;
            if !pred(self, v) {
                outcome = Err(describe(self, v));
                break;
            }
        }
        let outcome = outcome.map(|_| format!("checked {count}"));
        self.record(id.into(), outcome)
    }

    fn unassigned(&self) -> Vec<usize> {
        (0..self.g.vertex_count()).filter(|&v| self.offset_of[v].is_none()).collect()
    }

    fn in_part(&self, v: usize, parts: &[usize]) -> bool {
        parts.contains(&self.part[v])
    }

    fn orient_d0_out(&mut self, v: usize) {
        for &(_, e) in self.g.incident(v) {
            if !self.po.is_oriented(e) && self.d0_tail[e] == v {
                self.po.orient(self.g, e, v);
            }
        }
    }

    fn orient_all_out(&mut self, v: usize) {
        for &(_, e) in self.g.incident(v) {
            if !self.po.is_oriented(e) {
                self.po.orient(self.g, e, v);
            }
        }
    }

    fn freeze(&mut self, v: usize, offset: usize) {
        self.offset_of[v] = Some(offset);
        self.levels.push(offset, v);
    }

    fn check_independent(&mut self, id: String, set: &[usize]) -> Check {
        let bad = set.iter().find_map(|&v| self.g.neighbors(v).find(|u| set.binary_search(u).is_ok()).map(|u| (v, u)));
        let outcome = match bad {
            None => Ok(format!("|A|={}", set.len())),
            Some((v, u)) => Err(format!("{} and {} adjacent", self.name(v), self.name(u))),
        };
        self.record(id, outcome)
    }

    /// Orients the unoriented edges at `v` so that its out-degree becomes
    /// exactly `target`: out-edges go to the lowest-indexed neighbors first,
    /// the rest point into `v`.
    pub fn finalize_vertex(&mut self, v: usize, target: usize) -> Check {
        let need = target.checked_sub(self.po.outdeg(v));
        let ok = need.is_some() && self.po.potential(v) >= target;
        if !ok {
            let detail = format!(
                "vertex {}: target {} outside [d_p^+={}, d_p={}]",
                self.name(v),
                target,
                self.po.outdeg(v),
                self.po.potential(v)
            );
            return self.record("finalize".into(), Err(detail));
        }
        let mut need = need.unwrap();
        for &(u, e) in self.g.incident(v) {
            if self.po.is_oriented(e) {
                continue;
            }
            if need > 0 {
                self.po.orient(self.g, e, v);
                need -= 1;
            } else {
                self.po.orient(self.g, e, u);
            }
        }
        debug_assert_eq!(self.po.outdeg(v), target);
        Ok(())
    }

    /// Out-edges at vertices outside every level set are `D0` arcs, so those
    /// vertices have `d_p^+ <= k`.
    fn check_d0_invariant(&mut self, id: String) -> Check {
        let g = self.g;
        let bad = (0..g.vertex_count())
            .filter(|&v| self.offset_of[v].is_none())
            .find(|&v| g.incident(v).iter().any(|&(_, e)| self.po.tail(g, e) == Some(v) && self.d0_tail[e] != v));
        let outcome = match bad {
            None => Ok("all out-edges of unassigned vertices are D0 arcs".to_string()),
            Some(v) => Err(format!("vertex {} has an out-edge outside D0", self.name(v))),
        };
        self.record(id, outcome)
    }

    fn check_unassigned_edges_unoriented(&mut self, id: String) -> Check {
        let g = self.g;
        let bad = g.edges().iter().enumerate().find(|&(e, &(u, v))| {
            self.offset_of[u].is_none() && self.offset_of[v].is_none() && self.po.is_oriented(e)
        });
        let outcome = match bad {
            None => Ok("no oriented edge between unassigned vertices".to_string()),
            Some((_, &(u, v))) => Err(format!("edge {}-{} already oriented", self.name(u), self.name(v))),
        };
        self.record(id, outcome)
    }

    /// Checks the ledger closing `step` (3, 4, 5 or 6).
    fn check_ledger(&mut self, step: usize) -> Check {
        let k = self.k;
        let lowest = 8 - step;
        let assigned: Vec<usize> = (0..self.g.vertex_count()).filter(|&v| self.offset_of[v].is_some()).collect();
        let unassigned = self.unassigned();
        self.check_all(
            format!("{step}.1"),
            assigned.iter().copied(),
            |s, v| s.po.is_vertex_oriented(s.g, v),
            |s, v| format!("vertex {} not fully oriented", s.name(v)),
        )?;
        self.check_all(
            format!("{step}.2"),
            assigned.iter().copied(),
            |s, v| s.po.outdeg(v) == k + s.offset_of[v].unwrap() && s.offset_of[v].unwrap() >= lowest,
            |s, v| format!("vertex {} in A_k+{} has d_p^+={}", s.name(v), s.offset_of[v].unwrap(), s.po.outdeg(v)),
        )?;
        let bound = move |part: usize| -> usize {
            match step {
                3 => k + 7 - (part + 1),
                4 => k + if part == 1 { 5 } else { 3 },
                5 => k + if part == 1 { 3 } else { 2 },
                _ => k + 1,
            }
        };
        self.check_all(
            format!("{step}.3"),
            unassigned.iter().copied(),
            |s, v| s.po.potential(v) <= bound(s.part[v]),
            |s, v| {
                format!(
                    "vertex {} in V{} has d_p={} > {}",
                    s.name(v),
                    s.part[v] + 1,
                    s.po.potential(v),
                    bound(s.part[v])
                )
            },
        )?;
        // step 6 has no D0 item, so its last two items shift down by one
        let mut next = 4;
        if step < 6 {
            self.check_d0_invariant(format!("{step}.4"))?;
            next = 5;
        }
        self.check_all(
            format!("{step}.{next}"),
            unassigned.iter().copied(),
            |s, v| s.po.outdeg(v) <= k,
            |s, v| format!("vertex {} has d_p^+={} > k", s.name(v), s.po.outdeg(v)),
        )?;
        self.check_unassigned_edges_unoriented(format!("{step}.{}", next + 1))
    }

    /// Steps 1-3: level `k + offset` with priority part `priority` (0-based).
    ///
    /// Every candidate of the priority part is taken (a part is independent);
    /// the remaining candidates not adjacent to them lie in the other two
    /// parts and are completed by a maximum bipartite independent set.
    pub fn step_simple(&mut self, offset: usize, priority: usize) -> Check {
        let step = HIGHEST + 1 - offset;
        let level = self.k + offset;
        let g = self.g;
        let candidates: Vec<usize> = self.unassigned().into_iter().filter(|&v| self.po.potential(v) >= level).collect();
        let forced: Vec<usize> = candidates.iter().copied().filter(|&v| self.part[v] == priority).collect();
        let mut blocked = vec![false; g.vertex_count()];
        for &v in &forced {
            for u in g.neighbors(v) {
                blocked[u] = true;
            }
        }
        let others: Vec<usize> = (0..3).filter(|&p| p != priority).collect();
        let side = |p: usize| -> Vec<usize> {
            candidates.iter().copied().filter(|&v| self.part[v] == p && !blocked[v]).collect()
        };
        let (side_a, side_b) = (side(others[0]), side(others[1]));
        let extra = mis_bipartite(g, &side_a, &side_b).expect("parts are independent");
        let mut chosen: Vec<usize> = forced.iter().copied().chain(extra).collect();
        chosen.sort_unstable();
        self.check_independent(format!("S{step}.indep"), &chosen)?;

        // (O.i.1) keep D0 out-arcs
        for &v in &chosen {
            self.orient_d0_out(v);
        }
        let k = self.k;
        self.check_all(
            format!("O.{step}.1"),
            chosen.iter().copied(),
            |s, v| s.po.outdeg(v) <= k,
            |s, v| format!("vertex {} has d_p^+={} > k after D0 arcs", s.name(v), s.po.outdeg(v)),
        )?;
        // (O.i.2)
        for &v in &chosen {
            self.finalize_vertex(v, level)?;
            self.freeze(v, offset);
        }
        self.check_all(
            format!("O.{step}.2"),
            chosen.iter().copied(),
            |s, v| s.po.is_vertex_oriented(s.g, v) && s.po.outdeg(v) == level,
            |s, v| format!("vertex {} ends at d_p^+={}", s.name(v), s.po.outdeg(v)),
        )?;
        let rest: Vec<usize> = self.unassigned().into_iter().filter(|&v| self.part[v] == priority).collect();
        self.check_all(
            format!("S{step}.post"),
            rest,
            |s, v| s.po.potential(v) < level,
            |s, v| format!("vertex {} in V{} keeps d_p={}", s.name(v), priority + 1, s.po.potential(v)),
        )?;
        self.check_d0_invariant(format!("S{step}.d0"))?;

        let rejected = candidates.iter().copied().filter(|v| chosen.binary_search(v).is_err()).collect();
        self.push_step(StepRecord { step, offset, level, candidates, chosen, rejected, ..StepRecord::default() });
        if step == 3 {
            self.check_ledger(3)?;
        }
        Ok(())
    }

    fn push_step(&mut self, mut rec: StepRecord) {
        let rename = |xs: &mut Vec<usize>, names: &[usize]| xs.iter_mut().for_each(|v| *v = names[*v]);
        rename(&mut rec.candidates, &self.names);
        rename(&mut rec.chosen, &self.names);
        rename(&mut rec.rejected, &self.names);
        rename(&mut rec.rescued, &self.names);
        rec.matching.iter_mut().for_each(|(t, h)| {
            *t = self.names[*t];
            *h = self.names[*h];
        });
        self.trace.steps.push(rec);
    }

    fn lex_choice(&mut self, candidates: &[usize], tiers: Vec<Vec<u64>>) -> Result<Vec<usize>, StepFailure> {
        lex_mwis(self.g, candidates, &LexObjective { tiers }, self.cap)
            .map(|r| r.set)
            .map_err(StepFailure::IndSet)
    }

    /// Builds the Hall instance between `rescue` (each needs one in-edge) and
    /// `donors` with capacities `weight`, and returns the matching arcs.
    fn rescue_matching(&mut self, id: String, rescue: &[usize], donors: &[usize], weight: &[u64]) -> Result<Vec<(usize, usize)>, Violation> {
        let mut edges = Vec::new();
        for (i, &x) in rescue.iter().enumerate() {
            for (j, &a) in donors.iter().enumerate() {
                if self.g.has_edge(x, a) {
                    edges.push((i, j));
                }
            }
        }
        let inst = BipartiteInstance::new(rescue.len(), weight.to_vec(), edges);
        match hallmatch::solve(&inst) {
            HallOutcome::Matching(m) => {
                let arcs: Vec<(usize, usize)> = m.edges().map(|(i, j)| (donors[j], rescue[i])).collect();
                self.record(id, Ok(format!("|M|={}", arcs.len())))?;
                Ok(arcs)
            }
            HallOutcome::Violation(c) => {
                let names: Vec<String> = c.subset.iter().map(|&i| self.name(rescue[i]).to_string()).collect();
                let detail = format!("Hall violated by S=[{}]", names.join(" "));
                Err(self.record(id, Err(detail)).unwrap_err())
            }
        }
    }

    /// Step 4: weighted choice at level `k + 4` with a capacitated rescue matching.
    pub fn step_weighted(&mut self) -> Result<(), StepFailure> {
        let (k, g) = (self.k, self.g);
        let level = k + 4;
        let n = g.vertex_count();
        let candidates: Vec<usize> = self
            .unassigned()
            .into_iter()
            .filter(|&v| {
                let d = self.po.potential(v);
                if self.part[v] == 0 {
                    d >= level
                } else {
                    d == level
                }
            })
            .collect();
        let mut w = vec![0u64; n];
        let mut in_v1 = vec![0u64; n];
        let mut one = vec![0u64; n];
        for &v in &candidates {
            w[v] = if self.part[v] == 0 { (self.po.potential(v) - level) as u64 } else { 1 };
            in_v1[v] = u64::from(self.part[v] == 0);
            one[v] = 1;
        }
        let chosen = self.lex_choice(&candidates, vec![w.clone(), in_v1, one])?;
        self.check_independent("S4.indep".into(), &chosen)?;
        let is_chosen = |v: usize| chosen.binary_search(&v).is_ok();
        let rejected: Vec<usize> = candidates.iter().copied().filter(|&v| !is_chosen(v)).collect();

        let count_chosen_nbrs = |s: &Self, v: usize, parts: &[usize]| {
            s.g.neighbors(v).filter(|&u| is_chosen(u) && s.in_part(u, parts)).count()
        };
        let rejected_1: Vec<usize> = rejected.iter().copied().filter(|&v| self.part[v] == 0).collect();
        self.check_all(
            "S4.exch",
            rejected_1,
            |s, v| count_chosen_nbrs(s, v, &[1, 2]) as u64 > w[v],
            |s, v| format!("vertex {} has {} chosen neighbors in V2∪V3, w={}", s.name(v), count_chosen_nbrs(s, v, &[1, 2]), w[v]),
        )?;

        // (O.4.1)
        let chosen_23: Vec<usize> = chosen.iter().copied().filter(|&v| self.part[v] != 0).collect();
        for &v in &chosen_23 {
            self.orient_all_out(v);
            self.freeze(v, 4);
        }
        self.check_all(
            "O.4.1",
            chosen_23.iter().copied(),
            |s, v| s.po.is_vertex_oriented(s.g, v) && s.po.outdeg(v) == level,
            |s, v| format!("vertex {} ends at d_p^+={}", s.name(v), s.po.outdeg(v)),
        )?;
        let v1_rest: Vec<usize> = self.unassigned().into_iter().filter(|&v| self.part[v] == 0 && !is_chosen(v)).collect();
        self.check_all(
            "S4.v1",
            v1_rest,
            |s, v| s.po.potential(v) <= k + 3,
            |s, v| format!("vertex {} in V1 keeps d_p={}", s.name(v), s.po.potential(v)),
        )?;

        let rescue: Vec<usize> =
            rejected.iter().copied().filter(|&v| self.part[v] == 2 && self.po.potential(v) == level).collect();
        self.check_all(
            "S4.xprime",
            rescue.iter().copied(),
            |s, v| count_chosen_nbrs(s, v, &[1]) == 0,
            |s, v| format!("vertex {} in X' has a chosen V2 neighbor", s.name(v)),
        )?;
        let chosen_1: Vec<usize> = chosen.iter().copied().filter(|&v| self.part[v] == 0).collect();
        let caps: Vec<u64> = chosen_1.iter().map(|&v| w[v]).collect();
        let matching = self.rescue_matching("S4.hall".into(), &rescue, &chosen_1, &caps)?;
        let mut load = vec![0u64; n];
        for &(a, _) in &matching {
            load[a] += 1;
        }
        self.check_all(
            "S4.mdeg",
            chosen_1.iter().copied(),
            |_, v| load[v] <= w[v] && w[v] <= 2,
            |s, v| format!("vertex {} has matching degree {} with w={}", s.name(v), load[v], w[v]),
        )?;

        // (O.4.2)
        for &(a, x) in &matching {
            let e = g.edge_id(a, x).expect("matching uses graph edges");
            self.po.orient(g, e, a);
        }
        for &v in &chosen_1 {
            self.orient_d0_out(v);
        }
        let v3_rest: Vec<usize> = self.unassigned().into_iter().filter(|&v| self.part[v] == 2 && !is_chosen(v)).collect();
        self.check_all(
            "S4.v3",
            v3_rest,
            |s, v| s.po.potential(v) <= k + 3,
            |s, v| format!("vertex {} in V3 keeps d_p={}", s.name(v), s.po.potential(v)),
        )?;
        self.check_all(
            "O.4.2",
            chosen_1.iter().copied(),
            |s, v| s.po.outdeg(v) <= k + 2 && k + 2 < s.po.potential(v),
            |s, v| format!("vertex {}: d_p^+={} d_p={}", s.name(v), s.po.outdeg(v), s.po.potential(v)),
        )?;
        // (O.4.3)
        for &v in &chosen_1 {
            self.finalize_vertex(v, level)?;
            self.freeze(v, 4);
        }
        self.push_step(StepRecord { step: 4, offset: 4, level, candidates, chosen, rejected, rescued: rescue, matching });
        self.check_ledger(4)?;
        Ok(())
    }

    /// Steps 5 (`offset = 3`) and 6 (`offset = 2`): maximum-size choice with
    /// unit-capacity rescue matchings from the chosen `V2` vertices.
    pub fn step_matched(&mut self, offset: usize) -> Result<(), StepFailure> {
        assert!(offset == 2 || offset == 3, "step_matched handles levels k+3 and k+2");
        let step = HIGHEST + 1 - offset;
        let (k, g) = (self.k, self.g);
        let level = k + offset;
        let n = g.vertex_count();
        let candidates: Vec<usize> = self.unassigned().into_iter().filter(|&v| self.po.potential(v) >= level).collect();
        let mut one = vec![0u64; n];
        let mut in_v2 = vec![0u64; n];
        for &v in &candidates {
            one[v] = 1;
            in_v2[v] = u64::from(self.part[v] == 1);
        }
        let chosen = self.lex_choice(&candidates, vec![one, in_v2])?;
        self.check_independent(format!("S{step}.indep"), &chosen)?;
        let is_chosen = |v: usize| chosen.binary_search(&v).is_ok();
        let rejected: Vec<usize> = candidates.iter().copied().filter(|&v| !is_chosen(v)).collect();
        let count_chosen_nbrs = |s: &Self, v: usize, parts: &[usize]| {
            s.g.neighbors(v).filter(|&u| is_chosen(u) && s.in_part(u, parts)).count()
        };
        let rejected_2: Vec<usize> = rejected.iter().copied().filter(|&v| self.part[v] == 1).collect();
        self.check_all(
            format!("S{step}.exch"),
            rejected_2,
            |s, v| count_chosen_nbrs(s, v, &[0, 2]) >= 2,
            |s, v| format!("vertex {} has {} chosen neighbors in V1∪V3", s.name(v), count_chosen_nbrs(s, v, &[0, 2])),
        )?;

        // (O.i.1)
        let chosen_13: Vec<usize> = chosen.iter().copied().filter(|&v| self.part[v] != 1).collect();
        for &v in &chosen_13 {
            self.orient_all_out(v);
            self.freeze(v, offset);
        }
        self.check_all(
            format!("O.{step}.1"),
            chosen_13.iter().copied(),
            |s, v| s.po.is_vertex_oriented(s.g, v) && s.po.outdeg(v) == level,
            |s, v| format!("vertex {} ends at d_p^+={}", s.name(v), s.po.outdeg(v)),
        )?;
        let v2_bound = if step == 5 { k + 3 } else { k + 1 };
        let v2_rest: Vec<usize> = self.unassigned().into_iter().filter(|&v| self.part[v] == 1 && !is_chosen(v)).collect();
        self.check_all(
            format!("S{step}.v2"),
            v2_rest,
            |s, v| s.po.potential(v) <= v2_bound,
            |s, v| format!("vertex {} in V2 keeps d_p={}", s.name(v), s.po.potential(v)),
        )?;

        let chosen_2: Vec<usize> = chosen.iter().copied().filter(|&v| self.part[v] == 1).collect();
        let mut rescued = Vec::new();
        let mut matching = Vec::new();
        for j in [0usize, 2] {
            let rescue: Vec<usize> =
                rejected.iter().copied().filter(|&v| self.part[v] == j && self.po.potential(v) == level).collect();
            let other = 2 - j;
            self.check_all(
                format!("S{step}.xprime{}", j + 1),
                rescue.iter().copied(),
                |s, v| count_chosen_nbrs(s, v, &[other]) == 0,
                |s, v| format!("vertex {} in X' has a chosen V{} neighbor", s.name(v), other + 1),
            )?;
            let caps = vec![1u64; chosen_2.len()];
            let m = self.rescue_matching(format!("S{step}.hall{}", j + 1), &rescue, &chosen_2, &caps)?;
            rescued.extend(rescue);
            matching.extend(m);
        }

        // (O.i.2)
        for &(a, x) in &matching {
            let e = g.edge_id(a, x).expect("matching uses graph edges");
            self.po.orient(g, e, a);
        }
        for &v in &chosen_2 {
            self.orient_d0_out(v);
        }
        let rest_13: Vec<usize> = self.unassigned().into_iter().filter(|&v| self.part[v] != 1 && !is_chosen(v)).collect();
        self.check_all(
            format!("S{step}.v13"),
            rest_13,
            |s, v| s.po.potential(v) < level,
            |s, v| format!("vertex {} in V{} keeps d_p={}", s.name(v), s.part[v] + 1, s.po.potential(v)),
        )?;
        // strict at level k+3, non-strict at k+2
        self.check_all(
            format!("O.{step}.2"),
            chosen_2.iter().copied(),
            |s, v| {
                let (out, pot) = (s.po.outdeg(v), s.po.potential(v));
                out <= k + 2 && if step == 5 { k + 2 < pot } else { k + 2 <= pot }
            },
            |s, v| format!("vertex {}: d_p^+={} d_p={}", s.name(v), s.po.outdeg(v), s.po.potential(v)),
        )?;
        // (O.i.3)
        for &v in &chosen_2 {
            self.finalize_vertex(v, level)?;
            self.freeze(v, offset);
        }
        rescued.sort_unstable();
        self.push_step(StepRecord { step, offset, level, candidates, chosen, rejected, rescued, matching });
        self.check_ledger(step)?;
        Ok(())
    }

    /// Repeatedly orients every remaining edge out of the not-yet-oriented
    /// vertex of largest potential out-degree (lowest index on ties).
    pub fn greedy_finish(&mut self) -> Result<Orientation, Violation> {
        let g = self.g;
        let n = g.vertex_count();
        let mut open = vec![0usize; n];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if !self.po.is_oriented(e) {
                open[u] += 1;
                open[v] += 1;
            }
        }
        let mut queue: BTreeSet<(Reverse<usize>, usize)> =
            (0..n).filter(|&v| open[v] > 0).map(|v| (Reverse(self.po.potential(v)), v)).collect();
        let mut pair_checks = 0usize;
        let mut pair_failure = None;
        while let Some((Reverse(top), v)) = queue.pop_first() {
            for &(u, e) in g.incident(v) {
                if self.po.is_oriented(e) {
                    continue;
                }
                queue.remove(&(Reverse(self.po.potential(u)), u));
                let before = self.po.potential(u);
                self.po.orient(g, e, v);
                pair_checks += 1;
                if (before > top || self.po.potential(u) >= top) && pair_failure.is_none() {
                    pair_failure = Some((v, u));
                }
                open[u] -= 1;
                if open[u] > 0 {
                    queue.insert((Reverse(self.po.potential(u)), u));
                }
            }
            open[v] = 0;
            self.trace.greedy_order.push(self.names[v]);
        }
        let outcome = match pair_failure {
            None => Ok(format!("checked {pair_checks}")),
            Some((v, u)) => Err(format!("selected {} does not dominate neighbor {}", self.name(v), self.name(u))),
        };
        self.record("G.pair".into(), outcome)?;

        let k = self.k;
        let greedy: Vec<usize> = self.unassigned();
        self.check_all(
            "G.levels",
            greedy,
            |s, v| s.po.outdeg(v) <= k + 1,
            |s, v| format!("greedy vertex {} ends at {}", s.name(v), s.po.outdeg(v)),
        )?;
        let o = self.po.to_orientation().expect("greedy phase orients every edge");
        let report = verify_proper(g, &o, Some(k + HIGHEST)).expect("orientation matches graph");
        let proper = match report.violations.first() {
            None => Ok(format!("Δ+={}", report.max_outdeg)),
            Some(&(u, v)) => Err(format!("edge {}-{} has equal out-degree {}", self.name(u), self.name(v), report.outdeg[u])),
        };
        self.record("final.proper".into(), proper)?;
        let bound = if report.within_bound == Some(true) {
            Ok(format!("Δ+={} <= k+7={}", report.max_outdeg, k + HIGHEST))
        } else {
            Err(format!("Δ+={} > k+7={}", report.max_outdeg, k + HIGHEST))
        };
        self.record("final.bound".into(), bound)?;
        Ok(o)
    }

    /// Runs steps 1-6 and the greedy phase.
    pub fn run_all(&mut self) -> Result<Orientation, StepFailure> {
        for (offset, priority) in [(7, 0), (6, 1), (5, 2)] {
            self.step_simple(offset, priority)?;
        }
        self.step_weighted()?;
        self.step_matched(3)?;
        self.step_matched(2)?;
        Ok(self.greedy_finish()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: usize) -> (Graph, Partition) {
        let g = Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap();
        let mut parts = vec![1; leaves + 1];
        parts[0] = 0;
        (g, Partition::new(3, parts).unwrap())
    }

    #[test]
    fn star_center_frozen_at_top_level() {
        let (g, p) = star(9);
        let mut s = PipelineState::new(&g, &p, 64).unwrap();
        assert_eq!(s.k(), 1);
        s.step_simple(7, 0).unwrap();
        assert_eq!(s.levels().at(7), &[0]);
        assert_eq!(s.outdeg(0), 8);
        assert!(s.partial().is_vertex_oriented(&g, 0));
        // exactly one edge points into the center
        let inward = (1..=9).filter(|&v| s.outdeg(v) == 1).count();
        assert_eq!(inward, 1);
        for v in 1..=9 {
            assert!(s.outdeg(v) <= 1);
        }
    }

    #[test]
    fn low_degree_graph_skips_every_step() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let p = Partition::new(3, vec![0, 1, 2]).unwrap();
        let mut s = PipelineState::new(&g, &p, 64).unwrap();
        for (offset, part) in [(7, 0), (6, 1), (5, 2)] {
            s.step_simple(offset, part).unwrap();
        }
        s.step_weighted().unwrap();
        s.step_matched(3).unwrap();
        s.step_matched(2).unwrap();
        assert_eq!(s.partial().oriented_count(), 0);
        let o = s.greedy_finish().unwrap();
        assert_eq!(o.out_degrees(&g), vec![2, 1, 0]);
        assert_eq!(s.trace().greedy_order, vec![0, 1]);
    }

    #[test]
    fn finalize_vertex_cases() {
        let (g, p) = star(4);
        let mut s = PipelineState::new(&g, &p, 64).unwrap();
        // 4 unoriented edges, push d_p^+ to 2 first
        s.po.orient(&g, g.edge_id(0, 3).unwrap(), 0);
        s.po.orient(&g, g.edge_id(0, 4).unwrap(), 0);
        s.finalize_vertex(0, 4).unwrap();
        assert_eq!(s.outdeg(0), 4);

        let mut s = PipelineState::new(&g, &p, 64).unwrap();
        s.po.orient(&g, g.edge_id(0, 4).unwrap(), 0);
        s.finalize_vertex(0, 3).unwrap();
        // lowest-index neighbors receive the out-edges
        let o = s.partial();
        assert_eq!(o.tail(&g, g.edge_id(0, 1).unwrap()), Some(0));
        assert_eq!(o.tail(&g, g.edge_id(0, 2).unwrap()), Some(0));
        assert_eq!(o.tail(&g, g.edge_id(0, 3).unwrap()), Some(3));

        let mut s = PipelineState::new(&g, &p, 64).unwrap();
        s.finalize_vertex(0, 0).unwrap();
        assert!((1..=4).all(|v| s.outdeg(v) == 1));

        let mut s = PipelineState::new(&g, &p, 64).unwrap();
        let err = s.finalize_vertex(0, 5).unwrap_err();
        assert_eq!(err.id, "finalize");
    }

    #[test]
    fn greedy_two_vertex_tie() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let p = Partition::new(3, vec![0, 1]).unwrap();
        let mut s = PipelineState::new(&g, &p, 64).unwrap();
        let o = s.greedy_finish().unwrap();
        assert_eq!(o.arcs(&g), vec![(0, 1)]);
    }

    #[test]
    fn greedy_on_five_cycle() {
        let g = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let p = Partition::new(3, vec![0, 1, 0, 1, 2]).unwrap();
        let mut s = PipelineState::new(&g, &p, 64).unwrap();
        let o = s.greedy_finish().unwrap();
        let r = verify_proper(&g, &o, None).unwrap();
        assert!(r.is_proper);
        assert_eq!(r.max_outdeg, 2);
    }
}

//! An `r`-partite family whose proper orientation number exceeds
//! `⌈Mad/2⌉ + r`.
//!
//! One gadget is a bipartite graph on `A ∪ D` versus `B ∪ C`: `|A| = k`, one
//! block of `k(k+r)+1` vertices in `B` for every non-empty subset of `A`
//! (joined to exactly that subset), `C` of size `(k+r+1)k²` complete to `A`
//! and cut into `k`-blocks, and one `D` vertex per `C`-block. The graph takes
//! `r` gadgets and joins `U_i` to `U_j` completely for `i != j`, where `U_s`
//! is the first `⌊2k/(r-1)⌋` vertices of `A_s`.

use std::ops::Range;

use thiserror::Error;

use crate::graph::{Graph, Partition};
use crate::hakimi::orient_bounded;

/// Default vertex ceiling for [`build_extremal`].
pub const DEFAULT_MAX_VERTICES: u64 = 5_000_000;

/// Edge ceiling above which the global orientation check is skipped.
pub const FLOW_EDGE_BUDGET: usize = 500_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("k must be at least 1 and r at least 3 (got k={k}, r={r})")]
    Params { k: usize, r: usize },
    #[error("construction needs {n} vertices, above the limit of {max}")]
    TooLarge { n: u128, max: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructParams {
    pub k: usize,
    pub r: usize,
}

impl ConstructParams {
    /// `2k > 2r² - r - 2`.
    pub fn hypothesis_ok(&self) -> bool {
        2 * self.k > 2 * self.r * self.r - self.r - 2
    }

    /// `⌊2k/(r-1)⌋`.
    pub fn u_size(&self) -> usize {
        2 * self.k / (self.r - 1)
    }

    /// `k(k+r)+1`.
    pub fn b_block(&self) -> usize {
        self.k * (self.k + self.r) + 1
    }
}

/// `B`-block of one non-empty subset of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BBlock {
    /// Vertices of `A_s` (global ids).
    pub subset: Vec<usize>,
    pub vertices: Range<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CopyLayout {
    pub a: Range<usize>,
    pub b: Range<usize>,
    pub c: Range<usize>,
    pub d: Range<usize>,
    /// Subset sizes ascending, colexicographic within a size.
    pub b_blocks: Vec<BBlock>,
    /// `c_blocks[j]` is the neighbourhood of the `j`-th `D` vertex.
    pub c_blocks: Vec<Range<usize>>,
    pub u: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetLayout {
    pub params: ConstructParams,
    pub copies: Vec<CopyLayout>,
}

impl GadgetLayout {
    pub fn u_star(&self) -> Vec<usize> {
        self.copies.iter().flat_map(|c| c.u.iter().copied()).collect()
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `(vertices, edges)` predicted by the closed forms.
pub fn predicted_counts(params: ConstructParams) -> (u128, u128) {
    let (k, r) = (params.k as u128, params.r as u128);
    let block = k * (k + r) + 1;
    let b: u128 = (1..=k).map(|i| binomial(k, i) * block).sum();
    let c = (k + r + 1) * k * k;
    let d = (k + r + 1) * k;
    let n = r * (k + b + c + d);
    let per_copy: u128 = (1..=k).map(|i| i * binomial(k, i) * block).sum::<u128>() + k * c + d * k;
    let u = params.u_size() as u128;
    (n, r * per_copy + u * u * binomial(r, 2))
}

fn take(next: &mut usize, len: usize) -> Range<usize> {
    *next += len;
    *next - len..*next
}

/// Builds the graph, its `r`-partition and the layout.
///
/// Parts (0-based): `A_s ∪ D_s` in part `s`, `B_s ∪ C_s` in part `(s+1) mod r`.
pub fn build_extremal(params: ConstructParams, max_vertices: u64) -> Result<(Graph, Partition, GadgetLayout), ConstructError> {
    let ConstructParams { k, r } = params;
    if k == 0 || r < 3 || k >= 64 {
        return Err(ConstructError::Params { k, r });
    }
    let (n, _) = predicted_counts(params);
    if n > max_vertices as u128 {
        return Err(ConstructError::TooLarge { n, max: max_vertices });
    }
    let n = n as usize;
    let mut edges = Vec::new();
    let mut part = vec![0; n];
    let mut copies = Vec::with_capacity(r);
    let mut next = 0;
    let mut masks: Vec<u64> = (1..1u64 << k).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for s in 0..r {
        let a = take(&mut next, k);
        let b_start = next;
        let mut b_blocks = Vec::with_capacity(masks.len());
        for &mask in &masks {
            let subset: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| a.start + i).collect();
            let vertices = take(&mut next, params.b_block());
            for x in vertices.clone() {
                edges.extend(subset.iter().map(|&y| (y, x)));
            }
            b_blocks.push(BBlock { subset, vertices });
        }
        let b = b_start..next;
        let c = take(&mut next, (k + r + 1) * k * k);
        for x in c.clone() {
            edges.extend(a.clone().map(|y| (y, x)));
        }
        let d = take(&mut next, (k + r + 1) * k);
        let c_blocks: Vec<Range<usize>> =
            (0..d.len()).map(|j| c.start + j * k..c.start + (j + 1) * k).collect();
        for (j, x) in d.clone().enumerate() {
            edges.extend(c_blocks[j].clone().map(|y| (y, x)));
        }
        for v in a.clone().chain(d.clone()) {
            part[v] = s;
        }
        for v in b.clone().chain(c.clone()) {
            part[v] = (s + 1) % r;
        }
        let u = (a.start..a.start + params.u_size()).collect();
        copies.push(CopyLayout { a, b, c, d, b_blocks, c_blocks, u });
    }
    for i in 0..r {
        for j in i + 1..r {
            for &x in &copies[i].u {
                edges.extend(copies[j].u.iter().map(|&y| (x, y)));
            }
        }
    }
    let g = Graph::new(n, edges).expect("construction is simple");
    let p = Partition::new(r, part).expect("parts in range");
    p.validate(&g).expect("construction is r-partite");
    Ok((g, p, GadgetLayout { params, copies }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    /// `None` when skipped.
    pub passed: Option<bool>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StructureReport {
    pub checks: Vec<CheckOutcome>,
}

impl StructureReport {
    /// True when no check failed (skipped checks do not count).
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed != Some(false))
    }

    pub fn get(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &str, outcome: Result<String, String>) {
        let passed = outcome.is_ok();
        let detail = match outcome {
            Ok(d) | Err(d) => d,
        };
        self.checks.push(CheckOutcome { name: name.to_string(), passed: Some(passed), detail });
    }
}

impl std::fmt::Display for StructureReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            let status = match c.passed {
                Some(true) => "PASS",
                Some(false) => "FAIL",
                None => "SKIP",
            };
            writeln!(f, "CHECK {} {} {}", c.name, status, c.detail)?;
        }
        Ok(())
    }
}

fn sorted_neighbors(g: &Graph, v: usize) -> Vec<usize> {
    let mut ns: Vec<usize> = g.neighbors(v).collect();
    ns.sort_unstable();
    ns
}

fn check_counts(g: &Graph, layout: &GadgetLayout) -> Result<String, String> {
    let params = layout.params;
    let (n, m) = predicted_counts(params);
    if (g.vertex_count() as u128, g.edge_count() as u128) != (n, m) {
        return Err(format!("n={} m={}, expected n={n} m={m}", g.vertex_count(), g.edge_count()));
    }
    let k = params.k;
    for (s, c) in layout.copies.iter().enumerate() {
        let sizes = [c.a.len(), c.b.len(), c.c.len(), c.d.len()];
        let want = [k, ((1u128 << k) - 1) as usize * params.b_block(), (k + params.r + 1) * k * k, (k + params.r + 1) * k];
        if sizes != want || c.u.len() != params.u_size() {
            return Err(format!("copy {}: sizes {sizes:?} |U|={}", s + 1, c.u.len()));
        }
    }
    Ok(format!("n={n} m={m}"))
}

/// (a) each `B`-block is joined to exactly its subset, one block per subset.
fn check_b_blocks(g: &Graph, layout: &GadgetLayout) -> Result<String, String> {
    let k = layout.params.k;
    for (s, c) in layout.copies.iter().enumerate() {
        let mut seen = std::collections::BTreeSet::new();
        let mut per_size = vec![0u128; k + 1];
        let mut covered = 0;
        for (i, blk) in c.b_blocks.iter().enumerate() {
            if blk.subset.is_empty() || !blk.subset.iter().all(|v| c.a.contains(v)) || !seen.insert(blk.subset.clone()) {
                return Err(format!("copy {} block {}: bad or repeated subset", s + 1, i + 1));
            }
            per_size[blk.subset.len()] += 1;
            covered += blk.vertices.len();
            if blk.vertices.len() != layout.params.b_block() {
                return Err(format!("copy {} block {}: {} vertices", s + 1, i + 1, blk.vertices.len()));
            }
            for x in blk.vertices.clone() {
                if !c.b.contains(&x) || sorted_neighbors(g, x) != blk.subset {
                    return Err(format!("copy {} block {}: vertex {} not joined to exactly its subset", s + 1, i + 1, x + 1));
                }
            }
        }
        let want: Vec<u128> = (0..=k).map(|i| if i == 0 { 0 } else { binomial(k as u128, i as u128) }).collect();
        if per_size != want || covered != c.b.len() {
            return Err(format!("copy {}: blocks do not cover every subset once", s + 1));
        }
    }
    Ok(format!("{} blocks per copy", (1u64 << k) - 1))
}

/// (b) `C`-blocks partition `C`; each `D` vertex sees exactly its block.
fn check_d_blocks(g: &Graph, layout: &GadgetLayout) -> Result<String, String> {
    let k = layout.params.k;
    for (s, c) in layout.copies.iter().enumerate() {
        let mut at = c.c.start;
        for blk in &c.c_blocks {
            if blk.start != at || blk.len() != k {
                return Err(format!("copy {}: C-blocks do not partition C", s + 1));
            }
            at = blk.end;
        }
        if at != c.c.end || c.c_blocks.len() != c.d.len() {
            return Err(format!("copy {}: C-blocks do not partition C", s + 1));
        }
        for (j, x) in c.d.clone().enumerate() {
            if sorted_neighbors(g, x) != c.c_blocks[j].clone().collect::<Vec<_>>() {
                return Err(format!("copy {}: D vertex {} does not see exactly its block", s + 1, x + 1));
            }
        }
    }
    Ok(format!("{} blocks of size {k} per copy", layout.copies[0].c_blocks.len()))
}

/// (c) every `C` vertex sees all of `A_s` and one `D` vertex.
fn check_c_vertices(g: &Graph, layout: &GadgetLayout) -> Result<String, String> {
    let k = layout.params.k;
    for (s, c) in layout.copies.iter().enumerate() {
        for (j, blk) in c.c_blocks.iter().enumerate() {
            for x in blk.clone() {
                let mut want: Vec<usize> = c.a.clone().collect();
                want.push(c.d.start + j);
                if g.degree(x) != k + 1 || sorted_neighbors(g, x) != want {
                    return Err(format!("copy {}: C vertex {} has wrong neighbourhood", s + 1, x + 1));
                }
            }
        }
    }
    Ok(format!("degree {}", k + 1))
}

/// (d) deleting `D`, then `C`, then `B` removes at most `k` edges per vertex
/// and leaves only edges inside `U*`.
fn check_degeneracy(g: &Graph, layout: &GadgetLayout) -> Result<String, String> {
    let k = layout.params.k;
    let mut gone = vec![false; g.vertex_count()];
    let mut worst = 0;
    let order = layout.copies.iter().flat_map(|c| c.d.clone()).chain(layout.copies.iter().flat_map(|c| c.c.clone())).chain(layout.copies.iter().flat_map(|c| c.b.clone()));
    for v in order {
        let removed = g.neighbors(v).filter(|&u| !gone[u]).count();
        if removed > k {
            return Err(format!("deleting vertex {} removes {removed} > {k} edges", v + 1));
        }
        worst = worst.max(removed);
        gone[v] = true;
    }
    let mut in_u = vec![false; g.vertex_count()];
    for u in layout.u_star() {
        in_u[u] = true;
    }
    if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| !gone[u] && !gone[v] && !(in_u[u] && in_u[v])) {
        return Err(format!("edge {}-{} survives outside U*", u + 1, v + 1));
    }
    Ok(format!("at most {worst} edges per deletion"))
}

/// `G[U*]` is complete `r`-partite on the `U_s`.
fn check_u_star(g: &Graph, layout: &GadgetLayout) -> Result<String, String> {
    let mut cross = 0;
    for (i, ci) in layout.copies.iter().enumerate() {
        for (j, cj) in layout.copies.iter().enumerate() {
            for &x in &ci.u {
                for &y in &cj.u {
                    if x < y && g.has_edge(x, y) != (i != j) {
                        return Err(format!("pair {}-{} breaks the join", x + 1, y + 1));
                    }
                    cross += usize::from(i < j);
                }
            }
        }
    }
    Ok(format!("{cross} cross edges"))
}

/// (e) `G[U*]` has an orientation with out-degrees at most `k`.
fn check_u_star_density(g: &Graph, layout: &GadgetLayout) -> Result<String, String> {
    let (sub, _) = g.induced_subgraph(&layout.u_star());
    if orient_bounded(&sub, layout.params.k).is_feasible() {
        Ok(format!("{} vertices, {} edges, out-degree <= {}", sub.vertex_count(), sub.edge_count(), layout.params.k))
    } else {
        Err(format!("G[U*] needs out-degree above {}", layout.params.k))
    }
}

/// (f) `⌈Mad(G)/2⌉ = k`: an orientation at `k` and the dense set `A_1 ∪ C_1`.
fn check_global_density(g: &Graph, layout: &GadgetLayout, report: &mut StructureReport) {
    let k = layout.params.k;
    let c = &layout.copies[0];
    let witness: Vec<usize> = c.a.clone().chain(c.c.clone()).collect();
    let e = g.induced_edge_count(&witness);
    let outcome = if e > (k - 1) * witness.len() {
        Ok(format!("A∪C: {e} edges on {} vertices, 2e/|S| > {}", witness.len(), 2 * (k - 1)))
    } else {
        Err(format!("A∪C: {e} edges on {} vertices does not exceed k-1", witness.len()))
    };
    report.push("f.lower", outcome);
    if g.edge_count() > FLOW_EDGE_BUDGET {
        report.checks.push(CheckOutcome {
            name: "f.upper".into(),
            passed: None,
            detail: format!("{} edges over budget {FLOW_EDGE_BUDGET}", g.edge_count()),
        });
        return;
    }
    let outcome = if orient_bounded(g, k).is_feasible() {
        Ok(format!("orientation with out-degree <= {k}"))
    } else {
        Err(format!("no orientation with out-degree <= {k}"))
    };
    report.push("f.upper", outcome);
}

/// Recounts the structural claims on a (possibly modified) graph.
pub fn verify_structure(g: &Graph, layout: &GadgetLayout) -> StructureReport {
    let mut report = StructureReport::default();
    report.push("counts", check_counts(g, layout));
    report.push("a", check_b_blocks(g, layout));
    report.push("b", check_d_blocks(g, layout));
    report.push("c", check_c_vertices(g, layout));
    report.push("d", check_degeneracy(g, layout));
    report.push("ustar", check_u_star(g, layout));
    report.push("e", check_u_star_density(g, layout));
    check_global_density(g, layout, &mut report);
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountingReport {
    pub k: usize,
    pub r: usize,
    pub u: usize,
    /// `e(G[U*]) = u²·C(r,2)`.
    pub edges: u128,
    /// `(k(r-1) + (r+2)(r-1)/2)·u`.
    pub budget: u128,
    pub hypothesis: bool,
}

impl CountingReport {
    pub fn exceeds(&self) -> bool {
        self.edges > self.budget
    }

    /// The inequality holds whenever the hypothesis does.
    pub fn consistent(&self) -> bool {
        !self.hypothesis || self.exceeds()
    }
}

impl std::fmt::Display for CountingReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (k, r) = (self.k as u128, self.r as u128);
        writeln!(f, "u = {}", self.u)?;
        writeln!(f, "e(G[U*]) = {}", self.edges)?;
        writeln!(f, "budget = {}", self.budget)?;
        writeln!(f, "e > budget: {}", self.exceeds())?;
        writeln!(f, "hypothesis 2k > 2r^2-r-2 ({} > {}): {}", 2 * k, 2 * r * r - r - 2, self.hypothesis)
    }
}

pub fn counting_check(k: usize, r: usize) -> CountingReport {
    let params = ConstructParams { k, r };
    let u = params.u_size();
    let (k128, r128, u128_) = (k as u128, r as u128, u as u128);
    let edges = u128_ * u128_ * binomial(r128, 2);
    let budget = (k128 * (r128 - 1) + (r128 + 2) * (r128 - 1) / 2) * u128_;
    CountingReport { k, r, u, edges, budget, hypothesis: params.hypothesis_ok() }
}

//! Seeded random `r`-partite graphs.
//!
//! The generator is SplitMix64 (Steele, Lea, Flood), so a `(sizes, p, seed)`
//! triple names one graph on every platform. Vertices of part `i` form a
//! contiguous block; each cross-part pair `u < v`, in lexicographic order,
//! consumes one draw `x` and becomes an edge iff `x * den / 2^64 < num`.

use crate::graph::{Graph, Partition};

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound` (multiply-shift; `bound > 0`).
    pub fn below(&mut self, bound: u64) -> u64 {
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }

    /// True with probability `num/den`.
    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }
}

/// Edge probability `num/den` with `num <= den`, `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Probability {
    pub num: u64,
    pub den: u64,
}

impl Probability {
    pub fn new(num: u64, den: u64) -> Option<Self> {
        (den > 0 && num <= den).then_some(Probability { num, den })
    }
}

impl std::str::FromStr for Probability {
    type Err = String;

    /// Accepts `num/den` or a bare integer `0` or `1`.
    fn from_str(s: &str) -> Result<Self, String> {
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim().parse(), b.trim().parse()),
            None => (s.trim().parse(), Ok(1)),
        };
        let (num, den) = match (num, den) {
            (Ok(a), Ok(b)) => (a, b),
            _ => return Err(format!("expected num/den, got {s:?}")),
        };
        Probability::new(num, den).ok_or_else(|| format!("{s} is not a probability"))
    }
}

/// Random graph with parts of the given sizes.
pub fn random_multipartite(sizes: &[usize], p: Probability, seed: u64) -> (Graph, Partition) {
    let part: Vec<usize> = sizes.iter().enumerate().flat_map(|(i, &s)| std::iter::repeat_n(i, s)).collect();
    let n = part.len();
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] && rng.chance(p.num, p.den) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new(n, edges).expect("generated pairs are distinct");
    let p = Partition::new(sizes.len().max(1), part).expect("parts in range");
    (g, p)
}

/// Restriction to the largest connected component (earliest on ties).
pub fn largest_component(g: &Graph, p: &Partition) -> (Graph, Partition) {
    let comps = g.components();
    let best = comps.iter().enumerate().max_by_key(|&(i, c)| (c.len(), std::cmp::Reverse(i))).map(|(_, c)| c.clone());
    let best = best.unwrap_or_default();
    let (sub, names) = g.induced_subgraph(&best);
    (sub, p.restrict(&names))
}

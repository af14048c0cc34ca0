mod common;

use common::*;
use pog::density::{brute_force_mad, ceil_half_mad, exact_mad, Rational, BRUTE_FORCE_CAP};
use pog::exactchi::{chi_orient, EXACT_CAP};
use pog::extremal::counting_check;
use pog::flow::{max_flow, prescribed_outdegree_orientation, FlowNetwork};
use pog::graph::{verify_proper, Graph, Orientation, Partition};
use pog::hakimi::{orient_bounded, BoundedOrientation};
use pog::hallmatch::{solve, BipartiteInstance, HallOutcome};
use pog::indset::{lex_mwis, mis_bipartite, LexObjective, DEFAULT_CAP};
use pog::io::{parse_graph, parse_orientation, write_graph, write_orientation};
use pog::orient3::{orient3, Orient3Config};
use pog::random::{random_multipartite, Probability};
use proptest::prelude::*;

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), any::<u64>().prop_map(move |m| if pairs == 64 { m } else { m & ((1u64 << pairs) - 1) }))
    })
    .prop_map(|(n, mask)| graph_from_mask(n, mask))
}

fn tripartite(max_part: usize) -> impl Strategy<Value = (Graph, Partition)> {
    (prop::collection::vec(0..=max_part, 3), 0u64..=10, any::<u64>())
        .prop_map(|(sizes, num, seed)| random_multipartite(&sizes, Probability::new(num, 10).unwrap(), seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn exact_mad_matches_subsets(g in small_graph(10)) {
        let (mad, cert) = exact_mad(&g);
        let (num, den) = mad_by_subsets(&g);
        prop_assert_eq!(mad, Rational::new(num, den));
        prop_assert_eq!(brute_force_mad(&g, BRUTE_FORCE_CAP).unwrap(), mad);
        prop_assert!(cert.holds(&g));
    }

    #[test]
    fn ceil_half_mad_is_ceiling(g in small_graph(10)) {
        let (num, den) = mad_by_subsets(&g);
        let expected = num.div_ceil(2 * den) as usize;
        prop_assert_eq!(ceil_half_mad(&g), expected);
    }

    #[test]
    fn hakimi_duality(g in small_graph(11), k in 0usize..5) {
        match orient_bounded(&g, k) {
            BoundedOrientation::Feasible(o) => {
                prop_assert!(o.out_degrees(&g).iter().all(|&d| d <= k));
                prop_assert!(k >= ceil_half_mad(&g));
            }
            BoundedOrientation::Infeasible(c) => {
                prop_assert!(c.holds(&g, k));
                prop_assert_eq!(c.edges, g.induced_edge_count(&c.vertices));
                prop_assert!(k < ceil_half_mad(&g));
            }
        }
    }

    #[test]
    fn prescribed_orientation_matches_subset_condition(g in small_graph(7), seed in any::<u64>()) {
        let mut rng = pog::random::SplitMix64::new(seed);
        let target: Vec<usize> = (0..g.vertex_count()).map(|v| rng.below(g.degree(v) as u64 + 1) as usize).collect();
        let found = prescribed_outdegree_orientation(&g, &target).unwrap();
        prop_assert_eq!(found.is_some(), targets_realizable(&g, &target));
        if let Some(o) = found {
            prop_assert_eq!(o.out_degrees(&g), target);
        }
    }

    #[test]
    fn flow_value_equals_cut(n in 2usize..8, arcs in prop::collection::vec((0usize..8, 0usize..8, 0u64..10), 0..25)) {
        let mut net = FlowNetwork::new(n, 0, n - 1);
        for (a, b, c) in arcs {
            let (a, b) = (a % n, b % n);
            if a != b && b != 0 && a != n - 1 {
                net.add_arc(a, b, c);
            }
        }
        let r = max_flow(&net).unwrap();
        prop_assert_eq!(r.cut.recount(&net), r.value);
        let mut balance = vec![0i64; n];
        for (arc, &f) in net.arcs().iter().zip(&r.flow) {
            prop_assert!(f <= arc.capacity);
            balance[arc.from] -= f as i64;
            balance[arc.to] += f as i64;
        }
        for (v, &b) in balance.iter().enumerate() {
            if v != 0 && v != n - 1 {
                prop_assert_eq!(b, 0);
            }
        }
        prop_assert_eq!(balance[n - 1], r.value as i64);
    }

    #[test]
    fn hall_matches_enumeration(
        u_count in 0usize..7,
        weights in prop::collection::vec(0u64..=3, 0..7),
        raw in prop::collection::vec((0usize..7, 0usize..7), 0..20),
    ) {
        let mut edges: Vec<(usize, usize)> = raw.into_iter()
            .filter(|&(u, v)| u < u_count && v < weights.len())
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let inst = BipartiteInstance::new(u_count, weights.clone(), edges.clone());
        let feasible = hall_holds(u_count, &weights, &edges);
        match solve(&inst) {
            HallOutcome::Matching(m) => {
                prop_assert!(feasible);
                prop_assert!(m.is_valid(&inst));
            }
            HallOutcome::Violation(c) => {
                prop_assert!(!feasible);
                prop_assert!(c.is_valid(&inst));
            }
        }
    }

    #[test]
    fn lex_mwis_matches_enumeration(
        g in small_graph(11),
        cand_mask in any::<u32>(),
        raw in prop::collection::vec(prop::collection::vec(0u64..4, 11), 1..4),
    ) {
        let n = g.vertex_count();
        let cand: Vec<usize> = (0..n).filter(|&v| cand_mask >> v & 1 == 1).collect();
        let tiers: Vec<Vec<u64>> = raw.into_iter().map(|t| t[..n].to_vec()).collect();
        let r = lex_mwis(&g, &cand, &LexObjective { tiers: tiers.clone() }, DEFAULT_CAP).unwrap();
        let (best, set) = lex_best_by_enumeration(&g, &cand, &tiers);
        prop_assert_eq!(&r.tier_values, &best);
        prop_assert_eq!(r.set, set);
    }

    #[test]
    fn konig_gives_maximum_independent_set(a in 0usize..7, b in 0usize..7, mask in any::<u64>()) {
        let n = a + b;
        let edges: Vec<(usize, usize)> = (0..a)
            .flat_map(|i| (a..n).map(move |j| (i, j)))
            .enumerate()
            .filter(|&(bit, _)| mask >> bit & 1 == 1)
            .map(|(_, e)| e)
            .collect();
        let g = Graph::new(n, edges).unwrap();
        let side_a: Vec<usize> = (0..a).collect();
        let side_b: Vec<usize> = (a..n).collect();
        let s = mis_bipartite(&g, &side_a, &side_b).unwrap();
        prop_assert!(s.iter().all(|&x| s.iter().all(|&y| !g.has_edge(x, y))));
        let ones = vec![vec![1u64; n]];
        let all: Vec<usize> = (0..n).collect();
        let (best, _) = lex_best_by_enumeration(&g, &all, &ones);
        prop_assert_eq!(s.len() as u64, best[0]);
    }

    #[test]
    fn chi_matches_orientation_enumeration(g in small_graph(7).prop_filter("few edges", |g| g.edge_count() <= 12)) {
        let (k, o) = chi_orient(&g, None, EXACT_CAP).unwrap().unwrap();
        prop_assert_eq!(k, chi_by_orientations(&g));
        let r = verify_proper(&g, &o, Some(k)).unwrap();
        prop_assert!(r.is_proper && r.within_bound == Some(true));
    }

    #[test]
    fn orient3_is_proper_and_bounded((g, p) in tripartite(12)) {
        let r = orient3(&g, &p, &Orient3Config::default()).unwrap();
        prop_assert!(r.trace.all_passed());
        let rep = verify_proper(&g, &r.orientation, Some(ceil_half_mad(&g) + 7)).unwrap();
        prop_assert!(rep.is_proper);
        prop_assert_eq!(rep.within_bound, Some(true));
        prop_assert_eq!(r.k, ceil_half_mad(&g));
    }

    #[test]
    fn graph_file_round_trip((g, p) in tripartite(6)) {
        let text = write_graph(&g, &p);
        let (h, q) = parse_graph(&text).unwrap();
        prop_assert_eq!(&h, &g);
        prop_assert_eq!(&q, &p);
        prop_assert_eq!(write_graph(&h, &q), text);
    }

    #[test]
    fn orientation_file_round_trip((g, _) in tripartite(6), bits in any::<u64>()) {
        let o = Orientation::from_forward((0..g.edge_count()).map(|e| bits >> (e % 64) & 1 == 1).collect());
        let text = write_orientation(&g, &o);
        prop_assert_eq!(parse_orientation(&g, &text).unwrap(), o);
    }

    #[test]
    fn verify_proper_agrees_with_direct_check(g in small_graph(8), bits in any::<u64>()) {
        let o = Orientation::from_forward((0..g.edge_count()).map(|e| bits >> e & 1 == 1).collect());
        let mut out = vec![0usize; g.vertex_count()];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            out[if bits >> e & 1 == 1 { u } else { v }] += 1;
        }
        let r = verify_proper(&g, &o, None).unwrap();
        prop_assert_eq!(r.is_proper, g.edges().iter().all(|&(u, v)| out[u] != out[v]));
        prop_assert_eq!(r.outdeg, out);
    }

    #[test]
    fn adding_an_edge_never_lowers_density(g in small_graph(9), pick in any::<usize>()) {
        let n = g.vertex_count();
        let missing: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !g.has_edge(i, j))
            .collect();
        prop_assume!(!missing.is_empty());
        let mut edges = g.edges().to_vec();
        edges.push(missing[pick % missing.len()]);
        let h = Graph::new(n, edges).unwrap();
        prop_assert!(exact_mad(&h).0 >= exact_mad(&g).0);
        prop_assert!(ceil_half_mad(&h) >= ceil_half_mad(&g));
    }

    #[test]
    fn counting_inequality_closed_form(k in 1usize..400, r in 3usize..40) {
        let c = counting_check(k, r);
        let u = (2 * k / (r - 1)) as u128;
        prop_assert_eq!(c.edges, u * u * (r * (r - 1) / 2) as u128);
        prop_assert_eq!(c.exceeds(), u * r as u128 > (2 * k + r + 2) as u128);
        prop_assert!(c.consistent());
    }
}

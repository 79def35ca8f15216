use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use setcolor::discharging::{apply_rules, initial_charges, HalfInt};
use setcolor::engine::{
    greedy_color, greedy_precondition, is_valid_coloring, reduce_lists, solve, triangle_colorable, DemandFunction,
    ListAssignment, SetColoring,
};
use setcolor::format::{write_graph, Document};
use setcolor::gen::{random_class_graph, random_dense_class_graph, random_lists, random_precoloring};
use setcolor::graph::{Graph, PlaneGraph, PrecoloredClique};
use setcolor::reducer::{find_configuration, independence_ratio, reduce_and_extend, verify_configuration};
use setcolor::ColorSet;

fn class_graph(seed: u64, dense: bool) -> PlaneGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if dense {
        random_dense_class_graph(4 + 2 * (seed % 8) as usize, 4, &mut rng)
    } else {
        random_class_graph(8 + (seed % 40) as usize, &mut rng)
    }
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=6).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let m = pairs.len();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let edges: Vec<_> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
            Graph::from_edges(n, &edges)
        })
    })
}

fn lists_for(n: usize, universe: u32, max_len: usize) -> impl Strategy<Value = Vec<ColorSet>> {
    proptest::collection::vec(proptest::collection::btree_set(1..=universe, 0..=max_len), n)
        .prop_map(|ls| ls.into_iter().map(|s| s.into_iter().collect()).collect())
}

/// Tries every combination of subsets, one vertex at a time, with no
/// ordering heuristics or pruning beyond edge conflicts.
fn naive_colorable(g: &Graph, l: &[ColorSet], f: &[u32]) -> bool {
    fn go(g: &Graph, l: &[ColorSet], f: &[u32], phi: &mut Vec<ColorSet>) -> bool {
        let v = phi.len();
        if v == l.len() {
            return true;
        }
        for s in l[v].subsets(f[v] as usize) {
            if g.neighbors(v).iter().all(|&u| u >= v || phi[u].is_disjoint(s)) {
                phi.push(s);
                if go(g, l, f, phi) {
                    return true;
                }
                phi.pop();
            }
        }
        false
    }
    go(g, l, f, &mut Vec::new())
}

/// Every 4- or 5-cycle by brute force over vertex sequences.
fn naive_short_cycles(g: &Graph) -> BTreeSet<Vec<usize>> {
    let n = g.vertex_count();
    let mut out = BTreeSet::new();
    for len in [4usize, 5] {
        let mut seq = vec![0; len];
        let total = n.pow(len as u32);
        for code in 0..total {
            let mut c = code;
            for x in seq.iter_mut() {
                *x = c % n;
                c /= n;
            }
            let distinct: BTreeSet<_> = seq.iter().collect();
            if distinct.len() != len || (0..len).any(|i| !g.has_edge(seq[i], seq[(i + 1) % len])) {
                continue;
            }
            // canonical: smallest first, then the smaller neighbor second
            let i = (0..len).min_by_key(|&i| seq[i]).unwrap();
            let mut rot: Vec<usize> = (0..len).map(|k| seq[(i + k) % len]).collect();
            if rot[1] > rot[len - 1] {
                rot[1..].reverse();
            }
            out.insert(rot);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn faces_partition_the_darts(seed in any::<u64>(), dense in any::<bool>()) {
        let g = class_graph(seed, dense);
        let total: usize = g.faces().iter().map(|f| f.len()).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
        let mut seen = vec![0; g.dart_count()];
        for f in g.faces() {
            for &d in &f.darts {
                seen[d] += 1;
            }
        }
        prop_assert!(seen.iter().all(|&c| c == 1));
        prop_assert_eq!(g.vertex_count() + g.faces().len(), g.edge_count() + 2);
        prop_assert!(g.forbidden_cycles().is_empty());
    }

    #[test]
    fn short_cycles_match_brute_force(g in small_graph()) {
        let fast: BTreeSet<Vec<usize>> = g.short_cycles().into_iter().collect();
        prop_assert_eq!(fast, naive_short_cycles(&g));
    }

    #[test]
    fn solver_agrees_with_brute_force(
        (g, l, f) in small_graph().prop_filter("at most 5 vertices", |g| g.vertex_count() <= 5).prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), lists_for(n, 6, 6), proptest::collection::vec(0u32..=3, n))
        })
    ) {
        let la = ListAssignment::new(l.clone());
        let fa = DemandFunction::new(f.clone());
        let got = solve(&g, &la, &fa).unwrap();
        prop_assert_eq!(got.is_some(), naive_colorable(&g, &l, &f));
        if let Some(phi) = got {
            prop_assert!(is_valid_coloring(&g, &la, &fa, &phi).is_ok());
        }
    }

    #[test]
    fn verdict_survives_renaming(
        (g, l) in small_graph().prop_flat_map(|g| { let n = g.vertex_count(); (Just(g), lists_for(n, 9, 7)) }),
        seed in any::<u64>(),
    ) {
        let mut perm: Vec<u32> = (0..=9).collect();
        perm[1..].shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let renamed: Vec<ColorSet> = l.iter().map(|s| s.iter().map(|c| perm[c as usize]).collect()).collect();
        let f = DemandFunction::uniform(g.vertex_count(), 2);
        let a = solve(&g, &ListAssignment::new(l), &f).unwrap().is_some();
        let b = solve(&g, &ListAssignment::new(renamed), &f).unwrap().is_some();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn reduced_lists_recombine(
        (g, l) in small_graph().prop_flat_map(|g| { let n = g.vertex_count(); (Just(g), lists_for(n, 12, 12)) }),
        pick in proptest::collection::vec(any::<proptest::sample::Index>(), 6),
    ) {
        let n = g.vertex_count();
        let f = DemandFunction::uniform(n, 2);
        let la = ListAssignment::new(l.clone());
        prop_assume!(l.iter().all(|s| s.len() >= 2));
        // a partial coloring: one color at each vertex, then drop conflicts
        let mut psi = SetColoring::empty(n);
        for v in 0..n {
            let cs: Vec<u32> = l[v].iter().collect();
            let c = cs[pick[v].index(cs.len())];
            if g.neighbors(v).iter().all(|&u| !psi[u].contains(c)) {
                psi[v] = ColorSet::singleton(c);
            }
        }
        let (l2, f2) = reduce_lists(&g, &la, &f, &psi).unwrap();
        if let Some(rest) = solve(&g, &l2, &f2).unwrap() {
            prop_assert!(is_valid_coloring(&g, &la, &f, &psi.union(&rest)).is_ok());
        }
    }

    #[test]
    fn greedy_never_fails_when_lists_are_long_enough(
        (g, order) in small_graph().prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        }),
        seed in any::<u64>(),
        f0 in proptest::collection::vec(1u32..=3, 6),
    ) {
        let n = g.vertex_count();
        let f = DemandFunction::new(f0[..n].to_vec());
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let colors: Vec<u32> = (1..=40).collect();
        let l: ListAssignment = (0..n)
            .map(|v| {
                let need = f[v] + g.neighbors(v).iter().filter(|&&u| pos[u] < pos[v]).map(|&u| f[u]).sum::<u32>();
                colors.choose_multiple(&mut rng, need as usize).copied().collect::<ColorSet>()
            })
            .collect();
        prop_assert!(greedy_precondition(&g, &l, &f, &order).is_ok());
        let phi = greedy_color(&g, &l, &f, &order).unwrap();
        prop_assert!(is_valid_coloring(&g, &l, &f, &phi).is_ok());
    }

    #[test]
    fn triangle_test_agrees_with_solver(l in lists_for(3, 12, 7)) {
        let lists: [ColorSet; 3] = [l[0], l[1], l[2]];
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let la = ListAssignment::new(l);
        let f = DemandFunction::uniform(3, 3);
        let verdict = triangle_colorable(lists);
        prop_assert_eq!(verdict.certificate.holds(), solve(&g, &la, &f).unwrap().is_some());
        if let Some(c) = verdict.coloring {
            prop_assert!(is_valid_coloring(&g, &la, &f, &SetColoring::new(c.to_vec())).is_ok());
        }
    }

    #[test]
    fn charges_balance_and_mirror(seed in any::<u64>(), dense in any::<bool>()) {
        let g = class_graph(seed, dense);
        let z = [0];
        let start = initial_charges(&g).unwrap();
        let s = apply_rules(&g, &z).unwrap();
        prop_assert_eq!(start.total(), HalfInt::from_int(-12));
        prop_assert_eq!(s.total(), start.total());
        prop_assert_eq!(s.identity_failures().count(), 0);
        let m = apply_rules(&g.mirror(), &z).unwrap();
        prop_assert_eq!(&s.vertex_charge, &m.vertex_charge);
    }

    #[test]
    fn reducer_output_is_valid_and_large_class_is_independent(seed in any::<u64>(), dense in any::<bool>()) {
        let g = class_graph(seed, dense);
        let n = g.vertex_count();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let l = random_lists(n, 11, 33, &mut rng);
        let z = PrecoloredClique::new(g.graph(), vec![0], random_precoloring(1, 33, &mut rng)).unwrap();
        let (phi, _) = reduce_and_extend(&g, &l, &z).unwrap();
        let mut lz = l.clone();
        lz[0] = z.iter().next().unwrap().1;
        prop_assert!(is_valid_coloring(g.graph(), &lz, &DemandFunction::uniform(n, 3), &phi).is_ok());
        let set = independence_ratio(&g, &phi).unwrap();
        for (i, &u) in set.vertices.iter().enumerate() {
            for &v in &set.vertices[i + 1..] {
                prop_assert!(!g.has_edge(u, v));
            }
        }
        if let Some(c) = find_configuration(&g, &[0]) {
            prop_assert!(verify_configuration(&g, &[0], None, &c).is_ok());
            prop_assert!(!c.delete.is_empty());
        }
    }

    #[test]
    fn graph_text_round_trips(seed in any::<u64>()) {
        let g = class_graph(seed, seed % 2 == 0);
        let back = Document::parse(&write_graph(&g)).unwrap().plane_graph().unwrap();
        prop_assert_eq!(back, g);
    }
}

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use setcolor::engine::{is_valid_coloring, DemandFunction};
use setcolor::gen::{random_class_graph, random_dense_class_graph, random_clique, random_lists, random_precoloring};
use setcolor::graph::PrecoloredClique;
use setcolor::reducer::{prepare, reduce_and_extend, Kind};

#[test]
fn random_graphs_color_end_to_end() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut used: BTreeMap<Kind, usize> = BTreeMap::new();
    let mut failures = 0;
    for i in 0..200 {
        let g = if i % 2 == 0 {
            random_class_graph(rng.gen_range(10..=60), &mut rng)
        } else {
            let m = 2 * rng.gen_range(2..=10);
            random_dense_class_graph(m, rng.gen_range(0..=m), &mut rng)
        };
        let members = random_clique(&g, rng.gen_bool(0.5), &mut rng);
        let cols = random_precoloring(members.len(), 33, &mut rng);
        let z = PrecoloredClique::new(g.graph(), members, cols).unwrap();
        let l = random_lists(g.vertex_count(), 11, 33, &mut rng);
        match reduce_and_extend(&g, &l, &z) {
            Ok((phi, stats)) => {
                let f = DemandFunction::uniform(g.vertex_count(), 3);
                assert!(is_valid_coloring(g.graph(), &prepare(&g, &l, &z).unwrap(), &f, &phi).is_ok());
                for (k, c) in stats.reductions {
                    *used.entry(k).or_default() += c;
                }
            }
            Err(e) => {
                failures += 1;
                eprintln!("instance {i}: {e}");
            }
        }
    }
    eprintln!("{used:?}");
    assert_eq!(failures, 0);
}

#[test]
fn every_kind_found_in_dense_graphs_extends() {
    use setcolor::reducer::{default_clique, find_all, Reducer};
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut done: BTreeMap<Kind, usize> = BTreeMap::new();
    for _ in 0..150 {
        let m = 2 * rng.gen_range(2..=10);
        let g = random_dense_class_graph(m, rng.gen_range(0..=2 * m), &mut rng);
        let l = random_lists(g.vertex_count(), 11, 33, &mut rng);
        let z = default_clique(&g, &l).unwrap();
        let lists = prepare(&g, &l, &z).unwrap();
        for k in Kind::ALL {
            for c in find_all(&g, z.members(), k).into_iter().take(2) {
                let phi = Reducer::default().reduce_via(&g, &lists, z.members(), &c).unwrap();
                let f = DemandFunction::uniform(g.vertex_count(), 3);
                assert!(is_valid_coloring(g.graph(), &lists, &f, &phi).is_ok(), "{c}");
                *done.entry(k).or_default() += 1;
            }
        }
    }
    for k in [Kind::Path33, Kind::Tria3, Kind::Cycle6, Kind::Path34, Kind::Vert5N3, Kind::Vert5P43] {
        assert!(done.get(&k).copied().unwrap_or(0) >= 10, "{k}: {done:?}");
    }
}

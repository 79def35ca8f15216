use super::*;
use crate::gen::{decorated_honeycomb, honeycomb, random_lists, triangle_chain};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cycle(n: usize) -> PlaneGraph {
    PlaneGraph::new((0..n).map(|v| vec![(v + n - 1) % n, (v + 1) % n]).collect()).unwrap()
}

fn full_lists(n: usize) -> ListAssignment {
    ListAssignment::new(vec![ColorSet::range(1, 11); n])
}

#[test]
fn restrict_removes_outside_colors() {
    let g = PlaneGraph::new(vec![vec![1], vec![0]]).unwrap();
    let l = full_lists(2);
    let psi = SetColoring::new(vec![ColorSet::from([1, 2, 3]), ColorSet::EMPTY]);
    let r = restrict_lists(&g, &l, &[1], &psi).unwrap();
    assert_eq!(r, vec![ColorSet::range(4, 11)]);
    let all = restrict_lists(&g, &l, &[0, 1], &SetColoring::empty(2)).unwrap();
    assert_eq!(all, l.as_slice());
}

#[test]
fn triangle_fully_precolored() {
    let g = cycle(3);
    let cols = vec![ColorSet::from([1, 2, 3]), ColorSet::from([4, 5, 6]), ColorSet::from([7, 8, 9])];
    let z = PrecoloredClique::new(g.graph(), vec![0, 1, 2], cols.clone()).unwrap();
    let (phi, _) = reduce_and_extend(&g, &full_lists(3), &z).unwrap();
    assert_eq!(phi.as_slice(), cols.as_slice());
}

#[test]
fn finds_each_simple_kind() {
    // a long cycle: every vertex has degree 2
    let g = cycle(20);
    let c = find_configuration(&g, &[0]).unwrap();
    assert_eq!(c.kind, Kind::Deg2);
    assert_eq!(c.vertices, vec![1]);

    // honeycomb interior: paths of 3-vertices
    let g = honeycomb(9, 6).embed().unwrap();
    let z: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| g.degree(v) == 2).collect();
    let c = find_configuration(&g, &z).unwrap();
    assert_eq!(c.kind, Kind::Path33);
    assert_eq!(c.vertices.len(), 3);
    assert!(!g.has_edge(c.vertices[0], c.vertices[2]));
}

#[test]
fn found_configurations_pass_verification() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let g = decorated_honeycomb(6, 5, 0.5, &mut rng);
        for kind in Kind::ALL {
            for c in find_all(&g, &[0], kind) {
                assert!(verify_configuration(&g, &[0], None, &c).is_ok());
                assert!(!c.vertices.contains(&0));
            }
        }
    }
}

#[test]
fn verification_rejects_tampering() {
    let g = honeycomb(9, 6).embed().unwrap();
    let z: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| g.degree(v) == 2).collect();
    let c = find_configuration(&g, &z).unwrap();
    let mut bad = c.clone();
    bad.vertices.swap(0, 1);
    assert!(verify_configuration(&g, &z, None, &bad).is_err());
    let mut bad = c.clone();
    bad.delete.clear();
    assert!(verify_configuration(&g, &z, None, &bad).is_err());
    let small = ListAssignment::new(vec![ColorSet::range(1, 9); g.vertex_count()]);
    assert!(verify_configuration(&g, &z, Some(&small), &c).is_err());
    assert!(verify_configuration(&g, &[c.vertices[0]], None, &c).is_err());
}

#[test]
fn colors_honeycomb_and_chain() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for g in [honeycomb(8, 6).embed().unwrap(), triangle_chain(4, 6), decorated_honeycomb(7, 5, 0.5, &mut rng)] {
        let l = random_lists(g.vertex_count(), 11, 33, &mut rng);
        let z = default_clique(&g, &l).unwrap();
        let (phi, stats) = reduce_and_extend(&g, &l, &z).unwrap();
        let f = DemandFunction::uniform(g.vertex_count(), 3);
        assert!(is_valid_coloring(g.graph(), &prepare(&g, &l, &z).unwrap(), &f, &phi).is_ok());
        assert!(stats.total_reductions() + stats.base_cases > 0);
    }
}

#[test]
fn rejects_bad_input() {
    let g = cycle(5);
    let l = full_lists(5);
    let z = default_clique(&g, &l).unwrap();
    assert!(matches!(reduce_and_extend(&g, &l, &z), Err(ReduceError::InvalidInput(_))));
    let g = cycle(6);
    let short = ListAssignment::new(vec![ColorSet::range(1, 10); 6]);
    let z = default_clique(&g, &short).unwrap();
    assert!(matches!(reduce_and_extend(&g, &short, &z), Err(ReduceError::InvalidInput(_))));
}

#[test]
fn independent_sets() {
    let g = PlaneGraph::new(vec![vec![], vec![], vec![]]).unwrap();
    let phi = SetColoring::new(vec![ColorSet::from([1, 2, 3]); 3]);
    assert_eq!(independence_ratio(&g, &phi).unwrap().vertices, vec![0, 1, 2]);

    let g = cycle(3);
    let phi = SetColoring::new(vec![ColorSet::from([1, 2, 3]), ColorSet::from([4, 5, 6]), ColorSet::from([7, 8, 9])]);
    let s = independence_ratio(&g, &phi).unwrap();
    assert_eq!(s.vertices.len(), 1);
    assert!(s.ratio() >= 3.0 / 11.0);

    let bad = SetColoring::new(vec![ColorSet::from([1, 2, 3]); 3]);
    assert!(independence_ratio(&g, &bad).is_err());
}

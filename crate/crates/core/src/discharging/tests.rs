use super::*;
use crate::gen::{from_coordinates, honeycomb, triangle_chain};

fn cycle(n: usize) -> PlaneGraph {
    PlaneGraph::new((0..n).map(|v| vec![(v + n - 1) % n, (v + 1) % n]).collect()).unwrap()
}

/// Hexagon `0..6` with a triangle apex `6` outside edge `0-1`.
fn hexagon_with_ear() -> PlaneGraph {
    let mut pts: Vec<(f64, f64)> = (0..6)
        .map(|i| {
            let t = std::f64::consts::PI / 3.0 * i as f64;
            (t.cos(), t.sin())
        })
        .collect();
    let (a, b) = (pts[0], pts[1]);
    pts.push(((a.0 + b.0) * 0.8, (a.1 + b.1) * 0.8));
    let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    edges.push((0, 6));
    edges.push((1, 6));
    from_coordinates(&pts, &edges).unwrap()
}

fn face_of_len(g: &PlaneGraph, len: usize) -> Vec<FaceId> {
    g.faces().iter().filter(|f| f.len() == len).map(|f| f.id).collect()
}

#[test]
fn triangle_alone() {
    let g = cycle(3);
    let s = apply_rules(&g, &[0, 1, 2]).unwrap();
    assert_eq!(s.total(), HalfInt::from_int(-12));
    assert!(s.transfers.is_empty());
    assert!(s.vertex_charge.iter().all(|&c| c == HalfInt::from_int(-2)));
}

#[test]
fn hexagon_with_precolored_vertex() {
    let g = cycle(6);
    let s = apply_rules(&g, &[0]).unwrap();
    assert_eq!(s.total(), HalfInt::from_int(-12));
    assert_eq!(s.vertex_charge[0], HalfInt::from_int(-4));
    assert_eq!(s.transfers.len(), 2);
    assert!(s.transfers.iter().all(|t| t.rule == Rule::SixPlus(Base::Zero)));
    assert_eq!(s.identity_checks.len(), 1);
    assert!(s.identity_checks[0].holds);
    let a = audit(&g, &[0]).unwrap();
    assert!(a.conserved());
    assert!(a.precolored_mismatches.is_empty());
    assert_eq!(a.negative_vertices, vec![1, 2, 3, 4, 5]);
}

#[test]
fn triangles_fed_by_long_face() {
    let g = triangle_chain(2, 3);
    let s = apply_rules(&g, &[]).unwrap();
    assert_eq!(s.total(), HalfInt::from_int(-12));
    for f in face_of_len(&g, 3) {
        assert_eq!(s.face_charge[f], HalfInt::ZERO);
        let got: HalfInt = s.ledger_of(Node::Face(f)).filter(|t| t.rule == Rule::Triangle).map(|t| t.amount).sum();
        assert_eq!(got, HalfInt::from_int(3));
    }
}

#[test]
fn honeycomb_keeps_hexagons_at_zero() {
    let g = honeycomb(9, 6).embed().unwrap();
    let s = apply_rules(&g, &[]).unwrap();
    assert_eq!(s.total(), HalfInt::from_int(-12));
    for f in face_of_len(&g, 6) {
        assert_eq!(s.face_charge[f], HalfInt::ZERO);
    }
    let interior = (0..g.vertex_count()).filter(|&v| g.degree(v) == 3);
    for v in interior {
        assert_eq!(s.vertex_charge[v], HalfInt::ZERO);
    }
}

#[test]
fn segment_golden() {
    let g = hexagon_with_ear();
    let inner = face_of_len(&g, 6)[0];
    let outer = face_of_len(&g, 7)[0];
    let segs = segments_of(&g, &[], inner).unwrap();
    assert_eq!(segs.len(), 1);
    let mut ends = segs[0].path.clone();
    ends.sort_unstable();
    assert_eq!(ends, vec![0, 1]);
    assert_eq!(segs[0].charge, HalfInt::from_int(-1));
    assert!(segs[0].is_negative());

    let segs = segments_of(&g, &[], outer).unwrap();
    assert_eq!(segs.len(), 1);
    assert_eq!(segs[0].len(), 2);
    assert_eq!(segs[0].path[1], 6);
    assert_eq!(segs[0].charge, HalfInt::from_int(-2));

    let s = apply_rules(&g, &[]).unwrap();
    assert_eq!(s.face_charge[inner], HalfInt::from_int(-1));
    assert_eq!(s.face_charge[outer], HalfInt::from_int(-1));
}

#[test]
fn precolored_vertex_on_segment_pays_the_face() {
    let g = hexagon_with_ear();
    let inner = face_of_len(&g, 6)[0];
    // vertex 0 in z: type-I at the inner face, sends 3/2
    let segs = segments_of(&g, &[0], inner).unwrap();
    assert_eq!(segs[0].charge, HalfInt::from_twice(1));
    let ty = classify_incidence(&g, &[0], 0, inner).unwrap();
    assert_eq!(ty.base, Base::One);
}

#[test]
fn rejects_bad_input() {
    let c5 = cycle(5);
    assert!(matches!(apply_rules(&c5, &[]), Err(DischargeError::ForbiddenCycle(_))));
    assert!(matches!(apply_rules(&cycle(6), &[9]), Err(DischargeError::UnknownVertex(9))));
    let two = PlaneGraph::new(vec![vec![1], vec![0], vec![3], vec![2]]).unwrap();
    assert_eq!(initial_charges(&two).unwrap_err(), DischargeError::Disconnected);
    let g = cycle(3);
    assert!(matches!(classify_incidence(&g, &[], 0, 0), Err(DischargeError::NotLongFace { .. })));
}

#[test]
fn transfer_display() {
    let t = Transfer {
        source: Node::Vertex(3),
        sink: Node::Face(7),
        amount: HalfInt::from_twice(3),
        rule: Rule::Five(Base::One),
        dart: 0,
    };
    assert_eq!(t.to_string(), "XFER v3 f7 3 R5(I)");
}

/// Two new vertices forming a triangle with `p`, placed in direction `dir`.
fn pendant_triangle(d: &mut crate::gen::Drawing, p: usize, dir: f64) -> (usize, usize) {
    let (x, y) = d.points[p];
    let a = d.add_vertex(x + 0.3 * (dir + 0.4).cos(), y + 0.3 * (dir + 0.4).sin());
    let b = d.add_vertex(x + 0.3 * (dir - 0.4).cos(), y + 0.3 * (dir - 0.4).sin());
    d.add_edge(p, a);
    d.add_edge(p, b);
    d.add_edge(a, b);
    (a, b)
}

fn deg(a: f64) -> f64 {
    a.to_radians()
}

#[test]
fn four_vertex_next_to_hexagon_pattern() {
    let mut d = crate::gen::Drawing::default();
    // hexagon x v v2 w1 w2 w3 around the origin
    let ids: Vec<usize> = [0.0, 60.0, 120.0, 180.0, 240.0, 300.0]
        .iter()
        .map(|&a: &f64| d.add_vertex(deg(a).cos(), deg(a).sin()))
        .collect();
    let (v, v2, w1, w2, w3, x) = (ids[0], ids[1], ids[2], ids[3], ids[4], ids[5]);
    for i in 0..6 {
        d.add_edge(ids[i], ids[(i + 1) % 6]);
    }
    let t1 = d.add_vertex(-1.05, 0.606);
    let t2 = d.add_vertex(-1.05, -0.606);
    d.add_edge(w1, t1);
    d.add_edge(w2, t1);
    d.add_edge(w2, t2);
    d.add_edge(w3, t2);
    let v1 = d.add_vertex(1.8, 0.6);
    let u = d.add_vertex(1.8, -0.3);
    d.add_edge(v, v1);
    d.add_edge(v, u);
    d.add_edge(v1, u);
    pendant_triangle(&mut d, v1, deg(40.0));
    pendant_triangle(&mut d, x, deg(300.0));
    pendant_triangle(&mut d, v2, deg(40.0));
    pendant_triangle(&mut d, v2, deg(100.0));
    let g = d.embed().unwrap();
    assert_eq!((g.degree(v), g.degree(x), g.degree(w2), g.degree(v2)), (4, 4, 4, 6));
    let types = classify_all(&g, &[]);
    let hits: Vec<DartId> =
        (0..g.degree(v)).map(|i| g.dart(v, i)).filter(|&e| types[e].as_ref().is_some_and(|t| t.has(Subtype::I2))).collect();
    assert_eq!(hits.len(), 1);
    let s = apply_rules(&g, &[]).unwrap();
    assert_eq!(s.sent_at(hits[0]), HalfInt::HALF);
    assert_eq!(s.total(), HalfInt::from_int(-12));
}

#[test]
fn five_vertex_between_small_triangles() {
    let mut d = crate::gen::Drawing::default();
    let v = d.add_vertex(0.0, 0.0);
    let ns: Vec<usize> = (0..5).map(|k| deg(18.0 + 72.0 * k as f64)).map(|a| d.add_vertex(a.cos(), a.sin())).collect();
    for &n in &ns {
        d.add_edge(v, n);
    }
    for (k, n) in [(0usize, ns[0]), (3, ns[3])] {
        let dir = deg(18.0 + 72.0 * k as f64);
        let (a, b) = pendant_triangle(&mut d, n, dir);
        for w in [a, b] {
            let (px, py) = d.points[w];
            let leaf = d.add_vertex(px + 0.2 * dir.cos(), py + 0.2 * dir.sin());
            d.add_edge(w, leaf);
        }
    }
    let g = d.embed().unwrap();
    let types = classify_all(&g, &[]);
    let hits: Vec<DartId> =
        (0..5).map(|i| g.dart(v, i)).filter(|&e| types[e].as_ref().is_some_and(|t| t.has(Subtype::Z3))).collect();
    assert_eq!(hits.len(), 1);
    let s = apply_rules(&g, &[]).unwrap();
    assert_eq!(s.sent_at(hits[0]), HalfInt::ZERO);
    let others: HalfInt = (0..5).map(|i| g.dart(v, i)).filter(|&e| e != hits[0]).map(|e| s.sent_at(e)).sum();
    // every other corner has a 3-vertex neighbor followed by a triangle vertex
    assert_eq!(others, HalfInt::from_int(4));
}

//! Triangles, claws and the shapes built around them.

use super::{greedy, paths, pick, reduce, take, take_with, trim, union_all, Frame, GadgetError, PendantEdge, Pin, Shape};
use crate::colorset::ColorSet;
use crate::engine::{triangle_colorable, SetColoring};

const E: ColorSet = ColorSet::EMPTY;

fn triangle(lists: [ColorSet; 3], step: &str) -> Result<[ColorSet; 3], GadgetError> {
    triangle_colorable(lists).coloring.ok_or_else(|| GadgetError::Internal(format!("{step}: union condition fails")))
}

/// A triangle, colored through the color-to-slot matching.
pub fn color_triangle(lists: &[ColorSet]) -> Result<SetColoring, GadgetError> {
    let fr = Frame::new(Shape::Triangle, lists)?;
    let verdict = triangle_colorable([lists[0], lists[1], lists[2]]);
    match verdict.coloring {
        Some(phi) => fr.finish(lists, &[], SetColoring::new(phi.to_vec())),
        None => Err(GadgetError::Hypothesis(format!("union conditions fail: {:?}", verdict.certificate.failed))),
    }
}

/// Path `v1 v2 v3 v4` plus the edge `v1 v3`, lists of sizes 5, 8, 8, 5, where
/// the triangle `v1 v2 v3` is colorable.
pub fn color_lollipop(lists: &[ColorSet]) -> Result<SetColoring, GadgetError> {
    let fr = Frame::new(Shape::Lollipop, lists)?;
    let verdict = triangle_colorable([lists[0], lists[1], lists[2]]);
    let Some(w) = verdict.coloring else {
        return Err(GadgetError::Hypothesis(format!(
            "triangle v1 v2 v3 fails the union conditions {:?}",
            verdict.certificate.failed
        )));
    };
    let l = trim(lists, &[5, 8, 8, 5], &[w[0], w[1], w[2], E]);

    let alpha = pick(l[0].union(l[2]).difference(l[1]), "lollipop: alpha")?;
    let beta = pick(l[2].difference(l[0]), "lollipop: beta")?;
    let tail = take(l[3].without(alpha).without(beta), 3, "lollipop: v4")?;
    let tri = triangle([l[0], l[1], l[2].difference(tail)], "lollipop: triangle")?;
    let phi = SetColoring::new(vec![tri[0], tri[1], tri[2], tail]);
    fr.finish(lists, &[], phi)
}

/// Center `v` (list 8) with three leaves (lists 5).
pub fn color_claw3(lists: &[ColorSet]) -> Result<SetColoring, GadgetError> {
    let fr = Frame::new(Shape::Claw3, lists)?;
    let l = trim(lists, &[8, 5, 5, 5], &[E; 4]);
    let mut hits = ColorSet::EMPTY;
    for i in 1..=3 {
        hits.insert(pick(l[0].difference(l[i]), "claw3: alpha")?);
    }
    let center = take_with(l[0], hits, 3, "claw3: center")?;
    let mut phi = vec![center];
    for leaf in &l[1..4] {
        phi.push(take(leaf.difference(center), 3, "claw3: leaf")?);
    }
    fr.finish(lists, &[], SetColoring::new(phi))
}

/// Center `v` (list 8) with four neighbors. Without the edge `v3 v4` all
/// leaves have lists of size 5; with it, `v3` and `v4` have lists of size 8
/// and the triangle `v v3 v4` must be colorable.
pub fn color_claw4(lists: &[ColorSet], edge: bool) -> Result<SetColoring, GadgetError> {
    let shape = Shape::Claw4 { edge };
    let fr = Frame::new(shape, lists)?;
    if !edge {
        let l = trim(lists, &[8, 5, 5, 5, 5], &[E; 5]);
        let sets: Vec<ColorSet> =
            (1..=4).map(|i| take(l[0].difference(l[i]), 3, "claw4: A_i")).collect::<Result<_, _>>()?;
        // a color shared by two of the sets exists since 4 * 3 > 8
        let shared = pick(
            l[0].iter().filter(|&c| sets.iter().filter(|s| s.contains(c)).count() >= 2).collect(),
            "claw4: shared color",
        )?;
        let mut center = ColorSet::singleton(shared);
        for &s in &sets {
            if s.is_disjoint(center) {
                center.insert(s.min().unwrap());
            }
        }
        let center = take_with(l[0], center, 3, "claw4: center")?;
        let mut phi = vec![center];
        for leaf in &l[1..5] {
            phi.push(take(leaf.difference(center), 3, "claw4: leaf")?);
        }
        return fr.finish(lists, &[], SetColoring::new(phi));
    }

    let w = fr.witness(lists, &shape.required_colorable())?;
    let l = trim(lists, &[8, 5, 5, 8, 8], &[w[0], E, E, w[3], w[4]]);
    let outer = l[3].union(l[4]);
    let alpha = pick(l[0].iter().filter(|&c| outer.with(c).len() >= 9).collect(), "claw4-edge: alpha")?;
    let a1 = l[1].without(alpha);
    let a2 = l[2].without(alpha);
    let (b1, b2) = if let Some(c) = a1.intersection(a2).min() {
        (c, c)
    } else if let Some(c) = a1.difference(l[0]).min() {
        (c, pick(a2, "claw4-edge: beta2")?)
    } else {
        (pick(a1, "claw4-edge: beta1")?, pick(a2.difference(l[0]), "claw4-edge: beta2 outside L(v)")?)
    };
    let p1 = take_with(a1, ColorSet::singleton(b1), 3, "claw4-edge: v1")?;
    let p2 = take_with(a2, ColorSet::singleton(b2), 3, "claw4-edge: v2")?;
    let tri = triangle([l[0].difference(p1.union(p2)), l[3], l[4]], "claw4-edge: triangle")?;
    fr.finish(lists, &[], SetColoring::new(vec![tri[0], p1, p2, tri[1], tri[2]]))
}

/// Center `v` with neighbors `v1 v2 v3`, a vertex `u1` hanging off `v1`, and at
/// most one edge among `v1 v2 v3`. Vertex order: `v, v1, v2, v3, u1`. Lists:
/// 5 on `v` and `u1`, `2 + 3 deg(vi)` on `vi`; the graph minus `v1` must be
/// colorable.
pub fn color_claw3_pendant(lists: &[ColorSet], extra: PendantEdge) -> Result<SetColoring, GadgetError> {
    if extra == PendantEdge::V1V3 {
        // relabel v2 <-> v3
        let swapped = swap23(lists);
        return color_claw3_pendant(&swapped, PendantEdge::V1V2).map(|phi| SetColoring::new(swap23(phi.as_slice())));
    }
    let shape = Shape::Claw3Pendant(extra);
    let fr = Frame::new(shape, lists)?;
    let w = fr.witness(lists, &shape.required_colorable())?;
    let l = trim(lists, &shape.list_sizes(), w.as_slice());
    let [v, v1, v2, v3, u1] = [l[0], l[1], l[2], l[3], l[4]];

    let phi = match extra {
        PendantEdge::V1V2 => {
            let p2 = take(v2.difference(v), 3, "claw3-pendant: v2 avoiding L(v)")?;
            // path u1 v1 v v3
            let path = paths::color_p4(&[u1, v1.difference(p2), v, v3], &[])
                .map_err(|e| GadgetError::Internal(format!("claw3-pendant: path: {e}")))?;
            vec![path[2], path[1], p2, path[3], path[0]]
        }
        PendantEdge::V2V3 => {
            let outer = v2.union(v3);
            let alpha = pick(v.iter().filter(|&c| outer.with(c).len() >= 9).collect(), "claw3-pendant: alpha")?;
            let beta = pick(v1.difference(u1).without(alpha), "claw3-pendant: beta")?;
            let beta2 = pick(v1.difference(v).without(alpha).without(beta), "claw3-pendant: beta'")?;
            let p1 = take_with(v1.without(alpha), ColorSet::from([beta, beta2]), 3, "claw3-pendant: v1")?;
            let pu = take(u1.difference(p1), 3, "claw3-pendant: u1")?;
            let tri = triangle([v.difference(p1), v2, v3], "claw3-pendant: triangle")?;
            vec![tri[0], p1, tri[1], tri[2], pu]
        }
        _ => {
            let beta = pick(v.difference(v2), "claw3-pendant: beta")?;
            let beta2 = pick(v.difference(v3), "claw3-pendant: beta'")?;
            let path = paths::color_p3(&[v, v1, u1], &[Pin::new(0, beta), Pin::new(0, beta2)])
                .map_err(|e| GadgetError::Internal(format!("claw3-pendant: path: {e}")))?;
            let p2 = take(v2.difference(path[0]), 3, "claw3-pendant: v2")?;
            let p3 = take(v3.difference(path[0]), 3, "claw3-pendant: v3")?;
            vec![path[0], path[1], p2, p3, path[2]]
        }
    };
    fr.finish(lists, &[], SetColoring::new(phi))
}

fn swap23(items: &[ColorSet]) -> Vec<ColorSet> {
    let mut out = items.to_vec();
    out.swap(2, 3);
    out
}

/// Path `u1 v1 v v2 u2`, a vertex `v3` adjacent to `v`, and possibly the edge
/// `v1 v3`. Vertex order: `u1, v1, v, v2, u2, v3`. Lists: 5 on `u1`, `v`,
/// `u2`; 8 on `v2`; `2 + 3 deg(v3)` on `v3`; `3 deg(v1) - 1` on `v1`. The
/// graph minus `v2` must be colorable.
pub fn color_path_plus_leaf(lists: &[ColorSet], edge: bool) -> Result<SetColoring, GadgetError> {
    const U1: usize = 0;
    const V1: usize = 1;
    const V: usize = 2;
    const V2: usize = 3;
    const U2: usize = 4;
    const V3: usize = 5;
    let shape = Shape::PathPlusLeaf { edge };
    let fr = Frame::new(shape, lists)?;
    let w = fr.witness(lists, &shape.required_colorable())?;
    let l = trim(lists, &shape.list_sizes(), w.as_slice());

    if edge {
        let alpha = pick(l[V].union(l[V1]).difference(l[V3]), "path-plus-leaf: alpha")?;
        let beta = pick(l[V2].difference(l[U2]).without(alpha), "path-plus-leaf: beta")?;
        let gammas = take(l[V2].difference(l[V]), 2, "path-plus-leaf: gamma, gamma'")?;
        // pad away from L(v) and alpha so that A can still be found
        let req = gammas.with(beta);
        let p2 = req
            .union(l[V2].difference(l[V]).without(alpha))
            .extend_to(req, 3)
            .or_else(|| req.union(l[V2].without(alpha)).extend_to(req, 3))
            .ok_or_else(|| GadgetError::Internal("path-plus-leaf: v2".into()))?;
        let pu2 = take(l[U2].difference(p2), 3, "path-plus-leaf: u2")?;
        let room = l[V].difference(p2);
        let a_req = if room.contains(alpha) { ColorSet::singleton(alpha) } else { E };
        let a = take_with(room, a_req, 4, "path-plus-leaf: A")?;
        let kappa = if a.contains(alpha) {
            take(l[V1].difference(a), 2, "path-plus-leaf: kappa, kappa'")?
        } else {
            take_with(l[V1].difference(a), ColorSet::singleton(alpha), 2, "path-plus-leaf: kappa = alpha")?
        };
        let pu1 = take(l[U1].difference(kappa), 3, "path-plus-leaf: u1")?;
        let b = l[V1].difference(pu1);
        let tri = triangle([b, a, l[V3]], "path-plus-leaf: triangle")?;
        let phi = SetColoring::new(vec![pu1, tri[0], tri[1], p2, pu2, tri[2]]);
        return fr.finish(lists, &[], phi);
    }

    let alpha = pick(
        l[V].difference(l[V3]).iter().filter(|&c| !l[V1].difference(l[U1]).without(c).is_empty()).collect(),
        "path-plus-leaf: alpha",
    )?;
    let beta = pick(l[V1].difference(l[U1]).without(alpha), "path-plus-leaf: beta")?;
    let alpha2 = if l[V1].contains(alpha) {
        pick(l[V].difference(l[V1]), "path-plus-leaf: alpha' outside L(v1)")?
    } else {
        pick(l[V].without(alpha).without(beta), "path-plus-leaf: alpha'")?
    };
    let beta2 = if l[V].contains(beta) {
        pick(l[V1].difference(l[V]), "path-plus-leaf: beta' outside L(v)")?
    } else {
        pick(l[V1].without(alpha).without(alpha2).without(beta), "path-plus-leaf: beta'")?
    };
    let gamma = pick(l[U1].difference(l[V1]), "path-plus-leaf: gamma")?;
    let eps = pick(l[V3].difference(l[V]), "path-plus-leaf: epsilon")?;
    let kappa = pick(l[V2].difference(l[U2]).without(alpha).without(alpha2), "path-plus-leaf: kappa")?;

    let mut psi = [E; 6];
    psi[U1] = ColorSet::singleton(gamma);
    psi[V1] = ColorSet::from([beta, beta2]);
    psi[V] = ColorSet::from([alpha, alpha2]);
    psi[V3] = ColorSet::singleton(eps);
    psi[V2] = ColorSet::singleton(kappa);
    let mut sizes = [0; 6];
    sizes[U1] = 3;
    sizes[V3] = 3;
    sizes[V1] = 2;
    sizes[V] = 1;
    sizes[V2] = 5;
    sizes[U2] = 5;
    let (l1, f1) = reduce(&fr.graph, &l, &[3; 6], &psi, &sizes, "path-plus-leaf: reduction")?;
    let rest = greedy(&fr.graph, &l1, &f1, &[V, V3, V1, U1, V2, U2], "path-plus-leaf: greedy")?;
    let phi = union_all(&[&psi, &rest]);
    fr.finish(lists, &[], phi)
}

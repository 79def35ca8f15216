//! How a vertex meets a face of length at least 6.
//!
//! A corner of a face is identified with the dart leaving the corner's vertex
//! along the face walk. Walking `prev -> v -> next`, the faces across the
//! edges `v prev` and `v next` decide the base type; the subtypes look a few
//! steps further along the face and around `v`.

use std::fmt;

use super::DischargeError;
use crate::graph::{DartId, FaceId, PlaneGraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Base {
    /// Triangles across both edges.
    Two,
    /// A triangle across exactly one edge.
    One,
    Zero,
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Base::Two => "II",
            Base::One => "I",
            Base::Zero => "0",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subtype {
    I1,
    I2,
    I3,
    I4,
    Z1,
    Z2,
    Z3,
}

impl Subtype {
    pub const ALL: [Subtype; 7] = [Subtype::I1, Subtype::I2, Subtype::I3, Subtype::I4, Subtype::Z1, Subtype::Z2, Subtype::Z3];

    fn bit(self) -> u8 {
        1 << self as u8
    }
}

impl fmt::Display for Subtype {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subtype::I1 => "I-1",
            Subtype::I2 => "I-2",
            Subtype::I3 => "I-3",
            Subtype::I4 => "I-4",
            Subtype::Z1 => "0-1",
            Subtype::Z2 => "0-2",
            Subtype::Z3 => "0-3",
        })
    }
}

/// Which way a labeled pattern runs relative to the face walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// The pattern's `v1` comes before `v` on the walk.
    Along,
    Against,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceType {
    pub base: Base,
    bits: u8,
    /// Orientations under which a direction-dependent pattern matched.
    pub matched: Vec<(Subtype, Orientation)>,
}

impl IncidenceType {
    fn new(base: Base) -> Self {
        IncidenceType { base, bits: 0, matched: Vec::new() }
    }

    fn set(&mut self, s: Subtype) {
        self.bits |= s.bit();
    }

    pub fn has(&self, s: Subtype) -> bool {
        self.bits & s.bit() != 0
    }

    pub fn has_any(&self, s: &[Subtype]) -> bool {
        s.iter().any(|&x| self.has(x))
    }

    pub fn subtypes(&self) -> impl Iterator<Item = Subtype> + '_ {
        Subtype::ALL.into_iter().filter(|&s| self.has(s))
    }
}

impl fmt::Display for IncidenceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "type-{}", self.base)?;
        for s in self.subtypes() {
            write!(f, " {s}")?;
        }
        Ok(())
    }
}

/// Degree classes and face lookups for one graph and precolored set.
pub(super) struct Local<'a> {
    g: &'a PlaneGraph,
    internal: Vec<bool>,
    on_triangle: Vec<bool>,
}

struct Corner {
    v: VertexId,
    face: FaceId,
    pos: usize,
    prev: VertexId,
    next: VertexId,
    tri_prev: bool,
    tri_next: bool,
}

impl<'a> Local<'a> {
    pub(super) fn new(g: &'a PlaneGraph, z: &[VertexId]) -> Self {
        let mut internal = vec![true; g.vertex_count()];
        for &v in z {
            internal[v] = false;
        }
        let mut on_triangle = vec![false; g.vertex_count()];
        for f in g.faces().iter().filter(|f| f.len() == 3) {
            for &v in &f.walk {
                on_triangle[v] = true;
            }
        }
        Local { g, internal, on_triangle }
    }

    pub(super) fn graph(&self) -> &'a PlaneGraph {
        self.g
    }

    pub(super) fn is_k(&self, v: VertexId, k: usize) -> bool {
        self.internal[v] && self.g.degree(v) == k
    }

    pub(super) fn is_kplus(&self, v: VertexId, k: usize) -> bool {
        !self.internal[v] || self.g.degree(v) >= k
    }

    pub(super) fn on_triangle(&self, v: VertexId) -> bool {
        self.on_triangle[v]
    }

    fn is_triangle_face(&self, f: FaceId, not: FaceId) -> bool {
        f != not && self.g.face(f).len() == 3
    }

    fn corner(&self, d: DartId) -> Corner {
        let g = self.g;
        let v = g.tail(d);
        let next = g.head(d);
        let prev = g.rotation_pred(v, next);
        let face = g.face_of(d);
        let across_next = g.face_of(g.reverse(d));
        let across_prev = g.face_of(g.dart_between(v, prev).expect("rotation neighbor"));
        Corner {
            v,
            face,
            pos: g.position_in_face(d),
            prev,
            next,
            tri_prev: self.is_triangle_face(across_prev, face),
            tri_next: self.is_triangle_face(across_next, face),
        }
    }

    fn walk_at(&self, face: FaceId, pos: usize, offset: isize) -> VertexId {
        let walk = &self.g.face(face).walk;
        let m = walk.len() as isize;
        walk[(pos as isize + offset).rem_euclid(m) as usize]
    }

    fn base_of(&self, d: DartId) -> Base {
        let c = self.corner(d);
        match (c.tri_prev, c.tri_next) {
            (true, true) => Base::Two,
            (false, false) => Base::Zero,
            _ => Base::One,
        }
    }

    /// Types of all corners, indexed by dart; `None` for corners of faces
    /// shorter than 6.
    pub(super) fn all_types(&self) -> Vec<Option<IncidenceType>> {
        (0..self.g.dart_count())
            .map(|d| (self.g.face(self.g.face_of(d)).len() >= 6).then(|| self.classify(d)))
            .collect()
    }

    pub(super) fn classify(&self, d: DartId) -> IncidenceType {
        let c = self.corner(d);
        let mut ty = IncidenceType::new(self.base_of(d));
        match ty.base {
            Base::One if self.is_k(c.v, 4) => self.four_one(&c, &mut ty),
            Base::One if self.is_k(c.v, 5) => self.five_one(&c, &mut ty),
            Base::Zero if self.is_k(c.v, 5) => self.five_zero(&c, &mut ty),
            _ => {}
        }
        ty
    }

    /// The triangle side of a type-I corner as `(v1, v2, sign)`: `v1` is
    /// across the triangle edge and `sign` steps from `v1` toward `v2`
    /// along the walk.
    fn triangle_side(&self, c: &Corner) -> (VertexId, VertexId, isize) {
        if c.tri_prev {
            (c.prev, c.next, 1)
        } else {
            (c.next, c.prev, -1)
        }
    }

    /// Rotation step at `v` from `a` in the direction matching `sign`: with
    /// `sign = 1` the walk `v1 -> v -> v2` turns by the rotation successor.
    fn turn(&self, v: VertexId, a: VertexId, sign: isize) -> VertexId {
        if sign > 0 {
            self.g.rotation_succ(v, a)
        } else {
            self.g.rotation_pred(v, a)
        }
    }

    fn four_one(&self, c: &Corner, ty: &mut IncidenceType) {
        let (v1, v2, sign) = self.triangle_side(c);
        if !(self.is_kplus(v1, 4) && self.is_kplus(v2, 5)) {
            return;
        }
        // the face across v v2 continues v2 -> v -> x
        let x = self.turn(c.v, v2, sign);
        if self.is_k(x, 3) {
            ty.set(Subtype::I1);
        }
        if self.is_k(x, 4) && self.six_cycle_pattern(c.face, c.v, v2, x) {
            ty.set(Subtype::I2);
        }
    }

    /// The face across `v v2` (away from `face`) is a 6-cycle
    /// `x v v2 w1 w2 w3` with `w1`, `w3` 3-vertices and `w2` a 4-vertex with
    /// triangles across both of its edges on that face.
    fn six_cycle_pattern(&self, face: FaceId, v: VertexId, v2: VertexId, x: VertexId) -> bool {
        let g = self.g;
        let inward = g.dart_between(v2, v).expect("edge");
        let outward = g.reverse(inward);
        let (d, ahead) = match (g.face_of(inward) != face, g.face_of(outward) != face) {
            (true, _) => (inward, true),
            (false, true) => (outward, false),
            _ => return false,
        };
        let other = g.face_of(d);
        let f = g.face(other);
        if f.len() != 6 || !f.is_cycle() {
            return false;
        }
        let pos = g.position_in_face(d);
        // offsets of x, w1, w2, w3 from the tail of d
        let [ox, o1, o2, o3] = if ahead { [2, 5, 4, 3] } else { [5, 2, 3, 4] };
        if self.walk_at(other, pos, ox) != x {
            return false;
        }
        let (w1, w2, w3) = (self.walk_at(other, pos, o1), self.walk_at(other, pos, o2), self.walk_at(other, pos, o3));
        let w2_dart = f.darts[(pos + o2 as usize) % 6];
        self.is_k(w1, 3) && self.is_k(w3, 3) && self.is_k(w2, 4) && self.base_of(w2_dart) == Base::Two
    }

    fn five_one(&self, c: &Corner, ty: &mut IncidenceType) {
        let (v1, v2, sign) = self.triangle_side(c);
        if !self.is_k(v1, 3) {
            return;
        }
        let v0 = self.walk_at(c.face, c.pos, -2 * sign);
        let v3 = self.walk_at(c.face, c.pos, 2 * sign);
        let x1 = self.turn(c.v, v2, sign);
        let x2 = self.turn(c.v, x1, sign);
        let x3 = self.turn(c.v, x2, sign);
        if self.is_k(v2, 3) && self.is_k(v3, 3) {
            ty.set(Subtype::I3);
        }
        if self.is_k(v0, 3)
            && self.is_k(x1, 3)
            && self.in_triangle(x1, |y| self.is_kplus(y, 4) && y != x2 && y != x3)
        {
            ty.set(Subtype::I4);
        }
    }

    fn five_zero(&self, c: &Corner, ty: &mut IncidenceType) {
        for (orientation, v1, v2, sign) in
            [(Orientation::Along, c.prev, c.next, 1), (Orientation::Against, c.next, c.prev, -1)]
        {
            let v3 = self.walk_at(c.face, c.pos, 2 * sign);
            let x1 = self.turn(c.v, v2, sign);
            let x2 = self.turn(c.v, x1, sign);
            let x3 = self.turn(c.v, x2, sign);
            if self.is_k(v1, 3) && self.is_k(v2, 3) {
                ty.set(Subtype::Z1);
            }
            if self.is_k(v2, 3) && self.is_k(v3, 3) {
                ty.set(Subtype::Z2);
                ty.matched.push((Subtype::Z2, orientation));
            }
            let small = |y: VertexId| self.is_k(y, 3) && y != x2;
            if small(x1) && small(x3) && self.in_triangle(x1, small) && self.in_triangle(x3, small) {
                ty.set(Subtype::Z3);
            }
        }
    }

    /// Whether `x` lies on a triangle `x y z` with `ok(y)` and `ok(z)`.
    fn in_triangle(&self, x: VertexId, ok: impl Fn(VertexId) -> bool) -> bool {
        let ns = self.g.graph().neighbors(x);
        ns.iter().enumerate().any(|(i, &y)| ok(y) && ns[i + 1..].iter().any(|&z| ok(z) && self.g.has_edge(y, z)))
    }
}

/// Type of the incidence of `v` with the long face `f`, at the first corner
/// of `f` at `v`.
pub fn classify_incidence(g: &PlaneGraph, z: &[VertexId], v: VertexId, f: FaceId) -> Result<IncidenceType, DischargeError> {
    if v >= g.vertex_count() {
        return Err(DischargeError::UnknownVertex(v));
    }
    let face = g.face(f);
    if face.len() < 6 {
        return Err(DischargeError::NotLongFace { face: f, len: face.len() });
    }
    let pos = face.walk.iter().position(|&w| w == v).ok_or(DischargeError::NotOnFace { vertex: v, face: f })?;
    Ok(Local::new(g, z).classify(face.darts[pos]))
}

/// Types of every corner, indexed by the outgoing dart at the corner;
/// `None` for corners of faces shorter than 6.
pub fn classify_all(g: &PlaneGraph, z: &[VertexId]) -> Vec<Option<IncidenceType>> {
    Local::new(g, z).all_types()
}

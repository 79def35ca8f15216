//! Charge bookkeeping for plane graphs without 4- and 5-cycles.
//!
//! Vertices start with `2 deg - 6` and faces with `|f| - 6`, which sums to
//! `-12` on a connected plane graph. The redistribution rules move charge from
//! 4⁺-vertices to faces of length at least 6 and from those faces to adjacent
//! triangles. Amounts are multiples of 1/2, so everything is exact.

mod halfint;
mod incidence;
mod segments;

use std::fmt;

use thiserror::Error;

use crate::graph::{DartId, FaceId, PlaneGraph, VertexId};

pub use halfint::HalfInt;
pub use incidence::{classify_all, classify_incidence, Base, IncidenceType, Orientation, Subtype};
pub use segments::{segments_of, Segment};

use incidence::Local;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DischargeError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has a forbidden cycle {0:?}")]
    ForbiddenCycle(Vec<VertexId>),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),
    #[error("face {face} has length {len}, not at least 6")]
    NotLongFace { face: FaceId, len: usize },
    #[error("vertex {vertex} is not on face {face}")]
    NotOnFace { vertex: VertexId, face: FaceId },
}

/// Something that holds charge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Node {
    Vertex(VertexId),
    Face(FaceId),
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Vertex(v) => write!(f, "v{v}"),
            Node::Face(x) => write!(f, "f{x}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    /// Long face to an adjacent triangle.
    Triangle,
    Four(Base),
    Five(Base),
    SixPlus(Base),
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::Triangle => f.write_str("Rt"),
            Rule::Four(b) => write!(f, "R4({b})"),
            Rule::Five(b) => write!(f, "R5({b})"),
            Rule::SixPlus(b) => write!(f, "R6({b})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    pub source: Node,
    pub sink: Node,
    pub amount: HalfInt,
    pub rule: Rule,
    /// The dart at whose corner (vertex rules) or along whose edge
    /// (triangle rule) the transfer happens.
    pub dart: DartId,
}

impl fmt::Display for Transfer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XFER {} {} {} {}", self.source, self.sink, self.amount.twice_value(), self.rule)
    }
}

/// Result of a check of `d_II + d_I / 2 = t` at one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub vertex: VertexId,
    pub triangles: usize,
    pub type_two: usize,
    pub type_one: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeState {
    pub vertex_charge: Vec<HalfInt>,
    pub face_charge: Vec<HalfInt>,
    pub transfers: Vec<Transfer>,
    /// Identity checks at 6⁺-vertices, one per vertex where it applies.
    pub identity_checks: Vec<IdentityCheck>,
    /// 6⁺-vertices where the identity does not apply: some corner lies in a
    /// face of length other than 3 or at least 6, or two triangle corners
    /// are consecutive.
    pub identity_skipped: Vec<VertexId>,
}

impl ChargeState {
    pub fn total(&self) -> HalfInt {
        self.vertex_charge.iter().chain(&self.face_charge).copied().sum()
    }

    pub fn charge(&self, node: Node) -> HalfInt {
        match node {
            Node::Vertex(v) => self.vertex_charge[v],
            Node::Face(f) => self.face_charge[f],
        }
    }

    /// Amount `v` sends to the face at the corner of dart `d`.
    pub fn sent_at(&self, d: DartId) -> HalfInt {
        self.transfers
            .iter()
            .filter(|t| t.dart == d && matches!(t.source, Node::Vertex(_)))
            .map(|t| t.amount)
            .sum()
    }

    /// Transfers touching `node`.
    pub fn ledger_of(&self, node: Node) -> impl Iterator<Item = &Transfer> {
        self.transfers.iter().filter(move |t| t.source == node || t.sink == node)
    }

    pub fn identity_failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.identity_checks.iter().filter(|c| !c.holds)
    }
}

/// `2 deg(v) - 6` on vertices and `|f| - 6` on faces.
pub fn initial_charges(g: &PlaneGraph) -> Result<ChargeState, DischargeError> {
    if !g.graph().is_connected() {
        return Err(DischargeError::Disconnected);
    }
    let vertex_charge = (0..g.vertex_count()).map(|v| HalfInt::from_int(2 * g.degree(v) as i64 - 6)).collect();
    let face_charge = g.faces().iter().map(|f| HalfInt::from_int(f.len() as i64 - 6)).collect();
    Ok(ChargeState {
        vertex_charge,
        face_charge,
        transfers: Vec::new(),
        identity_checks: Vec::new(),
        identity_skipped: Vec::new(),
    })
}

fn check_input(g: &PlaneGraph, z: &[VertexId]) -> Result<(), DischargeError> {
    if let Some(&v) = z.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(DischargeError::UnknownVertex(v));
    }
    if let Some(c) = g.forbidden_cycles().into_iter().next() {
        return Err(DischargeError::ForbiddenCycle(c));
    }
    Ok(())
}

/// Initial charges followed by one simultaneous pass of all rules.
pub fn apply_rules(g: &PlaneGraph, z: &[VertexId]) -> Result<ChargeState, DischargeError> {
    check_input(g, z)?;
    let mut state = initial_charges(g)?;
    let local = Local::new(g, z);
    let types = local.all_types();

    for face in g.faces().iter().filter(|f| f.len() >= 6) {
        for &d in &face.darts {
            let other = g.face_of(g.reverse(d));
            if other != face.id && g.face(other).len() == 3 {
                state.transfers.push(Transfer {
                    source: Node::Face(face.id),
                    sink: Node::Face(other),
                    amount: HalfInt::ONE,
                    rule: Rule::Triangle,
                    dart: d,
                });
            }
        }
    }

    for v in 0..g.vertex_count() {
        let rule: fn(Base) -> Rule = if local.is_k(v, 4) {
            Rule::Four
        } else if local.is_k(v, 5) {
            Rule::Five
        } else if local.is_kplus(v, 6) {
            Rule::SixPlus
        } else {
            continue;
        };
        for i in 0..g.degree(v) {
            let d = g.dart(v, i);
            let Some(ty) = &types[d] else { continue };
            let amount = match rule(ty.base) {
                Rule::Four(base) => four_amount(&local, &types, v, d, base, ty),
                Rule::Five(base) => five_amount(&local, &types, v, d, base, ty),
                Rule::SixPlus(base) => match base {
                    Base::Two => HalfInt::from_int(2),
                    Base::One => HalfInt::from_twice(3),
                    Base::Zero => HalfInt::ONE,
                },
                Rule::Triangle => unreachable!(),
            };
            if amount != HalfInt::ZERO {
                state.transfers.push(Transfer {
                    source: Node::Vertex(v),
                    sink: Node::Face(g.face_of(d)),
                    amount,
                    rule: rule(ty.base),
                    dart: d,
                });
            }
        }
        if local.is_kplus(v, 6) {
            check_identity(g, &types, v, &mut state);
        }
    }

    for t in &state.transfers {
        let (src, dst) = (t.source, t.sink);
        *slot(&mut state.vertex_charge, &mut state.face_charge, src) -= t.amount;
        *slot(&mut state.vertex_charge, &mut state.face_charge, dst) += t.amount;
    }
    Ok(state)
}

fn slot<'a>(vs: &'a mut [HalfInt], fs: &'a mut [HalfInt], node: Node) -> &'a mut HalfInt {
    match node {
        Node::Vertex(v) => &mut vs[v],
        Node::Face(f) => &mut fs[f],
    }
}

/// Whether some other long-face corner of `v` carries one of `subtypes`.
fn elsewhere(g: &PlaneGraph, types: &[Option<IncidenceType>], v: VertexId, d: DartId, subtypes: &[Subtype]) -> bool {
    let f = g.face_of(d);
    (0..g.degree(v)).map(|i| g.dart(v, i)).any(|e| {
        e != d && g.face_of(e) != f && types[e].as_ref().is_some_and(|t| subtypes.iter().any(|&s| t.has(s)))
    })
}

fn four_amount(
    local: &Local,
    types: &[Option<IncidenceType>],
    v: VertexId,
    d: DartId,
    base: Base,
    ty: &IncidenceType,
) -> HalfInt {
    let weak = [Subtype::I1, Subtype::I2];
    match base {
        Base::Two => HalfInt::ONE,
        Base::One if ty.has_any(&weak) => HalfInt::HALF,
        Base::One => HalfInt::ONE,
        Base::Zero => {
            if !local.on_triangle(v) || elsewhere(local.graph(), types, v, d, &weak) {
                HalfInt::HALF
            } else {
                HalfInt::ZERO
            }
        }
    }
}

fn five_amount(
    local: &Local,
    types: &[Option<IncidenceType>],
    v: VertexId,
    d: DartId,
    base: Base,
    ty: &IncidenceType,
) -> HalfInt {
    match base {
        Base::Two if elsewhere(local.graph(), types, v, d, &[Subtype::I3]) => HalfInt::ONE,
        Base::Two => HalfInt::from_int(2),
        Base::One if ty.has_any(&[Subtype::I3, Subtype::I4]) => HalfInt::from_twice(3),
        Base::One => HalfInt::ONE,
        Base::Zero if ty.has_any(&[Subtype::Z1, Subtype::Z2]) => HalfInt::ONE,
        Base::Zero if !ty.has(Subtype::Z3) => HalfInt::HALF,
        Base::Zero => HalfInt::ZERO,
    }
}

fn check_identity(g: &PlaneGraph, types: &[Option<IncidenceType>], v: VertexId, state: &mut ChargeState) {
    let deg = g.degree(v);
    let lens: Vec<usize> = (0..deg).map(|i| g.face(g.face_of(g.dart(v, i))).len()).collect();
    let applies = deg >= 2
        && lens.iter().all(|&l| l == 3 || l >= 6)
        && (0..deg).all(|i| !(lens[i] == 3 && lens[(i + 1) % deg] == 3));
    if !applies {
        state.identity_skipped.push(v);
        return;
    }
    let triangles = lens.iter().filter(|&&l| l == 3).count();
    let mut type_two = 0;
    let mut type_one = 0;
    for i in 0..deg {
        match types[g.dart(v, i)].as_ref().map(|t| t.base) {
            Some(Base::Two) => type_two += 1,
            Some(Base::One) => type_one += 1,
            _ => {}
        }
    }
    let holds = 2 * type_two + type_one == 2 * triangles;
    state.identity_checks.push(IdentityCheck { vertex: v, triangles, type_two, type_one, holds });
}

/// Final charges with the negative entries explained.
#[derive(Debug, Clone)]
pub struct Audit {
    pub initial_total: HalfInt,
    pub state: ChargeState,
    /// Internal vertices only; precolored ones are covered by the mismatch list.
    pub negative_vertices: Vec<VertexId>,
    pub negative_faces: Vec<FaceId>,
    /// Precolored vertices whose final charge differs from `deg - 6`.
    pub precolored_mismatches: Vec<VertexId>,
}

impl Audit {
    pub fn final_total(&self) -> HalfInt {
        self.state.total()
    }

    pub fn conserved(&self) -> bool {
        self.initial_total == self.final_total() && self.initial_total == HalfInt::from_int(-12)
    }

    /// Human-readable report, one line per negative entry followed by the
    /// transfers that touch it.
    pub fn render(&self, g: &PlaneGraph) -> String {
        let mut out = String::new();
        out.push_str(&format!("total initial={} final={}\n", self.initial_total, self.final_total()));
        for &v in &self.negative_vertices {
            out.push_str(&format!("negative v{v} deg={} charge={}\n", g.degree(v), self.state.vertex_charge[v]));
            for t in self.state.ledger_of(Node::Vertex(v)) {
                out.push_str(&format!("  {t}\n"));
            }
        }
        for &f in &self.negative_faces {
            out.push_str(&format!("negative f{f} len={} charge={}\n", g.face(f).len(), self.state.face_charge[f]));
            for t in self.state.ledger_of(Node::Face(f)) {
                out.push_str(&format!("  {t}\n"));
            }
        }
        for &z in &self.precolored_mismatches {
            out.push_str(&format!("precolored v{z} charge={} expected={}\n", self.state.vertex_charge[z], g.degree(z) as i64 - 6));
        }
        let failed = self.state.identity_failures().count();
        out.push_str(&format!(
            "identity checked={} skipped={} failed={failed}\n",
            self.state.identity_checks.len(),
            self.state.identity_skipped.len()
        ));
        out
    }
}

pub fn audit(g: &PlaneGraph, z: &[VertexId]) -> Result<Audit, DischargeError> {
    let initial_total = initial_charges(g)?.total();
    let state = apply_rules(g, z)?;
    let negative_vertices =
        (0..g.vertex_count()).filter(|&v| !z.contains(&v) && state.vertex_charge[v].is_negative()).collect();
    let negative_faces = (0..g.faces().len()).filter(|&f| state.face_charge[f].is_negative()).collect();
    let precolored_mismatches =
        z.iter().copied().filter(|&v| state.vertex_charge[v] != HalfInt::from_int(g.degree(v) as i64 - 6)).collect();
    Ok(Audit { initial_total, state, negative_vertices, negative_faces, precolored_mismatches })
}

#[cfg(test)]
mod tests;

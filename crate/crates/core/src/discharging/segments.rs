use super::{apply_rules, ChargeState, DischargeError, HalfInt};
use crate::graph::{FaceId, PlaneGraph, VertexId};

/// A maximal run of boundary edges of a long face that all have a triangle
/// on their other side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub face: FaceId,
    /// Walk positions of `u0..ut`.
    pub positions: Vec<usize>,
    pub path: Vec<VertexId>,
    /// Charge the face gets from the path's vertices minus what it passes on
    /// to the triangles along the path.
    pub charge: HalfInt,
}

impl Segment {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.path.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.path.len() < 2
    }

    pub fn is_negative(&self) -> bool {
        self.charge.is_negative()
    }
}

/// Segments of `f` with charges, after applying the rules.
pub fn segments_of(g: &PlaneGraph, z: &[VertexId], f: FaceId) -> Result<Vec<Segment>, DischargeError> {
    let state = apply_rules(g, z)?;
    Ok(segments_in(g, &state, f))
}

pub(crate) fn segments_in(g: &PlaneGraph, state: &ChargeState, f: FaceId) -> Vec<Segment> {
    let face = g.face(f);
    let m = face.len();
    if m < 6 {
        return Vec::new();
    }
    let triangle_edge: Vec<bool> = face
        .darts
        .iter()
        .map(|&d| {
            let other = g.face_of(g.reverse(d));
            other != f && g.face(other).len() == 3
        })
        .collect();
    let Some(start) = triangle_edge.iter().position(|&t| !t) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut i = 1;
    while i <= m {
        let e = (start + i) % m;
        if !triangle_edge[e] {
            i += 1;
            continue;
        }
        let mut positions = vec![e];
        let mut j = i;
        while triangle_edge[(start + j) % m] {
            positions.push((start + j + 1) % m);
            j += 1;
        }
        let t = positions.len() as i64 - 1;
        let sent: HalfInt = positions.iter().map(|&p| state.sent_at(face.darts[p])).sum();
        out.push(Segment {
            face: f,
            path: positions.iter().map(|&p| face.walk[p]).collect(),
            positions,
            charge: sent - HalfInt::from_int(t),
        });
        i = j;
    }
    out
}

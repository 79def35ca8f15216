//! Constructive colorings of the small graphs used by the reductions.
//!
//! Each operation checks its hypotheses, trims oversized lists to the sizes the
//! construction expects, and then follows a fixed sequence of color choices and
//! list reductions. The output is always validated before it is returned, so an
//! [`GadgetError::Internal`] error means a construction step did not deliver
//! what it should have.

mod check;
mod cycle;
mod paths;
mod small;

use std::fmt;

use thiserror::Error;

use crate::colorset::ColorSet;
use crate::engine::{self, DemandFunction, ListAssignment, SetColoring};
use crate::graph::Graph;

pub use check::{check_instance, exhaustive, random, Outcome, SweepReport};
pub use cycle::color_c6;
pub use paths::{color_p3, color_p4, color_p5, color_p6, color_path_v3big};
pub use small::{
    color_claw3, color_claw3_pendant, color_claw4, color_lollipop, color_path_plus_leaf, color_triangle,
};

/// A required color: `color` must end up in `φ(vertex)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pin {
    pub vertex: usize,
    pub color: u32,
}

impl Pin {
    pub fn new(vertex: usize, color: u32) -> Self {
        Pin { vertex, color }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("expected {expected} lists, got {got}")]
    WrongVertexCount { expected: usize, got: usize },
    #[error("list of {vertex} has {got} colors, needs at least {need}")]
    ListSize { vertex: &'static str, need: usize, got: usize },
    #[error("hypothesis fails: {0}")]
    Hypothesis(String),
    #[error("pin {color} is not in the list of {vertex}")]
    PinNotInList { vertex: &'static str, color: u32 },
    #[error("pins not supported here: {0}")]
    PinNotAllowed(String),
    #[error("pin condition fails: {0}")]
    PinCondition(String),
    #[error("construction failed at step `{0}`")]
    Internal(String),
}

impl GadgetError {
    /// True for errors that blame the input rather than the construction.
    pub fn is_rejection(&self) -> bool {
        !matches!(self, GadgetError::Internal(_))
    }
}

/// Which pair of neighbors of the center is joined in the claw-with-pendant shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PendantEdge {
    None,
    V1V2,
    V1V3,
    V2V3,
}

/// The gadget shapes. Vertex order for each shape is given by [`Shape::names`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    P3,
    P4,
    P5,
    P6,
    /// Path on `k` vertices (5 to 7) whose third vertex has the long list.
    PathV3Big(usize),
    Triangle,
    Lollipop,
    /// 6-cycle with long lists on `v1` and `vt`.
    C6 { t: usize },
    Claw3,
    Claw4 { edge: bool },
    Claw3Pendant(PendantEdge),
    PathPlusLeaf { edge: bool },
}

const PATH_NAMES: [&str; 7] = ["v1", "v2", "v3", "v4", "v5", "v6", "v7"];

impl Shape {
    pub fn all() -> Vec<Shape> {
        let mut out = vec![Shape::P3, Shape::P4, Shape::P5, Shape::P6];
        out.extend((5..=7).map(Shape::PathV3Big));
        out.extend([Shape::Triangle, Shape::Lollipop]);
        out.extend((2..=4).map(|t| Shape::C6 { t }));
        out.extend([Shape::Claw3, Shape::Claw4 { edge: false }, Shape::Claw4 { edge: true }]);
        out.extend([PendantEdge::None, PendantEdge::V1V2, PendantEdge::V1V3, PendantEdge::V2V3].map(Shape::Claw3Pendant));
        out.extend([Shape::PathPlusLeaf { edge: false }, Shape::PathPlusLeaf { edge: true }]);
        out
    }

    /// Command-line name.
    pub fn name(&self) -> String {
        match self {
            Shape::P3 => "p3".into(),
            Shape::P4 => "p4".into(),
            Shape::P5 => "p5".into(),
            Shape::P6 => "p6".into(),
            Shape::PathV3Big(k) => format!("path-v3big-{k}"),
            Shape::Triangle => "triangle".into(),
            Shape::Lollipop => "lollipop".into(),
            Shape::C6 { t } => format!("c6-t{t}"),
            Shape::Claw3 => "claw3".into(),
            Shape::Claw4 { edge: false } => "claw4".into(),
            Shape::Claw4 { edge: true } => "claw4-edge".into(),
            Shape::Claw3Pendant(e) => match e {
                PendantEdge::None => "claw3-pendant".into(),
                PendantEdge::V1V2 => "claw3-pendant-v1v2".into(),
                PendantEdge::V1V3 => "claw3-pendant-v1v3".into(),
                PendantEdge::V2V3 => "claw3-pendant-v2v3".into(),
            },
            Shape::PathPlusLeaf { edge: false } => "path-plus-leaf".into(),
            Shape::PathPlusLeaf { edge: true } => "path-plus-leaf-edge".into(),
        }
    }

    pub fn from_name(name: &str) -> Option<Shape> {
        Shape::all().into_iter().find(|s| s.name() == name)
    }

    pub fn names(&self) -> Vec<&'static str> {
        match self {
            Shape::P3 => PATH_NAMES[..3].to_vec(),
            Shape::P4 => PATH_NAMES[..4].to_vec(),
            Shape::P5 => PATH_NAMES[..5].to_vec(),
            Shape::P6 | Shape::C6 { .. } => PATH_NAMES[..6].to_vec(),
            Shape::PathV3Big(k) => PATH_NAMES[..*k].to_vec(),
            Shape::Triangle => PATH_NAMES[..3].to_vec(),
            Shape::Lollipop => PATH_NAMES[..4].to_vec(),
            Shape::Claw3 => vec!["v", "v1", "v2", "v3"],
            Shape::Claw4 { .. } => vec!["v", "v1", "v2", "v3", "v4"],
            Shape::Claw3Pendant(_) => vec!["v", "v1", "v2", "v3", "u1"],
            Shape::PathPlusLeaf { .. } => vec!["u1", "v1", "v", "v2", "u2", "v3"],
        }
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let path = |k: usize| (1..k).map(|i| (i - 1, i)).collect::<Vec<_>>();
        match self {
            Shape::P3 => path(3),
            Shape::P4 => path(4),
            Shape::P5 => path(5),
            Shape::P6 => path(6),
            Shape::PathV3Big(k) => path(*k),
            Shape::Triangle => vec![(0, 1), (1, 2), (0, 2)],
            Shape::Lollipop => vec![(0, 1), (1, 2), (2, 3), (0, 2)],
            Shape::C6 { .. } => {
                let mut e = path(6);
                e.push((0, 5));
                e
            }
            Shape::Claw3 => vec![(0, 1), (0, 2), (0, 3)],
            Shape::Claw4 { edge } => {
                let mut e = vec![(0, 1), (0, 2), (0, 3), (0, 4)];
                if *edge {
                    e.push((3, 4));
                }
                e
            }
            Shape::Claw3Pendant(extra) => {
                let mut e = vec![(0, 1), (0, 2), (0, 3), (1, 4)];
                match extra {
                    PendantEdge::None => {}
                    PendantEdge::V1V2 => e.push((1, 2)),
                    PendantEdge::V1V3 => e.push((1, 3)),
                    PendantEdge::V2V3 => e.push((2, 3)),
                }
                e
            }
            Shape::PathPlusLeaf { edge } => {
                let mut e = vec![(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)];
                if *edge {
                    e.push((1, 5));
                }
                e
            }
        }
    }

    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.names().len(), &self.edges())
    }

    /// List sizes the construction works with; larger lists are trimmed.
    pub fn list_sizes(&self) -> Vec<usize> {
        match self {
            Shape::P3 => vec![5, 8, 5],
            Shape::P4 => vec![5, 8, 5, 5],
            Shape::P5 => vec![5, 8, 5, 5, 5],
            Shape::P6 => vec![5, 8, 5, 5, 5, 5],
            Shape::PathV3Big(k) => (0..*k).map(|i| if i == 2 { 8 } else { 5 }).collect(),
            Shape::Triangle => vec![3, 3, 3],
            Shape::Lollipop => vec![5, 8, 8, 5],
            Shape::C6 { t } => (0..6).map(|i| if i == 0 || i == t - 1 { 8 } else { 5 }).collect(),
            Shape::Claw3 => vec![8, 5, 5, 5],
            Shape::Claw4 { edge: false } => vec![8, 5, 5, 5, 5],
            Shape::Claw4 { edge: true } => vec![8, 5, 5, 8, 8],
            Shape::Claw3Pendant(_) => {
                let g = self.graph();
                vec![5, 2 + 3 * g.degree(1), 2 + 3 * g.degree(2), 2 + 3 * g.degree(3), 5]
            }
            Shape::PathPlusLeaf { .. } => {
                let g = self.graph();
                vec![5, 3 * g.degree(1) - 1, 5, 8, 5, 2 + 3 * g.degree(5)]
            }
        }
    }

    /// Vertices whose subgraph must be (L:3)-colorable for the construction to apply.
    pub fn required_colorable(&self) -> Vec<usize> {
        match self {
            Shape::P3 | Shape::Claw3 | Shape::Claw4 { edge: false } => vec![],
            Shape::P4 => vec![2, 3],
            Shape::P5 => vec![2, 3, 4],
            Shape::P6 => vec![2, 3, 4, 5],
            Shape::PathV3Big(k) => (0..*k).filter(|&i| i != 2).collect(),
            Shape::Triangle => vec![0, 1, 2],
            Shape::Lollipop => vec![0, 1, 2],
            Shape::C6 { t } => (0..6).filter(|&i| i != 0 && i != t - 1).collect(),
            Shape::Claw4 { edge: true } => vec![0, 3, 4],
            Shape::Claw3Pendant(_) => vec![0, 2, 3, 4],
            Shape::PathPlusLeaf { .. } => vec![0, 1, 2, 4, 5],
        }
    }

    /// How many pins each vertex accepts.
    pub fn pin_slots(&self) -> Vec<(usize, usize)> {
        match self {
            Shape::P3 => vec![(0, 2), (2, 1)],
            Shape::P4 => vec![(0, 1), (3, 1)],
            Shape::P5 => vec![(0, 1), (4, 1)],
            Shape::P6 => vec![(0, 1)],
            _ => vec![],
        }
    }

    /// Runs the construction for this shape.
    pub fn color(&self, lists: &[ColorSet], pins: &[Pin]) -> Result<SetColoring, GadgetError> {
        match self {
            Shape::P3 => color_p3(lists, pins),
            Shape::P4 => color_p4(lists, pins),
            Shape::P5 => color_p5(lists, pins),
            Shape::P6 => color_p6(lists, pins),
            Shape::PathV3Big(_) => no_pins(pins).and_then(|_| color_path_v3big(lists)),
            Shape::Triangle => no_pins(pins).and_then(|_| color_triangle(lists)),
            Shape::Lollipop => no_pins(pins).and_then(|_| color_lollipop(lists)),
            Shape::C6 { t } => no_pins(pins).and_then(|_| color_c6(lists, [0, t - 1])),
            Shape::Claw3 => no_pins(pins).and_then(|_| color_claw3(lists)),
            Shape::Claw4 { edge } => no_pins(pins).and_then(|_| color_claw4(lists, *edge)),
            Shape::Claw3Pendant(e) => no_pins(pins).and_then(|_| color_claw3_pendant(lists, *e)),
            Shape::PathPlusLeaf { edge } => no_pins(pins).and_then(|_| color_path_plus_leaf(lists, *edge)),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn no_pins(pins: &[Pin]) -> Result<(), GadgetError> {
    if pins.is_empty() {
        Ok(())
    } else {
        Err(GadgetError::PinNotAllowed("this shape takes no pins".into()))
    }
}

/// Lowest member of `set`, or an internal error naming the step.
fn pick(set: ColorSet, step: &str) -> Result<u32, GadgetError> {
    set.min().ok_or_else(|| GadgetError::Internal(step.to_string()))
}

fn take(set: ColorSet, k: usize, step: &str) -> Result<ColorSet, GadgetError> {
    set.lowest(k).ok_or_else(|| GadgetError::Internal(step.to_string()))
}

/// `k` colors of `set` including `required`.
fn take_with(set: ColorSet, required: ColorSet, k: usize, step: &str) -> Result<ColorSet, GadgetError> {
    set.extend_to(required, k).ok_or_else(|| GadgetError::Internal(step.to_string()))
}

/// Input-facing state shared by the constructions.
struct Frame {
    names: Vec<&'static str>,
    graph: Graph,
}

impl Frame {
    fn new(shape: Shape, lists: &[ColorSet]) -> Result<Self, GadgetError> {
        let names = shape.names();
        if lists.len() != names.len() {
            return Err(GadgetError::WrongVertexCount { expected: names.len(), got: lists.len() });
        }
        for (i, &need) in shape.list_sizes().iter().enumerate() {
            if lists[i].len() < need {
                return Err(GadgetError::ListSize { vertex: names[i], need, got: lists[i].len() });
            }
        }
        Ok(Frame { names, graph: shape.graph() })
    }

    /// Colors pinned on `v`, after checking they lie in its list.
    fn pins_on(&self, lists: &[ColorSet], pins: &[Pin], v: usize) -> Result<Vec<u32>, GadgetError> {
        let mut out = Vec::new();
        for p in pins.iter().filter(|p| p.vertex == v) {
            if !lists[v].contains(p.color) {
                return Err(GadgetError::PinNotInList { vertex: self.names[v], color: p.color });
            }
            if !out.contains(&p.color) {
                out.push(p.color);
            }
        }
        Ok(out)
    }

    fn check_pin_slots(&self, shape: Shape, pins: &[Pin]) -> Result<(), GadgetError> {
        let slots = shape.pin_slots();
        for p in pins {
            let cap = slots.iter().find(|(v, _)| *v == p.vertex).map(|(_, c)| *c).unwrap_or(0);
            let used = pins.iter().filter(|q| q.vertex == p.vertex).count();
            if used > cap {
                return Err(GadgetError::PinNotAllowed(format!(
                    "{} accepts {cap} pin(s) on {}",
                    shape.name(),
                    self.names.get(p.vertex).copied().unwrap_or("?")
                )));
            }
        }
        Ok(())
    }

    /// A coloring of the subgraph on `subset`, or a hypothesis error.
    fn witness(&self, lists: &[ColorSet], subset: &[usize]) -> Result<SetColoring, GadgetError> {
        let mut phi = SetColoring::empty(lists.len());
        if subset.is_empty() {
            return Ok(phi);
        }
        let (sub, map) = self.graph.induced(subset);
        let l: ListAssignment = map.iter().map(|&v| lists[v]).collect();
        let f = DemandFunction::uniform(map.len(), 3);
        match engine::solve(&sub, &l, &f) {
            Ok(Some(w)) => {
                for (i, &v) in map.iter().enumerate() {
                    phi[v] = w[i];
                }
                Ok(phi)
            }
            Ok(None) => Err(GadgetError::Hypothesis(format!(
                "subgraph on {} is not (L:3)-colorable",
                subset.iter().map(|&v| self.names[v]).collect::<Vec<_>>().join(",")
            ))),
            Err(e) => Err(GadgetError::Internal(e.to_string())),
        }
    }

    /// Validates a finished coloring against the untrimmed lists and pins.
    fn finish(&self, lists: &[ColorSet], pins: &[Pin], phi: SetColoring) -> Result<SetColoring, GadgetError> {
        let l = ListAssignment::new(lists.to_vec());
        let f = DemandFunction::uniform(lists.len(), 3);
        if let Err(v) = engine::is_valid_coloring(&self.graph, &l, &f, &phi) {
            return Err(GadgetError::Internal(format!("output check: {v}")));
        }
        for p in pins {
            if !phi[p.vertex].contains(p.color) {
                return Err(GadgetError::Internal(format!("pin {} missing on {}", p.color, self.names[p.vertex])));
            }
        }
        Ok(phi)
    }
}

/// Trims every list to `sizes`, never dropping the colors in `keep`.
fn trim(lists: &[ColorSet], sizes: &[usize], keep: &[ColorSet]) -> Vec<ColorSet> {
    lists.iter().enumerate().map(|(i, l)| l.truncate_keeping(sizes[i], keep[i])).collect()
}

/// One reduction step: removes `psi` and its neighbors' colors from the
/// lists, lowers demands, and trims the result to `sizes`.
fn reduce(
    g: &Graph,
    lists: &[ColorSet],
    demands: &[u32],
    psi: &[ColorSet],
    sizes: &[usize],
    step: &str,
) -> Result<(Vec<ColorSet>, Vec<u32>), GadgetError> {
    let (l, f) = engine::reduce_lists(
        g,
        &ListAssignment::new(lists.to_vec()),
        &DemandFunction::new(demands.to_vec()),
        &SetColoring::new(psi.to_vec()),
    )
    .map_err(|e| GadgetError::Internal(format!("{step}: {e}")))?;
    let l = l.into_inner();
    for (i, &s) in sizes.iter().enumerate() {
        if l[i].len() < s {
            return Err(GadgetError::Internal(format!("{step}: list {i} has {} colors, expected {s}", l[i].len())));
        }
    }
    Ok((trim(&l, sizes, &vec![ColorSet::EMPTY; l.len()]), f.into_inner()))
}

/// Greedy finish in `order`, with the precondition checked.
fn greedy(g: &Graph, lists: &[ColorSet], demands: &[u32], order: &[usize], step: &str) -> Result<Vec<ColorSet>, GadgetError> {
    engine::greedy_color(g, &ListAssignment::new(lists.to_vec()), &DemandFunction::new(demands.to_vec()), order)
        .map(SetColoring::into_inner)
        .map_err(|e| GadgetError::Internal(format!("{step}: {e}")))
}

fn union_all(parts: &[&[ColorSet]]) -> SetColoring {
    let n = parts[0].len();
    (0..n).map(|i| parts.iter().fold(ColorSet::EMPTY, |acc, p| acc.union(p[i]))).collect()
}

/// Disjoint 3-sets from `a` and `b` for the two ends of an edge, taking
/// colors of `a` not in `b` first.
fn color_edge(a: ColorSet, b: ColorSet, step: &str) -> Result<(ColorSet, ColorSet), GadgetError> {
    let own = a.difference(b).lowest(3.min(a.difference(b).len())).unwrap_or(ColorSet::EMPTY);
    let first = take_with(a, own, 3, step)?;
    let second = take(b.difference(first), 3, step)?;
    Ok((first, second))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_are_consistent() {
        for s in Shape::all() {
            assert_eq!(s.names().len(), s.list_sizes().len(), "{s}");
            assert_eq!(Shape::from_name(&s.name()), Some(s));
            let g = s.graph();
            assert!(g.is_connected(), "{s}");
        }
        assert_eq!(Shape::Claw3Pendant(PendantEdge::V1V2).list_sizes(), vec![5, 11, 8, 5, 5]);
        assert_eq!(Shape::Claw3Pendant(PendantEdge::V2V3).list_sizes(), vec![5, 8, 8, 8, 5]);
        assert_eq!(Shape::PathPlusLeaf { edge: true }.list_sizes(), vec![5, 8, 5, 8, 5, 8]);
        assert_eq!(Shape::PathPlusLeaf { edge: false }.list_sizes(), vec![5, 5, 5, 8, 5, 5]);
    }

    #[test]
    fn edge_helper() {
        let a = ColorSet::range(1, 5);
        let b = ColorSet::range(2, 6);
        let (x, y) = color_edge(a, b, "t").unwrap();
        assert!(x.is_disjoint(y) && x.len() == 3 && y.len() == 3);
        assert!(color_edge(a, a, "t").is_err());
    }
}

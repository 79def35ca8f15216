//! Reducible configurations: search and independent re-verification.

use std::fmt;

use crate::colorset::ColorSet;
use crate::engine::{ListAssignment, SetColoring};
use crate::gadgets::{color_c6, GadgetError, PendantEdge, Shape};
use crate::graph::{PlaneGraph, VertexId};

/// List size every internal vertex is assumed to have when no lists are given.
pub const NOMINAL_LIST_SIZE: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    /// Internal vertex of degree at most 2.
    Deg2,
    /// Path `v1..vk`, `3 <= k <= 6`, ends and `v2` of degree 3, middle of
    /// degree 4, induced.
    Path33,
    /// Triangle `v1 v2 v3` with `deg v2 = 3`, `deg v1, deg v3 <= 4`, and a
    /// degree-3 neighbor `v4` of `v3`.
    Tria3,
    /// Induced 6-cycle of vertices of degree at most 4, two of degree 3.
    Cycle6,
    /// Degree-4 vertex with three independent degree-3 neighbors.
    Vert4,
    /// Path `v1..vk`, `5 <= k <= 7`, `v1, v3, vk` of degree 3, the rest of
    /// degree 4, induced.
    Path34,
    /// Degree-5 vertex with four degree-3 neighbors spanning at most one edge.
    Vert5M,
    /// Degree-5 vertex with three degree-3 neighbors, one of which has a
    /// further degree-3 neighbor away from the center.
    Vert5N3,
    /// Path `u1 v1 v v2 u2` around a degree-5 vertex `v` with one more
    /// degree-3 neighbor `v3`.
    Vert5P43,
}

impl Kind {
    pub const ALL: [Kind; 9] = [
        Kind::Deg2,
        Kind::Path33,
        Kind::Tria3,
        Kind::Cycle6,
        Kind::Vert4,
        Kind::Path34,
        Kind::Vert5M,
        Kind::Vert5N3,
        Kind::Vert5P43,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Deg2 => "DEG2",
            Kind::Path33 => "PATH33",
            Kind::Tria3 => "TRIA3",
            Kind::Cycle6 => "CYCLE6",
            Kind::Vert4 => "VERT4",
            Kind::Path34 => "PATH34",
            Kind::Vert5M => "VERT5M",
            Kind::Vert5N3 => "VERT5N3",
            Kind::Vert5P43 => "VERT5P43",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How a coloring of the configuration is built from restricted lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gadget {
    /// One vertex with at least 5 colors.
    Single,
    Shape(Shape),
    /// A 6-cycle whose vertices at the two positions have 8 colors.
    Cycle { long: [usize; 2] },
}

impl Gadget {
    pub fn edges(&self) -> Vec<(usize, usize)> {
        match self {
            Gadget::Single => vec![],
            Gadget::Shape(s) => s.edges(),
            Gadget::Cycle { .. } => (0..6).map(|i| (i, (i + 1) % 6)).collect(),
        }
    }

    pub fn list_sizes(&self) -> Vec<usize> {
        match self {
            Gadget::Single => vec![5],
            Gadget::Shape(s) => s.list_sizes(),
            Gadget::Cycle { long } => (0..6).map(|i| if long.contains(&i) { 8 } else { 5 }).collect(),
        }
    }

    pub fn color(&self, lists: &[ColorSet]) -> Result<SetColoring, GadgetError> {
        match self {
            Gadget::Single => {
                let got = lists.first().map_or(0, |l| l.len());
                match lists.first().and_then(|l| l.lowest(3)) {
                    Some(c) if lists.len() == 1 => Ok(SetColoring::new(vec![c])),
                    _ => Err(GadgetError::ListSize { vertex: "v", need: 5, got }),
                }
            }
            Gadget::Shape(s) => s.color(lists, &[]),
            Gadget::Cycle { long } => color_c6(lists, *long),
        }
    }
}

impl fmt::Display for Gadget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gadget::Single => f.write_str("single"),
            Gadget::Shape(s) => write!(f, "{s}"),
            Gadget::Cycle { long } => write!(f, "c6[{},{}]", long[0], long[1]),
        }
    }
}

/// A located configuration: the subgraph `H` in gadget order, the vertices
/// deleted before recursing, and the gadget that extends the coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pub kind: Kind,
    pub vertices: Vec<VertexId>,
    pub names: Vec<&'static str>,
    pub delete: Vec<VertexId>,
    pub gadget: Gadget,
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        for (n, v) in self.names.iter().zip(&self.vertices) {
            write!(f, " {n}={v}")?;
        }
        let del: Vec<String> = self.delete.iter().map(|v| v.to_string()).collect();
        write!(f, " delete={} gadget={}", del.join(","), self.gadget)
    }
}

const PATH_NAMES: [&str; 7] = ["v1", "v2", "v3", "v4", "v5", "v6", "v7"];

fn path_shape33(k: usize) -> Shape {
    match k {
        3 => Shape::P3,
        4 => Shape::P4,
        5 => Shape::P5,
        _ => Shape::P6,
    }
}

/// Checks everything the extension step relies on: the vertices are distinct
/// and internal, `H` is exactly the gadget graph, the degree hypotheses of
/// the kind hold, and the restricted lists are guaranteed large enough.
pub fn verify_configuration(
    g: &PlaneGraph,
    z: &[VertexId],
    lists: Option<&ListAssignment>,
    c: &Configuration,
) -> Result<(), String> {
    let n = g.vertex_count();
    let vs = &c.vertices;
    if vs.is_empty() || c.names.len() != vs.len() {
        return Err("empty or unlabeled configuration".into());
    }
    for (i, &v) in vs.iter().enumerate() {
        if v >= n {
            return Err(format!("vertex {v} out of range"));
        }
        if vs[..i].contains(&v) {
            return Err(format!("vertex {v} repeated"));
        }
        if z.contains(&v) {
            return Err(format!("vertex {v} is precolored"));
        }
    }
    if c.delete.is_empty() || c.delete.iter().any(|d| !vs.contains(d)) {
        return Err("delete set must be a nonempty part of the configuration".into());
    }
    let sizes = c.gadget.list_sizes();
    if sizes.len() != vs.len() {
        return Err(format!("gadget {} has {} vertices, configuration {}", c.gadget, sizes.len(), vs.len()));
    }
    let mut want: Vec<(usize, usize)> = c.gadget.edges().into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    want.sort_unstable();
    let mut have = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if g.has_edge(vs[i], vs[j]) {
                have.push((i, j));
            }
        }
    }
    if have != want {
        return Err(format!("induced edges {have:?} differ from gadget edges {want:?}"));
    }
    check_degrees(g, c)?;
    let deg_h = |i: usize| have.iter().filter(|&&(a, b)| a == i || b == i).count();
    for (i, &v) in vs.iter().enumerate() {
        let size = lists.map_or(NOMINAL_LIST_SIZE, |l| l[v].len());
        let lost = 3 * (g.degree(v) - deg_h(i));
        if size < lost || size - lost < sizes[i] {
            return Err(format!("{}={v} may keep only {} colors, gadget needs {}", c.names[i], size.saturating_sub(lost), sizes[i]));
        }
    }
    Ok(())
}

fn check_degrees(g: &PlaneGraph, c: &Configuration) -> Result<(), String> {
    let d: Vec<usize> = c.vertices.iter().map(|&v| g.degree(v)).collect();
    let k = d.len();
    let ok = match c.kind {
        Kind::Deg2 => k == 1 && d[0] <= 2,
        Kind::Path33 => {
            (3..=6).contains(&k) && d[0] == 3 && d[1] == 3 && d[k - 1] == 3 && d[2..k - 1].iter().all(|&x| x == 4)
        }
        Kind::Tria3 => k == 4 && d[0] <= 4 && d[1] == 3 && d[2] <= 4 && d[3] == 3,
        Kind::Cycle6 => match c.gadget {
            Gadget::Cycle { long } => k == 6 && d.iter().all(|&x| x <= 4) && long.iter().all(|&i| d[i] == 3),
            _ => false,
        },
        Kind::Vert4 => k == 4 && d[0] == 4 && d[1..].iter().all(|&x| x == 3),
        Kind::Path34 => {
            (5..=7).contains(&k)
                && d[0] == 3
                && d[1] == 4
                && d[2] == 3
                && d[k - 1] == 3
                && d[3..k - 1].iter().all(|&x| x == 4)
        }
        Kind::Vert5M => k == 5 && d[0] == 5 && d[1..].iter().all(|&x| x == 3),
        Kind::Vert5N3 => k == 5 && d[0] == 5 && d[1..].iter().all(|&x| x == 3),
        Kind::Vert5P43 => k == 6 && d == [3, 4, 5, 3, 3, 3],
    };
    if ok {
        Ok(())
    } else {
        Err(format!("degrees {d:?} do not fit {}", c.kind))
    }
}

struct Search<'a> {
    g: &'a PlaneGraph,
    internal: Vec<bool>,
}

impl Search<'_> {
    fn deg(&self, v: VertexId) -> usize {
        self.g.degree(v)
    }

    /// Internal with degree exactly `k`.
    fn is(&self, v: VertexId, k: usize) -> bool {
        self.internal[v] && self.deg(v) == k
    }

    fn nbrs(&self, v: VertexId) -> &[VertexId] {
        self.g.graph().neighbors(v)
    }

    fn internal_nbrs(&self, v: VertexId, k: usize) -> Vec<VertexId> {
        self.nbrs(v).iter().copied().filter(|&w| self.is(w, k)).collect()
    }

    /// Simple paths whose i-th vertex is internal of degree `pattern[i]`.
    fn paths(&self, pattern: &[usize], out: &mut Vec<Vec<VertexId>>) {
        let mut path = Vec::with_capacity(pattern.len());
        for v in 0..self.g.vertex_count() {
            if self.is(v, pattern[0]) {
                path.push(v);
                self.extend(pattern, &mut path, out);
                path.pop();
            }
        }
    }

    fn extend(&self, pattern: &[usize], path: &mut Vec<VertexId>, out: &mut Vec<Vec<VertexId>>) {
        if path.len() == pattern.len() {
            out.push(path.clone());
            return;
        }
        let last = *path.last().unwrap();
        for &w in self.nbrs(last) {
            if self.is(w, pattern[path.len()]) && !path.contains(&w) {
                path.push(w);
                self.extend(pattern, path, out);
                path.pop();
            }
        }
    }
}

fn combinations(items: &[VertexId], k: usize) -> Vec<Vec<VertexId>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, items[i]);
            out.push(rest);
        }
    }
    out
}

fn labeled(kind: Kind, vertices: Vec<VertexId>, names: Vec<&'static str>, delete: Vec<VertexId>, gadget: Gadget) -> Configuration {
    Configuration { kind, vertices, names, delete, gadget }
}

/// Every candidate of one kind, unverified, in a deterministic order.
fn candidates(s: &Search, kind: Kind) -> Vec<Configuration> {
    let g = s.g;
    let n = g.vertex_count();
    let mut out = Vec::new();
    match kind {
        Kind::Deg2 => {
            for v in (0..n).filter(|&v| s.internal[v] && s.deg(v) <= 2) {
                out.push(labeled(kind, vec![v], vec!["v"], vec![v], Gadget::Single));
            }
        }
        Kind::Path33 => {
            for k in 3..=6 {
                let mut pattern = vec![4; k];
                pattern[0] = 3;
                pattern[1] = 3;
                pattern[k - 1] = 3;
                let mut paths = Vec::new();
                s.paths(&pattern, &mut paths);
                for p in paths {
                    let del = vec![p[0], p[1]];
                    out.push(labeled(kind, p, PATH_NAMES[..k].to_vec(), del, Gadget::Shape(path_shape33(k))));
                }
            }
        }
        Kind::Tria3 => {
            for t in g.graph().triangles() {
                for (i, &v2) in t.iter().enumerate() {
                    let others = [t[(i + 1) % 3], t[(i + 2) % 3]];
                    for (v1, v3) in [(others[0], others[1]), (others[1], others[0])] {
                        if !(s.is(v2, 3) && s.internal[v1] && s.internal[v3]) {
                            continue;
                        }
                        for v4 in s.internal_nbrs(v3, 3) {
                            if v4 != v1 && v4 != v2 {
                                out.push(labeled(
                                    kind,
                                    vec![v1, v2, v3, v4],
                                    vec!["v1", "v2", "v3", "v4"],
                                    vec![v4],
                                    Gadget::Shape(Shape::Lollipop),
                                ));
                            }
                        }
                    }
                }
            }
        }
        Kind::Cycle6 => {
            let low = |v: VertexId| s.internal[v] && s.deg(v) <= 4;
            for start in (0..n).filter(|&v| low(v)) {
                let mut path = vec![start];
                cycles6(s, &low, &mut path, &mut out);
            }
        }
        Kind::Vert4 => {
            for v in (0..n).filter(|&v| s.is(v, 4)) {
                for trio in combinations(&s.internal_nbrs(v, 3), 3) {
                    let mut vs = vec![v];
                    vs.extend(&trio);
                    out.push(labeled(kind, vs.clone(), vec!["v", "v1", "v2", "v3"], vs, Gadget::Shape(Shape::Claw3)));
                }
            }
        }
        Kind::Path34 => {
            for k in 5..=7 {
                let mut pattern = vec![4; k];
                pattern[0] = 3;
                pattern[2] = 3;
                pattern[k - 1] = 3;
                let mut paths = Vec::new();
                s.paths(&pattern, &mut paths);
                for p in paths {
                    let del = vec![p[2]];
                    out.push(labeled(kind, p, PATH_NAMES[..k].to_vec(), del, Gadget::Shape(Shape::PathV3Big(k))));
                }
            }
        }
        Kind::Vert5M => {
            for v in (0..n).filter(|&v| s.is(v, 5)) {
                for four in combinations(&s.internal_nbrs(v, 3), 4) {
                    let edges: Vec<(VertexId, VertexId)> = combinations(&four, 2)
                        .into_iter()
                        .filter(|p| g.has_edge(p[0], p[1]))
                        .map(|p| (p[0], p[1]))
                        .collect();
                    let (order, edge) = match edges.as_slice() {
                        [] => (four.clone(), false),
                        [(a, b)] => {
                            let mut o: Vec<VertexId> = four.iter().copied().filter(|x| x != a && x != b).collect();
                            o.extend([*a, *b]);
                            (o, true)
                        }
                        _ => continue,
                    };
                    let mut vs = vec![v];
                    vs.extend(&order);
                    let del = vec![order[0], order[1]];
                    out.push(labeled(
                        kind,
                        vs,
                        vec!["v", "v1", "v2", "v3", "v4"],
                        del,
                        Gadget::Shape(Shape::Claw4 { edge }),
                    ));
                }
            }
        }
        Kind::Vert5N3 => {
            for v in (0..n).filter(|&v| s.is(v, 5)) {
                let threes = s.internal_nbrs(v, 3);
                for trio in combinations(&threes, 3) {
                    for i in 0..3 {
                        let v1 = trio[i];
                        let (v2, v3) = (trio[(i + 1) % 3], trio[(i + 2) % 3]);
                        let extra = match (g.has_edge(v1, v2), g.has_edge(v1, v3), g.has_edge(v2, v3)) {
                            (false, false, false) => PendantEdge::None,
                            (true, false, false) => PendantEdge::V1V2,
                            (false, true, false) => PendantEdge::V1V3,
                            (false, false, true) => PendantEdge::V2V3,
                            _ => continue,
                        };
                        for u1 in s.internal_nbrs(v1, 3) {
                            if u1 == v || g.has_edge(u1, v) {
                                continue;
                            }
                            out.push(labeled(
                                kind,
                                vec![v, v1, v2, v3, u1],
                                vec!["v", "v1", "v2", "v3", "u1"],
                                vec![v1],
                                Gadget::Shape(Shape::Claw3Pendant(extra)),
                            ));
                        }
                    }
                }
            }
        }
        Kind::Vert5P43 => {
            for v in (0..n).filter(|&v| s.is(v, 5)) {
                let threes = s.internal_nbrs(v, 3);
                for v1 in s.internal_nbrs(v, 4) {
                    for &v2 in &threes {
                        for u1 in s.internal_nbrs(v1, 3) {
                            for u2 in s.internal_nbrs(v2, 3) {
                                if u1 == v2 || u2 == v1 || u1 == u2 || g.has_edge(v, u2) {
                                    continue;
                                }
                                for &v3 in &threes {
                                    if v3 == v2 || v3 == u1 || v3 == u2 {
                                        continue;
                                    }
                                    out.push(labeled(
                                        kind,
                                        vec![u1, v1, v, v2, u2, v3],
                                        vec!["u1", "v1", "v", "v2", "u2", "v3"],
                                        vec![v2],
                                        Gadget::Shape(Shape::PathPlusLeaf { edge: g.has_edge(v1, v3) }),
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn cycles6(s: &Search, low: &dyn Fn(VertexId) -> bool, path: &mut Vec<VertexId>, out: &mut Vec<Configuration>) {
    let last = *path.last().unwrap();
    if path.len() == 6 {
        // each cycle once: start is its minimum, second vertex below the last
        if s.g.has_edge(last, path[0]) && path[1] < path[5] {
            let threes: Vec<usize> = (0..6).filter(|&i| s.deg(path[i]) == 3).collect();
            if threes.len() >= 2 {
                let long = [threes[0], threes[1]];
                let del = vec![path[long[0]], path[long[1]]];
                out.push(labeled(Kind::Cycle6, path.clone(), PATH_NAMES[..6].to_vec(), del, Gadget::Cycle { long }));
            }
        }
        return;
    }
    for &w in s.nbrs(last) {
        if w > path[0] && low(w) && !path.contains(&w) {
            path.push(w);
            cycles6(s, low, path, out);
            path.pop();
        }
    }
}

/// Every verified configuration of `kind` in `g`.
pub fn find_all(g: &PlaneGraph, z: &[VertexId], kind: Kind) -> Vec<Configuration> {
    let mut internal = vec![true; g.vertex_count()];
    for &v in z {
        internal[v] = false;
    }
    let s = Search { g, internal };
    candidates(&s, kind).into_iter().filter(|c| verify_configuration(g, z, None, c).is_ok()).collect()
}

/// The first verified configuration in priority order.
pub fn find_configuration(g: &PlaneGraph, z: &[VertexId]) -> Option<Configuration> {
    Kind::ALL.iter().find_map(|&k| find_all(g, z, k).into_iter().next())
}

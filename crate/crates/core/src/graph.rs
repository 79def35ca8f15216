//! Plane graphs given by rotation systems.
//!
//! A [`PlaneGraph`] stores, for each vertex, the clockwise cyclic order of its
//! neighbors. Faces are recovered by face tracing: the successor of the dart
//! `u -> v` is `v -> w` where `w` follows `u` in the rotation at `v`.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::colorset::ColorSet;

pub type VertexId = usize;
pub type FaceId = usize;
pub type DartId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} lists neighbor {neighbor}, which is not a vertex (n = {n})")]
    UnknownVertex { vertex: VertexId, neighbor: VertexId, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("vertex {vertex} lists neighbor {neighbor} more than once")]
    DuplicateNeighbor { vertex: VertexId, neighbor: VertexId },
    #[error("asymmetric adjacency: {from} lists {to} but not vice versa")]
    Asymmetric { from: VertexId, to: VertexId },
    #[error("rotation system is not plane: component of vertex {vertex} has V - E + F = {euler}")]
    NotPlane { vertex: VertexId, euler: i64 },
    #[error("expected {expected} rotation lines, got {got}")]
    WrongVertexCount { expected: usize, got: usize },
    #[error("separator {0:?} does not separate the graph")]
    NotSeparating(Vec<VertexId>),
    #[error("precolored set {0:?} is not a clique of size 1 to 3")]
    BadClique(Vec<VertexId>),
    #[error("precolored vertex {0} needs three colors disjoint from the other precolored vertices")]
    BadCliqueColors(VertexId),
}

/// Simple undirected graph as adjacency lists.
///
/// For graphs obtained from a [`PlaneGraph`] the lists are in rotation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Builds a graph from an edge list; neighbors are kept in insertion order.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            assert!(u < n && v < n && u != v, "bad edge ({u}, {v})");
            if !adj[u].contains(&v) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        Graph { adj }
    }

    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].contains(&v)
    }

    /// Edges `(u, v)` with `u < v`, in vertex order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.adj.len()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        self.components_avoiding(&[])
    }

    /// Components of the graph with `removed` deleted.
    pub fn components_avoiding(&self, removed: &[VertexId]) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        for &r in removed {
            seen[r] = true;
        }
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_clique(&self, vs: &[VertexId]) -> bool {
        vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| a != b && self.has_edge(a, b)))
    }

    /// All triangles as sorted triples.
    pub fn triangles(&self) -> Vec<[VertexId; 3]> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if v <= u {
                    continue;
                }
                for &w in &self.adj[v] {
                    if w > v && self.has_edge(u, w) {
                        out.push([u, v, w]);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Articulation points, sorted.
    pub fn cut_vertices(&self) -> Vec<VertexId> {
        let n = self.vertex_count();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // iterative DFS: (vertex, parent, next neighbor index)
            let mut stack: Vec<(VertexId, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            while let Some(&mut (u, parent, ref mut i)) = stack.last_mut() {
                if *i < self.adj[u].len() {
                    let w = self.adj[u][*i];
                    *i += 1;
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((w, u, 0));
                    } else if w != parent {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[u]);
                        if p != root && low[u] >= disc[p] {
                            is_cut[p] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }

    /// Subgraph induced by `keep` (in the given order); returns the graph and
    /// the map from new ids to old ids. Adjacency order is inherited.
    pub fn induced(&self, keep: &[VertexId]) -> (Graph, Vec<VertexId>) {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| self.adj[v].iter().filter(|&&w| index[w] != usize::MAX).map(|&w| index[w]).collect())
            .collect();
        (Graph { adj }, keep.to_vec())
    }

    /// All cycles of length 4 or 5, each as a vertex sequence starting at its
    /// smallest vertex and oriented so the second vertex is smaller than the last.
    pub fn short_cycles(&self) -> Vec<Vec<VertexId>> {
        let mut out = Vec::new();
        for len in [4usize, 5] {
            for start in self.vertices() {
                let mut path = vec![start];
                self.extend_cycles(start, len, &mut path, &mut out);
            }
        }
        out
    }

    fn extend_cycles(&self, start: VertexId, len: usize, path: &mut Vec<VertexId>, out: &mut Vec<Vec<VertexId>>) {
        let last = *path.last().unwrap();
        if path.len() == len {
            if self.has_edge(last, start) && path[1] < path[len - 1] {
                out.push(path.clone());
            }
            return;
        }
        for &w in &self.adj[last] {
            if w > start && !path.contains(&w) {
                path.push(w);
                self.extend_cycles(start, len, path, out);
                path.pop();
            }
        }
    }
}

/// One face of a plane graph: the closed walk traced by face tracing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: FaceId,
    /// Darts in walk order.
    pub darts: Vec<DartId>,
    /// `walk[i]` is the tail of `darts[i]`.
    pub walk: Vec<VertexId>,
}

impl Face {
    #[inline]
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// True when the walk visits no vertex twice.
    pub fn is_cycle(&self) -> bool {
        let set: BTreeSet<_> = self.walk.iter().collect();
        set.len() == self.walk.len()
    }
}

/// A plane graph: a simple graph with a rotation system and its traced faces.
///
/// Immutable once built. Isolated vertices get an empty face each so that
/// Euler's formula `V - E + F = 2` holds per component.
#[derive(Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    graph: Graph,
    dart_offset: Vec<usize>,
    dart_tail: Vec<VertexId>,
    dart_rev: Vec<DartId>,
    dart_face: Vec<FaceId>,
    dart_face_pos: Vec<usize>,
    faces: Vec<Face>,
    isolated_face: Vec<Option<FaceId>>,
}

impl fmt::Debug for PlaneGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PlaneGraph").field("rotation", &self.graph.adj).finish()
    }
}

impl PlaneGraph {
    /// Validates a rotation system and traces its faces.
    pub fn new(rotation: Vec<Vec<VertexId>>) -> Result<Self, GraphError> {
        let n = rotation.len();
        for (v, ns) in rotation.iter().enumerate() {
            for (i, &w) in ns.iter().enumerate() {
                if w >= n {
                    return Err(GraphError::UnknownVertex { vertex: v, neighbor: w, n });
                }
                if w == v {
                    return Err(GraphError::SelfLoop(v));
                }
                if ns[..i].contains(&w) {
                    return Err(GraphError::DuplicateNeighbor { vertex: v, neighbor: w });
                }
            }
        }
        for (v, ns) in rotation.iter().enumerate() {
            for &w in ns {
                if !rotation[w].contains(&v) {
                    return Err(GraphError::Asymmetric { from: v, to: w });
                }
            }
        }
        let graph = Graph { adj: rotation };
        let pg = Self::trace(graph);
        pg.check_euler()?;
        Ok(pg)
    }

    /// Same as [`PlaneGraph::new`] but with an explicit vertex count check.
    pub fn build(n: usize, rotation: Vec<Vec<VertexId>>) -> Result<Self, GraphError> {
        if rotation.len() != n {
            return Err(GraphError::WrongVertexCount { expected: n, got: rotation.len() });
        }
        Self::new(rotation)
    }

    fn trace(graph: Graph) -> Self {
        let n = graph.vertex_count();
        let mut dart_offset = Vec::with_capacity(n + 1);
        let mut total = 0;
        for v in 0..n {
            dart_offset.push(total);
            total += graph.degree(v);
        }
        dart_offset.push(total);
        let mut dart_tail = vec![0; total];
        let mut dart_rev = vec![0; total];
        for v in 0..n {
            for (i, &w) in graph.adj[v].iter().enumerate() {
                let d = dart_offset[v] + i;
                dart_tail[d] = v;
                let j = graph.adj[w].iter().position(|&x| x == v).expect("symmetric");
                dart_rev[d] = dart_offset[w] + j;
            }
        }
        let mut pg = PlaneGraph {
            graph,
            dart_offset,
            dart_tail,
            dart_rev,
            dart_face: vec![usize::MAX; total],
            dart_face_pos: vec![0; total],
            faces: Vec::new(),
            isolated_face: vec![None; n],
        };
        for d0 in 0..total {
            if pg.dart_face[d0] != usize::MAX {
                continue;
            }
            let id = pg.faces.len();
            let mut darts = Vec::new();
            let mut d = d0;
            loop {
                pg.dart_face[d] = id;
                pg.dart_face_pos[d] = darts.len();
                darts.push(d);
                d = pg.next_dart(d);
                if d == d0 {
                    break;
                }
            }
            let walk = darts.iter().map(|&d| pg.dart_tail[d]).collect();
            pg.faces.push(Face { id, darts, walk });
        }
        for v in 0..n {
            if pg.graph.degree(v) == 0 {
                let id = pg.faces.len();
                pg.faces.push(Face { id, darts: Vec::new(), walk: Vec::new() });
                pg.isolated_face[v] = Some(id);
            }
        }
        pg
    }

    fn check_euler(&self) -> Result<(), GraphError> {
        for comp in self.graph.components() {
            let v = comp.len() as i64;
            let e = comp.iter().map(|&x| self.graph.degree(x)).sum::<usize>() as i64 / 2;
            let mut faces = BTreeSet::new();
            for &x in &comp {
                if let Some(f) = self.isolated_face[x] {
                    faces.insert(f);
                }
                for i in 0..self.graph.degree(x) {
                    faces.insert(self.dart_face[self.dart_offset[x] + i]);
                }
            }
            let euler = v - e + faces.len() as i64;
            if euler != 2 {
                return Err(GraphError::NotPlane { vertex: comp[0], euler });
            }
        }
        Ok(())
    }

    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.graph.degree(v)
    }

    /// Clockwise neighbor order at `v`.
    #[inline]
    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        self.graph.neighbors(v)
    }

    pub fn rotations(&self) -> &[Vec<VertexId>] {
        &self.graph.adj
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.graph.has_edge(u, v)
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f]
    }

    pub fn dart_count(&self) -> usize {
        self.dart_tail.len()
    }

    /// The dart `v -> rotation(v)[i]`.
    #[inline]
    pub fn dart(&self, v: VertexId, i: usize) -> DartId {
        debug_assert!(i < self.graph.degree(v));
        self.dart_offset[v] + i
    }

    /// The dart `u -> v`, if `uv` is an edge.
    pub fn dart_between(&self, u: VertexId, v: VertexId) -> Option<DartId> {
        self.graph.adj[u].iter().position(|&w| w == v).map(|i| self.dart_offset[u] + i)
    }

    #[inline]
    pub fn tail(&self, d: DartId) -> VertexId {
        self.dart_tail[d]
    }

    #[inline]
    pub fn head(&self, d: DartId) -> VertexId {
        self.dart_tail[self.dart_rev[d]]
    }

    #[inline]
    pub fn reverse(&self, d: DartId) -> DartId {
        self.dart_rev[d]
    }

    /// The face to the traced side of dart `d`.
    #[inline]
    pub fn face_of(&self, d: DartId) -> FaceId {
        self.dart_face[d]
    }

    /// Position of dart `d` in its face walk.
    #[inline]
    pub fn position_in_face(&self, d: DartId) -> usize {
        self.dart_face_pos[d]
    }

    /// Face tracing successor of `u -> v`: the dart `v -> w`, `w` following `u` at `v`.
    pub fn next_dart(&self, d: DartId) -> DartId {
        let r = self.dart_rev[d];
        let v = self.dart_tail[r];
        let j = r - self.dart_offset[v];
        self.dart_offset[v] + (j + 1) % self.graph.degree(v)
    }

    /// Neighbor following `u` in the rotation at `v`.
    pub fn rotation_succ(&self, v: VertexId, u: VertexId) -> VertexId {
        let rot = &self.graph.adj[v];
        let i = rot.iter().position(|&w| w == u).expect("not a neighbor");
        rot[(i + 1) % rot.len()]
    }

    /// Neighbor preceding `u` in the rotation at `v`.
    pub fn rotation_pred(&self, v: VertexId, u: VertexId) -> VertexId {
        let rot = &self.graph.adj[v];
        let i = rot.iter().position(|&w| w == u).expect("not a neighbor");
        rot[(i + rot.len() - 1) % rot.len()]
    }

    /// The same graph with every rotation reversed.
    pub fn mirror(&self) -> PlaneGraph {
        let adj = self.graph.adj.iter().map(|r| r.iter().rev().copied().collect()).collect();
        Self::trace(Graph { adj })
    }

    /// Induced plane subgraph on `keep` (in that order) with restricted
    /// rotations and freshly traced faces, plus the new-to-old id map.
    pub fn induced(&self, keep: &[VertexId]) -> (PlaneGraph, Vec<VertexId>) {
        let (g, map) = self.graph.induced(keep);
        (Self::trace(g), map)
    }

    /// Plane subgraph with the given vertices removed; ids are compacted in order.
    pub fn without(&self, removed: &[VertexId]) -> (PlaneGraph, Vec<VertexId>) {
        let keep: Vec<_> = self.graph.vertices().filter(|v| !removed.contains(v)).collect();
        self.induced(&keep)
    }

    /// True if the faces of length 3 include one on exactly `tri`.
    pub fn is_facial_triangle(&self, tri: [VertexId; 3]) -> bool {
        let mut want = tri;
        want.sort_unstable();
        self.faces.iter().any(|f| {
            if f.len() != 3 {
                return false;
            }
            let mut w = [f.walk[0], f.walk[1], f.walk[2]];
            w.sort_unstable();
            w == want
        })
    }

    /// Triangles that do not bound a face.
    pub fn nonfacial_triangles(&self) -> Vec<[VertexId; 3]> {
        self.graph.triangles().into_iter().filter(|&t| !self.is_facial_triangle(t)).collect()
    }

    pub fn cut_vertices(&self) -> Vec<VertexId> {
        self.graph.cut_vertices()
    }

    /// All 4- and 5-cycles; empty iff the graph is in the target class.
    pub fn forbidden_cycles(&self) -> Vec<Vec<VertexId>> {
        self.graph.short_cycles()
    }

    /// `V - E + F` summed over components should be `2 * components`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.faces.len() as i64
    }

    /// Splits along `separator` (empty, a cut vertex, or a separating
    /// triangle). `g2` is the separator plus one component of `G - separator`
    /// avoiding `z`; `g1` is everything else, so it contains all of `z`.
    pub fn split_at(&self, separator: &[VertexId], z: &[VertexId]) -> Result<Split, GraphError> {
        let comps = self.graph.components_avoiding(separator);
        if comps.len() < 2 {
            return Err(GraphError::NotSeparating(separator.to_vec()));
        }
        let side = comps
            .iter()
            .find(|c| !z.iter().any(|x| c.binary_search(x).is_ok()))
            .ok_or_else(|| GraphError::NotSeparating(separator.to_vec()))?;
        let mut g2_vertices: Vec<_> = separator.to_vec();
        g2_vertices.extend(side.iter().copied());
        g2_vertices.sort_unstable();
        let g1_vertices: Vec<_> = self.graph.vertices().filter(|v| side.binary_search(v).is_err()).collect();
        let (g1, map1) = self.induced(&g1_vertices);
        let (g2, map2) = self.induced(&g2_vertices);
        Ok(Split { g1: SubGraph { graph: g1, to_parent: map1 }, g2: SubGraph { graph: g2, to_parent: map2 } })
    }
}

/// An induced plane subgraph and its vertex map into the parent.
#[derive(Debug, Clone)]
pub struct SubGraph {
    pub graph: PlaneGraph,
    pub to_parent: Vec<VertexId>,
}

impl SubGraph {
    pub fn local(&self, parent: VertexId) -> Option<VertexId> {
        self.to_parent.iter().position(|&p| p == parent)
    }
}

#[derive(Debug, Clone)]
pub struct Split {
    pub g1: SubGraph,
    pub g2: SubGraph,
}

/// The precolored clique: one to three mutually adjacent vertices with
/// pairwise disjoint three-color lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrecoloredClique {
    members: Vec<VertexId>,
    colors: Vec<ColorSet>,
}

impl PrecoloredClique {
    pub fn new(graph: &Graph, members: Vec<VertexId>, colors: Vec<ColorSet>) -> Result<Self, GraphError> {
        if members.is_empty() || members.len() > 3 || members.len() != colors.len() {
            return Err(GraphError::BadClique(members));
        }
        if members.iter().any(|&v| v >= graph.vertex_count()) || !graph.is_clique(&members) {
            return Err(GraphError::BadClique(members));
        }
        for (i, c) in colors.iter().enumerate() {
            if c.len() != 3 || colors[..i].iter().any(|d| !d.is_disjoint(*c)) {
                return Err(GraphError::BadCliqueColors(members[i]));
            }
        }
        Ok(PrecoloredClique { members, colors })
    }

    pub fn members(&self) -> &[VertexId] {
        &self.members
    }

    pub fn colors(&self) -> &[ColorSet] {
        &self.colors
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.contains(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, ColorSet)> + '_ {
        self.members.iter().copied().zip(self.colors.iter().copied())
    }
}

/// Degree class of a vertex relative to the precolored set `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexClass {
    /// Internal with degree exactly `k`.
    Exactly,
    /// In `z` or degree above `k`.
    AtLeast,
    Neither,
}

/// A vertex is internal when it is not precolored.
pub fn is_internal(v: VertexId, z: &[VertexId]) -> bool {
    !z.contains(&v)
}

/// `v` is a k-vertex if internal of degree k; a k⁺-vertex if in `z` or of degree ≥ k.
pub fn is_k_vertex(g: &Graph, z: &[VertexId], v: VertexId, k: usize) -> bool {
    is_internal(v, z) && g.degree(v) == k
}

pub fn is_k_plus_vertex(g: &Graph, z: &[VertexId], v: VertexId, k: usize) -> bool {
    !is_internal(v, z) || g.degree(v) >= k
}

pub fn vertex_class(g: &Graph, z: &[VertexId], v: VertexId, k: usize) -> VertexClass {
    if is_k_vertex(g, z, v, k) {
        VertexClass::Exactly
    } else if is_k_plus_vertex(g, z, v, k) {
        VertexClass::AtLeast
    } else {
        VertexClass::Neither
    }
}

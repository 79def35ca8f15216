//! Seeded generators of plane graphs without 4- and 5-cycles, and of lists.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::colorset::ColorSet;
use crate::engine::ListAssignment;
use crate::graph::{FaceId, Graph, GraphError, PlaneGraph, VertexId};

/// Embeds a straight-line drawing: each rotation is the neighbors sorted by
/// angle. The drawing must be crossing-free.
pub fn from_coordinates(points: &[(f64, f64)], edges: &[(VertexId, VertexId)]) -> Result<PlaneGraph, GraphError> {
    let g = Graph::from_edges(points.len(), edges);
    let rotation = (0..points.len())
        .map(|v| {
            let (x, y) = points[v];
            let mut ns = g.neighbors(v).to_vec();
            ns.sort_by(|&a, &b| {
                let ta = (points[a].1 - y).atan2(points[a].0 - x);
                let tb = (points[b].1 - y).atan2(points[b].0 - x);
                ta.partial_cmp(&tb).unwrap()
            });
            ns
        })
        .collect();
    PlaneGraph::new(rotation)
}

/// A straight-line drawing under construction.
#[derive(Debug, Clone, Default)]
pub struct Drawing {
    pub points: Vec<(f64, f64)>,
    pub edges: Vec<(VertexId, VertexId)>,
}

impl Drawing {
    pub fn add_vertex(&mut self, x: f64, y: f64) -> VertexId {
        self.points.push((x, y));
        self.points.len() - 1
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) {
        self.edges.push((u, v));
    }

    pub fn embed(&self) -> Result<PlaneGraph, GraphError> {
        from_coordinates(&self.points, &self.edges)
    }

    fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.points.len()];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Repeatedly deletes vertices of degree at most 1 and renumbers.
    pub fn prune_leaves(&mut self) {
        loop {
            let deg = self.degrees();
            if deg.iter().all(|&d| d >= 2) {
                return;
            }
            let keep: Vec<usize> = (0..self.points.len()).filter(|&v| deg[v] >= 2).collect();
            let mut map = vec![usize::MAX; self.points.len()];
            for (i, &v) in keep.iter().enumerate() {
                map[v] = i;
            }
            self.points = keep.iter().map(|&v| self.points[v]).collect();
            self.edges = self
                .edges
                .iter()
                .filter(|&&(u, v)| map[u] != usize::MAX && map[v] != usize::MAX)
                .map(|&(u, v)| (map[u], map[v]))
                .collect();
        }
    }

    /// Adds a vertex next to the middle of edge `i`, on the side given by
    /// `side`, adjacent to both ends.
    pub fn add_triangle_on(&mut self, i: usize, side: f64) -> VertexId {
        let (u, v) = self.edges[i];
        let (a, b) = (self.points[u], self.points[v]);
        let (mx, my) = ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0);
        let (dx, dy) = (b.0 - a.0, b.1 - a.1);
        let len = (dx * dx + dy * dy).sqrt();
        let w = self.add_vertex(mx - side * 0.35 * dy / len, my + side * 0.35 * dx / len);
        self.add_edge(u, w);
        self.add_edge(v, w);
        w
    }
}

/// Brick-wall drawing of a honeycomb patch on a `width x height` grid, with
/// pendant vertices pruned.
pub fn honeycomb(width: usize, height: usize) -> Drawing {
    let mut d = Drawing::default();
    let id = |x: usize, y: usize| y * width + x;
    for y in 0..height {
        for x in 0..width {
            d.add_vertex(x as f64, y as f64);
        }
    }
    for y in 0..height {
        for x in 0..width {
            if x + 1 < width {
                d.add_edge(id(x, y), id(x + 1, y));
            }
            if y + 1 < height && (x + y) % 2 == 0 {
                d.add_edge(id(x, y), id(x, y + 1));
            }
        }
    }
    d.prune_leaves();
    d
}

/// Honeycomb patch where each edge gets a triangle with probability `p`.
/// Attaching a triangle to an edge only lengthens other cycles, so the
/// result stays free of 4- and 5-cycles.
pub fn decorated_honeycomb<R: Rng>(width: usize, height: usize, p: f64, rng: &mut R) -> PlaneGraph {
    let mut d = honeycomb(width, height);
    let base = d.edges.len();
    for i in 0..base {
        if rng.gen_bool(p) {
            let side = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
            d.add_triangle_on(i, side);
        }
    }
    d.embed().expect("honeycomb drawing is plane")
}

/// `count` triangles in a row, consecutive ones joined by a path with `gap`
/// edges.
pub fn triangle_chain(count: usize, gap: usize) -> PlaneGraph {
    assert!(count >= 1 && gap >= 1);
    let mut d = Drawing::default();
    let mut x = 0.0;
    let mut prev_right: Option<VertexId> = None;
    for _ in 0..count {
        let left = d.add_vertex(x, 0.0);
        let top = d.add_vertex(x + 0.5, 1.0);
        let right = d.add_vertex(x + 1.0, 0.0);
        d.add_edge(left, top);
        d.add_edge(top, right);
        d.add_edge(left, right);
        if let Some(p) = prev_right {
            let mut last = p;
            let step = 1.0 / gap as f64;
            for k in 1..gap {
                let m = d.add_vertex(x - 1.0 + k as f64 * step, 0.0);
                d.add_edge(last, m);
                last = m;
            }
            d.add_edge(last, left);
        }
        prev_right = Some(right);
        x += 2.0;
    }
    d.embed().expect("chain drawing is plane")
}

/// Grows plane graphs by adding ears (paths between two corners of a face)
/// and keeps only steps that create no 4- or 5-cycle.
#[derive(Debug, Clone)]
pub struct EarBuilder {
    rotation: Vec<Vec<VertexId>>,
}

impl EarBuilder {
    /// A cycle of length `n` (3 or at least 6).
    pub fn cycle(n: usize) -> Self {
        assert!(n == 3 || n >= 6);
        let rotation = (0..n).map(|v| vec![(v + n - 1) % n, (v + 1) % n]).collect();
        EarBuilder { rotation }
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn plane(&self) -> PlaneGraph {
        PlaneGraph::new(self.rotation.clone()).expect("ears keep the embedding valid")
    }

    /// Adds a path with `inner` new vertices inside face `f` between the
    /// corners at walk positions `i` and `j`. Returns false, leaving the
    /// graph unchanged, when the ear is degenerate or creates a 4- or
    /// 5-cycle.
    pub fn add_ear(&mut self, g: &PlaneGraph, f: FaceId, i: usize, j: usize, inner: usize) -> bool {
        let face = g.face(f);
        let m = face.len();
        if m == 0 || i >= m || j >= m {
            return false;
        }
        let (a, b) = (face.walk[i], face.walk[j]);
        if a == b || (inner == 0 && g.has_edge(a, b)) {
            return false;
        }
        let saved = self.rotation.clone();
        let mut path = vec![a];
        for _ in 0..inner {
            self.rotation.push(Vec::new());
            path.push(self.rotation.len() - 1);
        }
        path.push(b);
        for w in path.windows(2) {
            if w[0] >= saved.len() {
                self.rotation[w[0]].push(w[1]);
            }
            if w[1] >= saved.len() {
                self.rotation[w[1]].push(w[0]);
            }
        }
        // a new neighbor goes right before the walk's next vertex at the corner
        self.insert_before(a, face.walk[(i + 1) % m], path[1]);
        self.insert_before(b, face.walk[(j + 1) % m], path[path.len() - 2]);
        let ok = Graph::from_edges(self.rotation.len(), &edges_of(&self.rotation)).short_cycles().is_empty();
        if !ok {
            self.rotation = saved;
        }
        ok
    }

    fn insert_before(&mut self, v: VertexId, next: VertexId, new: VertexId) {
        let pos = self.rotation[v].iter().position(|&w| w == next).expect("corner neighbor");
        self.rotation[v].insert(pos, new);
    }
}

fn edges_of(rotation: &[Vec<VertexId>]) -> Vec<(VertexId, VertexId)> {
    let mut out = Vec::new();
    for (u, ns) in rotation.iter().enumerate() {
        for &v in ns {
            if u < v {
                out.push((u, v));
            }
        }
    }
    out
}

/// A random 2-connected plane graph without 4- and 5-cycles on about `n`
/// vertices, grown by ears and then thickened with chords and triangles so
/// that few vertices keep degree 2.
pub fn random_class_graph<R: Rng>(n: usize, rng: &mut R) -> PlaneGraph {
    let start = if n >= 6 && rng.gen_bool(0.7) { rng.gen_range(6..=n.min(9)) } else { 3 };
    let mut b = EarBuilder::cycle(start);
    let mut attempts = 0;
    while b.vertex_count() < n && attempts < 20 * n + 200 {
        attempts += 1;
        let g = b.plane();
        let f = rng.gen_range(0..g.faces().len());
        let m = g.face(f).len();
        if m < 3 {
            continue;
        }
        let i = rng.gen_range(0..m);
        let room = n - b.vertex_count();
        let (j, inner) = if rng.gen_bool(0.45) {
            // triangle on a face edge
            ((i + 1) % m, 1)
        } else {
            (rng.gen_range(0..m), rng.gen_range(0..=room.min(4)))
        };
        if inner > room {
            continue;
        }
        b.add_ear(&g, f, i, j, inner);
    }
    // chords from degree-2 vertices
    for _ in 0..4 * n {
        let g = b.plane();
        let low: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| g.degree(v) == 2).collect();
        let Some(&v) = low.choose(rng) else { break };
        let d = g.dart(v, rng.gen_range(0..2));
        let f = g.face_of(d);
        let i = g.position_in_face(d);
        let m = g.face(f).len();
        let j = rng.gen_range(0..m);
        b.add_ear(&g, f, i, j, 0);
    }
    b.plane()
}

/// Random `size`-subsets of `1..=universe`, one per vertex.
pub fn random_lists<R: Rng>(n: usize, size: usize, universe: u32, rng: &mut R) -> ListAssignment {
    let colors: Vec<u32> = (1..=universe).collect();
    (0..n).map(|_| colors.choose_multiple(rng, size).copied().collect::<ColorSet>()).collect()
}

/// Pairwise disjoint 3-sets from `1..=universe` for the precolored vertices.
pub fn random_precoloring<R: Rng>(k: usize, universe: u32, rng: &mut R) -> Vec<ColorSet> {
    let mut colors: Vec<u32> = (1..=universe).collect();
    colors.shuffle(rng);
    colors.chunks(3).take(k).map(|c| c.iter().copied().collect()).collect()
}

/// A precolored clique: the vertices of a random facial triangle if there is
/// one and `prefer_triangle` is set, otherwise a single random vertex.
pub fn random_clique<R: Rng>(g: &PlaneGraph, prefer_triangle: bool, rng: &mut R) -> Vec<VertexId> {
    let tris: Vec<_> = g.faces().iter().filter(|f| f.len() == 3).collect();
    if prefer_triangle {
        if let Some(t) = tris.choose(rng) {
            let mut z = t.walk.clone();
            z.sort_unstable();
            return z;
        }
    }
    vec![rng.gen_range(0..g.vertex_count())]
}

impl EarBuilder {
    /// Continues growing an existing plane graph.
    pub fn from_plane(g: &PlaneGraph) -> Self {
        EarBuilder { rotation: g.rotations().to_vec() }
    }
}

/// Replaces each listed vertex of degree `d >= 3` by a `d`-cycle, each cycle
/// vertex keeping one of the old edges.
pub fn truncate(g: &PlaneGraph, vertices: &[VertexId]) -> PlaneGraph {
    let mut rotation: Vec<Vec<VertexId>> = g.rotations().to_vec();
    for &v in vertices {
        let old = rotation[v].clone();
        let d = old.len();
        assert!(d >= 3, "truncation needs degree at least 3");
        // the cycle vertex for old[0] reuses id v
        let ids: Vec<VertexId> = (0..d).map(|i| if i == 0 { v } else { rotation.len() + i - 1 }).collect();
        rotation.resize(rotation.len() + d - 1, Vec::new());
        for i in 0..d {
            let ext = old[i];
            rotation[ids[i]] = vec![ext, ids[(i + 1) % d], ids[(i + d - 1) % d]];
            if i > 0 {
                let slot = rotation[ext].iter().position(|&w| w == v).expect("symmetric rotation");
                rotation[ext][slot] = ids[i];
            }
        }
    }
    PlaneGraph::new(rotation).expect("truncation keeps the embedding valid")
}

/// A random 3-connected cubic plane graph on `m` vertices (`m` even, at
/// least 4), grown from `K4` by truncating random vertices.
pub fn random_cubic<R: Rng>(m: usize, rng: &mut R) -> PlaneGraph {
    assert!(m >= 4 && m.is_multiple_of(2));
    let k4 = from_coordinates(
        &[(0.0, 0.0), (0.0, 1.0), (-0.87, -0.5), (0.87, -0.5)],
        &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 3)],
    )
    .expect("K4 drawing is plane");
    let mut g = k4;
    while g.vertex_count() < m {
        let v = rng.gen_range(0..g.vertex_count());
        g = truncate(&g, &[v]);
    }
    g
}

/// A class member of minimum degree 3: the truncation of a random cubic
/// plane graph on `m` vertices (every vertex becomes a triangle, so all
/// other faces have length at least 6), plus up to `chords` chords that
/// create no 4- or 5-cycle.
pub fn random_dense_class_graph<R: Rng>(m: usize, chords: usize, rng: &mut R) -> PlaneGraph {
    let cubic = random_cubic(m, rng);
    let all: Vec<VertexId> = (0..cubic.vertex_count()).collect();
    let mut g = truncate(&cubic, &all);
    let mut b = EarBuilder::from_plane(&g);
    let mut added = 0;
    for _ in 0..chords * 20 {
        if added == chords {
            break;
        }
        let f = rng.gen_range(0..g.faces().len());
        let len = g.face(f).len();
        if len < 10 {
            continue;
        }
        let i = rng.gen_range(0..len);
        let j = rng.gen_range(0..len);
        if b.add_ear(&g, f, i, j, 0) {
            added += 1;
            g = b.plane();
        }
    }
    g
}

/// A mixed, seeded set of class members with a precolored clique each:
/// decorated honeycombs of several densities, triangle chains and random
/// ear-built graphs of 10 to 60 vertices.
pub fn corpus(seed: u64, count: usize) -> Vec<(PlaneGraph, Vec<VertexId>)> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let g = match i % 4 {
            0 => {
                let p = [0.2, 0.4, 0.6, 0.8][rng.gen_range(0..4)];
                decorated_honeycomb(rng.gen_range(5..10), rng.gen_range(4..8), p, &mut rng)
            }
            1 if i % 8 == 1 => triangle_chain(rng.gen_range(2..5), rng.gen_range(1..4)),
            _ => random_class_graph(rng.gen_range(10..=60), &mut rng),
        };
        let z = random_clique(&g, rng.gen_bool(0.6), &mut rng);
        out.push((g, z));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn honeycomb_faces_are_hexagons() {
        let g = honeycomb(7, 4).embed().unwrap();
        assert!(g.forbidden_cycles().is_empty());
        assert!(g.faces().iter().filter(|f| f.len() != 6).count() == 1, "only the outer face is long");
    }

    #[test]
    fn decorations_stay_in_class() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let g = decorated_honeycomb(7, 5, 0.4, &mut rng);
            assert!(g.forbidden_cycles().is_empty());
            assert!(g.graph().is_connected());
        }
    }

    #[test]
    fn chain_shape() {
        let g = triangle_chain(4, 3);
        assert_eq!(g.vertex_count(), 12 + 3 * 2);
        assert!(g.forbidden_cycles().is_empty());
        assert_eq!(g.faces().iter().filter(|f| f.len() == 3).count(), 4);
    }

    #[test]
    fn truncations_are_cubic_and_in_class() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for m in [4, 8, 16] {
            let c = random_cubic(m, &mut rng);
            assert_eq!(c.vertex_count(), m);
            assert!(c.graph().vertices().all(|v| c.degree(v) == 3));
            let g = random_dense_class_graph(m, 0, &mut rng);
            assert_eq!(g.vertex_count(), 3 * m);
            assert!(g.forbidden_cycles().is_empty());
            assert_eq!(g.faces().iter().filter(|f| f.len() == 3).count(), m);
        }
        let g = random_dense_class_graph(16, 6, &mut rng);
        assert!(g.forbidden_cycles().is_empty());
        assert!(g.graph().vertices().all(|v| g.degree(v) >= 3));
        assert!(g.graph().vertices().any(|v| g.degree(v) >= 4));
    }

    #[test]
    fn random_graphs_in_class() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [10, 20, 40, 60] {
            let g = random_class_graph(n, &mut rng);
            assert!(g.forbidden_cycles().is_empty());
            assert!(g.graph().is_connected());
            assert!(g.cut_vertices().is_empty(), "ears keep 2-connectivity");
            assert!(g.vertex_count() <= n);
        }
    }
}

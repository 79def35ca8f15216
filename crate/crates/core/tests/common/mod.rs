//! Hand-built host graphs, one or more per reducible configuration kind.
//!
//! Hosts are cacti: the configuration's own edges plus pendant triangles and
//! leaves that bring every vertex to the degree the configuration asks for.
//! Blocks are added one at a time and each new block's edges are appended to
//! the rotations, so no two blocks interleave and the embedding is plane.

#![allow(dead_code)]

use setcolor::gadgets::{PendantEdge, Shape};
use setcolor::graph::{PlaneGraph, VertexId};
use setcolor::reducer::{Gadget, Kind};

#[derive(Default)]
pub struct Host {
    adj: Vec<Vec<VertexId>>,
}

impl Host {
    pub fn vertex(&mut self) -> VertexId {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn vertices(&mut self, k: usize) -> Vec<VertexId> {
        (0..k).map(|_| self.vertex()).collect()
    }

    pub fn edge(&mut self, u: VertexId, v: VertexId) {
        self.adj[u].push(v);
        self.adj[v].push(u);
    }

    pub fn path(&mut self, vs: &[VertexId]) {
        for w in vs.windows(2) {
            self.edge(w[0], w[1]);
        }
    }

    /// Adds pendant triangles and leaves at `v` until it has degree `d`.
    pub fn pad(&mut self, v: VertexId, d: usize) {
        while self.adj[v].len() + 2 <= d {
            let (a, b) = (self.vertex(), self.vertex());
            self.edge(v, a);
            self.edge(v, b);
            self.edge(a, b);
        }
        if self.adj[v].len() < d {
            let a = self.vertex();
            self.edge(v, a);
        }
        assert_eq!(self.adj[v].len(), d);
    }

    pub fn plane(&self) -> PlaneGraph {
        PlaneGraph::new(self.adj.clone()).expect("cactus hosts are plane")
    }
}

/// A host graph with the configuration it was built around.
pub struct Fixture {
    pub name: String,
    pub kind: Kind,
    pub graph: PlaneGraph,
    /// Precolored clique, away from the configuration.
    pub z: Vec<VertexId>,
    /// The configuration's vertices in gadget order.
    pub vertices: Vec<VertexId>,
    pub gadget: Gadget,
}

/// The precolored vertex is the last padding vertex created, so it lies
/// outside the configuration.
fn finish(name: String, kind: Kind, h: Host, vertices: Vec<VertexId>, gadget: Gadget) -> Fixture {
    let z = h.adj.len() - 1;
    assert!(!vertices.contains(&z));
    Fixture { name, kind, graph: h.plane(), z: vec![z], vertices, gadget }
}

fn deg2() -> Fixture {
    let mut h = Host::default();
    let c = h.vertices(6);
    h.path(&c);
    h.edge(c[5], c[0]);
    h.vertex();
    let mut f = finish("deg2".into(), Kind::Deg2, h, vec![c[1]], Gadget::Single);
    // drop the spare vertex again and precolor the far side of the cycle
    f.graph = PlaneGraph::new(f.graph.rotations()[..6].to_vec()).unwrap();
    f.z = vec![c[3]];
    f
}

fn path33(k: usize) -> Fixture {
    let mut h = Host::default();
    let p = h.vertices(k);
    h.path(&p);
    for (i, &v) in p.iter().enumerate() {
        let d = if i < 2 || i == k - 1 { 3 } else { 4 };
        h.pad(v, d);
    }
    let shape = [Shape::P3, Shape::P4, Shape::P5, Shape::P6][k - 3];
    finish(format!("path33-k{k}"), Kind::Path33, h, p, Gadget::Shape(shape))
}

fn tria3() -> Fixture {
    let mut h = Host::default();
    let v = h.vertices(4);
    h.path(&v);
    h.edge(v[0], v[2]);
    for (i, d) in [4, 3, 4, 3].into_iter().enumerate() {
        h.pad(v[i], d);
    }
    finish("tria3".into(), Kind::Tria3, h, v, Gadget::Shape(Shape::Lollipop))
}

fn cycle6(long: [usize; 2]) -> Fixture {
    let mut h = Host::default();
    let c = h.vertices(6);
    h.path(&c);
    h.edge(c[5], c[0]);
    for (i, &v) in c.iter().enumerate() {
        h.pad(v, if long.contains(&i) { 3 } else { 4 });
    }
    let name = format!("cycle6-{}{}", long[0], long[1]);
    finish(name, Kind::Cycle6, h, c, Gadget::Cycle { long })
}

fn vert4() -> Fixture {
    let mut h = Host::default();
    let v = h.vertices(4);
    for &x in &v[1..] {
        h.edge(v[0], x);
        h.pad(x, 3);
    }
    h.pad(v[0], 4);
    finish("vert4".into(), Kind::Vert4, h, v, Gadget::Shape(Shape::Claw3))
}

fn path34(k: usize) -> Fixture {
    let mut h = Host::default();
    let p = h.vertices(k);
    h.path(&p);
    for (i, &v) in p.iter().enumerate() {
        let d = if i == 0 || i == 2 || i == k - 1 { 3 } else { 4 };
        h.pad(v, d);
    }
    finish(format!("path34-k{k}"), Kind::Path34, h, p, Gadget::Shape(Shape::PathV3Big(k)))
}

fn vert5m(edge: bool) -> Fixture {
    let mut h = Host::default();
    let v = h.vertices(5);
    for &x in &v[1..] {
        h.edge(v[0], x);
    }
    if edge {
        h.edge(v[3], v[4]);
    }
    for &x in &v[1..] {
        h.pad(x, 3);
    }
    h.pad(v[0], 5);
    let name = if edge { "vert5m-edge" } else { "vert5m" };
    finish(name.into(), Kind::Vert5M, h, v, Gadget::Shape(Shape::Claw4 { edge }))
}

fn vert5n3(extra: PendantEdge) -> Fixture {
    let mut h = Host::default();
    // v, v1, v2, v3, u1
    let v = h.vertices(5);
    for &x in &v[1..4] {
        h.edge(v[0], x);
    }
    h.edge(v[1], v[4]);
    match extra {
        PendantEdge::None => {}
        PendantEdge::V1V2 => h.edge(v[1], v[2]),
        PendantEdge::V1V3 => h.edge(v[1], v[3]),
        PendantEdge::V2V3 => h.edge(v[2], v[3]),
    }
    for &x in &v[1..] {
        h.pad(x, 3);
    }
    h.pad(v[0], 5);
    let shape = Shape::Claw3Pendant(extra);
    finish(shape.name(), Kind::Vert5N3, h, v, Gadget::Shape(shape))
}

fn vert5p43(edge: bool) -> Fixture {
    let mut h = Host::default();
    // u1, v1, v, v2, u2, v3
    let p = h.vertices(6);
    h.path(&p[..5]);
    h.edge(p[2], p[5]);
    if edge {
        h.edge(p[1], p[5]);
    }
    for (i, d) in [3, 4, 5, 3, 3, 3].into_iter().enumerate() {
        h.pad(p[i], d);
    }
    let shape = Shape::PathPlusLeaf { edge };
    finish(shape.name(), Kind::Vert5P43, h, p, Gadget::Shape(shape))
}

/// Every fixture: all nine kinds with their gadget variants.
pub fn fixtures() -> Vec<Fixture> {
    let mut out = vec![deg2()];
    out.extend((3..=6).map(path33));
    out.push(tria3());
    out.extend([[0, 1], [0, 2], [0, 3]].map(cycle6));
    out.push(vert4());
    out.extend((5..=7).map(path34));
    out.extend([false, true].map(vert5m));
    out.extend([PendantEdge::None, PendantEdge::V1V2, PendantEdge::V1V3, PendantEdge::V2V3].map(vert5n3));
    out.extend([false, true].map(vert5p43));
    out
}

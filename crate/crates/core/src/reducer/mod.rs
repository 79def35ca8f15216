//! Recursive (L:3)-coloring by splitting, deleting a reducible configuration,
//! and extending the coloring of the rest across it.

mod config;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::colorset::ColorSet;
use crate::discharging;
use crate::engine::{is_valid_coloring, DemandFunction, ListAssignment, SetColoring, Solver};
use crate::format;
use crate::graph::{PlaneGraph, PrecoloredClique, VertexId};

pub use config::{find_all, find_configuration, verify_configuration, Configuration, Gadget, Kind, NOMINAL_LIST_SIZE};

/// Graphs with at most this many vertices are colored by exhaustive search.
pub const BASE_CASE: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("{0}")]
    Failure(Box<FailureReport>),
}

/// Everything needed to reproduce a step that went wrong.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailureReport {
    pub reason: String,
    pub graph: String,
    pub lists: String,
    pub z: Vec<VertexId>,
    pub audit: Option<String>,
}

impl fmt::Display for FailureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FAILURE {}", self.reason)?;
        let z: Vec<String> = self.z.iter().map(|v| v.to_string()).collect();
        writeln!(f, "Z: {}", z.join(" "))?;
        f.write_str(&self.graph)?;
        f.write_str(&self.lists)?;
        if let Some(a) = &self.audit {
            for line in a.lines() {
                writeln!(f, "# {line}")?;
            }
        }
        Ok(())
    }
}

fn failure(g: &PlaneGraph, lists: &ListAssignment, z: &[VertexId], reason: String) -> ReduceError {
    let audit = discharging::audit(g, z).ok().map(|a| a.render(g));
    ReduceError::Failure(Box::new(FailureReport {
        reason,
        graph: format::write_graph(g),
        lists: format::write_lists(lists),
        z: z.to_vec(),
        audit,
    }))
}

/// Restricted lists on `h`: each list minus the colors `psi` gives to
/// neighbors outside `h`. Vertices of `h` are ignored in `psi`.
pub fn restrict_lists(
    g: &PlaneGraph,
    lists: &ListAssignment,
    h: &[VertexId],
    psi: &SetColoring,
) -> Result<Vec<ColorSet>, String> {
    for (u, v) in g.graph().edges() {
        if !h.contains(&u) && !h.contains(&v) && !psi[u].is_disjoint(psi[v]) {
            return Err(format!("coloring of the rest conflicts on edge {u}-{v}"));
        }
    }
    let mut out = Vec::with_capacity(h.len());
    for &v in h {
        let mut l = lists[v];
        let mut outside = 0;
        for &u in g.graph().neighbors(v) {
            if !h.contains(&u) {
                if psi[u].len() != 3 || !psi[u].is_subset(lists[u]) {
                    return Err(format!("vertex {u} is not properly colored"));
                }
                l = l.difference(psi[u]);
                outside += 1;
            }
        }
        debug_assert!(l.len() + 3 * outside >= lists[v].len());
        out.push(l);
    }
    Ok(out)
}

/// Counts of what the recursion did.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Stats {
    pub reductions: BTreeMap<Kind, usize>,
    pub base_cases: usize,
    pub component_splits: usize,
    pub cut_vertex_splits: usize,
    pub triangle_splits: usize,
    pub max_depth: usize,
}

impl Stats {
    pub fn total_reductions(&self) -> usize {
        self.reductions.values().sum()
    }
}

/// The recursive colorer.
#[derive(Debug, Clone)]
pub struct Reducer {
    pub base_case: usize,
    pub solver: Solver,
    pub stats: Stats,
}

impl Default for Reducer {
    fn default() -> Self {
        Reducer { base_case: BASE_CASE, solver: Solver::default(), stats: Stats::default() }
    }
}

fn sub_lists(lists: &ListAssignment, to_parent: &[VertexId]) -> ListAssignment {
    to_parent.iter().map(|&p| lists[p]).collect()
}

fn local_ids(to_parent: &[VertexId], parents: &[VertexId]) -> Vec<VertexId> {
    parents.iter().filter_map(|p| to_parent.iter().position(|q| q == p)).collect()
}

impl Reducer {
    pub fn new(base_case: usize) -> Self {
        Reducer { base_case, ..Reducer::default() }
    }

    /// Colors `g` from `lists` with 3 colors per vertex, `z` precolored.
    /// Precolored lists must already be the fixed 3-sets.
    pub fn color(&mut self, g: &PlaneGraph, lists: &ListAssignment, z: &[VertexId]) -> Result<SetColoring, ReduceError> {
        self.color_at(g, lists, z, 0)
    }

    fn color_at(&mut self, g: &PlaneGraph, lists: &ListAssignment, z: &[VertexId], depth: usize) -> Result<SetColoring, ReduceError> {
        self.stats.max_depth = self.stats.max_depth.max(depth);
        let n = g.vertex_count();
        let phi = if n <= self.base_case || z.len() == n {
            self.stats.base_cases += 1;
            let f = DemandFunction::uniform(n, 3);
            match self.solver.solve(g.graph(), lists, &f) {
                Ok(Some(phi)) => phi,
                Ok(None) => return Err(failure(g, lists, z, "base case has no coloring".into())),
                Err(e) => return Err(failure(g, lists, z, e.to_string())),
            }
        } else if !g.graph().is_connected() {
            self.stats.component_splits += 1;
            self.color_components(g, lists, z, depth)?
        } else if let Some(&c) = g.cut_vertices().first() {
            self.stats.cut_vertex_splits += 1;
            self.color_split(g, lists, z, &[c], depth)?
        } else if let Some(t) = g.nonfacial_triangles().first() {
            self.stats.triangle_splits += 1;
            self.color_split(g, lists, z, t, depth)?
        } else {
            let Some(c) = find_configuration(g, z) else {
                return Err(failure(g, lists, z, "no reducible configuration found".into()));
            };
            *self.stats.reductions.entry(c.kind).or_default() += 1;
            self.reduce_at(g, lists, z, &c, depth)?
        };
        let f = DemandFunction::uniform(n, 3);
        if let Err(v) = is_valid_coloring(g.graph(), lists, &f, &phi) {
            return Err(failure(g, lists, z, format!("produced an invalid coloring: {v}")));
        }
        Ok(phi)
    }

    fn color_components(&mut self, g: &PlaneGraph, lists: &ListAssignment, z: &[VertexId], depth: usize) -> Result<SetColoring, ReduceError> {
        let mut phi = SetColoring::empty(g.vertex_count());
        for comp in g.graph().components() {
            let (sub, to_parent) = g.induced(&comp);
            let mut l = sub_lists(lists, &to_parent);
            let mut zz = local_ids(&to_parent, z);
            if zz.is_empty() {
                // any 3 colors of the lowest vertex serve as its precoloring
                let low = l[0].lowest(3).ok_or_else(|| failure(g, lists, z, format!("list of {} too small", to_parent[0])))?;
                l[0] = low;
                zz = vec![0];
            }
            let part = self.color_at(&sub, &l, &zz, depth + 1)?;
            for (i, &p) in to_parent.iter().enumerate() {
                phi[p] = part[i];
            }
        }
        Ok(phi)
    }

    fn color_split(
        &mut self,
        g: &PlaneGraph,
        lists: &ListAssignment,
        z: &[VertexId],
        separator: &[VertexId],
        depth: usize,
    ) -> Result<SetColoring, ReduceError> {
        let split = g.split_at(separator, z).map_err(|e| failure(g, lists, z, e.to_string()))?;
        let (g1, g2) = (&split.g1, &split.g2);
        let z1 = local_ids(&g1.to_parent, z);
        let phi1 = self.color_at(&g1.graph, &sub_lists(lists, &g1.to_parent), &z1, depth + 1)?;
        let mut phi = SetColoring::empty(g.vertex_count());
        for (i, &p) in g1.to_parent.iter().enumerate() {
            phi[p] = phi1[i];
        }
        let mut l2 = sub_lists(lists, &g2.to_parent);
        let z2 = local_ids(&g2.to_parent, separator);
        for &s in &z2 {
            l2[s] = phi[g2.to_parent[s]];
        }
        let phi2 = self.color_at(&g2.graph, &l2, &z2, depth + 1)?;
        for (i, &p) in g2.to_parent.iter().enumerate() {
            phi[p] = phi2[i];
        }
        Ok(phi)
    }

    /// Deletes the configuration's delete set, colors the rest recursively,
    /// and extends across the configuration with its gadget.
    pub fn reduce_via(&mut self, g: &PlaneGraph, lists: &ListAssignment, z: &[VertexId], c: &Configuration) -> Result<SetColoring, ReduceError> {
        self.reduce_at(g, lists, z, c, 0)
    }

    fn reduce_at(
        &mut self,
        g: &PlaneGraph,
        lists: &ListAssignment,
        z: &[VertexId],
        c: &Configuration,
        depth: usize,
    ) -> Result<SetColoring, ReduceError> {
        verify_configuration(g, z, Some(lists), c).map_err(|e| failure(g, lists, z, format!("{c}: {e}")))?;
        let (rest, to_parent) = g.without(&c.delete);
        let zr = local_ids(&to_parent, z);
        let psi_rest = self.color_at(&rest, &sub_lists(lists, &to_parent), &zr, depth + 1)?;
        let mut psi = SetColoring::empty(g.vertex_count());
        for (i, &p) in to_parent.iter().enumerate() {
            if !c.vertices.contains(&p) {
                psi[p] = psi_rest[i];
            }
        }
        let restricted = restrict_lists(g, lists, &c.vertices, &psi).map_err(|e| failure(g, lists, z, e))?;
        let ext = c.gadget.color(&restricted).map_err(|e| failure(g, lists, z, format!("{c}: gadget failed: {e}")))?;
        for (i, &v) in c.vertices.iter().enumerate() {
            psi[v] = ext[i];
        }
        Ok(psi)
    }
}

/// Checks the input contract and returns lists with precolored vertices set
/// to their fixed colors.
pub fn prepare(g: &PlaneGraph, lists: &ListAssignment, z: &PrecoloredClique) -> Result<ListAssignment, ReduceError> {
    let n = g.vertex_count();
    if lists.len() != n {
        return Err(ReduceError::InvalidInput(format!("{} lists for {n} vertices", lists.len())));
    }
    if let Some(c) = g.forbidden_cycles().first() {
        return Err(ReduceError::InvalidInput(format!("graph has a 4- or 5-cycle {c:?}")));
    }
    let mut l = lists.clone();
    for (v, c) in z.iter() {
        l[v] = c;
    }
    if let Some(v) = (0..n).find(|&v| !z.contains(v) && l[v].len() < NOMINAL_LIST_SIZE) {
        return Err(ReduceError::InvalidInput(format!(
            "vertex {v} has {} colors, needs at least {NOMINAL_LIST_SIZE}",
            l[v].len()
        )));
    }
    Ok(l)
}

/// Default precolored clique: vertex 0 with its three lowest colors.
pub fn default_clique(g: &PlaneGraph, lists: &ListAssignment) -> Result<PrecoloredClique, ReduceError> {
    let c = lists
        .iter()
        .next()
        .and_then(|l| l.lowest(3))
        .ok_or_else(|| ReduceError::InvalidInput("vertex 0 needs at least 3 colors".into()))?;
    PrecoloredClique::new(g.graph(), vec![0], vec![c]).map_err(|e| ReduceError::InvalidInput(e.to_string()))
}

/// Colors `g` with 3 colors per vertex from `lists`, honoring the
/// precolored clique, and checks the result against the original lists.
pub fn reduce_and_extend(
    g: &PlaneGraph,
    lists: &ListAssignment,
    z: &PrecoloredClique,
) -> Result<(SetColoring, Stats), ReduceError> {
    let l = prepare(g, lists, z)?;
    let mut r = Reducer::default();
    let phi = r.color(g, &l, z.members())?;
    let f = DemandFunction::uniform(g.vertex_count(), 3);
    if let Err(v) = is_valid_coloring(g.graph(), &l, &f, &phi) {
        return Err(failure(g, &l, z.members(), format!("final coloring invalid: {v}")));
    }
    Ok((phi, r.stats))
}

/// The largest color class of a proper set coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentSet {
    pub color: u32,
    pub vertices: Vec<VertexId>,
    pub n: usize,
}

impl IndependentSet {
    pub fn ratio(&self) -> f64 {
        if self.n == 0 {
            1.0
        } else {
            self.vertices.len() as f64 / self.n as f64
        }
    }
}

/// Picks the largest color class of `phi`, which is an independent set.
/// With 3 colors per vertex out of 11, it has at least `3n/11` vertices.
pub fn independence_ratio(g: &PlaneGraph, phi: &SetColoring) -> Result<IndependentSet, String> {
    let n = g.vertex_count();
    if phi.len() != n {
        return Err(format!("coloring covers {} vertices, graph has {n}", phi.len()));
    }
    for (u, v) in g.graph().edges() {
        if !phi[u].is_disjoint(phi[v]) {
            return Err(format!("edge {u}-{v} shares colors"));
        }
    }
    if g.edge_count() == 0 {
        return Ok(IndependentSet { color: 0, vertices: (0..n).collect(), n });
    }
    let mut best: Option<IndependentSet> = None;
    for c in phi.palette() {
        let vertices: Vec<VertexId> = (0..n).filter(|&v| phi[v].contains(c)).collect();
        if best.as_ref().is_none_or(|b| vertices.len() > b.vertices.len()) {
            best = Some(IndependentSet { color: c, vertices, n });
        }
    }
    best.ok_or_else(|| "coloring uses no colors".to_string())
}

#[cfg(test)]
mod tests;

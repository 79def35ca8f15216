//! (L:f)-set coloring: validation, exact search, list reduction, greedy
//! coloring and the triangle Hall test.

use std::fmt;
use std::ops::{Index, IndexMut};

use thiserror::Error;

use crate::colorset::ColorSet;
use crate::graph::{Graph, VertexId};

/// Default vertex limit for [`solve`].
pub const DEFAULT_GUARD: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("instance has {n} vertices, above the search guard of {guard}")]
    GuardExceeded { n: usize, guard: usize },
    #[error("expected {expected} entries, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("partial coloring at vertex {0} uses colors outside its list")]
    PartialNotInList(VertexId),
    #[error("partial coloring at vertex {vertex} has {got} colors but demand is {demand}")]
    PartialTooLarge { vertex: VertexId, got: usize, demand: u32 },
    #[error("partial coloring conflicts on edge {0}-{1}")]
    PartialConflict(VertexId, VertexId),
    #[error("greedy precondition fails at position {index} (vertex {vertex}): list has {have} colors, needs {need}")]
    GreedyPrecondition { index: usize, vertex: VertexId, have: usize, need: usize },
    #[error("greedy order is not a permutation of the vertices")]
    BadOrder,
}

/// Per-vertex lists `L(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ListAssignment(Vec<ColorSet>);

/// Per-vertex demands `f(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DemandFunction(Vec<u32>);

/// Per-vertex color sets `φ(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SetColoring(Vec<ColorSet>);

macro_rules! vec_newtype {
    ($t:ident, $item:ty) => {
        impl $t {
            pub fn new(items: Vec<$item>) -> Self {
                $t(items)
            }
            pub fn len(&self) -> usize {
                self.0.len()
            }
            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }
            pub fn as_slice(&self) -> &[$item] {
                &self.0
            }
            pub fn into_inner(self) -> Vec<$item> {
                self.0
            }
            pub fn iter(&self) -> std::slice::Iter<'_, $item> {
                self.0.iter()
            }
        }
        impl Index<VertexId> for $t {
            type Output = $item;
            fn index(&self, v: VertexId) -> &$item {
                &self.0[v]
            }
        }
        impl IndexMut<VertexId> for $t {
            fn index_mut(&mut self, v: VertexId) -> &mut $item {
                &mut self.0[v]
            }
        }
        impl From<Vec<$item>> for $t {
            fn from(items: Vec<$item>) -> Self {
                $t(items)
            }
        }
        impl FromIterator<$item> for $t {
            fn from_iter<I: IntoIterator<Item = $item>>(iter: I) -> Self {
                $t(iter.into_iter().collect())
            }
        }
    };
}

vec_newtype!(ListAssignment, ColorSet);
vec_newtype!(DemandFunction, u32);
vec_newtype!(SetColoring, ColorSet);

impl DemandFunction {
    pub fn uniform(n: usize, k: u32) -> Self {
        DemandFunction(vec![k; n])
    }
}

impl SetColoring {
    pub fn empty(n: usize) -> Self {
        SetColoring(vec![ColorSet::EMPTY; n])
    }

    /// Vertex-wise union with another coloring of the same graph.
    pub fn union(&self, other: &SetColoring) -> SetColoring {
        self.0.iter().zip(&other.0).map(|(a, b)| a.union(*b)).collect()
    }

    /// Colors used anywhere.
    pub fn palette(&self) -> ColorSet {
        self.0.iter().fold(ColorSet::EMPTY, |acc, c| acc.union(*c))
    }
}

/// The first reason a coloring is not a valid (L:f)-coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    LengthMismatch { expected: usize, got: usize },
    NotInList { vertex: VertexId, stray: ColorSet },
    WrongSize { vertex: VertexId, expected: u32, got: usize },
    EdgeConflict { u: VertexId, v: VertexId, shared: ColorSet },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::LengthMismatch { expected, got } => write!(f, "coloring covers {got} vertices, graph has {expected}"),
            Violation::NotInList { vertex, stray } => write!(f, "vertex {vertex} uses colors {stray} outside its list"),
            Violation::WrongSize { vertex, expected, got } => {
                write!(f, "vertex {vertex} has {got} colors, demand is {expected}")
            }
            Violation::EdgeConflict { u, v, shared } => write!(f, "edge {u}-{v} shares colors {shared}"),
        }
    }
}

/// Checks containment in lists, demand sizes, and disjointness across edges,
/// in that order per vertex.
pub fn is_valid_coloring(g: &Graph, l: &ListAssignment, f: &DemandFunction, phi: &SetColoring) -> Result<(), Violation> {
    let n = g.vertex_count();
    for got in [l.len(), f.len(), phi.len()] {
        if got != n {
            return Err(Violation::LengthMismatch { expected: n, got });
        }
    }
    for v in g.vertices() {
        let stray = phi[v].difference(l[v]);
        if !stray.is_empty() {
            return Err(Violation::NotInList { vertex: v, stray });
        }
        if phi[v].len() != f[v] as usize {
            return Err(Violation::WrongSize { vertex: v, expected: f[v], got: phi[v].len() });
        }
    }
    for (u, v) in g.edges() {
        let shared = phi[u].intersection(phi[v]);
        if !shared.is_empty() {
            return Err(Violation::EdgeConflict { u, v, shared });
        }
    }
    Ok(())
}

fn check_sizes(g: &Graph, l: &ListAssignment, f: &DemandFunction) -> Result<(), EngineError> {
    let n = g.vertex_count();
    for got in [l.len(), f.len()] {
        if got != n {
            return Err(EngineError::SizeMismatch { expected: n, got });
        }
    }
    Ok(())
}

/// Exact backtracking search for (L:f)-colorings.
#[derive(Debug, Clone, Copy)]
pub struct Solver {
    pub guard: usize,
}

impl Default for Solver {
    fn default() -> Self {
        Solver { guard: DEFAULT_GUARD }
    }
}

/// Solves with the default guard. `Ok(None)` means UNSAT.
pub fn solve(g: &Graph, l: &ListAssignment, f: &DemandFunction) -> Result<Option<SetColoring>, EngineError> {
    Solver::default().solve(g, l, f)
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u64 = 1;
    for i in 0..k {
        r = r * (n - i) as u64 / (i + 1) as u64;
    }
    r
}

struct Search<'a> {
    g: &'a Graph,
    f: &'a DemandFunction,
    triangles: Vec<[VertexId; 3]>,
    avail: Vec<ColorSet>,
    phi: Vec<Option<ColorSet>>,
}

impl Search<'_> {
    fn consistent(&self) -> bool {
        let g = self.g;
        for v in g.vertices() {
            if self.phi[v].is_none() && self.avail[v].len() < self.f[v] as usize {
                return false;
            }
        }
        for (u, v) in g.edges() {
            if self.phi[u].is_none()
                && self.phi[v].is_none()
                && self.avail[u].union(self.avail[v]).len() < (self.f[u] + self.f[v]) as usize
            {
                return false;
            }
        }
        for &[a, b, c] in &self.triangles {
            if self.phi[a].is_none()
                && self.phi[b].is_none()
                && self.phi[c].is_none()
                && self.avail[a].union(self.avail[b]).union(self.avail[c]).len()
                    < (self.f[a] + self.f[b] + self.f[c]) as usize
            {
                return false;
            }
        }
        true
    }

    fn pick(&self) -> Option<VertexId> {
        let mut best: Option<(u64, VertexId)> = None;
        for v in self.g.vertices() {
            if self.phi[v].is_some() {
                continue;
            }
            let choices = binomial(self.avail[v].len(), self.f[v] as usize);
            if best.is_none_or(|(c, _)| choices < c) {
                best = Some((choices, v));
            }
        }
        best.map(|(_, v)| v)
    }

    fn run(&mut self) -> bool {
        if !self.consistent() {
            return false;
        }
        let Some(v) = self.pick() else {
            return true;
        };
        let need = self.f[v] as usize;
        let saved: Vec<(VertexId, ColorSet)> = self.g.neighbors(v).iter().map(|&w| (w, self.avail[w])).collect();
        for choice in self.avail[v].subsets(need) {
            self.phi[v] = Some(choice);
            for &(w, a) in &saved {
                self.avail[w] = a.difference(choice);
            }
            if self.run() {
                return true;
            }
        }
        for &(w, a) in &saved {
            self.avail[w] = a;
        }
        self.phi[v] = None;
        false
    }
}

impl Solver {
    pub fn new(guard: usize) -> Self {
        Solver { guard }
    }

    /// Returns a coloring, or `None` when no (L:f)-coloring exists.
    ///
    /// Vertices are branched in order of fewest remaining choices (ties to the
    /// lowest id) and subsets are tried in lexicographic color order.
    pub fn solve(&self, g: &Graph, l: &ListAssignment, f: &DemandFunction) -> Result<Option<SetColoring>, EngineError> {
        check_sizes(g, l, f)?;
        if g.vertex_count() > self.guard {
            return Err(EngineError::GuardExceeded { n: g.vertex_count(), guard: self.guard });
        }
        let mut s = Search {
            g,
            f,
            triangles: g.triangles(),
            avail: l.as_slice().to_vec(),
            phi: vec![None; g.vertex_count()],
        };
        if s.run() {
            Ok(Some(s.phi.into_iter().map(|c| c.unwrap()).collect()))
        } else {
            Ok(None)
        }
    }
}

/// List reduction by a partial coloring `ψ`: removes `ψ(v)` and the colors of
/// neighbors from each list and lowers demands by `|ψ(v)|`. Any (L':f')-coloring
/// `φ'` gives the (L:f)-coloring `ψ ∪ φ'`.
pub fn reduce_lists(
    g: &Graph,
    l: &ListAssignment,
    f: &DemandFunction,
    psi: &SetColoring,
) -> Result<(ListAssignment, DemandFunction), EngineError> {
    check_sizes(g, l, f)?;
    if psi.len() != g.vertex_count() {
        return Err(EngineError::SizeMismatch { expected: g.vertex_count(), got: psi.len() });
    }
    for v in g.vertices() {
        if !psi[v].is_subset(l[v]) {
            return Err(EngineError::PartialNotInList(v));
        }
        if psi[v].len() > f[v] as usize {
            return Err(EngineError::PartialTooLarge { vertex: v, got: psi[v].len(), demand: f[v] });
        }
    }
    for (u, v) in g.edges() {
        if !psi[u].is_disjoint(psi[v]) {
            return Err(EngineError::PartialConflict(u, v));
        }
    }
    let lists = g
        .vertices()
        .map(|v| {
            let blocked = g.neighbors(v).iter().fold(psi[v], |acc, &u| acc.union(psi[u]));
            l[v].difference(blocked)
        })
        .collect();
    let demands = g.vertices().map(|v| f[v] - psi[v].len() as u32).collect();
    Ok((lists, demands))
}

/// Checks `|L(v_i)| >= f(v_i) + Σ f(v_j)` over earlier neighbors `v_j`.
pub fn greedy_precondition(g: &Graph, l: &ListAssignment, f: &DemandFunction, order: &[VertexId]) -> Result<(), EngineError> {
    check_sizes(g, l, f)?;
    let n = g.vertex_count();
    let mut pos = vec![usize::MAX; n];
    if order.len() != n {
        return Err(EngineError::BadOrder);
    }
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(EngineError::BadOrder);
        }
        pos[v] = i;
    }
    for (i, &v) in order.iter().enumerate() {
        let earlier: u32 = g.neighbors(v).iter().filter(|&&u| pos[u] < i).map(|&u| f[u]).sum();
        let need = (f[v] + earlier) as usize;
        if l[v].len() < need {
            return Err(EngineError::GreedyPrecondition { index: i, vertex: v, have: l[v].len(), need });
        }
    }
    Ok(())
}

/// Colors vertices in `order`, each with the lowest available colors.
pub fn greedy_color(g: &Graph, l: &ListAssignment, f: &DemandFunction, order: &[VertexId]) -> Result<SetColoring, EngineError> {
    greedy_precondition(g, l, f, order)?;
    let mut phi = SetColoring::empty(g.vertex_count());
    for &v in order {
        let used = g.neighbors(v).iter().fold(ColorSet::EMPTY, |acc, &u| acc.union(phi[u]));
        phi[v] = l[v].difference(used).lowest(f[v] as usize).expect("guaranteed by the precondition");
    }
    Ok(phi)
}

/// One of the seven union-size conditions of the triangle test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HallCondition {
    /// `|L(v_i)| >= 3`
    Single(usize),
    /// `|L(v_i) ∪ L(v_j)| >= 6`
    Pair(usize, usize),
    /// `|L(v_1) ∪ L(v_2) ∪ L(v_3)| >= 9`
    Triple,
}

/// All union sizes of a triangle's lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallCertificate {
    pub singles: [usize; 3],
    /// Unions for the pairs (0,1), (0,2), (1,2).
    pub pairs: [usize; 3],
    pub triple: usize,
    pub failed: Vec<HallCondition>,
}

impl HallCertificate {
    pub fn new(lists: &[ColorSet; 3]) -> Self {
        let singles = [lists[0].len(), lists[1].len(), lists[2].len()];
        let pair_idx = [(0, 1), (0, 2), (1, 2)];
        let pairs = pair_idx.map(|(i, j)| lists[i].union(lists[j]).len());
        let triple = lists[0].union(lists[1]).union(lists[2]).len();
        let mut failed = Vec::new();
        for (i, &s) in singles.iter().enumerate() {
            if s < 3 {
                failed.push(HallCondition::Single(i));
            }
        }
        for (k, &(i, j)) in pair_idx.iter().enumerate() {
            if pairs[k] < 6 {
                failed.push(HallCondition::Pair(i, j));
            }
        }
        if triple < 9 {
            failed.push(HallCondition::Triple);
        }
        HallCertificate { singles, pairs, triple, failed }
    }

    pub fn holds(&self) -> bool {
        self.failed.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleVerdict {
    pub certificate: HallCertificate,
    pub coloring: Option<[ColorSet; 3]>,
}

/// Decides (L:3)-colorability of a triangle from its three lists and, when
/// colorable, builds a coloring from a matching of colors to the nine
/// demand slots.
pub fn triangle_colorable(lists: [ColorSet; 3]) -> TriangleVerdict {
    let certificate = HallCertificate::new(&lists);
    let coloring = if certificate.holds() { match_slots(&lists, 3) } else { None };
    debug_assert_eq!(coloring.is_some(), certificate.holds());
    TriangleVerdict { certificate, coloring }
}

/// Bipartite matching of colors to `k` slots per list (augmenting paths).
/// Returns the coloring if every slot is matched.
pub fn match_slots<const N: usize>(lists: &[ColorSet; N], k: usize) -> Option<[ColorSet; N]> {
    let slots = N * k;
    let mut color_of_slot: Vec<Option<u32>> = vec![None; slots];
    let mut slot_of_color: [Option<usize>; 64] = [None; 64];

    fn augment<const N: usize>(
        slot: usize,
        k: usize,
        lists: &[ColorSet; N],
        seen: &mut u64,
        color_of_slot: &mut [Option<u32>],
        slot_of_color: &mut [Option<usize>; 64],
    ) -> bool {
        for c in lists[slot / k].iter() {
            if *seen & (1u64 << c) != 0 {
                continue;
            }
            *seen |= 1u64 << c;
            let free = match slot_of_color[c as usize] {
                None => true,
                Some(other) => augment(other, k, lists, seen, color_of_slot, slot_of_color),
            };
            if free {
                slot_of_color[c as usize] = Some(slot);
                color_of_slot[slot] = Some(c);
                return true;
            }
        }
        false
    }

    for slot in 0..slots {
        let mut seen = 0u64;
        if !augment(slot, k, lists, &mut seen, &mut color_of_slot, &mut slot_of_color) {
            return None;
        }
    }
    let mut out = [ColorSet::EMPTY; N];
    for (slot, c) in color_of_slot.iter().enumerate() {
        out[slot / k].insert(c.expect("all slots matched"));
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(v: &[u32]) -> ColorSet {
        v.iter().copied().collect()
    }

    fn triangle() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)])
    }

    #[test]
    fn validity_examples() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        let l = ListAssignment::new(vec![ColorSet::range(1, 9); 2]);
        let f = DemandFunction::uniform(2, 3);
        let ok = SetColoring::new(vec![cs(&[1, 2, 3]), cs(&[4, 5, 6])]);
        assert!(is_valid_coloring(&g, &l, &f, &ok).is_ok());
        let clash = SetColoring::new(vec![cs(&[1, 2, 3]), cs(&[3, 4, 5])]);
        assert_eq!(
            is_valid_coloring(&g, &l, &f, &clash),
            Err(Violation::EdgeConflict { u: 0, v: 1, shared: cs(&[3]) })
        );
        let short = SetColoring::new(vec![cs(&[1, 2]), cs(&[4, 5, 6])]);
        assert!(matches!(is_valid_coloring(&g, &l, &f, &short), Err(Violation::WrongSize { vertex: 0, .. })));
    }

    #[test]
    fn solve_examples() {
        let g = triangle();
        let f = DemandFunction::uniform(3, 3);
        let same = ListAssignment::new(vec![ColorSet::range(1, 5); 3]);
        assert_eq!(solve(&g, &same, &f).unwrap(), None);
        let disjoint = ListAssignment::new(vec![cs(&[1, 2, 3]), cs(&[4, 5, 6]), cs(&[7, 8, 9])]);
        let phi = solve(&g, &disjoint, &f).unwrap().unwrap();
        assert!(is_valid_coloring(&g, &disjoint, &f, &phi).is_ok());
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let l = ListAssignment::new(vec![ColorSet::range(1, 5), ColorSet::range(1, 8), ColorSet::range(4, 8)]);
        let phi = solve(&path, &l, &f).unwrap().unwrap();
        assert!(is_valid_coloring(&path, &l, &f, &phi).is_ok());
    }

    #[test]
    fn solve_respects_guard() {
        let g = Graph::empty(20);
        let l = ListAssignment::new(vec![ColorSet::range(1, 3); 20]);
        let f = DemandFunction::uniform(20, 3);
        assert_eq!(solve(&g, &l, &f), Err(EngineError::GuardExceeded { n: 20, guard: 16 }));
        assert!(Solver::new(20).solve(&g, &l, &f).unwrap().is_some());
    }

    #[test]
    fn reduce_lists_examples() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        let l = ListAssignment::new(vec![ColorSet::range(1, 5), ColorSet::range(1, 5)]);
        let f = DemandFunction::uniform(2, 3);
        let (l2, f2) = reduce_lists(&g, &l, &f, &SetColoring::empty(2)).unwrap();
        assert_eq!((l2, f2), (l.clone(), f.clone()));
        let psi = SetColoring::new(vec![ColorSet::EMPTY, cs(&[1, 2])]);
        let (l2, f2) = reduce_lists(&g, &l, &f, &psi).unwrap();
        assert_eq!(l2[0], cs(&[3, 4, 5]));
        assert_eq!(f2.as_slice(), &[3, 1]);
        let bad = SetColoring::new(vec![cs(&[1]), cs(&[1])]);
        assert_eq!(reduce_lists(&g, &l, &f, &bad), Err(EngineError::PartialConflict(0, 1)));
    }

    #[test]
    fn greedy_examples() {
        let g = Graph::empty(1);
        let phi = greedy_color(&g, &ListAssignment::new(vec![cs(&[4, 7, 9])]), &DemandFunction::uniform(1, 3), &[0]).unwrap();
        assert_eq!(phi[0], cs(&[4, 7, 9]));

        let p = Graph::from_edges(2, &[(0, 1)]);
        let l = ListAssignment::new(vec![cs(&[1, 2, 3]), ColorSet::range(1, 6)]);
        assert!(greedy_color(&p, &l, &DemandFunction::uniform(2, 3), &[0, 1]).is_ok());
        assert!(matches!(
            greedy_color(&p, &l, &DemandFunction::uniform(2, 3), &[1, 0]),
            Err(EngineError::GreedyPrecondition { index: 1, vertex: 0, .. })
        ));

        // sizes (4,5,2,3), demands (2,2,2,1), order v3 v4 v2 v1
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let l = ListAssignment::new(vec![cs(&[1, 2, 3, 4]), cs(&[1, 2, 3, 4, 5]), cs(&[1, 2]), cs(&[1, 2, 3])]);
        let f = DemandFunction::new(vec![2, 2, 2, 1]);
        let phi = greedy_color(&p4, &l, &f, &[2, 3, 1, 0]).unwrap();
        assert!(is_valid_coloring(&p4, &l, &f, &phi).is_ok());
    }

    #[test]
    fn triangle_examples() {
        let all = triangle_colorable([ColorSet::range(1, 9); 3]);
        assert!(all.certificate.holds());
        let phi = all.coloring.unwrap();
        assert!(phi.iter().all(|c| c.len() == 3));
        assert_eq!(phi[0].union(phi[1]).union(phi[2]).len(), 9);

        let pair = triangle_colorable([ColorSet::range(1, 5), ColorSet::range(1, 5), ColorSet::range(10, 20)]);
        assert_eq!(pair.coloring, None);
        assert!(pair.certificate.failed.contains(&HallCondition::Pair(0, 1)));
    }
}

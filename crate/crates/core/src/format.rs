//! Line-oriented text formats for graphs, lists, demands and colorings.
//!
//! ```text
//! # comment
//! 0: 1 2          rotation of vertex 0
//! Z: 0            precolored clique
//! Lz 0: 1 2 3     its fixed colors
//! L 1: 1 2 3 4    list
//! f 1: 2          demand (default 3)
//! phi 1: 1 4      coloring
//! ```
//!
//! One file may mix any of these; each reader picks the lines it needs.
//! Report lines starting with `RESULT`, `XFER` or `CONFIG` are skipped, so
//! command output can be read back directly.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::colorset::{ColorSet, MAX_COLOR};
use crate::engine::{DemandFunction, ListAssignment, SetColoring};
use crate::graph::{GraphError, PlaneGraph, PrecoloredClique, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("{0}")]
    Missing(String),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

/// Everything a text file can say, keyed by vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Document {
    pub rotation: BTreeMap<VertexId, Vec<VertexId>>,
    pub z: Option<Vec<VertexId>>,
    pub z_colors: BTreeMap<VertexId, ColorSet>,
    pub lists: BTreeMap<VertexId, ColorSet>,
    pub demands: BTreeMap<VertexId, u32>,
    pub phi: BTreeMap<VertexId, ColorSet>,
}

fn numbers(text: &str, line: usize) -> Result<Vec<usize>, FormatError> {
    text.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| syntax(line, format!("expected a number, found `{t}`"))))
        .collect()
}

fn colors(text: &str, line: usize) -> Result<ColorSet, FormatError> {
    let mut set = ColorSet::EMPTY;
    for c in numbers(text, line)? {
        if c > MAX_COLOR as usize {
            return Err(syntax(line, format!("color {c} is above {MAX_COLOR}")));
        }
        if set.contains(c as u32) {
            return Err(syntax(line, format!("color {c} repeated")));
        }
        set.insert(c as u32);
    }
    Ok(set)
}

fn one_id(text: &str, line: usize) -> Result<VertexId, FormatError> {
    match numbers(text, line)?.as_slice() {
        [v] => Ok(*v),
        _ => Err(syntax(line, "expected one vertex id")),
    }
}

fn insert_once<T>(map: &mut BTreeMap<VertexId, T>, v: VertexId, value: T, line: usize, what: &str) -> Result<(), FormatError> {
    if map.insert(v, value).is_some() {
        return Err(syntax(line, format!("{what} for vertex {v} given twice")));
    }
    Ok(())
}

impl Document {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut doc = Document::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() || ["RESULT", "XFER", "CONFIG"].iter().any(|t| content.starts_with(t)) {
                continue;
            }
            let Some((head, rest)) = content.split_once(':') else {
                return Err(syntax(line, "missing `:`"));
            };
            let head = head.trim();
            let mut words = head.split_whitespace();
            match (words.next(), words.next(), words.next()) {
                (Some("Z"), None, None) => {
                    if doc.z.is_some() {
                        return Err(syntax(line, "`Z:` given twice"));
                    }
                    doc.z = Some(numbers(rest, line)?);
                }
                (Some(tag @ ("Lz" | "L" | "f" | "phi")), Some(id), None) => {
                    let v = one_id(id, line)?;
                    match tag {
                        "Lz" => insert_once(&mut doc.z_colors, v, colors(rest, line)?, line, "Lz")?,
                        "L" => insert_once(&mut doc.lists, v, colors(rest, line)?, line, "list")?,
                        "phi" => insert_once(&mut doc.phi, v, colors(rest, line)?, line, "phi")?,
                        _ => {
                            let k = one_id(rest, line)? as u32;
                            insert_once(&mut doc.demands, v, k, line, "demand")?;
                        }
                    }
                }
                (Some(id), None, None) => {
                    let v = one_id(id, line)?;
                    insert_once(&mut doc.rotation, v, numbers(rest, line)?, line, "rotation")?;
                }
                _ => return Err(syntax(line, format!("unrecognized line `{content}`"))),
            }
        }
        Ok(doc)
    }

    /// The plane graph; vertex ids must be exactly `0..n`.
    pub fn plane_graph(&self) -> Result<PlaneGraph, FormatError> {
        let n = self.rotation.len();
        if n == 0 {
            return Err(FormatError::Missing("no vertex lines".into()));
        }
        if let Some((&v, _)) = self.rotation.iter().next_back().filter(|(&v, _)| v != n - 1) {
            return Err(FormatError::Missing(format!("vertex ids must be 0..{n}, found {v}")));
        }
        Ok(PlaneGraph::new(self.rotation.values().cloned().collect())?)
    }

    /// The precolored clique, if the file declares one.
    pub fn clique(&self, g: &PlaneGraph) -> Result<Option<PrecoloredClique>, FormatError> {
        let Some(z) = &self.z else {
            if let Some(&v) = self.z_colors.keys().next() {
                return Err(FormatError::Missing(format!("`Lz {v}` given without a `Z:` line")));
            }
            return Ok(None);
        };
        let mut cols = Vec::with_capacity(z.len());
        for &v in z {
            let c = self.z_colors.get(&v).ok_or_else(|| FormatError::Missing(format!("no `Lz {v}` line")))?;
            cols.push(*c);
        }
        if let Some(&v) = self.z_colors.keys().find(|v| !z.contains(v)) {
            return Err(FormatError::Missing(format!("`Lz {v}` for a vertex outside Z")));
        }
        Ok(Some(PrecoloredClique::new(g.graph(), z.clone(), cols)?))
    }

    /// Lists for all `n` vertices; precolored vertices take their fixed colors
    /// when they have no `L` line.
    pub fn list_assignment(&self, n: usize) -> Result<ListAssignment, FormatError> {
        (0..n)
            .map(|v| {
                self.lists
                    .get(&v)
                    .or_else(|| self.z_colors.get(&v))
                    .copied()
                    .ok_or_else(|| FormatError::Missing(format!("no list for vertex {v}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(ListAssignment::new)
    }

    /// Demands, defaulting to 3.
    pub fn demand_function(&self, n: usize) -> DemandFunction {
        DemandFunction::new((0..n).map(|v| self.demands.get(&v).copied().unwrap_or(3)).collect())
    }

    pub fn coloring(&self, n: usize) -> Result<SetColoring, FormatError> {
        (0..n)
            .map(|v| self.phi.get(&v).copied().ok_or_else(|| FormatError::Missing(format!("no phi for vertex {v}"))))
            .collect::<Result<Vec<_>, _>>()
            .map(SetColoring::new)
    }

    /// Ids used by list, demand or coloring lines that are not below `n`.
    pub fn out_of_range(&self, n: usize) -> Option<VertexId> {
        let keys = self.lists.keys().chain(self.demands.keys()).chain(self.phi.keys()).chain(self.z_colors.keys());
        keys.copied().find(|&v| v >= n)
    }
}

pub fn write_graph(g: &PlaneGraph) -> String {
    let mut out = String::new();
    for v in 0..g.vertex_count() {
        let ns: Vec<String> = g.rotation(v).iter().map(|w| w.to_string()).collect();
        let _ = writeln!(out, "{v}: {}", ns.join(" "));
    }
    out
}

pub fn write_clique(z: &PrecoloredClique) -> String {
    let ids: Vec<String> = z.members().iter().map(|v| v.to_string()).collect();
    let mut out = format!("Z: {}\n", ids.join(" "));
    for (v, c) in z.iter() {
        let _ = writeln!(out, "Lz {v}: {c}");
    }
    out
}

pub fn write_lists(l: &ListAssignment) -> String {
    let mut out = String::new();
    for (v, c) in l.iter().enumerate() {
        let _ = writeln!(out, "L {v}: {c}");
    }
    out
}

/// Demand lines, skipping the default of 3.
pub fn write_demands(f: &DemandFunction) -> String {
    let mut out = String::new();
    for (v, &k) in f.iter().enumerate().filter(|(_, &k)| k != 3) {
        let _ = writeln!(out, "f {v}: {k}");
    }
    out
}

pub fn write_coloring(phi: &SetColoring) -> String {
    let mut out = String::new();
    for (v, c) in phi.iter().enumerate() {
        let _ = writeln!(out, "phi {v}: {c}");
    }
    out
}

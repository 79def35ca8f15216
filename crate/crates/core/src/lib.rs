//! Exact set-coloring toolkit for plane graphs without 4- and 5-cycles.
//!
//! Every such graph is (11:3)-choosable: from lists of 11 colors each vertex
//! can receive 3 colors so that adjacent vertices get disjoint sets. The
//! crate turns the reducibility argument behind that fact into a recursive
//! colorer and ships the pieces it is built from.

pub mod colorset;
pub mod discharging;
pub mod engine;
pub mod format;
pub mod gadgets;
pub mod gen;
pub mod graph;
pub mod reducer;
pub mod venn;

pub use colorset::ColorSet;
pub use engine::{DemandFunction, ListAssignment, SetColoring};
pub use graph::{Graph, PlaneGraph, VertexId};

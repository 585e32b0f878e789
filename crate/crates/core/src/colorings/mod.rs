//! Centered colorings and their relaxations.
//!
//! Three kinds are supported, each defined by the family of vertex sets that
//! must contain a uniquely colored vertex: connected sets (treedepth), sets
//! inducing a block-like subgraph (td2), and edges plus cycles (chi_cc).

mod blocks;
mod centered;
mod cycles;
mod family;
mod solver;
mod td2;
mod uniform;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

pub use blocks::many_blocks_deletion;
pub use centered::{is_centered, treedepth, treedepth_with_budget, EliminationForest, DEFAULT_MEMO_BUDGET};
pub use cycles::{chi_cc, chi_cc_with, cycle_sets, is_cycle_centered, is_cycle_centered_with, DEFAULT_CYCLE_BUDGET};
pub use family::{constraint_family, constraint_family_with, ConstraintFamily, DEFAULT_SUBSET_BUDGET};
pub use solver::{find_coloring, DEFAULT_SOLVER_BUDGET};
pub use td2::{is_td2_coloring, td2, td2_with};
pub use uniform::{pigeonhole_rung_selection, uniform_model_lower_bound};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ColoringKind {
    Centered,
    TwoConnectedCentered,
    CycleCentered,
}

/// Limits shared by the exhaustive coloring procedures.
#[derive(Clone, Copy, Debug)]
pub struct Budgets {
    /// Largest vertex count for which induced subsets are enumerated.
    pub subset_vertices: usize,
    /// Largest number of cycles enumerated.
    pub cycles: usize,
    /// Search nodes for the exact minimizer.
    pub solver_nodes: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets { subset_vertices: DEFAULT_SUBSET_BUDGET, cycles: DEFAULT_CYCLE_BUDGET, solver_nodes: DEFAULT_SOLVER_BUDGET }
    }
}

/// A vertex coloring tagged with the property it is meant to have. The tag
/// is never trusted; the matching `is_*` check decides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub assignment: BTreeMap<Vertex, u32>,
    pub kind: ColoringKind,
    pub color_count: usize,
}

impl Coloring {
    pub fn new(assignment: BTreeMap<Vertex, u32>, kind: ColoringKind) -> Self {
        let color_count = assignment.values().collect::<BTreeSet<_>>().len();
        Coloring { assignment, kind, color_count }
    }

    pub fn color(&self, v: Vertex) -> Option<u32> {
        self.assignment.get(&v).copied()
    }

    pub fn colors(&self) -> BTreeSet<u32> {
        self.assignment.values().copied().collect()
    }

    /// Colors on `s`, ignoring vertices without a color.
    pub fn colors_on<'a>(&self, s: impl IntoIterator<Item = &'a Vertex>) -> BTreeSet<u32> {
        s.into_iter().filter_map(|v| self.color(*v)).collect()
    }

    /// Vertices of `s` whose color occurs exactly once on `s`.
    pub fn unique_in(&self, s: &VertexSet) -> Vec<Vertex> {
        let mut count: BTreeMap<u32, usize> = BTreeMap::new();
        for v in s {
            *count.entry(self.assignment[v]).or_default() += 1;
        }
        s.iter().copied().filter(|v| count[&self.assignment[v]] == 1).collect()
    }

    pub fn restrict(&self, s: &VertexSet) -> Coloring {
        Coloring::new(s.iter().filter_map(|&v| self.color(v).map(|c| (v, c))).collect(), self.kind)
    }

    /// Parse the `{vertex: color}` JSON form.
    pub fn from_json(s: &str, kind: ColoringKind) -> Result<Self> {
        let raw: BTreeMap<String, u32> = serde_json::from_str(s).map_err(crate::io::json_error)?;
        let mut assignment = BTreeMap::new();
        for (k, c) in raw {
            let v: Vertex = k.trim().parse().map_err(|_| Error::input(format!("vertex key {k:?} is not an integer")))?;
            assignment.insert(v, c);
        }
        Ok(Coloring::new(assignment, kind))
    }

    /// Colors are relabeled to `1..=c` in order of first appearance by vertex.
    pub fn normalized(&self) -> Coloring {
        let mut relabel: BTreeMap<u32, u32> = BTreeMap::new();
        let mut assignment = BTreeMap::new();
        for (&v, &c) in &self.assignment {
            let next = relabel.len() as u32 + 1;
            assignment.insert(v, *relabel.entry(c).or_insert(next));
        }
        Coloring::new(assignment, self.kind)
    }
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.assignment.serialize(s)
    }
}

/// Outcome of a validity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ColoringCheck {
    Valid,
    Violated(VertexSet),
}

impl ColoringCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, ColoringCheck::Valid)
    }

    pub fn violation(&self) -> Option<&VertexSet> {
        match self {
            ColoringCheck::Valid => None,
            ColoringCheck::Violated(s) => Some(s),
        }
    }
}

pub(crate) fn require_total(g: &Graph, col: &Coloring) -> Result<()> {
    if let Some(&v) = col.assignment.keys().find(|v| !g.has_vertex(**v)) {
        return Err(Error::UnknownVertex(v));
    }
    if let Some(v) = g.vertices().find(|v| !col.assignment.contains_key(v)) {
        return Err(Error::input(format!("coloring is partial: vertex {v} has no color")));
    }
    Ok(())
}

#[cfg(test)]
mod tests;

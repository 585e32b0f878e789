//! Minor models, ladder subdivision search, rooted ladder surgery and
//! disjoint ladder packing.

mod model;
mod oracle;
mod rooted;
mod search;

use serde::Serialize;

pub use model::{
    ladder, ladder_columns, ladder_vertex, single_edge_property, trim_ladder_model, verify_model, verify_rooted,
    verify_subdivision_model, LadderSubdivisionModel, MinorModel, RootedLadderModel,
};
pub use oracle::{find_minor, find_minor_with_budget, subgraph_embedding, DEFAULT_STATE_BUDGET};
pub use rooted::{build_ladder_from_forest, glue_rooted_ladders, rooted_from_subdivision, rooted_half_ladder, Side};
pub use search::{
    disjoint_ladder_packing, disjoint_ladder_packing_with_budget, find_ladder_model, find_ladder_model_with_budget,
    max_disjoint_ladders, max_ladder_order, max_ladder_order_with_budget, subdivision_structure, DEFAULT_NODE_BUDGET,
};

/// Outcome of a bounded exact search. `Undecided` carries a note on which
/// budget ran out; it never stands for absence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision<T> {
    Found(T),
    Absent,
    Undecided(String),
}

impl<T> Decision<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Decision::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Decision::Found(_))
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self, Decision::Undecided(_))
    }
}

#[cfg(test)]
mod tests;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, mask_below, Dense, Graph, VertexSet};

use super::cycles::cycle_masks;
use super::{Budgets, ColoringKind};

/// Subsets are enumerated only up to this many vertices.
pub const DEFAULT_SUBSET_BUDGET: usize = 16;

/// The vertex sets on which some color must occur exactly once.
///
/// For the centered kinds, whether a suitable subgraph lives on `S` depends
/// only on `G[S]`: adding edges on a fixed vertex set keeps it connected or
/// 2-connected. So induced subsets suffice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstraintFamily {
    pub kind: ColoringKind,
    pub sets: Vec<VertexSet>,
}

pub fn constraint_family(g: &Graph, kind: ColoringKind) -> Result<ConstraintFamily> {
    constraint_family_with(g, kind, &Budgets::default())
}

pub fn constraint_family_with(g: &Graph, kind: ColoringKind, budgets: &Budgets) -> Result<ConstraintFamily> {
    let d = Dense::new(g)?;
    let mut sets: Vec<VertexSet> = family_masks(&d, kind, budgets)?.into_iter().map(|m| d.to_set(m)).collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(ConstraintFamily { kind, sets })
}

pub(crate) fn family_masks(d: &Dense, kind: ColoringKind, budgets: &Budgets) -> Result<Vec<u64>> {
    match kind {
        ColoringKind::Centered => subsets(d, budgets, |m| d.is_connected(m)),
        ColoringKind::TwoConnectedCentered => subsets(d, budgets, |m| d.is_biconnected(m)),
        ColoringKind::CycleCentered => {
            let mut sets: Vec<u64> = (0..d.n()).map(|v| 1 << v).collect();
            for v in 0..d.n() {
                sets.extend(bits(d.adj[v]).filter(|&w| w > v).map(|w| 1 << v | 1 << w));
            }
            sets.extend(cycle_masks(d, budgets.cycles)?);
            Ok(sets)
        }
    }
}

fn subsets(d: &Dense, budgets: &Budgets, keep: impl Fn(u64) -> bool) -> Result<Vec<u64>> {
    if d.n() > budgets.subset_vertices {
        return Err(Error::resource(format!(
            "{} vertices exceeds the subset enumeration budget of {}",
            d.n(),
            budgets.subset_vertices
        )));
    }
    Ok((1..=mask_below(d.n())).filter(|&m| keep(m)).collect())
}

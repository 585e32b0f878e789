use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{bits, Dense, Graph, VertexSet};

use super::family::family_masks;
use super::solver::{minimize, to_coloring};
use super::{require_total, Budgets, Coloring, ColoringCheck, ColoringKind};

pub const DEFAULT_CYCLE_BUDGET: usize = 100_000;

/// Vertex sets of all cycles, each cycle found once from its smallest vertex.
pub(crate) fn cycle_masks(d: &Dense, cap: usize) -> Result<Vec<u64>> {
    struct Walk<'a> {
        d: &'a Dense,
        start: usize,
        found: usize,
        cap: usize,
        masks: BTreeSet<u64>,
    }
    impl Walk<'_> {
        fn extend(&mut self, second: usize, v: usize, on_path: u64, len: usize) -> Result<()> {
            for w in bits(self.d.adj[v]) {
                if w == self.start {
                    // each cycle is seen in both directions; keep one
                    if len >= 3 && second < v {
                        self.found += 1;
                        if self.found > self.cap {
                            return Err(Error::resource(format!("more than {} cycles", self.cap)));
                        }
                        self.masks.insert(on_path);
                    }
                } else if w > self.start && on_path >> w & 1 == 0 {
                    self.extend(second, w, on_path | 1 << w, len + 1)?;
                }
            }
            Ok(())
        }
    }
    let mut walk = Walk { d, start: 0, found: 0, cap, masks: BTreeSet::new() };
    for s in 0..d.n() {
        walk.start = s;
        for w in bits(d.adj[s]).filter(|&w| w > s) {
            walk.extend(w, w, 1 << s | 1 << w, 2)?;
        }
    }
    let mut out: Vec<u64> = walk.masks.into_iter().collect();
    out.sort_by_key(|m| m.count_ones());
    Ok(out)
}

/// Distinct vertex sets of cycles of `g`, shortest first.
pub fn cycle_sets(g: &Graph, cap: usize) -> Result<Vec<VertexSet>> {
    let d = Dense::new(g)?;
    let mut sets: Vec<VertexSet> = cycle_masks(&d, cap)?.into_iter().map(|m| d.to_set(m)).collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(sets)
}

pub fn is_cycle_centered(g: &Graph, col: &Coloring) -> Result<ColoringCheck> {
    is_cycle_centered_with(g, col, DEFAULT_CYCLE_BUDGET)
}

/// Checks edges first, then cycles from the shortest.
pub fn is_cycle_centered_with(g: &Graph, col: &Coloring, cycle_budget: usize) -> Result<ColoringCheck> {
    require_total(g, col)?;
    if let Some((u, v)) = g.edges().find(|&(u, v)| col.assignment[&u] == col.assignment[&v]) {
        return Ok(ColoringCheck::Violated(VertexSet::from([u, v])));
    }
    for c in cycle_sets(g, cycle_budget)? {
        if col.unique_in(&c).is_empty() {
            return Ok(ColoringCheck::Violated(c));
        }
    }
    Ok(ColoringCheck::Valid)
}

/// Minimum number of colors of a cycle centered coloring, with a witness.
pub fn chi_cc(g: &Graph) -> Result<(usize, Coloring)> {
    chi_cc_with(g, &Budgets::default())
}

pub fn chi_cc_with(g: &Graph, budgets: &Budgets) -> Result<(usize, Coloring)> {
    let d = Dense::new(g)?;
    let sets = family_masks(&d, ColoringKind::CycleCentered, budgets)?;
    let col = to_coloring(&d, &minimize(&d, &sets, budgets.solver_nodes)?, ColoringKind::CycleCentered);
    if !is_cycle_centered_with(g, &col, budgets.cycles)?.is_valid() {
        return Err(Error::internal("solver returned a coloring that is not cycle centered"));
    }
    Ok((col.color_count, col))
}

use std::collections::BTreeMap;

use crate::connectivity::block_tree;
use crate::error::{Error, Result};
use crate::graph::{Dense, Graph, Vertex};

use super::family::family_masks;
use super::solver::{minimize, to_coloring};
use super::{require_total, Budgets, Coloring, ColoringCheck, ColoringKind};

/// Whether every connected subgraph without a cutvertex has a uniquely
/// colored vertex.
///
/// Each such subgraph lies inside one block. A block needs a unique color
/// somewhere; once `v` is unique on the block, every subgraph through `v` is
/// fine and the rest lie in blocks of the block minus `v`.
pub fn is_td2_coloring(g: &Graph, col: &Coloring) -> Result<ColoringCheck> {
    require_total(g, col)?;
    check_blocks(g, col)
}

fn check_blocks(g: &Graph, col: &Coloring) -> Result<ColoringCheck> {
    for block in block_tree(g).blocks {
        if block.len() == 1 {
            continue;
        }
        let Some(&v) = col.unique_in(&block).first() else {
            return Ok(ColoringCheck::Violated(block));
        };
        let mut rest = block;
        rest.remove(&v);
        let check = check_blocks(&g.induced_subgraph(&rest)?, col)?;
        if !check.is_valid() {
            return Ok(check);
        }
    }
    Ok(ColoringCheck::Valid)
}

/// Minimum number of colors of a 2-connected centered coloring.
pub fn td2(g: &Graph) -> Result<(usize, Coloring)> {
    td2_with(g, &Budgets::default())
}

/// Solves each block on its own: every constrained set lies inside a block,
/// and block colorings are glued by renaming colors at shared cutvertices.
pub fn td2_with(g: &Graph, budgets: &Budgets) -> Result<(usize, Coloring)> {
    let blocks = block_tree(g).blocks;
    let col = if blocks.len() <= 1 {
        solve(g, budgets)?
    } else {
        let mut parts = Vec::with_capacity(blocks.len());
        for b in &blocks {
            parts.push(solve(&g.induced_subgraph(b)?, budgets)?);
        }
        glue(parts)
    };
    if !is_td2_coloring(g, &col)?.is_valid() {
        return Err(Error::internal("solver returned an invalid 2-connected centered coloring"));
    }
    Ok((col.color_count, col))
}

fn solve(g: &Graph, budgets: &Budgets) -> Result<Coloring> {
    let d = Dense::new(g)?;
    let sets = family_masks(&d, ColoringKind::TwoConnectedCentered, budgets)?;
    Ok(to_coloring(&d, &minimize(&d, &sets, budgets.solver_nodes)?, ColoringKind::TwoConnectedCentered))
}

/// Places blocks so that each new one meets the placed ones in at most one
/// vertex, then swaps two of its colors to agree there.
fn glue(mut parts: Vec<Coloring>) -> Coloring {
    let mut out: BTreeMap<Vertex, u32> = BTreeMap::new();
    while !parts.is_empty() {
        let i = parts.iter().position(|c| c.assignment.keys().any(|v| out.contains_key(v))).unwrap_or(0);
        let part = parts.swap_remove(i);
        let shared = part.assignment.iter().find_map(|(v, &c)| out.get(v).map(|&want| (c, want)));
        for (v, c) in part.assignment {
            let c = match shared {
                Some((have, want)) if c == have => want,
                Some((have, want)) if c == want => have,
                _ => c,
            };
            out.entry(v).or_insert(c);
        }
    }
    Coloring::new(out, ColoringKind::TwoConnectedCentered)
}

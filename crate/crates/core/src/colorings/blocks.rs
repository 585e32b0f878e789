use crate::connectivity::block_tree;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::{is_td2_coloring, Coloring};

/// A set `Z` of fewer than `m` vertices such that `G - Z` has at least `p`
/// blocks, where `m` is the number of colors of the 2-connected centered
/// coloring `col` and `G` has at least `p^m` vertices.
///
/// While there are fewer than `p` blocks, some block is large; delete a
/// vertex of unique color in it and continue inside that block.
pub fn many_blocks_deletion(g: &Graph, col: &Coloring, p: usize) -> Result<VertexSet> {
    if p == 0 {
        return Err(Error::input("p must be positive"));
    }
    if let Some(bad) = is_td2_coloring(g, col)?.violation() {
        return Err(Error::input(format!("not a 2-connected centered coloring: no unique color on {bad:?}")));
    }
    let m = col.color_count as u32;
    let need = (p as u128).checked_pow(m).unwrap_or(u128::MAX);
    if (g.vertex_count() as u128) < need {
        return Err(Error::input(format!("{} vertices is fewer than p^m = {p}^{m}", g.vertex_count())));
    }
    let mut z = VertexSet::new();
    let mut cur = g.clone();
    loop {
        let blocks = block_tree(&cur).blocks;
        if blocks.len() >= p {
            break;
        }
        let b0 = blocks.into_iter().max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)))
            .ok_or_else(|| Error::internal("ran out of vertices"))?;
        let x = *col.unique_in(&b0).first().ok_or_else(|| Error::internal("block without a unique color"))?;
        z.insert(x);
        let mut rest = b0;
        rest.remove(&x);
        cur = cur.induced_subgraph(&rest)?;
    }
    let blocks = block_tree(&g.delete_vertices(&z)?).blocks.len();
    if z.len() + 1 > m as usize || blocks < p {
        return Err(Error::internal(format!("deletion of {z:?} left {blocks} blocks")));
    }
    Ok(z)
}

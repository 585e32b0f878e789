use serde::Serialize;

use crate::colorings::td2;
use crate::connectivity::{block_tree, is_k_connected};
use crate::error::{Error, Result};
use crate::graph::{Vertex, VertexSet};

use super::dimension::{is_realizer, realizer_of_size};
use super::{cover_graph, Poset, Realizer};

/// A realizer of a poset with `2d` orders from realizers of the parts avoiding
/// the up-set `U` and the down-set `D` of an element `z`.
///
/// Orders `1..=d` list `X - U` by `r_up` followed by `U` in `ext_u`; orders
/// `d+1..=2d` list `D` in `ext_d` followed by `X - D` by `r_down`.
pub fn apex_merge(p: &Poset, z: Vertex, r_up: &Realizer, r_down: &Realizer, ext_u: &[Vertex], ext_d: &[Vertex]) -> Result<Realizer> {
    if p.index(z).is_none() {
        return Err(Error::UnknownVertex(z));
    }
    if r_up.len() != r_down.len() || r_up.is_empty() {
        return Err(Error::input(format!("realizers have {} and {} orders, need equal and positive", r_up.len(), r_down.len())));
    }
    let up = p.up_set(z);
    let down = p.down_set(z);
    let all: VertexSet = p.elements().iter().copied().collect();
    let below: VertexSet = all.difference(&up).copied().collect();
    let above: VertexSet = all.difference(&down).copied().collect();
    let checks = [
        (r_up, &below, "realizer of the part avoiding the up-set"),
        (r_down, &above, "realizer of the part avoiding the down-set"),
    ];
    for (r, part, what) in checks {
        let sub = p.subposet(part)?;
        if !is_realizer(&sub, r)?.is_valid() {
            return Err(Error::input(format!("invalid {what}")));
        }
    }
    if !p.subposet(&up)?.is_linear_extension(ext_u) {
        return Err(Error::input("ext_u is not a linear extension of the up-set"));
    }
    if !p.subposet(&down)?.is_linear_extension(ext_d) {
        return Err(Error::input("ext_d is not a linear extension of the down-set"));
    }
    let mut orders = Vec::with_capacity(2 * r_up.len());
    for o in &r_up.orders {
        orders.push(o.iter().chain(ext_u).copied().collect());
    }
    for o in &r_down.orders {
        orders.push(ext_d.iter().chain(o).copied().collect());
    }
    let out = Realizer { orders };
    if !is_realizer(p, &out)?.is_valid() {
        return Err(Error::internal("merged orders do not realize the poset"));
    }
    Ok(out)
}

/// A realizer built by recursion on a 2-connected centered coloring of the
/// cover graph, with the bound it is guaranteed to meet.
#[derive(Clone, Debug, Serialize)]
pub struct Td2Realizer {
    pub realizer: Realizer,
    /// td2 of the cover graph.
    pub td2: usize,
    /// `2^(td2 + 1) - 2`.
    pub bound: usize,
    /// How each step of the recursion was resolved.
    pub notes: Vec<String>,
}

pub fn realizer_via_td2(p: &Poset) -> Result<Td2Realizer> {
    realizer_via_td2_with(p, super::DEFAULT_ELEMENT_BUDGET)
}

/// `max_elements` bounds the posets on which the block combination step may
/// run an exact search.
pub fn realizer_via_td2_with(p: &Poset, max_elements: usize) -> Result<Td2Realizer> {
    let mut notes = Vec::new();
    let (m, realizer) = recurse(p, max_elements, &mut notes)?;
    let bound = (1usize << (m + 1)) - 2;
    if realizer.len() > bound.max(1) || !is_realizer(p, &realizer)?.is_valid() {
        return Err(Error::internal("realizer exceeds its td2 bound or fails verification"));
    }
    Ok(Td2Realizer { realizer, td2: m, bound, notes })
}

fn pad(mut r: Realizer, d: usize, n: usize) -> Realizer {
    let filler = r.orders.last().cloned().unwrap_or_default();
    debug_assert!(filler.len() == n);
    r.orders.resize(d, filler);
    r
}

/// Returns td2 of the cover graph alongside the realizer.
fn recurse(p: &Poset, max_elements: usize, notes: &mut Vec<String>) -> Result<(usize, Realizer)> {
    if p.is_empty() {
        return Ok((0, Realizer { orders: Vec::new() }));
    }
    let g = cover_graph(p);
    let (m, col) = td2(&g)?;
    if g.edge_count() == 0 {
        let forward = p.elements().to_vec();
        let backward = forward.iter().rev().copied().collect();
        notes.push(format!("antichain of {} elements: 2 orders", p.len()));
        return Ok((m, Realizer { orders: vec![forward, backward] }));
    }
    if is_k_connected(&g, 2) {
        let all: VertexSet = g.vertices().collect();
        let z = *col.unique_in(&all).first().ok_or_else(|| Error::internal("optimal coloring without a unique color"))?;
        let up = p.up_set(z);
        let down = p.down_set(z);
        let all_elems: VertexSet = p.elements().iter().copied().collect();
        let below = p.subposet(&all_elems.difference(&up).copied().collect())?;
        let above = p.subposet(&all_elems.difference(&down).copied().collect())?;
        let (_, r_up) = recurse(&below, max_elements, notes)?;
        let (_, r_down) = recurse(&above, max_elements, notes)?;
        let d = r_up.len().max(r_down.len());
        let (r_up, r_down) = (pad(r_up, d, below.len()), pad(r_down, d, above.len()));
        let ext_u = p.subposet(&up)?.linear_extension();
        let ext_d = p.subposet(&down)?.linear_extension();
        notes.push(format!("2-connected cover graph on {} elements, apex {z}: 2 x {d} orders", p.len()));
        return Ok((m, apex_merge(p, z, &r_up, &r_down, &ext_u, &ext_d)?));
    }
    // blocks: 2-connected ones recurse, single edges and vertices are chains
    let mut d_max = 1;
    for block in block_tree(&g).blocks {
        if block.len() >= 3 {
            let (_, r) = recurse(&p.subposet(&block)?, max_elements, notes)?;
            d_max = d_max.max(r.len());
        }
    }
    let budget = d_max + 2;
    if p.len() > max_elements {
        return Err(Error::resource(format!(
            "combining blocks needs an exact search on {} elements, above the budget of {max_elements}",
            p.len()
        )));
    }
    let mut nodes = 0;
    for d in 1..=budget {
        if let Some(r) = realizer_of_size(p, d, &mut nodes)? {
            notes.push(format!(
                "{} elements with separable cover graph: {d} orders by exact search within d_max + 2 = {budget} (cut-vertex dimension bound)",
                p.len()
            ));
            return Ok((m, r));
        }
    }
    Err(Error::internal(format!("no realizer within d_max + 2 = {budget} orders; the cut-vertex dimension bound failed")))
}

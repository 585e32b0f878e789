//! Rooted ladder models cut out of subdivided ladders, and gluing two of
//! them into a longer ladder.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::connectivity::{menger, MengerOutcome};
use crate::error::{Error, Result};
use crate::graph::{Graph, Path, Vertex, VertexSet};

use super::model::{
    ladder, ladder_columns, ladder_vertex, trim_ladder_model, verify_model, verify_rooted, MinorModel,
    RootedLadderModel,
};
use super::search::subdivision_structure;

/// Which end of the ladder a rooted model is cut from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Low,
    High,
}

fn row_col(x: Vertex) -> (u32, u32) {
    (x % 2 + 1, x / 2 + 1)
}

/// Column of the branch set holding `z`.
fn column_of(m: &MinorModel, z: Vertex) -> Result<u32> {
    m.owner(z).map(|x| row_col(x).1).ok_or_else(|| Error::input(format!("vertex {z} lies in no branch set")))
}

fn reverse_columns(m: &MinorModel, k: u32) -> BTreeMap<Vertex, VertexSet> {
    m.branch_sets
        .iter()
        .map(|(&x, s)| {
            let (r, c) = row_col(x);
            (ladder_vertex(r, k + 1 - c), s.clone())
        })
        .collect()
}

fn swap_rows(sets: BTreeMap<Vertex, VertexSet>) -> BTreeMap<Vertex, VertexSet> {
    sets.into_iter().map(|(x, s)| (x ^ 1, s)).collect()
}

/// Rooted `L_j` model where `j` is the smaller column among the roots.
/// Keeps columns before `j`, then reaches the roots by two disjoint paths
/// from those columns, joined by a path avoiding them.
fn rooted_prefix(h: &Graph, sets: &BTreeMap<Vertex, VertexSet>, z1: Vertex, z2: Vertex, j: u32) -> Result<RootedLadderModel> {
    let mut out: BTreeMap<Vertex, VertexSet> = BTreeMap::new();
    if j == 1 {
        let p = h.shortest_path(z1, z2, &VertexSet::new()).ok_or_else(|| Error::input("roots are not connected"))?;
        out.insert(ladder_vertex(1, 1), p.vertices()[..p.vertices().len() - 1].iter().copied().collect());
        out.insert(ladder_vertex(2, 1), VertexSet::from([z2]));
    } else {
        let a: VertexSet = sets
            .iter()
            .filter(|(&x, _)| row_col(x).1 < j)
            .flat_map(|(_, s)| s.iter().copied())
            .collect();
        let MengerOutcome::Paths(rs) = menger(h, &a, &VertexSet::from([z1, z2]), 1)? else {
            return Err(Error::input("roots are not joined to the earlier columns by two disjoint paths"));
        };
        let row_of_start = |p: &Path| sets.iter().find(|(_, s)| s.contains(&p.first())).map(|(&x, _)| row_col(x).0);
        let (top, bottom) = if row_of_start(&rs[0]) == Some(1) { (&rs[0], &rs[1]) } else { (&rs[1], &rs[0]) };
        let top_rest: VertexSet = top.vertices()[1..].iter().copied().collect();
        let bottom_rest: VertexSet = bottom.vertices()[1..].iter().copied().collect();
        let h_minus_a = h.delete_vertices(&a)?;
        let MengerOutcome::Paths(ss) = menger(&h_minus_a, &top_rest, &bottom_rest, 0)? else {
            return Err(Error::internal("root paths are not joined outside the earlier columns"));
        };
        for (&x, s) in sets {
            if row_col(x).1 < j {
                out.insert(x, s.clone());
            }
        }
        let mut low: VertexSet = bottom_rest;
        low.extend(ss[0].vertices().iter().filter(|v| !top_rest.contains(v)));
        out.insert(ladder_vertex(1, j), top_rest);
        out.insert(ladder_vertex(2, j), low);
        if top.last() == z2 {
            out = swap_rows(out);
        }
    }
    let model = MinorModel::with_witnesses(h, ladder(j as usize), out)
        .ok_or_else(|| Error::internal("rooted model lacks a witness edge"))?;
    let rooted = RootedLadderModel { model, roots: (z1, z2) };
    if !verify_rooted(h, &rooted) {
        return Err(Error::internal("rooted model failed verification"));
    }
    Ok(rooted)
}

/// From an `L_k` model `phi` in a subdivided `L_k` `h` and roots in columns
/// `j1 <= j2`: a rooted `L_{j1}` model (`Low`) or `L_{k - j2 + 1}` model
/// (`High`), rooted at `(z1, z2)`.
pub fn rooted_from_subdivision(
    h: &Graph,
    phi: &MinorModel,
    z1: Vertex,
    z2: Vertex,
    side: Side,
) -> Result<RootedLadderModel> {
    if z1 == z2 {
        return Err(Error::input("roots must be distinct"));
    }
    let k = ladder_columns(phi);
    if k < 2 || phi.pattern != ladder(k) || !verify_model(h, phi) {
        return Err(Error::input("phi is not a valid ladder model with at least two columns"));
    }
    match subdivision_structure(h)? {
        Some(sm) if sm.k() == k => {}
        _ => return Err(Error::input(format!("h is not a subdivision of L_{k}"))),
    }
    let (c1, c2) = (column_of(phi, z1)?, column_of(phi, z2)?);
    match side {
        Side::Low => rooted_prefix(h, &phi.branch_sets, z1, z2, c1.min(c2)),
        Side::High => {
            let rev = reverse_columns(phi, k as u32);
            rooted_prefix(h, &rev, z1, z2, k as u32 + 1 - c1.max(c2))
        }
    }
}

/// Two of the three vertices of `z` as roots, with a rooted model of
/// `L_{⌈(k+1)/2⌉}` in the subdivided `L_k` `h`.
pub fn rooted_half_ladder(h: &Graph, z: &VertexSet) -> Result<((Vertex, Vertex), RootedLadderModel)> {
    if z.len() != 3 {
        return Err(Error::input("z must have exactly three vertices"));
    }
    if let Some(v) = z.iter().find(|v| !h.has_vertex(**v)) {
        return Err(Error::UnknownVertex(*v));
    }
    let sm = subdivision_structure(h)?.ok_or_else(|| Error::input("h is not a ladder subdivision"))?;
    let k = sm.k();
    if k < 2 {
        return Err(Error::input("h must subdivide L_k with k >= 2"));
    }
    let phi = sm.to_minor_model(h)?;
    let mut zs: Vec<(u32, Vertex)> = z.iter().map(|&v| Ok((column_of(&phi, v)?, v))).collect::<Result<_>>()?;
    zs.sort_unstable();
    let [(_, za), (jb, zb), (_, zc)] = [zs[0], zs[1], zs[2]];
    let high = k as u32 - jb + 1;
    let (roots, model) = if high >= jb {
        ((za, zb), rooted_from_subdivision(h, &phi, za, zb, Side::High)?)
    } else {
        ((zb, zc), rooted_from_subdivision(h, &phi, zb, zc, Side::Low)?)
    };
    let target = (k + 1).div_ceil(2);
    let trimmed = RootedLadderModel { model: trim_ladder_model(h, &model.model, target)?, roots };
    if !verify_rooted(h, &trimmed) {
        return Err(Error::internal("trimmed rooted model failed verification"));
    }
    Ok((roots, trimmed))
}

/// Joins `m1` and `m2` (each rooted in its last column) through `p1` between
/// the first roots and `p2` between the second roots. The second model is
/// laid out in reverse, giving `L_{k1 + k2}`.
pub fn glue_rooted_ladders(
    g: &Graph,
    m1: &RootedLadderModel,
    m2: &RootedLadderModel,
    p1: &Path,
    p2: &Path,
) -> Result<MinorModel> {
    for (name, m) in [("first", m1), ("second", m2)] {
        if !verify_rooted(g, m) {
            return Err(Error::input(format!("{name} rooted model is invalid")));
        }
    }
    let (s1, s2) = (m1.model.support(), m2.model.support());
    if let Some(v) = s1.intersection(&s2).next() {
        return Err(Error::input(format!("models share vertex {v}")));
    }
    for (name, p, from, to) in [("p1", p1, m1.roots.0, m2.roots.0), ("p2", p2, m1.roots.1, m2.roots.1)] {
        if !p.is_valid_in(g) || p.first() != from || p.last() != to {
            return Err(Error::input(format!("{name} is not a path from {from} to {to}")));
        }
        if let Some(v) = p.interior().iter().find(|v| s1.contains(v) || s2.contains(v)) {
            return Err(Error::input(format!("{name} passes through model vertex {v}")));
        }
    }
    if let Some(v) = p1.vertices().iter().find(|v| p2.contains(**v)) {
        return Err(Error::input(format!("p1 and p2 share vertex {v}")));
    }
    let (k1, k2) = (m1.k() as u32, m2.k() as u32);
    let mut sets = m1.model.branch_sets.clone();
    for (&x, s) in &m2.model.branch_sets {
        let (r, c) = row_col(x);
        sets.insert(ladder_vertex(r, k1 + k2 + 1 - c), s.clone());
    }
    sets.get_mut(&ladder_vertex(1, k1)).expect("column exists").extend(p1.interior());
    sets.get_mut(&ladder_vertex(2, k1)).expect("column exists").extend(p2.interior());
    let model = MinorModel::with_witnesses(g, ladder((k1 + k2) as usize), sets)
        .ok_or_else(|| Error::internal("glued model lacks a witness edge"))?;
    if !verify_model(g, &model) {
        return Err(Error::internal("glued model failed verification"));
    }
    Ok(model)
}

/// Given at least `m² + 1` disjoint subdivided copies of `L_k` meeting a
/// forest `f` with `m` components as required, two copies whose rooted half
/// ladders end in the same pair of components are glued along `f` into an
/// `L_{k+1}` model. `None` when no such pair exists among the copies given.
pub fn build_ladder_from_forest(g: &Graph, subdivisions: &[Graph], f: &Graph) -> Result<Option<MinorModel>> {
    if !f.is_subgraph_of(g) {
        return Err(Error::input("f is not a subgraph of g"));
    }
    let comps = f.components();
    if f.edge_count() + comps.len() != f.vertex_count() {
        return Err(Error::input("f is not a forest"));
    }
    let comp_of: BTreeMap<Vertex, usize> =
        comps.iter().enumerate().flat_map(|(i, c)| c.iter().map(move |&v| (v, i))).collect();
    let mut k = None;
    let mut seen = VertexSet::new();
    let mut rooted = Vec::new();
    for (i, h) in subdivisions.iter().enumerate() {
        if !h.is_subgraph_of(g) {
            return Err(Error::input(format!("subdivision {i} is not a subgraph of g")));
        }
        if let Some(v) = h.vertices().find(|v| !seen.insert(*v)) {
            return Err(Error::input(format!("subdivision {i} reuses vertex {v}")));
        }
        let sm = subdivision_structure(h)?.ok_or_else(|| Error::input(format!("subdivision {i} is not a ladder subdivision")))?;
        if sm.k() < 2 || k.is_some_and(|k| k != sm.k()) {
            return Err(Error::input(format!("subdivision {i} has order {}, expected a common order >= 2", sm.k())));
        }
        k = Some(sm.k());
        let hits: Vec<Vertex> = h.vertices().filter(|v| comp_of.contains_key(v)).collect();
        let touched: VertexSet = hits.iter().map(|v| comp_of[v] as Vertex).collect();
        if touched.len() != hits.len() {
            return Err(Error::input(format!("subdivision {i} meets a forest component twice")));
        }
        if hits.len() < 3 {
            return Err(Error::input(format!("subdivision {i} meets fewer than three forest components")));
        }
        let z: VertexSet = hits.into_iter().take(3).collect();
        rooted.push(rooted_half_ladder(h, &z)?.1);
    }
    let Some(k) = k else { return Ok(None) };
    let key = |m: &RootedLadderModel| (comp_of[&m.roots.0], comp_of[&m.roots.1]);
    for i in 0..rooted.len() {
        for j in i + 1..rooted.len() {
            let mut other = rooted[j].clone();
            if key(&rooted[i]) == (key(&other).1, key(&other).0) {
                other = RootedLadderModel {
                    model: MinorModel::with_witnesses(g, other.model.pattern.clone(), swap_rows(other.model.branch_sets))
                        .ok_or_else(|| Error::internal("row swap lost a witness edge"))?,
                    roots: (other.roots.1, other.roots.0),
                };
            }
            if key(&rooted[i]) != key(&other) {
                continue;
            }
            let path = |a, b| f.shortest_path(a, b, &VertexSet::new()).ok_or_else(|| Error::internal("forest path missing"));
            let p1 = path(rooted[i].roots.0, other.roots.0)?;
            let p2 = path(rooted[i].roots.1, other.roots.1)?;
            let glued = glue_rooted_ladders(g, &rooted[i], &other, &p1, &p2)?;
            return Ok(Some(trim_ladder_model(g, &glued, k + 1)?));
        }
    }
    Ok(None)
}

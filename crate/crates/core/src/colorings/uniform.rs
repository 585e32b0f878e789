use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Path, Vertex, VertexSet};
use crate::minors::{verify_subdivision_model, LadderSubdivisionModel};

use super::{is_cycle_centered, require_total, Coloring};

/// `c + 1` vertices of pairwise distinct colors on a subdivided `L_{2^c}`
/// whose rungs all carry the same color set, showing that a cycle centered
/// coloring of such a model needs more than `c` colors.
///
/// The outer cycle has a vertex `x` of unique color. Its color is not on the
/// rungs, so `x` sits on a rail; recurse into the half of the ladder whose
/// rails avoid `x`. Two rungs are left at the bottom, and the ends of an
/// edge of a rung finish the chain.
pub fn uniform_model_lower_bound(h: &Graph, sm: &LadderSubdivisionModel, col: &Coloring) -> Result<Vec<Vertex>> {
    require_total(h, col)?;
    if !verify_subdivision_model(h, sm) {
        return Err(Error::input("not a ladder subdivision model in h"));
    }
    let k = sm.k();
    if k < 2 || !k.is_power_of_two() {
        return Err(Error::input(format!("{k} rungs is not a power of two at least 2")));
    }
    let sets: Vec<BTreeSet<u32>> = sm.rungs.iter().map(|q| col.colors_on(q.vertices())).collect();
    if let Some(i) = sets.iter().position(|s| *s != sets[0]) {
        return Err(Error::input(format!("rung {i} has color set {:?} but rung 0 has {:?}", sets[i], sets[0])));
    }
    if let Some(bad) = is_cycle_centered(h, col)?.violation() {
        return Err(Error::input(format!("coloring is not cycle centered: {bad:?}")));
    }
    let chain = halve(col, &sm.p1, &sm.p2, &sm.rungs)?;
    let distinct: BTreeSet<u32> = chain.iter().map(|v| col.assignment[v]).collect();
    if distinct.len() != chain.len() || chain.len() != k.trailing_zeros() as usize + 1 {
        return Err(Error::internal("lower bound chain does not have distinct colors"));
    }
    Ok(chain)
}

fn halve(col: &Coloring, p1: &Path, p2: &Path, rungs: &[Path]) -> Result<Vec<Vertex>> {
    if rungs.len() == 2 {
        let q = &rungs[0];
        return Ok(vec![q.vertices()[0], q.vertices()[1]]);
    }
    let last = rungs.len() - 1;
    let mut outer: VertexSet = p1.vertex_set();
    outer.extend(p2.vertices());
    outer.extend(rungs[0].vertices());
    outer.extend(rungs[last].vertices());
    let x = *col
        .unique_in(&outer)
        .first()
        .ok_or_else(|| Error::internal("outer cycle has no unique color"))?;
    let half = rungs.len() / 2;
    let sub_rails = |lo: usize, hi: usize| -> (Path, Path) {
        let seg = |p: &Path, a: Vertex, b: Vertex| p.segment(p.position(a).unwrap(), p.position(b).unwrap());
        (seg(p1, rungs[lo].first(), rungs[hi].first()), seg(p2, rungs[lo].last(), rungs[hi].last()))
    };
    let (a1, a2) = sub_rails(0, half - 1);
    let (lo, hi) = if a1.contains(x) || a2.contains(x) { (half, last) } else { (0, half - 1) };
    let (r1, r2) = sub_rails(lo, hi);
    if r1.contains(x) || r2.contains(x) || rungs.iter().any(|q| q.contains(x)) {
        return Err(Error::internal(format!("unique vertex {x} is on a rung")));
    }
    let mut chain = vec![x];
    chain.extend(halve(col, &r1, &r2, &rungs[lo..=hi])?);
    Ok(chain)
}

/// `2^c` rung indices (0-based, increasing) whose rungs carry equal color
/// sets. With at most `c` colors there are fewer than `2^c` possible sets,
/// so `4^c` rungs always suffice.
pub fn pigeonhole_rung_selection(sm: &LadderSubdivisionModel, col: &Coloring, c: usize) -> Result<Vec<usize>> {
    if c == 0 {
        return Err(Error::input("c must be positive"));
    }
    if c >= 32 {
        return Err(Error::input(format!("c = {c} is too large")));
    }
    let mut used = BTreeSet::new();
    for q in &sm.rungs {
        for v in q.vertices() {
            used.insert(col.color(*v).ok_or_else(|| Error::input(format!("rung vertex {v} has no color")))?);
        }
    }
    if used.len() > c {
        return Err(Error::input(format!("coloring uses {} colors on the rungs, more than c = {c}", used.len())));
    }
    let want = 1usize << c;
    let sets: Vec<BTreeSet<u32>> = sm.rungs.iter().map(|q| col.colors_on(q.vertices())).collect();
    let mut seen: Vec<&BTreeSet<u32>> = Vec::new();
    for s in &sets {
        if seen.contains(&s) {
            continue;
        }
        seen.push(s);
        let class: Vec<usize> = (0..sets.len()).filter(|&i| sets[i] == *s).collect();
        if class.len() >= want {
            return Ok(class[..want].to_vec());
        }
    }
    Err(Error::input(format!("no {want} rungs share a color set among {} rungs", sets.len())))
}

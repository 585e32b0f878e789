use serde::Serialize;

use crate::colorings::{pigeonhole_rung_selection, td2_with, Budgets, Coloring};
use crate::connectivity::block_tree;
use crate::error::{Error, Result};
use crate::graph::{Graph, Path, Vertex, VertexSet};
use crate::minors::{find_ladder_model, verify_subdivision_model, Decision, LadderSubdivisionModel};

use super::rooted::{lk_or_rooted_lt_with, menger_threshold};
use super::ExtractionOutcome;

/// An `L_k`-model, or a 2-connected centered coloring with at most
/// `m = k((k - 1)^2 + 2) + 1` colors.
///
/// When `td2(g) >= m` the model comes from the rooted-ladder recursion run
/// on a block of largest td2. Otherwise the exact ladder search is tried
/// and the optimal coloring is the fallback certificate.
pub fn ladder_or_td2_certificate(g: &Graph, k: usize) -> Result<ExtractionOutcome> {
    ladder_or_td2_certificate_with(g, k, &Budgets::default())
}

pub fn ladder_or_td2_certificate_with(g: &Graph, k: usize, budgets: &Budgets) -> Result<ExtractionOutcome> {
    if k == 0 {
        return Err(Error::input("k must be positive"));
    }
    let m = k * menger_threshold(k) + 1;
    let detect = || -> Result<Option<ExtractionOutcome>> {
        Ok(match find_ladder_model(g, k)? {
            Decision::Found(sm) => Some(ExtractionOutcome::LadderMinor { model: sm.to_minor_model(g)?, subdivision: Some(sm) }),
            _ => None,
        })
    };
    let (value, col) = match td2_with(g, budgets) {
        Ok(r) => r,
        Err(Error::Resource(why)) => return detect()?.ok_or(Error::Resource(why)),
        Err(e) => return Err(e),
    };
    let out = if value >= m {
        from_best_block(g, k, budgets)?
    } else {
        match detect()? {
            Some(found) => found,
            None => ExtractionOutcome::BoundCertificate(col),
        }
    };
    let bounded = match &out {
        ExtractionOutcome::BoundCertificate(c) => c.color_count <= m,
        ExtractionOutcome::LadderMinor { model, .. } => model.pattern == crate::minors::ladder(k),
        _ => true,
    };
    if !bounded || !out.verify(g)? {
        return Err(Error::internal("certificate failed verification"));
    }
    Ok(out)
}

fn from_best_block(g: &Graph, k: usize, budgets: &Budgets) -> Result<ExtractionOutcome> {
    let mut best: Option<(usize, VertexSet)> = None;
    for block in block_tree(g).blocks {
        let (value, _) = td2_with(&g.induced_subgraph(&block)?, budgets)?;
        if best.as_ref().is_none_or(|(b, _)| value > *b) {
            best = Some((value, block));
        }
    }
    let (_, block) = best.ok_or_else(|| Error::internal("graph without blocks"))?;
    let mut it = block.iter().copied();
    let (Some(x1), Some(x2)) = (it.next(), it.next()) else {
        return Err(Error::internal("block of largest td2 is a single vertex"));
    };
    let b = g.induced_subgraph(&block)?;
    Ok(match lk_or_rooted_lt_with(&b, x1, x2, k, k, budgets)? {
        ExtractionOutcome::RootedModel(m) => ExtractionOutcome::LadderMinor { model: m.model, subdivision: None },
        other => other,
    })
}

/// An edge or cycle on which `col` has no unique color, found by running
/// the lower-bound recursion on a subdivided `L_{4^c}` until it breaks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleRefutation {
    /// The violated edge (two vertices) or cycle, in cyclic order.
    pub cycle: Vec<Vertex>,
    /// Rungs of the original model with a common color set.
    pub rungs: Vec<usize>,
    /// Number of halvings performed before the violation was found.
    pub depth: usize,
}

impl CycleRefutation {
    pub fn verify(&self, g: &Graph, col: &Coloring) -> bool {
        let vs = &self.cycle;
        let set: VertexSet = vs.iter().copied().collect();
        if set.len() != vs.len() || vs.iter().any(|v| col.color(*v).is_none()) {
            return false;
        }
        let closed = match vs.len() {
            2 => g.has_edge(vs[0], vs[1]),
            n if n >= 3 => (0..n).all(|i| g.has_edge(vs[i], vs[(i + 1) % n])),
            _ => false,
        };
        closed && col.unique_in(&set).is_empty()
    }
}

pub fn chi_cc_refutation(g: &Graph, sm: &LadderSubdivisionModel, col: &Coloring) -> Result<CycleRefutation> {
    if !verify_subdivision_model(g, sm) {
        return Err(Error::input("not a ladder subdivision model in g"));
    }
    if let Some(v) = sm.vertex_set().into_iter().find(|v| col.color(*v).is_none()) {
        return Err(Error::input(format!("vertex {v} of the model has no color")));
    }
    let c = col.color_count;
    if c == 0 || c >= 16 || sm.k() < 1 << (2 * c) {
        return Err(Error::input(format!("{} rungs is fewer than 4^c for c = {c} colors", sm.k())));
    }
    let rungs = pigeonhole_rung_selection(sm, col, c)?;
    let chosen: Vec<Path> = rungs.iter().map(|&i| sm.rungs[i].clone()).collect();
    let (first, last) = (&chosen[0], &chosen[chosen.len() - 1]);
    let rail = |p: &Path, a: Vertex, b: Vertex| p.segment(p.position(a).unwrap(), p.position(b).unwrap());
    let p1 = rail(&sm.p1, first.first(), last.first());
    let p2 = rail(&sm.p2, first.last(), last.last());
    let (cycle, depth) = break_recursion(col, p1, p2, chosen, 0)?;
    let out = CycleRefutation { cycle, rungs, depth };
    if !out.verify(g, col) {
        return Err(Error::internal("refutation failed verification"));
    }
    Ok(out)
}

/// The outer cycle `P1, Q_last, P2 reversed, Q1 reversed` in cyclic order.
fn outer_cycle(p1: &Path, p2: &Path, first: &Path, last: &Path) -> Vec<Vertex> {
    let mut out = p1.vertices().to_vec();
    out.extend(last.interior());
    out.extend(p2.vertices().iter().rev());
    out.extend(first.interior().iter().rev());
    out
}

fn break_recursion(col: &Coloring, p1: Path, p2: Path, rungs: Vec<Path>, depth: usize) -> Result<(Vec<Vertex>, usize)> {
    let last = rungs.len() - 1;
    if rungs.len() == 2 {
        let q = &rungs[0];
        let (a, b) = (q.vertices()[0], q.vertices()[1]);
        if col.color(a) == col.color(b) {
            return Ok((vec![a, b], depth));
        }
    }
    let cycle = outer_cycle(&p1, &p2, &rungs[0], &rungs[last]);
    let on_cycle: VertexSet = cycle.iter().copied().collect();
    let Some(&x) = col.unique_in(&on_cycle).first() else {
        return Ok((cycle, depth));
    };
    if rungs.len() == 2 {
        return Err(Error::internal("more distinct colors than the coloring has"));
    }
    let half = rungs.len() / 2;
    let rail = |p: &Path, a: Vertex, b: Vertex| p.segment(p.position(a).unwrap(), p.position(b).unwrap());
    let sub = |lo: usize, hi: usize| (rail(&p1, rungs[lo].first(), rungs[hi].first()), rail(&p2, rungs[lo].last(), rungs[hi].last()));
    let (a1, a2) = sub(0, half - 1);
    let (lo, hi) = if a1.contains(x) || a2.contains(x) { (half, last) } else { (0, half - 1) };
    let (r1, r2) = sub(lo, hi);
    break_recursion(col, r1, r2, rungs[lo..=hi].to_vec(), depth + 1)
}

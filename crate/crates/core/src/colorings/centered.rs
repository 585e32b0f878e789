use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, Dense, Graph, Vertex};

use super::{require_total, Coloring, ColoringCheck, ColoringKind};

/// Memo entries allowed in the treedepth recursion.
pub const DEFAULT_MEMO_BUDGET: usize = 4_000_000;

/// Whether every connected subgraph has a uniquely colored vertex.
pub fn is_centered(g: &Graph, col: &Coloring) -> Result<ColoringCheck> {
    require_total(g, col)?;
    check_components(g, col)
}

fn check_components(g: &Graph, col: &Coloring) -> Result<ColoringCheck> {
    for comp in g.components() {
        if comp.len() == 1 {
            continue;
        }
        let Some(&v) = col.unique_in(&comp).first() else {
            return Ok(ColoringCheck::Violated(comp));
        };
        let mut rest = comp;
        rest.remove(&v);
        let check = check_components(&g.induced_subgraph(&rest)?, col)?;
        if !check.is_valid() {
            return Ok(check);
        }
    }
    Ok(ColoringCheck::Valid)
}

/// A rooted forest on `V(G)` in which the ends of every edge are related by
/// ancestry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EliminationForest {
    pub parent: BTreeMap<Vertex, Option<Vertex>>,
    pub height: usize,
}

impl EliminationForest {
    /// Depth of `v`, roots having depth 1.
    pub fn depth(&self, v: Vertex) -> Option<usize> {
        let mut d = 0;
        let mut cur = Some(v);
        while let Some(x) = cur {
            d += 1;
            if d > self.parent.len() {
                return None;
            }
            cur = *self.parent.get(&x)?;
        }
        Some(d)
    }

    pub fn is_ancestor(&self, a: Vertex, mut v: Vertex) -> bool {
        loop {
            if v == a {
                return true;
            }
            match self.parent.get(&v) {
                Some(Some(p)) => v = *p,
                _ => return false,
            }
        }
    }

    pub fn verify(&self, g: &Graph) -> bool {
        if !g.vertices().eq(self.parent.keys().copied()) {
            return false;
        }
        let Some(depths) = g.vertices().map(|v| self.depth(v)).collect::<Option<Vec<_>>>() else {
            return false;
        };
        depths.into_iter().max().unwrap_or(0) == self.height
            && g.edges().all(|(u, v)| self.is_ancestor(u, v) || self.is_ancestor(v, u))
    }

    /// Coloring each vertex by its depth. Any connected subgraph has a unique
    /// shallowest vertex, so this is centered.
    pub fn coloring(&self) -> Coloring {
        let assignment = self.parent.keys().map(|&v| (v, self.depth(v).expect("acyclic") as u32)).collect();
        Coloring::new(assignment, ColoringKind::Centered)
    }
}

fn components(d: &Dense, mut mask: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while mask != 0 {
        let c = d.reach(mask.trailing_zeros() as usize, mask);
        out.push(c);
        mask &= !c;
    }
    out
}

struct Elimination<'a> {
    d: &'a Dense,
    // connected mask -> (treedepth, best root)
    memo: HashMap<u64, (usize, usize)>,
    budget: usize,
}

impl Elimination<'_> {
    fn td(&mut self, mask: u64) -> Result<usize> {
        if mask.count_ones() == 1 {
            return Ok(1);
        }
        if let Some(&(t, _)) = self.memo.get(&mask) {
            return Ok(t);
        }
        if self.memo.len() >= self.budget {
            return Err(Error::resource(format!("treedepth memo exceeded {} entries", self.budget)));
        }
        let size = mask.count_ones() as usize;
        let mut best = (size + 1, 0);
        // high-degree vertices first find good bounds sooner
        let mut roots: Vec<usize> = bits(mask).collect();
        roots.sort_by_key(|&v| (std::cmp::Reverse((self.d.adj[v] & mask).count_ones()), v));
        for v in roots {
            let mut worst = 0;
            let mut comps = components(self.d, mask & !(1 << v));
            comps.sort_by_key(|c| std::cmp::Reverse(c.count_ones()));
            for c in comps {
                // a component on s vertices needs at least ceil(log2(s + 1)) colors
                let lower = (u64::BITS - (c.count_ones() as u64).leading_zeros()) as usize;
                if worst.max(lower) + 1 >= best.0 {
                    worst = best.0;
                    break;
                }
                worst = worst.max(self.td(c)?);
            }
            if worst + 1 < best.0 {
                best = (worst + 1, v);
            }
        }
        self.memo.insert(mask, best);
        Ok(best.0)
    }

    fn build(&self, mask: u64, parent: Option<Vertex>, out: &mut BTreeMap<Vertex, Option<Vertex>>) {
        let root = if mask.count_ones() == 1 { mask.trailing_zeros() as usize } else { self.memo[&mask].1 };
        out.insert(self.d.ids[root], parent);
        for c in components(self.d, mask & !(1 << root)) {
            self.build(c, Some(self.d.ids[root]), out);
        }
    }
}

/// Exact treedepth with an optimal centered coloring and elimination forest.
pub fn treedepth(g: &Graph) -> Result<(usize, Coloring, EliminationForest)> {
    treedepth_with_budget(g, DEFAULT_MEMO_BUDGET)
}

pub fn treedepth_with_budget(g: &Graph, budget: usize) -> Result<(usize, Coloring, EliminationForest)> {
    let d = Dense::new(g)?;
    let mut e = Elimination { d: &d, memo: HashMap::new(), budget };
    let mut height = 0;
    let mut parent = BTreeMap::new();
    for c in components(&d, d.full()) {
        height = height.max(e.td(c)?);
        e.build(c, None, &mut parent);
    }
    let forest = EliminationForest { parent, height };
    let col = forest.coloring();
    if !forest.verify(g) || col.color_count != height || !is_centered(g, &col)?.is_valid() {
        return Err(Error::internal("elimination forest failed verification"));
    }
    Ok((height, col, forest))
}

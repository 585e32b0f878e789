//! Exact minimization for "some color appears exactly once on every set"
//! constraints, by iterative deepening on the number of colors.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{bits, Dense, Graph};

use super::family::family_masks;
use super::{Budgets, Coloring, ColoringKind};

pub const DEFAULT_SOLVER_BUDGET: u64 = 500_000_000;

/// Vertices in maximum-cardinality order: each next vertex has the most
/// neighbors among those already placed. Constraint sets then tend to be
/// completed early, which is where the search prunes.
fn search_order(d: &Dense) -> Vec<usize> {
    let mut order = Vec::with_capacity(d.n());
    let mut placed = 0u64;
    while order.len() < d.n() {
        let v = (0..d.n())
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((d.adj[v] & placed).count_ones(), d.adj[v].count_ones(), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        order.push(v);
        placed |= 1 << v;
    }
    order
}

struct Search<'a> {
    order: &'a [usize],
    // sets that become fully colored at each position of the order
    closing: Vec<Vec<u64>>,
    classes: Vec<u64>,
    colors: Vec<u32>,
    k: usize,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn satisfied(&self, set: u64, used: usize) -> bool {
        self.classes[..used].iter().any(|&c| (c & set).count_ones() == 1)
    }

    fn dfs(&mut self, pos: usize, used: usize) -> Result<bool> {
        if pos == self.order.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::resource(format!("coloring search exceeded {} nodes", self.budget)));
        }
        let v = self.order[pos];
        for c in 0..(used + 1).min(self.k) {
            self.classes[c] |= 1 << v;
            let now = used.max(c + 1);
            let ok = self.closing[pos].iter().all(|&s| self.satisfied(s, now));
            if ok {
                self.colors[v] = c as u32 + 1;
                if self.dfs(pos + 1, now)? {
                    return Ok(true);
                }
            }
            self.classes[c] &= !(1 << v);
        }
        Ok(false)
    }
}

/// A coloring with at most `k` colors meeting every set, as colors per
/// dense index, or `None` when there is none.
pub(crate) fn color_with(d: &Dense, sets: &[u64], k: usize, budget: u64, nodes: &mut u64) -> Result<Option<Vec<u32>>> {
    let n = d.n();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    let order = search_order(d);
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let mut closing = vec![Vec::new(); n];
    for &s in sets.iter().filter(|s| s.count_ones() >= 2) {
        let last = bits(s).map(|v| rank[v]).max().expect("nonempty set");
        closing[last].push(s);
    }
    // smaller sets fail more often, so test them first
    for c in &mut closing {
        c.sort_by_key(|s| s.count_ones());
    }
    let mut search = Search { order: &order, closing, classes: vec![0; k], colors: vec![0; n], k, nodes: *nodes, budget };
    let found = search.dfs(0, 0);
    *nodes = search.nodes;
    Ok(found?.then_some(search.colors))
}

/// The least number of colors meeting every set, with a witness.
pub(crate) fn minimize(d: &Dense, sets: &[u64], budget: u64) -> Result<Vec<u32>> {
    let start = if sets.iter().any(|s| s.count_ones() >= 2) { 2 } else { 1 };
    let mut nodes = 0;
    for k in start.min(d.n().max(1))..=d.n().max(1) {
        if let Some(colors) = color_with(d, sets, k, budget, &mut nodes)? {
            return Ok(colors);
        }
    }
    Err(Error::internal("all-distinct coloring was not found"))
}

pub(crate) fn to_coloring(d: &Dense, colors: &[u32], kind: ColoringKind) -> Coloring {
    let assignment: BTreeMap<_, _> = d.ids.iter().zip(colors).map(|(&v, &c)| (v, c)).collect();
    Coloring::new(assignment, kind)
}

/// A coloring of `kind` with at most `k` colors, or `None` if the exhaustive
/// search shows that none exists.
pub fn find_coloring(g: &Graph, kind: ColoringKind, k: usize, budgets: &Budgets) -> Result<Option<Coloring>> {
    let d = Dense::new(g)?;
    let sets = family_masks(&d, kind, budgets)?;
    let mut nodes = 0;
    Ok(color_with(&d, &sets, k, budgets.solver_nodes, &mut nodes)?.map(|c| to_coloring(&d, &c, kind)))
}

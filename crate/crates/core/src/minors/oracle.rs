//! Generic minor testing for small graphs.
//!
//! Every minor of `G` is a subgraph of a contraction of `G`, so the search
//! walks over contractions (memoized on canonical form) and tests subgraph
//! containment at each one. Branch sets come from contraction provenance.

use std::collections::{BTreeMap, HashSet};

use crate::canon::canonical_graph6;
use crate::error::{Error, Result};
use crate::graph::{bits, Dense, Graph, Vertex, VertexSet};

use super::model::{verify_model, MinorModel};
use super::Decision;

/// Default number of contraction states explored before giving up.
pub const DEFAULT_STATE_BUDGET: usize = 200_000;

/// An injective map from `h` into `g` sending edges to edges, if any.
pub fn subgraph_embedding(h: &Graph, g: &Graph) -> Result<Option<BTreeMap<Vertex, Vertex>>> {
    if h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count() {
        return Ok(None);
    }
    let (dh, dg) = (Dense::new(h)?, Dense::new(g)?);
    // place pattern vertices so that each (after the first of its component)
    // has an already placed neighbor
    let mut order: Vec<usize> = Vec::new();
    let mut placed = 0u64;
    while order.len() < dh.n() {
        let next = (0..dh.n())
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((dh.adj[v] & placed).count_ones(), dh.adj[v].count_ones(), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        order.push(next);
        placed |= 1 << next;
    }
    let mut image = vec![usize::MAX; dh.n()];
    fn place(dh: &Dense, dg: &Dense, order: &[usize], i: usize, image: &mut [usize], used: u64) -> bool {
        let Some(&v) = order.get(i) else { return true };
        let need = dh.adj[v].count_ones();
        let mut candidates = dg.full() & !used;
        for w in bits(dh.adj[v]) {
            if image[w] != usize::MAX {
                candidates &= dg.adj[image[w]];
            }
        }
        for c in bits(candidates) {
            if dg.adj[c].count_ones() < need {
                continue;
            }
            image[v] = c;
            if place(dh, dg, order, i + 1, image, used | 1 << c) {
                return true;
            }
            image[v] = usize::MAX;
        }
        false
    }
    if place(&dh, &dg, &order, 0, &mut image, 0) {
        Ok(Some((0..dh.n()).map(|i| (dh.ids[i], dg.ids[image[i]])).collect()))
    } else {
        Ok(None)
    }
}

struct MinorSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    seen: HashSet<String>,
    budget: usize,
}

impl MinorSearch<'_> {
    fn visit(&mut self, cur: &Graph, bags: &BTreeMap<Vertex, VertexSet>) -> Result<Option<MinorModel>> {
        if cur.vertex_count() < self.h.vertex_count() || cur.edge_count() < self.h.edge_count() {
            return Ok(None);
        }
        if !self.seen.insert(canonical_graph6(cur)?) {
            return Ok(None);
        }
        if self.seen.len() > self.budget {
            return Err(Error::resource("minor search state budget exhausted"));
        }
        if let Some(map) = subgraph_embedding(self.h, cur)? {
            let branch_sets = map.iter().map(|(&x, y)| (x, bags[y].clone())).collect();
            return Ok(MinorModel::with_witnesses(self.g, self.h.clone(), branch_sets));
        }
        if cur.vertex_count() == self.h.vertex_count() {
            return Ok(None);
        }
        for (u, v) in cur.edges().collect::<Vec<_>>() {
            let c = cur.contract_edge_with_provenance(u, v)?;
            let mut next = bags.clone();
            let absorbed = next.remove(&c.absorbed).expect("bag exists");
            next.get_mut(&c.kept).expect("bag exists").extend(absorbed);
            if let Some(m) = self.visit(&c.graph, &next)? {
                return Ok(Some(m));
            }
        }
        Ok(None)
    }
}

/// Whether `h` is a minor of `g`, with a verified model when it is.
pub fn find_minor(g: &Graph, h: &Graph) -> Result<Decision<MinorModel>> {
    find_minor_with_budget(g, h, DEFAULT_STATE_BUDGET)
}

pub fn find_minor_with_budget(g: &Graph, h: &Graph, budget: usize) -> Result<Decision<MinorModel>> {
    let mut search = MinorSearch { g, h, seen: HashSet::new(), budget };
    let bags = g.vertices().map(|v| (v, VertexSet::from([v]))).collect();
    match search.visit(g, &bags) {
        Ok(Some(m)) => {
            if !verify_model(g, &m) {
                return Err(Error::internal("minor oracle produced an invalid model"));
            }
            Ok(Decision::Found(m))
        }
        Ok(None) => Ok(Decision::Absent),
        Err(Error::Resource(note)) => Ok(Decision::Undecided(note)),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minors::ladder;

    fn complete(n: Vertex) -> Graph {
        Graph::from_edges(n as usize, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn cycles_contract_to_smaller_cycles() {
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert!(matches!(find_minor(&c6, &ladder(2)).unwrap(), Decision::Found(_)));
        assert!(matches!(find_minor(&c6, &ladder(3)).unwrap(), Decision::Absent));
        assert!(matches!(find_minor(&complete(4), &ladder(2)).unwrap(), Decision::Found(_)));
        assert!(matches!(find_minor(&complete(6), &ladder(3)).unwrap(), Decision::Found(_)));
    }

    #[test]
    fn k4_is_not_a_minor_of_a_ladder() {
        // ladders are series-parallel
        assert!(matches!(find_minor(&ladder(5), &complete(4)).unwrap(), Decision::Absent));
    }
}

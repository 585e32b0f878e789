//! Canonical labeling for small graphs.
//!
//! Equitable partition refinement followed by individualization, keeping the
//! lexicographically largest adjacency matrix over all leaves. Automorphisms
//! discovered at equal leaves prune sibling branches that lie in the same
//! orbit of the pointwise stabilizer of the current prefix.

use crate::error::Result;
use crate::graph::{bits, Dense, Graph, Vertex};
use crate::io;

type Cells = Vec<Vec<usize>>;

struct Search<'a> {
    d: &'a Dense,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

/// Canonical relabelling: `labels[i]` is the original vertex that receives
/// canonical index `i`. Isomorphic graphs get identical canonical graphs.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<Vertex>> {
    let d = Dense::new(g)?;
    if d.n() == 0 {
        return Ok(Vec::new());
    }
    let mut search = Search { d: &d, best: None, automorphisms: Vec::new() };
    let cells = refine(&d, vec![(0..d.n()).collect()]);
    search.explore(cells, &mut Vec::new());
    let (_, lab) = search.best.expect("at least one leaf");
    Ok(lab.into_iter().map(|i| d.ids[i]).collect())
}

/// The canonical graph on `0..n`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let labels = canonical_labeling(g)?;
    let pos: std::collections::BTreeMap<Vertex, Vertex> =
        labels.iter().enumerate().map(|(i, &v)| (v, i as Vertex)).collect();
    Graph::from_edges(labels.len(), g.edges().map(|(u, v)| (pos[&u], pos[&v])))
}

/// graph6 of the canonical form; equal strings iff isomorphic.
pub fn canonical_graph6(g: &Graph) -> Result<String> {
    Ok(io::to_graph6(&canonical_form(g)?))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(canonical_graph6(g)? == canonical_graph6(h)?)
}

/// Splits cells by neighbor counts into every cell until stable. Sub-cells
/// are ordered by count, which keeps the result isomorphism invariant.
fn refine(d: &Dense, mut cells: Cells) -> Cells {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter: u64 = cells[s].iter().fold(0, |m, &v| m | 1 << v);
            let mut next = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> =
                    cell.iter().map(|&v| ((d.adj[v] & splitter).count_ones(), v)).collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            if next.len() != cells.len() {
                changed = true;
                cells = next;
            }
            s += 1;
        }
        if !changed {
            return cells;
        }
    }
}

impl Search<'_> {
    fn code(&self, lab: &[usize]) -> Vec<u64> {
        let mut inv = vec![0; lab.len()];
        for (i, &v) in lab.iter().enumerate() {
            inv[v] = i;
        }
        lab.iter()
            .map(|&v| bits(self.d.adj[v]).fold(0u64, |m, w| m | 1 << inv[w]))
            .collect()
    }

    fn explore(&mut self, cells: Cells, prefix: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let lab: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let code = self.code(&lab);
            match &self.best {
                None => self.best = Some((code, lab)),
                Some((best, best_lab)) => {
                    if code > *best {
                        self.best = Some((code, lab));
                    } else if code == *best {
                        let mut gamma = vec![0; lab.len()];
                        for (i, &v) in lab.iter().enumerate() {
                            gamma[v] = best_lab[i];
                        }
                        self.automorphisms.push(gamma);
                    }
                }
            }
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[target].clone() {
            if explored.iter().any(|&u| self.same_orbit(prefix, u, v)) {
                continue;
            }
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&w| w != v).collect();
            child[target] = vec![v];
            child.insert(target + 1, rest);
            prefix.push(v);
            self.explore(refine(self.d, child), prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    /// Orbit test under the automorphisms found so far that fix `prefix`.
    fn same_orbit(&self, prefix: &[usize], u: usize, v: usize) -> bool {
        let n = self.d.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if prefix.iter().all(|&x| gamma[x] == x) {
                for (x, &y) in gamma.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    parent[a] = b;
                }
            }
        }
        find(&mut parent, u) == find(&mut parent, v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(g: &Graph, perm: &[Vertex]) -> Graph {
        Graph::from_edges(g.vertex_count(), g.edges().map(|(u, v)| (perm[u as usize], perm[v as usize]))).unwrap()
    }

    #[test]
    fn isomorphic_relabellings_agree() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        let h = relabel(&g, &[3, 5, 0, 1, 4, 2]);
        assert_eq!(canonical_graph6(&g).unwrap(), canonical_graph6(&h).unwrap());
    }

    #[test]
    fn non_isomorphic_same_degrees_differ() {
        // C6 versus two triangles.
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let tt = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic(&c6, &tt).unwrap());
    }

    #[test]
    fn complete_graph_is_fast() {
        let n = 14;
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        let k = Graph::from_edges(n as usize, edges).unwrap();
        assert_eq!(canonical_form(&k).unwrap(), k);
    }
}

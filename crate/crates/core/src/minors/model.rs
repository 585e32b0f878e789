use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, Path, Vertex, VertexSet};
use crate::io::EdgeListJson;

/// An `H`-model in `G`: disjoint connected branch sets, one per pattern
/// vertex, with a witness edge of `G` for every pattern edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "MinorModelJson", try_from = "MinorModelJson")]
pub struct MinorModel {
    pub pattern: Graph,
    pub branch_sets: BTreeMap<Vertex, VertexSet>,
    pub witness_edges: BTreeMap<Edge, Edge>,
}

#[derive(Serialize, Deserialize)]
struct MinorModelJson {
    pattern: EdgeListJson,
    branch_sets: Vec<(Vertex, Vec<Vertex>)>,
    witness_edges: Vec<([Vertex; 2], [Vertex; 2])>,
}

impl From<MinorModel> for MinorModelJson {
    fn from(m: MinorModel) -> Self {
        MinorModelJson {
            pattern: EdgeListJson::from_graph(&m.pattern),
            branch_sets: m.branch_sets.into_iter().map(|(x, s)| (x, s.into_iter().collect())).collect(),
            witness_edges: m.witness_edges.into_iter().map(|((a, b), (u, v))| ([a, b], [u, v])).collect(),
        }
    }
}

impl TryFrom<MinorModelJson> for MinorModel {
    type Error = Error;

    fn try_from(j: MinorModelJson) -> Result<Self> {
        Ok(MinorModel {
            pattern: j.pattern.to_graph()?,
            branch_sets: j.branch_sets.into_iter().map(|(x, s)| (x, s.into_iter().collect())).collect(),
            witness_edges: j.witness_edges.into_iter().map(|([a, b], [u, v])| (edge(a, b), edge(u, v))).collect(),
        })
    }
}

impl MinorModel {
    /// Model of `g` in itself with singleton branch sets.
    pub fn identity(g: &Graph) -> Self {
        MinorModel {
            pattern: g.clone(),
            branch_sets: g.vertices().map(|v| (v, VertexSet::from([v]))).collect(),
            witness_edges: g.edges().map(|e| (e, e)).collect(),
        }
    }

    /// Builds a model from branch sets, choosing the smallest edge of `g`
    /// between each pair of adjacent branch sets. `None` when some pattern
    /// edge has no such edge.
    pub fn with_witnesses(g: &Graph, pattern: Graph, branch_sets: BTreeMap<Vertex, VertexSet>) -> Option<Self> {
        let mut witness_edges = BTreeMap::new();
        for (x, y) in pattern.edges() {
            let (bx, by) = (branch_sets.get(&x)?, branch_sets.get(&y)?);
            let w = bx
                .iter()
                .flat_map(|&u| g.neighbors(u).filter(|v| by.contains(v)).map(move |v| edge(u, v)))
                .min()?;
            witness_edges.insert((x, y), w);
        }
        Some(MinorModel { pattern, branch_sets, witness_edges })
    }

    /// All vertices used by some branch set.
    pub fn support(&self) -> VertexSet {
        self.branch_sets.values().flatten().copied().collect()
    }

    /// The pattern vertex whose branch set contains `v`.
    pub fn owner(&self, v: Vertex) -> Option<Vertex> {
        self.branch_sets.iter().find(|(_, s)| s.contains(&v)).map(|(&x, _)| x)
    }
}

/// Checks disjointness, connectivity of each branch set and the witness edges.
pub fn verify_model(g: &Graph, m: &MinorModel) -> bool {
    if m.branch_sets.len() != m.pattern.vertex_count() || !m.pattern.vertices().all(|x| m.branch_sets.contains_key(&x)) {
        return false;
    }
    let mut seen = VertexSet::new();
    for set in m.branch_sets.values() {
        if set.is_empty() || !set.iter().all(|&v| g.has_vertex(v) && seen.insert(v)) {
            return false;
        }
        match g.induced_subgraph(set) {
            Ok(h) if h.is_connected() => {}
            _ => return false,
        }
    }
    m.witness_edges.len() == m.pattern.edge_count()
        && m.pattern.edges().all(|(x, y)| match m.witness_edges.get(&(x, y)) {
            Some(&(u, v)) => {
                let (bx, by) = (&m.branch_sets[&x], &m.branch_sets[&y]);
                g.has_edge(u, v) && ((bx.contains(&u) && by.contains(&v)) || (bx.contains(&v) && by.contains(&u)))
            }
            None => false,
        })
}

/// Pattern vertex of `L_k` in row `row` (1 or 2) and column `col` (from 1).
/// Identifiers do not depend on `k`, so shortening a ladder keeps them.
pub fn ladder_vertex(row: u32, col: u32) -> Vertex {
    2 * (col - 1) + (row - 1)
}

/// The ladder `L_k`: the `2 × k` grid.
pub fn ladder(k: usize) -> Graph {
    let k = k as u32;
    let mut g = Graph::empty(2 * k as usize);
    for j in 1..=k {
        g.add_edge(ladder_vertex(1, j), ladder_vertex(2, j)).expect("valid");
        if j < k {
            for r in 1..=2 {
                g.add_edge(ladder_vertex(r, j), ladder_vertex(r, j + 1)).expect("valid");
            }
        }
    }
    g
}

/// Number of columns of a ladder pattern, assuming it is `L_k`.
pub fn ladder_columns(m: &MinorModel) -> usize {
    m.pattern.vertex_count() / 2
}

/// Subdivision model `(P1, P2; Q1, …, Qk)` of `L_k`: two disjoint rails and
/// `k` disjoint rungs, rung `j` running from the `j`-th branch vertex of `p1`
/// to the `j`-th branch vertex of `p2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderSubdivisionModel {
    pub p1: Path,
    pub p2: Path,
    pub rungs: Vec<Path>,
}

impl LadderSubdivisionModel {
    pub fn k(&self) -> usize {
        self.rungs.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        let mut s = self.p1.vertex_set();
        s.extend(self.p2.vertices());
        for q in &self.rungs {
            s.extend(q.vertices());
        }
        s
    }

    pub fn edge_set(&self) -> std::collections::BTreeSet<Edge> {
        let mut s: std::collections::BTreeSet<Edge> = self.p1.edges().collect();
        s.extend(self.p2.edges());
        for q in &self.rungs {
            s.extend(q.edges());
        }
        s
    }

    /// The subdivided ladder as a subgraph of `g`.
    pub fn subgraph(&self, g: &Graph) -> Result<Graph> {
        g.subgraph(&self.vertex_set(), &self.edge_set())
    }

    /// Branch sets: each rail vertex joins the branch vertex before it and
    /// each rung interior joins its top end.
    pub fn to_minor_model(&self, g: &Graph) -> Result<MinorModel> {
        let k = self.k();
        let mut branch_sets = BTreeMap::new();
        for (row, rail) in [(1, &self.p1), (2, &self.p2)] {
            let mut col = 0;
            for &v in rail.vertices() {
                if col < k && self.rungs[col].contains(v) {
                    col += 1;
                }
                branch_sets.entry(ladder_vertex(row, col as u32)).or_insert_with(VertexSet::new).insert(v);
            }
        }
        for (j, q) in self.rungs.iter().enumerate() {
            branch_sets.get_mut(&ladder_vertex(1, j as u32 + 1)).expect("rung top").extend(q.interior());
        }
        MinorModel::with_witnesses(g, ladder(k), branch_sets)
            .filter(|m| verify_model(g, m))
            .ok_or_else(|| Error::input("subdivision model does not induce a valid ladder model"))
    }
}

/// Checks the subdivision model invariants in `g`.
pub fn verify_subdivision_model(g: &Graph, sm: &LadderSubdivisionModel) -> bool {
    let k = sm.k();
    if k == 0 || !sm.p1.is_valid_in(g) || !sm.p2.is_valid_in(g) || !sm.rungs.iter().all(|q| q.is_valid_in(g) && q.len() >= 1) {
        return false;
    }
    let (r1, r2) = (sm.p1.vertex_set(), sm.p2.vertex_set());
    if !r1.is_disjoint(&r2) {
        return false;
    }
    let mut interiors = VertexSet::new();
    for q in &sm.rungs {
        if !r1.contains(&q.first()) || !r2.contains(&q.last()) {
            return false;
        }
        for &v in q.interior() {
            if r1.contains(&v) || r2.contains(&v) || !interiors.insert(v) {
                return false;
            }
        }
    }
    let tops: Vec<usize> = sm.rungs.iter().map(|q| sm.p1.position(q.first()).unwrap()).collect();
    let bottoms: Vec<usize> = sm.rungs.iter().map(|q| sm.p2.position(q.last()).unwrap()).collect();
    let increasing = |xs: &[usize]| xs.windows(2).all(|w| w[0] < w[1]);
    increasing(&tops)
        && increasing(&bottoms)
        && tops[0] == 0
        && bottoms[0] == 0
        && tops[k - 1] == sm.p1.vertices().len() - 1
        && bottoms[k - 1] == sm.p2.vertices().len() - 1
}

/// A model of `L_k` rooted at `(z1, z2)`: `z1` lies in the branch set of
/// `(1, k)` and `z2` in that of `(2, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootedLadderModel {
    pub model: MinorModel,
    pub roots: (Vertex, Vertex),
}

impl RootedLadderModel {
    pub fn k(&self) -> usize {
        ladder_columns(&self.model)
    }
}

pub fn verify_rooted(g: &Graph, m: &RootedLadderModel) -> bool {
    let k = m.k() as u32;
    k >= 1
        && m.model.pattern == ladder(k as usize)
        && verify_model(g, &m.model)
        && m.model.branch_sets[&ladder_vertex(1, k)].contains(&m.roots.0)
        && m.model.branch_sets[&ladder_vertex(2, k)].contains(&m.roots.1)
}

/// Restricts a ladder model to its first `cols` columns, merging each later
/// branch set into the last kept one of the same row.
pub fn trim_ladder_model(g: &Graph, m: &MinorModel, cols: usize) -> Result<MinorModel> {
    let k = ladder_columns(m);
    if cols == 0 || cols > k {
        return Err(Error::input(format!("cannot trim L_{k} to {cols} columns")));
    }
    let mut branch_sets = BTreeMap::new();
    for (&x, set) in &m.branch_sets {
        let (row, col) = (x % 2 + 1, x / 2 + 1);
        let target = ladder_vertex(row, col.min(cols as u32));
        branch_sets.entry(target).or_insert_with(VertexSet::new).extend(set);
    }
    MinorModel::with_witnesses(g, ladder(cols), branch_sets)
        .filter(|t| verify_model(g, t))
        .ok_or_else(|| Error::internal("trimmed model failed verification"))
}

/// Observation check on a subdivided ladder `h`: exactly one edge between
/// branch sets of adjacent pattern vertices and none between the others.
pub fn single_edge_property(h: &Graph, m: &MinorModel) -> bool {
    let xs: Vec<Vertex> = m.pattern.vertices().collect();
    xs.iter().enumerate().all(|(i, &x)| {
        xs[i + 1..].iter().all(|&y| {
            let count = m.branch_sets[&x]
                .iter()
                .map(|&u| h.neighbors(u).filter(|v| m.branch_sets[&y].contains(v)).count())
                .sum::<usize>();
            count == usize::from(m.pattern.has_edge(x, y))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladder_shapes() {
        assert_eq!(ladder(1).edge_count(), 1);
        let c4 = ladder(2);
        assert_eq!((c4.vertex_count(), c4.edge_count()), (4, 4));
        assert!(c4.vertices().all(|v| c4.degree(v) == 2));
        for k in 1..8 {
            let l = ladder(k);
            assert_eq!((l.vertex_count(), l.edge_count()), (2 * k, 3 * k - 2));
        }
        // a full row of L_3 induces a path on 3 vertices
        let row: VertexSet = (1..=3).map(|j| ladder_vertex(1, j)).collect();
        let p = ladder(3).induced_subgraph(&row).unwrap();
        assert_eq!(p.edge_count(), 2);
        assert!(p.is_connected());
    }

    #[test]
    fn identity_and_overlap() {
        let g = ladder(3);
        let id = MinorModel::identity(&g);
        assert!(verify_model(&g, &id));
        let mut bad = id.clone();
        bad.branch_sets.insert(0, VertexSet::from([0, 1]));
        assert!(!verify_model(&g, &bad));
    }

    #[test]
    fn json_round_trip() {
        let g = ladder(2);
        let m = MinorModel::identity(&g);
        let s = serde_json::to_string(&m).unwrap();
        let back: MinorModel = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn subdivision_to_model_and_trim() {
        // L_3 with its first top rail edge subdivided by vertex 6
        let g = Graph::from_edges(7, [(0, 6), (6, 2), (2, 4), (1, 3), (3, 5), (0, 1), (2, 3), (4, 5)]).unwrap();
        let sm = LadderSubdivisionModel {
            p1: Path(vec![0, 6, 2, 4]),
            p2: Path(vec![1, 3, 5]),
            rungs: vec![Path(vec![0, 1]), Path(vec![2, 3]), Path(vec![4, 5])],
        };
        assert!(verify_subdivision_model(&g, &sm));
        let m = sm.to_minor_model(&g).unwrap();
        assert!(verify_model(&g, &m));
        assert!(single_edge_property(&g, &m));
        let t = trim_ladder_model(&g, &m, 2).unwrap();
        assert_eq!(t.pattern, ladder(2));
        assert!(t.branch_sets[&ladder_vertex(1, 2)].contains(&4));
    }
}

//! Simple undirected graphs with stable vertex identifiers.
//!
//! Every edit (vertex deletion, induced subgraph, edge contraction) returns a
//! new [`Graph`]; identifiers of untouched vertices never change, so a
//! certificate computed on a subgraph can be read directly in its parent.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = u32;

/// An undirected edge, always stored with the smaller endpoint first.
pub type Edge = (Vertex, Vertex);

pub type VertexSet = BTreeSet<Vertex>;

/// Orders the endpoints of an edge.
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

/// Result of contracting an edge: the surviving identifier and the one
/// merged into it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Graph,
    pub kept: Vertex,
    pub absorbed: Vertex,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Edgeless graph on `0..n`.
    pub fn empty(n: usize) -> Self {
        let mut g = Self::new();
        for v in 0..n as Vertex {
            g.add_vertex(v);
        }
        g
    }

    /// Graph on vertices `0..n` with the given edges.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Graph with an explicit vertex set; edge endpoints must be listed.
    pub fn from_parts(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self> {
        let mut g = Self::new();
        for v in vertices {
            g.add_vertex(v);
        }
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: Vertex) {
        self.adj.entry(v).or_default();
    }

    /// Adds `uv`; both endpoints must already exist. Loops are rejected and
    /// repeated edges are ignored.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u == v {
            return Err(Error::input(format!("loop at vertex {u}")));
        }
        for w in [u, v] {
            if !self.adj.contains_key(&w) {
                return Err(Error::UnknownVertex(w));
            }
        }
        self.adj.get_mut(&u).unwrap().insert(v);
        self.adj.get_mut(&v).unwrap().insert(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    /// Edges in lexicographic order, smaller endpoint first.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, ns)| ns.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|ns| ns.contains(&v))
    }

    /// Neighbors of `v`; empty for unknown vertices.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.get(&v).into_iter().flat_map(|ns| ns.iter().copied())
    }

    pub fn neighbor_set(&self, v: Vertex) -> Option<&BTreeSet<Vertex>> {
        self.adj.get(&v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// Smallest identifier strictly above every existing one.
    pub fn fresh_vertex(&self) -> Vertex {
        self.adj.keys().next_back().map_or(0, |v| v + 1)
    }

    fn check_vertices<'a>(&self, s: impl IntoIterator<Item = &'a Vertex>) -> Result<()> {
        for &v in s {
            if !self.has_vertex(v) {
                return Err(Error::UnknownVertex(v));
            }
        }
        Ok(())
    }

    /// Subgraph induced by `s`, keeping identifiers.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        self.check_vertices(s)?;
        let adj = s
            .iter()
            .map(|&v| {
                let ns = self.adj[&v].iter().copied().filter(|w| s.contains(w)).collect();
                (v, ns)
            })
            .collect();
        Ok(Graph { adj })
    }

    /// `G - X`: the subgraph induced by the complement of `x`.
    pub fn delete_vertices(&self, x: &VertexSet) -> Result<Graph> {
        self.check_vertices(x)?;
        let keep: VertexSet = self.vertices().filter(|v| !x.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    pub fn delete_vertex(&self, v: Vertex) -> Result<Graph> {
        self.delete_vertices(&BTreeSet::from([v]))
    }

    pub fn delete_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        let mut g = self.clone();
        g.adj.get_mut(&u).unwrap().remove(&v);
        g.adj.get_mut(&v).unwrap().remove(&u);
        Ok(g)
    }

    /// `G/e`. The merged vertex keeps the smaller identifier; parallel edges
    /// and loops are suppressed.
    pub fn contract_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        Ok(self.contract_edge_with_provenance(u, v)?.graph)
    }

    pub fn contract_edge_with_provenance(&self, u: Vertex, v: Vertex) -> Result<Contraction> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        let (kept, absorbed) = edge(u, v);
        let mut g = self.clone();
        let moved = g.adj.remove(&absorbed).unwrap();
        for w in moved {
            let ns = g.adj.get_mut(&w).unwrap();
            ns.remove(&absorbed);
            if w != kept {
                ns.insert(kept);
                g.adj.get_mut(&kept).unwrap().insert(w);
            }
        }
        Ok(Contraction { graph: g, kept, absorbed })
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let comp = self.reachable_from(v, &VertexSet::new());
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` without entering `blocked`.
    pub fn reachable_from(&self, start: Vertex, blocked: &VertexSet) -> VertexSet {
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if !blocked.contains(&w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        match self.vertices().next() {
            None => false,
            Some(v) => self.reachable_from(v, &VertexSet::new()).len() == self.vertex_count(),
        }
    }

    /// Shortest path from `a` to `b` avoiding `blocked` (BFS, ties broken by
    /// smallest neighbor).
    pub fn shortest_path(&self, a: Vertex, b: Vertex, blocked: &VertexSet) -> Option<Path> {
        let mut parent = BTreeMap::from([(a, a)]);
        let mut queue = VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            if u == b {
                let mut path = vec![b];
                let mut cur = b;
                while cur != a {
                    cur = parent[&cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(Path(path));
            }
            for w in self.neighbors(u) {
                if !blocked.contains(&w) && !parent.contains_key(&w) {
                    parent.insert(w, u);
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// True when every vertex and edge of `self` appears in `other`.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.vertices().all(|v| other.has_vertex(v)) && self.edges().all(|(u, v)| other.has_edge(u, v))
    }

    /// Disjoint union; the vertices of `other` are shifted above those of `self`.
    /// Returns the union and the applied offset.
    pub fn disjoint_union(&self, other: &Graph) -> (Graph, Vertex) {
        let offset = self.fresh_vertex();
        let mut g = self.clone();
        for v in other.vertices() {
            g.add_vertex(v + offset);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + offset, v + offset).expect("endpoints were added");
        }
        (g, offset)
    }

    /// Renumbers vertices to `0..n` in identifier order.
    pub fn compact(&self) -> (Graph, Vec<Vertex>) {
        let ids: Vec<Vertex> = self.vertices().collect();
        let pos: BTreeMap<Vertex, Vertex> = ids.iter().enumerate().map(|(i, &v)| (v, i as Vertex)).collect();
        let g = Graph::from_edges(ids.len(), self.edges().map(|(u, v)| (pos[&u], pos[&v])))
            .expect("relabelled edges are valid");
        (g, ids)
    }

    /// Subgraph with exactly the given vertices and edges of `self`.
    pub fn subgraph(&self, vertices: &VertexSet, edges: &BTreeSet<Edge>) -> Result<Graph> {
        self.check_vertices(vertices)?;
        let mut g = Graph::new();
        for &v in vertices {
            g.add_vertex(v);
        }
        for &(u, v) in edges {
            if !self.has_edge(u, v) {
                return Err(Error::NotAnEdge { u, v });
            }
            g.add_edge(u, v)?;
        }
        Ok(g)
    }
}

/// A pair `(a1, a2)` covering the vertex set with no edge between
/// `a1 \ a2` and `a2 \ a1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separation {
    pub a1: VertexSet,
    pub a2: VertexSet,
}

impl Separation {
    pub fn new(a1: VertexSet, a2: VertexSet) -> Self {
        Self { a1, a2 }
    }

    pub fn order(&self) -> usize {
        self.a1.intersection(&self.a2).count()
    }

    pub fn separator(&self) -> VertexSet {
        self.a1.intersection(&self.a2).copied().collect()
    }

    pub fn is_trivial(&self, g: &Graph) -> bool {
        let all = g.vertex_set();
        self.a1 == all || self.a2 == all
    }
}

/// Checks both separation axioms in `g`.
pub fn verify_separation(g: &Graph, sep: &Separation) -> bool {
    let covers = g.vertices().all(|v| sep.a1.contains(&v) || sep.a2.contains(&v))
        && sep.a1.iter().chain(&sep.a2).all(|&v| g.has_vertex(v));
    covers
        && g.edges().all(|(u, v)| {
            (sep.a1.contains(&u) && sep.a1.contains(&v)) || (sep.a2.contains(&u) && sep.a2.contains(&v))
        })
}

/// A sequence of distinct vertices, consecutive ones adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path(pub Vec<Vertex>);

impl Path {
    pub fn single(v: Vertex) -> Self {
        Path(vec![v])
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Vertex {
        self.0[0]
    }

    pub fn last(&self) -> Vertex {
        *self.0.last().unwrap()
    }

    pub fn interior(&self) -> &[Vertex] {
        if self.0.len() <= 2 {
            &[]
        } else {
            &self.0[1..self.0.len() - 1]
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.0.iter().position(|&w| w == v)
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.windows(2).map(|w| edge(w[0], w[1]))
    }

    pub fn reversed(&self) -> Path {
        Path(self.0.iter().rev().copied().collect())
    }

    /// The subpath between positions `i` and `j` (either order), oriented
    /// from `i` to `j`.
    pub fn segment(&self, i: usize, j: usize) -> Path {
        if i <= j {
            Path(self.0[i..=j].to_vec())
        } else {
            Path(self.0[j..=i].iter().rev().copied().collect())
        }
    }

    /// Nonempty, vertices distinct, consecutive vertices adjacent in `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        !self.0.is_empty()
            && self.0.iter().all(|&v| g.has_vertex(v))
            && self.vertex_set().len() == self.0.len()
            && self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    /// An `A`–`B` path: valid, one end in `a`, the other in `b`, and no
    /// interior vertex in `a ∪ b`.
    pub fn is_a_b_path(&self, g: &Graph, a: &VertexSet, b: &VertexSet) -> bool {
        self.is_valid_in(g)
            && a.contains(&self.first())
            && b.contains(&self.last())
            && self.interior().iter().all(|v| !a.contains(v) && !b.contains(v))
    }

    /// No edge of `g` joins two vertices of the path that are not consecutive.
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        let pos: BTreeMap<Vertex, usize> = self.0.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        self.0.iter().enumerate().all(|(i, &v)| {
            g.neighbors(v)
                .filter_map(|w| pos.get(&w))
                .all(|&j| j + 1 == i || i + 1 == j)
        })
    }
}

/// Bitmask view of a graph on at most 64 vertices, used by the exhaustive
/// solvers. Index `i` corresponds to `ids[i]`.
#[derive(Clone, Debug)]
pub(crate) struct Dense {
    pub ids: Vec<Vertex>,
    pub adj: Vec<u64>,
}

impl Dense {
    pub const MAX: usize = 64;

    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.vertex_count();
        if n > Self::MAX {
            return Err(Error::resource(format!("{n} vertices exceeds the dense limit of {}", Self::MAX)));
        }
        let ids: Vec<Vertex> = g.vertices().collect();
        let adj = ids
            .iter()
            .map(|&v| g.neighbors(v).map(|w| 1u64 << ids.binary_search(&w).unwrap()).fold(0, |a, b| a | b))
            .collect();
        Ok(Dense { ids, adj })
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn full(&self) -> u64 {
        mask_below(self.n())
    }

    pub fn to_set(&self, mask: u64) -> VertexSet {
        bits(mask).map(|i| self.ids[i]).collect()
    }

    /// Vertices of `within` reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for i in bits(frontier) {
                next |= self.adj[i];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self, within: u64) -> bool {
        within != 0 && self.reach(within.trailing_zeros() as usize, within) == within
    }

    /// Whether `G[within]` is connected and has no cutvertex, i.e. it is a
    /// single vertex, an edge, or 2-connected.
    pub fn is_biconnected(&self, within: u64) -> bool {
        if !self.is_connected(within) {
            return false;
        }
        if within.count_ones() <= 2 {
            return true;
        }
        bits(within).all(|v| self.is_connected(within & !(1 << v)))
    }
}

pub(crate) fn mask_below(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Indices of the set bits, ascending.
pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n as Vertex).map(|i| (i, (i + 1) % n as Vertex))).unwrap()
    }

    fn set(vs: &[Vertex]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn induced_subgraph_cases() {
        let c4 = cycle(4);
        assert_eq!(c4.induced_subgraph(&c4.vertex_set()).unwrap(), c4);
        let e = c4.induced_subgraph(&set(&[0, 1])).unwrap();
        assert_eq!(e.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(c4.induced_subgraph(&set(&[0, 9])), Err(Error::UnknownVertex(9)));
    }

    #[test]
    fn contraction_cases() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        let k1 = k2.contract_edge(0, 1).unwrap();
        assert_eq!(k1.vertex_count(), 1);
        assert_eq!(k1.edge_count(), 0);

        let tri = cycle(4).contract_edge(2, 3).unwrap();
        assert_eq!(tri.vertex_count(), 3);
        assert_eq!(tri.edge_count(), 3);
        assert!(tri.has_vertex(2) && !tri.has_vertex(3));

        assert!(matches!(cycle(4).contract_edge(0, 2), Err(Error::NotAnEdge { .. })));
    }

    #[test]
    fn separations() {
        let c4 = cycle(4);
        let all = c4.vertex_set();
        assert!(verify_separation(&c4, &Separation::new(all.clone(), all)));
        let sep = Separation::new(set(&[0, 1, 2]), set(&[2, 3, 0]));
        assert!(verify_separation(&c4, &sep));
        assert_eq!(sep.order(), 2);
        assert!(!sep.is_trivial(&c4));

        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(!verify_separation(&k4, &Separation::new(set(&[0, 1]), set(&[2, 3]))));
        // does not cover
        assert!(!verify_separation(&c4, &Separation::new(set(&[0, 1]), set(&[1, 2]))));
    }

    #[test]
    fn paths() {
        let c4 = cycle(4);
        let p = Path(vec![0, 1, 2]);
        assert!(p.is_valid_in(&c4));
        assert_eq!(p.len(), 2);
        assert!(p.is_induced_in(&c4));
        assert!(!Path(vec![0, 1, 2, 3]).is_induced_in(&c4));
        assert!(!Path(vec![0, 2]).is_valid_in(&c4));
        assert!(p.is_a_b_path(&c4, &set(&[0]), &set(&[2])));
        assert!(!p.is_a_b_path(&c4, &set(&[0, 1]), &set(&[2])));
        assert_eq!(p.segment(2, 0), Path(vec![2, 1, 0]));
    }

    #[test]
    fn dense_biconnectivity() {
        let c4 = cycle(4);
        let d = Dense::new(&c4).unwrap();
        assert!(d.is_biconnected(0b1111));
        assert!(!d.is_biconnected(0b0111));
        assert!(d.is_biconnected(0b0011));
        assert!(!d.is_biconnected(0b0101));
    }

    #[test]
    fn shortest_path_respects_blocked() {
        let c6 = cycle(6);
        let p = c6.shortest_path(0, 3, &set(&[1])).unwrap();
        assert_eq!(p.0, vec![0, 5, 4, 3]);
        assert!(c6.shortest_path(0, 3, &set(&[1, 5])).is_none());
    }
}

//! Finite posets, their cover graphs, and realizers.

mod apex;
mod dimension;
mod kelly;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph, Vertex, VertexSet};

pub use apex::{apex_merge, realizer_via_td2, realizer_via_td2_with, Td2Realizer};
pub use dimension::{dimension_exact, dimension_exact_with, is_realizer, RealizerCheck, RealizerFault, DEFAULT_ELEMENT_BUDGET};
pub use kelly::kelly_poset;

/// A partial order on at most 64 elements. `up[i]` holds the indices `j`
/// with `elements[i] <= elements[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<Vertex>,
    up: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    elements: Vec<Vertex>,
    relation: Vec<[Vertex; 2]>,
}

impl Serialize for Poset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PosetJson { elements: self.elements.clone(), relation: self.cover_pairs().into_iter().map(|(a, b)| [a, b]).collect() }
            .serialize(s)
    }
}

/// Linear orders listed from least to greatest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Realizer {
    pub orders: Vec<Vec<Vertex>>,
}

impl Realizer {
    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }
}

impl Poset {
    /// The reflexive transitive closure of `relation`, where `[u, v]` means
    /// `u < v`. Fails on cycles.
    pub fn from_relation(elements: impl IntoIterator<Item = Vertex>, relation: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut elements: Vec<Vertex> = elements.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        if elements.len() > 64 {
            return Err(Error::resource(format!("{} elements exceeds the limit of 64", elements.len())));
        }
        let index = |v: Vertex| elements.binary_search(&v).map_err(|_| Error::UnknownVertex(v));
        let mut up: Vec<u64> = (0..elements.len()).map(|i| 1u64 << i).collect();
        for &(u, v) in relation {
            up[index(u)?] |= 1 << index(v)?;
        }
        // closure by repeated squaring until stable
        loop {
            let next: Vec<u64> = up.iter().map(|&m| bits(m).fold(m, |acc, j| acc | up[j])).collect();
            if next == up {
                break;
            }
            up = next;
        }
        for i in 0..elements.len() {
            for j in bits(up[i] & !(1 << i)) {
                if up[j] >> i & 1 == 1 {
                    return Err(Error::input(format!("relation has a cycle through {} and {}", elements[i], elements[j])));
                }
            }
        }
        Ok(Poset { elements, up })
    }

    /// From an explicit `<=` predicate, checking all three order axioms.
    pub fn from_leq(elements: impl IntoIterator<Item = Vertex>, leq: impl Fn(Vertex, Vertex) -> bool) -> Result<Self> {
        let mut elements: Vec<Vertex> = elements.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        if elements.len() > 64 {
            return Err(Error::resource(format!("{} elements exceeds the limit of 64", elements.len())));
        }
        let n = elements.len();
        let up: Vec<u64> = (0..n).map(|i| (0..n).filter(|&j| leq(elements[i], elements[j])).fold(0, |m, j| m | 1 << j)).collect();
        for i in 0..n {
            if up[i] >> i & 1 == 0 {
                return Err(Error::input(format!("relation is not reflexive at {}", elements[i])));
            }
            for j in bits(up[i] & !(1 << i)) {
                if up[j] >> i & 1 == 1 {
                    return Err(Error::input(format!("relation is not antisymmetric on {} and {}", elements[i], elements[j])));
                }
                if up[j] & !up[i] != 0 {
                    return Err(Error::input(format!("relation is not transitive through {}", elements[j])));
                }
            }
        }
        Ok(Poset { elements, up })
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: PosetJson = serde_json::from_str(s).map_err(crate::io::json_error)?;
        let rel: Vec<(Vertex, Vertex)> = j.relation.iter().map(|&[a, b]| (a, b)).collect();
        Poset::from_relation(j.elements, &rel)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("posets serialize")
    }

    pub fn chain(n: usize) -> Self {
        let rel: Vec<_> = (1..n as Vertex).map(|i| (i - 1, i)).collect();
        Poset::from_relation(0..n as Vertex, &rel).expect("chains are posets")
    }

    pub fn antichain(n: usize) -> Self {
        Poset::from_relation(0..n as Vertex, &[]).expect("antichains are posets")
    }

    /// `a_i = i - 1` and `b_i = n + i - 1` with `a_i < b_j` exactly when `i != j`.
    pub fn standard_example(n: usize) -> Self {
        let n = n as Vertex;
        let rel: Vec<_> = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, n + j))).collect();
        Poset::from_relation(0..2 * n, &rel).expect("standard examples are posets")
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Vertex] {
        &self.elements
    }

    pub fn index(&self, x: Vertex) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    pub(crate) fn up_mask(&self, i: usize) -> u64 {
        self.up[i]
    }

    pub fn leq(&self, x: Vertex, y: Vertex) -> bool {
        match (self.index(x), self.index(y)) {
            (Some(i), Some(j)) => self.up[i] >> j & 1 == 1,
            _ => false,
        }
    }

    pub fn lt(&self, x: Vertex, y: Vertex) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: Vertex, y: Vertex) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `y` covers `x`: `x < y` with nothing strictly between.
    pub fn covers(&self, x: Vertex, y: Vertex) -> bool {
        let (Some(i), Some(j)) = (self.index(x), self.index(y)) else { return false };
        i != j && self.up[i] >> j & 1 == 1 && bits(self.up[i] & !(1 << i) & !(1 << j)).all(|m| self.up[m] >> j & 1 == 0)
    }

    /// Pairs `(x, y)` where `y` covers `x`.
    pub fn cover_pairs(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for &x in &self.elements {
            for &y in &self.elements {
                if self.covers(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Elements `>= x`.
    pub fn up_set(&self, x: Vertex) -> VertexSet {
        self.index(x).map_or_else(VertexSet::new, |i| bits(self.up[i]).map(|j| self.elements[j]).collect())
    }

    /// Elements `<= x`.
    pub fn down_set(&self, x: Vertex) -> VertexSet {
        self.elements.iter().copied().filter(|&y| self.leq(y, x)).collect()
    }

    pub fn subposet(&self, keep: &VertexSet) -> Result<Poset> {
        if let Some(&x) = keep.iter().find(|x| self.index(**x).is_none()) {
            return Err(Error::UnknownVertex(x));
        }
        Poset::from_leq(keep.iter().copied(), |x, y| self.leq(x, y))
    }

    pub fn is_chain(&self) -> bool {
        self.elements.iter().all(|&x| self.elements.iter().all(|&y| self.comparable(x, y)))
    }

    /// Whether `order` lists every element once and respects `<=`.
    pub fn is_linear_extension(&self, order: &[Vertex]) -> bool {
        let pos: BTreeMap<Vertex, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        pos.len() == order.len()
            && order.len() == self.len()
            && self.elements.iter().all(|x| pos.contains_key(x))
            && self.cover_pairs().iter().all(|(x, y)| pos[x] < pos[y])
    }

    /// The linear extension that always takes the smallest available element.
    pub fn linear_extension(&self) -> Vec<Vertex> {
        extension_of(&self.up, &self.elements)
    }
}

/// Topological order of the relation given by `up`, smallest index first.
pub(crate) fn extension_of(up: &[u64], elements: &[Vertex]) -> Vec<Vertex> {
    let n = up.len();
    let mut placed = 0u64;
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        // minimal: no unplaced strict predecessor
        let i = (0..n)
            .find(|&i| placed >> i & 1 == 0 && (0..n).all(|j| j == i || placed >> j & 1 == 1 || up[j] >> i & 1 == 0))
            .expect("acyclic relation has a minimal element");
        placed |= 1 << i;
        out.push(elements[i]);
    }
    out
}

/// The undirected Hasse diagram.
pub fn cover_graph(p: &Poset) -> Graph {
    let mut g = Graph::new();
    for &x in p.elements() {
        g.add_vertex(x);
    }
    for (x, y) in p.cover_pairs() {
        g.add_edge(x, y).expect("distinct elements");
    }
    g
}

#[cfg(test)]
mod tests;

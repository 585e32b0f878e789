//! Blocks, k-connectivity, Menger paths and the contractible-edge lemmas for
//! 3-connected graphs.

mod blocks;
mod flow;
mod halin;

pub use blocks::{block_tree, cutvertices, BlockKind, BlockTree};
pub use flow::{internally_disjoint_paths, menger, verify_menger, MengerOutcome};
pub use halin::{
    contractible_edge_on_fan_path, critical_contraction_separation, halin_deg3_endpoint, halin_edge_at_degree3,
    HalinOutcome,
};

use crate::graph::{Graph, VertexSet};

/// At least `k + 1` vertices and no nontrivial separation of order below `k`.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.vertex_count();
    if n < k + 1 {
        return false;
    }
    match k {
        0 => true,
        1 => g.is_connected(),
        2 => g.is_connected() && cutvertices(g).is_empty(),
        3 => g.vertices().all(|v| is_k_connected(&g.delete_vertex(v).expect("vertex exists"), 2)),
        _ => {
            let vs: Vec<_> = g.vertices().collect();
            g.is_connected()
                && vs.iter().enumerate().all(|(i, &u)| {
                    vs[i + 1..].iter().all(|&v| {
                        g.has_edge(u, v)
                            || internally_disjoint_paths(g, u, v, k).expect("vertices exist").len() >= k
                    })
                })
        }
    }
}

/// Whether deleting `x` leaves a disconnected graph with something left on
/// two sides.
pub(crate) fn separates(g: &Graph, x: &VertexSet) -> bool {
    let h = g.delete_vertices(x).expect("vertices exist");
    h.vertex_count() > 0 && !h.is_connected()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Vertex;

    /// Exhaustive definition: no separating set of fewer than `k` vertices.
    pub(crate) fn k_connected_oracle(g: &Graph, k: usize) -> bool {
        let vs: Vec<Vertex> = g.vertices().collect();
        if vs.len() < k + 1 {
            return false;
        }
        (0u32..1 << vs.len()).filter(|m| (m.count_ones() as usize) < k).all(|m| {
            let x: VertexSet = vs.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &v)| v).collect();
            let h = g.delete_vertices(&x).unwrap();
            h.is_connected()
        })
    }

    fn ladder(k: Vertex) -> Graph {
        let mut es = Vec::new();
        for j in 0..k {
            es.push((2 * j, 2 * j + 1));
            if j + 1 < k {
                es.push((2 * j, 2 * j + 2));
                es.push((2 * j + 1, 2 * j + 3));
            }
        }
        Graph::from_edges(2 * k as usize, es).unwrap()
    }

    #[test]
    fn spec_examples() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(is_k_connected(&k4, 3));
        assert!(!is_k_connected(&c4, 3));
        assert!(is_k_connected(&c4, 2));
        let l4 = ladder(4);
        assert!(is_k_connected(&l4, 2) && k_connected_oracle(&l4, 2));
        assert!(!is_k_connected(&l4, 3) && !k_connected_oracle(&l4, 3));
    }

    #[test]
    fn agrees_with_oracle_on_small_graphs() {
        // every graph on 5 vertices, plus k up to 4
        let pairs: Vec<(Vertex, Vertex)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
        for m in 0u32..1 << pairs.len() {
            let g = Graph::from_edges(5, pairs.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &e)| e))
                .unwrap();
            for k in 1..=4 {
                assert_eq!(is_k_connected(&g, k), k_connected_oracle(&g, k), "{:?} k={k}", g.edges().collect::<Vec<_>>());
            }
        }
    }
}

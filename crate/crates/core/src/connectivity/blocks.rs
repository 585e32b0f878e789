use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::graph::{Edge, Graph, Vertex, VertexSet};

/// Blocks, cutvertices and the block–cutvertex incidence of a graph.
///
/// Blocks are sorted by their sorted vertex lists. `incidence` pairs a
/// cutvertex with the index of a block containing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockTree {
    pub blocks: Vec<VertexSet>,
    pub cutvertices: VertexSet,
    pub incidence: Vec<(Vertex, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BlockKind {
    IsolatedVertex,
    CutEdge,
    TwoConnected,
}

impl BlockTree {
    pub fn kind(&self, i: usize) -> BlockKind {
        match self.blocks[i].len() {
            1 => BlockKind::IsolatedVertex,
            2 => BlockKind::CutEdge,
            _ => BlockKind::TwoConnected,
        }
    }

    /// Index of the block containing edge `uv`.
    pub fn block_of_edge(&self, (u, v): Edge) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&u) && b.contains(&v))
    }

    /// The incidence structure is a forest: nodes minus edges equals the
    /// number of its connected components.
    pub fn incidence_is_forest(&self) -> bool {
        // union-find over cutvertex nodes and block nodes
        let cut_index: BTreeMap<Vertex, usize> = self.cutvertices.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let nodes = self.cutvertices.len() + self.blocks.len();
        let mut parent: Vec<usize> = (0..nodes).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(c, b) in &self.incidence {
            let x = find(&mut parent, cut_index[&c]);
            let y = find(&mut parent, self.cutvertices.len() + b);
            if x == y {
                return false;
            }
            parent[x] = y;
        }
        true
    }
}

/// Hopcroft–Tarjan block decomposition with an explicit edge stack.
pub fn block_tree(g: &Graph) -> BlockTree {
    let ids: Vec<Vertex> = g.vertices().collect();
    let index: BTreeMap<Vertex, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let nbrs: Vec<Vec<usize>> = ids.iter().map(|&v| g.neighbors(v).map(|w| index[&w]).collect()).collect();
    let n = ids.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut blocks: Vec<VertexSet> = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if nbrs[root].is_empty() {
            disc[root] = time;
            time += 1;
            blocks.push(BTreeSet::from([ids[root]]));
            continue;
        }
        // frames: (vertex, parent, next neighbor position)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(&mut (v, parent, ref mut pos)) = stack.last_mut() {
            if *pos < nbrs[v].len() {
                let w = nbrs[v][*pos];
                *pos += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = VertexSet::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.insert(ids[a]);
                            block.insert(ids[b]);
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }

    blocks.sort_by(|a, b| a.iter().cmp(b.iter()));
    let mut count: BTreeMap<Vertex, usize> = BTreeMap::new();
    for b in &blocks {
        for &v in b {
            *count.entry(v).or_default() += 1;
        }
    }
    let cutvertices: VertexSet = count.into_iter().filter(|&(_, c)| c >= 2).map(|(v, _)| v).collect();
    let incidence = blocks
        .iter()
        .enumerate()
        .flat_map(|(i, b)| b.iter().filter(|v| cutvertices.contains(v)).map(move |&v| (v, i)))
        .collect();
    BlockTree { blocks, cutvertices, incidence }
}

/// Vertices whose deletion increases the number of components.
pub fn cutvertices(g: &Graph) -> VertexSet {
    block_tree(g).cutvertices
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Cutvertex by definition: deleting it adds components.
    fn cutvertex_oracle(g: &Graph) -> VertexSet {
        let base = g.components().len();
        g.vertices().filter(|&v| g.delete_vertex(v).unwrap().components().len() > base).collect()
    }

    #[test]
    fn tree_blocks_are_edges() {
        let t = Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let bt = block_tree(&t);
        assert_eq!(bt.blocks.len(), 4);
        assert!(bt.blocks.iter().all(|b| b.len() == 2));
        assert_eq!(bt.cutvertices, cutvertex_oracle(&t));
        assert!(bt.incidence_is_forest());
    }

    #[test]
    fn cycle_is_one_block() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let bt = block_tree(&c4);
        assert_eq!(bt.blocks, vec![c4.vertex_set()]);
        assert!(bt.cutvertices.is_empty());
        assert_eq!(bt.kind(0), BlockKind::TwoConnected);
    }

    #[test]
    fn bowtie() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let bt = block_tree(&g);
        assert_eq!(bt.blocks.len(), 2);
        assert_eq!(bt.cutvertices, BTreeSet::from([2]));
        assert_eq!(bt.cutvertices, cutvertex_oracle(&g));
        assert_eq!(bt.incidence.len(), 2);
    }

    #[test]
    fn isolated_vertices_and_components() {
        let g = Graph::from_parts([0, 1, 2, 5], [(0, 1)]).unwrap();
        let bt = block_tree(&g);
        assert_eq!(bt.blocks.len(), 3);
        assert_eq!(bt.kind(bt.blocks.iter().position(|b| b.contains(&5)).unwrap()), BlockKind::IsolatedVertex);
    }
}

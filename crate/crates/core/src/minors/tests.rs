use super::*;
use crate::graph::{Graph, Path, Vertex, VertexSet};

fn complete(n: Vertex) -> Graph {
    Graph::from_edges(n as usize, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
}

fn cycle(n: Vertex) -> Graph {
    Graph::from_edges(n as usize, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

fn oracle_has_ladder(g: &Graph, k: usize) -> bool {
    find_minor(g, &ladder(k)).unwrap().is_found()
}

#[test]
fn find_examples() {
    let l5 = ladder(5);
    let sm = find_ladder_model(&l5, 3).unwrap().found().unwrap();
    assert!(verify_subdivision_model(&l5, &sm));
    assert!(verify_model(&l5, &sm.to_minor_model(&l5).unwrap()));
    assert_eq!(find_ladder_model(&cycle(4), 3).unwrap(), Decision::Absent);
    assert!(find_ladder_model(&complete(4), 2).unwrap().is_found());
    assert!(oracle_has_ladder(&complete(4), 2));
}

#[test]
fn max_order_examples() {
    let tree = Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
    assert_eq!(max_ladder_order(&tree).unwrap(), 1);
    assert_eq!(max_ladder_order(&Graph::empty(3)).unwrap(), 0);
    assert_eq!(max_ladder_order(&ladder(4)).unwrap(), 4);
    assert!(!oracle_has_ladder(&ladder(4), 5));
    assert_eq!(max_ladder_order(&cycle(6)).unwrap(), 2);
    assert!(!oracle_has_ladder(&cycle(6), 3));
    assert_eq!(max_ladder_order(&complete(6)).unwrap(), 3);
}

#[test]
fn budget_exhaustion_is_undecided() {
    let k8 = complete(8);
    assert!(find_ladder_model_with_budget(&k8, 4, 3).unwrap().is_undecided());
}

#[test]
fn structure_recognition() {
    let sm = subdivision_structure(&ladder(4)).unwrap().unwrap();
    assert_eq!(sm.k(), 4);
    assert_eq!(subdivision_structure(&cycle(7)).unwrap().unwrap().k(), 2);
    assert!(subdivision_structure(&complete(4)).unwrap().is_none());
    // subdivide a rail edge and a rung of L_3
    let g = Graph::from_edges(8, [(0, 6), (6, 2), (2, 4), (1, 3), (3, 5), (0, 1), (2, 7), (7, 3), (4, 5)]).unwrap();
    let sm = subdivision_structure(&g).unwrap().unwrap();
    assert_eq!(sm.k(), 3);
    assert_eq!(sm.vertex_set().len(), 8);
    let m = sm.to_minor_model(&g).unwrap();
    assert!(single_edge_property(&g, &m));
}

#[test]
fn packing_examples() {
    let (two, off) = ladder(2).disjoint_union(&ladder(2));
    let (three, _) = two.disjoint_union(&ladder(2));
    assert!(off > 0);
    let ms = disjoint_ladder_packing(&three, 2, 3).unwrap().found().unwrap();
    assert_eq!(ms.len(), 3);
    let mut used = VertexSet::new();
    for m in &ms {
        assert!(verify_model(&three, m));
        assert!(m.support().iter().all(|&v| used.insert(v)));
    }
    assert_eq!(disjoint_ladder_packing(&cycle(4), 2, 2).unwrap(), Decision::Absent);
    let ms = disjoint_ladder_packing(&ladder(6), 2, 2).unwrap().found().unwrap();
    assert_eq!(ms.len(), 2);
    // columns 1-2, 3-4 and 5-6
    assert_eq!(disjoint_ladder_packing(&ladder(6), 2, 3).unwrap().found().unwrap().len(), 3);
    let best = max_disjoint_ladders(&ladder(6), 2, 5, DEFAULT_NODE_BUDGET).unwrap().found().unwrap();
    assert_eq!(best.len(), 3);
    let best = max_disjoint_ladders(&ladder(5), 2, 5, DEFAULT_NODE_BUDGET).unwrap().found().unwrap();
    assert_eq!(best.len(), 2);
}

#[test]
fn rooted_examples() {
    let l4 = ladder(4);
    let phi = MinorModel::identity(&l4);
    // column 2 top, column 3 bottom
    let low = rooted_from_subdivision(&l4, &phi, ladder_vertex(1, 2), ladder_vertex(2, 3), Side::Low).unwrap();
    assert_eq!(low.k(), 2);
    assert!(verify_rooted(&l4, &low));
    let high = rooted_from_subdivision(&l4, &phi, ladder_vertex(1, 4), ladder_vertex(2, 4), Side::High).unwrap();
    assert_eq!(high.k(), 1);
    assert!(rooted_from_subdivision(&l4, &phi, 0, 0, Side::Low).is_err());
    // swapped rows still root correctly
    let swapped = rooted_from_subdivision(&l4, &phi, ladder_vertex(2, 3), ladder_vertex(1, 3), Side::Low).unwrap();
    assert!(verify_rooted(&l4, &swapped));
}

#[test]
fn half_ladder_sizes() {
    let c4 = ladder(2);
    let (_, m) = rooted_half_ladder(&c4, &VertexSet::from([0, 1, 2])).unwrap();
    assert_eq!(m.k(), 2);
    let l5 = ladder(5);
    let z = VertexSet::from([ladder_vertex(1, 1), ladder_vertex(1, 3), ladder_vertex(2, 5)]);
    let (_, m) = rooted_half_ladder(&l5, &z).unwrap();
    assert_eq!(m.k(), 3);
    assert!(verify_rooted(&l5, &m));
    let l4 = ladder(4);
    let z = VertexSet::from([ladder_vertex(1, 1), ladder_vertex(2, 1), ladder_vertex(1, 2)]);
    let (_, m) = rooted_half_ladder(&l4, &z).unwrap();
    assert_eq!(m.k(), 3);
}

/// Two copies of `L_k` side by side (second offset by `2k`) with their
/// last columns joined by two edges.
fn joined_copies(k: usize) -> (Graph, Graph, Graph) {
    let a = ladder(k);
    let (mut g, off) = a.disjoint_union(&a);
    let kk = k as Vertex;
    g.add_edge(ladder_vertex(1, kk), off + ladder_vertex(1, kk)).unwrap();
    g.add_edge(ladder_vertex(2, kk), off + ladder_vertex(2, kk)).unwrap();
    let b = g.induced_subgraph(&(off..off + 2 * kk).collect()).unwrap();
    (g, a, b)
}

#[test]
fn glue_two_ladders() {
    let (g, a, b) = joined_copies(2);
    let off = 4;
    let root = |h: &Graph, shift: Vertex| {
        let z1 = shift + ladder_vertex(1, 2);
        let z2 = shift + ladder_vertex(2, 2);
        let model = MinorModel::with_witnesses(
            h,
            ladder(2),
            (0..4).map(|x| (x, VertexSet::from([x + shift]))).collect(),
        )
        .unwrap();
        RootedLadderModel { model, roots: (z1, z2) }
    };
    let m1 = root(&a, 0);
    let m2 = root(&b, off);
    let p1 = Path(vec![m1.roots.0, m2.roots.0]);
    let p2 = Path(vec![m1.roots.1, m2.roots.1]);
    let glued = glue_rooted_ladders(&g, &m1, &m2, &p1, &p2).unwrap();
    assert_eq!(ladder_columns(&glued), 4);
    let l3 = trim_ladder_model(&g, &glued, 3).unwrap();
    assert!(verify_model(&g, &l3));
    // a path through the other model is rejected
    let bad = Path(vec![m1.roots.0, m2.roots.0, off + ladder_vertex(1, 1)]);
    assert!(glue_rooted_ladders(&g, &m1, &m2, &bad, &p2).is_err());
}

/// `copies` disjoint `L_k` with three designated vertices each, hung on
/// `m` stars so that copy `i` meets star `c` at one vertex.
fn forest_gadget(k: usize, copies: usize, m: usize, pick: impl Fn(usize) -> [usize; 3]) -> (Graph, Vec<Graph>, Graph) {
    let l = ladder(k);
    let mut g = Graph::new();
    let mut subs = Vec::new();
    let mut attach: Vec<Vec<Vertex>> = vec![Vec::new(); m];
    let mut next: Vertex = 0;
    for i in 0..copies {
        let base = next;
        for v in l.vertices() {
            g.add_vertex(base + v);
        }
        for (u, v) in l.edges() {
            g.add_edge(base + u, base + v).unwrap();
        }
        subs.push(g.induced_subgraph(&l.vertices().map(|v| base + v).collect()).unwrap());
        let corners = [ladder_vertex(1, 1), ladder_vertex(2, k as u32), ladder_vertex(1, (k as u32 + 1) / 2 + 1)];
        for (c, corner) in pick(i).into_iter().zip(corners) {
            attach[c].push(base + corner);
        }
        next += 2 * k as Vertex;
    }
    let mut f = Graph::new();
    for group in attach {
        let hub = next;
        next += 1;
        g.add_vertex(hub);
        f.add_vertex(hub);
        for v in group {
            g.add_edge(hub, v).unwrap();
            f.add_vertex(v);
            f.add_edge(hub, v).unwrap();
        }
    }
    (g, subs, f)
}

#[test]
fn forest_building() {
    // m = 3 components, 10 copies of L_2
    let (g, subs, f) = forest_gadget(2, 10, 3, |_| [0, 1, 2]);
    let m = build_ladder_from_forest(&g, &subs, &f).unwrap().unwrap();
    assert_eq!(ladder_columns(&m), 3);
    assert!(verify_model(&g, &m));
    // m = 1 cannot meet three components
    let (g1, subs1, f1) = forest_gadget(2, 2, 1, |_| [0, 0, 0]);
    assert!(build_ladder_from_forest(&g1, &subs1, &f1).is_err());
    // L_3 copies
    let (g3, subs3, f3) = forest_gadget(3, 5, 3, |i| if i % 2 == 0 { [0, 1, 2] } else { [2, 1, 0] });
    let m3 = build_ladder_from_forest(&g3, &subs3, &f3).unwrap().unwrap();
    assert_eq!(ladder_columns(&m3), 4);
    assert!(verify_model(&g3, &m3));
    assert!(find_ladder_model(&g3, 4).unwrap().is_found());
}

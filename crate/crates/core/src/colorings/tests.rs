use std::collections::BTreeMap;

use super::*;
use crate::error::Error;
use crate::graph::{Graph, Path, Vertex, VertexSet};
use crate::minors::{ladder, ladder_vertex, LadderSubdivisionModel};

fn cycle(n: Vertex) -> Graph {
    Graph::from_edges(n as usize, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

fn path(n: Vertex) -> Graph {
    Graph::from_edges(n as usize, (1..n).map(|i| (i - 1, i))).unwrap()
}

fn complete(n: Vertex) -> Graph {
    Graph::from_edges(n as usize, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
}

fn star(leaves: Vertex) -> Graph {
    Graph::from_edges(leaves as usize + 1, (1..=leaves).map(|i| (0, i))).unwrap()
}

fn col(colors: &[u32], kind: ColoringKind) -> Coloring {
    Coloring::new(colors.iter().enumerate().map(|(v, &c)| (v as Vertex, c)).collect(), kind)
}

fn set(vs: &[Vertex]) -> VertexSet {
    vs.iter().copied().collect()
}

#[test]
fn centered_checks() {
    let k2 = complete(2);
    assert_eq!(is_centered(&k2, &col(&[1, 1], ColoringKind::Centered)).unwrap(), ColoringCheck::Violated(set(&[0, 1])));
    assert!(is_centered(&k2, &col(&[1, 2], ColoringKind::Centered)).unwrap().is_valid());
    let p4 = path(4);
    assert_eq!(is_centered(&p4, &col(&[1, 2, 1, 2], ColoringKind::Centered)).unwrap(), ColoringCheck::Violated(set(&[0, 1, 2, 3])));
    assert!(is_centered(&p4, &col(&[2, 1, 3, 1], ColoringKind::Centered)).unwrap().is_valid());
    assert!(is_centered(&complete(5), &col(&[5, 4, 3, 2, 1], ColoringKind::Centered)).unwrap().is_valid());
    assert!(matches!(is_centered(&p4, &col(&[1, 2, 1], ColoringKind::Centered)), Err(Error::Input(_))));
}

#[test]
fn treedepth_of_paths_and_cliques() {
    assert_eq!(treedepth(&Graph::empty(1)).unwrap().0, 1);
    assert_eq!(treedepth(&path(4)).unwrap().0, 3);
    for k in 1..=4u32 {
        let (t, c, f) = treedepth(&path((1 << k) - 1)).unwrap();
        assert_eq!(t, k as usize);
        assert_eq!(c.color_count, t);
        assert_eq!(f.height, t);
        assert_eq!(treedepth(&path(1 << k)).unwrap().0, k as usize + 1);
    }
    assert_eq!(treedepth(&complete(5)).unwrap().0, 5);
    assert_eq!(treedepth(&star(6)).unwrap().0, 2);
    assert_eq!(treedepth(&cycle(7)).unwrap().0, 4);
    assert_eq!(treedepth(&Graph::empty(0)).unwrap().0, 0);
}

#[test]
fn constraint_families() {
    let tree = star(3);
    let f = constraint_family(&tree, ColoringKind::TwoConnectedCentered).unwrap();
    assert!(f.sets.iter().all(|s| s.len() <= 2));
    assert_eq!(f.sets.len(), 4 + 3);
    let f = constraint_family(&cycle(4), ColoringKind::TwoConnectedCentered).unwrap();
    assert_eq!(f.sets.len(), 4 + 4 + 1);
    assert_eq!(f.sets.last().unwrap(), &set(&[0, 1, 2, 3]));
    let f = constraint_family(&ladder(3), ColoringKind::CycleCentered).unwrap();
    let cycles: Vec<_> = f.sets.iter().filter(|s| s.len() >= 3).collect();
    assert_eq!(cycles.len(), 3);
    assert_eq!(f.sets.iter().filter(|s| s.len() == 2).count(), 7);
    let big = Graph::empty(17);
    assert!(matches!(constraint_family(&big, ColoringKind::TwoConnectedCentered), Err(Error::Resource(_))));
}

#[test]
fn td2_checks_and_values() {
    let tree = star(4);
    assert!(is_td2_coloring(&tree, &col(&[1, 2, 2, 2, 2], ColoringKind::TwoConnectedCentered)).unwrap().is_valid());
    let c4 = cycle(4);
    assert_eq!(
        is_td2_coloring(&c4, &col(&[1, 2, 1, 2], ColoringKind::TwoConnectedCentered)).unwrap(),
        ColoringCheck::Violated(set(&[0, 1, 2, 3]))
    );
    assert!(is_td2_coloring(&c4, &col(&[1, 2, 1, 3], ColoringKind::TwoConnectedCentered)).unwrap().is_valid());
    assert_eq!(td2(&Graph::empty(3)).unwrap().0, 1);
    assert_eq!(td2(&c4).unwrap().0, 3);
    assert_eq!(td2(&complete(4)).unwrap().0, 4);
    assert_eq!(td2(&tree).unwrap().0, 2);
}

#[test]
fn cycle_centered_checks_and_values() {
    let tree = star(3);
    assert!(is_cycle_centered(&tree, &col(&[1, 2, 2, 2], ColoringKind::CycleCentered)).unwrap().is_valid());
    let c4 = cycle(4);
    assert_eq!(
        is_cycle_centered(&c4, &col(&[1, 2, 1, 2], ColoringKind::CycleCentered)).unwrap(),
        ColoringCheck::Violated(set(&[0, 1, 2, 3]))
    );
    assert!(is_cycle_centered(&c4, &col(&[1, 2, 1, 3], ColoringKind::CycleCentered)).unwrap().is_valid());
    assert_eq!(chi_cc(&tree).unwrap().0, 2);
    assert_eq!(chi_cc(&c4).unwrap().0, 3);
    let l4 = ladder(4);
    let v = chi_cc(&l4).unwrap().0;
    assert!(v > 2 && v <= td2(&l4).unwrap().0);
}

#[test]
fn two_colorings_of_long_ladder_are_refuted() {
    let g = ladder(16);
    assert!(find_coloring(&g, ColoringKind::CycleCentered, 2, &Budgets::default()).unwrap().is_none());
}

#[test]
fn coloring_json_round_trip() {
    let c = col(&[1, 2, 1, 3], ColoringKind::CycleCentered);
    let s = serde_json::to_string(&c).unwrap();
    assert_eq!(s, r#"{"0":1,"1":2,"2":1,"3":3}"#);
    assert_eq!(Coloring::from_json(&s, ColoringKind::CycleCentered).unwrap(), c);
    assert!(matches!(Coloring::from_json("{\"a\":1}", ColoringKind::Centered), Err(Error::Input(_))));
    assert!(matches!(Coloring::from_json("{", ColoringKind::Centered), Err(Error::Parse { .. })));
}

fn rails_and_rungs(k: u32) -> LadderSubdivisionModel {
    let rail = |r| Path((1..=k).map(|j| ladder_vertex(r, j)).collect());
    LadderSubdivisionModel { p1: rail(1), p2: rail(2), rungs: (1..=k).map(|j| Path(vec![ladder_vertex(1, j), ladder_vertex(2, j)])).collect() }
}

#[test]
fn pigeonhole_selection() {
    let sm = rails_and_rungs(4);
    let mono = Coloring::new((0..8).map(|v| (v, 1)).collect(), ColoringKind::CycleCentered);
    assert_eq!(pigeonhole_rung_selection(&sm, &mono, 1).unwrap(), vec![0, 1]);
    assert!(matches!(pigeonhole_rung_selection(&sm, &mono, 0), Err(Error::Input(_))));
    let sm = rails_and_rungs(16);
    // rung j gets {1}, {2} or {1,2} cyclically
    let mut a = BTreeMap::new();
    for j in 1..=16u32 {
        let (t, b) = [(1, 1), (2, 2), (1, 2)][(j % 3) as usize];
        a.insert(ladder_vertex(1, j), t);
        a.insert(ladder_vertex(2, j), b);
    }
    let c = Coloring::new(a, ColoringKind::CycleCentered);
    let idx = pigeonhole_rung_selection(&sm, &c, 2).unwrap();
    assert_eq!(idx.len(), 4);
    assert!(idx.windows(2).all(|w| w[0] < w[1]));
    let first = c.colors_on(sm.rungs[idx[0]].vertices());
    assert!(idx.iter().all(|&i| c.colors_on(sm.rungs[i].vertices()) == first));
    let three = Coloring::new((0..32).map(|v| (v, v % 3 + 1)).collect(), ColoringKind::CycleCentered);
    assert!(matches!(pigeonhole_rung_selection(&sm, &three, 2), Err(Error::Input(_))));
}

/// L_4 with every rail edge subdivided once; rungs are the original rungs.
fn subdivided_l4() -> (Graph, LadderSubdivisionModel, Vec<Vertex>) {
    // a_j = j - 1, b_j = 3 + j, top subdivisions 8..=10, bottom 11..=13
    let mut es = Vec::new();
    let (mut top, mut bottom) = (vec![0], vec![4]);
    for j in 0..3u32 {
        es.extend([(j, 8 + j), (8 + j, j + 1), (4 + j, 11 + j), (11 + j, 5 + j)]);
        top.extend([8 + j, j + 1]);
        bottom.extend([11 + j, 5 + j]);
    }
    es.extend((0..4u32).map(|j| (j, 4 + j)));
    let h = Graph::from_edges(14, es).unwrap();
    let sm = LadderSubdivisionModel { p1: Path(top), p2: Path(bottom), rungs: (0..4).map(|j| Path(vec![j, 4 + j])).collect() };
    (h, sm, (8..14).collect())
}

#[test]
fn uniform_model_chain() {
    let (h, sm, extra) = subdivided_l4();
    let mut found = None;
    'search: for code in 0..3u32.pow(6) {
        let mut a: BTreeMap<Vertex, u32> = (0..4).map(|v| (v, 1)).chain((4..8).map(|v| (v, 2))).collect();
        let mut x = code;
        for &v in &extra {
            a.insert(v, 3 + x % 3);
            x /= 3;
        }
        let c = Coloring::new(a, ColoringKind::CycleCentered);
        if is_cycle_centered(&h, &c).unwrap().is_valid() {
            found = Some(c);
            break 'search;
        }
    }
    let c = found.expect("an equal-rung cycle centered coloring exists");
    let chain = uniform_model_lower_bound(&h, &sm, &c).unwrap();
    assert_eq!(chain.len(), 3);
    assert_eq!(c.colors_on(&chain).len(), 3);

    // two rungs: the base case
    let g = ladder(2);
    let two = rails_and_rungs(2);
    let c2 = col(&[1, 2, 2, 3], ColoringKind::CycleCentered);
    assert!(matches!(uniform_model_lower_bound(&g, &two, &c2), Err(Error::Input(_))));
    // subdivide the rails so that equal rung sets become possible
    let h2 = Graph::from_edges(6, [(0, 1), (2, 3), (0, 4), (4, 2), (1, 5), (5, 3)]).unwrap();
    let sm2 = LadderSubdivisionModel { p1: Path(vec![0, 4, 2]), p2: Path(vec![1, 5, 3]), rungs: vec![Path(vec![0, 1]), Path(vec![2, 3])] };
    let c2 = col(&[1, 2, 1, 2, 3, 4], ColoringKind::CycleCentered);
    let chain = uniform_model_lower_bound(&h2, &sm2, &c2).unwrap();
    assert_eq!(chain, vec![0, 1]);

    let uneven = col(&[1, 2, 3, 4], ColoringKind::CycleCentered);
    assert!(matches!(uniform_model_lower_bound(&g, &two, &uneven), Err(Error::Input(_))));
}

#[test]
fn block_multiplication() {
    let g = cycle(8);
    let (m, c) = td2(&g).unwrap();
    assert_eq!(m, 3);
    let z = many_blocks_deletion(&g, &c, 2).unwrap();
    assert_eq!(z.len(), 1);
    assert!(crate::connectivity::block_tree(&g.delete_vertices(&z).unwrap()).blocks.len() >= 2);
    // already many blocks
    assert!(many_blocks_deletion(&path(9), &td2(&path(9)).unwrap().1, 3).unwrap().is_empty());
    let c5 = cycle(5);
    assert!(matches!(many_blocks_deletion(&c5, &td2(&c5).unwrap().1, 2), Err(Error::Input(_))));
    assert!(matches!(many_blocks_deletion(&c5, &col(&[1, 2, 1, 2, 1], ColoringKind::TwoConnectedCentered), 1), Err(Error::Input(_))));
}

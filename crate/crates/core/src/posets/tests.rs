use super::*;
use crate::error::Error;
use crate::colorings::td2;

fn brute_dimension(p: &Poset) -> usize {
    // all linear extensions, then the smallest family that realizes
    fn extensions(p: &Poset, prefix: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if prefix.len() == p.len() {
            out.push(prefix.clone());
            return;
        }
        for &x in p.elements() {
            if !prefix.contains(&x) && p.elements().iter().all(|&y| y == x || !p.lt(y, x) || prefix.contains(&y)) {
                prefix.push(x);
                extensions(p, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut all = Vec::new();
    extensions(p, &mut Vec::new(), &mut all);
    fn choose(all: &[Vec<Vertex>], from: usize, left: usize, acc: &mut Vec<Vec<Vertex>>, p: &Poset) -> bool {
        if left == 0 {
            return is_realizer(p, &Realizer { orders: acc.clone() }).unwrap().is_valid();
        }
        for i in from..all.len() {
            acc.push(all[i].clone());
            if choose(all, i + 1, left - 1, acc, p) {
                return true;
            }
            acc.pop();
        }
        false
    }
    (1..=all.len()).find(|&d| choose(&all, 0, d, &mut Vec::new(), p)).unwrap()
}

#[test]
fn cover_graphs() {
    let g = cover_graph(&Poset::chain(3));
    assert_eq!(g.edge_count(), 2);
    assert!(g.has_edge(0, 1) && g.has_edge(1, 2));
    assert_eq!(cover_graph(&Poset::antichain(4)).edge_count(), 0);
    let s3 = cover_graph(&Poset::standard_example(3));
    assert_eq!(s3.edge_count(), 6);
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(s3.has_edge(i, 3 + j), i != j);
        }
    }
}

#[test]
fn construction_rejects_non_orders() {
    assert!(matches!(Poset::from_relation(0..2, &[(0, 1), (1, 0)]), Err(Error::Input(_))));
    assert!(matches!(Poset::from_leq(0..3, |x, y| x == y || (x, y) == (0, 1) || (x, y) == (1, 2)), Err(Error::Input(_))));
    assert!(matches!(Poset::from_leq(0..2, |x, y| x < y), Err(Error::Input(_))));
    let p = Poset::from_json(r#"{"elements":[1,2,3],"relation":[[1,2],[2,3],[1,3]]}"#).unwrap();
    assert!(p.leq(1, 3) && p.is_chain());
    assert_eq!(p.to_json(), r#"{"elements":[1,2,3],"relation":[[1,2],[2,3]]}"#);
}

#[test]
fn realizer_checks() {
    let chain = Poset::chain(3);
    assert!(is_realizer(&chain, &Realizer { orders: vec![vec![0, 1, 2]] }).unwrap().is_valid());
    let anti = Poset::antichain(2);
    assert!(is_realizer(&anti, &Realizer { orders: vec![vec![0, 1], vec![1, 0]] }).unwrap().is_valid());
    assert_eq!(
        is_realizer(&anti, &Realizer { orders: vec![vec![0, 1], vec![0, 1]] }).unwrap(),
        RealizerCheck::Violated { pair: (0, 1), fault: RealizerFault::NotReversed }
    );
    assert!(matches!(
        is_realizer(&chain, &Realizer { orders: vec![vec![1, 0, 2]] }).unwrap(),
        RealizerCheck::Violated { fault: RealizerFault::NotAnExtension(0), .. }
    ));
    assert!(matches!(is_realizer(&chain, &Realizer { orders: vec![vec![0, 1]] }), Err(Error::Input(_))));
}

#[test]
fn exact_dimension() {
    assert_eq!(dimension_exact(&Poset::chain(4)).unwrap().0, 1);
    for n in 2..6 {
        assert_eq!(dimension_exact(&Poset::antichain(n)).unwrap().0, 2);
    }
    assert_eq!(dimension_exact(&Poset::standard_example(3)).unwrap().0, 3);
    assert_eq!(dimension_exact(&Poset::standard_example(4)).unwrap().0, 4);
    assert!(matches!(dimension_exact(&Poset::antichain(11)), Err(Error::Resource(_))));
    // against enumeration of extension families
    let p = Poset::from_relation(0..6, &[(0, 2), (1, 2), (1, 3), (3, 4), (2, 5)]).unwrap();
    assert_eq!(dimension_exact(&p).unwrap().0, brute_dimension(&p));
    assert_eq!(brute_dimension(&Poset::standard_example(3)), 3);
}

#[test]
fn apex_merges() {
    // a < z < b
    let p = Poset::chain(3);
    let one = |v: Vec<Vertex>| Realizer { orders: vec![v] };
    let r = apex_merge(&p, 1, &one(vec![0]), &one(vec![2]), &[1, 2], &[0, 1]).unwrap();
    assert_eq!(r.len(), 2);
    assert!(is_realizer(&p, &r).unwrap().is_valid());
    let anti = Poset::antichain(2);
    let r = apex_merge(&anti, 1, &one(vec![0]), &one(vec![0]), &[1], &[1]).unwrap();
    assert_eq!(r.len(), 2);
    assert!(is_realizer(&anti, &r).unwrap().is_valid());
    assert!(matches!(apex_merge(&p, 1, &one(vec![2]), &one(vec![2]), &[1, 2], &[0, 1]), Err(Error::Input(_))));
}

#[test]
fn realizers_within_the_td2_bound() {
    let anti = realizer_via_td2(&Poset::antichain(4)).unwrap();
    assert_eq!((anti.td2, anti.bound, anti.realizer.len()), (1, 2, 2));
    // cover graph a tree
    let tree = Poset::from_relation(0..5, &[(0, 1), (0, 2), (3, 1), (4, 3)]).unwrap();
    let r = realizer_via_td2(&tree).unwrap();
    assert_eq!(r.td2, 2);
    assert!(r.realizer.len() <= 6);
    // cover graph C4
    let diamond = Poset::from_relation(0..4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
    let r = realizer_via_td2(&diamond).unwrap();
    assert_eq!(r.td2, 3);
    assert!(r.realizer.len() <= 12);
    assert!(is_realizer(&diamond, &r.realizer).unwrap().is_valid());
    let s3 = Poset::standard_example(3);
    let r = realizer_via_td2(&s3).unwrap();
    assert!(r.realizer.len() <= r.bound && is_realizer(&s3, &r.realizer).unwrap().is_valid());
    assert_eq!(td2(&cover_graph(&s3)).unwrap().0, r.td2);
}

#[test]
fn kelly_posets() {
    for k in 2..=5usize {
        let p = kelly_poset(k);
        assert_eq!(p.len(), 4 * k - 2);
        for i in 0..k as Vertex {
            for j in 0..k as Vertex {
                assert_eq!(p.lt(i, k as Vertex + j), i != j);
            }
        }
        assert_eq!(cover_graph(&p).edge_count(), 6 * k - 8);
    }
    assert_eq!(dimension_exact(&kelly_poset(2)).unwrap().0, brute_dimension(&kelly_poset(2)));
    let dims: Vec<usize> = (2..=4).map(|k| dimension_exact_with(&kelly_poset(k), 14).unwrap().0).collect();
    assert!(dims.windows(2).all(|w| w[0] <= w[1]), "{dims:?}");
    assert_eq!(dims, vec![2, 3, 4]);
}

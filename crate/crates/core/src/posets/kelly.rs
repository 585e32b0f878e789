use crate::graph::Vertex;

use super::Poset;

/// Kelly's poset of order `k`: minimal elements `a_1..a_k`, maximal elements
/// `b_1..b_k` with `a_i < b_j` exactly when `i != j`, realized through two
/// chains `c_1 < .. < c_{k-1}` and `d_{k-1} < .. < d_1`. Its cover graph is
/// planar and it contains the standard example of order `k`.
///
/// Ids: `a_i = i - 1`, `b_i = k + i - 1`, `c_j = 2k + j - 1`, `d_j = 3k + j - 2`.
/// Orders below 2 give the empty poset.
pub fn kelly_poset(k: usize) -> Poset {
    if k < 2 {
        return Poset::antichain(0);
    }
    let k = k as Vertex;
    let a = |i: Vertex| i - 1;
    let b = |i: Vertex| k + i - 1;
    let c = |j: Vertex| 2 * k + j - 1;
    let d = |j: Vertex| 3 * k + j - 2;
    let mut rel = Vec::new();
    for j in 1..k - 1 {
        rel.push((c(j), c(j + 1)));
        rel.push((d(j + 1), d(j)));
    }
    for i in 1..k {
        rel.push((a(i), c(i)));
        rel.push((d(i), b(i)));
    }
    for i in 2..=k {
        rel.push((c(i - 1), b(i)));
        rel.push((a(i), d(i - 1)));
    }
    Poset::from_relation(0..4 * k - 2, &rel).expect("Kelly's relation is acyclic")
}

//! Brute-force oracles, written independently of the library's solvers.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use ladderkit::minors::{find_minor, Decision};
use ladderkit::posets::{Poset, Realizer};
use ladderkit::{Graph, Vertex};

pub fn verts(g: &Graph) -> Vec<Vertex> {
    g.vertices().collect()
}

/// Connectivity of the subgraph induced by `mask` over `vs`.
pub fn connected(g: &Graph, vs: &[Vertex], mask: u32) -> bool {
    let Some(start) = (0..vs.len()).find(|i| mask >> i & 1 == 1) else { return false };
    let mut seen = 1u32 << start;
    let mut stack = vec![start];
    while let Some(i) = stack.pop() {
        for j in 0..vs.len() {
            if mask >> j & 1 == 1 && seen >> j & 1 == 0 && g.has_edge(vs[i], vs[j]) {
                seen |= 1 << j;
                stack.push(j);
            }
        }
    }
    seen == mask
}

/// Vertex sets of connected subgraphs without a cutvertex: single vertices,
/// edges, and sets inducing a 2-connected graph.
pub fn is_block_like(g: &Graph, vs: &[Vertex], mask: u32) -> bool {
    match mask.count_ones() {
        0 => false,
        1 => true,
        2 => connected(g, vs, mask),
        _ => connected(g, vs, mask) && (0..vs.len()).filter(|i| mask >> i & 1 == 1).all(|i| connected(g, vs, mask & !(1 << i))),
    }
}

/// Whether the subgraph induced by `mask` has a Hamiltonian cycle (3+ vertices).
pub fn has_spanning_cycle(g: &Graph, vs: &[Vertex], mask: u32) -> bool {
    let members: Vec<usize> = (0..vs.len()).filter(|i| mask >> i & 1 == 1).collect();
    if members.len() < 3 {
        return false;
    }
    fn extend(g: &Graph, vs: &[Vertex], members: &[usize], path: &mut Vec<usize>, used: u32) -> bool {
        let last = *path.last().unwrap();
        if path.len() == members.len() {
            return g.has_edge(vs[last], vs[path[0]]);
        }
        for &m in members {
            if used >> m & 1 == 0 && g.has_edge(vs[last], vs[m]) {
                path.push(m);
                if extend(g, vs, members, path, used | 1 << m) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    extend(g, vs, &members, &mut vec![members[0]], 1 << members[0])
}

/// Restricted growth strings: every coloring up to renaming of colors.
pub fn colorings(n: usize, max_colors: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(a: &mut Vec<usize>, n: usize, max_colors: usize, used: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if a.len() == n {
            return f(a);
        }
        for c in 0..(used + 1).min(max_colors) {
            a.push(c);
            if rec(a, n, max_colors, used.max(c + 1), f) {
                return true;
            }
            a.pop();
        }
        false
    }
    rec(&mut Vec::new(), n, max_colors, 0, &mut f)
}

fn has_unique(colors: &[usize], mask: u32) -> bool {
    let mut count: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, &c) in colors.iter().enumerate() {
        if mask >> i & 1 == 1 {
            *count.entry(c).or_default() += 1;
        }
    }
    count.values().any(|&k| k == 1)
}

fn min_colors(g: &Graph, needs: impl Fn(&[Vertex], u32) -> bool) -> usize {
    let vs = verts(g);
    let n = vs.len();
    if n == 0 {
        return 0;
    }
    let sets: Vec<u32> = (1u32..1 << n).filter(|&m| needs(&vs, m)).collect();
    (1..=n).find(|&k| colorings(n, k, |col| sets.iter().all(|&m| has_unique(col, m)))).unwrap()
}

/// Minimum colors so every block-like vertex set has a unique color.
pub fn brute_td2(g: &Graph) -> usize {
    min_colors(g, |vs, m| is_block_like(g, vs, m))
}

/// Minimum colors so every edge and cycle has a unique color.
pub fn brute_chi_cc(g: &Graph) -> usize {
    min_colors(g, |vs, m| (m.count_ones() == 2 && connected(g, vs, m)) || has_spanning_cycle(g, vs, m))
}

/// `td` of a connected graph is `1 + min td(G - v)`; components take the max.
pub fn brute_treedepth(g: &Graph) -> usize {
    fn rec(g: &Graph, memo: &mut BTreeMap<BTreeSet<Vertex>, usize>) -> usize {
        let key: BTreeSet<Vertex> = g.vertices().collect();
        if key.is_empty() {
            return 0;
        }
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let comps = g.components();
        let out = if comps.len() > 1 {
            comps.iter().map(|c| rec(&g.induced_subgraph(c).unwrap(), memo)).max().unwrap()
        } else {
            1 + g.vertices().map(|v| rec(&g.delete_vertex(v).unwrap(), memo)).min().unwrap()
        };
        memo.insert(key, out);
        out
    }
    rec(g, &mut BTreeMap::new())
}

/// Whether `a` and `b` are comparable through the order predicate.
fn all_extensions(p: &Poset) -> Vec<Vec<Vertex>> {
    fn rec(p: &Poset, prefix: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if prefix.len() == p.len() {
            out.push(prefix.clone());
            return;
        }
        for &x in p.elements() {
            if !prefix.contains(&x) && p.elements().iter().all(|&y| y == x || !p.leq(y, x) || prefix.contains(&y)) {
                prefix.push(x);
                rec(p, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(p, &mut Vec::new(), &mut out);
    out
}

/// Realizer check straight from the definition, over all pairs.
pub fn realizes(p: &Poset, r: &Realizer) -> bool {
    let els = p.elements();
    let pos: Vec<BTreeMap<Vertex, usize>> = r.orders.iter().map(|o| o.iter().enumerate().map(|(i, &v)| (v, i)).collect()).collect();
    if r.orders.iter().zip(&pos).any(|(o, m)| o.len() != els.len() || m.len() != els.len() || els.iter().any(|x| !m.contains_key(x))) {
        return false;
    }
    els.iter().all(|&x| els.iter().all(|&y| p.leq(x, y) == pos.iter().all(|m| m[&x] <= m[&y])))
}

/// Smallest family of linear extensions that realizes `p`.
pub fn brute_dimension(p: &Poset) -> usize {
    if p.len() <= 1 {
        return p.len();
    }
    let all = all_extensions(p);
    fn choose(all: &[Vec<Vertex>], from: usize, left: usize, acc: &mut Vec<Vec<Vertex>>, p: &Poset) -> bool {
        if left == 0 {
            return realizes(p, &Realizer { orders: acc.clone() });
        }
        (from..all.len()).any(|i| {
            acc.push(all[i].clone());
            let ok = choose(all, i + 1, left - 1, acc, p);
            acc.pop();
            ok
        })
    }
    (1..=all.len()).find(|&d| choose(&all, 0, d, &mut Vec::new(), p)).unwrap()
}

/// Longest strictly monotone subsequence over all index subsets.
pub fn brute_longest_monotone(seq: &[i64]) -> usize {
    let n = seq.len();
    (0u32..1 << n)
        .filter(|m| {
            let xs: Vec<i64> = (0..n).filter(|i| m >> i & 1 == 1).map(|i| seq[i]).collect();
            xs.windows(2).all(|w| w[0] < w[1]) || xs.windows(2).all(|w| w[0] > w[1])
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn permutations(n: usize) -> Vec<Vec<i64>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n as i64);
            out.push(q);
        }
    }
    out
}

/// A minor model checked from scratch: disjoint nonempty connected branch
/// sets in `g`, one per pattern vertex, with an edge of `g` for each pattern edge.
pub fn model_ok(g: &Graph, pattern: &Graph, branch_sets: &BTreeMap<Vertex, BTreeSet<Vertex>>) -> bool {
    let keys: BTreeSet<Vertex> = branch_sets.keys().copied().collect();
    if keys != pattern.vertices().collect::<BTreeSet<_>>() {
        return false;
    }
    let mut seen = BTreeSet::new();
    for s in branch_sets.values() {
        if s.is_empty() || s.iter().any(|v| !g.has_vertex(*v) || !seen.insert(*v)) {
            return false;
        }
        if !g.induced_subgraph(s).unwrap().is_connected() {
            return false;
        }
    }
    pattern.edges().all(|(a, b)| branch_sets[&a].iter().any(|&u| branch_sets[&b].iter().any(|&v| g.has_edge(u, v))))
}

/// `k`-connected from the definition: more than `k` vertices and connected
/// after deleting any `k - 1`.
pub fn brute_k_connected(g: &Graph, k: usize) -> bool {
    let vs = verts(g);
    let n = vs.len();
    if n <= k {
        return false;
    }
    (0u32..1 << n).filter(|m| (m.count_ones() as usize) < k).all(|m| {
        let keep: BTreeSet<Vertex> = (0..n).filter(|i| m >> i & 1 == 0).map(|i| vs[i]).collect();
        g.induced_subgraph(&keep).unwrap().is_connected()
    })
}

/// Planarity by Kuratowski: strip leaves, suppress degree-2 vertices, then
/// look for `K5` and `K3,3` minors.
pub fn planar(g: &Graph) -> bool {
    let mut h = g.clone();
    loop {
        let Some(v) = h.vertices().find(|&v| h.degree(v) <= 2) else { break };
        let nbrs: Vec<Vertex> = h.neighbors(v).collect();
        h = h.delete_vertex(v).unwrap();
        if let [a, b] = nbrs[..] {
            if !h.has_edge(a, b) {
                h.add_edge(a, b).unwrap();
            }
        }
    }
    let k5 = Graph::from_edges(5, (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j)))).unwrap();
    let k33 = Graph::from_edges(6, (0..3).flat_map(|i| (3..6).map(move |j| (i, j)))).unwrap();
    [k5, k33].iter().all(|k| matches!(find_minor(&h, k).unwrap(), Decision::Absent))
}

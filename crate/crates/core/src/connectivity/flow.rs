use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Path, Vertex, VertexSet};

const BIG: i64 = i64::MAX / 4;

/// Either enough disjoint A–B paths or a small separator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MengerOutcome {
    Paths(Vec<Path>),
    Separator(VertexSet),
}

/// Residual network over split vertices: `2i` is the in-node and `2i + 1`
/// the out-node of vertex `i`; the last two nodes are source and sink.
struct Network {
    to: Vec<usize>,
    cap: Vec<i64>,
    flow: Vec<i64>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network { to: Vec::new(), cap: Vec::new(), flow: Vec::new(), out: vec![Vec::new(); nodes] }
    }

    fn arc(&mut self, a: usize, b: usize, cap: i64) {
        self.out[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(cap);
        self.flow.push(0);
        self.out[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
        self.flow.push(0);
    }

    fn residual(&self, e: usize) -> i64 {
        self.cap[e] - self.flow[e]
    }

    /// Edmonds–Karp, stopping once `limit` units flow.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut total = 0;
        while total < limit {
            let mut via = vec![usize::MAX; self.out.len()];
            let mut seen = vec![false; self.out.len()];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                if x == t {
                    break;
                }
                for &e in &self.out[x] {
                    let y = self.to[e];
                    if !seen[y] && self.residual(e) > 0 {
                        seen[y] = true;
                        via[y] = e;
                        queue.push_back(y);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut x = t;
            while x != s {
                let e = via[x];
                self.flow[e] += 1;
                self.flow[e ^ 1] -= 1;
                x = self.to[e ^ 1];
            }
            total += 1;
        }
        total
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &e in &self.out[x] {
                let y = self.to[e];
                if !seen[y] && self.residual(e) > 0 {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// Follows one unit of flow from `s` to `t`, consuming it.
    fn take_walk(&mut self, s: usize, t: usize) -> Vec<usize> {
        let mut walk = vec![s];
        let mut x = s;
        while x != t {
            let e = *self.out[x]
                .iter()
                .find(|&&e| e % 2 == 0 && self.flow[e] > 0)
                .expect("flow conservation");
            self.flow[e] -= 1;
            self.flow[e ^ 1] += 1;
            x = self.to[e];
            walk.push(x);
        }
        walk
    }
}

/// Flow instance on `g` with per-vertex capacities (`0` removes a vertex).
struct VertexFlow {
    ids: Vec<Vertex>,
    net: Network,
    s: usize,
    t: usize,
}

impl VertexFlow {
    fn new(g: &Graph, capacity: impl Fn(Vertex) -> i64, sources: &VertexSet, sinks: &VertexSet) -> Self {
        let ids: Vec<Vertex> = g.vertices().collect();
        let index: BTreeMap<Vertex, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let n = ids.len();
        let (s, t) = (2 * n, 2 * n + 1);
        let mut net = Network::new(2 * n + 2);
        for (i, &v) in ids.iter().enumerate() {
            net.arc(2 * i, 2 * i + 1, capacity(v));
        }
        for (u, v) in g.edges() {
            let (i, j) = (index[&u], index[&v]);
            net.arc(2 * i + 1, 2 * j, BIG);
            net.arc(2 * j + 1, 2 * i, BIG);
        }
        for a in sources {
            net.arc(s, 2 * index[a], BIG);
        }
        for b in sinks {
            net.arc(2 * index[b] + 1, t, BIG);
        }
        VertexFlow { ids, net, s, t }
    }

    fn paths(&mut self, count: usize) -> Vec<Path> {
        (0..count)
            .map(|_| {
                let walk = self.net.take_walk(self.s, self.t);
                Path(walk[1..walk.len() - 1].iter().step_by(2).map(|&x| self.ids[x / 2]).collect())
            })
            .collect()
    }

    /// Vertices whose in-node is reachable in the residual network but whose
    /// out-node is not; a minimum vertex cut because only vertex arcs are finite.
    fn cut(&self) -> VertexSet {
        let seen = self.net.reachable(self.s);
        (0..self.ids.len()).filter(|&i| seen[2 * i] && !seen[2 * i + 1]).map(|i| self.ids[i]).collect()
    }
}

/// At least `t + 1` pairwise disjoint A–B paths, or a separator of size at
/// most `t` meeting every A–B path. Vertices of A ∩ B are trivial paths.
pub fn menger(g: &Graph, a: &VertexSet, b: &VertexSet, t: usize) -> Result<MengerOutcome> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::input("menger needs nonempty vertex sets"));
    }
    for v in a.iter().chain(b) {
        if !g.has_vertex(*v) {
            return Err(Error::UnknownVertex(*v));
        }
    }
    let shared: VertexSet = a.intersection(b).copied().collect();
    let mut paths: Vec<Path> = shared.iter().map(|&v| Path::single(v)).collect();
    let outcome = if paths.len() > t {
        paths.truncate(t + 1);
        MengerOutcome::Paths(paths)
    } else {
        let need = t + 1 - paths.len();
        let a2: VertexSet = a.difference(&shared).copied().collect();
        let b2: VertexSet = b.difference(&shared).copied().collect();
        let cap = |v: Vertex| i64::from(!shared.contains(&v));
        let mut vf = VertexFlow::new(g, cap, &a2, &b2);
        let found = vf.net.max_flow(vf.s, vf.t, need);
        if found == need {
            paths.extend(vf.paths(found).into_iter().map(|p| trim_to_a_b(p, &a2, &b2)));
            MengerOutcome::Paths(paths)
        } else {
            let mut sep = vf.cut();
            sep.extend(&shared);
            MengerOutcome::Separator(sep)
        }
    };
    if !verify_menger(g, a, b, t, &outcome) {
        return Err(Error::internal("menger outcome failed verification"));
    }
    Ok(outcome)
}

/// Shortens a path from A to B so that it meets A and B only at its ends.
fn trim_to_a_b(p: Path, a: &VertexSet, b: &VertexSet) -> Path {
    let vs = p.vertices();
    let first_b = vs.iter().position(|v| b.contains(v)).expect("path ends in B");
    let last_a = vs[..=first_b].iter().rposition(|v| a.contains(v)).expect("path starts in A");
    p.segment(last_a, first_b)
}

pub fn verify_menger(g: &Graph, a: &VertexSet, b: &VertexSet, t: usize, outcome: &MengerOutcome) -> bool {
    match outcome {
        MengerOutcome::Paths(paths) => {
            let mut used = VertexSet::new();
            paths.len() > t
                && paths.iter().all(|p| p.is_a_b_path(g, a, b) && p.vertices().iter().all(|&v| used.insert(v)))
        }
        MengerOutcome::Separator(sep) => {
            sep.len() <= t
                && a.iter().filter(|v| !sep.contains(v)).all(|&x| {
                    let reach = g.reachable_from(x, sep);
                    reach.is_disjoint(b)
                })
        }
    }
}

/// Up to `count` internally disjoint x–y paths, as many as exist.
pub fn internally_disjoint_paths(g: &Graph, x: Vertex, y: Vertex, count: usize) -> Result<Vec<Path>> {
    for v in [x, y] {
        if !g.has_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
    }
    if x == y {
        return Err(Error::input("internally disjoint paths need distinct ends"));
    }
    let mut paths = Vec::new();
    let mut h = g.clone();
    if g.has_edge(x, y) && count > 0 {
        paths.push(Path(vec![x, y]));
        h = h.delete_edge(x, y)?;
    }
    let need = count - paths.len();
    let cap = |v: Vertex| if v == x || v == y { need as i64 } else { 1 };
    let mut vf = VertexFlow::new(&h, cap, &VertexSet::from([x]), &VertexSet::from([y]));
    let found = vf.net.max_flow(vf.s, vf.t, need);
    paths.extend(vf.paths(found));
    Ok(paths)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Graph::from_edges(n, (0..n as Vertex).flat_map(|i| (i + 1..n as Vertex).map(move |j| (i, j)))).unwrap()
    }

    fn ladder3() -> Graph {
        // top row 0,2,4; bottom row 1,3,5
        Graph::from_edges(6, [(0, 2), (2, 4), (1, 3), (3, 5), (0, 1), (2, 3), (4, 5)]).unwrap()
    }

    /// Largest number of pairwise disjoint A–B paths by exhaustive search.
    fn max_disjoint_oracle(g: &Graph, a: &VertexSet, b: &VertexSet) -> usize {
        fn all_paths(g: &Graph, a: &VertexSet, b: &VertexSet) -> Vec<VertexSet> {
            let mut out = Vec::new();
            fn extend(g: &Graph, b: &VertexSet, a: &VertexSet, path: &mut Vec<Vertex>, out: &mut Vec<VertexSet>) {
                let last = *path.last().unwrap();
                if b.contains(&last) {
                    out.push(path.iter().copied().collect());
                    return;
                }
                for w in g.neighbors(last).collect::<Vec<_>>() {
                    if !path.contains(&w) && !a.contains(&w) {
                        path.push(w);
                        extend(g, b, a, path, out);
                        path.pop();
                    }
                }
            }
            for &s in a {
                extend(g, b, a, &mut vec![s], &mut out);
            }
            out
        }
        fn best(paths: &[VertexSet], used: &VertexSet) -> usize {
            match paths.split_first() {
                None => 0,
                Some((p, rest)) => {
                    let skip = best(rest, used);
                    if p.is_disjoint(used) {
                        let mut u = used.clone();
                        u.extend(p);
                        skip.max(1 + best(rest, &u))
                    } else {
                        skip
                    }
                }
            }
        }
        best(&all_paths(g, a, b), &VertexSet::new())
    }

    #[test]
    fn ladder_rungs() {
        let g = ladder3();
        let out = menger(&g, &VertexSet::from([0, 2, 4]), &VertexSet::from([1, 3, 5]), 2).unwrap();
        match out {
            MengerOutcome::Paths(ps) => {
                assert_eq!(ps.len(), 3);
                assert!(ps.iter().all(|p| p.len() == 1));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn disconnected_gives_empty_separator() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let out = menger(&g, &VertexSet::from([0]), &VertexSet::from([3]), 0).unwrap();
        assert_eq!(out, MengerOutcome::Separator(VertexSet::new()));
    }

    #[test]
    fn complete_graph_single_vertices() {
        let g = k(4);
        let (a, b) = (VertexSet::from([0, 1]), VertexSet::from([2, 3]));
        assert_eq!(max_disjoint_oracle(&g, &a, &b), 2);
        assert!(matches!(menger(&g, &a, &b, 1).unwrap(), MengerOutcome::Paths(p) if p.len() == 2));
        assert!(matches!(menger(&g, &a, &b, 2).unwrap(), MengerOutcome::Separator(s) if s.len() == 2));
        // Three internally disjoint paths between two vertices of K4.
        let ps = internally_disjoint_paths(&g, 0, 1, 5).unwrap();
        assert_eq!(ps.len(), 3);
    }

    #[test]
    fn overlapping_sets_count_trivial_paths() {
        let g = ladder3();
        let out = menger(&g, &VertexSet::from([0, 2]), &VertexSet::from([2, 5]), 1).unwrap();
        match out {
            MengerOutcome::Paths(ps) => assert!(ps.iter().any(|p| p.vertices() == [2])),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn agrees_with_exhaustive_count() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (5, 3), (1, 5), (2, 6), (6, 3), (4, 6)])
            .unwrap();
        for (a, b) in [(vec![0], vec![3]), (vec![0, 1], vec![3, 6]), (vec![0, 4], vec![2, 3])] {
            let (a, b): (VertexSet, VertexSet) = (a.into_iter().collect(), b.into_iter().collect());
            let best = max_disjoint_oracle(&g, &a, &b);
            for t in 0..4 {
                let out = menger(&g, &a, &b, t).unwrap();
                assert_eq!(matches!(out, MengerOutcome::Paths(_)), best > t, "a={a:?} b={b:?} t={t}");
            }
        }
    }
}

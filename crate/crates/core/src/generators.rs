//! Seeded graph and poset families. Identical parameters and seed always
//! give identical output.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, Vertex};
use crate::minors::{find_minor_with_budget, Decision, MinorModel, DEFAULT_STATE_BUDGET};
use crate::posets::{cover_graph, kelly_poset, Poset};

pub use crate::minors::ladder;

pub type Seed = u64;

pub fn rng(seed: Seed) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// How many internal vertices each edge receives.
#[derive(Clone, Debug)]
pub enum SubdivisionPlan {
    Counts(BTreeMap<Edge, usize>),
    /// Every edge gets a uniform count in `0..=max`.
    Random { seed: Seed, max: usize },
}

/// Replaces planned edges by paths. New vertices take fresh identifiers in
/// edge order.
pub fn subdivide(g: &Graph, plan: &SubdivisionPlan) -> Result<Graph> {
    let counts: BTreeMap<Edge, usize> = match plan {
        SubdivisionPlan::Counts(c) => {
            if let Some(&(u, v)) = c.keys().find(|&&(u, v)| !g.has_edge(u, v)) {
                return Err(Error::input(format!("{u}-{v} is not an edge")));
            }
            c.iter().map(|(&(u, v), &n)| (edge(u, v), n)).collect()
        }
        SubdivisionPlan::Random { seed, max } => {
            let mut r = rng(*seed);
            g.edges().map(|e| (e, r.gen_range(0..=*max))).collect()
        }
    };
    let mut out = g.clone();
    let mut next = g.fresh_vertex();
    for (&(u, v), &n) in &counts {
        if n == 0 {
            continue;
        }
        out = out.delete_edge(u, v)?;
        let mut prev = u;
        for _ in 0..n {
            out.add_vertex(next);
            out.add_edge(prev, next)?;
            prev = next;
            next += 1;
        }
        out.add_edge(prev, v)?;
    }
    Ok(out)
}

/// `k` copies of `K4` glued along their vertical edges, with every
/// horizontal edge subdivided once.
///
/// ```text
///   x0 --s-- x1 --s-- x2 ...
///   |  \   / |  \   / |
///   |    X   |    X   |
///   |  /   \ |  /   \ |
///   y0 --s-- y1 --s-- y2 ...
/// ```
///
/// `x_i = 2i`, `y_i = 2i + 1` for `i = 0..=k`; the subdivision vertices of
/// copy `i` are `2(k + 1) + 2(i - 1)` (top) and the next id (bottom). The
/// graph has `4k + 2` vertices and is planar: one diagonal of each copy can
/// be routed around everything to its left.
pub fn path_of_k4s(k: usize) -> Graph {
    let k = k.max(1) as Vertex;
    let x = |i: Vertex| 2 * i;
    let y = |i: Vertex| 2 * i + 1;
    let mut edges = vec![(x(0), y(0))];
    for i in 1..=k {
        let (top, bottom) = (2 * (k + 1) + 2 * (i - 1), 2 * (k + 1) + 2 * (i - 1) + 1);
        edges.extend([
            (x(i), y(i)),
            (x(i - 1), top),
            (top, x(i)),
            (y(i - 1), bottom),
            (bottom, y(i)),
            (x(i - 1), y(i)),
            (y(i - 1), x(i)),
        ]);
    }
    Graph::from_edges(4 * k as usize + 2, edges).expect("layout is a simple graph")
}

/// Whether `h` is a minor of `path_of_k4s(k)`, with the model.
pub fn unavoidable_candidate_check(h: &Graph, k: usize) -> Result<Decision<MinorModel>> {
    unavoidable_candidate_check_with_budget(h, k, DEFAULT_STATE_BUDGET)
}

pub fn unavoidable_candidate_check_with_budget(h: &Graph, k: usize, budget: usize) -> Result<Decision<MinorModel>> {
    if k == 0 {
        return Err(Error::input("k must be positive"));
    }
    find_minor_with_budget(&path_of_k4s(k), h, budget)
}

pub fn cycle(n: usize) -> Graph {
    let n = n as Vertex;
    Graph::from_edges(n as usize, (0..n).map(|i| (i, (i + 1) % n))).expect("n >= 3")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n as Vertex).map(|i| (i - 1, i))).expect("path")
}

pub fn complete(n: usize) -> Graph {
    let n = n as Vertex;
    Graph::from_edges(n as usize, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("clique")
}

/// Hub `0` joined to a cycle on `1..=rim`.
pub fn wheel(rim: usize) -> Graph {
    let r = rim as Vertex;
    let spokes = (1..=r).map(|i| (0, i));
    let rim_edges = (1..=r).map(|i| (i, i % r + 1));
    Graph::from_edges(rim + 1, spokes.chain(rim_edges)).expect("rim >= 3")
}

/// `C_n x K_2`: outer cycle `0..n`, inner cycle `n..2n`.
pub fn prism(n: usize) -> Graph {
    let m = n as Vertex;
    let edges = (0..m).flat_map(|i| [(i, (i + 1) % m), (m + i, m + (i + 1) % m), (i, m + i)]);
    Graph::from_edges(2 * n, edges).expect("n >= 3")
}

/// Each vertex after the first attaches to a uniformly earlier one.
pub fn random_tree(n: usize, seed: Seed) -> Graph {
    let mut r = rng(seed);
    let edges: Vec<_> = (1..n as Vertex).map(|i| (r.gen_range(0..i), i)).collect();
    Graph::from_edges(n, edges).expect("tree")
}

/// `G(n, p)`.
pub fn random_graph(n: usize, p: f64, seed: Seed) -> Graph {
    let mut r = rng(seed);
    let n = n as Vertex;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n as usize, edges).expect("simple")
}

/// A cycle grown by random ears until it has `n` vertices, plus
/// `extra` random chords. Always 2-connected for `n >= 3`.
pub fn random_two_connected(n: usize, extra: usize, seed: Seed) -> Graph {
    let mut r = rng(seed);
    let n = n.max(3);
    let start = r.gen_range(3..=n.min(5));
    let mut g = cycle(start);
    while g.vertex_count() < n {
        let left = n - g.vertex_count();
        let len = r.gen_range(1..=left.min(3));
        let vs: Vec<Vertex> = g.vertices().collect();
        let a = *vs.choose(&mut r).expect("nonempty");
        let b = loop {
            let b = *vs.choose(&mut r).expect("nonempty");
            if b != a {
                break b;
            }
        };
        let mut prev = a;
        for _ in 0..len {
            let v = g.fresh_vertex();
            g.add_vertex(v);
            g.add_edge(prev, v).expect("fresh");
            prev = v;
        }
        g.add_edge(prev, b).expect("fresh");
    }
    add_random_edges(&mut g, extra, &mut r);
    g
}

fn add_random_edges(g: &mut Graph, count: usize, r: &mut ChaCha8Rng) {
    let vs: Vec<Vertex> = g.vertices().collect();
    let missing: Vec<Edge> =
        vs.iter().flat_map(|&u| vs.iter().filter(move |&&v| u < v).map(move |&v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
    for &(u, v) in missing.choose_multiple(r, count.min(missing.len())) {
        g.add_edge(u, v).expect("missing edge");
    }
}

/// A 3-connected graph on `n >= 4` vertices grown from `K4`.
///
/// Each step either splits a vertex of degree at least 4 into two adjacent
/// vertices keeping at least two old neighbours on each side, or subdivides
/// an edge and joins the new vertex to a third vertex. A final round adds a
/// few random edges. All three moves preserve 3-connectivity.
pub fn random_3_connected(n: usize, seed: Seed) -> Graph {
    let mut r = rng(seed);
    let mut g = complete(4);
    while g.vertex_count() < n {
        let heavy: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) >= 4).collect();
        let fresh = g.fresh_vertex();
        if !heavy.is_empty() && r.gen_bool(0.5) {
            let v = *heavy.choose(&mut r).expect("nonempty");
            let mut nbrs: Vec<Vertex> = g.neighbors(v).collect();
            nbrs.shuffle(&mut r);
            let moved = r.gen_range(2..=nbrs.len() - 2);
            g.add_vertex(fresh);
            for &w in &nbrs[..moved] {
                g = g.delete_edge(v, w).expect("edge");
                g.add_edge(fresh, w).expect("fresh");
            }
            g.add_edge(v, fresh).expect("fresh");
        } else {
            let edges: Vec<Edge> = g.edges().collect();
            let (u, v) = *edges.choose(&mut r).expect("K4 has edges");
            let others: Vec<Vertex> = g.vertices().filter(|&w| w != u && w != v).collect();
            let w = *others.choose(&mut r).expect("at least 4 vertices");
            g = g.delete_edge(u, v).expect("edge");
            g.add_vertex(fresh);
            for t in [u, v, w] {
                g.add_edge(fresh, t).expect("fresh");
            }
        }
    }
    let extra = r.gen_range(0..=n / 3);
    add_random_edges(&mut g, extra, &mut r);
    g
}

/// Cover graph of Kelly's poset of order `k`.
pub fn kelly_cover_graph(k: usize) -> Graph {
    cover_graph(&kelly_poset(k))
}

/// A random order on `0..n`: `i < j` is a relation with probability `p`
/// for `i < j`, then closed transitively.
pub fn random_poset(n: usize, p: f64, seed: Seed) -> Poset {
    let mut r = rng(seed);
    let n = n as Vertex;
    let mut rel = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(p) {
                rel.push((i, j));
            }
        }
    }
    // relabel so the id order does not reveal a linear extension
    let mut label: Vec<Vertex> = (0..n).collect();
    label.shuffle(&mut r);
    let rel: Vec<_> = rel.into_iter().map(|(i, j)| (label[i as usize], label[j as usize])).collect();
    Poset::from_relation(0..n, &rel).expect("edges go forward")
}

//! Topological search for subdivided ladders.
//!
//! A subdivision of `L_k` is grown column by column: the first rung is a path
//! between two branch vertices `a`, `b`; every further column adds a rail
//! path from `a`, a rail path from `b` and a rung joining their new ends. The
//! unexplored part of the ladder is connected, so each step stays inside one
//! component of the unused vertices. Failed states `(free, a, b, columns
//! left)` are memoized.

use std::collections::{HashMap, HashSet};
use std::rc::Rc;

use crate::connectivity::{block_tree, BlockKind};
use crate::error::{Error, Result};
use crate::graph::{bits, Dense, Graph, Path, VertexSet};

use super::model::{verify_subdivision_model, LadderSubdivisionModel, MinorModel};
use super::Decision;

/// Default number of search nodes before a search reports `Undecided`.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Simple paths leaving `start` through `allowed`, produced one extension at
/// a time. Vertices in `stop` are never extended further.
struct Paths<'a> {
    adj: &'a [u64],
    allowed: u64,
    stop: u64,
    path: Vec<usize>,
    pending: Vec<u64>,
    used: u64,
}

impl<'a> Paths<'a> {
    fn new(adj: &'a [u64], start: usize, allowed: u64, stop: u64) -> Self {
        let used = 1u64 << start;
        Paths { adj, allowed, stop, path: vec![start], pending: vec![adj[start] & allowed & !used], used }
    }

    /// Moves to the next path; `false` once all are exhausted.
    fn advance(&mut self) -> bool {
        loop {
            let Some(top) = self.pending.last_mut() else { return false };
            if *top == 0 {
                self.pending.pop();
                let v = self.path.pop().expect("aligned with pending");
                self.used &= !(1 << v);
                continue;
            }
            let w = top.trailing_zeros() as usize;
            *top &= *top - 1;
            self.path.push(w);
            self.used |= 1 << w;
            let next = if self.stop >> w & 1 == 1 { 0 } else { self.adj[w] & self.allowed & !self.used };
            self.pending.push(next);
            return true;
        }
    }

    fn end(&self) -> usize {
        *self.path.last().expect("nonempty")
    }

    /// Vertices of the current path other than the start.
    fn tail_mask(&self) -> u64 {
        self.used & !(1 << self.path[0])
    }
}

/// One column after the first: rail segments from the previous branch
/// vertices and the rung between their new ends.
type Column = (Vec<usize>, Vec<usize>, Vec<usize>);

struct Exhausted;

pub(crate) struct ColumnSearch<'a> {
    d: &'a Dense,
    k: usize,
    spanning: bool,
    budget: u64,
    nodes: u64,
    failed: HashSet<(u64, u8, u8, u8)>,
    completions: HashMap<(u64, u8, u8, u8), Rc<Vec<u64>>>,
}

impl<'a> ColumnSearch<'a> {
    pub(crate) fn new(d: &'a Dense, k: usize, budget: u64) -> Self {
        ColumnSearch { d, k, spanning: false, budget, nodes: 0, failed: HashSet::new(), completions: HashMap::new() }
    }

    fn tick(&mut self) -> std::result::Result<(), Exhausted> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(Exhausted)
        } else {
            Ok(())
        }
    }

    /// Components of `free` that touch both `a` and `b` and are large enough
    /// for `r` more columns.
    fn candidate_components(&self, free: u64, a: usize, b: usize, r: usize) -> Vec<u64> {
        let mut out = Vec::new();
        let mut rest = free;
        while rest != 0 {
            let c = self.d.reach(rest.trailing_zeros() as usize, free);
            rest &= !c;
            if c.count_ones() as usize >= 2 * r && self.d.adj[a] & c != 0 && self.d.adj[b] & c != 0 {
                out.push(c);
            }
        }
        out
    }

    /// Columns completing a ladder from branch vertices `a`, `b` using only
    /// `free`, with `r` columns still to add.
    fn extend(&mut self, free: u64, a: usize, b: usize, r: usize) -> std::result::Result<Option<Vec<Column>>, Exhausted> {
        if r == 0 {
            return Ok((!self.spanning || free == 0).then(Vec::new));
        }
        let key = (free, a as u8, b as u8, r as u8);
        if self.failed.contains(&key) {
            return Ok(None);
        }
        let comps = self.candidate_components(free, a, b, r);
        if self.spanning && (comps.len() != 1 || comps[0] != free) {
            self.failed.insert(key);
            return Ok(None);
        }
        for c in comps {
            let mut rail1 = Paths::new(&self.d.adj, a, c, 0);
            while rail1.advance() {
                self.tick()?;
                let (a2, m1) = (rail1.end(), rail1.tail_mask());
                if (c & !m1).count_ones() as usize + 1 < 2 * r {
                    continue;
                }
                let mut rail2 = Paths::new(&self.d.adj, b, c & !m1, 0);
                while rail2.advance() {
                    self.tick()?;
                    let (b2, m2) = (rail2.end(), rail2.tail_mask());
                    let inner = c & !m1 & !m2;
                    if r == 1 && !self.spanning {
                        let reach = self.d.reach(a2, inner | 1 << a2 | 1 << b2);
                        if reach >> b2 & 1 == 1 {
                            let rung = self.shortest(a2, b2, inner);
                            return Ok(Some(vec![(rail1.path.clone(), rail2.path.clone(), rung)]));
                        }
                        continue;
                    }
                    let mut rung = Paths::new(&self.d.adj, a2, inner | 1 << b2, 1 << b2);
                    while rung.advance() {
                        self.tick()?;
                        if rung.end() != b2 {
                            continue;
                        }
                        let used = m1 | m2 | rung.tail_mask();
                        if let Some(mut rest) = self.extend(free & !used, a2, b2, r - 1)? {
                            rest.insert(0, (rail1.path.clone(), rail2.path.clone(), rung.path.clone()));
                            return Ok(Some(rest));
                        }
                    }
                }
            }
        }
        self.failed.insert(key);
        Ok(None)
    }

    /// Every vertex mask consumed by some completion of the state.
    fn extend_all(&mut self, free: u64, a: usize, b: usize, r: usize) -> std::result::Result<Rc<Vec<u64>>, Exhausted> {
        if r == 0 {
            return Ok(Rc::new(vec![0]));
        }
        let key = (free, a as u8, b as u8, r as u8);
        if let Some(hit) = self.completions.get(&key) {
            return Ok(hit.clone());
        }
        let mut out = Vec::new();
        for c in self.candidate_components(free, a, b, r) {
            let mut rail1 = Paths::new(&self.d.adj, a, c, 0);
            while rail1.advance() {
                self.tick()?;
                let (a2, m1) = (rail1.end(), rail1.tail_mask());
                let mut rail2 = Paths::new(&self.d.adj, b, c & !m1, 0);
                while rail2.advance() {
                    self.tick()?;
                    let (b2, m2) = (rail2.end(), rail2.tail_mask());
                    let mut rung = Paths::new(&self.d.adj, a2, (c & !m1 & !m2) | 1 << b2, 1 << b2);
                    while rung.advance() {
                        self.tick()?;
                        if rung.end() != b2 {
                            continue;
                        }
                        let used = m1 | m2 | rung.tail_mask();
                        for rest in self.extend_all(free & !used, a2, b2, r - 1)?.iter() {
                            out.push(used | rest);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        let out = Rc::new(out);
        self.completions.insert(key, out.clone());
        Ok(out)
    }

    fn shortest(&self, from: usize, to: usize, via: u64) -> Vec<usize> {
        let allowed = via | 1 << to;
        let mut prev = vec![usize::MAX; self.d.n()];
        let mut seen = 1u64 << from;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                break;
            }
            for y in bits(self.d.adj[x] & allowed & !seen) {
                seen |= 1 << y;
                prev[y] = x;
                queue.push_back(y);
            }
        }
        let mut path = vec![to];
        while *path.last().unwrap() != from {
            path.push(prev[*path.last().unwrap()]);
        }
        path.reverse();
        path
    }

    /// First-column choices: branch vertices `a < b` and a rung between them.
    fn first_rungs(&mut self, within: u64, mut f: impl FnMut(&mut Self, &[usize], u64) -> std::result::Result<bool, Exhausted>) -> std::result::Result<(), Exhausted> {
        for a in bits(within) {
            for b in bits(within & !((2u64 << a) - 1)) {
                let mut rung = Paths::new(&self.d.adj, a, within | 1 << b, 1 << b);
                while rung.advance() {
                    self.tick()?;
                    if rung.end() != b {
                        continue;
                    }
                    let path = rung.path.clone();
                    if f(self, &path, rung.used)? {
                        return Ok(());
                    }
                }
            }
        }
        Ok(())
    }

    /// A subdivision of `L_k` inside `within` (index-level result).
    fn find(&mut self, within: u64) -> std::result::Result<Option<(Vec<usize>, Vec<Column>)>, Exhausted> {
        if (within.count_ones() as usize) < 2 * self.k {
            return Ok(None);
        }
        if self.k == 1 {
            for a in bits(within) {
                if let Some(b) = bits(self.d.adj[a] & within).next() {
                    return Ok(Some((vec![a, b], Vec::new())));
                }
            }
            return Ok(None);
        }
        let mut found = None;
        let k = self.k;
        self.first_rungs(within, |s, q1, used| {
            let (a, b) = (q1[0], *q1.last().unwrap());
            if let Some(cols) = s.extend(within & !used, a, b, k - 1)? {
                found = Some((q1.to_vec(), cols));
                return Ok(true);
            }
            Ok(false)
        })?;
        Ok(found)
    }

    /// All vertex masks of subdivisions of `L_k` inside `within`.
    fn all(&mut self, within: u64) -> std::result::Result<Vec<u64>, Exhausted> {
        let mut out = Vec::new();
        if (within.count_ones() as usize) < 2 * self.k {
            return Ok(out);
        }
        if self.k == 1 {
            for a in bits(within) {
                for b in bits(self.d.adj[a] & within & !((2u64 << a) - 1)) {
                    out.push(1 << a | 1 << b);
                }
            }
            return Ok(out);
        }
        let k = self.k;
        self.first_rungs(within, |s, q1, used| {
            let (a, b) = (q1[0], *q1.last().unwrap());
            for rest in s.extend_all(within & !used, a, b, k - 1)?.iter() {
                out.push(used | rest);
            }
            Ok(false)
        })?;
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    fn to_model(&self, q1: Vec<usize>, cols: Vec<Column>) -> LadderSubdivisionModel {
        let id = |xs: &[usize]| -> Vec<u32> { xs.iter().map(|&i| self.d.ids[i]).collect() };
        let mut p1 = vec![self.d.ids[q1[0]]];
        let mut p2 = vec![self.d.ids[*q1.last().unwrap()]];
        let mut rungs = vec![Path(id(&q1))];
        if self.k == 1 {
            p2 = vec![self.d.ids[q1[1]]];
        }
        for (r1, r2, q) in cols {
            p1.extend(id(&r1[1..]));
            p2.extend(id(&r2[1..]));
            rungs.push(Path(id(&q)));
        }
        LadderSubdivisionModel { p1: Path(p1), p2: Path(p2), rungs }
    }
}

fn undecided_note(nodes: u64) -> String {
    format!("search stopped after {nodes} nodes")
}

/// Blocks that can host a subdivided `L_k` (`k >= 2`), after counting
/// prunes: enough vertices, independent cycles and branching vertices.
fn candidate_blocks(g: &Graph, k: usize) -> Vec<VertexSet> {
    let bt = block_tree(g);
    (0..bt.blocks.len())
        .filter(|&i| bt.kind(i) == BlockKind::TwoConnected && bt.blocks[i].len() >= 2 * k)
        .map(|i| bt.blocks[i].clone())
        .filter(|b| {
            let h = g.induced_subgraph(b).expect("block vertices exist");
            let cyclomatic = h.edge_count() + 1 - h.vertex_count();
            let branching = h.vertices().filter(|&v| h.degree(v) >= 3).count();
            cyclomatic + 1 >= k && branching + 4 >= 2 * k
        })
        .collect()
}

/// A subdivision of `L_k` in `g`, `Absent` when none exists, or `Undecided`
/// when the node budget runs out first.
pub fn find_ladder_model(g: &Graph, k: usize) -> Result<Decision<LadderSubdivisionModel>> {
    find_ladder_model_with_budget(g, k, DEFAULT_NODE_BUDGET)
}

pub fn find_ladder_model_with_budget(g: &Graph, k: usize, budget: u64) -> Result<Decision<LadderSubdivisionModel>> {
    if k == 0 {
        return Err(Error::input("ladder order must be positive"));
    }
    if k == 1 {
        return Ok(match g.edges().next() {
            Some((u, v)) => Decision::Found(LadderSubdivisionModel {
                p1: Path::single(u),
                p2: Path::single(v),
                rungs: vec![Path(vec![u, v])],
            }),
            None => Decision::Absent,
        });
    }
    let mut spent = 0;
    for block in candidate_blocks(g, k) {
        let h = g.induced_subgraph(&block)?;
        let Ok(d) = Dense::new(&h) else {
            return Ok(Decision::Undecided(format!("block of {} vertices exceeds the search limit", h.vertex_count())));
        };
        let mut search = ColumnSearch::new(&d, k, budget - spent);
        match search.find(d.full()) {
            Err(Exhausted) => return Ok(Decision::Undecided(undecided_note(budget))),
            Ok(Some((q1, cols))) => {
                let sm = search.to_model(q1, cols);
                if !verify_subdivision_model(g, &sm) {
                    return Err(Error::internal("ladder search produced an invalid subdivision model"));
                }
                return Ok(Decision::Found(sm));
            }
            Ok(None) => spent += search.nodes,
        }
    }
    Ok(Decision::Absent)
}

/// Largest `k` such that `g` has an `L_k` minor; `0` for edgeless graphs.
/// A search that runs out of budget is reported as a resource error.
pub fn max_ladder_order(g: &Graph) -> Result<usize> {
    max_ladder_order_with_budget(g, DEFAULT_NODE_BUDGET).map(|(k, _)| k)
}

pub fn max_ladder_order_with_budget(g: &Graph, budget: u64) -> Result<(usize, Option<LadderSubdivisionModel>)> {
    let mut best = None;
    let mut k = 1;
    loop {
        match find_ladder_model_with_budget(g, k, budget)? {
            Decision::Found(m) => best = Some(m),
            Decision::Absent => return Ok((k - 1, best)),
            Decision::Undecided(note) => return Err(Error::resource(format!("L_{k} search undecided: {note}"))),
        }
        k += 1;
    }
}

/// If `h` is itself a subdivision of a ladder, the spanning subdivision
/// model using every vertex and edge; ties go to the lexicographically
/// smallest branch vertices.
pub fn subdivision_structure(h: &Graph) -> Result<Option<LadderSubdivisionModel>> {
    let (n, m) = (h.vertex_count(), h.edge_count());
    if n < 2 || m + 2 < n || !h.is_connected() {
        return Ok(None);
    }
    let k = m + 2 - n;
    if k == 1 {
        // a path
        let ends: Vec<_> = h.vertices().filter(|&v| h.degree(v) == 1).collect();
        if ends.len() != 2 || h.max_degree() > 2 {
            return Ok(None);
        }
        let p = h.shortest_path(ends[0], ends[1], &VertexSet::new()).expect("connected");
        return Ok(Some(LadderSubdivisionModel { p1: Path::single(ends[0]), p2: Path::single(ends[1]), rungs: vec![p] }));
    }
    if h.max_degree() > 3 || h.vertices().any(|v| h.degree(v) < 2) {
        return Ok(None);
    }
    let d = Dense::new(h)?;
    let mut search = ColumnSearch::new(&d, k, DEFAULT_NODE_BUDGET);
    search.spanning = true;
    match search.find(d.full()) {
        Err(Exhausted) => Err(Error::resource("subdivision recognition ran out of budget")),
        Ok(None) => Ok(None),
        Ok(Some((q1, cols))) => {
            let sm = search.to_model(q1, cols);
            if sm.vertex_set().len() != n || sm.edge_set().len() != m || !verify_subdivision_model(h, &sm) {
                return Err(Error::internal("spanning ladder search returned a partial model"));
            }
            Ok(Some(sm))
        }
    }
}

/// Inclusion-minimal vertex sets of subdivided `L_k` copies in `g`, as masks
/// over `d`.
fn minimal_copies(d: &Dense, k: usize, budget: u64) -> std::result::Result<(Vec<u64>, u64), Exhausted> {
    let mut search = ColumnSearch::new(d, k, budget);
    let mut all = search.all(d.full())?;
    all.sort_by_key(|m| (m.count_ones(), *m));
    let mut minimal: Vec<u64> = Vec::new();
    for m in all {
        if !minimal.iter().any(|&s| s & m == s) {
            minimal.push(m);
        }
    }
    Ok((minimal, search.nodes))
}

struct Packer<'a> {
    family: &'a [u64],
    k: usize,
    failed: HashSet<(u64, usize)>,
    nodes: u64,
    budget: u64,
}

impl Packer<'_> {
    fn pack(&mut self, avail: u64, need: usize) -> std::result::Result<Option<Vec<u64>>, Exhausted> {
        if need == 0 {
            return Ok(Some(Vec::new()));
        }
        if (avail.count_ones() as usize) < 2 * self.k * need || self.failed.contains(&(avail, need)) {
            return Ok(None);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Exhausted);
        }
        // drop vertices that lie in no remaining copy
        let live = self.family.iter().filter(|&&s| s & avail == s).fold(0, |acc, &s| acc | s);
        if live != avail {
            let r = self.pack(live, need)?;
            if r.is_none() {
                self.failed.insert((avail, need));
            }
            return Ok(r);
        }
        let v = avail.trailing_zeros();
        for &s in self.family.iter().filter(|&&s| s & avail == s && s >> v & 1 == 1) {
            if let Some(mut rest) = self.pack(avail & !s, need - 1)? {
                rest.push(s);
                return Ok(Some(rest));
            }
        }
        let r = self.pack(avail & !(1 << v), need)?;
        if r.is_none() {
            self.failed.insert((avail, need));
        }
        Ok(r)
    }
}

/// Subdivision model spanning exactly the vertex mask `s`.
fn model_on(d: &Dense, g: &Graph, k: usize, s: u64) -> Result<LadderSubdivisionModel> {
    let h = g.induced_subgraph(&d.to_set(s))?;
    match find_ladder_model(&h, k)? {
        Decision::Found(sm) => Ok(sm),
        _ => Err(Error::internal("packed vertex set holds no ladder subdivision")),
    }
}

/// `target` vertex-disjoint `L_k` models, `Absent` when no such packing
/// exists, `Undecided` past the budget.
pub fn disjoint_ladder_packing(g: &Graph, k: usize, target: usize) -> Result<Decision<Vec<MinorModel>>> {
    disjoint_ladder_packing_with_budget(g, k, target, DEFAULT_NODE_BUDGET)
}

pub fn disjoint_ladder_packing_with_budget(
    g: &Graph,
    k: usize,
    target: usize,
    budget: u64,
) -> Result<Decision<Vec<MinorModel>>> {
    if k == 0 || target == 0 {
        return Err(Error::input("ladder order and target must be positive"));
    }
    if g.vertex_count() < 2 * k * target {
        return Ok(Decision::Absent);
    }
    let d = Dense::new(g)?;
    let Ok((family, spent)) = minimal_copies(&d, k, budget) else {
        return Ok(Decision::Undecided(undecided_note(budget)));
    };
    let mut packer = Packer { family: &family, k, failed: HashSet::new(), nodes: 0, budget: budget.saturating_sub(spent) };
    match packer.pack(d.full(), target) {
        Err(Exhausted) => Ok(Decision::Undecided(undecided_note(budget))),
        Ok(None) => Ok(Decision::Absent),
        Ok(Some(sets)) => {
            let mut models = Vec::new();
            for s in sets.into_iter().rev() {
                let m = model_on(&d, g, k, s)?.to_minor_model(g)?;
                models.push(m);
            }
            Ok(Decision::Found(models))
        }
    }
}

/// Largest number (capped at `cap`) of vertex-disjoint `L_k` models, with
/// the models themselves.
pub fn max_disjoint_ladders(g: &Graph, k: usize, cap: usize, budget: u64) -> Result<Decision<Vec<MinorModel>>> {
    let mut best = Vec::new();
    for t in 1..=cap {
        match disjoint_ladder_packing_with_budget(g, k, t, budget)? {
            Decision::Found(ms) => best = ms,
            Decision::Absent => break,
            Decision::Undecided(note) => return Ok(Decision::Undecided(note)),
        }
    }
    Ok(Decision::Found(best))
}

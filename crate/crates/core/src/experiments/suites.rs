//! Seeded property suites over small random instances. Each suite reports
//! how many cases it ran and describes every violation it saw.

use std::fmt;
use std::str::FromStr;

use rand::seq::{IteratorRandom, SliceRandom};
use rand::Rng;
use serde::Serialize;

use crate::colorings::{chi_cc, many_blocks_deletion, td2, treedepth, ColoringKind};
use crate::connectivity::block_tree;
use crate::error::{Error, Result};
use crate::extraction::{chi_cc_refutation, erdos_szekeres, lk_or_rooted_lt, menger_threshold};
use crate::generators::{ladder, random_graph, random_poset, random_two_connected, rng, subdivide, Seed, SubdivisionPlan};
use crate::graph::{verify_separation, Graph, Path, Separation, Vertex, VertexSet};
use crate::minors::{glue_rooted_ladders, ladder_columns, rooted_half_ladder, trim_ladder_model, verify_model, verify_rooted};
use crate::posets::{apex_merge, cover_graph, dimension_exact, is_realizer, realizer_via_td2, Poset, Realizer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// `td2(G - X) >= td2(G) - |X|`.
    Deletion,
    /// `td2` of a graph with a separation of order at most 1 is the max over its sides.
    Separation,
    /// `td2` is attained on a block.
    Blocks,
    /// `chi_cc <= td2 <= td`, and `td2`, `chi_cc` do not grow under edge deletion.
    Sandwich,
    /// Every permutation of length `n` has a monotone subsequence of length `floor(sqrt(n - 1)) + 1`.
    Monotone,
    /// The ladder-or-rooted-ladder extraction verifies and decides above its td2 threshold.
    Rooted,
    /// Deleting few vertices leaves many blocks when td2 is small.
    ManyBlocks,
    /// Two-colorings of a subdivided `L_16` are refuted on an edge or cycle.
    Refutation,
    /// Rooted half ladders from subdivided ladders glue into longer ladders.
    Surgery,
    /// Merging realizers around an apex doubles their size and stays valid.
    ApexMerge,
    /// Dimension is at most `2^(td2 + 1) - 2` of the cover graph.
    Td2Dimension,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Deletion,
        Suite::Separation,
        Suite::Blocks,
        Suite::Sandwich,
        Suite::Monotone,
        Suite::Rooted,
        Suite::ManyBlocks,
        Suite::Refutation,
        Suite::Surgery,
        Suite::ApexMerge,
        Suite::Td2Dimension,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Deletion => "deletion",
            Suite::Separation => "separation",
            Suite::Blocks => "blocks",
            Suite::Sandwich => "sandwich",
            Suite::Monotone => "monotone",
            Suite::Rooted => "rooted",
            Suite::ManyBlocks => "many-blocks",
            Suite::Refutation => "refutation",
            Suite::Surgery => "surgery",
            Suite::ApexMerge => "apex-merge",
            Suite::Td2Dimension => "td2-dimension",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::input(format!("unknown suite {s:?}; known: {}", Suite::ALL.map(Suite::name).join(", "))))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: usize,
    /// Cases where the instance did not meet the property's hypothesis.
    pub skipped: usize,
    pub violations: Vec<String>,
    pub log: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Runs `suite` on seeds `first_seed..first_seed + seeds` with instances of
/// at most `n_max` vertices or elements.
pub fn run_suite(suite: Suite, n_max: usize, first_seed: Seed, seeds: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport { suite, cases: 0, skipped: 0, violations: Vec::new(), log: Vec::new() };
    if suite == Suite::Monotone {
        monotone(n_max, &mut report)?;
        return Ok(report);
    }
    for seed in first_seed..first_seed + seeds {
        let outcome = match suite {
            Suite::Deletion => deletion(n_max, seed)?,
            Suite::Separation => separation(n_max, seed)?,
            Suite::Blocks => blocks(n_max, seed)?,
            Suite::Sandwich => sandwich(n_max, seed)?,
            Suite::Rooted => rooted(n_max, seed)?,
            Suite::ManyBlocks => many_blocks(n_max, seed)?,
            Suite::Refutation => refutation(seed)?,
            Suite::Surgery => surgery(seed)?,
            Suite::ApexMerge => apex(n_max, seed)?,
            Suite::Td2Dimension => td2_dimension(n_max, seed)?,
            Suite::Monotone => unreachable!(),
        };
        report.cases += 1;
        let line = match outcome {
            Case::Pass(note) => format!("seed {seed}: ok {note}"),
            Case::Skip(note) => {
                report.skipped += 1;
                format!("seed {seed}: skipped {note}")
            }
            Case::Fail(note) => {
                report.violations.push(format!("seed {seed}: {note}"));
                format!("seed {seed}: VIOLATION {note}")
            }
        };
        report.log.push(line);
    }
    Ok(report)
}

enum Case {
    Pass(String),
    Skip(String),
    Fail(String),
}

fn check(ok: bool, note: String) -> Case {
    if ok {
        Case::Pass(note)
    } else {
        Case::Fail(note)
    }
}

fn small_graph(n_max: usize, seed: Seed) -> Graph {
    let mut r = rng(seed ^ 0x5eed);
    let n = r.gen_range(1..=n_max.max(1));
    let p = r.gen_range(0.2..0.8);
    random_graph(n, p, seed)
}

fn deletion(n_max: usize, seed: Seed) -> Result<Case> {
    let g = small_graph(n_max, seed);
    let mut r = rng(seed);
    let x: VertexSet = g.vertices().filter(|_| r.gen_bool(0.3)).collect();
    let (full, _) = td2(&g)?;
    let (rest, _) = td2(&g.delete_vertices(&x)?)?;
    Ok(check(rest + x.len() >= full, format!("n={} |X|={} td2={full} td2(G-X)={rest}", g.vertex_count(), x.len())))
}

fn separation(n_max: usize, seed: Seed) -> Result<Case> {
    let g = small_graph(n_max, seed);
    let comps = g.components();
    let sep = if comps.len() >= 2 {
        let a1 = comps[0].clone();
        Separation::new(a1.clone(), g.vertex_set().difference(&a1).copied().collect())
    } else if let Some(&c) = block_tree(&g).cutvertices.iter().next() {
        let parts = g.delete_vertex(c)?.components();
        let mut a1 = parts[0].clone();
        a1.insert(c);
        let mut a2: VertexSet = parts[1..].iter().flatten().copied().collect();
        a2.insert(c);
        Separation::new(a1, a2)
    } else {
        return Ok(Case::Skip("no separation of order at most 1".into()));
    };
    if !verify_separation(&g, &sep) || sep.order() > 1 {
        return Err(Error::internal("constructed an invalid separation"));
    }
    let (whole, _) = td2(&g)?;
    let (s1, _) = td2(&g.induced_subgraph(&sep.a1)?)?;
    let (s2, _) = td2(&g.induced_subgraph(&sep.a2)?)?;
    Ok(check(whole == s1.max(s2), format!("order {} td2={whole} sides {s1},{s2}", sep.order())))
}

fn blocks(n_max: usize, seed: Seed) -> Result<Case> {
    let g = small_graph(n_max, seed);
    let (whole, _) = td2(&g)?;
    let mut best = 0;
    for b in block_tree(&g).blocks {
        best = best.max(td2(&g.induced_subgraph(&b)?)?.0);
    }
    Ok(check(whole == best, format!("td2={whole} best block {best}")))
}

fn sandwich(n_max: usize, seed: Seed) -> Result<Case> {
    let g = small_graph(n_max, seed);
    let (cc, _) = chi_cc(&g)?;
    let (t2, _) = td2(&g)?;
    let (td, _, _) = treedepth(&g)?;
    let mut ok = cc <= t2 && t2 <= td;
    let mut note = format!("chi_cc={cc} td2={t2} td={td}");
    let mut r = rng(seed);
    if let Some((u, v)) = g.edges().choose(&mut r) {
        let h = g.delete_edge(u, v)?;
        let (cc_h, _) = chi_cc(&h)?;
        let (t2_h, _) = td2(&h)?;
        ok &= cc_h <= cc && t2_h <= t2;
        note += &format!("; minus {u}-{v}: chi_cc={cc_h} td2={t2_h}");
    }
    Ok(check(ok, note))
}

fn permutations(n: usize) -> Vec<Vec<i64>> {
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

fn monotone(n_max: usize, report: &mut SuiteReport) -> Result<()> {
    let n = n_max.clamp(1, 8);
    let k = ((n - 1) as f64).sqrt().floor() as usize + 1;
    for p in permutations(n) {
        report.cases += 1;
        match erdos_szekeres(&p, k)? {
            Some(m) if m.len() == k && m.holds_for(&p) => {}
            other => report.violations.push(format!("{p:?}: {other:?}")),
        }
    }
    report.log.push(format!("{} permutations of length {n}, monotone length {k}", report.cases));
    Ok(())
}

fn rooted(n_max: usize, seed: Seed) -> Result<Case> {
    let mut r = rng(seed);
    let n = r.gen_range(3..=n_max.max(3));
    let g = random_two_connected(n, r.gen_range(0..=n), seed);
    let (k, t) = (r.gen_range(1..=3), r.gen_range(1..=2));
    let vs: Vec<Vertex> = g.vertices().collect();
    let pair: Vec<Vertex> = vs.choose_multiple(&mut r, 2).copied().collect();
    let out = lk_or_rooted_lt(&g, pair[0], pair[1], k, t)?;
    let (value, _) = td2(&g)?;
    let above = value > t * menger_threshold(k);
    let note = format!("n={n} k={k} t={t} td2={value} outcome={}", out.kind());
    Ok(check(out.verify(&g)? && !(above && out.is_undecided()), note))
}

fn many_blocks(n_max: usize, seed: Seed) -> Result<Case> {
    let g = small_graph(n_max, seed);
    let (m, col) = td2(&g)?;
    let n = g.vertex_count();
    let Some(p) = (2..=n).rev().find(|&p| p.checked_pow(m as u32).is_some_and(|v| v <= n)) else {
        return Ok(Case::Skip(format!("n={n} is below 2^{m}")));
    };
    let z = many_blocks_deletion(&g, &col, p)?;
    let count = block_tree(&g.delete_vertices(&z)?).blocks.len();
    Ok(check(z.len() < m && count >= p, format!("m={m} p={p} |Z|={} blocks={count}", z.len())))
}

fn refutation(seed: Seed) -> Result<Case> {
    let plan = SubdivisionPlan::Random { seed, max: 1 };
    let g = subdivide(&ladder(16), &plan)?;
    let sm = crate::minors::subdivision_structure(&g)?.ok_or_else(|| Error::internal("subdivided ladder lost its structure"))?;
    let mut r = rng(seed);
    let col = crate::colorings::Coloring::new(g.vertices().map(|v| (v, r.gen_range(1..=2))).collect(), ColoringKind::CycleCentered);
    if col.color_count < 2 {
        return Ok(Case::Skip("monochromatic".into()));
    }
    let refuted = chi_cc_refutation(&g, &sm, &col)?;
    Ok(check(refuted.verify(&g, &col), format!("violated set of size {} after {} halvings", refuted.cycle.len(), refuted.depth)))
}

/// Two disjoint random subdivisions of `L_k` joined by two fresh paths
/// between the roots of their rooted half ladders.
pub fn surgery_instance(k: usize, seed: Seed) -> Result<(Graph, crate::minors::MinorModel)> {
    let mut r = rng(seed);
    let h1 = subdivide(&ladder(k), &SubdivisionPlan::Random { seed, max: 2 })?;
    let h2_local = subdivide(&ladder(k), &SubdivisionPlan::Random { seed: seed.wrapping_add(1), max: 2 })?;
    let shift = h1.fresh_vertex();
    let mut g = h1.clone();
    for v in h2_local.vertices() {
        g.add_vertex(v + shift);
    }
    for (u, v) in h2_local.edges() {
        g.add_edge(u + shift, v + shift)?;
    }
    let h2 = g.induced_subgraph(&h2_local.vertices().map(|v| v + shift).collect())?;
    let pick = |h: &Graph, r: &mut rand_chacha::ChaCha8Rng| -> VertexSet { h.vertices().choose_multiple(r, 3).into_iter().collect() };
    let (z1, z2) = (pick(&h1, &mut r), pick(&h2, &mut r));
    let (_, m1) = rooted_half_ladder(&h1, &z1)?;
    let (_, m2) = rooted_half_ladder(&h2, &z2)?;
    if !verify_rooted(&g, &m1) || !verify_rooted(&g, &m2) {
        return Err(Error::internal("rooted half ladder does not verify in the host"));
    }
    let mut link = |a: Vertex, b: Vertex, len: usize| -> Result<Path> {
        let mut vs = vec![a];
        for _ in 0..len {
            let v = g.fresh_vertex();
            g.add_vertex(v);
            g.add_edge(*vs.last().expect("nonempty"), v)?;
            vs.push(v);
        }
        g.add_edge(*vs.last().expect("nonempty"), b)?;
        vs.push(b);
        Ok(Path(vs))
    };
    let p1 = link(m1.roots.0, m2.roots.0, r.gen_range(0..=2))?;
    let p2 = link(m1.roots.1, m2.roots.1, r.gen_range(1..=2))?;
    let glued = glue_rooted_ladders(&g, &m1, &m2, &p1, &p2)?;
    Ok((g, glued))
}

fn surgery(seed: Seed) -> Result<Case> {
    let k = 2 + (seed % 4) as usize;
    let (g, glued) = surgery_instance(k, seed)?;
    let cols = ladder_columns(&glued);
    let trimmed = trim_ladder_model(&g, &glued, k + 1)?;
    let ok = verify_model(&g, &glued) && cols > k && verify_model(&g, &trimmed) && trimmed.pattern == ladder(k + 1);
    Ok(check(ok, format!("k={k}: glued {cols} columns")))
}

fn random_small_poset(n_max: usize, seed: Seed) -> Poset {
    let mut r = rng(seed ^ 0x9057);
    let n = r.gen_range(1..=n_max.clamp(1, 9));
    random_poset(n, r.gen_range(0.15..0.6), seed)
}

fn apex(n_max: usize, seed: Seed) -> Result<Case> {
    let p = random_small_poset(n_max, seed);
    let mut r = rng(seed);
    let z = *p.elements().choose(&mut r).expect("nonempty");
    let all: VertexSet = p.elements().iter().copied().collect();
    let below = p.subposet(&all.difference(&p.up_set(z)).copied().collect())?;
    let above = p.subposet(&all.difference(&p.down_set(z)).copied().collect())?;
    let (_, r_up) = dimension_exact(&below)?;
    let (_, r_down) = dimension_exact(&above)?;
    let d = r_up.len().max(r_down.len()).max(1);
    let pad = |mut x: Realizer, part: &Poset| {
        let fill = x.orders.last().cloned().unwrap_or_else(|| part.linear_extension());
        x.orders.resize(d, fill);
        x
    };
    let (r_up, r_down) = (pad(r_up, &below), pad(r_down, &above));
    let ext_u = p.subposet(&p.up_set(z))?.linear_extension();
    let ext_d = p.subposet(&p.down_set(z))?.linear_extension();
    let merged = apex_merge(&p, z, &r_up, &r_down, &ext_u, &ext_d)?;
    let ok = merged.len() == 2 * d && is_realizer(&p, &merged)?.is_valid();
    Ok(check(ok, format!("n={} z={z} d={d} merged={}", p.len(), merged.len())))
}

fn td2_dimension(n_max: usize, seed: Seed) -> Result<Case> {
    let p = random_small_poset(n_max, seed);
    let (m, _) = td2(&cover_graph(&p))?;
    let bound = (1usize << (m + 1)) - 2;
    let (dim, _) = dimension_exact(&p)?;
    let via = realizer_via_td2(&p)?;
    let ok = dim <= bound.max(1) && via.realizer.len() <= bound.max(1) && is_realizer(&p, &via.realizer)?.is_valid();
    Ok(check(ok, format!("n={} td2={m} dim={dim} via td2={} bound={bound}", p.len(), via.realizer.len())))
}

//! Small-scale checks that 3-connected graphs with many disjoint `L_k`
//! minors contain `L_{k+1}`, and campaigns running them over generated
//! graphs.

mod suites;

use std::collections::BTreeMap;
use std::ops::{Range, RangeInclusive};

use serde::Serialize;

pub use suites::{run_suite, surgery_instance, Suite, SuiteReport};

use crate::canon::canonical_graph6;
use crate::connectivity::is_k_connected;
use crate::error::Result;
use crate::generators::random_3_connected;
use crate::graph::Graph;
use crate::io::to_graph6;
use crate::minors::{
    find_ladder_model_with_budget, ladder, max_disjoint_ladders, verify_model, Decision, MinorModel, DEFAULT_NODE_BUDGET,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Consistent,
    Counterexample,
    Undecided,
}

#[derive(Clone, Debug, Serialize)]
pub struct BumpReport {
    /// Canonical graph6, equal for isomorphic inputs.
    pub fingerprint: String,
    pub graph6: String,
    pub k: usize,
    pub threshold: usize,
    pub three_connected: bool,
    /// Disjoint `L_k` models found, capped at `threshold`.
    pub packing_found: usize,
    pub ladder_kplus1: Option<MinorModel>,
    /// The packing itself, kept only for counterexamples.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub packing: Vec<MinorModel>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl BumpReport {
    /// Re-checks every certificate the report carries against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let models_ok = self.ladder_kplus1.iter().chain(&self.packing).all(|m| verify_model(g, m));
        let kplus1_ok = self.ladder_kplus1.as_ref().is_none_or(|m| m.pattern == ladder(self.k + 1));
        let packing_ok = self.packing.iter().all(|m| m.pattern == ladder(self.k));
        let counter_ok = self.verdict != Verdict::Counterexample
            || (self.three_connected && self.packing_found >= self.threshold && self.ladder_kplus1.is_none());
        models_ok && kplus1_ok && packing_ok && counter_ok
    }
}

pub fn bump_check(g: &Graph, k: usize, threshold: usize) -> Result<BumpReport> {
    bump_check_with_budget(g, k, threshold, DEFAULT_NODE_BUDGET)
}

/// Runs the 3-connectivity test, the disjoint `L_k` packing and the
/// `L_{k+1}` search. A counterexample is only reported after an uncapped
/// rerun of the `L_{k+1}` search also comes back empty.
pub fn bump_check_with_budget(g: &Graph, k: usize, threshold: usize, budget: u64) -> Result<BumpReport> {
    let mut notes = Vec::new();
    let three_connected = is_k_connected(g, 3);
    if !three_connected {
        notes.push("not 3-connected: hypothesis fails".to_string());
    }
    let (packing_found, packing_models, packing_open) = match max_disjoint_ladders(g, k, threshold, budget)? {
        Decision::Found(ms) => (ms.len(), ms, false),
        Decision::Absent => (0, Vec::new(), false),
        Decision::Undecided(why) => {
            notes.push(format!("packing undecided: {why}"));
            (0, Vec::new(), true)
        }
    };
    if !packing_open && packing_found < threshold {
        notes.push(format!("{packing_found} disjoint L_{k} models, below the threshold {threshold}"));
    }
    let (ladder_kplus1, ladder_open) = match find_ladder_model_with_budget(g, k + 1, budget)? {
        Decision::Found(sm) => (Some(sm.to_minor_model(g)?), false),
        Decision::Absent => (None, false),
        Decision::Undecided(why) => {
            notes.push(format!("L_{} search undecided: {why}", k + 1));
            (None, true)
        }
    };
    let hypothesis = three_connected && packing_found >= threshold;
    let verdict = if ladder_kplus1.is_some() || (!hypothesis && !packing_open) || !three_connected {
        Verdict::Consistent
    } else if packing_open || ladder_open {
        Verdict::Undecided
    } else {
        match find_ladder_model_with_budget(g, k + 1, u64::MAX)? {
            Decision::Absent => Verdict::Counterexample,
            _ => {
                notes.push("uncapped rerun contradicts the capped search".to_string());
                Verdict::Undecided
            }
        }
    };
    let report = BumpReport {
        fingerprint: canonical_graph6(g)?,
        graph6: to_graph6(g),
        k,
        threshold,
        three_connected,
        packing_found,
        ladder_kplus1,
        packing: if verdict == Verdict::Counterexample { packing_models } else { Vec::new() },
        verdict,
        notes,
    };
    if !report.verify(g) {
        return Err(crate::error::Error::internal("bump report failed verification"));
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub n_range: RangeInclusive<usize>,
    pub k: usize,
    pub threshold: usize,
    pub seeds: Range<u64>,
    pub budget: u64,
    pub jobs: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CampaignSummary {
    pub generated: usize,
    pub distinct: usize,
    pub hypothesis_met: usize,
    pub consistent: usize,
    pub counterexample: usize,
    pub undecided: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Campaign {
    pub reports: Vec<BumpReport>,
    pub summary: CampaignSummary,
}

impl Campaign {
    /// One report per line, in fingerprint order.
    pub fn to_json_lines(&self) -> String {
        self.reports.iter().map(|r| serde_json::to_string(r).expect("reports serialize") + "\n").collect()
    }
}

/// Checks `random_3_connected(n, seed)` for every `n` and seed.
pub fn bump_campaign(cfg: &CampaignConfig) -> Result<Campaign> {
    let graphs = cfg.seeds.clone().flat_map(|s| cfg.n_range.clone().map(move |n| random_3_connected(n, s)));
    bump_campaign_over(graphs, cfg.k, cfg.threshold, cfg.budget, cfg.jobs)
}

/// Checks each distinct graph once; reports come out sorted by fingerprint
/// whatever the number of worker threads.
pub fn bump_campaign_over(
    graphs: impl IntoIterator<Item = Graph>,
    k: usize,
    threshold: usize,
    budget: u64,
    jobs: usize,
) -> Result<Campaign> {
    let mut generated = 0;
    let mut distinct: BTreeMap<String, Graph> = BTreeMap::new();
    for g in graphs {
        generated += 1;
        distinct.entry(canonical_graph6(&g)?).or_insert(g);
    }
    let work: Vec<&Graph> = distinct.values().collect();
    let jobs = jobs.max(1).min(work.len().max(1));
    let chunk = work.len().div_ceil(jobs).max(1);
    let results: Vec<Result<Vec<BumpReport>>> = std::thread::scope(|s| {
        let handles: Vec<_> = work
            .chunks(chunk)
            .map(|part| s.spawn(move || part.iter().map(|g| bump_check_with_budget(g, k, threshold, budget)).collect()))
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut reports = Vec::new();
    for r in results {
        reports.extend(r?);
    }
    let mut summary = CampaignSummary { generated, distinct: reports.len(), ..Default::default() };
    for r in &reports {
        summary.hypothesis_met += usize::from(r.three_connected && r.packing_found >= threshold);
        match r.verdict {
            Verdict::Consistent => summary.consistent += 1,
            Verdict::Counterexample => summary.counterexample += 1,
            Verdict::Undecided => summary.undecided += 1,
        }
    }
    Ok(Campaign { reports, summary })
}

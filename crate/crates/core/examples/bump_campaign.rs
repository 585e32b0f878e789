//! Sweeps generated 3-connected graphs, checking that many disjoint `L_k`
//! minors force an `L_{k+1}` minor.
//!
//! cargo run --release --example bump_campaign -- [k] [threshold] [n_max] [seeds]

use ladderkit::experiments::{bump_campaign, CampaignConfig};
use ladderkit::minors::DEFAULT_NODE_BUDGET;

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("numeric arguments")).collect();
    let arg = |i: usize, default: usize| args.get(i).copied().unwrap_or(default);
    let cfg = CampaignConfig {
        n_range: 4..=arg(2, 10),
        k: arg(0, 1),
        threshold: arg(1, 2),
        seeds: 0..arg(3, 50) as u64,
        budget: DEFAULT_NODE_BUDGET,
        jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let start = std::time::Instant::now();
    let campaign = bump_campaign(&cfg).expect("campaign runs");
    for r in campaign.reports.iter().take(5) {
        println!("{} packing={} L_{}={} {:?}", r.graph6, r.packing_found, cfg.k + 1, r.ladder_kplus1.is_some(), r.verdict);
    }
    println!("{}", serde_json::to_string_pretty(&campaign.summary).unwrap());
    println!("{:.1}s", start.elapsed().as_secs_f64());
}

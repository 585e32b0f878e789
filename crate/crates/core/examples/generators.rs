//! Graph families and a minor check against a path of `K4`s.
//!
//! cargo run --example generators

use ladderkit::generators::{kelly_cover_graph, path_of_k4s, random_3_connected, subdivide, unavoidable_candidate_check, SubdivisionPlan};
use ladderkit::io::{to_dot, to_graph6};
use ladderkit::minors::ladder;

fn main() -> ladderkit::Result<()> {
    let g = path_of_k4s(2);
    println!("path of two K4s: {} vertices, {} edges, graph6 {}", g.vertex_count(), g.edge_count(), to_graph6(&g));
    for k in 2..=4 {
        let found = unavoidable_candidate_check(&ladder(k), 3)?;
        println!("L_{k} is a minor of a path of three K4s: {}", found.is_found());
    }
    let s = subdivide(&ladder(3), &SubdivisionPlan::Random { seed: 4, max: 2 })?;
    println!("subdivided L_3: {}", to_graph6(&s));
    println!("random 3-connected: {}", to_graph6(&random_3_connected(9, 11)));
    println!("{}", to_dot(&kelly_cover_graph(3), None));
    Ok(())
}

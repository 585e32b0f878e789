//! Ladder minor search: the largest ladder in a graph, a verified model, and
//! a packing of disjoint small ladders.
//!
//! cargo run --example ladder_minors

use ladderkit::generators::{prism, random_3_connected, wheel};
use ladderkit::minors::{disjoint_ladder_packing, max_ladder_order_with_budget, verify_model, DEFAULT_NODE_BUDGET};

fn main() -> ladderkit::Result<()> {
    for (name, g) in [("prism 5", prism(5)), ("wheel 6", wheel(6)), ("random 3-connected, 10", random_3_connected(10, 7))] {
        let (k, sm) = max_ladder_order_with_budget(&g, DEFAULT_NODE_BUDGET)?;
        print!("{name}: largest ladder L_{k}");
        if let Some(sm) = sm {
            let m = sm.to_minor_model(&g)?;
            assert!(verify_model(&g, &m));
            println!(", rails {:?} / {:?}", sm.p1.vertices(), sm.p2.vertices());
        } else {
            println!();
        }
    }
    let g = prism(6);
    let packing = disjoint_ladder_packing(&g, 2, 2)?;
    println!("prism 6 has two disjoint L_2: {}", packing.is_found());
    Ok(())
}

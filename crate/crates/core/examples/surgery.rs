//! Two subdivided ladders joined by two paths: a rooted half ladder is cut
//! from each and the halves are glued into a longer ladder.
//!
//! cargo run --example surgery

use ladderkit::experiments::surgery_instance;
use ladderkit::minors::{ladder_columns, trim_ladder_model, verify_model};

fn main() -> ladderkit::Result<()> {
    for (k, seed) in [(2, 1), (3, 2), (5, 3), (6, 4)] {
        let (g, glued) = surgery_instance(k, seed)?;
        let trimmed = trim_ladder_model(&g, &glued, k + 1)?;
        println!(
            "k={k}: host has {} vertices, glued ladder has {} columns, trimmed to L_{} (verified {})",
            g.vertex_count(),
            ladder_columns(&glued),
            k + 1,
            verify_model(&g, &trimmed)
        );
    }
    Ok(())
}

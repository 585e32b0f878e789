//! Either a ladder minor or a bounded td2 coloring; either a ladder or a
//! rooted ladder; a violated cycle for a 2-coloring of a subdivided ladder;
//! and monotone subsequences.
//!
//! cargo run --example extraction

use ladderkit::colorings::{Coloring, ColoringKind};
use ladderkit::extraction::{chi_cc_refutation, erdos_szekeres, ladder_or_td2_certificate, lk_or_rooted_lt};
use ladderkit::generators::{ladder, path_of_k4s, random_two_connected, subdivide, SubdivisionPlan};
use ladderkit::minors::subdivision_structure;

fn main() -> ladderkit::Result<()> {
    for k in [2, 3, 4] {
        let g = path_of_k4s(3);
        let out = ladder_or_td2_certificate(&g, k)?;
        println!("path of K4s, k={k}: {} (verified {})", out.kind(), out.verify(&g)?);
    }

    let g = random_two_connected(9, 5, 3);
    let out = lk_or_rooted_lt(&g, 0, 1, 3, 1)?;
    println!("ladder or rooted ladder: {} (verified {})", out.kind(), out.verify(&g)?);

    let h = subdivide(&ladder(16), &SubdivisionPlan::Random { seed: 1, max: 1 })?;
    let sm = subdivision_structure(&h)?.expect("a subdivided ladder");
    let col = Coloring::new(h.vertices().map(|v| (v, 1 + v % 2)).collect(), ColoringKind::CycleCentered);
    let r = chi_cc_refutation(&h, &sm, &col)?;
    println!("2-coloring of a subdivided L_16 fails on {:?} (verified {})", r.cycle, r.verify(&h, &col));

    let seq = [5, 1, 9, 3, 7, 2, 8, 4, 6, 0];
    let m = erdos_szekeres(&seq, 4)?.expect("10 > 3 * 3");
    println!("{seq:?}: monotone {:?} increasing={}", m.indices.iter().map(|&i| seq[i]).collect::<Vec<_>>(), m.increasing);
    Ok(())
}

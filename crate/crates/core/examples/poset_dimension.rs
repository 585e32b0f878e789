//! Exact dimension with a realizer, and the realizer built from a td2
//! coloring of the cover graph, on standard examples and Kelly posets.
//!
//! cargo run --example poset_dimension

use ladderkit::colorings::td2;
use ladderkit::posets::{cover_graph, dimension_exact_with, kelly_poset, realizer_via_td2_with, Poset};

fn main() -> ladderkit::Result<()> {
    let posets = [
        ("S3", Poset::standard_example(3)),
        ("S4", Poset::standard_example(4)),
        ("Kelly 3", kelly_poset(3)),
        ("Kelly 4", kelly_poset(4)),
    ];
    for (name, p) in &posets {
        let (d, r) = dimension_exact_with(p, 14)?;
        let (m, _) = td2(&cover_graph(p))?;
        println!("{name}: {} elements, dim {d}, td2 of cover graph {m}", p.len());
        println!("  first order {:?}", r.orders[0]);
        match realizer_via_td2_with(p, 14) {
            Ok(via) => println!("  via td2: {} orders, bound {}", via.realizer.len(), via.bound),
            Err(e) => println!("  via td2: {e}"),
        }
    }
    Ok(())
}

//! Exact treedepth, td2 and chi_cc on a few small graphs, with the
//! colorings that attain them.
//!
//! cargo run --example colorings

use ladderkit::colorings::{chi_cc, is_td2_coloring, td2, treedepth};
use ladderkit::generators::{complete, cycle, ladder, path, wheel};

fn main() -> ladderkit::Result<()> {
    let graphs = [
        ("P7", path(7)),
        ("C6", cycle(6)),
        ("K4", complete(4)),
        ("W5", wheel(5)),
        ("L4", ladder(4)),
    ];
    println!("{:<4} {:>3} {:>4} {:>7}", "", "td", "td2", "chi_cc");
    for (name, g) in &graphs {
        let (td, _, _) = treedepth(g)?;
        let (t2, col) = td2(g)?;
        let (cc, _) = chi_cc(g)?;
        assert!(is_td2_coloring(g, &col)?.is_valid());
        println!("{name:<4} {td:>3} {t2:>4} {cc:>7}");
    }
    let (_, col) = td2(&ladder(4))?;
    println!("td2 coloring of L4: {:?}", col.assignment);
    Ok(())
}

//! Blocks and cutvertices, Menger paths or separators, and contractible
//! edges in a 3-connected graph.
//!
//! cargo run --example connectivity

use ladderkit::connectivity::{block_tree, halin_deg3_endpoint, menger, MengerOutcome};
use ladderkit::generators::{prism, wheel};
use ladderkit::{Graph, VertexSet};

fn main() -> ladderkit::Result<()> {
    // two triangles joined through vertex 2, plus a pendant edge
    let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5)])?;
    let tree = block_tree(&g);
    println!("blocks {:?}, cutvertices {:?}", tree.blocks, tree.cutvertices);

    let p = prism(4);
    let (a, b) = (VertexSet::from([0, 1]), VertexSet::from([4, 5]));
    for t in [1, 2] {
        match menger(&p, &a, &b, t)? {
            MengerOutcome::Paths(ps) => println!("t={t}: {} disjoint paths {:?}", ps.len(), ps),
            MengerOutcome::Separator(s) => println!("t={t}: separator {s:?}"),
        }
    }

    let w = wheel(5);
    for e in [(0, 1), (1, 2)] {
        println!("wheel edge {e:?}: {:?}", halin_deg3_endpoint(&w, e)?);
    }
    Ok(())
}

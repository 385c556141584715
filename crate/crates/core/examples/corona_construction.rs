//! Building `G ∘ (H_1, ..., H_n)` and checking the block form of its Laplacian.
//!
//!     cargo run --example corona_construction

use coronawalk::corona::{corona, corona_laplacian_blocks, parse_satellite_spec, CoronaVertex};
use coronawalk::graph::{build_named, Family};

fn main() -> coronawalk::Result<()> {
    let g = build_named(Family::Path, 3)?;
    let hs = parse_satellite_spec("empty:2, complete:2, path:2", g.n())?;
    let c = corona(&g, &hs)?;
    println!(
        "P3 ∘ (O2, K2, P2): {} vertices, {} edges, m = {}",
        c.flat().n(),
        c.flat().edge_count(),
        c.m()
    );
    for (idx, label) in c.flat().labels() {
        let v = c.vertex(*idx);
        let role = if v.offset == 0 { "hub" } else { "satellite" };
        println!(
            "  {idx:>2} {label:<6} {role:<9} degree {}",
            c.flat().degrees()[*idx]
        );
    }
    let blocks = corona_laplacian_blocks(&g, &hs)?;
    println!(
        "block assembly equals the flat Laplacian: {}",
        blocks == c.flat().laplacian()
    );
    println!(
        "hub of base vertex 2 is flat index {}",
        c.index(CoronaVertex::hub(2))
    );
    Ok(())
}

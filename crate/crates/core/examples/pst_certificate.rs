//! Certifying or refuting Laplacian perfect state transfer.
//!
//!     cargo run --example pst_certificate

use coronawalk::graph::{build_named, parse_graph_spec, Family};
use coronawalk::spectral::eigendecompose;
use coronawalk::transfer::check_pst;

fn main() -> coronawalk::Result<()> {
    for (spec, u, v) in [
        ("k2", 0, 1),
        ("q2", 0, 3),
        ("q3", 0, 7),
        ("cp2", 0, 2),
        ("p3", 0, 2),
        ("cp3", 0, 3),
    ] {
        let g = parse_graph_spec(spec)?;
        let d = eigendecompose(&g.laplacian(), None)?;
        let r = check_pst(&d, u, v)?;
        match (r.pst, r.t0_over_pi, r.fidelity_at_t0) {
            (true, Some(t), Some(f)) => println!(
                "{spec:<4} ({u},{v}) PST at t0 = π/{:.0}, fidelity {f:.12}",
                1.0 / t
            ),
            _ => println!(
                "{spec:<4} ({u},{v}) no PST: {:?} support {:?}",
                r.conditions, r.support
            ),
        }
    }
    let q4 = build_named(Family::Hypercube, 4)?;
    let r = check_pst(&eigendecompose(&q4.laplacian(), None)?, 0, 15)?;
    println!("Q4 antipodes: pst = {}, gcd = {:?}", r.pst, r.gcd);
    Ok(())
}

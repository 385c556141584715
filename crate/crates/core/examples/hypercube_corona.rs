//! From PST in the base to PGST in the corona: `Q2` has PST between
//! antipodes with support gcd 2 (`r = 1`), and `4 | m + 1` for `m = 3`, so
//! `Q2 ∘ H` is searched on `t = (4ℓ + 1)π`.
//!
//!     cargo run --example hypercube_corona

use coronawalk::corona_spectrum::corona_spectrum;
use coronawalk::graph::{build_named, Family, Graph};
use coronawalk::spectral::eigendecompose;
use coronawalk::transfer::{check_pgst_hypothesis, pgst_search, PgstFamily};
use num_complex::Complex64;

fn main() -> coronawalk::Result<()> {
    let g = build_named(Family::Hypercube, 2)?;
    let hs = vec![
        build_named(Family::Empty, 3)?,
        build_named(Family::Path, 3)?,
        Graph::from_edges(3, [(0, 1)])?,
        build_named(Family::Complete, 3)?,
    ];
    let base = eigendecompose(&g.laplacian(), None)?;
    for m in [1, 3, 7] {
        let h = check_pgst_hypothesis(&base, 1, m)?;
        println!(
            "m = {m}: PST partner {:?}, r = {:?}, 2^(r+1) | m+1: {}",
            h.pst_pair, h.r, h.divisibility_ok
        );
    }

    let cs = corona_spectrum(&g, &hs)?;
    let s = pgst_search(&cs, &base, 1, 2, PgstFamily::Shifted { r: 1 }, 10_000, 0.99)?;
    let phase = Complex64::from_polar(1.0, -s.best.t * (cs.m as f64 + 1.0) / 2.0);
    println!(
        "hubs 1 -> 2: fidelity {:.9} at t = {}π (ℓ = {}), global phase {:.2e} from 1",
        s.best.fidelity,
        s.best.t_over_pi,
        s.best.ell,
        (phase - 1.0).norm()
    );
    for rec in &s.history {
        println!("  ℓ = {:<4} fidelity {:.6}", rec.ell, rec.fidelity);
    }
    Ok(())
}

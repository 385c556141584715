//! Pretty good state transfer between the centres of the double star
//! `K2 ∘ O_m` at times `t = 4πℓ`.
//!
//!     cargo run --example double_star_pgst

use coronawalk::corona_spectrum::corona_spectrum;
use coronawalk::graph::{build_named, Family};
use coronawalk::spectral::eigendecompose;
use coronawalk::transfer::{pgst_search, PgstFamily};

fn main() -> coronawalk::Result<()> {
    let g = build_named(Family::Complete, 2)?;
    let base = eigendecompose(&g.laplacian(), None)?;
    for target in [0.99, 0.999, 0.9999] {
        println!("target {target}");
        for m in 1..=6 {
            let hs = vec![build_named(Family::Empty, m)?; 2];
            let cs = corona_spectrum(&g, &hs)?;
            let s = pgst_search(&cs, &base, 0, 1, PgstFamily::FourPiEll, 1_000_000, target)?;
            let r = s
                .best
                .residuals
                .iter()
                .map(|r| format!("{:.1e}", r.distance))
                .collect::<Vec<_>>();
            println!(
                "  m = {m}: ℓ = {:<6} t = {:>8}π  fidelity {:.9}  cosine residuals {}",
                s.best.ell,
                s.best.t_over_pi,
                s.best.fidelity,
                r.join(", ")
            );
        }
    }
    Ok(())
}

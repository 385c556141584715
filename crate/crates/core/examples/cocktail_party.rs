//! The cocktail party graph: antipodal sign structure of its adjacency
//! eigenprojectors, and PGST between antipodal hubs of `CP(n) ∘ K1`.
//!
//!     cargo run --example cocktail_party

use coronawalk::corona_spectrum::SpectrumClass;
use coronawalk::graph::{build_named, Family};
use coronawalk::transfer::{antipodal_deviations, cocktail_corona, cocktail_pgst};

fn main() -> coronawalk::Result<()> {
    for n in 2..=8 {
        let dev = antipodal_deviations(&build_named(Family::CocktailParty, n)?)?;
        let dev: Vec<String> = dev.iter().map(|d| format!("{d:.1e}")).collect();
        println!("CP({n}) |A2 E_j - (-1)^j E_j| = {}", dev.join(", "));
    }
    println!();
    for n in 2..=5 {
        let (_, cs, _) = cocktail_corona(n)?;
        let parts: Vec<u64> = cs
            .class_c()
            .filter_map(|c| match c {
                SpectrumClass::C {
                    lambda,
                    split: Some(s),
                    ..
                } if *lambda > 0.5 => Some(s.c),
                _ => None,
            })
            .collect();
        let s = cocktail_pgst(n, 100_000, 0.99)?;
        println!(
            "CP({n}) ∘ K1: square-free parts {parts:?}; fidelity {:.6} at t = {}π",
            s.best.fidelity, s.best.t_over_pi
        );
    }
    Ok(())
}

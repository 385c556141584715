//! No corona with a connected base has Laplacian PST; this prints the
//! non-integer eigenvalue that rules it out.
//!
//!     cargo run --example no_pst_witness

use coronawalk::corona::corona;
use coronawalk::graph::{build_named, parse_graph_spec, Family};
use coronawalk::spectral::eigendecompose;
use coronawalk::transfer::{check_pst, corona_no_pst_witness, NonIntegrality};

fn main() -> coronawalk::Result<()> {
    for (spec, m) in [("k2", 1), ("k2", 6), ("q2", 3), ("p3", 2), ("c5", 1)] {
        let g = parse_graph_spec(spec)?;
        let w = corona_no_pst_witness(&g, m, 0)?;
        let why = match w.reason {
            NonIntegrality::NonSquareDelta { delta_sq, split } => {
                format!("Δ² = {delta_sq} = {}²·{} is not a square", split.s, split.c)
            }
            NonIntegrality::NonIntegralBaseEigenvalue => "λ itself is irrational".to_string(),
        };
        println!(
            "{spec} with m = {m}: λ = {:.6} gives λ± = {:.6}, {:.6}; {why}",
            w.lambda, w.lambda_plus, w.lambda_minus
        );
    }

    let g = build_named(Family::Hypercube, 2)?;
    let c = corona(&g, &vec![build_named(Family::Complete, 1)?; 4])?;
    let d = eigendecompose(&c.flat().laplacian(), None)?;
    let dim = c.flat().n();
    let certified = (0..dim)
        .flat_map(|u| (u + 1..dim).map(move |v| (u, v)))
        .filter(|&(u, v)| check_pst(&d, u, v).map(|r| r.pst).unwrap_or(false))
        .count();
    println!(
        "Q2 ∘ K1: {certified} of {} vertex pairs have PST",
        dim * (dim - 1) / 2
    );
    Ok(())
}

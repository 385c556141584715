//! Closed-form corona spectrum, checked against a direct eigensolve.
//!
//!     cargo run --example corona_spectrum

use coronawalk::corona::corona_laplacian_blocks;
use coronawalk::corona_spectrum::{corona_eigenprojectors, corona_spectrum, SpectrumClass};
use coronawalk::graph::{build_named, Family, Graph};
use coronawalk::spectral::eigendecompose;

fn main() -> coronawalk::Result<()> {
    let g = build_named(Family::Hypercube, 2)?;
    let hs = vec![
        build_named(Family::Empty, 3)?,
        build_named(Family::Path, 3)?,
        Graph::from_edges(3, [(0, 1)])?,
        build_named(Family::Complete, 3)?,
    ];
    let cs = corona_spectrum(&g, &hs)?;
    for class in &cs.classes {
        match class {
            SpectrumClass::A {
                value,
                multiplicity,
                satellites,
            } => {
                println!("(a) {value} x{multiplicity} from satellites {satellites:?}")
            }
            SpectrumClass::B {
                mu,
                value,
                multiplicity,
                ..
            } => {
                println!("(b) μ = {mu:.4} -> {value:.4} x{multiplicity}")
            }
            SpectrumClass::C {
                lambda,
                lambda_plus,
                lambda_minus,
                split,
                ..
            } => {
                let split = split
                    .map(|s| format!("Δ² = {}·{}²", s.c, s.s))
                    .unwrap_or_default();
                let lambda = if lambda.abs() < 1e-9 { 0.0 } else { *lambda };
                println!("(c) λ = {lambda:.4} -> {lambda_minus:.6}, {lambda_plus:.6}  {split}")
            }
        }
    }
    println!(
        "total multiplicity {} = n(m+1) = {}",
        cs.total_multiplicity(),
        g.n() * (cs.m + 1)
    );

    let closed = corona_eigenprojectors(&g, &hs)?;
    let direct = eigendecompose(&corona_laplacian_blocks(&g, &hs)?, None)?;
    let worst = (0..closed.len())
        .map(|i| (closed.projector(i) - direct.projector(i)).amax())
        .fold(0.0, f64::max);
    println!(
        "{} distinct eigenvalues; max projector difference {worst:.2e}",
        closed.len()
    );
    Ok(())
}

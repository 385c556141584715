//! Eigenprojectors, eigenvalue supports and strong cospectrality.
//!
//!     cargo run --example spectral_decomposition

use coronawalk::graph::{build_named, Family};
use coronawalk::spectral::{eigendecompose, eigenvalue_support, strongly_cospectral};

fn main() -> coronawalk::Result<()> {
    let p4 = build_named(Family::Path, 4)?;
    let d = eigendecompose(&p4.laplacian(), None)?;
    println!("P4 Laplacian eigenvalues {:?}", d.eigenvalues());
    let err = (d.reconstruct() - p4.laplacian().as_matrix()).amax();
    println!("max |Σ λ F_λ - L| = {err:.2e}");

    let s = eigenvalue_support(&d, 0)?;
    println!("support of vertex 0: {:?}", s.values(&d));

    for (u, v) in [(0, 3), (0, 1), (1, 2)] {
        let r = strongly_cospectral(&d, u, v)?;
        println!(
            "({u},{v}) strongly cospectral: {} signs {:?}",
            r.strongly_cospectral, r.signs
        );
    }
    Ok(())
}

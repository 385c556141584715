//! Named graph families, their Laplacian spectra, and the JSON graph format.
//!
//!     cargo run --example graph_families

use coronawalk::graph::{build_named, parse_graph_spec, Family};
use coronawalk::spectral::eigendecompose;

fn main() -> coronawalk::Result<()> {
    for (family, size) in [
        (Family::Complete, 4),
        (Family::Path, 4),
        (Family::Cycle, 6),
        (Family::Hypercube, 3),
        (Family::CocktailParty, 3),
        (Family::Matching, 2),
        (Family::Empty, 3),
    ] {
        let g = build_named(family, size)?;
        let d = eigendecompose(&g.laplacian(), None)?;
        let spectrum: Vec<String> = d
            .eigenvalues()
            .iter()
            .zip(d.multiplicities())
            .map(|(x, k)| format!("{:.4}^{k}", if x.abs() < 1e-9 { 0.0 } else { *x }))
            .collect();
        println!(
            "{family}:{size:<2} n={:<2} edges={:<2} components={} spectrum {}",
            g.n(),
            g.edge_count(),
            g.component_count(),
            spectrum.join(" ")
        );
    }

    let c4 = parse_graph_spec("cp2")?;
    println!(
        "\ncocktail party on 4 vertices is C4: {}",
        c4 == parse_graph_spec("cycle:4")?
    );
    println!("{}", c4.to_json()?);
    Ok(())
}

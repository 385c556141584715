//! Regenerates `tests/fixtures/pgst_bounds.json`: the smallest `ℓ` at which
//! each reference corona reaches its target fidelity, with the fidelity
//! found there.
//!
//!     cargo run --release --example pgst_fixtures > tests/fixtures/pgst_bounds.json

use coronawalk::corona_spectrum::corona_spectrum;
use coronawalk::graph::{build_named, Family, Graph};
use coronawalk::spectral::eigendecompose;
use coronawalk::transfer::{cocktail_pgst, pgst_search, PgstFamily, PgstSearch};
use serde_json::json;

const ELL_MAX: u64 = 1_000_000;

fn entry(s: &PgstSearch) -> serde_json::Value {
    assert!(
        s.reached,
        "target {} not reached within {ELL_MAX}",
        s.target
    );
    json!({ "ell": s.best.ell, "fidelity": s.best.fidelity })
}

fn main() -> coronawalk::Result<()> {
    let k2 = build_named(Family::Complete, 2)?;
    let k2_base = eigendecompose(&k2.laplacian(), None)?;
    let mut double_star = Vec::new();
    for m in 1..=6 {
        let hs = vec![build_named(Family::Empty, m)?; 2];
        let cs = corona_spectrum(&k2, &hs)?;
        let s = pgst_search(&cs, &k2_base, 0, 1, PgstFamily::FourPiEll, ELL_MAX, 0.999)?;
        let mut e = entry(&s);
        e["m"] = json!(m);
        double_star.push(e);
    }

    let q2 = build_named(Family::Hypercube, 2)?;
    let hs = vec![
        build_named(Family::Empty, 3)?,
        build_named(Family::Path, 3)?,
        Graph::from_edges(3, [(0, 1)])?,
        build_named(Family::Complete, 3)?,
    ];
    let cs = corona_spectrum(&q2, &hs)?;
    let q2_base = eigendecompose(&q2.laplacian(), None)?;
    let mut hypercube = Vec::new();
    for (u, v) in [(1, 2), (0, 3)] {
        let s = pgst_search(
            &cs,
            &q2_base,
            u,
            v,
            PgstFamily::Shifted { r: 1 },
            ELL_MAX,
            0.99,
        )?;
        let mut e = entry(&s);
        e["pair"] = json!([u, v]);
        hypercube.push(e);
    }

    let mut cocktail = Vec::new();
    for n in 2..=5 {
        let mut e = entry(&cocktail_pgst(n, ELL_MAX, 0.99)?);
        e["n"] = json!(n);
        cocktail.push(e);
    }

    let out = json!({
        "double_star": { "target": 0.999, "family": "four_pi_ell", "entries": double_star },
        "hypercube_shifted": {
            "target": 0.99,
            "family": "shifted",
            "r": 1,
            "satellites": ["empty:3", "path:3", "k2+k1", "complete:3"],
            "entries": hypercube
        },
        "cocktail": { "target": 0.99, "family": "four_pi_ell", "entries": cocktail },
    });
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(())
}

//! Fixed experiment setups behind the `figures` subcommand: hub-to-hub
//! fidelity curves plus a JSON summary for each.
//!
//! - `fig2`: `Q_2 ∘ (O_3, P_3, K_2 ∪ K_1, K_3)`, shifted times `(4ℓ + 1)π`;
//! - `fig3`: the double star `K_2 ∘ O_6`, Laplacian against adjacency walk;
//! - `fig4`: `\overline{3K_2} ∘ K_1` between antipodal hubs at `4πℓ`.

use serde::{Deserialize, Serialize};

use crate::corona::CoronaGraph;
use crate::corona_spectrum::{corona_spectrum, CoronaSpectrum, SpectrumClass};
use crate::error::{invalid, Result};
use crate::graph::{build_named, Family, Graph};
use crate::numtheory::SquareFreeSplit;
use crate::spectral::{eigendecompose, SpectralDecomposition};
use crate::transfer::{
    antipodal_sign_check, check_pgst_hypothesis, cocktail_corona, pgst_search, PgstFamily,
    PgstHypothesis, PgstSearch,
};
use crate::walk::{fidelity_curve, uniform_grid, CoronaWalk, CurvePoint, WalkKind};

pub const FIGURES: [&str; 3] = ["fig2", "fig3", "fig4"];

/// Points per exported curve, end points included.
pub const CURVE_STEPS: usize = 4000;

pub const PGST_ELL_MAX: u64 = 10_000;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NamedCurve {
    pub name: String,
    pub kind: WalkKind,
    /// Flat corona indices.
    pub from: usize,
    pub to: usize,
    pub points: Vec<CurvePoint>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Figure {
    pub name: String,
    pub summary: serde_json::Value,
    #[serde(skip)]
    pub curves: Vec<NamedCurve>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Fig2Summary {
    pub base: String,
    pub satellites: Vec<String>,
    pub m: usize,
    pub white_pair: [usize; 2],
    pub grey_pair: [usize; 2],
    pub hypothesis: PgstHypothesis,
    pub white: PgstSearch,
    pub grey: PgstSearch,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Fig3Summary {
    pub m: usize,
    /// `1 + 4m`, a perfect square for `m = 6`.
    pub one_plus_four_m: u64,
    pub laplacian: PgstSearch,
    pub laplacian_best_fidelity: f64,
    pub adjacency_t_max: f64,
    pub adjacency_grid_points: usize,
    pub adjacency_max_fidelity: f64,
    pub adjacency_argmax_t: f64,
    pub adjacency_eigenvalues: Vec<f64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DeltaSplit {
    pub lambda: f64,
    pub split: Option<SquareFreeSplit>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Fig4Summary {
    pub n: usize,
    pub pair: [usize; 2],
    pub antipodal_sign_check: Vec<bool>,
    pub delta_splits: Vec<DeltaSplit>,
    pub search: PgstSearch,
}

fn hub_curve(
    name: &str,
    c: &CoronaGraph,
    cs: &CoronaSpectrum,
    base: &SpectralDecomposition,
    u: usize,
    v: usize,
    t_max: f64,
) -> Result<NamedCurve> {
    let walk = CoronaWalk { spectrum: cs, base };
    Ok(NamedCurve {
        name: name.to_string(),
        kind: WalkKind::Laplacian,
        from: c.hub(u),
        to: c.hub(v),
        points: fidelity_curve(&walk, u, v, &uniform_grid(t_max, CURVE_STEPS))?,
    })
}

fn fig2_satellites() -> Result<Vec<(String, Graph)>> {
    Ok(vec![
        ("empty:3".into(), build_named(Family::Empty, 3)?),
        ("path:3".into(), build_named(Family::Path, 3)?),
        ("k2+k1".into(), Graph::from_edges(3, [(0, 1)])?),
        ("complete:3".into(), build_named(Family::Complete, 3)?),
    ])
}

pub fn fig2() -> Result<Figure> {
    let g = build_named(Family::Hypercube, 2)?;
    let named = fig2_satellites()?;
    let hs: Vec<Graph> = named.iter().map(|(_, h)| h.clone()).collect();
    let c = CoronaGraph::new(&g, &hs)?;
    let cs = corona_spectrum(&g, &hs)?;
    let base = eigendecompose(&g.laplacian(), None)?;
    let hypothesis = check_pgst_hypothesis(&base, 1, c.m())?;
    let Some(r) = hypothesis.r.filter(|_| hypothesis.applies()) else {
        return invalid("shifted-time hypothesis fails for the fig2 setup");
    };
    let family = PgstFamily::Shifted { r };
    let white = pgst_search(&cs, &base, 1, 2, family, PGST_ELL_MAX, 0.99)?;
    let grey = pgst_search(&cs, &base, 0, 3, family, PGST_ELL_MAX, 0.99)?;
    let t_max = white.best.t.max(grey.best.t) * 1.05;
    let curves = vec![
        hub_curve("fig2_white", &c, &cs, &base, 1, 2, t_max)?,
        hub_curve("fig2_grey", &c, &cs, &base, 0, 3, t_max)?,
    ];
    let summary = Fig2Summary {
        base: "hypercube:2".into(),
        satellites: named.into_iter().map(|(s, _)| s).collect(),
        m: c.m(),
        white_pair: [1, 2],
        grey_pair: [0, 3],
        hypothesis,
        white,
        grey,
    };
    Ok(Figure {
        name: "fig2".into(),
        summary: serde_json::to_value(summary)?,
        curves,
    })
}

pub const FIG3_M: usize = 6;
pub const FIG3_T_MAX: f64 = 2000.0;
pub const FIG3_GRID_STEPS: usize = 200_000;

/// Summary and curves for the double star; the adjacency maximum is taken
/// over `FIG3_GRID_STEPS + 1` points on `[0, FIG3_T_MAX]`.
pub fn fig3_with(m: usize, laplacian_target: f64) -> Result<(Fig3Summary, Vec<NamedCurve>)> {
    let g = build_named(Family::Complete, 2)?;
    let hs = vec![build_named(Family::Empty, m)?; 2];
    let c = CoronaGraph::new(&g, &hs)?;
    let cs = corona_spectrum(&g, &hs)?;
    let base = eigendecompose(&g.laplacian(), None)?;
    let laplacian = pgst_search(
        &cs,
        &base,
        0,
        1,
        PgstFamily::FourPiEll,
        PGST_ELL_MAX,
        laplacian_target,
    )?;

    let (a, b) = (c.hub(0), c.hub(1));
    let adjacency = eigendecompose(&c.flat().adjacency(), None)?;
    let grid = uniform_grid(FIG3_T_MAX, FIG3_GRID_STEPS);
    let scan = fidelity_curve(&adjacency, a, b, &grid)?;
    let peak = scan
        .iter()
        .reduce(|best, p| if p.fidelity > best.fidelity { p } else { best })
        .expect("grid is nonempty");

    let stride = FIG3_GRID_STEPS / CURVE_STEPS;
    let laplacian_curve = fidelity_curve(
        &eigendecompose(&c.flat().laplacian(), None)?,
        a,
        b,
        &grid_every(&grid, stride),
    )?;
    let curves = vec![
        NamedCurve {
            name: "fig3_laplacian".into(),
            kind: WalkKind::Laplacian,
            from: a,
            to: b,
            points: laplacian_curve,
        },
        NamedCurve {
            name: "fig3_adjacency".into(),
            kind: WalkKind::Adjacency,
            from: a,
            to: b,
            points: scan.iter().step_by(stride).copied().collect(),
        },
    ];
    let summary = Fig3Summary {
        m,
        one_plus_four_m: 1 + 4 * m as u64,
        laplacian_best_fidelity: laplacian.best.fidelity,
        laplacian,
        adjacency_t_max: FIG3_T_MAX,
        adjacency_grid_points: grid.len(),
        adjacency_max_fidelity: peak.fidelity,
        adjacency_argmax_t: peak.t,
        adjacency_eigenvalues: adjacency.eigenvalues().to_vec(),
    };
    Ok((summary, curves))
}

fn grid_every(grid: &[f64], stride: usize) -> Vec<f64> {
    grid.iter().step_by(stride).copied().collect()
}

pub fn fig3() -> Result<Figure> {
    let (summary, curves) = fig3_with(FIG3_M, 0.999)?;
    Ok(Figure {
        name: "fig3".into(),
        summary: serde_json::to_value(summary)?,
        curves,
    })
}

pub fn fig4_with(n: usize, target: f64) -> Result<(Fig4Summary, Vec<NamedCurve>)> {
    let (c, cs, base) = cocktail_corona(n)?;
    let search = pgst_search(
        &cs,
        &base,
        0,
        n,
        PgstFamily::FourPiEll,
        PGST_ELL_MAX,
        target,
    )?;
    let delta_splits = cs
        .class_c()
        .filter_map(|class| match class {
            SpectrumClass::C { lambda, split, .. } if *lambda > 0.5 => Some(DeltaSplit {
                lambda: *lambda,
                split: *split,
            }),
            _ => None,
        })
        .collect();
    let curves = vec![hub_curve(
        "fig4",
        &c,
        &cs,
        &base,
        0,
        n,
        search.best.t * 1.05,
    )?];
    let summary = Fig4Summary {
        n,
        pair: [0, n],
        antipodal_sign_check: antipodal_sign_check(c.base())?,
        delta_splits,
        search,
    };
    Ok((summary, curves))
}

pub fn fig4() -> Result<Figure> {
    let (summary, curves) = fig4_with(3, 0.99)?;
    Ok(Figure {
        name: "fig4".into(),
        summary: serde_json::to_value(summary)?,
        curves,
    })
}

pub fn figure(name: &str) -> Result<Figure> {
    match name {
        "fig2" => fig2(),
        "fig3" => fig3(),
        "fig4" => fig4(),
        other => invalid(format!(
            "unknown figure {other:?}; expected one of {FIGURES:?}"
        )),
    }
}

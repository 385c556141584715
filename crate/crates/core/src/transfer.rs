//! Perfect and pretty good state transfer.
//!
//! [`check_pst`] certifies or refutes Laplacian PST between two vertices
//! through the characterization by strong cospectrality, an integral
//! eigenvalue support `S`, and the sign pattern of `<u|F_λ|v>` against the
//! parity of `λ / gcd(S)` (zero ignored in the gcd). The minimum PST time is
//! then `π / gcd(S)`.
//!
//! For coronas, [`corona_no_pst_witness`] exhibits an eigenvalue in the
//! support of a hub that is provably not an integer, and [`pgst_search`]
//! scans times `t = 4πℓ` or `t = (4ℓ + 2^{1-r})π` for high hub-to-hub
//! fidelity.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::corona::CoronaGraph;
use crate::corona_spectrum::{corona_delta, corona_spectrum, lambda_pm, CoronaSpectrum};
use crate::error::{invalid, Error, Result};
use crate::graph::{build_named, Family, Graph};
use crate::numtheory::{
    as_integer, corona_delta_sq, is_perfect_square, squarefree_split, support_gcd_and_valuation,
    SquareFreeSplit,
};
use crate::spectral::{
    eigendecompose, eigenvalue_support, strongly_cospectral, SpectralDecomposition,
};
use crate::walk::{evolve_element, hub_amplitude, TransitionElement};

/// `|<u|F_λ|v>|` below this makes the sign test undecidable.
pub const SIGN_TOL: f64 = 1e-10;

/// A certified PST time must reach at least `1 - PST_FIDELITY_SLACK`.
pub const PST_FIDELITY_SLACK: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PstConditions {
    pub strongly_cospectral: bool,
    pub integer_support: bool,
    pub sign_pattern_ok: bool,
}

impl PstConditions {
    pub fn all(self) -> bool {
        self.strongly_cospectral && self.integer_support && self.sign_pattern_ok
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TransferVerdict {
    pub u: usize,
    pub v: usize,
    pub pst: bool,
    pub conditions: PstConditions,
    /// Support eigenvalues of `u`, as computed.
    pub support_values: Vec<f64>,
    /// Support eigenvalues of `u` as exact integers, when they all are.
    pub support: Option<Vec<i64>>,
    pub gcd: Option<u64>,
    /// `π / gcd`, when PST holds.
    pub t0: Option<f64>,
    pub t0_over_pi: Option<f64>,
    /// `U(t0)_{uv}`, when PST holds.
    pub phase: Option<Complex64>,
    pub fidelity_at_t0: Option<f64>,
    /// First support eigenvalue found not to be an integer.
    pub witness: Option<f64>,
}

/// Decides Laplacian PST between `u` and `v`.
///
/// `d` must decompose a graph Laplacian; this is not checked.
pub fn check_pst(d: &SpectralDecomposition, u: usize, v: usize) -> Result<TransferVerdict> {
    let cospectral = strongly_cospectral(d, u, v)?;
    let support = eigenvalue_support(d, u)?;
    let support_values = support.values(d);

    let integers: Vec<Option<i64>> = support_values.iter().map(|&x| as_integer(x)).collect();
    let witness = support_values
        .iter()
        .zip(&integers)
        .find(|(_, k)| k.is_none())
        .map(|(x, _)| *x);
    let exact: Option<Vec<i64>> = integers.into_iter().collect();
    let gcd = exact
        .as_deref()
        .and_then(|s| support_gcd_and_valuation(s).ok())
        .map(|(g, _)| g);

    let sign_pattern_ok = match (exact.as_deref(), gcd) {
        (Some(ints), Some(g)) => {
            let mut ok = true;
            for (&i, &lambda) in support.support.iter().zip(ints) {
                let x = d.entry(i, u, v);
                if x.abs() < SIGN_TOL {
                    if cospectral.strongly_cospectral {
                        return Err(Error::IndeterminateVerdict {
                            lambda: d.eigenvalues()[i],
                            magnitude: x.abs(),
                        });
                    }
                    ok = false;
                    continue;
                }
                let even = (lambda.unsigned_abs() / g) % 2 == 0;
                ok &= (x > 0.0) == even;
            }
            ok
        }
        _ => false,
    };

    let conditions = PstConditions {
        strongly_cospectral: cospectral.strongly_cospectral,
        integer_support: exact.is_some(),
        sign_pattern_ok,
    };
    let pst = conditions.all();
    let (mut t0, mut phase, mut fidelity_at_t0) = (None, None, None);
    if pst {
        let g = gcd.expect("gcd exists when the sign pattern holds");
        let t = PI / g as f64;
        let e = evolve_element(d, u, v, t)?;
        if e.fidelity < 1.0 - PST_FIDELITY_SLACK {
            return Err(Error::NumericFailure(format!(
                "PST certificate for ({u}, {v}) gives fidelity {} at t0 = π/{g}",
                e.fidelity
            )));
        }
        t0 = Some(t);
        phase = e.phase;
        fidelity_at_t0 = Some(e.fidelity);
    }
    Ok(TransferVerdict {
        u,
        v,
        pst,
        conditions,
        support_values,
        support: exact,
        gcd,
        t0_over_pi: gcd.filter(|_| pst).map(|g| 1.0 / g as f64),
        t0,
        phase,
        fidelity_at_t0,
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NonIntegrality {
    /// `λ` is an integer but `(m + λ - 1)² + 4m` is not a perfect square, so
    /// both `λ±` are irrational.
    NonSquareDelta {
        delta_sq: u64,
        split: SquareFreeSplit,
    },
    /// `λ` itself is not an integer, so `λ+ + λ- = m + λ + 1` is not either.
    NonIntegralBaseEigenvalue,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NoPstWitness {
    pub base_vertex: usize,
    pub m: usize,
    /// Positive eigenvalue of `L(G)` in the support of `base_vertex`.
    pub lambda: f64,
    pub lambda_plus: f64,
    pub lambda_minus: f64,
    pub reason: NonIntegrality,
    /// Those of `λ+, λ-` that are not integers.
    pub non_integer: Vec<f64>,
    /// `<(u,0)|F_{λ±}|(u,0)>` as `[plus, minus]`.
    pub hub_weights: [f64; 2],
    /// `<(u,w)|F_{λ±}|(u,w)>` for any satellite vertex `w >= 1`, as `[plus, minus]`.
    pub satellite_weights: [f64; 2],
}

/// Weights below this do not certify support membership (`‖F e‖² = <e|F|e>`).
const WEIGHT_TOL: f64 = 1e-16;

/// Finds a non-integer eigenvalue in the support of the hub `(base_vertex, 0)`
/// (and of every satellite vertex at `base_vertex`) of `G ∘ H` for any
/// satellites of order `m`.
pub fn corona_no_pst_witness(g: &Graph, m: usize, base_vertex: usize) -> Result<NoPstWitness> {
    if g.n() < 2 {
        return invalid("no-PST witness needs a base graph on at least 2 vertices");
    }
    if !g.is_connected() {
        return invalid("no-PST witness needs a connected base graph");
    }
    if m == 0 {
        return invalid("satellite order m must be at least 1");
    }
    if base_vertex >= g.n() {
        return invalid(format!("base vertex {base_vertex} out of range"));
    }
    let d = eigendecompose(&g.laplacian(), None)?;
    let support = eigenvalue_support(&d, base_vertex)?;
    let i = *support
        .support
        .iter()
        .find(|&&i| d.eigenvalues()[i] > crate::numtheory::INTEGRALITY_TOL)
        .ok_or_else(|| {
            Error::NumericFailure(format!(
                "no positive eigenvalue in the support of {base_vertex}"
            ))
        })?;
    let lambda = d.eigenvalues()[i];
    let weight = d.entry(i, base_vertex, base_vertex);
    let (plus, minus) = lambda_pm(lambda, m);
    let mf = m as f64;
    let hub = |x: f64| x * x / (x * x + mf) * weight;
    let sat = |x: f64| weight / (x * x + mf);
    let hub_weights = [hub(1.0 - plus), hub(1.0 - minus)];
    let satellite_weights = [sat(1.0 - plus), sat(1.0 - minus)];
    if hub_weights
        .iter()
        .chain(&satellite_weights)
        .any(|&w| w <= WEIGHT_TOL)
    {
        return Err(Error::NumericFailure(format!(
            "λ± for λ = {lambda} not certified in the support of vertex {base_vertex}"
        )));
    }

    let reason = match as_integer(lambda) {
        Some(k) => {
            let delta_sq = corona_delta_sq(k as u64, m as u64);
            if is_perfect_square(delta_sq) {
                return Err(Error::NumericFailure(format!(
                    "(m + λ - 1)² + 4m = {delta_sq} is a perfect square for λ = {k}, m = {m}"
                )));
            }
            NonIntegrality::NonSquareDelta {
                delta_sq,
                split: squarefree_split(delta_sq)?,
            }
        }
        None => NonIntegrality::NonIntegralBaseEigenvalue,
    };
    let non_integer: Vec<f64> = [plus, minus]
        .into_iter()
        .filter(|&x| as_integer(x).is_none())
        .collect();
    if non_integer.is_empty() {
        return Err(Error::NumericFailure(format!(
            "λ± = ({plus}, {minus}) both look integral"
        )));
    }
    Ok(NoPstWitness {
        base_vertex,
        m,
        lambda,
        lambda_plus: plus,
        lambda_minus: minus,
        reason,
        non_integer,
        hub_weights,
        satellite_weights,
    })
}

/// Time families sampled by [`pgst_search`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum PgstFamily {
    /// `t = 4πℓ`.
    FourPiEll,
    /// `t = (4ℓ + 2^{1-r})π`.
    Shifted { r: u32 },
}

impl PgstFamily {
    /// `t / π` at step `ell`.
    pub fn t_over_pi(self, ell: u64) -> f64 {
        match self {
            PgstFamily::FourPiEll => 4.0 * ell as f64,
            PgstFamily::Shifted { r } => 4.0 * ell as f64 + 2.0_f64.powi(1 - r as i32),
        }
    }

    pub fn time(self, ell: u64) -> f64 {
        self.t_over_pi(ell) * PI
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Residual {
    pub lambda: f64,
    pub delta: f64,
    /// `cos(tΔ_λ / 2)`.
    pub cosine: f64,
    pub target: f64,
    pub distance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PgstRecord {
    #[serde(flatten)]
    pub family: PgstFamily,
    pub ell: u64,
    pub t: f64,
    pub t_over_pi: f64,
    pub fidelity: f64,
    pub phase: Option<Complex64>,
    pub residuals: Vec<Residual>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PgstSearch {
    pub u: usize,
    pub v: usize,
    pub target: f64,
    pub ell_max: u64,
    pub reached: bool,
    /// Number of `ℓ` values evaluated.
    pub evaluated: u64,
    pub best: PgstRecord,
    /// Every strict improvement of the running maximum, in `ℓ` order.
    pub history: Vec<PgstRecord>,
}

/// Cosine targets per base eigenvalue: `sign(<u|F_λ|v>)` on `4πℓ`, `+1` on the
/// shifted family.
fn cosine_targets(
    base: &SpectralDecomposition,
    u: usize,
    v: usize,
    family: PgstFamily,
) -> Vec<(usize, f64)> {
    (0..base.len())
        .filter_map(|i| {
            let x = base.entry(i, u, v);
            match family {
                PgstFamily::FourPiEll => (x.abs() >= SIGN_TOL).then(|| (i, x.signum())),
                PgstFamily::Shifted { .. } => {
                    (base.entry(i, u, u) > WEIGHT_TOL).then_some((i, 1.0))
                }
            }
        })
        .collect()
}

fn make_record(
    m: usize,
    base: &SpectralDecomposition,
    targets: &[(usize, f64)],
    family: PgstFamily,
    ell: u64,
    element: TransitionElement,
) -> PgstRecord {
    let t = element.t;
    let residuals = targets
        .iter()
        .map(|&(i, target)| {
            let lambda = base.eigenvalues()[i];
            let delta = corona_delta(lambda, m);
            let cosine = (t * delta / 2.0).cos();
            Residual {
                lambda,
                delta,
                cosine,
                target,
                distance: (cosine - target).abs(),
            }
        })
        .collect();
    PgstRecord {
        family,
        ell,
        t,
        t_over_pi: family.t_over_pi(ell),
        fidelity: element.fidelity,
        phase: element.phase,
        residuals,
    }
}

/// Scans `ℓ = 1..=ell_max` on the given time family for hub-to-hub fidelity
/// between base vertices `u` and `v`, stopping at the first `ℓ` whose
/// fidelity reaches `target`.
///
/// The shifted family requires an integral support of `u` in `G` whose gcd
/// has 2-adic valuation `r`, and `2^{r+1} | m + 1`.
pub fn pgst_search(
    cs: &CoronaSpectrum,
    base: &SpectralDecomposition,
    u: usize,
    v: usize,
    family: PgstFamily,
    ell_max: u64,
    target: f64,
) -> Result<PgstSearch> {
    if ell_max == 0 {
        return invalid("ell_max must be at least 1");
    }
    if !(0.0..1.0).contains(&target) {
        return invalid(format!("target fidelity must lie in [0, 1), got {target}"));
    }
    if u >= base.dim() || v >= base.dim() {
        return invalid(format!(
            "base vertex out of range for {} vertices",
            base.dim()
        ));
    }
    if let PgstFamily::Shifted { r } = family {
        let support = eigenvalue_support(base, u)?;
        let ints: Option<Vec<i64>> = support.values(base).into_iter().map(as_integer).collect();
        let Some(ints) = ints else {
            return invalid("shifted time family needs an integral eigenvalue support");
        };
        let (_, valuation) = support_gcd_and_valuation(&ints)?;
        if valuation != r {
            return invalid(format!(
                "support gcd has 2-adic valuation {valuation}, not r = {r}"
            ));
        }
        let modulus = 1u64 << (r + 1);
        if !(cs.m as u64 + 1).is_multiple_of(modulus) {
            return invalid(format!(
                "2^(r+1) = {modulus} does not divide m + 1 = {}",
                cs.m + 1
            ));
        }
    }

    let targets = cosine_targets(base, u, v, family);
    let mut history: Vec<PgstRecord> = Vec::new();
    let mut best_fidelity = f64::NEG_INFINITY;
    let mut reached = false;
    let mut evaluated = 0;
    for ell in 1..=ell_max {
        let t = family.time(ell);
        let amp = hub_amplitude(cs.m, base, u, v, t);
        evaluated = ell;
        let fidelity = amp.norm_sqr();
        if fidelity > best_fidelity {
            best_fidelity = fidelity;
            let element = TransitionElement::new(t, u, v, amp);
            history.push(make_record(cs.m, base, &targets, family, ell, element));
        }
        if fidelity >= target {
            reached = true;
            break;
        }
    }
    Ok(PgstSearch {
        u,
        v,
        target,
        ell_max,
        reached,
        evaluated,
        best: history.last().expect("at least one ℓ evaluated").clone(),
        history,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PgstHypothesis {
    pub u: usize,
    /// A vertex `v` with Laplacian PST from `u`, if any.
    pub pst_pair: Option<usize>,
    pub gcd: Option<u64>,
    /// 2-adic valuation of the support gcd of `u`, if the support is integral.
    pub r: Option<u32>,
    /// `2^{r+1} | m + 1`.
    pub divisibility_ok: bool,
}

impl PgstHypothesis {
    /// Both the PST partner and the divisibility hold, so the shifted family applies.
    pub fn applies(&self) -> bool {
        self.pst_pair.is_some() && self.divisibility_ok
    }
}

pub fn check_pgst_hypothesis(
    base: &SpectralDecomposition,
    u: usize,
    m: usize,
) -> Result<PgstHypothesis> {
    let support = eigenvalue_support(base, u)?;
    let ints: Option<Vec<i64>> = support.values(base).into_iter().map(as_integer).collect();
    let gr = ints.and_then(|s| support_gcd_and_valuation(&s).ok());
    let pst_pair = (0..base.dim()).filter(|&v| v != u).find(|&v| {
        check_pst(base, u, v)
            .map(|verdict| verdict.pst)
            .unwrap_or(false)
    });
    let divisibility_ok = gr.is_some_and(|(_, r)| (m as u64 + 1).is_multiple_of(1u64 << (r + 1)));
    Ok(PgstHypothesis {
        u,
        pst_pair,
        gcd: gr.map(|(g, _)| g),
        r: gr.map(|(_, r)| r),
        divisibility_ok,
    })
}

/// Maximum deviation allowed in `A_2 E_j = (-1)^j E_j`.
pub const ANTIPODAL_TOL: f64 = 1e-9;

/// For a cocktail party graph on `2n` vertices with antipodes `i <-> i + n`,
/// checks `‖A_2 E_j - (-1)^j E_j‖_max <= 1e-9` for the adjacency
/// eigenprojectors `E_j` ordered by descending eigenvalue, where `A_2` is the
/// adjacency matrix of the antipodal matching.
pub fn antipodal_sign_check(g: &Graph) -> Result<Vec<bool>> {
    Ok(antipodal_deviations(g)?
        .into_iter()
        .map(|dev| dev <= ANTIPODAL_TOL)
        .collect())
}

/// The deviations `‖A_2 E_j - (-1)^j E_j‖_max` behind [`antipodal_sign_check`].
pub fn antipodal_deviations(g: &Graph) -> Result<Vec<f64>> {
    let n = g.n() / 2;
    if n == 0 || !g.n().is_multiple_of(2) || g.unlabeled() != build_named(Family::CocktailParty, n)?
    {
        return invalid("graph is not a cocktail party graph with antipodes (i, i + n)");
    }
    let d = eigendecompose(&g.adjacency(), None)?;
    let a2 = build_named(Family::Matching, n)?.adjacency().into_matrix();
    Ok(d.projectors()
        .iter()
        .rev()
        .enumerate()
        .map(|(j, e)| {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            (&a2 * e - e * sign).amax()
        })
        .collect())
}

/// Cocktail party corona `\overline{nK_2} ∘ K_1`, its closed-form spectrum,
/// and the base decomposition.
pub fn cocktail_corona(n: usize) -> Result<(CoronaGraph, CoronaSpectrum, SpectralDecomposition)> {
    let g = build_named(Family::CocktailParty, n)?;
    let hs = vec![build_named(Family::Complete, 1)?; g.n()];
    let c = CoronaGraph::new(&g, &hs)?;
    let cs = corona_spectrum(&g, &hs)?;
    let base = eigendecompose(&g.laplacian(), None)?;
    Ok((c, cs, base))
}

/// PGST search on `\overline{nK_2} ∘ K_1` between the hubs of the antipodal
/// pair `(0, n)` at times `t = 4πℓ`.
pub fn cocktail_pgst(n: usize, ell_max: u64, target: f64) -> Result<PgstSearch> {
    if n < 2 {
        return invalid("cocktail party corona search needs n >= 2");
    }
    let (_, cs, base) = cocktail_corona(n)?;
    pgst_search(&cs, &base, 0, n, PgstFamily::FourPiEll, ell_max, target)
}

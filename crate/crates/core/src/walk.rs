//! Continuous-time quantum walks `U(t) = exp(-itM)` evaluated through a
//! spectral decomposition, and the closed-form hub-to-hub transition element
//! of a corona.

use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::corona_spectrum::{corona_delta, CoronaSpectrum};
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, SymmetricMatrix};
use crate::spectral::SpectralDecomposition;

/// Below this fidelity the phase of a transition element is left undefined.
pub const PHASE_FIDELITY_FLOOR: f64 = 1e-24;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WalkKind {
    #[default]
    Laplacian,
    Adjacency,
}

impl WalkKind {
    pub fn matrix(self, g: &Graph) -> SymmetricMatrix {
        match self {
            WalkKind::Laplacian => g.laplacian(),
            WalkKind::Adjacency => g.adjacency(),
        }
    }
}

impl FromStr for WalkKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "laplacian" => Ok(WalkKind::Laplacian),
            "adjacency" => Ok(WalkKind::Adjacency),
            other => invalid(format!("unknown walk kind {other:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransitionElement {
    pub t: f64,
    pub u: usize,
    pub v: usize,
    pub value: Complex64,
    pub fidelity: f64,
    /// `value / |value|`, `None` when the fidelity is below [`PHASE_FIDELITY_FLOOR`].
    pub phase: Option<Complex64>,
}

impl TransitionElement {
    pub fn new(t: f64, u: usize, v: usize, value: Complex64) -> Self {
        let fidelity = value.norm_sqr();
        let phase = (fidelity >= PHASE_FIDELITY_FLOOR).then(|| value / value.norm());
        Self {
            t,
            u,
            v,
            value,
            fidelity,
            phase,
        }
    }
}

fn unit(angle: f64) -> Complex64 {
    Complex64::from_polar(1.0, angle)
}

/// `U(t)_{uv} = Σ_λ e^{-iλt} <u|F_λ|v>`.
pub fn evolve_element(
    d: &SpectralDecomposition,
    u: usize,
    v: usize,
    t: f64,
) -> Result<TransitionElement> {
    if u >= d.dim() || v >= d.dim() {
        return invalid(format!("vertex out of range for dimension {}", d.dim()));
    }
    let value = d
        .eigenvalues()
        .iter()
        .enumerate()
        .map(|(i, &lambda)| unit(-lambda * t) * d.entry(i, u, v))
        .sum();
    Ok(TransitionElement::new(t, u, v, value))
}

/// The full unitary `U(t) = Σ_λ e^{-iλt} F_λ`.
pub fn unitary(d: &SpectralDecomposition, t: f64) -> DMatrix<Complex64> {
    let mut out = DMatrix::<Complex64>::zeros(d.dim(), d.dim());
    for (lambda, f) in d.eigenvalues().iter().zip(d.projectors()) {
        let phase = unit(-lambda * t);
        out.zip_apply(f, |acc, x| *acc += phase * x);
    }
    out
}

/// Transition element between hubs `(u, 0)` and `(v, 0)` of a corona, from
/// the spectrum of the base graph alone:
///
/// `e^{-it(m+1)/2} Σ_λ e^{-itλ/2} <u|F_λ(G)|v> (cos(tΔ_λ/2) - i (m+λ-1)/Δ_λ sin(tΔ_λ/2))`.
///
/// `u` and `v` are base-graph vertices; the returned element carries them as given.
pub fn corona_transition_element(
    cs: &CoronaSpectrum,
    base: &SpectralDecomposition,
    u: usize,
    v: usize,
    t: f64,
) -> Result<TransitionElement> {
    if u >= base.dim() || v >= base.dim() {
        return invalid(format!(
            "base vertex out of range for {} vertices",
            base.dim()
        ));
    }
    Ok(TransitionElement::new(
        t,
        u,
        v,
        hub_amplitude(cs.m, base, u, v, t),
    ))
}

pub(crate) fn hub_amplitude(
    m: usize,
    base: &SpectralDecomposition,
    u: usize,
    v: usize,
    t: f64,
) -> Complex64 {
    let mf = m as f64;
    let sum: Complex64 = base
        .eigenvalues()
        .iter()
        .enumerate()
        .map(|(i, &lambda)| {
            let delta = corona_delta(lambda, m);
            let half = t * delta / 2.0;
            let factor = Complex64::new(half.cos(), -(mf + lambda - 1.0) / delta * half.sin());
            unit(-t * lambda / 2.0) * base.entry(i, u, v) * factor
        })
        .sum();
    unit(-t * (mf + 1.0) / 2.0) * sum
}

/// Anything that can produce the transition element `U(t)_{uv}`.
pub trait TransitionSource {
    fn transition(&self, u: usize, v: usize, t: f64) -> Result<TransitionElement>;
}

impl TransitionSource for SpectralDecomposition {
    fn transition(&self, u: usize, v: usize, t: f64) -> Result<TransitionElement> {
        evolve_element(self, u, v, t)
    }
}

/// Closed-form hub-to-hub walk on a corona; vertices are base vertices.
pub struct CoronaWalk<'a> {
    pub spectrum: &'a CoronaSpectrum,
    pub base: &'a SpectralDecomposition,
}

impl TransitionSource for CoronaWalk<'_> {
    fn transition(&self, u: usize, v: usize, t: f64) -> Result<TransitionElement> {
        corona_transition_element(self.spectrum, self.base, u, v, t)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub t: f64,
    pub fidelity: f64,
    pub phase: Option<Complex64>,
}

/// Evaluates the walk at every time of `grid`, in grid order.
pub fn fidelity_curve<S: TransitionSource + ?Sized>(
    source: &S,
    u: usize,
    v: usize,
    grid: &[f64],
) -> Result<Vec<CurvePoint>> {
    if grid.is_empty() {
        return invalid("time grid is empty");
    }
    if let Some(t) = grid.iter().find(|t| !t.is_finite()) {
        return invalid(format!("time grid contains non-finite value {t}"));
    }
    grid.iter()
        .map(|&t| {
            let e = source.transition(u, v, t)?;
            Ok(CurvePoint {
                t,
                fidelity: e.fidelity,
                phase: e.phase,
            })
        })
        .collect()
}

/// `steps + 1` evenly spaced times from `0` to `t_max` inclusive.
pub fn uniform_grid(t_max: f64, steps: usize) -> Vec<f64> {
    if steps == 0 {
        return vec![0.0];
    }
    (0..=steps)
        .map(|k| t_max * k as f64 / steps as f64)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corona::corona;
    use crate::corona_spectrum::{corona_eigenprojectors, corona_spectrum};
    use crate::graph::{build_named, Family};
    use crate::spectral::eigendecompose;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn decompose(g: &Graph) -> SpectralDecomposition {
        eigendecompose(&g.laplacian(), None).unwrap()
    }

    #[test]
    fn identity_at_time_zero() {
        let d = decompose(&build_named(Family::Path, 4).unwrap());
        for u in 0..4 {
            let e = evolve_element(&d, u, u, 0.0).unwrap();
            assert_abs_diff_eq!(e.value.re, 1.0, epsilon = 1e-12);
            assert_abs_diff_eq!(e.value.im, 0.0, epsilon = 1e-12);
            assert_abs_diff_eq!(e.fidelity, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn k2_pst_at_half_pi() {
        let d = decompose(&build_named(Family::Complete, 2).unwrap());
        // ½(1 - e^{-iπ}) = 1
        let e = evolve_element(&d, 0, 1, PI / 2.0).unwrap();
        assert_abs_diff_eq!(e.value.re, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(e.value.im, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(e.fidelity, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn k2_curve_is_sin_squared() {
        let d = decompose(&build_named(Family::Complete, 2).unwrap());
        let grid = uniform_grid(10.0, 200);
        let curve = fidelity_curve(&d, 0, 1, &grid).unwrap();
        assert_eq!(curve.len(), 201);
        for p in curve {
            assert_abs_diff_eq!(p.fidelity, p.t.sin().powi(2), epsilon = 1e-12);
        }
    }

    #[test]
    fn empty_graph_curve_is_constant() {
        let d = decompose(&Graph::new(3));
        let curve = fidelity_curve(&d, 1, 1, &uniform_grid(50.0, 10)).unwrap();
        assert!(curve.iter().all(|p| (p.fidelity - 1.0).abs() < 1e-15));
        assert!(fidelity_curve(&d, 0, 0, &[]).is_err());
        assert!(fidelity_curve(&d, 0, 0, &[f64::NAN]).is_err());
    }

    #[test]
    fn rows_have_unit_norm() {
        let d = decompose(&build_named(Family::Cycle, 5).unwrap());
        for t in [0.3, 1.7, 12.0] {
            let total: f64 = (0..5)
                .map(|v| evolve_element(&d, 2, v, t).unwrap().fidelity)
                .sum();
            assert_abs_diff_eq!(total, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn closed_form_matches_full_corona() {
        let g = build_named(Family::Complete, 2).unwrap();
        let hs = vec![build_named(Family::Empty, 3).unwrap(); 2];
        let c = corona(&g, &hs).unwrap();
        let full = corona_eigenprojectors(&g, &hs).unwrap();
        let cs = corona_spectrum(&g, &hs).unwrap();
        let base = decompose(&g);
        for k in 0..50 {
            let t = 0.37 * k as f64;
            for (u, v) in [(0, 0), (0, 1), (1, 0)] {
                let a = corona_transition_element(&cs, &base, u, v, t).unwrap();
                let b = evolve_element(&full, c.hub(u), c.hub(v), t).unwrap();
                assert!((a.value - b.value).norm() < 1e-12, "t={t}");
            }
        }
    }

    #[test]
    fn double_star_at_four_pi_ell() {
        // t = 4πℓ, h = 2πℓΔ_2: ½ - ½ cos h + i (m+1)/(2Δ_2) sin h
        for m in 1..=6 {
            let g = build_named(Family::Complete, 2).unwrap();
            let hs = vec![build_named(Family::Empty, m).unwrap(); 2];
            let cs = corona_spectrum(&g, &hs).unwrap();
            let base = decompose(&g);
            let delta2 = corona_delta(2.0, m);
            for ell in 1..=20 {
                let t = 4.0 * PI * ell as f64;
                let e = corona_transition_element(&cs, &base, 0, 1, t).unwrap();
                let half = t * delta2 / 2.0;
                let expected = Complex64::new(
                    0.5 - 0.5 * half.cos(),
                    0.5 * (m as f64 + 1.0) / delta2 * half.sin(),
                );
                assert!((e.value - expected).norm() < 1e-9, "m={m} ℓ={ell}");
            }
        }
    }

    #[test]
    fn phase_undefined_for_zero_amplitude() {
        let e = TransitionElement::new(0.0, 0, 1, Complex64::new(0.0, 0.0));
        assert!(e.phase.is_none());
        let e = TransitionElement::new(0.0, 0, 1, Complex64::new(0.0, -2.0));
        assert_abs_diff_eq!(e.phase.unwrap().im, -1.0, epsilon = 1e-15);
    }
}

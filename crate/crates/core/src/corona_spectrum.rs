//! Closed-form spectrum and eigenprojectors of `G ∘ (H_1, ..., H_n)` built
//! from the spectral decompositions of `G` and of each satellite.
//!
//! Three classes of eigenvalues appear:
//!
//! - **(a)** `1`, once for every extra component of a disconnected satellite,
//!   with projector blocks `F_0(H_l) - J_m / m`;
//! - **(b)** `μ + 1` for every nonzero satellite eigenvalue `μ`, with
//!   projector blocks `F_μ(H_l)` on the satellite rows;
//! - **(c)** `λ± = (m + λ + 1 ± Δ_λ) / 2` for every eigenvalue `λ` of `G`, with
//!   `Δ_λ = √((m + λ - 1)² + 4m)` and projector
//!   `F_λ(G) ⊗ [[x², x 1ᵀ], [x 1, J_m]] / (x² + m)` where `x = 1 - λ±`.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::corona::corona_laplacian_blocks;
use crate::error::Result;
use crate::graph::Graph;
use crate::numtheory::{as_integer, corona_delta_sq, squarefree_split, SquareFreeSplit};
use crate::spectral::{default_cluster_tol, eigendecompose, SpectralDecomposition};

/// `Δ_λ = √((m + λ - 1)² + 4m)`.
pub fn corona_delta(lambda: f64, m: usize) -> f64 {
    let m = m as f64;
    ((m + lambda - 1.0).powi(2) + 4.0 * m).sqrt()
}

/// `(λ+, λ-)` with `λ± = (m + λ + 1 ± Δ_λ) / 2`.
pub fn lambda_pm(lambda: f64, m: usize) -> (f64, f64) {
    let delta = corona_delta(lambda, m);
    let s = m as f64 + lambda + 1.0;
    ((s + delta) / 2.0, (s - delta) / 2.0)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum SpectrumClass {
    /// Eigenvalue `1` from disconnected satellites.
    A {
        value: f64,
        multiplicity: usize,
        satellites: Vec<usize>,
    },
    /// Eigenvalue `μ + 1` for a nonzero satellite eigenvalue `μ`.
    B {
        mu: f64,
        value: f64,
        multiplicity: usize,
        satellites: Vec<usize>,
    },
    /// The pair `λ±` for an eigenvalue `λ` of the base graph.
    C {
        lambda: f64,
        lambda_plus: f64,
        lambda_minus: f64,
        delta: f64,
        multiplicity: usize,
        /// `Δ_λ²`, exact, when `λ` is an integer.
        #[serde(skip_serializing_if = "Option::is_none")]
        delta_sq: Option<u64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        split: Option<SquareFreeSplit>,
    },
}

impl SpectrumClass {
    /// `(eigenvalue, multiplicity)` pairs contributed by this class.
    pub fn eigenvalues(&self) -> Vec<(f64, usize)> {
        match *self {
            SpectrumClass::A {
                value,
                multiplicity,
                ..
            }
            | SpectrumClass::B {
                value,
                multiplicity,
                ..
            } => vec![(value, multiplicity)],
            SpectrumClass::C {
                lambda_plus,
                lambda_minus,
                multiplicity,
                ..
            } => vec![(lambda_minus, multiplicity), (lambda_plus, multiplicity)],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoronaSpectrum {
    /// Order of the base graph.
    pub n: usize,
    /// Common satellite order.
    pub m: usize,
    pub classes: Vec<SpectrumClass>,
}

impl CoronaSpectrum {
    pub fn has_class_a(&self) -> bool {
        self.classes
            .iter()
            .any(|c| matches!(c, SpectrumClass::A { .. }))
    }

    pub fn class_c(&self) -> impl Iterator<Item = &SpectrumClass> {
        self.classes
            .iter()
            .filter(|c| matches!(c, SpectrumClass::C { .. }))
    }

    pub fn total_multiplicity(&self) -> usize {
        self.classes
            .iter()
            .flat_map(SpectrumClass::eigenvalues)
            .map(|(_, k)| k)
            .sum()
    }

    /// Every eigenvalue repeated by multiplicity, ascending.
    pub fn eigenvalue_list(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self
            .classes
            .iter()
            .flat_map(SpectrumClass::eigenvalues)
            .flat_map(|(x, k)| std::iter::repeat_n(x, k))
            .collect();
        out.sort_by(f64::total_cmp);
        out
    }
}

struct FactorSpectra {
    m: usize,
    base: SpectralDecomposition,
    satellites: Vec<SpectralDecomposition>,
    dim: usize,
    tol: f64,
}

impl FactorSpectra {
    fn compute(g: &Graph, hs: &[Graph]) -> Result<Self> {
        let blocks = corona_laplacian_blocks(g, hs)?;
        let m = hs[0].n();
        Ok(Self {
            m,
            base: eigendecompose(&g.laplacian(), None)?,
            satellites: hs
                .iter()
                .map(|h| eigendecompose(&h.laplacian(), None))
                .collect::<Result<_>>()?,
            dim: blocks.dim(),
            tol: default_cluster_tol(&blocks),
        })
    }

    /// Index of the zero eigenvalue of a satellite Laplacian.
    fn zero_index(&self, d: &SpectralDecomposition) -> Option<usize> {
        d.find(0.0, self.tol)
    }
}

/// The closed-form eigenvalue classes of the corona.
pub fn corona_spectrum(g: &Graph, hs: &[Graph]) -> Result<CoronaSpectrum> {
    let f = FactorSpectra::compute(g, hs)?;
    let mut classes = Vec::new();

    let mut class_a_mult = 0;
    let mut disconnected = Vec::new();
    let mut nonzero: Vec<(f64, usize, usize)> = Vec::new();
    for (l, d) in f.satellites.iter().enumerate() {
        let zero = f.zero_index(d);
        for i in 0..d.len() {
            if Some(i) == zero {
                let extra = d.multiplicities()[i].saturating_sub(1);
                if extra > 0 {
                    class_a_mult += extra;
                    disconnected.push(l);
                }
            } else {
                nonzero.push((d.eigenvalues()[i], d.multiplicities()[i], l));
            }
        }
    }
    if class_a_mult > 0 {
        classes.push(SpectrumClass::A {
            value: 1.0,
            multiplicity: class_a_mult,
            satellites: disconnected,
        });
    }

    nonzero.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut groups: Vec<Vec<(f64, usize, usize)>> = Vec::new();
    for entry in nonzero {
        match groups.last_mut() {
            Some(group) if entry.0 - group.last().unwrap().0 <= f.tol => group.push(entry),
            _ => groups.push(vec![entry]),
        }
    }
    for group in groups {
        let multiplicity: usize = group.iter().map(|e| e.1).sum();
        let mu = group.iter().map(|e| e.0 * e.1 as f64).sum::<f64>() / multiplicity as f64;
        let mut satellites: Vec<usize> = group.iter().map(|e| e.2).collect();
        satellites.dedup();
        classes.push(SpectrumClass::B {
            mu,
            value: mu + 1.0,
            multiplicity,
            satellites,
        });
    }

    for (i, &lambda) in f.base.eigenvalues().iter().enumerate() {
        let (lambda_plus, lambda_minus) = lambda_pm(lambda, f.m);
        let (delta_sq, split) = match as_integer(lambda).filter(|&k| k >= 0) {
            Some(k) => {
                let dsq = corona_delta_sq(k as u64, f.m as u64);
                (Some(dsq), Some(squarefree_split(dsq)?))
            }
            None => (None, None),
        };
        classes.push(SpectrumClass::C {
            lambda,
            lambda_plus,
            lambda_minus,
            delta: corona_delta(lambda, f.m),
            multiplicity: f.base.multiplicities()[i],
            delta_sq,
            split,
        });
    }

    Ok(CoronaSpectrum {
        n: g.n(),
        m: f.m,
        classes,
    })
}

/// `F_λ(G) ⊗ [[x², x 1ᵀ], [x 1, J_m]] / (x² + m)` with `x = 1 - λ±`.
fn class_c_projector(base_proj: &DMatrix<f64>, x: f64, m: usize) -> DMatrix<f64> {
    let block = m + 1;
    let n = base_proj.nrows();
    let scale = 1.0 / (x * x + m as f64);
    DMatrix::from_fn(n * block, n * block, |i, j| {
        let (a, wa) = (i / block, i % block);
        let (b, wb) = (j / block, j % block);
        let local = match (wa, wb) {
            (0, 0) => x * x,
            (0, _) | (_, 0) => x,
            _ => 1.0,
        };
        scale * base_proj[(a, b)] * local
    })
}

/// Places `local` (an `m x m` matrix) on the satellite rows of base vertex `l`.
fn satellite_block(dim: usize, m: usize, l: usize, local: &DMatrix<f64>) -> DMatrix<f64> {
    let offset = l * (m + 1) + 1;
    let mut out = DMatrix::zeros(dim, dim);
    out.view_mut((offset, offset), (m, m)).copy_from(local);
    out
}

/// Full eigenprojectors of the corona Laplacian from the closed forms.
/// Classes landing on the same eigenvalue are merged into one eigenspace.
pub fn corona_eigenprojectors(g: &Graph, hs: &[Graph]) -> Result<SpectralDecomposition> {
    let f = FactorSpectra::compute(g, hs)?;
    let m = f.m;
    let mut parts: Vec<(f64, DMatrix<f64>)> = Vec::new();

    let j_over_m = DMatrix::from_element(m, m, 1.0 / m as f64);
    for (l, d) in f.satellites.iter().enumerate() {
        let zero = f.zero_index(d);
        for i in 0..d.len() {
            if Some(i) == zero {
                if d.multiplicities()[i] > 1 {
                    let local = d.projector(i) - &j_over_m;
                    parts.push((1.0, satellite_block(f.dim, m, l, &local)));
                }
            } else {
                let value = d.eigenvalues()[i] + 1.0;
                parts.push((value, satellite_block(f.dim, m, l, d.projector(i))));
            }
        }
    }

    for (i, &lambda) in f.base.eigenvalues().iter().enumerate() {
        let (plus, minus) = lambda_pm(lambda, m);
        for value in [plus, minus] {
            parts.push((
                value,
                class_c_projector(f.base.projector(i), 1.0 - value, m),
            ));
        }
    }

    Ok(SpectralDecomposition::from_parts(f.dim, parts, f.tol))
}

/// Spectrum of the homogeneous corona `G ∘ H` via the classical list:
/// `1` with multiplicity `n(r'_0 - 1)`, `μ_j + 1` with multiplicity `n r'_j`,
/// and `(λ_j + m + 1 ± √((λ_j + m + 1)² - 4λ_j)) / 2` with multiplicity `r_j`
/// for every eigenvalue `λ_j` of `G` including `λ_0 = 0`.
///
/// Returns `(eigenvalue, multiplicity)` pairs, ascending, without merging.
pub fn homogeneous_corona_spectrum(g: &Graph, h: &Graph) -> Result<Vec<(f64, usize)>> {
    let dg = eigendecompose(&g.laplacian(), None)?;
    let dh = eigendecompose(&h.laplacian(), None)?;
    let n = g.n();
    let m = h.n() as f64;
    let mut out = Vec::new();
    for (i, &mu) in dh.eigenvalues().iter().enumerate() {
        let r = dh.multiplicities()[i];
        if i == 0 {
            if r > 1 {
                out.push((1.0, n * (r - 1)));
            }
        } else {
            out.push((mu + 1.0, n * r));
        }
    }
    for (j, &lambda) in dg.eigenvalues().iter().enumerate() {
        let s = lambda + m + 1.0;
        let root = (s * s - 4.0 * lambda).sqrt();
        let r = dg.multiplicities()[j];
        out.push(((s - root) / 2.0, r));
        out.push(((s + root) / 2.0, r));
    }
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(out)
}

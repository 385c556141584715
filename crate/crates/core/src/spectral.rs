//! Spectral decomposition `M = Σ λ F_λ` over distinct eigenvalues, eigenvalue
//! supports, and strong cospectrality.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::SymmetricMatrix;

/// A vertex `u` has `λ` in its support when `‖F_λ e_u‖` exceeds this.
pub const SUPPORT_TOL: f64 = 1e-8;

/// Threshold on `min_σ ‖F_λ e_u - σ F_λ e_v‖` for strong cospectrality.
pub const COSPECTRAL_TOL: f64 = 1e-8;

/// `‖Σ λ F_λ - M‖_max` above `RECONSTRUCTION_TOL * max(1, ‖M‖_max)` rejects
/// the eigensolver output.
pub const RECONSTRUCTION_TOL: f64 = 1e-10;

/// Relative clustering gap used when no explicit tolerance is given.
pub const DEFAULT_RELATIVE_CLUSTER_TOL: f64 = 1e-8;

/// `1e-8 * max(1, ‖m‖_max)`.
pub fn default_cluster_tol(m: &SymmetricMatrix) -> f64 {
    DEFAULT_RELATIVE_CLUSTER_TOL * m.max_abs().max(1.0)
}

#[derive(Clone, Debug)]
pub struct SpectralDecomposition {
    dim: usize,
    eigenvalues: Vec<f64>,
    projectors: Vec<DMatrix<f64>>,
    multiplicities: Vec<usize>,
}

impl SpectralDecomposition {
    /// Assembles a decomposition from `(eigenvalue, projector)` pieces that may
    /// repeat eigenvalues. Pieces whose eigenvalues lie within `cluster_tol` of
    /// their sorted neighbour (single linkage) are summed into one eigenspace;
    /// the merged eigenvalue is the trace-weighted mean.
    pub fn from_parts(dim: usize, mut parts: Vec<(f64, DMatrix<f64>)>, cluster_tol: f64) -> Self {
        parts.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut eigenvalues = Vec::new();
        let mut projectors: Vec<DMatrix<f64>> = Vec::new();
        let mut weights: Vec<f64> = Vec::new();
        let mut sums: Vec<f64> = Vec::new();
        let mut last: Option<f64> = None;
        for (value, proj) in parts {
            let rank = proj.trace().max(f64::MIN_POSITIVE);
            match last {
                Some(prev) if value - prev <= cluster_tol => {
                    let k = projectors.len() - 1;
                    projectors[k] += &proj;
                    weights[k] += rank;
                    sums[k] += rank * value;
                }
                _ => {
                    projectors.push(proj);
                    weights.push(rank);
                    sums.push(rank * value);
                }
            }
            last = Some(value);
        }
        for (s, w) in sums.iter().zip(&weights) {
            eigenvalues.push(s / w);
        }
        let multiplicities = projectors
            .iter()
            .map(|p| p.trace().round().max(0.0) as usize)
            .collect();
        Self {
            dim,
            eigenvalues,
            projectors,
            multiplicities,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of distinct eigenvalues.
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Distinct eigenvalues, strictly ascending.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn projectors(&self) -> &[DMatrix<f64>] {
        &self.projectors
    }

    pub fn projector(&self, i: usize) -> &DMatrix<f64> {
        &self.projectors[i]
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// `<u|F_i|v>`.
    pub fn entry(&self, i: usize, u: usize, v: usize) -> f64 {
        self.projectors[i][(u, v)]
    }

    /// `Σ λ_i F_i`.
    pub fn reconstruct(&self) -> DMatrix<f64> {
        let mut out = DMatrix::zeros(self.dim, self.dim);
        for (lambda, f) in self.eigenvalues.iter().zip(&self.projectors) {
            out += f * *lambda;
        }
        out
    }

    /// Index of the eigenvalue closest to `value`, if within `tol`.
    pub fn find(&self, value: f64, tol: f64) -> Option<usize> {
        self.eigenvalues
            .iter()
            .enumerate()
            .map(|(i, x)| (i, (x - value).abs()))
            .filter(|&(_, d)| d <= tol)
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .map(|(i, _)| i)
    }

    fn check_vertex(&self, u: usize) -> Result<()> {
        if u >= self.dim {
            return invalid(format!(
                "vertex {u} out of range for dimension {}",
                self.dim
            ));
        }
        Ok(())
    }

    fn column(&self, i: usize, u: usize) -> DVector<f64> {
        self.projectors[i].column(u).into_owned()
    }
}

/// Eigendecomposition of a symmetric matrix into distinct eigenvalues and
/// orthogonal eigenprojectors. `cluster_tol` defaults to
/// [`default_cluster_tol`].
pub fn eigendecompose(
    m: &SymmetricMatrix,
    cluster_tol: Option<f64>,
) -> Result<SpectralDecomposition> {
    let tol = cluster_tol.unwrap_or_else(|| default_cluster_tol(m));
    if tol.is_nan() || tol <= 0.0 {
        return invalid(format!("cluster tolerance must be positive, got {tol}"));
    }
    let dim = m.dim();
    if dim == 0 {
        return Ok(SpectralDecomposition::from_parts(0, Vec::new(), tol));
    }
    let eig = m
        .as_matrix()
        .clone()
        .try_symmetric_eigen(f64::EPSILON, 1000 * dim)
        .ok_or_else(|| Error::NumericFailure("symmetric eigensolver did not converge".into()))?;
    let parts = eig
        .eigenvalues
        .iter()
        .enumerate()
        .map(|(k, &lambda)| {
            let v = eig.eigenvectors.column(k);
            (lambda, v * v.transpose())
        })
        .collect();
    let d = SpectralDecomposition::from_parts(dim, parts, tol);
    let residual = (d.reconstruct() - m.as_matrix()).amax();
    if residual > RECONSTRUCTION_TOL * m.max_abs().max(1.0) {
        return Err(Error::NumericFailure(format!(
            "eigendecomposition reconstructs the matrix only to {residual:e}"
        )));
    }
    Ok(d)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SupportInfo {
    pub vertex: usize,
    /// Indices into [`SpectralDecomposition::eigenvalues`].
    pub support: Vec<usize>,
    /// `<u|F_λ|u>` for every eigenvalue, in eigenvalue order.
    pub weights: Vec<f64>,
}

impl SupportInfo {
    pub fn values(&self, d: &SpectralDecomposition) -> Vec<f64> {
        self.support.iter().map(|&i| d.eigenvalues()[i]).collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.support.contains(&i)
    }
}

pub fn eigenvalue_support(d: &SpectralDecomposition, u: usize) -> Result<SupportInfo> {
    d.check_vertex(u)?;
    let mut support = Vec::new();
    let mut weights = Vec::with_capacity(d.len());
    for i in 0..d.len() {
        if d.column(i, u).norm() > SUPPORT_TOL {
            support.push(i);
        }
        weights.push(d.entry(i, u, u));
    }
    Ok(SupportInfo {
        vertex: u,
        support,
        weights,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn of(x: f64) -> Sign {
        if x < 0.0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CospectralityReport {
    pub u: usize,
    pub v: usize,
    pub strongly_cospectral: bool,
    /// `σ_λ` minimising `‖F_λ e_u - σ F_λ e_v‖`; `None` when both projections vanish.
    pub signs: Vec<Option<Sign>>,
    /// The minimised distance per eigenvalue.
    pub deviations: Vec<f64>,
}

pub fn strongly_cospectral(
    d: &SpectralDecomposition,
    u: usize,
    v: usize,
) -> Result<CospectralityReport> {
    d.check_vertex(u)?;
    d.check_vertex(v)?;
    if u == v {
        return invalid("strong cospectrality needs two distinct vertices");
    }
    let mut signs = Vec::with_capacity(d.len());
    let mut deviations = Vec::with_capacity(d.len());
    for i in 0..d.len() {
        let a = d.column(i, u);
        let b = d.column(i, v);
        if a.norm() <= SUPPORT_TOL && b.norm() <= SUPPORT_TOL {
            signs.push(None);
            deviations.push(0.0);
            continue;
        }
        let plus = (&a - &b).norm();
        let minus = (&a + &b).norm();
        if plus <= minus {
            signs.push(Some(Sign::Plus));
            deviations.push(plus);
        } else {
            signs.push(Some(Sign::Minus));
            deviations.push(minus);
        }
    }
    let strongly_cospectral = deviations.iter().all(|&x| x <= COSPECTRAL_TOL);
    Ok(CospectralityReport {
        u,
        v,
        strongly_cospectral,
        signs,
        deviations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, Family, Graph};
    use approx::assert_abs_diff_eq;

    fn decompose(g: &Graph) -> SpectralDecomposition {
        eigendecompose(&g.laplacian(), None).unwrap()
    }

    #[test]
    fn k2_projectors_match_hand_eigenvectors() {
        let d = decompose(&build_named(Family::Complete, 2).unwrap());
        assert_eq!(d.len(), 2);
        assert_abs_diff_eq!(d.eigenvalues()[0], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(d.eigenvalues()[1], 2.0, epsilon = 1e-12);
        // (1,1)/√2 and (1,-1)/√2
        let half_j = DMatrix::from_element(2, 2, 0.5);
        let rest = DMatrix::identity(2, 2) - &half_j;
        assert!((d.projector(0) - &half_j).amax() < 1e-12);
        assert!((d.projector(1) - &rest).amax() < 1e-12);
        assert_eq!(d.multiplicities(), &[1, 1]);
    }

    #[test]
    fn clustered_eigenvalues_reconstruct() {
        // K2 ∘ (K4 - e, C4): eigenvalue 3 three times and 5 four times
        let g = Graph::from_edges(
            10,
            [
                (0, 5),
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (5, 6),
                (5, 7),
                (5, 8),
                (5, 9),
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (6, 7),
                (6, 9),
                (7, 8),
                (8, 9),
            ],
        )
        .unwrap();
        let d = decompose(&g);
        assert!((d.reconstruct() - g.laplacian().as_matrix()).amax() < 1e-12);
        assert_eq!(d.multiplicities(), &[1, 1, 3, 4, 1]);
        for (i, f) in d.projectors().iter().enumerate() {
            assert!((f * f - f).amax() < 1e-12, "projector {i}");
        }
    }

    #[test]
    fn zero_matrix_has_identity_projector() {
        let d = eigendecompose(&SymmetricMatrix::zeros(5), None).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.eigenvalues()[0], 0.0);
        assert!((d.projector(0) - DMatrix::identity(5, 5)).amax() < 1e-12);
        assert_eq!(d.multiplicities(), &[5]);
    }

    #[test]
    fn cocktail_party_spectrum() {
        for n in 2..=6 {
            let d = decompose(&build_named(Family::CocktailParty, n).unwrap());
            let expected = [0.0, (2 * n - 2) as f64, (2 * n) as f64];
            assert_eq!(d.len(), 3);
            for (x, y) in d.eigenvalues().iter().zip(expected) {
                assert_abs_diff_eq!(*x, y, epsilon = 1e-10);
            }
            assert_eq!(d.multiplicities(), &[1, n, n - 1]);
        }
    }

    #[test]
    fn supports() {
        let k2 = decompose(&build_named(Family::Complete, 2).unwrap());
        let s = eigenvalue_support(&k2, 0).unwrap();
        assert_eq!(s.support, vec![0, 1]);
        assert_abs_diff_eq!(s.weights[0], 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(s.weights[1], 0.5, epsilon = 1e-12);

        let c4 = decompose(&build_named(Family::Hypercube, 2).unwrap());
        for u in 0..4 {
            let s = eigenvalue_support(&c4, u).unwrap();
            let vals = s.values(&c4);
            assert_eq!(vals.len(), 3);
            for (x, y) in vals.iter().zip([0.0, 2.0, 4.0]) {
                assert_abs_diff_eq!(*x, y, epsilon = 1e-10);
            }
            assert_abs_diff_eq!(s.weights.iter().sum::<f64>(), 1.0, epsilon = 1e-12);
        }

        let o3 = decompose(&Graph::new(3));
        assert_eq!(eigenvalue_support(&o3, 2).unwrap().support, vec![0]);
        assert!(eigenvalue_support(&o3, 3).is_err());
    }

    #[test]
    fn k2_vertices_strongly_cospectral_with_alternating_signs() {
        let d = decompose(&build_named(Family::Complete, 2).unwrap());
        let r = strongly_cospectral(&d, 0, 1).unwrap();
        assert!(r.strongly_cospectral);
        assert_eq!(r.signs, vec![Some(Sign::Plus), Some(Sign::Minus)]);
    }

    #[test]
    fn p3_endpoints_strongly_cospectral() {
        // eigenvectors of L(P3): 0:(1,1,1)/√3, 1:(1,0,-1)/√2, 3:(1,-2,1)/√6
        let d = decompose(&build_named(Family::Path, 3).unwrap());
        for (x, y) in d.eigenvalues().iter().zip([0.0, 1.0, 3.0]) {
            assert_abs_diff_eq!(*x, y, epsilon = 1e-10);
        }
        let r = strongly_cospectral(&d, 0, 2).unwrap();
        assert!(r.strongly_cospectral);
        assert_eq!(
            r.signs,
            vec![Some(Sign::Plus), Some(Sign::Minus), Some(Sign::Plus)]
        );
        assert_abs_diff_eq!(d.entry(1, 0, 2), -0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(d.entry(2, 0, 2), 1.0 / 6.0, epsilon = 1e-12);
    }

    #[test]
    fn k3_vertices_not_strongly_cospectral() {
        let d = decompose(&build_named(Family::Complete, 3).unwrap());
        assert_eq!(d.multiplicities(), &[1, 2]);
        // F_3 = I - J/3: ‖F_3(e_0 - e_1)‖ = √2, ‖F_3(e_0 + e_1)‖ = √(2/3)
        let f3 = DMatrix::identity(3, 3) - DMatrix::from_element(3, 3, 1.0 / 3.0);
        assert!((d.projector(1) - &f3).amax() < 1e-12);
        let r = strongly_cospectral(&d, 0, 1).unwrap();
        assert!(!r.strongly_cospectral);
        assert_abs_diff_eq!(r.deviations[1], (2.0_f64 / 3.0).sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn cospectrality_is_symmetric() {
        let d = decompose(&build_named(Family::Path, 5).unwrap());
        for u in 0..5 {
            for v in 0..5 {
                if u == v {
                    continue;
                }
                let a = strongly_cospectral(&d, u, v).unwrap();
                let b = strongly_cospectral(&d, v, u).unwrap();
                assert_eq!(a.strongly_cospectral, b.strongly_cospectral);
                assert_eq!(a.signs, b.signs);
            }
        }
    }

    #[test]
    fn from_parts_merges_close_values() {
        let p = DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 0.0]));
        let q = DMatrix::from_diagonal(&DVector::from_vec(vec![0.0, 1.0]));
        let d = SpectralDecomposition::from_parts(2, vec![(1.0, p), (1.0 + 1e-12, q)], 1e-9);
        assert_eq!(d.len(), 1);
        assert_eq!(d.multiplicities(), &[2]);
    }

    #[test]
    fn rejects_nonpositive_tolerance() {
        assert!(eigendecompose(&SymmetricMatrix::zeros(2), Some(0.0)).is_err());
    }
}

use nalgebra::DMatrix;

use crate::error::{invalid, Result};

/// Dense real symmetric matrix.
///
/// Symmetry is exact: every constructor either mirrors the upper triangle or
/// rejects input whose `(i, j)` and `(j, i)` entries differ bit-for-bit.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricMatrix {
    inner: DMatrix<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            inner: DMatrix::zeros(dim, dim),
        }
    }

    /// Builds the matrix from `f(i, j)` evaluated on the upper triangle (`i <= j`).
    pub fn from_upper_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut inner = DMatrix::zeros(dim, dim);
        for i in 0..dim {
            for j in i..dim {
                let x = f(i, j);
                inner[(i, j)] = x;
                inner[(j, i)] = x;
            }
        }
        Self { inner }
    }

    pub fn from_dmatrix(m: DMatrix<f64>) -> Result<Self> {
        if !m.is_square() {
            return invalid(format!("matrix is {}x{}, not square", m.nrows(), m.ncols()));
        }
        for i in 0..m.nrows() {
            for j in (i + 1)..m.ncols() {
                if m[(i, j)].to_bits() != m[(j, i)].to_bits() {
                    return invalid(format!("matrix is not symmetric at ({i}, {j})"));
                }
            }
        }
        Ok(Self { inner: m })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return invalid("rows must all have length equal to the row count");
        }
        Self::from_dmatrix(DMatrix::from_fn(dim, dim, |i, j| rows[i][j]))
    }

    pub fn dim(&self) -> usize {
        self.inner.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.inner[(i, j)]
    }

    /// Sets `(i, j)` and `(j, i)` together.
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.inner[(i, j)] = value;
        self.inner[(j, i)] = value;
    }

    pub fn add_assign(&mut self, i: usize, j: usize, delta: f64) {
        let value = self.inner[(i, j)] + delta;
        self.set(i, j, value);
    }

    pub fn max_abs(&self) -> f64 {
        self.inner.iter().fold(0.0_f64, |acc, x| acc.max(x.abs()))
    }

    pub fn as_matrix(&self) -> &DMatrix<f64> {
        &self.inner
    }

    pub fn into_matrix(self) -> DMatrix<f64> {
        self.inner
    }

    pub fn row_sums(&self) -> Vec<f64> {
        self.inner.row_iter().map(|r| r.sum()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.inner
            .row_iter()
            .map(|r| r.iter().copied().collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_asymmetric_input() {
        let m = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 2.0, 0.0]);
        assert!(SymmetricMatrix::from_dmatrix(m).is_err());
    }

    #[test]
    fn rejects_non_square() {
        assert!(SymmetricMatrix::from_dmatrix(DMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn set_keeps_symmetry() {
        let mut m = SymmetricMatrix::zeros(3);
        m.set(0, 2, -1.5);
        m.add_assign(2, 0, 0.5);
        assert_eq!(m.get(0, 2), -1.0);
        assert_eq!(m.get(2, 0), -1.0);
    }
}

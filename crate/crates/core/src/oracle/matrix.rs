use std::fmt;

use crate::error::{Result, SpectrumError};

/// Dense real symmetric matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(dim: usize) -> Self {
        SymMatrix {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_diagonal(&vec![1.0; dim])
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * m.dim + i] = d;
        }
        m
    }

    /// Rejects rows that are ragged or not exactly symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != dim) {
            return Err(SpectrumError::InvalidParameter(format!(
                "row {bad} has length {}, expected {dim}",
                rows[bad].len()
            )));
        }
        for i in 0..dim {
            for j in 0..i {
                if rows[i][j].to_bits() != rows[j][i].to_bits() {
                    return Err(SpectrumError::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(SymMatrix {
            dim,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    /// Symmetrizes a square row-major buffer by averaging mirrored entries.
    pub(crate) fn symmetrized(dim: usize, mut data: Vec<f64>) -> Self {
        debug_assert_eq!(data.len(), dim * dim);
        for i in 0..dim {
            for j in 0..i {
                let avg = 0.5 * (data[i * dim + j] + data[j * dim + i]);
                data[i * dim + j] = avg;
                data[j * dim + i] = avg;
            }
        }
        SymMatrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.dim + col]
    }

    pub(crate) fn raw(&self) -> &[f64] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.dim.max(1)).take(self.dim).map(<[f64]>::to_vec).collect()
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }

    pub fn trace(&self) -> f64 {
        self.diagonal().iter().sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Frobenius norm of the strictly off-diagonal part.
    pub fn off_diagonal_norm(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i != j {
                    acc += self.get(i, j).powi(2);
                }
            }
        }
        acc.sqrt()
    }

    pub fn is_diagonal(&self) -> bool {
        self.off_diagonal_norm() == 0.0
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j).to_bits() == self.get(j, i).to_bits()))
    }

    /// `Q · A · Qᵀ` for a square row-major `q` of the same dimension.
    pub fn conjugate(&self, q: &[f64]) -> SymMatrix {
        let d = self.dim;
        assert_eq!(q.len(), d * d, "conjugating matrix has the wrong size");
        let mut qa = vec![0.0; d * d];
        for i in 0..d {
            for k in 0..d {
                let qik = q[i * d + k];
                if qik == 0.0 {
                    continue;
                }
                for j in 0..d {
                    qa[i * d + j] += qik * self.get(k, j);
                }
            }
        }
        let mut out = vec![0.0; d * d];
        for i in 0..d {
            for j in 0..d {
                out[i * d + j] = (0..d).map(|k| qa[i * d + k] * q[j * d + k]).sum();
            }
        }
        SymMatrix::symmetrized(d, out)
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SymMatrix")
            .field("dim", &self.dim)
            .field("rows", &self.rows())
            .finish()
    }
}

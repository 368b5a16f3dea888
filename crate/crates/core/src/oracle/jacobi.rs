use super::matrix::SymMatrix;
use crate::error::{Result, SpectrumError};

pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
///
/// Each sweep visits every pair `p < q` and applies the rotation that
/// annihilates `a_pq`. Iteration stops once the off-diagonal Frobenius norm
/// drops below `tol`; the diagonal is then returned in ascending order.
pub fn jacobi_eigenvalues(matrix: &SymMatrix, tol: f64) -> Result<Vec<f64>> {
    jacobi_with_limit(matrix, tol, MAX_SWEEPS)
}

fn jacobi_with_limit(matrix: &SymMatrix, tol: f64, max_sweeps: usize) -> Result<Vec<f64>> {
    if !(tol > 0.0) {
        return Err(SpectrumError::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    let n = matrix.dim();
    if matrix.raw().iter().any(|x| !x.is_finite()) {
        return Err(SpectrumError::InvalidParameter("matrix has non-finite entries".into()));
    }
    let mut a = matrix.raw().to_vec();
    let at = |a: &[f64], i: usize, j: usize| a[i * n + j];

    for _ in 0..max_sweeps {
        if off_norm(&a, n) < tol {
            return Ok(sorted_diagonal(&a, n));
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = at(&a, p, q);
                if apq == 0.0 {
                    continue;
                }
                let theta = (at(&a, q, q) - at(&a, p, p)) / (2.0 * apq);
                let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
                let t = sign / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                // a <- a · J
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                // a <- Jᵀ · a
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }

    let residual = off_norm(&a, n);
    if residual < tol {
        Ok(sorted_diagonal(&a, n))
    } else {
        Err(SpectrumError::NoConvergence {
            sweeps: max_sweeps,
            residual,
        })
    }
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[i * n + j] * a[i * n + j];
            }
        }
    }
    acc.sqrt()
}

fn sorted_diagonal(a: &[f64], n: usize) -> Vec<f64> {
    let mut d: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    d.sort_by(f64::total_cmp);
    d
}

//! Random symmetric matrices with a prescribed spectrum.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::matrix::SymMatrix;
use super::MAX_DIM;
use crate::error::{Result, SpectrumError};

/// A seeded orthogonal matrix (row-major), the product of `dim` Householder
/// reflections `I - 2vvᵀ/(vᵀv)` with Gaussian direction vectors.
pub fn random_orthogonal(dim: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut q = vec![0.0; dim * dim];
    for i in 0..dim {
        q[i * dim + i] = 1.0;
    }
    for _ in 0..dim {
        let v: Vec<f64> = (0..dim).map(|_| StandardNormal.sample(&mut rng)).collect();
        let norm2: f64 = v.iter().map(|x| x * x).sum();
        if norm2 == 0.0 {
            continue;
        }
        // q <- q · (I - 2 v vᵀ / |v|²)
        for row in 0..dim {
            let r = &mut q[row * dim..(row + 1) * dim];
            let dot: f64 = r.iter().zip(&v).map(|(a, b)| a * b).sum();
            let f = 2.0 * dot / norm2;
            for (x, vi) in r.iter_mut().zip(&v) {
                *x -= f * vi;
            }
        }
    }
    q
}

/// `Q · diag(eigs repeated by mults) · Qᵀ` with `Q` from
/// [`random_orthogonal`]. Deterministic in `seed`.
pub fn random_symmetric_with_spectrum(eigs: &[f64], mults: &[usize], seed: u64) -> Result<SymMatrix> {
    if eigs.len() != mults.len() {
        return Err(SpectrumError::LengthMismatch {
            eigs: eigs.len(),
            mults: mults.len(),
        });
    }
    if mults.contains(&0) {
        return Err(SpectrumError::ZeroMultiplicity(0));
    }
    let dim: usize = mults.iter().sum();
    if dim > MAX_DIM {
        return Err(SpectrumError::DimensionTooLarge { dim, max: MAX_DIM });
    }
    let diag: Vec<f64> = eigs
        .iter()
        .zip(mults)
        .flat_map(|(&e, &m)| std::iter::repeat_n(e, m))
        .collect();
    let q = random_orthogonal(dim, seed);
    Ok(SymMatrix::from_diagonal(&diag).conjugate(&q))
}

//! Formula-versus-matrix comparison on random instances.

use std::fmt;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::compound::{additive_compound, multiplicative_compound};
use super::householder::random_symmetric_with_spectrum;
use super::jacobi::jacobi_eigenvalues;
use super::matrix::SymMatrix;
use super::{JACOBI_TOL, MAX_DIM};
use crate::error::{Result, SpectrumError};
use crate::scalar::Scalar;
use crate::sector::{point_spectrum_nfold, Composition};
use crate::spectrum::{Multiplicity, PointSpectrum};

/// Outcome of one formula/oracle comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub formula_set: Vec<f64>,
    pub oracle_set: Vec<f64>,
    pub max_deviation: f64,
    pub matched: bool,
}

impl fmt::Display for SpectrumReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "matched={} max_deviation={:e} formula={:?} oracle={:?}",
            self.matched, self.max_deviation, self.formula_set, self.oracle_set
        )
    }
}

/// Collapses a sorted list into cluster representatives: a value starts a new
/// cluster when it is more than `tol` above the current representative.
pub fn dedup_sorted(values: &[f64], tol: f64) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::new();
    for &v in values {
        match out.last() {
            Some(&rep) if v - rep <= tol => {}
            _ => out.push(v),
        }
    }
    out
}

/// Hausdorff distance between two finite sets. Empty versus empty is 0,
/// empty versus non-empty is infinite.
pub fn hausdorff_distance(a: &[f64], b: &[f64]) -> f64 {
    match (a.is_empty(), b.is_empty()) {
        (true, true) => return 0.0,
        (true, false) | (false, true) => return f64::INFINITY,
        _ => {}
    }
    let directed = |xs: &[f64], ys: &[f64]| {
        xs.iter()
            .map(|x| ys.iter().map(|y| (x - y).abs()).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    directed(a, b).max(directed(b, a))
}

/// Matrix of the n-particle lift of `a` for the given composition.
pub fn compound(a: &SymMatrix, n: usize, mode: Composition) -> Result<SymMatrix> {
    match mode {
        Composition::Sum => additive_compound(a, n),
        Composition::Product => multiplicative_compound(a, n),
    }
}

/// Compares the exact sector formula with the diagonalized compound of a
/// random matrix that has eigenvalues `eigs` with multiplicities `mults`.
pub fn verify_sector(
    eigs: &[f64],
    mults: &[usize],
    n: usize,
    seed: u64,
    tol: f64,
    mode: Composition,
) -> Result<SpectrumReport> {
    let dim: usize = mults.iter().sum();
    if dim > MAX_DIM {
        return Err(SpectrumError::DimensionTooLarge { dim, max: MAX_DIM });
    }
    if n > dim {
        return Err(SpectrumError::SectorOutOfRange { n, dim });
    }
    if eigs.len() != mults.len() {
        return Err(SpectrumError::LengthMismatch {
            eigs: eigs.len(),
            mults: mults.len(),
        });
    }

    let entries = eigs
        .iter()
        .zip(mults)
        .map(|(&e, &m)| {
            let value = Scalar::from_f64(e)
                .ok_or_else(|| SpectrumError::InvalidParameter(format!("non-finite eigenvalue {e}")))?;
            Ok((value, Multiplicity::finite(m as u64)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let spec = PointSpectrum::new(entries)?;
    let formula_set: Vec<f64> = point_spectrum_nfold(&spec, n as u64, mode)?
        .iter()
        .map(Scalar::to_f64)
        .collect();

    let a = random_symmetric_with_spectrum(eigs, mults, seed)?;
    let lifted = compound(&a, n, mode)?;
    let raw = jacobi_eigenvalues(&lifted, JACOBI_TOL)?;
    let oracle_set = dedup_sorted(&raw, tol);

    let max_deviation = hausdorff_distance(&formula_set, &oracle_set);
    Ok(SpectrumReport {
        matched: max_deviation <= tol,
        formula_set,
        oracle_set,
        max_deviation,
    })
}

/// A random test instance of dimension `dim`: distinct integer eigenvalues
/// in `[-5, 5]` and positive multiplicities summing to `dim`. With
/// `include_zero`, `0` is forced to be one of the eigenvalues.
pub fn random_instance(dim: usize, seed: u64, include_zero: bool) -> (Vec<f64>, Vec<usize>) {
    assert!(dim >= 1, "instances need at least one dimension");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let distinct = rng.gen_range(1..=dim.min(11));

    let mut values: Vec<i64> = sample(&mut rng, 11, distinct).into_iter().map(|i| i as i64 - 5).collect();
    if include_zero && !values.contains(&0) {
        values[0] = 0;
    }

    // Composition of dim into `distinct` positive parts via sorted cut points.
    let mut cuts: Vec<usize> = if distinct > 1 {
        sample(&mut rng, dim - 1, distinct - 1).into_iter().map(|c| c + 1).collect()
    } else {
        Vec::new()
    };
    cuts.sort_unstable();
    let mut mults = Vec::with_capacity(distinct);
    let mut last = 0;
    for c in cuts.into_iter().chain(std::iter::once(dim)) {
        mults.push(c - last);
        last = c;
    }
    (values.into_iter().map(|v| v as f64).collect(), mults)
}

/// Runs `trials` independent instances of dimension `dim`. Trial `t` uses
/// seed `seed + t` for both the instance and the conjugating matrix.
pub fn verify_trials(
    dim: usize,
    n: usize,
    trials: usize,
    seed: u64,
    tol: f64,
    mode: Composition,
) -> Result<Vec<SpectrumReport>> {
    (0..trials as u64)
        .map(|t| {
            let s = seed.wrapping_add(t);
            let (eigs, mults) = random_instance(dim, s, false);
            verify_sector(&eigs, &mults, n, s, tol, mode)
        })
        .collect()
}

/// Eigenvalues of the full Fock-space lift `⊕_{n=0..d}` of `a`, sector by
/// sector, concatenated and sorted.
pub fn fock_space_eigenvalues(a: &SymMatrix, mode: Composition) -> Result<Vec<f64>> {
    let mut all = Vec::new();
    for n in 0..=a.dim() {
        all.extend(jacobi_eigenvalues(&compound(a, n, mode)?, JACOBI_TOL)?);
    }
    all.sort_by(f64::total_cmp);
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_sector_example() {
        let r = verify_sector(&[1.0, 2.0], &[1, 2], 2, 7, 1e-8, Composition::Sum).unwrap();
        assert!(r.matched, "{r}");
        assert_eq!(r.formula_set, vec![3.0, 4.0]);
        assert_eq!(r.oracle_set.len(), 2);
    }

    #[test]
    fn product_sector_with_zero() {
        let r = verify_sector(&[0.0, 1.0, 2.0], &[1, 1, 1], 2, 3, 1e-8, Composition::Product).unwrap();
        assert!(r.matched, "{r}");
        assert_eq!(r.formula_set, vec![0.0, 2.0]);
    }

    #[test]
    fn saturated_scalar_sector() {
        for d in 1..=6 {
            let r = verify_sector(&[1.5], &[d], d, 5, 1e-8, Composition::Sum).unwrap();
            assert!(r.matched, "{r}");
            assert_eq!(r.formula_set, vec![1.5 * d as f64]);
        }
    }

    #[test]
    fn preconditions() {
        assert!(verify_sector(&[1.0], &[2], 3, 0, 1e-8, Composition::Sum).is_err());
        assert!(verify_sector(&[1.0], &[13], 1, 0, 1e-8, Composition::Sum).is_err());
        assert!(verify_sector(&[1.0, 1.0], &[1, 1], 1, 0, 1e-8, Composition::Sum).is_err());
    }

    #[test]
    fn hausdorff() {
        assert_eq!(hausdorff_distance(&[], &[]), 0.0);
        assert_eq!(hausdorff_distance(&[1.0], &[]), f64::INFINITY);
        assert_eq!(hausdorff_distance(&[0.0, 1.0], &[0.0, 3.0]), 2.0);
        assert_eq!(hausdorff_distance(&[0.0], &[0.0, 0.5]), 0.5);
    }

    #[test]
    fn dedup() {
        assert_eq!(dedup_sorted(&[1.0, 1.0 + 1e-12, 2.0], 1e-8), vec![1.0, 2.0]);
        assert!(dedup_sorted(&[], 1e-8).is_empty());
    }

    #[test]
    fn instances_are_well_formed() {
        for seed in 0..200 {
            for dim in 1..=8 {
                let (eigs, mults) = random_instance(dim, seed, seed % 2 == 0);
                assert_eq!(eigs.len(), mults.len());
                assert_eq!(mults.iter().sum::<usize>(), dim);
                assert!(mults.iter().all(|&m| m > 0));
                assert!(eigs.iter().all(|&e| (-5.0..=5.0).contains(&e) && e.fract() == 0.0));
                let mut sorted = eigs.clone();
                sorted.sort_by(f64::total_cmp);
                sorted.dedup();
                assert_eq!(sorted.len(), eigs.len());
                if seed % 2 == 0 {
                    assert!(eigs.contains(&0.0));
                }
            }
        }
    }

    #[test]
    fn full_fock_space_of_two_levels() {
        let a = random_symmetric_with_spectrum(&[1.0, 2.0], &[1, 1], 9).unwrap();
        let all = fock_space_eigenvalues(&a, Composition::Sum).unwrap();
        let expected = [0.0, 1.0, 2.0, 3.0];
        assert_eq!(all.len(), 4);
        for (x, e) in all.iter().zip(expected) {
            assert!((x - e).abs() < 1e-10, "{all:?}");
        }
    }
}

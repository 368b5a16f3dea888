//! Point spectra of operators on a tensor product of distinguishable
//! factors. No exclusion constraint applies here, which is the contrast with
//! the fermionic sectors.

use std::collections::BTreeSet;

use crate::error::{Result, SpectrumError};
use crate::scalar::Scalar;
use crate::spectrum::PointSpectrum;

fn check(specs: &[PointSpectrum]) -> Result<()> {
    if specs.is_empty() {
        return Err(SpectrumError::NoFactors);
    }
    if specs.iter().any(PointSpectrum::is_empty) {
        return Err(SpectrumError::EmptySpectrum);
    }
    Ok(())
}

fn fold(specs: &[PointSpectrum], seed: Scalar, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> BTreeSet<Scalar> {
    specs.iter().fold(BTreeSet::from([seed]), |acc, spec| {
        acc.iter()
            .flat_map(|a| spec.values().map(|b| op(a, b)).collect::<Vec<_>>())
            .collect()
    })
}

/// Eigenvalues of `Σ_j I ⊗ … ⊗ A_j ⊗ … ⊗ I`: every sum `λ_1 + … + λ_n` with
/// `λ_j` an eigenvalue of the j-th factor.
pub fn tensor_point_spectrum_sum(specs: &[PointSpectrum]) -> Result<BTreeSet<Scalar>> {
    check(specs)?;
    Ok(fold(specs, Scalar::zero(), |a, b| a + b))
}

/// Eigenvalues of `A_1 ⊗ … ⊗ A_n`: every product of factor eigenvalues, plus
/// `0` when some factor has a zero eigenvalue.
pub fn tensor_point_spectrum_product(specs: &[PointSpectrum]) -> Result<BTreeSet<Scalar>> {
    check(specs)?;
    let mut out = fold(specs, Scalar::one(), |a, b| a * b);
    if specs.iter().any(|s| s.contains(&Scalar::zero())) {
        out.insert(Scalar::zero());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(entries: &[(i64, u64)]) -> PointSpectrum {
        PointSpectrum::from_integers(entries).unwrap()
    }

    fn set(values: &[i64]) -> BTreeSet<Scalar> {
        values.iter().map(|&v| Scalar::from_integer(v)).collect()
    }

    #[test]
    fn sums() {
        assert_eq!(tensor_point_spectrum_sum(&[ps(&[(1, 1)]), ps(&[(2, 1)])]).unwrap(), set(&[3]));
        let a = ps(&[(1, 1), (2, 2)]);
        assert_eq!(tensor_point_spectrum_sum(&[a.clone(), a]).unwrap(), set(&[2, 3, 4]));
        assert_eq!(tensor_point_spectrum_sum(&[ps(&[(0, 1)]), ps(&[(5, 1)])]).unwrap(), set(&[5]));
    }

    #[test]
    fn products() {
        assert_eq!(tensor_point_spectrum_product(&[ps(&[(2, 1)]), ps(&[(3, 1)])]).unwrap(), set(&[6]));
        assert_eq!(
            tensor_point_spectrum_product(&[ps(&[(0, 1), (1, 1)]), ps(&[(5, 1)])]).unwrap(),
            set(&[0, 5])
        );
        assert_eq!(tensor_point_spectrum_product(&[ps(&[(-1, 1)]), ps(&[(-1, 1)])]).unwrap(), set(&[1]));
    }

    #[test]
    fn errors() {
        assert_eq!(tensor_point_spectrum_sum(&[]), Err(SpectrumError::NoFactors));
        assert_eq!(tensor_point_spectrum_product(&[]), Err(SpectrumError::NoFactors));
        assert_eq!(
            tensor_point_spectrum_sum(&[ps(&[(1, 1)]), PointSpectrum::default()]),
            Err(SpectrumError::EmptySpectrum)
        );
    }
}

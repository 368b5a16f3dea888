//! Spectra of the second-quantized operators on the full fermionic Fock
//! space, obtained as unions over particle-number sectors.
//!
//! The union over all `n` cannot be materialized, so every operation takes a
//! mandatory sector cutoff `n_max`. [`dgamma_spectrum`] also reports whether
//! the truncated union is provably the whole answer inside the requested
//! window.

use std::collections::BTreeSet;

use crate::error::{Result, SpectrumError};
use crate::scalar::Scalar;
use crate::sector::{point_spectrum_nfold_product, point_spectrum_nfold_sum, spectrum_nfold_product, spectrum_nfold_sum};
use crate::set::RealSetUnion;
use crate::spectrum::{PointSpectrum, SpectralData};

/// Whether a truncated union over sectors `0..=n_max` is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncationReport {
    /// True when no sector above `n_max` can contribute.
    pub complete: bool,
    /// Positive lower bound of the one-particle spectrum, if there is one.
    pub delta: Option<Scalar>,
    /// Smallest cutoff for which completeness is certified, if any cutoff is.
    pub required_n_max: Option<u64>,
}

/// Spectrum of the additive second quantization: `{0} ∪ ⋃_{n=1..n_max}` of
/// the sector spectra, optionally intersected with the closed window
/// `[lo, hi]`.
///
/// Completeness is certified in two situations. If every point of the
/// one-particle spectrum is at least `δ > 0`, sector `n` lies above `n·δ`, so
/// `n_max >= ceil(hi / δ)` covers a window with upper end `hi`. If the
/// spectrum is purely discrete with total multiplicity `D`, every sector
/// above `D` is empty and `n_max >= D` covers everything.
pub fn dgamma_spectrum(
    spec: &SpectralData,
    n_max: u64,
    window: Option<(&Scalar, &Scalar)>,
) -> Result<(RealSetUnion, TruncationReport)> {
    if spec.is_empty() {
        return Err(SpectrumError::EmptySpectrum);
    }
    if let Some((lo, hi)) = window {
        if lo > hi {
            return Err(SpectrumError::InvalidInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
    }

    let mut out = RealSetUnion::singleton(Scalar::zero());
    for n in 1..=n_max {
        out = out.union(&spectrum_nfold_sum(spec, n)?);
    }
    if let Some((lo, hi)) = window {
        out = out.intersect_window(lo, hi);
    }

    let report = truncation_report(spec, n_max, window.map(|(_, hi)| hi));
    Ok((out, report))
}

fn truncation_report(spec: &SpectralData, n_max: u64, window_hi: Option<&Scalar>) -> TruncationReport {
    let delta = spec.spectrum().min().filter(|m| m.is_positive()).cloned();

    let by_gap = match (&delta, window_hi) {
        (Some(d), Some(hi)) => hi
            .checked_div(d)
            .and_then(|r| r.ceil_to_i128())
            .map(|r| r.clamp(0, u64::MAX as i128) as u64),
        _ => None,
    };
    let by_exhaustion = if spec.unconstrained_part().is_empty() {
        spec.points().total_multiplicity()
    } else {
        None
    };

    let required_n_max = match (by_gap, by_exhaustion) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    TruncationReport {
        complete: required_n_max.is_some_and(|r| n_max >= r),
        delta,
        required_n_max,
    }
}

/// Point spectrum of the additive second quantization, truncated at `n_max`.
pub fn dgamma_point_spectrum(spec: &PointSpectrum, n_max: u64) -> Result<BTreeSet<Scalar>> {
    if spec.is_empty() {
        return Err(SpectrumError::EmptySpectrum);
    }
    let mut out = BTreeSet::from([Scalar::zero()]);
    for n in 1..=n_max {
        out.extend(point_spectrum_nfold_sum(spec, n)?);
    }
    Ok(out)
}

/// Spectrum of the multiplicative second quantization `⊕_n ∧ⁿT`:
/// `{1} ∪ ⋃_{n=1..n_max}` of the sector spectra.
pub fn gamma_spectrum(spec: &SpectralData, n_max: u64) -> Result<RealSetUnion> {
    if spec.is_empty() {
        return Err(SpectrumError::EmptySpectrum);
    }
    let mut out = RealSetUnion::singleton(Scalar::one());
    for n in 1..=n_max {
        out = out.union(&spectrum_nfold_product(spec, n)?);
    }
    Ok(out)
}

/// Point spectrum of `⊕_n ∧ⁿT`, built from sector products. A zero
/// eigenvalue of `T` contributes `0` through the sectors it appears in.
pub fn gamma_point_spectrum(spec: &PointSpectrum, n_max: u64) -> Result<BTreeSet<Scalar>> {
    if spec.is_empty() {
        return Err(SpectrumError::EmptySpectrum);
    }
    let mut out = BTreeSet::from([Scalar::one()]);
    for n in 1..=n_max {
        out.extend(point_spectrum_nfold_product(spec, n)?);
    }
    Ok(out)
}

//! Spectra of the n-particle fermionic operators.
//!
//! For a one-particle operator `T`, the n-particle sector carries two lifts:
//! the additive one, acting as `T` on each slot and summing (its eigenvalues
//! are sums `λ_1 + … + λ_n`), and the multiplicative one, the n-th exterior
//! power `∧ⁿT` (eigenvalues are products `λ_1 ⋯ λ_n`). In both, an
//! eigenvalue may be used at most as often as its multiplicity allows.
//! Essential-spectrum components carry no such cap.

use std::collections::BTreeSet;

use crate::error::{Result, SpectrumError};
use crate::scalar::Scalar;
use crate::selection::{multiset_selections, MultisetSelections};
use crate::set::RealSetUnion;
use crate::spectrum::{Multiplicity, PointSpectrum, SpectralData};

/// How eigenvalues in different slots combine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Composition {
    /// Additive lift, energies add.
    Sum,
    /// Exterior power, eigenvalues multiply.
    Product,
}

impl Composition {
    pub fn identity(self) -> Scalar {
        match self {
            Composition::Sum => Scalar::zero(),
            Composition::Product => Scalar::one(),
        }
    }

    /// Value of a selection: `Σ c_i λ_i` or `Π λ_i^{c_i}`.
    fn evaluate(self, values: &[&Scalar], counts: &[u64]) -> Scalar {
        let pairs = values.iter().zip(counts).filter(|(_, &c)| c > 0);
        match self {
            Composition::Sum => pairs
                .map(|(v, &c)| *v * &Scalar::from_integer(c as i64))
                .sum(),
            Composition::Product => pairs.map(|(v, &c)| v.pow(c)).product(),
        }
    }

    fn combine_sets(self, a: &RealSetUnion, b: &RealSetUnion) -> RealSetUnion {
        match self {
            Composition::Sum => a.minkowski_sum(b),
            Composition::Product => a.minkowski_product(b),
        }
    }
}

/// Values of all capped selections of size `n` from `entries`.
fn selection_values(entries: &[(Scalar, Multiplicity)], n: u64, op: Composition) -> BTreeSet<Scalar> {
    let values: Vec<&Scalar> = entries.iter().map(|(v, _)| v).collect();
    let mults: Vec<Multiplicity> = entries.iter().map(|(_, m)| *m).collect();
    multiset_selections(&mults, n)
        .map(|sel| op.evaluate(&values, &sel.counts))
        .collect()
}

fn check_nonempty(spec: &PointSpectrum) -> Result<()> {
    if spec.is_empty() {
        Err(SpectrumError::EmptySpectrum)
    } else {
        Ok(())
    }
}

/// Point spectrum of the additive n-particle lift: all sums of `n`
/// eigenvalues in which each eigenvalue appears at most as often as its
/// multiplicity. The vacuum sector (`n = 0`) gives `{0}`; a sector with no
/// admissible selection gives the empty set.
pub fn point_spectrum_nfold_sum(spec: &PointSpectrum, n: u64) -> Result<BTreeSet<Scalar>> {
    check_nonempty(spec)?;
    Ok(selection_values(spec.entries(), n, Composition::Sum))
}

/// Point spectrum of `∧ⁿT`: all admissible products of `n` eigenvalues,
/// with `0` added whenever `0` is an eigenvalue and the sector is
/// non-trivial. The vacuum sector gives `{1}`.
pub fn point_spectrum_nfold_product(spec: &PointSpectrum, n: u64) -> Result<BTreeSet<Scalar>> {
    check_nonempty(spec)?;
    let mut out = selection_values(spec.entries(), n, Composition::Product);
    if n > 0 && !out.is_empty() && spec.contains(&Scalar::zero()) {
        out.insert(Scalar::zero());
    }
    Ok(out)
}

/// `point_spectrum_nfold_sum` or `point_spectrum_nfold_product`.
pub fn point_spectrum_nfold(spec: &PointSpectrum, n: u64, op: Composition) -> Result<BTreeSet<Scalar>> {
    match op {
        Composition::Sum => point_spectrum_nfold_sum(spec, n),
        Composition::Product => point_spectrum_nfold_product(spec, n),
    }
}

/// Full spectrum of the n-particle lift, as a closed set.
///
/// Each slot takes either a discrete eigenvalue (capped by its multiplicity)
/// or any element of the unconstrained part (essential intervals, essential
/// points, embedded or infinitely degenerate eigenvalues). Splitting on how
/// many slots are discrete, the result is
/// `⋃_k D_k ⊙ U^{⊙(n-k)}`, where `D_k` collects the capped `k`-selections and
/// `U^{⊙m}` is the m-fold Minkowski sum (or product) of the unconstrained
/// part. For products no extra `0` is inserted.
pub fn spectrum_nfold(spec: &SpectralData, n: u64, op: Composition) -> Result<RealSetUnion> {
    if spec.is_empty() {
        return Err(SpectrumError::EmptySpectrum);
    }
    let identity = RealSetUnion::singleton(op.identity());
    if n == 0 {
        return Ok(identity);
    }

    let discrete = spec.discrete_part();
    let values: Vec<&Scalar> = discrete.iter().map(|(v, _)| v).collect();
    let caps: Vec<Option<u64>> = discrete.iter().map(|(_, c)| Some(*c)).collect();
    let free = spec.unconstrained_part();

    // free_powers[m] = U^{⊙m}
    let mut free_powers = vec![identity];
    for m in 1..=n as usize {
        let next = if free.is_empty() {
            RealSetUnion::empty()
        } else {
            op.combine_sets(&free_powers[m - 1], &free)
        };
        free_powers.push(next);
    }

    let mut result = RealSetUnion::empty();
    for k in 0..=n {
        let rest = &free_powers[(n - k) as usize];
        if rest.is_empty() {
            continue;
        }
        let picked = RealSetUnion::from_points(
            MultisetSelections::new(caps.clone(), k).map(|sel| op.evaluate(&values, &sel.counts)),
        );
        if picked.is_empty() {
            continue;
        }
        result = result.union(&op.combine_sets(&picked, rest));
    }
    Ok(result)
}

/// Spectrum of the additive n-particle lift.
pub fn spectrum_nfold_sum(spec: &SpectralData, n: u64) -> Result<RealSetUnion> {
    spectrum_nfold(spec, n, Composition::Sum)
}

/// Spectrum of `∧ⁿT`.
pub fn spectrum_nfold_product(spec: &SpectralData, n: u64) -> Result<RealSetUnion> {
    spectrum_nfold(spec, n, Composition::Product)
}

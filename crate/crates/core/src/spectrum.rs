//! Finite descriptions of a one-particle spectrum.

use std::fmt;
use std::num::NonZeroU64;

use crate::error::{Result, SpectrumError};
use crate::scalar::Scalar;
use crate::set::{canonicalize, Interval, RealSetUnion};

/// Dimension of an eigenspace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Multiplicity {
    Finite(NonZeroU64),
    Infinite,
}

impl Multiplicity {
    pub fn finite(m: u64) -> Result<Self> {
        NonZeroU64::new(m)
            .map(Multiplicity::Finite)
            .ok_or(SpectrumError::ZeroMultiplicity(m))
    }

    /// Upper bound on how often the eigenvalue may be occupied; `None` means
    /// unbounded.
    pub fn cap(&self) -> Option<u64> {
        match self {
            Multiplicity::Finite(m) => Some(m.get()),
            Multiplicity::Infinite => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Multiplicity::Finite(_))
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Finite(m) => write!(f, "{m}"),
            Multiplicity::Infinite => f.write_str("inf"),
        }
    }
}

/// Eigenvalues with the dimensions of their eigenspaces, sorted ascending and
/// pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PointSpectrum {
    entries: Vec<(Scalar, Multiplicity)>,
}

impl PointSpectrum {
    /// Sorts the entries; a repeated eigenvalue is an error.
    pub fn new<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Scalar, Multiplicity)>,
    {
        let mut entries: Vec<_> = entries.into_iter().collect();
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        if let Some(w) = entries.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(SpectrumError::DuplicateValue(w[0].0.to_string()));
        }
        Ok(PointSpectrum { entries })
    }

    /// Convenience constructor from integer eigenvalues with finite
    /// multiplicities.
    pub fn from_integers(entries: &[(i64, u64)]) -> Result<Self> {
        let entries = entries
            .iter()
            .map(|&(v, m)| Ok((Scalar::from_integer(v), Multiplicity::finite(m)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }

    pub fn entries(&self) -> &[(Scalar, Multiplicity)] {
        &self.entries
    }

    pub fn values(&self) -> impl Iterator<Item = &Scalar> {
        self.entries.iter().map(|(v, _)| v)
    }

    pub fn multiplicity(&self, value: &Scalar) -> Option<Multiplicity> {
        self.entries
            .binary_search_by(|(v, _)| v.cmp(value))
            .ok()
            .map(|i| self.entries[i].1)
    }

    pub fn contains(&self, value: &Scalar) -> bool {
        self.multiplicity(value).is_some()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Sum of all multiplicities, or `None` if any is infinite.
    pub fn total_multiplicity(&self) -> Option<u64> {
        self.entries.iter().map(|(_, m)| m.cap()).sum()
    }
}

/// A full spectrum: eigenvalues plus an essential part made of closed
/// intervals and isolated essential points.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpectralData {
    points: PointSpectrum,
    essential: RealSetUnion,
}

impl SpectralData {
    pub fn new(points: PointSpectrum, intervals: Vec<Interval>, essential_points: Vec<Scalar>) -> Self {
        SpectralData {
            points,
            essential: canonicalize(essential_points, intervals),
        }
    }

    /// A purely point spectrum with no essential part.
    pub fn discrete(points: PointSpectrum) -> Self {
        SpectralData {
            points,
            essential: RealSetUnion::empty(),
        }
    }

    pub fn points(&self) -> &PointSpectrum {
        &self.points
    }

    /// The essential part (intervals and essential points), canonicalized.
    pub fn essential(&self) -> &RealSetUnion {
        &self.essential
    }

    /// True iff `value` is an isolated eigenvalue of finite multiplicity:
    /// declared as a point with finite multiplicity and not inside the
    /// essential part.
    pub fn is_discrete(&self, value: &Scalar) -> bool {
        matches!(self.points.multiplicity(value), Some(Multiplicity::Finite(_)))
            && !self.essential.contains(value)
    }

    /// Discrete eigenvalues with their multiplicity caps.
    pub fn discrete_part(&self) -> Vec<(Scalar, u64)> {
        self.points
            .entries()
            .iter()
            .filter(|(v, _)| self.is_discrete(v))
            .filter_map(|(v, m)| m.cap().map(|c| (v.clone(), c)))
            .collect()
    }

    /// Everything that may be occupied without an exclusion cap: the
    /// essential part together with eigenvalues that are not discrete.
    pub fn unconstrained_part(&self) -> RealSetUnion {
        let extra = self
            .points
            .values()
            .filter(|v| !self.is_discrete(v))
            .cloned();
        self.essential.union(&RealSetUnion::from_points(extra))
    }

    /// The represented spectrum as a closed set.
    pub fn spectrum(&self) -> RealSetUnion {
        self.essential
            .union(&RealSetUnion::from_points(self.points.values().cloned()))
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty() && self.essential.is_empty()
    }
}

impl From<PointSpectrum> for SpectralData {
    fn from(points: PointSpectrum) -> Self {
        SpectralData::discrete(points)
    }
}

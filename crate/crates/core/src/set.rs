//! Closed subsets of the real line: finite unions of closed intervals and
//! isolated points, kept in a canonical form so that set equality is
//! structural equality.

use std::fmt;
use std::str::FromStr;

use crate::error::{Result, SpectrumError};
use crate::scalar::Scalar;

/// A closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    lo: Scalar,
    hi: Scalar,
}

impl Interval {
    pub fn new(lo: Scalar, hi: Scalar) -> Result<Self> {
        if lo > hi {
            return Err(SpectrumError::InvalidInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(x: Scalar) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &Scalar {
        &self.lo
    }

    pub fn hi(&self) -> &Scalar {
        &self.hi
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    /// `{x * y : x in self, y in other}`, which for closed intervals is again
    /// a closed interval spanned by the endpoint products.
    pub fn mul(&self, other: &Interval) -> Interval {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().cloned().unwrap();
        let hi = products.iter().max().cloned().unwrap();
        Interval { lo, hi }
    }
}

/// One piece of a [`RealSetUnion`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component<'a> {
    Point(&'a Scalar),
    Interval(&'a Interval),
}

impl Component<'_> {
    fn lower(&self) -> &Scalar {
        match self {
            Component::Point(x) => x,
            Component::Interval(iv) => iv.lo(),
        }
    }
}

/// Canonical finite union of closed intervals and isolated points.
///
/// Invariants: intervals are non-degenerate, sorted, pairwise disjoint and
/// non-touching; points are sorted, distinct and lie outside every interval.
/// A finite union of closed sets is closed, so taking the closure is the
/// identity on this type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RealSetUnion {
    points: Vec<Scalar>,
    intervals: Vec<Interval>,
}

impl RealSetUnion {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn singleton(x: Scalar) -> Self {
        RealSetUnion {
            points: vec![x],
            intervals: Vec::new(),
        }
    }

    pub fn from_points<I: IntoIterator<Item = Scalar>>(points: I) -> Self {
        canonicalize(points, Vec::new())
    }

    pub fn points(&self) -> &[Scalar] {
        &self.points
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty() && self.intervals.is_empty()
    }

    /// True when the set has no interval part.
    pub fn is_finite(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn min(&self) -> Option<&Scalar> {
        let p = self.points.first();
        let i = self.intervals.first().map(Interval::lo);
        match (p, i) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    pub fn max(&self) -> Option<&Scalar> {
        let p = self.points.last();
        let i = self.intervals.last().map(Interval::hi);
        match (p, i) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        }
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        self.points.binary_search(x).is_ok() || self.interval_containing(x).is_some()
    }

    fn interval_containing(&self, x: &Scalar) -> Option<&Interval> {
        // Intervals are sorted and disjoint: the candidate is the last one
        // starting at or before x.
        let idx = self.intervals.partition_point(|iv| iv.lo() <= x);
        idx.checked_sub(1)
            .map(|i| &self.intervals[i])
            .filter(|iv| iv.contains(x))
    }

    /// Components ordered by their lower end.
    pub fn components(&self) -> Vec<Component<'_>> {
        let mut out: Vec<Component<'_>> = self
            .points
            .iter()
            .map(Component::Point)
            .chain(self.intervals.iter().map(Component::Interval))
            .collect();
        out.sort_by(|a, b| a.lower().cmp(b.lower()));
        out
    }

    /// Every component as an interval (points become degenerate intervals).
    pub fn as_intervals(&self) -> Vec<Interval> {
        self.components()
            .into_iter()
            .map(|c| match c {
                Component::Point(x) => Interval::point(x.clone()),
                Component::Interval(iv) => iv.clone(),
            })
            .collect()
    }

    pub fn union(&self, other: &RealSetUnion) -> RealSetUnion {
        canonicalize(
            self.points.iter().chain(&other.points).cloned(),
            self.intervals.iter().chain(&other.intervals).cloned().collect(),
        )
    }

    fn combine(&self, other: &RealSetUnion, op: impl Fn(&Interval, &Interval) -> Interval) -> Self {
        let lhs = self.as_intervals();
        let rhs = other.as_intervals();
        let mut pieces = Vec::with_capacity(lhs.len() * rhs.len());
        for a in &lhs {
            for b in &rhs {
                pieces.push(op(a, b));
            }
        }
        canonicalize(std::iter::empty(), pieces)
    }

    /// `{x + y : x in self, y in other}`.
    pub fn minkowski_sum(&self, other: &RealSetUnion) -> RealSetUnion {
        self.combine(other, Interval::add)
    }

    /// `{x * y : x in self, y in other}`.
    pub fn minkowski_product(&self, other: &RealSetUnion) -> RealSetUnion {
        self.combine(other, Interval::mul)
    }

    pub fn shift(&self, s: &Scalar) -> RealSetUnion {
        self.minkowski_sum(&RealSetUnion::singleton(s.clone()))
    }

    pub fn scale(&self, c: &Scalar) -> RealSetUnion {
        self.minkowski_product(&RealSetUnion::singleton(c.clone()))
    }

    /// Intersection with the closed window `[lo, hi]`.
    pub fn intersect_window(&self, lo: &Scalar, hi: &Scalar) -> RealSetUnion {
        let points = self
            .points
            .iter()
            .filter(|x| lo <= *x && *x <= hi)
            .cloned();
        let intervals = self
            .intervals
            .iter()
            .filter(|iv| iv.lo() <= hi && lo <= iv.hi())
            .map(|iv| Interval {
                lo: iv.lo().max(lo).clone(),
                hi: iv.hi().min(hi).clone(),
            })
            .collect();
        canonicalize(points, intervals)
    }

    /// Checks the canonical-form invariants. Every constructor upholds them;
    /// this exists for tests and debug assertions.
    pub fn is_canonical(&self) -> bool {
        let points_ok = self.points.windows(2).all(|w| w[0] < w[1]);
        let intervals_ok = self.intervals.iter().all(|iv| iv.lo < iv.hi)
            && self.intervals.windows(2).all(|w| w[0].hi < w[1].lo);
        let separated = self
            .points
            .iter()
            .all(|x| self.intervals.iter().all(|iv| !iv.contains(x)));
        points_ok && intervals_ok && separated
    }
}

/// Builds the canonical form of `points ∪ intervals`: degenerate intervals
/// become points, overlapping or touching intervals merge, and points
/// absorbed by an interval (including its endpoints) are dropped.
pub fn canonicalize<P>(points: P, mut intervals: Vec<Interval>) -> RealSetUnion
where
    P: IntoIterator<Item = Scalar>,
{
    let mut pts: Vec<Scalar> = points.into_iter().collect();
    intervals.retain(|iv| {
        if iv.is_degenerate() {
            pts.push(iv.lo.clone());
            false
        } else {
            true
        }
    });

    intervals.sort();
    let mut merged: Vec<Interval> = Vec::with_capacity(intervals.len());
    for iv in intervals {
        match merged.last_mut() {
            Some(last) if iv.lo <= last.hi => {
                if iv.hi > last.hi {
                    last.hi = iv.hi;
                }
            }
            _ => merged.push(iv),
        }
    }

    pts.sort();
    pts.dedup();
    let set = RealSetUnion {
        points: Vec::new(),
        intervals: merged,
    };
    let points = pts
        .into_iter()
        .filter(|x| set.interval_containing(x).is_none())
        .collect();
    let out = RealSetUnion {
        points,
        intervals: set.intervals,
    };
    debug_assert!(out.is_canonical());
    out
}

/// One component per line: points as bare values, intervals as `[lo, hi]`.
impl fmt::Display for RealSetUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components().into_iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            match c {
                Component::Point(x) => write!(f, "{x}")?,
                Component::Interval(iv) => write!(f, "[{}, {}]", iv.lo, iv.hi)?,
            }
        }
        Ok(())
    }
}

/// Parses the line format produced by `Display`.
impl FromStr for RealSetUnion {
    type Err = SpectrumError;

    fn from_str(s: &str) -> Result<Self> {
        let mut points = Vec::new();
        let mut intervals = Vec::new();
        for (idx, raw) in s.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| SpectrumError::Parse {
                line: idx + 1,
                message,
            };
            let scalar = |t: &str| {
                t.trim()
                    .parse::<Scalar>()
                    .map_err(|e| parse_err(e.to_string()))
            };
            if let Some(body) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                let (lo, hi) = body
                    .split_once(',')
                    .ok_or_else(|| parse_err(format!("expected `[lo, hi]`, got `{line}`")))?;
                intervals.push(Interval::new(scalar(lo)?, scalar(hi)?)?);
            } else {
                points.push(scalar(line)?);
            }
        }
        Ok(canonicalize(points, intervals))
    }
}

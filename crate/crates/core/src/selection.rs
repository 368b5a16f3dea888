//! Enumeration of occupation-count vectors under per-value exclusion caps.
//!
//! Choosing `n` eigenvalues `λ_1, …, λ_n` (with repetition, order
//! irrelevant) is the same as choosing a count vector `c` with `Σ c_i = n`.
//! The exclusion constraint bounds each `c_i` by the multiplicity of the
//! corresponding eigenvalue.

use crate::spectrum::Multiplicity;

/// Occupation counts, one per distinct spectrum element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SelectionCounts {
    pub counts: Vec<u64>,
}

impl SelectionCounts {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Lexicographically ordered stream of every count vector with sum `n` and
/// `counts[i] <= caps[i]` (`None` meaning no cap).
#[derive(Debug, Clone)]
pub struct MultisetSelections {
    caps: Vec<Option<u64>>,
    // suffix_caps[i] = capacity of positions i.., None when unbounded
    suffix_caps: Vec<Option<u64>>,
    n: u64,
    current: Option<Vec<u64>>,
}

impl MultisetSelections {
    pub fn new(caps: Vec<Option<u64>>, n: u64) -> Self {
        let mut suffix_caps = vec![Some(0); caps.len() + 1];
        for i in (0..caps.len()).rev() {
            suffix_caps[i] = match (caps[i], suffix_caps[i + 1]) {
                (Some(a), Some(b)) => a.checked_add(b),
                _ => None,
            };
        }
        let fits = suffix_caps[0].is_none_or(|c| c >= n);
        let mut this = MultisetSelections {
            caps,
            suffix_caps,
            n,
            current: None,
        };
        if fits {
            let mut counts = vec![0; this.caps.len()];
            this.fill_suffix(&mut counts, 0, n);
            this.current = Some(counts);
        }
        this
    }

    fn fits(&self, start: usize, remainder: u64) -> bool {
        self.suffix_caps[start].is_none_or(|c| c >= remainder)
    }

    /// Lexicographically smallest completion: push the remainder as far
    /// right as the caps allow.
    fn fill_suffix(&self, counts: &mut [u64], start: usize, mut remainder: u64) {
        for j in (start..counts.len()).rev() {
            let take = self.caps[j].map_or(remainder, |c| c.min(remainder));
            counts[j] = take;
            remainder -= take;
        }
        debug_assert_eq!(remainder, 0);
    }

    fn advance(&self, counts: &[u64]) -> Option<Vec<u64>> {
        let len = counts.len();
        if len < 2 {
            return None;
        }
        let mut prefix: Vec<u64> = Vec::with_capacity(len);
        let mut acc = 0;
        for &c in counts {
            prefix.push(acc);
            acc += c;
        }
        for i in (0..len - 1).rev() {
            let bumped = counts[i] + 1;
            if self.caps[i].is_some_and(|cap| bumped > cap) {
                continue;
            }
            let used = prefix[i] + bumped;
            if used > self.n {
                continue;
            }
            let remainder = self.n - used;
            if !self.fits(i + 1, remainder) {
                continue;
            }
            let mut next = counts.to_vec();
            next[i] = bumped;
            self.fill_suffix(&mut next, i + 1, remainder);
            return Some(next);
        }
        None
    }
}

impl Iterator for MultisetSelections {
    type Item = SelectionCounts;

    fn next(&mut self) -> Option<SelectionCounts> {
        let counts = self.current.take()?;
        self.current = self.advance(&counts);
        Some(SelectionCounts { counts })
    }
}

/// Every admissible selection of `n` elements from `mults`.
pub fn multiset_selections(mults: &[Multiplicity], n: u64) -> MultisetSelections {
    MultisetSelections::new(mults.iter().map(Multiplicity::cap).collect(), n)
}

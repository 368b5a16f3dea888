//! Free Dirac fermions in a periodic box of side `L`.
//!
//! Momenta live on the lattice `(2π/L)ℤ³` and the one-particle energy is
//! `E(p) = √(p² + M²)`. Writing `p = (2π/L)·k` with `k ∈ ℤ³`, the level with
//! `|k|² = N` has energy `√(4π²N/L² + M²)` and multiplicity `4·r3(N)`, the
//! factor 4 coming from the spinor components. Many-fermion energies are
//! sums of level energies in which level `N` is used at most `4·r3(N)` times.
//!
//! Energies are irrational, so this module works in `f64`.

use std::f64::consts::PI;

use crate::error::{Result, SpectrumError};
use crate::scalar::Scalar;
use crate::spectrum::{Multiplicity, PointSpectrum};

/// Spinor components per momentum.
pub const SPINOR_DIM: u64 = 4;

/// Relative tolerance used to merge numerically coincident energies.
pub const DEDUP_REL_TOL: f64 = 1e-9;

const CUTOFF_SLACK: f64 = 1e-12;

/// Box side length `L > 0` and bare mass `M >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoxParams {
    side_length: f64,
    mass: f64,
}

impl BoxParams {
    pub fn new(side_length: f64, mass: f64) -> Result<Self> {
        if !(side_length > 0.0 && side_length.is_finite()) {
            return Err(SpectrumError::InvalidParameter(format!("box side must be positive, got {side_length}")));
        }
        if !(mass >= 0.0 && mass.is_finite()) {
            return Err(SpectrumError::InvalidParameter(format!("mass must be non-negative, got {mass}")));
        }
        Ok(BoxParams { side_length, mass })
    }

    pub fn side_length(&self) -> f64 {
        self.side_length
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// Energy of a particle with `|k|² = n`.
    pub fn level_energy(&self, n: u64) -> f64 {
        (2.0 * PI / self.side_length * (n as f64).sqrt()).hypot(self.mass)
    }

    /// Largest `N` with `4π²N/L² + M² <= cutoff²`.
    fn max_level_below(&self, cutoff: f64) -> Option<u64> {
        if cutoff < self.mass {
            return None;
        }
        let scale = self.side_length / (2.0 * PI);
        let bound = (cutoff * cutoff - self.mass * self.mass) * scale * scale;
        Some((bound + 1e-9).floor() as u64)
    }
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    r
}

/// Number of `(a, b, c) ∈ ℤ³` with `a² + b² + c² = n`.
pub fn r3(n: u64) -> u64 {
    let bound = isqrt(n) as i64;
    let mut count = 0;
    for a in -bound..=bound {
        let rest = n - (a * a) as u64;
        let b_bound = isqrt(rest) as i64;
        for b in -b_bound..=b_bound {
            let c2 = rest - (b * b) as u64;
            let c = isqrt(c2);
            if c * c == c2 {
                count += if c == 0 { 1 } else { 2 };
            }
        }
    }
    count
}

/// One energy level of the box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Level {
    /// `|k|²` of the lattice momenta in this level.
    pub n: u64,
    pub energy: f64,
    /// `4·r3(n)`.
    pub multiplicity: u64,
}

/// Occupied levels sorted by energy; levels with `r3(N) = 0` are absent.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct LevelTable {
    pub levels: Vec<Level>,
}

impl LevelTable {
    /// Level labels as exact markers (`N` itself) with their multiplicities.
    /// Markers are distinct per level, which is all a selection count needs.
    pub fn to_point_spectrum(&self) -> PointSpectrum {
        PointSpectrum::new(self.levels.iter().map(|l| {
            (
                Scalar::from_integer(l.n as i64),
                Multiplicity::finite(l.multiplicity).expect("levels with zero multiplicity are omitted"),
            )
        }))
        .expect("level labels are distinct")
    }

    /// Every occupation vector (one count per level) with `n` particles in
    /// total and no level above its multiplicity, in lexicographic order.
    pub fn admissible_occupations(&self, n: u64) -> Vec<Vec<u64>> {
        fn go(caps: &[u64], idx: usize, left: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if idx == caps.len() {
                if left == 0 {
                    out.push(current.clone());
                }
                return;
            }
            for c in 0..=caps[idx].min(left) {
                current.push(c);
                go(caps, idx + 1, left - c, current, out);
                current.pop();
            }
        }
        let caps: Vec<u64> = self.levels.iter().map(|l| l.multiplicity).collect();
        let mut out = Vec::new();
        go(&caps, 0, n, &mut Vec::new(), &mut out);
        out
    }
}

/// Levels `0 <= N <= n_max` of the one-particle operator.
pub fn one_particle_spectrum(params: &BoxParams, n_max: u64) -> LevelTable {
    let levels = (0..=n_max)
        .filter_map(|n| {
            let r = r3(n);
            (r > 0).then(|| Level {
                n,
                energy: params.level_energy(n),
                multiplicity: SPINOR_DIM * r,
            })
        })
        .collect();
    LevelTable { levels }
}

/// Distinct many-fermion energies up to a cutoff.
#[derive(Debug, Clone, PartialEq)]
pub struct DiracSpectrum {
    /// Ascending, deduplicated at [`DEDUP_REL_TOL`].
    pub energies: Vec<f64>,
    /// How many numerically distinct (but tolerance-equal) values were merged.
    pub merged: usize,
}

/// All total energies `<= cutoff` of the second-quantized box Hamiltonian,
/// including the vacuum `0`.
///
/// Occupations are explored depth first over levels in ascending energy,
/// with at most `4·r3(N)` particles in level `N`; a branch stops as soon as
/// the next level would exceed the cutoff. For `M = 0` the zero level holds
/// at most four particles, so the search is finite in every case.
pub fn dirac_dgamma_spectrum(params: &BoxParams, cutoff: f64) -> Result<DiracSpectrum> {
    if !(cutoff >= 0.0 && cutoff.is_finite()) {
        return Err(SpectrumError::InvalidParameter(format!("cutoff must be non-negative, got {cutoff}")));
    }
    let limit = cutoff + CUTOFF_SLACK * cutoff.max(1.0);
    let levels: Vec<Level> = match params.max_level_below(cutoff) {
        Some(n_max) => one_particle_spectrum(params, n_max)
            .levels
            .into_iter()
            .filter(|l| l.energy <= limit)
            .collect(),
        None => Vec::new(),
    };

    fn explore(levels: &[Level], start: usize, total: f64, limit: f64, out: &mut Vec<f64>) {
        out.push(total);
        for (j, level) in levels.iter().enumerate().skip(start) {
            if total + level.energy > limit {
                break;
            }
            for count in 1..=level.multiplicity {
                let next = total + count as f64 * level.energy;
                if next > limit {
                    break;
                }
                explore(levels, j + 1, next, limit, out);
            }
        }
    }

    let mut raw = Vec::new();
    explore(&levels, 0, 0.0, limit, &mut raw);
    raw.sort_by(f64::total_cmp);

    let mut energies: Vec<f64> = Vec::new();
    let mut merged = 0;
    for v in raw {
        match energies.last() {
            Some(&rep) if (v - rep).abs() <= DEDUP_REL_TOL * v.abs().max(rep.abs()) => {
                if v != rep {
                    merged += 1;
                }
            }
            _ => energies.push(v),
        }
    }
    Ok(DiracSpectrum { energies, merged })
}

/// Ground-state energy of the `n`-fermion sector: fill levels in ascending
/// energy order up to their multiplicities.
pub fn min_energy_sector(params: &BoxParams, n: u64) -> f64 {
    let mut left = n;
    let mut total = 0.0;
    let mut level = 0u64;
    while left > 0 {
        let capacity = SPINOR_DIM * r3(level);
        let take = capacity.min(left);
        total += take as f64 * params.level_energy(level);
        left -= take;
        level += 1;
    }
    total
}

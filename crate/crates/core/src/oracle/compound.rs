//! Compound matrices in the wedge basis `e_{k_1} ∧ … ∧ e_{k_n}`,
//! `k_1 < … < k_n`, of the n-th exterior power.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;

use super::matrix::SymMatrix;
use crate::error::{Result, SpectrumError};

/// Strictly increasing tuple of 0-based basis indices labelling one wedge
/// basis vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WedgeIndex(pub Vec<usize>);

impl WedgeIndex {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for WedgeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// All `C(d, n)` wedge indices in lexicographic order. `n > d` gives no
/// basis at all; `n = 0` gives the single empty index (the vacuum).
pub fn wedge_basis(d: usize, n: usize) -> Vec<WedgeIndex> {
    if n > d {
        return Vec::new();
    }
    (0..d).combinations(n).map(WedgeIndex).collect()
}

fn check_sector(a: &SymMatrix, n: usize) -> Result<()> {
    if n > a.dim() {
        Err(SpectrumError::SectorOutOfRange { n, dim: a.dim() })
    } else {
        Ok(())
    }
}

/// Matrix of `Σ_j Ã_j` (A acting on one slot at a time) restricted to the
/// n-th exterior power.
///
/// Column `L` is obtained by applying `A` to each slot of `e_L`, expanding in
/// the standard basis, dropping wedges with a repeated index and sorting the
/// rest back into the basis with the sign of the reordering.
pub fn additive_compound(a: &SymMatrix, n: usize) -> Result<SymMatrix> {
    check_sector(a, n)?;
    let d = a.dim();
    let basis = wedge_basis(d, n);
    let size = basis.len();
    let position: HashMap<&[usize], usize> = basis.iter().enumerate().map(|(i, w)| (w.0.as_slice(), i)).collect();

    let mut out = vec![0.0; size * size];
    for (col, wedge) in basis.iter().enumerate() {
        for (slot, &l) in wedge.0.iter().enumerate() {
            for r in 0..d {
                let coeff = a.get(r, l);
                if coeff == 0.0 {
                    continue;
                }
                if r == l {
                    out[col * size + col] += coeff;
                    continue;
                }
                if wedge.0.contains(&r) {
                    continue;
                }
                // Moving r into sorted position passes every index strictly
                // between l and r; each pass is one transposition.
                let (lo, hi) = if r < l { (r, l) } else { (l, r) };
                let passes = wedge.0.iter().filter(|&&k| lo < k && k < hi).count();
                let sign = if passes % 2 == 0 { 1.0 } else { -1.0 };
                let mut target = wedge.0.clone();
                target[slot] = r;
                target.sort_unstable();
                let row = position[target.as_slice()];
                out[row * size + col] += sign * coeff;
            }
        }
    }
    Ok(SymMatrix::symmetrized(size, out))
}

/// The n-th compound matrix `∧ⁿA`: entry `(K, L)` is the minor of `A` on
/// rows `K` and columns `L`.
pub fn multiplicative_compound(a: &SymMatrix, n: usize) -> Result<SymMatrix> {
    check_sector(a, n)?;
    let basis = wedge_basis(a.dim(), n);
    let size = basis.len();
    let mut out = vec![0.0; size * size];
    let mut scratch = vec![0.0; n * n];
    for (i, rows) in basis.iter().enumerate() {
        for (j, cols) in basis.iter().enumerate().skip(i) {
            for (r, &ri) in rows.0.iter().enumerate() {
                for (c, &cj) in cols.0.iter().enumerate() {
                    scratch[r * n + c] = a.get(ri, cj);
                }
            }
            let minor = bareiss_determinant(&mut scratch, n);
            out[i * size + j] = minor;
            out[j * size + i] = minor;
        }
    }
    Ok(SymMatrix::symmetrized(size, out))
}

/// Determinant by fraction-free (Bareiss) elimination with partial
/// pivoting. Destroys `m`.
pub fn bareiss_determinant(m: &mut [f64], n: usize) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut sign = 1.0;
    let mut prev = 1.0;
    for k in 0..n - 1 {
        let pivot = (k..n)
            .max_by(|&x, &y| m[x * n + k].abs().total_cmp(&m[y * n + k].abs()))
            .unwrap();
        if m[pivot * n + k] == 0.0 {
            return 0.0;
        }
        if pivot != k {
            for c in 0..n {
                m.swap(k * n + c, pivot * n + c);
            }
            sign = -sign;
        }
        let akk = m[k * n + k];
        for i in k + 1..n {
            let aik = m[i * n + k];
            for j in k + 1..n {
                m[i * n + j] = (m[i * n + j] * akk - aik * m[k * n + j]) / prev;
            }
        }
        prev = akk;
    }
    sign * m[(n - 1) * n + (n - 1)]
}

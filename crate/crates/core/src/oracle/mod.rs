//! Finite-dimensional verification path.
//!
//! A one-particle operator is realized as a real symmetric matrix with a
//! prescribed spectrum; its n-particle lifts are built explicitly in the
//! wedge basis and diagonalized numerically. Nothing here depends on the
//! exact set calculus except [`verify_sector`], which compares the two.

mod compound;
mod householder;
mod jacobi;
mod matrix;
mod verify;

pub use compound::{additive_compound, bareiss_determinant, multiplicative_compound, wedge_basis, WedgeIndex};
pub use householder::{random_orthogonal, random_symmetric_with_spectrum};
pub use jacobi::{jacobi_eigenvalues, MAX_SWEEPS};
pub use matrix::SymMatrix;
pub use verify::{
    compound, dedup_sorted, fock_space_eigenvalues, hausdorff_distance, random_instance, verify_sector, verify_trials,
    SpectrumReport,
};

/// Largest one-particle dimension the oracle accepts.
pub const MAX_DIM: usize = 12;

/// Off-diagonal residual at which Jacobi iteration stops.
pub const JACOBI_TOL: f64 = 1e-10;

/// Default tolerance for comparing formula and oracle sets.
pub const DEFAULT_SET_TOL: f64 = 1e-8;

//! Spectra of fermionic many-particle operators.
//!
//! Given a finite description of a self-adjoint one-particle operator `T`
//! (eigenvalues with multiplicities, plus an essential part made of closed
//! intervals and points), this crate computes exactly, over the rationals:
//!
//! * the point spectrum and spectrum of the n-particle operators on the
//!   antisymmetric tensor power: the additive lift (energies add) and the
//!   exterior power `∧ⁿT` (eigenvalues multiply), with the exclusion rule
//!   that an eigenvalue may appear at most as often as its multiplicity;
//! * the corresponding spectra on the whole fermionic Fock space, truncated
//!   at a particle-number cutoff with a completeness certificate;
//! * tensor products of distinguishable factors, where no exclusion applies.
//!
//! The [`oracle`] module re-derives sector spectra from explicit compound
//! matrices, and [`dirac`] works out free Dirac fermions in a box.
//!
//! ```
//! use fock_spectra::{point_spectrum_nfold_sum, PointSpectrum, Scalar};
//!
//! // eigenvalue 1 once, eigenvalue 2 twice
//! let t = PointSpectrum::from_integers(&[(1, 1), (2, 2)]).unwrap();
//! let two_particle = point_spectrum_nfold_sum(&t, 2).unwrap();
//! let values: Vec<String> = two_particle.iter().map(Scalar::to_string).collect();
//! assert_eq!(values, ["3", "4"]); // 1 + 1 is excluded
//! ```

pub mod dirac;
pub mod error;
pub mod fock;
pub mod format;
pub mod oracle;
pub mod scalar;
pub mod sector;
pub mod selection;
pub mod set;
pub mod spectrum;
pub mod tensor;

pub use error::{Result, SpectrumError};
pub use fock::{dgamma_point_spectrum, dgamma_spectrum, gamma_point_spectrum, gamma_spectrum, TruncationReport};
pub use format::parse_spectral_data;
pub use scalar::Scalar;
pub use sector::{
    point_spectrum_nfold, point_spectrum_nfold_product, point_spectrum_nfold_sum, spectrum_nfold,
    spectrum_nfold_product, spectrum_nfold_sum, Composition,
};
pub use selection::{multiset_selections, MultisetSelections, SelectionCounts};
pub use set::{canonicalize, Interval, RealSetUnion};
pub use spectrum::{Multiplicity, PointSpectrum, SpectralData};
pub use tensor::{tensor_point_spectrum_product, tensor_point_spectrum_sum};

// The guide under book/ is compiled as doc tests so its snippets cannot rot.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/sets.md")]
    mod sets {}
    #[doc = include_str!("../../../book/src/sectors.md")]
    mod sectors {}
    #[doc = include_str!("../../../book/src/essential.md")]
    mod essential {}
    #[doc = include_str!("../../../book/src/fock.md")]
    mod fock {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/dirac.md")]
    mod dirac {}
    #[doc = include_str!("../../../book/src/file-format.md")]
    mod file_format {}
}

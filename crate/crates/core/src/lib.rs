//! Spectral analysis of weighted simplicial complexes.
//!
//! The crate implements the local-to-global machinery behind Garland's
//! method: weighted up/down Laplacians of a complex, their restrictions to
//! vertex and face links, and eigenvalue interlacing arguments that turn
//! spectral gaps of the links into lower bounds for the global spectrum and
//! into upper bounds for the dimension of reduced homology.
//!
//! Modules:
//!
//! * [`complex`] — faces, simplicial complexes, links, incidence signs.
//! * [`weight`] — positive rational weight functions on faces.
//! * [`ratmat`] — dense matrices over arbitrary-precision rationals.
//! * [`laplacian`] — boundary matrices and the six Laplacian flavors.
//! * [`spectral`] — symmetric eigensolver, spectra, exact Betti numbers.
//! * [`garland`] — link-spectrum bounds on the global spectrum and homology.
//! * [`interlace`] — local systems, projection matrices, and verification
//!   oracles for the interlacing and sign identities.
//! * [`generator`] — deterministic complex generators for tests and the CLI.
//!
//! All face enumerations are lexicographic and all reductions are ordered,
//! so every computation here is deterministic for a fixed input and seed.

pub mod complex;
pub mod error;
#[cfg(test)]
pub(crate) mod fixtures;
pub mod garland;
pub mod generator;
pub mod interlace;
pub mod laplacian;
pub mod ratmat;
pub mod spectral;
pub mod weight;

pub use complex::{incidence_sign, Face, SimplicialComplex};
pub use error::{Error, Result};
pub use ratmat::RatMatrix;
pub use spectral::Spectrum;
pub use weight::WeightFunction;

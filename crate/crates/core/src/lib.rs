//! Exact twisted homology of hyperplane arrangement complements.
//!
//! The crate is organised bottom-up: [`algebra`] and [`linalg`] provide exact
//! rings and matrix kernels, [`chain`] holds free chain complexes, and the
//! remaining modules build specific complexes (Koszul, Fox/Alexander, towers of
//! free groups) and the derived invariants (Milnor spectra, homotopy ranks).

pub mod algebra;
pub mod arrangement;
pub mod automorphism;
pub mod chain;
pub mod error;
pub mod formats;
pub mod fox;
pub mod koszul;
pub mod linalg;
pub mod milnor;
pub mod subsets;
pub mod tower;

pub use error::{Error, Result};

/// Version tag of every JSON schema read or written by this crate.
pub const FORMAT_VERSION: &str = "1";

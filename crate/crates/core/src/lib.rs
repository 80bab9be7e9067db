//! Exact and numeric construction of undeformed, q-deformed and Jordanian
//! (h-deformed) multi-qubit states.
//!
//! The h-branch is exact end to end: amplitudes are polynomials in `h` with
//! coefficients in the rationals extended by square roots ([`scalar::HScalar`]).
//! The q-branch is double precision. [`decomp`] canonicalizes numeric states.

pub mod clebsch;
pub mod coproducts;
pub mod decomp;
pub mod dicke;
pub mod error;
pub mod export;
pub mod golden;
pub mod hilbert;
pub mod reference;
pub mod scalar;
pub mod selector;
pub mod table;
pub mod verify;

pub use error::{Error, Result};

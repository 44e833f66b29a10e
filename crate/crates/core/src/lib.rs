//! Exact semi-infinite wedge space carrying the level-one action of affine
//! `sl_2`, with tools to enumerate and verify the semi-infinite monomial bases
//! of the standard modules `L_(0,1)` and `L_(1,1)`.
//!
//! Vectors, operators and elimination are generic over the coefficient ring
//! (see [`Scalar`]); the aliases below fix the exact rational choice used by
//! the verification sweeps and the command line tool.

pub mod affine;
pub mod basis;
pub mod cli;
pub mod error;
pub mod fock;
pub mod linalg;
pub mod qseries;
pub mod scalar;

pub use error::{FockError, Result};
pub use scalar::{ExactDomain, Scalar};

/// Exact rational coefficients.
pub type Coeff = num_rational::BigRational;
/// Fock vector with exact rational coefficients.
pub type Vector = fock::FockVector<Coeff>;
/// Fock vector with machine-integer coefficients.
pub type IntVector = fock::FockVector<i64>;
/// Fock vector with double-precision coefficients.
pub type FloatVector = fock::FockVector<f64>;

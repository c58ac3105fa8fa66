//! Exact-arithmetic evaluation of Iwahori-fixed Whittaker functions for
//! Steinberg representations of split adjoint p-adic groups, together with
//! the combinatorial machinery (root systems, Weyl groups, Iwahori-Hecke
//! algebras) needed to state and check the closed evaluation formula, and
//! two independent brute-force oracles (a finite-field Bruhat-cell census
//! and a rank-one p-adic integration oracle) used to validate it.
//!
//! All symbolic computation is over `Z[q, q^-1]` and its multivariate
//! extension by Satake coordinates; no floating point enters except in the
//! p-adic oracle's oscillatory integrals, which are compared against exact
//! rational predictions at explicit tolerances.

pub mod dominance;
pub mod finite_oracle;
pub mod hecke;
pub mod laurent;
pub mod padic_oracle;
pub mod root_system;
pub mod verify;
pub mod whittaker;

pub use laurent::LaurentInt;
pub use root_system::{CartanType, Coweight, Family, Root, RootSystem, WeylElement};
pub use whittaker::WhittakerValue;

/// Error type shared by the whole crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Unsupported or malformed configuration (Cartan type out of window,
    /// rank mismatch, non-prime modulus, ...).
    #[error("configuration error: {0}")]
    Config(String),
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Malformed user-facing input (unparseable words, coweights, rationals).
    #[error("usage error: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

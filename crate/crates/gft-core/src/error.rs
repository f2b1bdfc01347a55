//! Error type shared across the crate.

use num_complex::Complex64;
use thiserror::Error;

/// Everything that can go wrong while evaluating or solving.
#[derive(Debug, Error)]
pub enum GftError {
    /// Evaluation requested outside the open unit disk.
    #[error("point outside the open unit disk: |z| = {modulus}")]
    OutsideDisk { modulus: f64 },

    /// A functional hit a zero of `f` or `f'` where it must divide by it.
    #[error("pole in {what} at z = {z}: denominator modulus {denom:.3e} below guard")]
    Pole {
        what: &'static str,
        z: Complex64,
        denom: f64,
    },

    /// A parameter violated its documented domain.
    #[error("parameter out of domain: {0}")]
    Domain(String),

    /// Quadrature failed to reach the requested accuracy.
    #[error("quadrature did not converge: achieved {achieved:.3e}, wanted {wanted:.3e}")]
    Quadrature { achieved: f64, wanted: f64 },

    /// A root scan found no sign change on (0, 1).
    #[error("no sign change on (0, 1) for `{0}`")]
    NoBracket(String),

    /// The requested table entry does not exist.
    #[error("no tabulated disk radius for class {0}")]
    NotTabulated(&'static str),

    /// Malformed input document.
    #[error("bad series document: {0}")]
    BadDocument(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, GftError>;

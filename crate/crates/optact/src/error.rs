//! Error type shared across the crate.

use thiserror::Error;

/// Errors reported by the fallible operations in this crate.
///
/// Most of the library is total on finite inputs; the variants below cover
/// the few places where a precondition is worth rejecting instead of
/// silently producing garbage.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The series matrix exponential hit its term cap before the tail fell
    /// under the requested tolerance. Unreachable for finite inputs with the
    /// default settings; NaN or infinite entries end up here.
    #[error("matrix exponential series did not converge within {max_terms} terms (last term norm {last_term_norm:e})")]
    SeriesDidNotConverge {
        max_terms: usize,
        last_term_norm: f64,
    },

    /// `lift` requires a unimodular matrix; overall scalars such as the
    /// attenuation factor must be stripped by the caller first.
    #[error("matrix is not unimodular: det = {det} (|det - 1| exceeds {tol:e})")]
    NotUnimodular { det: f64, tol: f64 },

    /// A space-like four-momentum needs `0 <= energy < momentum`.
    #[error("not space-like: energy {energy} must satisfy 0 <= energy < momentum {momentum}")]
    NotSpacelike { energy: f64, momentum: f64 },

    /// Mass of a massive little-group kind must be positive.
    #[error("mass must be positive and finite, got {0}")]
    InvalidMass(f64),

    /// Momentum must be positive and finite (non-negative for the massive kind).
    #[error("momentum must be {requirement} and finite, got {value}")]
    InvalidMomentum {
        requirement: &'static str,
        value: f64,
    },
}

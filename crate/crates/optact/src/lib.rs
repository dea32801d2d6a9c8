//! Optical activity under asymmetric attenuation, solved as transfer-matrix
//! algebra, and its correspondence with the Lorentz group.
//!
//! A light ray propagating through a medium that both rotates polarization
//! (rotary power `gamma`) and attenuates the two transverse axes unequally
//! (`mu1`, `mu2`) accumulates, microscopic step by microscopic step, the
//! transfer matrix `e^(-lambda z) exp(G z)` for a fixed non-normal generator
//! `G`. This crate evaluates that matrix in closed form across its three
//! regimes (oscillatory, shear, exponential), checks it against the defining
//! N-step product and a series exponential, propagates Jones states through
//! it, and lifts the whole 2x2 story to 4x4 Lorentz transformations — where
//! the same matrices turn out to implement the little groups that fix a
//! massive, space-like, or light-like four-momentum.
//!
//! The guide in `book/` walks through the concepts chapter by chapter; its
//! code samples compile as part of this crate's doc-tests.
//!
//! ```
//! use optact::medium::{transfer_closed, MediumParams};
//! use optact::optics::{propagate, summarize, JonesState};
//!
//! // A slab of rotary power 2 rad per unit length, attenuating y slightly
//! // harder than x.
//! let params = MediumParams::new(2.0, 0.1, 0.3);
//! let transfer = transfer_closed(&params, 1.0);
//!
//! let out = propagate(&JonesState::linear_x(), &transfer.matrix);
//! let summary = summarize(&out);
//! assert!(summary.intensity_total < 1.0); // lossy medium
//! ```

pub mod error;
pub mod littlegroup;
pub mod mat2;
pub mod mat4;
pub mod medium;
pub mod optics;

pub use error::Error;
pub use mat2::Mat2;
pub use mat4::{minkowski, FourVector, Mat4};
pub use medium::{MediumParams, Regime, TransferResult};
pub use optics::{JonesState, PolarizationSummary};

/// The book's chapters double as doc-tests so the guide can never drift from
/// the library. (mdbook itself does not run Rust snippets; rustdoc does.)
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/rotations-and-squeezes.md")]
    mod rotations_and_squeezes {}
    #[doc = include_str!("../../../book/src/attenuated-medium.md")]
    mod attenuated_medium {}
    #[doc = include_str!("../../../book/src/polarization.md")]
    mod polarization {}
    #[doc = include_str!("../../../book/src/little-groups.md")]
    mod little_groups {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

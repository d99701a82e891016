//! Exact computational certificate that the rank-6 fusion ring
//! K(𝒞(𝔰𝔬₅, 3/2)_ad) admits no pseudounitary categorification.
//!
//! The crate is layered bottom-up:
//!
//! - [`cyclotomic`] and [`certified`]: exact arithmetic in ℚ(ζ₉) and
//!   certified signs of real elements.
//! - [`fusion`]: fusion rings, axiom checks, dimension data.
//! - [`obstruction`]: the braided (modular) obstruction.
//! - [`census`]: the d-number census and the table of candidate center
//!   dimensions.
//! - [`center`]: the induction/restriction search for the Drinfeld center
//!   and the reconstructed subcategory.
//! - [`pipeline`], [`report`], [`fixtures`]: orchestration and output.

pub mod census;
pub mod center;
pub mod certified;
pub mod cyclotomic;
pub mod error;
pub mod fixtures;
pub mod fusion;
pub mod obstruction;
pub mod pipeline;
pub mod report;

pub use cyclotomic::{Automorphism, CycNum};
pub use error::{CertError, CycError};
pub use fusion::FusionRing;

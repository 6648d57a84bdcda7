//! Exact algebra for braids coming from complex plane curves.
//!
//! * [`braid`] holds braid words in the standard generators σ₁..σ_{n−1},
//!   bands and band representations, the permutation/linking/ω
//!   representations, and the standard constructions (Δ², pure generators,
//!   torus braids, cabling).
//! * [`artin`] holds free-group words and the right action of `B_n` on
//!   `F_n`; since that action is faithful it decides equality of braids.
//! * [`puiseux`] turns a parametrized branch `z = t^m, w = t^n + …` into
//!   its cable cascade, a strictly positive braid, and its Milnor number.
//!
//! Strand and generator indices are 1-based everywhere in the public API.

pub mod artin;
pub mod braid;
pub mod puiseux;

mod error;
mod notation;

pub use artin::{braids_equal, product_preserves_total, FreeWord};
pub use braid::{
    Band, BandRepresentation, BraidWord, ClosedBraidInvariants, DeltaForm, InvariantBattery,
    LinkingMatrix, OmegaImage, Permutation,
};
pub use error::{BraidError, ParseError};
pub use puiseux::{BranchError, BranchParam, CableCascade, GaussianRational};

//! Numerical braid monodromy.
//!
//! Over the circle `|z| = ε` the fibre of a curve is a set of distinct
//! points in the `w`-plane moving continuously with `arg z`. Projecting
//! them onto a generic direction and recording each exchange of
//! neighbours, with its sign taken from the direction of rotation of the
//! pair, gives a braid word for the closed braid.
//!
//! Floating point stays inside this crate. Everything it reports that
//! matters is discrete: braid words and the integers derived from them.

mod error;
mod oracle;
mod poly;
mod track;

pub use error::MonodromyError;
pub use oracle::ParametricOracle;
pub use poly::{polynomial_roots, Monomial, PolyCurve};
pub use track::{
    candidate_angles, positivity_check, track_parametric, track_polynomial, FibreKind, PositivityReport,
    TrackConfig, TrackedBraid,
};

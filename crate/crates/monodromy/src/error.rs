use braidcurve_core::{BraidError, ParseError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MonodromyError {
    #[error("fibre points collide near arg z = {phi:.6}: separation {separation:.3e} below tolerance")]
    Collision { phi: f64, separation: f64 },
    #[error("root matching is ambiguous near arg z = {phi:.6}")]
    Ambiguous { phi: f64 },
    #[error("leading coefficient vanishes at z = {re:.6} + {im:.6} i inside the tracked disk")]
    Pole { re: f64, im: f64 },
    #[error("sample budget of {cap} exhausted")]
    SampleCap { cap: usize },
    #[error("fibre has {found} distinct points, expected {expected}")]
    Degenerate { found: usize, expected: usize },
    #[error("polynomial has degree 0 in w")]
    ConstantInW,
    #[error("radius must be positive and finite, got {0}")]
    BadRadius(f64),
    #[error("braid word permutation disagrees with the root permutation")]
    PermutationMismatch,
    #[error("found {count} negative crossing(s) in a run that should be positive")]
    NegativeCrossing { count: usize },
    #[error("eigenvalue solver failed")]
    RootSolver,
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl MonodromyError {
    /// Whether the failure came from a resource limit rather than the input.
    pub fn is_budget(&self) -> bool {
        matches!(self, MonodromyError::SampleCap { .. })
    }
}

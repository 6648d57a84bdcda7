use braidcurve_core::{BraidError, ParseError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("relator {index} is not of the form x_i w x_j⁻¹ w⁻¹")]
    NotWirtinger { index: usize },
    #[error("the presentation has no generators")]
    NoGenerators,
    #[error("symmetric group degree {k} outside 1..=5")]
    DegreeOutOfRange { k: usize },
    #[error("homomorphism search stopped after {cap} nodes")]
    HomCapExceeded { cap: u64 },
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: i64, strands: usize },
    #[error("letter 0 is not a generator")]
    ZeroLetter,
    #[error("band power must be nonzero")]
    ZeroPower,
    #[error("braid is not pure")]
    NotPure,
    #[error("closure of the braid is not a knot")]
    NotKnot,
    #[error("({p}, {q}) is not a coprime pair of admissible integers")]
    NotCoprime { p: i64, q: i64 },
    #[error("need at least {min} strands, got {strands}")]
    TooFewStrands { min: usize, strands: usize },
    #[error("fibre genus formula gives non-integral value for n={n}, e={e}, c={c}")]
    NonIntegralGenus { n: i64, e: i64, c: i64 },
    #[error("fibre surface for n={n}, e={e}, c={c} is disconnected (genus formula gives {genus})")]
    DisconnectedFiber { n: i64, e: i64, c: i64, genus: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error: {0}")]
pub struct ParseError(pub String);

impl ParseError {
    pub(crate) fn new(msg: impl Into<String>) -> Self {
        ParseError(msg.into())
    }
}

impl From<BraidError> for ParseError {
    fn from(e: BraidError) -> Self {
        ParseError(e.to_string())
    }
}

use thiserror::Error;

use crate::graph::Chord;

/// Every failure the library can report.
///
/// Validation errors identify the first violated invariant. `InternalContradiction`
/// is reserved for steps that cannot fail on valid input; hitting it is a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order {n} is too small (need at least {min})")]
    OrderTooSmall { n: usize, min: usize },
    #[error("vertex index {index} out of range for order {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("pair {{{0}, {1}}} is not a chord (self pair or cycle edge)")]
    DegenerateChord(usize, usize),
    #[error("chord {0} listed more than once")]
    DuplicateChord(Chord),
    #[error("wrong chord count: expected {expected}, got {got}")]
    WrongChordCount { expected: usize, got: usize },
    #[error("chords {0} and {1} cross")]
    CrossingChords(Chord, Chord),
    #[error("{0} is not a chord of the graph")]
    NotAChord(Chord),
    #[error("({0}, {1}) is not a boundary edge")]
    NotABoundaryEdge(usize, usize),
    #[error("chord {0} appears in both halves")]
    SharedChord(Chord),
    #[error("order mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("chord {0} has no side of length 4")]
    NotDistance4(Chord),
    #[error("chord {0} has a side of length 3")]
    Distance3ChordExists(Chord),
    #[error("pentagon cut off by {0} does not have both endpoints of degree 3")]
    G5ShapeViolation(Chord),
    #[error("graph is not a generalized sun")]
    NotGeneralizedSun,
    #[error("order {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("coloring has length {got}, graph has order {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("order {n} is not divisible by 4")]
    WrongResidue { n: usize },
    #[error("phase {0} is not in 0..4")]
    InvalidPhase(usize),
    #[error("order {n} too large for exhaustive search with {k} classes (max {max})")]
    TooLarge { n: usize, k: usize, max: usize },
    #[error("bad input: {0}")]
    BadFormat(String),
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::algebra::Family;
use crate::composition::Composition;

/// Errors raised by the algebra routines and the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("composition parts must be positive, got {0:?}")]
    ZeroPart(Vec<usize>),

    #[error("{inner} is not contained in {outer}")]
    NotContained {
        outer: Composition,
        inner: Composition,
    },

    #[error("subset element {element} lies outside 1..{n}")]
    SubsetOutOfRange { element: usize, n: usize },

    #[error("operation needs a nonempty composition")]
    EmptyComposition,

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("size mismatch: |{big}| - |{small}| must equal {diff}")]
    SizeMismatch {
        big: Composition,
        small: Composition,
        diff: usize,
    },

    #[error("cannot combine {0:?} and {1:?} elements")]
    FamilyMismatch(Family, Family),

    #[error("expected a {expected:?} element")]
    WrongFamily { expected: Family },

    #[error("singular system")]
    Singular,

    #[error("element is not in the span of the target basis")]
    NotSpanned,

    #[error("solution is not integral")]
    NotIntegral,

    #[error("unsupported request: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

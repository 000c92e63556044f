use thiserror::Error;

use crate::bases::BasisId;

/// Errors reported by the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("psi-family vectors start at index 1 (psi_0 is not in O)")]
    PsiIndexZero,

    #[error("powered basis elements of X_ij need an exponent n >= 1")]
    ZeroPower,

    #[error("element is not in the Onsager subalgebra")]
    NotInOnsager,

    #[error("unsupported path label {0}; expected one of [0312], [3021], [0321], [3012]")]
    UnsupportedLabel(String),

    #[error("indices must be mutually distinct and lie in 0..=3, got {0:?}")]
    InvalidIndices(Vec<u8>),

    #[error("vector belongs to basis {found}, expected {expected}")]
    BasisMismatch { expected: BasisId, found: BasisId },

    #[error("not a permutation of 0..=3: {0}")]
    InvalidPermutation(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A syntax error at a byte offset of the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {position}: expected {}", expected.join(" or "))]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<String>,
}

impl ParseError {
    pub fn new<S: Into<String>>(position: usize, expected: impl IntoIterator<Item = S>) -> Self {
        ParseError {
            position,
            expected: expected.into_iter().map(Into::into).collect(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

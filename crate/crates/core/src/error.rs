use thiserror::Error;

use crate::parse::ParseError;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("invalid order n = {0}; n must be at least 1")]
    InvalidOrder(u32),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("{subsets} column subsets exceed the minor cap of {cap}")]
    TooManyMinors { subsets: u128, cap: usize },

    #[error("generator {index} is not weighted homogeneous: {polynomial}")]
    NotHomogeneous { index: usize, polynomial: String },

    #[error("quotient is infinite-dimensional")]
    InfiniteDimensional,

    #[error("catalog entry {entry:?}: {message}")]
    Catalog { entry: String, message: String },

    #[error("catalog: {0}")]
    CatalogFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

use crate::squeeze::{ParseError, SqueezeError};

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Squeeze(#[from] SqueezeError),
    #[error("quotient graph of edge class {part} is not a tree")]
    QuotientNotTree { part: u8 },
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("text is empty")]
    EmptyText,

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error("malformed input: {0}")]
    Format(String),

    #[error("invalid range [{i}..{j}] for text of length {n}")]
    InvalidRange { i: usize, j: usize, n: usize },

    #[error("invalid query interval [{x}..{y}] for text of length {n}")]
    InvalidInterval { x: usize, y: usize, n: usize },

    #[error("text of length {n} exceeds the limit of {max}")]
    TextTooLarge { n: usize, max: usize },

    #[error("corrupt index: {0}")]
    CorruptIndex(String),
}

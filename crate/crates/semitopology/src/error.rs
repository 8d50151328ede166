//! Library error type.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("set is not topen (nonempty, open and transitive)")]
    NotTopen,

    #[error("propagation seed is empty")]
    SeedEmpty,

    #[error("propagation seed is not an open set")]
    SeedNotOpen,

    #[error("open family was truncated at its enumeration cap; exact result unavailable")]
    FamilyTruncated,

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("bad parameters: {0}")]
    BadParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;

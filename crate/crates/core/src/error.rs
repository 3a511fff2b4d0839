use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a group: {reason}")]
    NotAGroup { reason: String },

    #[error("size limit: {what} has size {size}, bound is {bound}")]
    SizeLimit { what: String, size: u128, bound: u128 },

    #[error("orders differ: dot has order {dot}, circle has order {circle}")]
    OrderMismatch { dot: usize, circle: usize },

    #[error("identities differ: dot identity {dot}, circle identity {circle}")]
    IdentityMismatch { dot: usize, circle: usize },

    #[error("brace relation fails at a={a}, b={b}, c={c}")]
    BraceRelationFails { a: usize, b: usize, c: usize },

    #[error("search budget exhausted: {budget}")]
    Timeout { budget: String },

    #[error("additive group is not non-abelian simple")]
    NotSimpleAdditive,

    #[error("additive group is not the canonical power coding: {reason}")]
    CodingMismatch { reason: String },

    #[error("unknown group family: {0}")]
    UnknownFamily(String),

    #[error("table corrupt at row {row}: {detail}")]
    TableCorrupt { row: String, detail: String },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn size_limit(what: impl Into<String>, size: impl Into<u128>, bound: impl Into<u128>) -> Self {
        Error::SizeLimit {
            what: what.into(),
            size: size.into(),
            bound: bound.into(),
        }
    }

    pub(crate) fn not_a_group(reason: impl Into<String>) -> Self {
        Error::NotAGroup {
            reason: reason.into(),
        }
    }

    /// Resource errors (as opposed to malformed input or failed checks).
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::SizeLimit { .. } | Error::Timeout { .. })
    }
}

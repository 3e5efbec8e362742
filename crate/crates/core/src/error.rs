use thiserror::Error;

use crate::poset::color::ColorSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order parameter n = {0} is out of range (need n >= {1})")]
    OrderTooSmall(usize, usize),

    #[error("color set {set} is not admissible: {rule}")]
    NotAdmissible { set: ColorSet, rule: &'static str },

    #[error("color set {0} does not contain green")]
    MissingGreen(ColorSet),

    #[error("unknown color character {0:?}")]
    UnknownColor(char),

    #[error("{0}")]
    InvalidObject(String),

    #[error("array does not satisfy the {family} constraints: {detail}")]
    ConstraintMismatch { family: &'static str, detail: String },

    #[error("resource budget exceeded: {what} ({needed} > limit {limit})")]
    BudgetExceeded {
        what: &'static str,
        needed: String,
        limit: String,
    },

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("polynomial contains the lambda variable")]
    LambdaPresent,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidObject(msg.into())
}

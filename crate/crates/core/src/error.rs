//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("connective {symbol} at position {pos} is not in signature {signature}")]
    NotInSignature {
        symbol: String,
        signature: String,
        pos: usize,
    },
    #[error("connective {symbol} is not in signature {signature}")]
    SignatureMismatch { symbol: String, signature: String },
    #[error("operation needs connective {symbol}, missing from signature {signature}")]
    MissingConnective { symbol: String, signature: String },
    #[error("table for {connective} has an empty result at {tuple}")]
    EmptyResult { connective: String, tuple: String },
    #[error("table for {connective} has no entry for {tuple}")]
    MissingTuple { connective: String, tuple: String },
    #[error("unknown connective {0}")]
    UnknownConnective(String),
    #[error("designated value {0} is not in the carrier")]
    DesignatedOutOfCarrier(String),
    #[error("unknown value {0}")]
    UnknownValue(String),
    #[error("unknown logic {0}")]
    UnknownLogic(String),
    #[error("invalid level: {0}")]
    InvalidLevel(String),
    #[error("logic {0} has no tableau calculus")]
    NoTableauCalculus(String),
    #[error("branch is not complete")]
    BranchNotComplete,
    #[error("open branch admits no restricted valuation")]
    NoExtension,
    #[error("row limit of {limit} exceeded")]
    RowLimit { limit: u64 },
    #[error("carrier too large: {0}")]
    CarrierTooLarge(usize),
    #[error("formula is not in the translation image: {0}")]
    NotInImage(String),
    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Error type shared across the crate.

use thiserror::Error;

/// Errors surfaced by parsing, group generation, enumeration, and the
/// exact series algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed cycle notation at byte {position}: {reason}")]
    MalformedCycles {
        position: usize,
        reason: &'static str,
    },

    #[error("cycle entry {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("index {index} repeated within one cycle")]
    RepeatedIndex { index: usize },

    #[error("invalid permutation image list: {0}")]
    InvalidPermutation(&'static str),

    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("arity {n} exceeds the supported maximum {max}")]
    ArityTooLarge { n: usize, max: usize },

    #[error("group order cap {cap} exceeded: at least {partial_order} elements generated")]
    OrderCapExceeded { partial_order: usize, cap: usize },

    #[error("monomial count {count} exceeds cap {cap}")]
    MonomialCapExceeded { count: u128, cap: usize },

    #[error("zero denominator in rational function")]
    ZeroDenominator,

    #[error("series expansion needs a nonzero constant term in the denominator")]
    ZeroConstantTerm,

    #[error("degree of the zero rational function is undefined")]
    ZeroRationalFunction,

    #[error("character is not realizable over F_{p}: the table takes the value -1")]
    UnrealizableCharacter { p: u32 },

    #[error("{0} is neither zero nor prime")]
    InvalidCharacteristic(u32),

    #[error("internal cross-check failed: {0}")]
    InternalCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;

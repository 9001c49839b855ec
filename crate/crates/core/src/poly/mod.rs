//! Exact multivariate polynomials over a runtime coefficient field.

mod context;
mod field;
mod monomial;
mod parse;
mod polynomial;
mod subst;

pub use context::{Ring, RingContext, DEFAULT_EXPONENT_CAP};
pub use field::{Field, FieldDescriptor, PrimeField, Rationals};
pub use monomial::{Exponents, Monomial, TermOrder};
pub use parse::{parse, parse_with};
pub use polynomial::Polynomial;
pub use subst::Substitution;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials belong to different rings")]
    ContextMismatch,
    #[error("invalid ring: {0}")]
    InvalidContext(String),
    #[error("invalid coefficient field: {0}")]
    InvalidField(String),
    #[error("invalid substitution: {0}")]
    InvalidSubstitution(String),
    #[error("unknown identifier `{name}` at offset {pos}")]
    UnknownIdentifier { pos: usize, name: String },
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("exponent exceeds cap {cap} at offset {pos}")]
    ExponentOverflow { pos: usize, cap: u32 },
}

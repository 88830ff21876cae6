//! Exact scalar, polynomial and cyclotomic-field arithmetic.

pub mod cyclotomic;
pub mod laurent;
pub mod rational;
pub mod ring;

use thiserror::Error;

pub use cyclotomic::{
    cyclotomic_poly, lhopital_at_root, reduce, CyclotomicJson, CyclotomicNumber, CyclotomicRing,
    IntPoly,
};
pub use laurent::LaurentPoly;
pub use rational::{format_rational, int, parse_rational, rat, to_i64, Rational};
pub use ring::{FormalQ, QField, QRing, RationalPoint};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("the order of a root of unity must be at least 1")]
    ZeroOrder,
    #[error("division by zero")]
    DivisionByZero,
    #[error("l'Hopital limit undefined: F(zeta_{order}) = {value} is not zero")]
    NonVanishing { order: u64, value: String },
    #[error("expected an integer: {0}")]
    NonIntegral(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
}

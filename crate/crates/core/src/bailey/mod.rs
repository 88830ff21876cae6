//! Bailey pairs relative to `q`, the Bailey lemma and its consequences.
//!
//! Everything here is generic over a [`QField`](crate::arith::QField): pairs
//! are checked exactly at rational points and can also be evaluated in
//! `Q(ζ_N)` wherever their denominators do not vanish.

pub mod chain;
pub mod key_lemma;
pub mod lemma;
pub mod monomial;
pub mod pair;
pub mod seeds;
pub mod verify;

use thiserror::Error;

use crate::arith::ArithError;

pub use chain::{chain_alpha_closed_form, composed_chain, explicit_chain_beta, ChainKind};
pub use key_lemma::{key_lemma_eval, KeyLemma};
pub use lemma::{apply_general, apply_step, apply_steps, BetaPrimeForm, ChainStep};
pub use monomial::Monomial;
pub use pair::BaileyPair;
pub use seeds::SeedId;
pub use verify::{
    default_points, first_pair_mismatch, sample_point, verify_key_lemma, verify_pair, CheckReport,
    PairRecipe, PointCheck,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BaileyError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("denominator {factor} vanishes at {at}")]
    VanishingDenominator { factor: String, at: String },
    #[error("sample point q = {0} is not allowed: need q != 0 and |q| != 1")]
    BadSamplePoint(String),
    #[error("{operation} needs a pair in base q^{expected}, got base q^{found}")]
    BaseExponent {
        operation: &'static str,
        expected: i64,
        found: i64,
    },
    #[error("unknown seed pair {0:?}")]
    UnknownSeed(String),
    #[error("index n = {0} is outside the lemma's range")]
    IndexOutOfRange(i64),
}

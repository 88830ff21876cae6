//! Monomial parameters `c·q^e` for the Bailey lemma.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::rational::serde_str;
use crate::arith::{format_rational, int, QRing, Rational};
use crate::qseries::pochhammer_monomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monomial {
    #[serde(with = "serde_str")]
    pub coeff: Rational,
    pub exponent: i64,
}

impl Monomial {
    /// `coeff · q^exponent`. Panics on a zero coefficient.
    pub fn new(coeff: Rational, exponent: i64) -> Self {
        assert!(!coeff.is_zero(), "monomial parameter must be nonzero");
        Self { coeff, exponent }
    }

    pub fn q_pow(exponent: i64) -> Self {
        Self::new(int(1), exponent)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.coeff * &other.coeff, self.exponent + other.exponent)
    }

    pub fn inv(&self) -> Self {
        Self::new(self.coeff.recip(), -self.exponent)
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.coeff, self.exponent)
    }

    pub fn pow(&self, n: i64) -> Self {
        let c = if n >= 0 {
            num_traits::pow(self.coeff.clone(), n as usize)
        } else {
            num_traits::pow(self.coeff.recip(), n.unsigned_abs() as usize)
        };
        Self::new(c, self.exponent * n)
    }

    pub fn eval<R: QRing>(&self, ring: &R) -> R::Elem {
        ring.monomial(&self.coeff, self.exponent)
    }

    /// `(self; q^s)_n`.
    pub fn poch<R: QRing>(&self, ring: &R, base_exponent: i64, n: usize) -> R::Elem {
        pochhammer_monomial(ring, &self.coeff, self.exponent, base_exponent, n)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_one() {
            write!(f, "q^{}", self.exponent)
        } else {
            write!(f, "({})*q^{}", format_rational(&self.coeff), self.exponent)
        }
    }
}

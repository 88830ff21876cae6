//! Evaluation contexts for q-series.
//!
//! The same Pochhammer, binomial and Bailey-pair code runs against three
//! contexts: a rational sample point `q = r`, a primitive root of unity
//! `q = ζ_N`, and the formal ring of Laurent polynomials in `q`.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Pow, Zero};

use super::cyclotomic::{CyclotomicNumber, CyclotomicRing};
use super::laurent::LaurentPoly;
use super::rational::{format_rational, int, Rational};
use super::ArithError;

/// A commutative ring containing `Q` and an invertible element `q`.
#[allow(clippy::wrong_self_convention)]
pub trait QRing: Clone + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_rational(&self, r: &Rational) -> Self::Elem;
    /// `q^e` for any integer `e`.
    fn q_pow(&self, e: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, r: &Rational) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_rational(&int(n))
    }

    /// `c · q^e`.
    fn monomial(&self, c: &Rational, e: i64) -> Self::Elem {
        self.scale(&self.q_pow(e), c)
    }

    /// `a · q^e`.
    fn mul_q_pow(&self, a: &Self::Elem, e: i64) -> Self::Elem {
        self.mul(a, &self.q_pow(e))
    }

    /// `(-1)^k · a`.
    fn signed(&self, a: &Self::Elem, k: i64) -> Self::Elem {
        if k.rem_euclid(2) == 0 {
            a.clone()
        } else {
            self.neg(a)
        }
    }

    fn sum<I: IntoIterator<Item = Self::Elem>>(&self, it: I) -> Self::Elem {
        it.into_iter().fold(self.zero(), |acc, x| self.add(&acc, &x))
    }

    fn product<I: IntoIterator<Item = Self::Elem>>(&self, it: I) -> Self::Elem {
        it.into_iter().fold(self.one(), |acc, x| self.mul(&acc, &x))
    }

    /// Short description for error messages, e.g. `q = 2/3`.
    fn describe(&self) -> String;
}

/// A [`QRing`] that is a field.
pub trait QField: QRing {
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, ArithError>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, ArithError> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

/// Evaluation at a fixed non-zero rational `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoint {
    q: Rational,
    q_inv: Rational,
}

impl RationalPoint {
    pub fn new(q: Rational) -> Result<Self, ArithError> {
        if q.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let q_inv = q.recip();
        Ok(Self { q, q_inv })
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }
}

impl QRing for RationalPoint {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn from_rational(&self, r: &Rational) -> Rational {
        r.clone()
    }
    fn q_pow(&self, e: i64) -> Rational {
        let exp = u32::try_from(e.unsigned_abs()).expect("exponent fits in u32");
        if e >= 0 {
            Pow::pow(&self.q, exp)
        } else {
            Pow::pow(&self.q_inv, exp)
        }
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn scale(&self, a: &Rational, r: &Rational) -> Rational {
        a * r
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn describe(&self) -> String {
        format!("q = {}", format_rational(&self.q))
    }
}

impl QField for RationalPoint {
    fn inv(&self, a: &Rational) -> Result<Rational, ArithError> {
        if a.is_zero() {
            Err(ArithError::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }
}

impl QRing for Arc<CyclotomicRing> {
    type Elem = CyclotomicNumber;

    fn zero(&self) -> CyclotomicNumber {
        CyclotomicRing::zero(self)
    }
    fn one(&self) -> CyclotomicNumber {
        CyclotomicRing::one(self)
    }
    fn from_rational(&self, r: &Rational) -> CyclotomicNumber {
        CyclotomicRing::from_rational(self, r)
    }
    fn q_pow(&self, e: i64) -> CyclotomicNumber {
        self.zeta_pow(e)
    }
    fn monomial(&self, c: &Rational, e: i64) -> CyclotomicNumber {
        CyclotomicRing::monomial(self, c.clone(), e)
    }
    fn mul_q_pow(&self, a: &CyclotomicNumber, e: i64) -> CyclotomicNumber {
        a.mul_zeta_pow(e)
    }
    fn add(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        a + b
    }
    fn sub(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        a - b
    }
    fn mul(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        a * b
    }
    fn neg(&self, a: &CyclotomicNumber) -> CyclotomicNumber {
        -a
    }
    fn scale(&self, a: &CyclotomicNumber, r: &Rational) -> CyclotomicNumber {
        a.scale(r)
    }
    fn is_zero(&self, a: &CyclotomicNumber) -> bool {
        a.is_zero()
    }
    fn describe(&self) -> String {
        format!("q = zeta_{}", self.order())
    }
}

impl QField for Arc<CyclotomicRing> {
    fn inv(&self, a: &CyclotomicNumber) -> Result<CyclotomicNumber, ArithError> {
        a.invert()
    }
}

/// The formal ring `Q[q, q^{-1}]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FormalQ;

impl QRing for FormalQ {
    type Elem = LaurentPoly;

    fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero()
    }
    fn one(&self) -> LaurentPoly {
        LaurentPoly::one()
    }
    fn from_rational(&self, r: &Rational) -> LaurentPoly {
        LaurentPoly::constant(r.clone())
    }
    fn q_pow(&self, e: i64) -> LaurentPoly {
        LaurentPoly::q_pow(e)
    }
    fn monomial(&self, c: &Rational, e: i64) -> LaurentPoly {
        LaurentPoly::monomial(c.clone(), e)
    }
    fn mul_q_pow(&self, a: &LaurentPoly, e: i64) -> LaurentPoly {
        a.shift(e)
    }
    fn add(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a + b
    }
    fn sub(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a - b
    }
    fn mul(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a * b
    }
    fn neg(&self, a: &LaurentPoly) -> LaurentPoly {
        -a
    }
    fn scale(&self, a: &LaurentPoly, r: &Rational) -> LaurentPoly {
        a.scale(r)
    }
    fn is_zero(&self, a: &LaurentPoly) -> bool {
        a.is_zero()
    }
    fn describe(&self) -> String {
        "formal q".to_string()
    }
}

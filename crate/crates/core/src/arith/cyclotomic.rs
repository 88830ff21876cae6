//! Cyclotomic polynomials and exact arithmetic in `Q(ζ_N)`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(N)-1}` modulo `Φ_N`,
//! so two elements are equal exactly when their coordinate vectors are.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::LaurentPoly;
use super::rational::{format_rational, int, parse_rational, Rational};
use super::ArithError;

/// Dense integer polynomial, lowest degree first, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `q^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[0] = BigInt::from(-1);
        c[n] = BigInt::one();
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(vec![]);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Exact quotient by a monic divisor. Returns `None` if the division
    /// leaves a remainder.
    pub fn div_exact_monic(&self, divisor: &Self) -> Option<Self> {
        let d = divisor.degree()?;
        assert!(divisor.coeffs[d].is_one(), "divisor must be monic");
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return rem.iter().all(Zero::is_zero).then(|| Self::new(vec![]));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let c = std::mem::take(&mut rem[i]);
            if c.is_zero() {
                continue;
            }
            for (j, t) in divisor.coeffs[..d].iter().enumerate() {
                rem[i - d + j] -= &c * t;
            }
            quot[i - d] = c;
        }
        rem.iter().all(Zero::is_zero).then(|| Self::new(quot))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (e, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{a}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{a}*q^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The `N`th cyclotomic polynomial, computed by dividing `q^N - 1` by `Φ_d`
/// for every proper divisor `d` of `N`.
pub fn cyclotomic_poly(n: u64) -> Result<IntPoly, ArithError> {
    if n == 0 {
        return Err(ArithError::ZeroOrder);
    }
    let mut cache = HashMap::new();
    Ok(cyclotomic_cached(n, &mut cache))
}

fn cyclotomic_cached(n: u64, cache: &mut HashMap<u64, IntPoly>) -> IntPoly {
    if let Some(p) = cache.get(&n) {
        return p.clone();
    }
    let mut p = IntPoly::x_pow_minus_one(n as usize);
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let phi_d = cyclotomic_cached(d, cache);
        p = p
            .div_exact_monic(&phi_d)
            .expect("Φ_d divides q^N - 1 for every divisor d");
    }
    cache.insert(n, p.clone());
    p
}

/// `Q(ζ_N)` for a primitive `N`th root of unity `ζ_N`, i.e. `Q[q]/(Φ_N)`.
pub struct CyclotomicRing {
    order: u64,
    phi: IntPoly,
    degree: usize,
    /// Non-zero coefficients of `Φ_N - q^degree`, used for reduction.
    tail: Vec<(usize, Rational)>,
}

impl fmt::Debug for CyclotomicRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.order)
    }
}

impl CyclotomicRing {
    pub fn new(order: u64) -> Result<Arc<Self>, ArithError> {
        let phi = cyclotomic_poly(order)?;
        let degree = phi.degree().expect("Φ_N is non-constant");
        let tail = phi.coeffs()[..degree]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j, Rational::from_integer(c.clone())))
            .collect();
        Ok(Arc::new(Self {
            order,
            phi,
            degree,
            tail,
        }))
    }

    /// `N`, the exact multiplicative order of `ζ`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// `φ(N)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn phi(&self) -> &IntPoly {
        &self.phi
    }

    pub fn is_even(&self) -> bool {
        self.order.is_even()
    }

    pub fn is_odd(&self) -> bool {
        self.order.is_odd()
    }

    /// Reduces a dense coefficient vector (any length, lowest degree first)
    /// modulo `Φ_N` to exactly `degree` coordinates.
    pub(crate) fn reduce_dense(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree;
        for i in (d..v.len()).rev() {
            let c = std::mem::take(&mut v[i]);
            if c.is_zero() {
                continue;
            }
            for (j, t) in &self.tail {
                v[i - d + j] -= &c * t;
            }
        }
        v.resize(d, Rational::zero());
        v
    }

    /// Reduces `Σ bins[e] ζ^e`.
    pub fn from_bins(self: &Arc<Self>, bins: Vec<Rational>) -> CyclotomicNumber {
        CyclotomicNumber {
            ring: Arc::clone(self),
            coeffs: self.reduce_dense(bins),
        }
    }

    /// Canonical exponent of `ζ^e` in `[0, N)`.
    pub fn exponent_mod(&self, e: i64) -> usize {
        e.rem_euclid(self.order as i64) as usize
    }

    pub fn zero(self: &Arc<Self>) -> CyclotomicNumber {
        CyclotomicNumber {
            ring: Arc::clone(self),
            coeffs: vec![Rational::zero(); self.degree],
        }
    }

    pub fn one(self: &Arc<Self>) -> CyclotomicNumber {
        self.from_rational(&Rational::one())
    }

    pub fn from_rational(self: &Arc<Self>, r: &Rational) -> CyclotomicNumber {
        let mut x = self.zero();
        x.coeffs[0] = r.clone();
        x
    }

    /// `ζ^e` for any integer `e`; negative exponents use `ζ^{-1} = ζ^{N-1}`.
    pub fn zeta_pow(self: &Arc<Self>, e: i64) -> CyclotomicNumber {
        self.monomial(Rational::one(), e)
    }

    /// `c · ζ^e`.
    pub fn monomial(self: &Arc<Self>, c: Rational, e: i64) -> CyclotomicNumber {
        let e = self.exponent_mod(e);
        let mut v = vec![Rational::zero(); (e + 1).max(self.degree)];
        v[e] = c;
        self.from_bins(v)
    }
}

/// An element of `Q(ζ_N)` in the power basis.
#[derive(Clone)]
pub struct CyclotomicNumber {
    ring: Arc<CyclotomicRing>,
    coeffs: Vec<Rational>,
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.ring.order == other.ring.order && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl CyclotomicNumber {
    /// Builds an element from power-basis coordinates. Longer inputs are
    /// reduced modulo `Φ_N`.
    pub fn from_coeffs(ring: &Arc<CyclotomicRing>, coeffs: Vec<Rational>) -> Self {
        ring.from_bins(coeffs)
    }

    pub fn ring(&self) -> &Arc<CyclotomicRing> {
        &self.ring
    }

    pub fn order(&self) -> u64 {
        self.ring.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    fn check_ring(&self, other: &Self) {
        assert_eq!(
            self.ring.order, other.ring.order,
            "operands live in different cyclotomic fields"
        );
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            ring: Arc::clone(&self.ring),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplies by `ζ^e`.
    pub fn mul_zeta_pow(&self, e: i64) -> Self {
        let s = self.ring.exponent_mod(e);
        if s == 0 {
            return self.clone();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + s];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i + s] = c.clone();
        }
        self.ring.from_bins(v)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = self.ring.one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `Φ_N`.
    pub fn invert(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let phi: Vec<Rational> = self
            .ring
            .phi
            .coeffs()
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let (mut r0, mut r1) = (phi, trim(self.coeffs.clone()));
        let (mut s0, mut s1) = (Vec::new(), vec![Rational::one()]);
        while !r1.is_empty() {
            let (quot, rem) = poly_divrem(&r0, &r1);
            let next_s = poly_sub(&s0, &poly_mul(&quot, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, next_s);
        }
        // Φ_N is irreducible, so the gcd is a non-zero constant.
        debug_assert_eq!(r0.len(), 1);
        let g = r0[0].clone();
        let inv: Vec<Rational> = s0.into_iter().map(|c| c / &g).collect();
        Ok(self.ring.from_bins(inv))
    }

    /// Image under the automorphism `ζ ↦ ζ^{-1}`, i.e. the substitution
    /// `q ↦ 1/q`.
    pub fn inversion_map(&self) -> Self {
        let n = self.ring.order as usize;
        let mut bins = vec![Rational::zero(); n.max(self.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            bins[(n - i) % n] += c;
        }
        self.ring.from_bins(bins)
    }

    pub fn to_json_repr(&self) -> CyclotomicJson {
        CyclotomicJson {
            n: self.ring.order,
            coeffs: self.coeffs.iter().map(format_rational).collect(),
        }
    }

    pub fn from_json_repr(repr: &CyclotomicJson) -> Result<Self, ArithError> {
        let ring = CyclotomicRing::new(repr.n)?;
        if repr.coeffs.len() != ring.degree() {
            return Err(ArithError::Parse(format!(
                "expected {} coefficients for N = {}, got {}",
                ring.degree(),
                repr.n,
                repr.coeffs.len()
            )));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { ring, coeffs })
    }
}

/// Wire form `{"N": int, "coeffs": ["num/den", ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicJson {
    #[serde(rename = "N")]
    pub n: u64,
    pub coeffs: Vec<String>,
}

impl Serialize for CyclotomicNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json_repr().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CyclotomicNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = CyclotomicJson::deserialize(deserializer)?;
        Self::from_json_repr(&repr).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in Q(zeta_{})", self.ring.order)
    }
}

/// Human form in terms of `z = ζ_N`, e.g. `-2 + z`.
impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, a) = (c.is_negative(), c.abs());
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{a}*z")?,
                (_, true) => write!(f, "z^{i}")?,
                (_, false) => write!(f, "{a}*z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.check_ring(rhs);
        CyclotomicNumber {
            ring: Arc::clone(&self.ring),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.check_ring(rhs);
        CyclotomicNumber {
            ring: Arc::clone(&self.ring),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            ring: Arc::clone(&self.ring),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.check_ring(rhs);
        let d = self.coeffs.len();
        let mut v = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        self.ring.from_bins(v)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}

/// Image of `p` under `q ↦ ζ_N`.
pub fn reduce(p: &LaurentPoly, ring: &Arc<CyclotomicRing>) -> CyclotomicNumber {
    let n = ring.order() as usize;
    let mut bins = vec![Rational::zero(); n.max(ring.degree())];
    for (e, c) in p.terms() {
        bins[ring.exponent_mod(e)] += c;
    }
    ring.from_bins(bins)
}

/// `lim_{q→ζ_N} F(q) / (1 - q^N)`, which equals `(-ζ_N / N) · F'(ζ_N)` when
/// `F(ζ_N) = 0`.
pub fn lhopital_at_root(
    f: &LaurentPoly,
    ring: &Arc<CyclotomicRing>,
) -> Result<CyclotomicNumber, ArithError> {
    let at_root = reduce(f, ring);
    if !at_root.is_zero() {
        return Err(ArithError::NonVanishing {
            order: ring.order(),
            value: at_root.to_string(),
        });
    }
    let slope = reduce(&f.derivative(), ring);
    let n = int(ring.order() as i64);
    Ok(slope.mul_zeta_pow(1).scale(&(-Rational::one() / n)))
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    if rem.len() < b.len() {
        return (Vec::new(), trim(rem));
    }
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        let c = std::mem::take(&mut rem[i]) / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, t) in b[..db].iter().enumerate() {
            rem[i - db + j] -= &c * t;
        }
        quot[i - db] = c;
    }
    rem.truncate(db);
    (trim(quot), trim(rem))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;

    fn ring(n: u64) -> Arc<CyclotomicRing> {
        CyclotomicRing::new(n).unwrap()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1).unwrap(), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_poly(4).unwrap(), IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6).unwrap(), IntPoly::from_i64(&[1, -1, 1]));
        assert!(matches!(cyclotomic_poly(0), Err(ArithError::ZeroOrder)));
    }

    #[test]
    fn phi_105_has_a_coefficient_of_minus_two() {
        // Smallest N whose Φ_N has a coefficient outside {-1, 0, 1}.
        let p = cyclotomic_poly(105).unwrap();
        assert_eq!(p.degree(), Some(48));
        assert!(p.coeffs().iter().any(|c| *c == BigInt::from(-2)));
    }

    #[test]
    fn display_int_poly() {
        assert_eq!(cyclotomic_poly(6).unwrap().to_string(), "q^2 - q + 1");
        assert_eq!(cyclotomic_poly(1).unwrap().to_string(), "q - 1");
    }

    #[test]
    fn reduce_examples() {
        let r4 = ring(4);
        let inv = reduce(&LaurentPoly::q_pow(-1), &r4);
        assert_eq!(inv.coeffs(), &[int(0), int(-1)]);
        for n in [1, 2, 5, 12] {
            let r = ring(n);
            assert_eq!(reduce(&LaurentPoly::q_pow(n as i64), &r), r.one());
        }
        let c = reduce(&LaurentPoly::constant(rat(7, 3)), &r4);
        assert_eq!(c.coeffs(), &[rat(7, 3), int(0)]);
    }

    #[test]
    fn field_examples() {
        let r4 = ring(4);
        let z = r4.zeta_pow(1);
        let prod = &(&r4.one() + &z) * &(&r4.one() - &z);
        assert_eq!(prod, r4.from_rational(&int(2)));
        for n in [1, 3, 4, 7, 12] {
            let r = ring(n);
            assert_eq!(r.zeta_pow(1).invert().unwrap(), r.zeta_pow(n as i64 - 1));
        }
        let x = &r4.from_rational(&rat(1, 2)) + &z;
        assert_eq!(&x + &r4.zero(), x);
        assert!(matches!(r4.zero().invert(), Err(ArithError::DivisionByZero)));
    }

    #[test]
    fn zeta_has_exact_order() {
        for n in 1..=24u64 {
            let r = ring(n);
            let z = r.zeta_pow(1);
            assert_eq!(z.pow(n as u32), r.one(), "ζ^N = 1 for N = {n}");
            for k in 1..n {
                assert_ne!(z.pow(k as u32), r.one(), "ζ^{k} ≠ 1 for N = {n}");
            }
        }
    }

    #[test]
    #[should_panic(expected = "different cyclotomic fields")]
    fn mixed_rings_are_a_usage_error() {
        let _ = &ring(3).one() + &ring(4).one();
    }

    #[test]
    fn inversion_map_examples() {
        let r4 = ring(4);
        assert_eq!(r4.zeta_pow(1).inversion_map(), -&r4.zeta_pow(1));
        let c = r4.from_rational(&rat(-5, 3));
        assert_eq!(c.inversion_map(), c);
    }

    #[test]
    fn lhopital_examples() {
        for n in [1i64, 2, 3, 6, 10] {
            let r = ring(n as u64);
            let one_minus = &LaurentPoly::one() - &LaurentPoly::q_pow(n);
            assert_eq!(lhopital_at_root(&one_minus, &r).unwrap(), r.one());
            let squared = &one_minus * &one_minus;
            assert!(lhopital_at_root(&squared, &r).unwrap().is_zero());
            let f = &LaurentPoly::q_pow(n) - &LaurentPoly::q_pow(2 * n);
            assert_eq!(lhopital_at_root(&f, &r).unwrap(), r.one());
        }
        let err = lhopital_at_root(&LaurentPoly::one(), &ring(5)).unwrap_err();
        assert!(matches!(err, ArithError::NonVanishing { order: 5, .. }));
    }

    #[test]
    fn json_form() {
        let r4 = ring(4);
        let x = &r4.from_rational(&int(-2)) + &r4.zeta_pow(1);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"N":4,"coeffs":["-2/1","1/1"]}"#);
        let back: CyclotomicNumber = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<CyclotomicNumber>(r#"{"N":4,"coeffs":["1/1"]}"#).is_err());
    }

    #[test]
    fn display_form() {
        let r4 = ring(4);
        let x = &r4.from_rational(&int(-2)) + &r4.zeta_pow(1);
        assert_eq!(x.to_string(), "-2 + z");
        assert_eq!(r4.zero().to_string(), "0");
        assert_eq!(r4.monomial(rat(-3, 2), 1).to_string(), "-3/2*z");
    }
}

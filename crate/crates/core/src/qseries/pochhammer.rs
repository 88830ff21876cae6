//! q-Pochhammer symbols `(a; q^s)_n` with monomial `a`.

use serde::{Deserialize, Serialize};

use crate::arith::{QRing, Rational};

/// The monomial argument `a = sign · q^{q_exponent}` of a Pochhammer symbol
/// taken in base `q^{base_exponent}`, so that
/// `(a; q^s)_n = Π_{k=0}^{n-1} (1 - a q^{s k})`.
///
/// A negative `base_exponent` is allowed and gives symbols such as
/// `(q^{-1}; q^{-1})_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PochArgument {
    pub sign: i8,
    pub q_exponent: i64,
    pub base_exponent: i64,
}

impl PochArgument {
    pub fn new(sign: i8, q_exponent: i64, base_exponent: i64) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be ±1");
        assert!(base_exponent != 0, "base q^0 = 1 is degenerate");
        Self {
            sign,
            q_exponent,
            base_exponent,
        }
    }

    /// `(q^e; q^s)`.
    pub fn pos(q_exponent: i64, base_exponent: i64) -> Self {
        Self::new(1, q_exponent, base_exponent)
    }

    /// `(-q^e; q^s)`.
    pub fn neg(q_exponent: i64, base_exponent: i64) -> Self {
        Self::new(-1, q_exponent, base_exponent)
    }

    /// The `k`th factor `1 - a q^{s k}`.
    pub fn factor<R: QRing>(&self, ring: &R, k: i64) -> R::Elem {
        let term = ring.q_pow(self.q_exponent + self.base_exponent * k);
        if self.sign > 0 {
            ring.sub(&ring.one(), &term)
        } else {
            ring.add(&ring.one(), &term)
        }
    }

    /// `x · (1 - a q^{s k})`, computed as a shift rather than a full product.
    pub fn apply_factor<R: QRing>(&self, ring: &R, x: &R::Elem, k: i64) -> R::Elem {
        let shifted = ring.mul_q_pow(x, self.q_exponent + self.base_exponent * k);
        if self.sign > 0 {
            ring.sub(x, &shifted)
        } else {
            ring.add(x, &shifted)
        }
    }
}

/// `(arg)_n` evaluated in `ring`. The empty product `(arg)_0` is 1.
pub fn pochhammer<R: QRing>(ring: &R, arg: PochArgument, n: usize) -> R::Elem {
    (0..n as i64).fold(ring.one(), |acc, k| arg.apply_factor(ring, &acc, k))
}

/// `(c q^e; q^s)_n` for a general rational coefficient `c`.
pub fn pochhammer_monomial<R: QRing>(
    ring: &R,
    c: &Rational,
    q_exponent: i64,
    base_exponent: i64,
    n: usize,
) -> R::Elem {
    let one = ring.one();
    ring.product(
        (0..n as i64).map(|k| ring.sub(&one, &ring.monomial(c, q_exponent + base_exponent * k))),
    )
}

/// Incremental prefix products `(arg)_0, (arg)_1, …`.
///
/// Once a prefix vanishes every later prefix does too; the stream records the
/// first such index.
#[derive(Clone, Debug)]
pub struct PrefixStream<R: QRing> {
    ring: R,
    arg: PochArgument,
    next_index: usize,
    current: R::Elem,
    first_zero: Option<usize>,
}

impl<R: QRing> PrefixStream<R> {
    pub fn new(ring: &R, arg: PochArgument) -> Self {
        Self {
            current: ring.one(),
            ring: ring.clone(),
            arg,
            next_index: 0,
            first_zero: None,
        }
    }

    /// Index of the first vanishing prefix seen so far.
    pub fn first_zero(&self) -> Option<usize> {
        self.first_zero
    }

    /// Advances until a vanishing prefix is found or `limit` prefixes have
    /// been produced, and reports the first zero index if any.
    pub fn find_first_zero(mut self, limit: usize) -> Option<usize> {
        while self.first_zero.is_none() && self.next_index < limit {
            self.next();
        }
        self.first_zero
    }

    /// Prefixes `(arg)_0, …, (arg)_cap`, stopping before the first vanishing
    /// one. Sums whose terms carry this prefix as a factor may stop there.
    pub fn nonzero_prefixes(self, cap: usize) -> Vec<R::Elem> {
        let ring = self.ring.clone();
        self.take(cap + 1).take_while(|v| !ring.is_zero(v)).collect()
    }
}

impl<R: QRing> Iterator for PrefixStream<R> {
    type Item = R::Elem;

    fn next(&mut self) -> Option<R::Elem> {
        let n = self.next_index;
        if n > 0 && self.first_zero.is_none() {
            self.current = self.arg.apply_factor(&self.ring, &self.current, n as i64 - 1);
        }
        if self.first_zero.is_none() && self.ring.is_zero(&self.current) {
            self.first_zero = Some(n);
        }
        self.next_index += 1;
        Some(self.current.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, CyclotomicRing, FormalQ, LaurentPoly, RationalPoint, rat};

    #[test]
    fn empty_product_is_one() {
        let r = CyclotomicRing::new(5).unwrap();
        for arg in [PochArgument::pos(1, 1), PochArgument::neg(-3, 2), PochArgument::pos(-1, -1)] {
            assert_eq!(pochhammer(&r, arg, 0), r.one());
        }
    }

    #[test]
    fn pochhammer_examples_at_roots_of_unity() {
        let r2 = CyclotomicRing::new(2).unwrap();
        assert!(pochhammer(&r2, PochArgument::pos(1, 1), 2).is_zero());
        let r3 = CyclotomicRing::new(3).unwrap();
        assert_eq!(pochhammer(&r3, PochArgument::pos(2, 2), 2), r3.from_rational(&int(3)));
    }

    #[test]
    fn factor_and_apply_factor_agree() {
        let p = RationalPoint::new(rat(5, 7)).unwrap();
        let arg = PochArgument::neg(3, -2);
        let x = rat(11, 3);
        for k in 0..5 {
            assert_eq!(arg.apply_factor(&p, &x, k), &x * arg.factor(&p, k));
        }
    }

    #[test]
    fn monomial_variant_matches_signed_form() {
        let p = RationalPoint::new(rat(3, 2)).unwrap();
        for n in 0..6 {
            assert_eq!(
                pochhammer_monomial(&p, &int(-1), 2, 1, n),
                pochhammer(&p, PochArgument::neg(2, 1), n)
            );
        }
    }

    #[test]
    fn first_zero_indices() {
        let r4 = CyclotomicRing::new(4).unwrap();
        assert_eq!(PrefixStream::new(&r4, PochArgument::pos(1, 1)).find_first_zero(20), Some(4));
        assert_eq!(PrefixStream::new(&r4, PochArgument::neg(1, 1)).find_first_zero(20), Some(2));
        let r5 = CyclotomicRing::new(5).unwrap();
        assert_eq!(PrefixStream::new(&r5, PochArgument::pos(1, 2)).find_first_zero(20), Some(3));
        // (q^2; q^2)_n never vanishes at q = 2/3.
        let p = RationalPoint::new(rat(2, 3)).unwrap();
        assert_eq!(PrefixStream::new(&p, PochArgument::pos(2, 2)).find_first_zero(20), None);
    }

    #[test]
    fn stream_matches_direct_products_and_stays_zero() {
        let r6 = CyclotomicRing::new(6).unwrap();
        let arg = PochArgument::neg(1, 1);
        let stream: Vec<_> = PrefixStream::new(&r6, arg).take(12).collect();
        for (n, v) in stream.iter().enumerate() {
            assert_eq!(*v, pochhammer(&r6, arg, n));
        }
        let z = PrefixStream::new(&r6, arg).find_first_zero(12).unwrap();
        assert!(stream[z..].iter().all(|v| v.is_zero()));
        assert_eq!(PrefixStream::new(&r6, arg).nonzero_prefixes(100).len(), z);
    }

    #[test]
    fn formal_expansion() {
        // (q; q)_2 = 1 - q - q^2 + q^3
        let p = pochhammer(&FormalQ, PochArgument::pos(1, 1), 2);
        let expected = LaurentPoly::from_terms([(0, int(1)), (1, int(-1)), (2, int(-1)), (3, int(1))]);
        assert_eq!(p, expected);
    }
}

//! Terminating identities obtained by inserting a Bailey pair into the
//! Bailey lemma at `n - 1`. Each evaluator returns the two displayed sides.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::QField;
use crate::qseries::{pochhammer, PochArgument};

use super::monomial::Monomial;
use super::pair::{checked_div, BaileyPair};
use super::BaileyError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "lemma", rename_all = "snake_case")]
pub enum KeyLemma {
    /// General `b`, `c`; base-`q` pairs.
    Kl1 { b: Monomial, c: Monomial },
    /// `b → 0`, `c = q`.
    B0Cq,
    /// `b → 0`, `c = -q`.
    B0CMinusQ,
    /// `b → ∞`, `c = -q`.
    BInfCMinusQ,
    /// Base-`q^2` pairs through the first change of base.
    Kl2,
    /// Base-`q^2` pairs through the second change of base.
    Kl3,
}

impl KeyLemma {
    pub fn name(&self) -> &'static str {
        match self {
            KeyLemma::Kl1 { .. } => "kl1",
            KeyLemma::B0Cq => "b0cq",
            KeyLemma::B0CMinusQ => "b0c-q",
            KeyLemma::BInfCMinusQ => "binftyc-q",
            KeyLemma::Kl2 => "kl2",
            KeyLemma::Kl3 => "kl3",
        }
    }

    /// Base exponent the lemma consumes.
    pub fn required_base(&self) -> i64 {
        match self {
            KeyLemma::Kl2 | KeyLemma::Kl3 => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for KeyLemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KeyLemma::Kl1 { b, c } => write!(f, "kl1(b={b}, c={c})"),
            other => f.write_str(other.name()),
        }
    }
}

/// Left and right sides of `which` for `pair` at index `n ≥ 1`.
pub fn key_lemma_eval<F: QField>(
    which: &KeyLemma,
    pair: &BaileyPair<F>,
    n: usize,
) -> Result<(F::Elem, F::Elem), BaileyError> {
    if n == 0 {
        return Err(BaileyError::IndexOutOfRange(0));
    }
    pair.require_base(which.name(), which.required_base())?;
    let f = pair.field();
    let ni = n as i64;
    let poch = |sign: i8, e: i64, s: i64, k: usize| pochhammer(f, PochArgument::new(sign, e, s), k);
    let tri = |k: i64| k * (k + 1) / 2;
    let mut left = f.zero();
    let mut right = f.zero();

    match which {
        KeyLemma::Kl1 { b, c } => {
            let q2 = Monomial::q_pow(2);
            let (q2_b, q2_c) = (q2.div(b), q2.div(c));
            let q2_bc = q2_b.div(c);
            let bc_qn = b.mul(c).mul(&Monomial::q_pow(-ni));
            let minus_q2_bc = q2_bc.neg();
            for k in 0..n {
                let ki = k as i64;
                let bck = f.mul(&b.poch(f, 1, k), &c.poch(f, 1, k));
                let l = f.mul_q_pow(&f.mul(&f.mul(&bck, &poch(1, 1 - ni, 1, k)), &pair.beta(k)?), ki);
                left = f.add(&left, &checked_div(f, &l, &bc_qn.poch(f, 1, k), "(bc q^{-n})_k")?);

                let num = f.mul(
                    &f.mul(&poch(1, 1 - ni, 1, k), &bck),
                    &f.mul_q_pow(&minus_q2_bc.pow(ki).eval(f), ni * ki - tri(ki)),
                );
                let den = f.mul(
                    &poch(1, 1 + ni, 1, k),
                    &f.mul(&q2_b.poch(f, 1, k), &q2_c.poch(f, 1, k)),
                );
                let r = checked_div(f, &num, &den, "(q^{1+n})_k (q^2/b)_k (q^2/c)_k")?;
                right = f.add(&right, &f.mul(&r, &pair.alpha(k)?));
            }
            let pre_num = f.mul(&q2_bc.poch(f, 1, n - 1), &poch(1, 2, 1, n - 1));
            let pre_den = f.mul(&q2_b.poch(f, 1, n - 1), &q2_c.poch(f, 1, n - 1));
            let pre = checked_div(f, &pre_num, &pre_den, "(q^2/b)_{n-1} (q^2/c)_{n-1}")?;
            left = f.mul(&pre, &left);
        }
        KeyLemma::B0Cq => {
            for k in 0..n {
                let ki = k as i64;
                let l = f.mul(&f.mul(&poch(1, 1, 1, k), &poch(1, 1 - ni, 1, k)), &pair.beta(k)?);
                left = f.add(&left, &f.mul_q_pow(&l, ki + 1));
                right = f.add(&right, &alpha_term(pair, ni, k, ni * ki - ki * ki - ki, false)?);
            }
            // (1 - q^n)/(1 - q) = 1 + q + … + q^{n-1}
            let geometric = f.sum((0..ni).map(|i| f.q_pow(i)));
            left = f.mul(&geometric, &left);
            right = f.mul_q_pow(&right, ni);
        }
        KeyLemma::B0CMinusQ => {
            for k in 0..n {
                let ki = k as i64;
                let l = f.mul(&f.mul(&poch(-1, 1, 1, k), &poch(1, 1 - ni, 1, k)), &pair.beta(k)?);
                left = f.add(&left, &f.mul_q_pow(&l, ki + 1));
                right = f.add(&right, &alpha_term(pair, ni, k, ni * ki - ki * ki - ki, true)?);
            }
            // -(-q)^n (-q)_{n-1}/(q^2)_{n-1}
            let pre = checked_div(f, &poch(-1, 1, 1, n - 1), &poch(1, 2, 1, n - 1), "(q^2)_{n-1}")?;
            right = f.mul(&f.neg(&f.signed(&f.mul_q_pow(&pre, ni), ni)), &right);
        }
        KeyLemma::BInfCMinusQ => {
            for k in 0..n {
                let ki = k as i64;
                let l = f.mul(&f.mul(&poch(-1, 1, 1, k), &poch(1, 1 - ni, 1, k)), &pair.beta(k)?);
                left = f.add(&left, &f.signed(&f.mul_q_pow(&l, ni * ki), ki));
                right = f.add(&right, &alpha_term(pair, ni, k, ni * ki, true)?);
            }
            let pre = checked_div(f, &poch(-1, 1, 1, n - 1), &poch(1, 2, 1, n - 1), "(q^2)_{n-1}")?;
            right = f.mul(&pre, &right);
        }
        KeyLemma::Kl2 => {
            for k in 0..n {
                let ki = k as i64;
                let l = f.mul(&f.mul(&poch(-1, 2, 1, 2 * k), &poch(1, 2 - 2 * ni, 2, k)), &pair.beta(k)?);
                let e = ni * (2 * ki + 1) - ki * ki - 2 * ki - 1;
                left = f.add(&left, &f.signed(&f.mul_q_pow(&l, e), ki));
                right = f.add(&right, &alpha_term(pair, ni, k, ni * ki - tri(ki), true)?);
            }
            let pre = checked_div(f, &poch(-1, 1, 1, n - 1), &poch(1, 2, 1, n - 1), "(q^2)_{n-1}")?;
            right = f.mul(&pre, &right);
        }
        KeyLemma::Kl3 => {
            for k in 0..n {
                let ki = k as i64;
                let l = f.mul(&f.mul(&poch(-1, 1, 1, 2 * k), &poch(1, 2 - 2 * ni, 2, k)), &pair.beta(k)?);
                left = f.add(&left, &f.signed(&f.mul_q_pow(&l, 2 * ni * ki - ki * ki), ki));
                let t = alpha_term(pair, ni, k, ni * ki - ki * (ki - 1) / 2, true)?;
                let ratio = checked_div(
                    f,
                    &f.add(&f.one(), &f.q_pow(1)),
                    &f.add(&f.one(), &f.q_pow(2 * ki + 1)),
                    "1 + q^{2k+1}",
                )?;
                right = f.add(&right, &f.mul(&ratio, &t));
            }
            let pre = checked_div(f, &poch(-1, 1, 1, n - 1), &poch(1, 2, 1, n - 1), "(q^2)_{n-1}")?;
            right = f.mul(&pre, &right);
        }
    }
    Ok((left, right))
}

/// `(q^{1-n})_k/(q^{1+n})_k q^e [(-1)^k] α_k`.
fn alpha_term<F: QField>(
    pair: &BaileyPair<F>,
    n: i64,
    k: usize,
    e: i64,
    alternating: bool,
) -> Result<F::Elem, BaileyError> {
    let f = pair.field();
    let num = f.mul_q_pow(&f.mul(&pochhammer(f, PochArgument::pos(1 - n, 1), k), &pair.alpha(k)?), e);
    let t = checked_div(f, &num, &pochhammer(f, PochArgument::pos(1 + n, 1), k), "(q^{1+n})_k")?;
    Ok(if alternating { f.signed(&t, k as i64) } else { t })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, RationalPoint};
    use crate::bailey::SeedId;

    fn lemmas_for(seed: SeedId) -> Vec<KeyLemma> {
        if seed.base_exponent() == 2 {
            vec![KeyLemma::Kl2, KeyLemma::Kl3]
        } else {
            vec![
                KeyLemma::Kl1 {
                    b: Monomial::new(rat(3, 5), 2),
                    c: Monomial::new(rat(-2, 7), 1),
                },
                KeyLemma::B0Cq,
                KeyLemma::B0CMinusQ,
                KeyLemma::BInfCMinusQ,
            ]
        }
    }

    #[test]
    fn lemmas_hold_for_every_seed() {
        for q in [rat(2, 3), rat(5, 7), rat(3, 2)] {
            let p = RationalPoint::new(q).unwrap();
            for seed in SeedId::ALL {
                let pair = seed.pair(&p);
                for lemma in lemmas_for(seed) {
                    for n in 1..=6 {
                        let (l, r) = key_lemma_eval(&lemma, &pair, n).unwrap();
                        assert_eq!(l, r, "{lemma} with {seed}, n = {n}");
                    }
                }
            }
        }
    }

    #[test]
    fn named_examples() {
        let p = RationalPoint::new(rat(2, 3)).unwrap();
        let (l, r) = key_lemma_eval(&KeyLemma::B0Cq, &SeedId::Posdefpair2.pair(&p), 3).unwrap();
        assert_eq!(l, r);
        let p = RationalPoint::new(rat(3, 5)).unwrap();
        let (l, r) = key_lemma_eval(&KeyLemma::Kl3, &SeedId::Bp14.pair(&p), 2).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn n_equal_one_reduces_to_first_terms() {
        let p = RationalPoint::new(rat(5, 7)).unwrap();
        let pair = SeedId::Indefpair2.pair(&p);
        let lemma = &lemmas_for(SeedId::Indefpair2)[0];
        let (l, r) = key_lemma_eval(lemma, &pair, 1).unwrap();
        assert_eq!(l, pair.beta(0).unwrap());
        assert_eq!(r, pair.alpha(0).unwrap());
    }

    #[test]
    fn base_mismatch_is_rejected() {
        let p = RationalPoint::new(rat(2, 3)).unwrap();
        assert!(matches!(
            key_lemma_eval(&KeyLemma::Kl2, &SeedId::Indefpair1.pair(&p), 2),
            Err(BaileyError::BaseExponent { .. })
        ));
        assert!(matches!(
            key_lemma_eval(&KeyLemma::B0Cq, &SeedId::Bp14.pair(&p), 2),
            Err(BaileyError::BaseExponent { .. })
        ));
        assert!(matches!(
            key_lemma_eval(&KeyLemma::B0Cq, &SeedId::Indefpair1.pair(&p), 0),
            Err(BaileyError::IndexOutOfRange(0))
        ));
    }
}

//! The Bailey lemma, its limiting cases and the two changes of base.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::QField;
use crate::qseries::{pochhammer, PochArgument};

use super::monomial::Monomial;
use super::pair::{checked_div, BaileyPair};
use super::BaileyError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChainStep {
    General { b: Monomial, c: Monomial },
    BcToInfinity,
    BcToZero,
    /// `q^2 → q` change of base, `α'_n = α_n(q^2)`.
    BaseChangeD1,
    /// `q^2 → q` change of base, `α'_n = (1+q)/(1+q^{2n+1}) q^n α_n(q^2)`.
    BaseChangeD4,
}

impl fmt::Display for ChainStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainStep::General { b, c } => write!(f, "general(b={b}, c={c})"),
            ChainStep::BcToInfinity => f.write_str("bc_to_infinity"),
            ChainStep::BcToZero => f.write_str("bc_to_zero"),
            ChainStep::BaseChangeD1 => f.write_str("base_change_d1"),
            ChainStep::BaseChangeD4 => f.write_str("base_change_d4"),
        }
    }
}

/// Which of the two equivalent expressions for `β'` the general step uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BetaPrimeForm {
    #[default]
    Sum,
    Terminating,
}

pub fn apply_step<F>(pair: &BaileyPair<F>, step: &ChainStep) -> Result<BaileyPair<F>, BaileyError>
where
    F: QField + 'static,
    F::Elem: 'static,
{
    match step {
        ChainStep::General { b, c } => Ok(apply_general(pair, b, c, BetaPrimeForm::Sum)),
        ChainStep::BcToInfinity => Ok(bc_to_infinity(pair)),
        ChainStep::BcToZero => Ok(bc_to_zero(pair)),
        ChainStep::BaseChangeD1 => base_change_d1(pair),
        ChainStep::BaseChangeD4 => base_change_d4(pair),
    }
}

/// Applies `steps` in order.
pub fn apply_steps<F>(pair: &BaileyPair<F>, steps: &[ChainStep]) -> Result<BaileyPair<F>, BaileyError>
where
    F: QField + 'static,
    F::Elem: 'static,
{
    steps.iter().try_fold(pair.clone(), |p, s| apply_step(&p, s))
}

/// The general Bailey lemma with `a = Q = q^s` and monomial `b`, `c`.
pub fn apply_general<F>(pair: &BaileyPair<F>, b: &Monomial, c: &Monomial, form: BetaPrimeForm) -> BaileyPair<F>
where
    F: QField + 'static,
    F::Elem: 'static,
{
    let s = pair.base_exponent();
    let f = pair.field().clone();
    // a q / b, a q / c, a q / (b c) with a = q = Q in base Q.
    let aq = Monomial::q_pow(2 * s);
    let aq_b = aq.div(b);
    let aq_c = aq.div(c);
    let aq_bc = aq_b.div(c);
    let label = format!("{} ∘ general(b={b}, c={c})", pair.label());

    let alpha = {
        let (pair, f, b, c, aq_b, aq_c, aq_bc) =
            (pair.clone(), f.clone(), b.clone(), c.clone(), aq_b.clone(), aq_c.clone(), aq_bc.clone());
        move |n: usize| {
            let num = f.mul(
                &f.mul(&b.poch(&f, s, n), &c.poch(&f, s, n)),
                &aq_bc.pow(n as i64).eval(&f),
            );
            let den = f.mul(&aq_b.poch(&f, s, n), &aq_c.poch(&f, s, n));
            let ratio = checked_div(&f, &num, &den, "(aq/b)_n (aq/c)_n")?;
            Ok(f.mul(&ratio, &pair.alpha(n)?))
        }
    };
    let beta = {
        let (pair, f, b, c) = (pair.clone(), f.clone(), b.clone(), c.clone());
        move |n: usize| match form {
            BetaPrimeForm::Sum => beta_prime_sum(&pair, &f, &b, &c, n),
            BetaPrimeForm::Terminating => beta_prime_terminating(&pair, &f, &b, &c, n),
        }
    };
    BaileyPair::new(label, s, &f, alpha, beta)
}

/// `1/(aq/b, aq/c)_n Σ_k (b)_k (c)_k (aq/bc)_{n-k} (aq/bc)^k / (Q)_{n-k} β_k`.
fn beta_prime_sum<F: QField>(
    pair: &BaileyPair<F>,
    f: &F,
    b: &Monomial,
    c: &Monomial,
    n: usize,
) -> Result<F::Elem, BaileyError> {
    let s = pair.base_exponent();
    let aq = Monomial::q_pow(2 * s);
    let (aq_b, aq_c) = (aq.div(b), aq.div(c));
    let aq_bc = aq_b.div(c);
    let mut total = f.zero();
    for k in 0..=n {
        let num = f.mul(
            &f.mul(&b.poch(f, s, k), &c.poch(f, s, k)),
            &f.mul(&aq_bc.poch(f, s, n - k), &aq_bc.pow(k as i64).eval(f)),
        );
        let den = pochhammer(f, PochArgument::pos(s, s), n - k);
        let t = checked_div(f, &num, &den, "(Q)_{n-k}")?;
        total = f.add(&total, &f.mul(&t, &pair.beta(k)?));
    }
    let den = f.mul(&aq_b.poch(f, s, n), &aq_c.poch(f, s, n));
    checked_div(f, &total, &den, "(aq/b, aq/c)_n")
}

/// `(aq/bc)_n/((Q)_n (aq/b)_n (aq/c)_n) Σ_k (b)_k (c)_k (Q^{-n})_k Q^k / (bc Q^{-n}/a)_k β_k`.
fn beta_prime_terminating<F: QField>(
    pair: &BaileyPair<F>,
    f: &F,
    b: &Monomial,
    c: &Monomial,
    n: usize,
) -> Result<F::Elem, BaileyError> {
    let s = pair.base_exponent();
    let ni = n as i64;
    let aq = Monomial::q_pow(2 * s);
    let (aq_b, aq_c) = (aq.div(b), aq.div(c));
    let aq_bc = aq_b.div(c);
    let bc_over_a = b.mul(c).mul(&Monomial::q_pow(-s * ni - s));
    let mut total = f.zero();
    for k in 0..=n {
        let num = f.mul(
            &f.mul(&b.poch(f, s, k), &c.poch(f, s, k)),
            &f.mul_q_pow(&pochhammer(f, PochArgument::pos(-s * ni, s), k), s * k as i64),
        );
        let t = checked_div(f, &num, &bc_over_a.poch(f, s, k), "(bc Q^{-n}/a)_k")?;
        total = f.add(&total, &f.mul(&t, &pair.beta(k)?));
    }
    let pre_num = aq_bc.poch(f, s, n);
    let pre_den = f.mul(
        &pochhammer(f, PochArgument::pos(s, s), n),
        &f.mul(&aq_b.poch(f, s, n), &aq_c.poch(f, s, n)),
    );
    let pre = checked_div(f, &pre_num, &pre_den, "(Q)_n (aq/b)_n (aq/c)_n")?;
    Ok(f.mul(&pre, &total))
}

/// `α'_n = Q^{n^2+n} α_n`, `β'_n = Σ_k Q^{k^2+k}/(Q)_{n-k} β_k`.
pub fn bc_to_infinity<F>(pair: &BaileyPair<F>) -> BaileyPair<F>
where
    F: QField + 'static,
    F::Elem: 'static,
{
    let s = pair.base_exponent();
    let f = pair.field().clone();
    let (pa, fa) = (pair.clone(), f.clone());
    let (pb, fb) = (pair.clone(), f.clone());
    BaileyPair::new(
        format!("{} ∘ bc_to_infinity", pair.label()),
        s,
        &f,
        move |n| {
            let n = n as i64;
            Ok(fa.mul_q_pow(&pa.alpha(n as usize)?, s * (n * n + n)))
        },
        move |n| {
            let mut total = fb.zero();
            for k in 0..=n {
                let ki = k as i64;
                let den = pochhammer(&fb, PochArgument::pos(s, s), n - k);
                let t = checked_div(&fb, &fb.mul_q_pow(&pb.beta(k)?, s * (ki * ki + ki)), &den, "(Q)_{n-k}")?;
                total = fb.add(&total, &t);
            }
            Ok(total)
        },
    )
}

/// `α'_n = Q^{-n^2-n} α_n`,
/// `β'_n = (-1)^n Q^{-n(n+1)/2 - n} Σ_k Q^{k(k+1)/2 - nk} (-1)^k/(Q)_{n-k} β_k`.
pub fn bc_to_zero<F>(pair: &BaileyPair<F>) -> BaileyPair<F>
where
    F: QField + 'static,
    F::Elem: 'static,
{
    let s = pair.base_exponent();
    let f = pair.field().clone();
    let (pa, fa) = (pair.clone(), f.clone());
    let (pb, fb) = (pair.clone(), f.clone());
    BaileyPair::new(
        format!("{} ∘ bc_to_zero", pair.label()),
        s,
        &f,
        move |n| {
            let n = n as i64;
            Ok(fa.mul_q_pow(&pa.alpha(n as usize)?, -s * (n * n + n)))
        },
        move |n| {
            let ni = n as i64;
            let mut total = fb.zero();
            for k in 0..=n {
                let ki = k as i64;
                let den = pochhammer(&fb, PochArgument::pos(s, s), n - k);
                let num = fb.signed(&fb.mul_q_pow(&pb.beta(k)?, s * (ki * (ki + 1) / 2 - ni * ki)), ki);
                total = fb.add(&total, &checked_div(&fb, &num, &den, "(Q)_{n-k}")?);
            }
            Ok(fb.signed(&fb.mul_q_pow(&total, -s * (ni * (ni + 1) / 2 + ni)), ni))
        },
    )
}

/// `α'_n = α_n(q^2)`, `β'_n = Σ_k (-q^2)_{2k}/(q^2;q^2)_{n-k} q^{n-k} β_k(q^2)`.
pub fn base_change_d1<F>(pair: &BaileyPair<F>) -> Result<BaileyPair<F>, BaileyError>
where
    F: QField + 'static,
    F::Elem: 'static,
{
    pair.require_base("base change D(1)", 2)?;
    let f = pair.field().clone();
    let pa = pair.clone();
    let (pb, fb) = (pair.clone(), f.clone());
    Ok(BaileyPair::new(
        format!("{} ∘ base_change_d1", pair.label()),
        1,
        &f,
        move |n| pa.alpha(n),
        move |n| {
            let mut total = fb.zero();
            for k in 0..=n {
                let num = fb.mul_q_pow(
                    &fb.mul(&pochhammer(&fb, PochArgument::neg(2, 1), 2 * k), &pb.beta(k)?),
                    (n - k) as i64,
                );
                let den = pochhammer(&fb, PochArgument::pos(2, 2), n - k);
                total = fb.add(&total, &checked_div(&fb, &num, &den, "(q^2;q^2)_{n-k}")?);
            }
            Ok(total)
        },
    ))
}

/// `α'_n = (1+q)/(1+q^{2n+1}) q^n α_n(q^2)`,
/// `β'_n = Σ_k (-q)_{2k}/(q^2;q^2)_{n-k} q^k β_k(q^2)`.
pub fn base_change_d4<F>(pair: &BaileyPair<F>) -> Result<BaileyPair<F>, BaileyError>
where
    F: QField + 'static,
    F::Elem: 'static,
{
    pair.require_base("base change D(4)", 2)?;
    let f = pair.field().clone();
    let (pa, fa) = (pair.clone(), f.clone());
    let (pb, fb) = (pair.clone(), f.clone());
    Ok(BaileyPair::new(
        format!("{} ∘ base_change_d4", pair.label()),
        1,
        &f,
        move |n| {
            let ni = n as i64;
            let num = fa.mul_q_pow(&fa.add(&fa.one(), &fa.q_pow(1)), ni);
            let den = fa.add(&fa.one(), &fa.q_pow(2 * ni + 1));
            let ratio = checked_div(&fa, &num, &den, "1 + q^{2n+1}")?;
            Ok(fa.mul(&ratio, &pa.alpha(n)?))
        },
        move |n| {
            let mut total = fb.zero();
            for k in 0..=n {
                let num = fb.mul_q_pow(
                    &fb.mul(&pochhammer(&fb, PochArgument::neg(1, 1), 2 * k), &pb.beta(k)?),
                    k as i64,
                );
                let den = pochhammer(&fb, PochArgument::pos(2, 2), n - k);
                total = fb.add(&total, &checked_div(&fb, &num, &den, "(q^2;q^2)_{n-k}")?);
            }
            Ok(total)
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, QRing, RationalPoint};
    use crate::bailey::SeedId;

    fn point() -> RationalPoint {
        RationalPoint::new(rat(2, 3)).unwrap()
    }

    #[test]
    fn limits_fix_the_first_terms() {
        let p = point();
        for id in SeedId::ALL {
            let pair = id.pair(&p);
            for step in [ChainStep::BcToInfinity, ChainStep::BcToZero] {
                let out = apply_step(&pair, &step).unwrap();
                assert_eq!(out.alpha(0).unwrap(), pair.alpha(0).unwrap());
                assert_eq!(out.beta(0).unwrap(), pair.beta(0).unwrap());
            }
        }
    }

    #[test]
    fn base_change_rejects_base_one() {
        let pair = SeedId::Indefpair1.pair(&point());
        for step in [ChainStep::BaseChangeD1, ChainStep::BaseChangeD4] {
            assert!(matches!(
                apply_step(&pair, &step),
                Err(BaileyError::BaseExponent { expected: 2, found: 1, .. })
            ));
        }
    }

    #[test]
    fn base_change_switches_to_base_one() {
        let pair = SeedId::Bp14.pair(&point());
        assert_eq!(base_change_d1(&pair).unwrap().base_exponent(), 1);
        assert_eq!(base_change_d4(&pair).unwrap().base_exponent(), 1);
    }

    #[test]
    fn both_beta_prime_forms_agree() {
        let p = RationalPoint::new(rat(5, 7)).unwrap();
        let b = Monomial::new(rat(3, 5), 2);
        let c = Monomial::new(rat(-2, 7), 1);
        for id in SeedId::ALL {
            let pair = id.pair(&p);
            let x = apply_general(&pair, &b, &c, BetaPrimeForm::Sum);
            let y = apply_general(&pair, &b, &c, BetaPrimeForm::Terminating);
            for n in 0..=5 {
                assert_eq!(x.beta(n).unwrap(), y.beta(n).unwrap(), "{id} n = {n}");
            }
        }
    }

    #[test]
    fn steps_preserve_pairhood() {
        let p = RationalPoint::new(rat(3, 2)).unwrap();
        let general = ChainStep::General {
            b: Monomial::new(rat(3, 5), 2),
            c: Monomial::new(rat(-2, 7), 1),
        };
        for id in SeedId::ALL {
            let pair = id.pair(&p);
            let mut steps = vec![general.clone(), ChainStep::BcToInfinity, ChainStep::BcToZero];
            if id.base_exponent() == 2 {
                steps.extend([ChainStep::BaseChangeD1, ChainStep::BaseChangeD4]);
            }
            for step in steps {
                let out = apply_step(&pair, &step).unwrap();
                for n in 0..=4 {
                    assert_eq!(
                        out.beta_from_definition(n).unwrap(),
                        out.beta(n).unwrap(),
                        "{id} {step} n = {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn general_step_reports_vanishing_parameters() {
        // b = q^2 = aq makes (aq/b)_1 = 1 - 1 = 0.
        let p = point();
        let pair = SeedId::Indefpair1.pair(&p);
        let out = apply_general(&pair, &Monomial::q_pow(2), &Monomial::q_pow(5), BetaPrimeForm::Sum);
        assert!(matches!(out.alpha(1), Err(BaileyError::VanishingDenominator { .. })));
        assert_eq!(out.alpha(0).unwrap(), p.one());
    }
}

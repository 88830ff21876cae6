//! Bailey pairs relative to `a = q` in base `Q = q^s`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::arith::{ArithError, QField};
use crate::qseries::{pochhammer, PochArgument};

use super::BaileyError;

type GenFn<E> = dyn Fn(usize) -> Result<E, BaileyError> + Send + Sync;

/// A sequence generator that remembers every value it has produced.
pub struct Sequence<E> {
    f: Arc<GenFn<E>>,
    memo: Arc<Mutex<HashMap<usize, E>>>,
}

impl<E> Clone for Sequence<E> {
    fn clone(&self) -> Self {
        Self {
            f: Arc::clone(&self.f),
            memo: Arc::clone(&self.memo),
        }
    }
}

impl<E: Clone> Sequence<E> {
    pub fn new<G>(f: G) -> Self
    where
        G: Fn(usize) -> Result<E, BaileyError> + Send + Sync + 'static,
    {
        Self {
            f: Arc::new(f),
            memo: Arc::new(Mutex::new(HashMap::new())),
        }
    }

    pub fn get(&self, n: usize) -> Result<E, BaileyError> {
        if let Some(v) = self.memo.lock().unwrap().get(&n) {
            return Ok(v.clone());
        }
        // Computed outside the lock: generators query other sequences.
        let v = (self.f)(n)?;
        self.memo.lock().unwrap().insert(n, v.clone());
        Ok(v)
    }
}

/// `(α_n, β_n)` with
/// `β_n = Σ_{k=0}^{n} α_k / ((Q;Q)_{n-k} (Q^2;Q)_{n+k})`, `Q = q^s`.
///
/// Pairs with `s = 2` are the pairs of the original variable with `q ↦ q^2`
/// already applied, so every exponent stays integral.
pub struct BaileyPair<F: QField> {
    label: String,
    base_exponent: i64,
    field: F,
    alpha: Sequence<F::Elem>,
    beta: Sequence<F::Elem>,
}

impl<F: QField> Clone for BaileyPair<F> {
    fn clone(&self) -> Self {
        Self {
            label: self.label.clone(),
            base_exponent: self.base_exponent,
            field: self.field.clone(),
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
        }
    }
}

impl<F: QField> fmt::Debug for BaileyPair<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BaileyPair")
            .field("label", &self.label)
            .field("base_exponent", &self.base_exponent)
            .field("field", &self.field.describe())
            .finish()
    }
}

impl<F: QField + 'static> BaileyPair<F>
where
    F::Elem: 'static,
{
    pub fn new<A, B>(label: impl Into<String>, base_exponent: i64, field: &F, alpha: A, beta: B) -> Self
    where
        A: Fn(usize) -> Result<F::Elem, BaileyError> + Send + Sync + 'static,
        B: Fn(usize) -> Result<F::Elem, BaileyError> + Send + Sync + 'static,
    {
        Self {
            label: label.into(),
            base_exponent,
            field: field.clone(),
            alpha: Sequence::new(alpha),
            beta: Sequence::new(beta),
        }
    }
}

impl<F: QField> BaileyPair<F> {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn base_exponent(&self) -> i64 {
        self.base_exponent
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn alpha(&self, n: usize) -> Result<F::Elem, BaileyError> {
        self.alpha.get(n)
    }

    pub fn beta(&self, n: usize) -> Result<F::Elem, BaileyError> {
        self.beta.get(n)
    }

    pub(crate) fn require_base(&self, operation: &'static str, expected: i64) -> Result<(), BaileyError> {
        if self.base_exponent == expected {
            Ok(())
        } else {
            Err(BaileyError::BaseExponent {
                operation,
                expected,
                found: self.base_exponent,
            })
        }
    }

    /// `β_n` from the original defining sum.
    pub fn beta_from_definition(&self, n: usize) -> Result<F::Elem, BaileyError> {
        let f = &self.field;
        let s = self.base_exponent;
        let mut total = f.zero();
        for k in 0..=n {
            let den = f.mul(
                &pochhammer(f, PochArgument::pos(s, s), n - k),
                &pochhammer(f, PochArgument::pos(2 * s, s), n + k),
            );
            let term = checked_div(f, &self.alpha(k)?, &den, "(Q)_{n-k} (Q^2)_{n+k}")?;
            total = f.add(&total, &term);
        }
        Ok(total)
    }

    /// `β_n` from the terminating form
    /// `1/((Q)_n (Q^2)_n) Σ (Q^{-n})_k/(Q^{n+2})_k (-1)^k Q^{nk - k(k-1)/2} α_k`.
    pub fn beta_from_terminating_form(&self, n: usize) -> Result<F::Elem, BaileyError> {
        let f = &self.field;
        let s = self.base_exponent;
        let ni = n as i64;
        let mut total = f.zero();
        for k in 0..=n {
            let ki = k as i64;
            let num = pochhammer(f, PochArgument::pos(-s * ni, s), k);
            let den = pochhammer(f, PochArgument::pos(s * (ni + 2), s), k);
            let e = s * (ni * ki - ki * (ki - 1) / 2);
            let t = f.signed(&f.mul_q_pow(&f.mul(&num, &self.alpha(k)?), e), ki);
            total = f.add(&total, &checked_div(f, &t, &den, "(Q^{n+2})_k")?);
        }
        let pre = f.mul(
            &pochhammer(f, PochArgument::pos(s, s), n),
            &pochhammer(f, PochArgument::pos(2 * s, s), n),
        );
        checked_div(f, &total, &pre, "(Q)_n (Q^2)_n")
    }
}

/// `a / b`, reporting a vanishing `b` by name.
pub(crate) fn checked_div<F: QField>(
    f: &F,
    a: &F::Elem,
    b: &F::Elem,
    what: &str,
) -> Result<F::Elem, BaileyError> {
    f.div(a, b).map_err(|e| match e {
        ArithError::DivisionByZero => BaileyError::VanishingDenominator {
            factor: what.to_string(),
            at: f.describe(),
        },
        other => BaileyError::Arith(other),
    })
}

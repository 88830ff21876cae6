//! Bailey chains from a seed pair and their explicit multisum forms.

use serde::{Deserialize, Serialize};

use crate::arith::QField;
use crate::qseries::{pochhammer, PochArgument, QBinomialTable};

use super::lemma::{apply_steps, ChainStep};
use super::pair::{checked_div, BaileyPair};
use super::seeds::{seed_alpha, SeedId};
use super::BaileyError;

/// The limiting Bailey lemma iterated along the chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainKind {
    BcToInfinity,
    BcToZero,
}

impl ChainKind {
    pub fn step(self) -> ChainStep {
        match self {
            ChainKind::BcToInfinity => ChainStep::BcToInfinity,
            ChainKind::BcToZero => ChainStep::BcToZero,
        }
    }

    /// The chain used with each seed in the multisum theorems.
    pub fn for_seed(seed: SeedId) -> Self {
        match seed {
            SeedId::Posdefpair2 => ChainKind::BcToZero,
            _ => ChainKind::BcToInfinity,
        }
    }
}

/// The seed pair after `m - 1` applications of `kind`.
pub fn composed_chain<F>(seed: SeedId, kind: ChainKind, m: usize, field: &F) -> Result<BaileyPair<F>, BaileyError>
where
    F: QField + 'static,
    F::Elem: 'static,
{
    assert!(m >= 1, "chains start at m = 1");
    apply_steps(&seed.pair(field), &vec![kind.step(); m - 1])
}

/// `β_n` of the `m`-step chain as an explicit sum over
/// `n = n_m ≥ n_{m-1} ≥ … ≥ n_1 ≥ 0`. In base `Q = q^s`:
///
/// * `bc → ∞`: `1/(Q)_n Σ (Q)_{n_1} β_{n_1} Π Q^{n_i^2+n_i} [n_{i+1} n_i]`
/// * `bc → 0`: `(-1)^n Q^{-n(n+1)/2}/(Q)_n Σ (-1)^{n_1} Q^{n_1(n_1+1)/2} (Q)_{n_1} β_{n_1}
///   Π Q^{-n_i n_{i+1} - n_{i+1}} [n_{i+1} n_i]`
pub fn explicit_chain_beta<F>(
    seed: SeedId,
    kind: ChainKind,
    m: usize,
    n: usize,
    field: &F,
) -> Result<F::Elem, BaileyError>
where
    F: QField + 'static,
    F::Elem: 'static,
{
    assert!(m >= 1, "chains start at m = 1");
    let f = field;
    let s = seed.base_exponent();
    let pair = seed.pair(f);
    let qfac = |k: usize| pochhammer(f, PochArgument::pos(s, s), k);
    let tri = |k: i64| k * (k + 1) / 2;

    let mut v = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let base = f.mul(&qfac(k), &pair.beta(k)?);
        v.push(match kind {
            ChainKind::BcToInfinity => base,
            ChainKind::BcToZero => f.signed(&f.mul_q_pow(&base, s * tri(k as i64)), k as i64),
        });
    }
    let binom = QBinomialTable::new(f, n, s);
    for _ in 1..m {
        let mut next = Vec::with_capacity(n + 1);
        for hi in 0..=n {
            let h = hi as i64;
            let mut acc = f.zero();
            for (lo, w) in v.iter().enumerate().take(hi + 1) {
                let l = lo as i64;
                let e = match kind {
                    ChainKind::BcToInfinity => l * l + l,
                    ChainKind::BcToZero => -l * h - h,
                };
                let t = f.mul_q_pow(&f.mul(w, binom.get(h, l)), s * e);
                acc = f.add(&acc, &t);
            }
            next.push(acc);
        }
        v = next;
    }
    let ni = n as i64;
    let top = match kind {
        ChainKind::BcToInfinity => v[n].clone(),
        ChainKind::BcToZero => f.signed(&f.mul_q_pow(&v[n], -s * tri(ni)), ni),
    };
    checked_div(f, &top, &qfac(n), "(Q)_n")
}

/// The closed form of the chained `α_n` for the chains used in the
/// multisum theorems, or `None` for a seed without one.
///
/// * `indefpair1`, `bc → ∞`: `q^{(m+1)n^2+mn}(1-q^{2n+1})/(1-q) Σ (-1)^j q^{-j(3j+1)/2}`
/// * `posdefpair2`, `bc → 0`: `q^{-(m-1)n^2-mn}(1-q^{2n+1})/(1-q) Σ (-1)^j q^{j(3j+1)/2}`
/// * `indefpair4`, `bc → ∞` in base `q^2`:
///   `q^{2mn^2+(2m-1)n}(1-q^{2n+1})/(1-q) Σ (-1)^j q^{-j^2}`
/// * `bp14`, `bc → ∞` in base `q^2`:
///   `q^{2n^2+2(m-1)(n^2+n)}(1-q^{4n+2})/(1-q^2) Σ (-1)^j q^{-j^2}`
pub fn chain_alpha_closed_form<F: QField>(seed: SeedId, m: usize, n: usize, field: &F) -> Option<F::Elem> {
    let (m, n) = (m as i64, n as i64);
    match seed {
        SeedId::Indefpair1 => Some(seed_alpha(field, n, 1, (m + 1) * n * n + m * n, |j| -j * (3 * j + 1) / 2)),
        SeedId::Posdefpair2 => Some(seed_alpha(field, n, 1, -(m - 1) * n * n - m * n, |j| j * (3 * j + 1) / 2)),
        SeedId::Indefpair4 => Some(seed_alpha(field, n, 1, 2 * m * n * n + (2 * m - 1) * n, |j| -j * j)),
        SeedId::Bp14 => Some(seed_alpha(field, n, 2, 2 * n * n + 2 * (m - 1) * (n * n + n), |j| -j * j)),
        _ => None,
    }
}

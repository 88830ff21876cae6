//! The five seed Bailey pairs relative to `q`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::QField;
use crate::qseries::{pochhammer, signed_range_sum, PochArgument};

use super::pair::{checked_div, BaileyPair};
use super::BaileyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeedId {
    Posdefpair2,
    Indefpair1,
    Indefpair2,
    /// Stored with `q ↦ q^2` applied.
    Indefpair4,
    /// Stored with `q ↦ q^2` applied.
    Bp14,
}

impl SeedId {
    pub const ALL: [SeedId; 5] = [
        SeedId::Posdefpair2,
        SeedId::Indefpair1,
        SeedId::Indefpair2,
        SeedId::Indefpair4,
        SeedId::Bp14,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SeedId::Posdefpair2 => "posdefpair2",
            SeedId::Indefpair1 => "indefpair1",
            SeedId::Indefpair2 => "indefpair2",
            SeedId::Indefpair4 => "indefpair4",
            SeedId::Bp14 => "bp14",
        }
    }

    pub fn base_exponent(self) -> i64 {
        match self {
            SeedId::Indefpair4 | SeedId::Bp14 => 2,
            _ => 1,
        }
    }

    pub fn pair<F>(self, field: &F) -> BaileyPair<F>
    where
        F: QField + 'static,
        F::Elem: 'static,
    {
        let fa = field.clone();
        let fb = field.clone();
        let s = self.base_exponent();
        match self {
            SeedId::Posdefpair2 => BaileyPair::new(
                self.as_str(),
                s,
                field,
                move |k| Ok(seed_alpha(&fa, k as i64, 1, -(k as i64), |j| j * (3 * j + 1) / 2)),
                move |k| {
                    let den = pochhammer(&fb, PochArgument::pos(1, 1), k);
                    checked_div(&fb, &fb.q_pow(-(k as i64)), &den, "(q)_k")
                },
            ),
            SeedId::Indefpair1 => BaileyPair::new(
                self.as_str(),
                s,
                field,
                move |k| {
                    let k = k as i64;
                    Ok(seed_alpha(&fa, k, 1, 2 * k * k + k, |j| -j * (3 * j + 1) / 2))
                },
                move |_| Ok(fb.one()),
            ),
            SeedId::Indefpair2 => BaileyPair::new(
                self.as_str(),
                s,
                field,
                move |k| {
                    let k = k as i64;
                    Ok(seed_alpha(&fa, k, 1, k * (3 * k + 1) / 2, |j| -j * j))
                },
                move |k| {
                    let den = pochhammer(&fb, PochArgument::neg(1, 1), k);
                    checked_div(&fb, &fb.one(), &den, "(-q)_k")
                },
            ),
            SeedId::Indefpair4 => BaileyPair::new(
                self.as_str(),
                s,
                field,
                move |k| {
                    let k = k as i64;
                    Ok(seed_alpha(&fa, k, 1, 2 * k * k + k, |j| -j * j))
                },
                move |k| {
                    let den = pochhammer(&fb, PochArgument::neg(2, 1), 2 * k);
                    checked_div(&fb, &fb.one(), &den, "(-q^2;q)_{2k}")
                },
            ),
            SeedId::Bp14 => BaileyPair::new(
                self.as_str(),
                s,
                field,
                move |k| {
                    let k = k as i64;
                    Ok(seed_alpha(&fa, k, 2, 2 * k * k, |j| -j * j))
                },
                move |k| {
                    let num = pochhammer(&fb, PochArgument::pos(1, 2), k);
                    let den = fb.mul(
                        &pochhammer(&fb, PochArgument::pos(2, 2), k),
                        &pochhammer(&fb, PochArgument::neg(1, 1), 2 * k),
                    );
                    checked_div(&fb, &num, &den, "(q^2;q^2)_k (-q)_{2k}")
                },
            ),
        }
    }
}

impl fmt::Display for SeedId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SeedId {
    type Err = BaileyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SeedId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| BaileyError::UnknownSeed(s.to_string()))
    }
}

/// `(1 - q^{t(2k+1)})/(1 - q^t) · q^{shift} · Σ_{j=-k}^{k} (-1)^j q^{e(j)}`,
/// with the quotient expanded as `Σ_{i=0}^{2k} q^{t i}`.
pub(crate) fn seed_alpha<F: QField>(
    f: &F,
    k: i64,
    t: i64,
    shift: i64,
    e: impl Fn(i64) -> i64,
) -> F::Elem {
    let geometric = f.sum((0..=2 * k).map(|i| f.q_pow(t * i)));
    let theta = signed_range_sum(f, -k, k, |j| f.signed(&f.q_pow(e(j)), j));
    f.mul_q_pow(&f.mul(&geometric, &theta), shift)
}

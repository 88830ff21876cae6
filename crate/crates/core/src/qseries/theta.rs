//! Truncated indefinite theta double sums at a primitive `N`th root of unity.
//!
//! Every sum has the shape
//!
//! ```text
//! scalar · Σ_{k=-N}^{N-1} Σ_{j=-k}^{k} [sgn(k)] · [A(k) - B(j)] · sign(j, k) · q^{±(A(k) - B(j))}
//! ```
//!
//! where the inner sum follows the signed-range convention, so for `k < 0`
//! it is `-Σ_{j=k+1}^{-k-1}`.

use std::sync::Arc;

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::rational::serde_str;
use crate::arith::{int, rat, to_i64, ArithError, CyclotomicNumber, CyclotomicRing, Rational};
use crate::qseries::summation::{sgn, signed_range};

/// `A(k) = a2 k^2 + a1 k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KQuadratic {
    #[serde(with = "serde_str")]
    pub a2: Rational,
    #[serde(with = "serde_str")]
    pub a1: Rational,
}

impl KQuadratic {
    pub fn new(a2: Rational, a1: Rational) -> Self {
        Self { a2, a1 }
    }

    /// `k^2`
    pub fn square() -> Self {
        Self::new(int(1), int(0))
    }

    /// `k(3k+1)/2`
    pub fn pentagonal() -> Self {
        Self::new(rat(3, 2), rat(1, 2))
    }

    /// `m k^2 + (m-1) k`
    pub fn chain_square(m: i64) -> Self {
        Self::new(int(m), int(m - 1))
    }

    /// `k(3k+1)/2 + c (k^2 + k)`
    pub fn pentagonal_plus(c: i64) -> Self {
        Self::new(rat(3, 2) + int(c), rat(1, 2) + int(c))
    }

    pub fn eval(&self, k: i64) -> Rational {
        &self.a2 * int(k * k) + &self.a1 * int(k)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum JQuadratic {
    /// `j(3j+1)/2`
    Pentagonal,
    /// `j^2`
    Square,
}

impl JQuadratic {
    pub fn eval(self, j: i64) -> i64 {
        match self {
            Self::Pentagonal => j * (3 * j + 1) / 2,
            Self::Square => j * j,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignMode {
    /// `(-1)^j`
    J,
    /// `(-1)^{j+k}`
    JPlusK,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightMode {
    /// Each term carries the factor `A(k) - B(j)`.
    ByQuadratic,
    Unweighted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SgnMode {
    Include,
    Omit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaSpec {
    pub k_quadratic: KQuadratic,
    pub j_quadratic: JQuadratic,
    /// `+1` for `q^{A(k)-B(j)}`, `-1` for `q^{-(A(k)-B(j))}`.
    pub exponent_sign: i8,
    pub sign_mode: SignMode,
    pub weight_mode: WeightMode,
    pub sgn_mode: SgnMode,
    #[serde(with = "serde_str")]
    pub scalar: Rational,
}

impl ThetaSpec {
    /// Same sum with `q` replaced by `1/q`.
    pub fn inverted(&self) -> Self {
        Self {
            exponent_sign: -self.exponent_sign,
            ..self.clone()
        }
    }

    pub fn with_scalar(&self, scalar: Rational) -> Self {
        Self {
            scalar,
            ..self.clone()
        }
    }

    /// The integer `A(k) - B(j)`.
    pub fn quadratic(&self, k: i64, j: i64) -> Result<i64, ArithError> {
        let v = self.k_quadratic.eval(k) - int(self.j_quadratic.eval(j));
        to_i64(&v, "theta exponent")
    }

    /// The integer coefficient multiplying `q^{±(A(k)-B(j))}` for one `(k, j)`
    /// before the scalar and the range orientation are applied.
    pub fn term_coefficient(&self, k: i64, j: i64) -> Result<i64, ArithError> {
        let mut c = match self.sign_mode {
            SignMode::J => parity_sign(j),
            SignMode::JPlusK => parity_sign(j + k),
        };
        if self.sgn_mode == SgnMode::Include {
            c *= sgn(k);
        }
        if self.weight_mode == WeightMode::ByQuadratic {
            c *= self.quadratic(k, j)?;
        }
        Ok(c)
    }
}

fn parity_sign(n: i64) -> i64 {
    if n.is_even() {
        1
    } else {
        -1
    }
}

/// Evaluates `spec` at `q = ζ_N`, `N = ring.order()`.
///
/// Terms are binned by exponent modulo `N` with exact integer weights and
/// reduced modulo `Φ_N` once at the end.
pub fn theta_double_sum(
    spec: &ThetaSpec,
    ring: &Arc<CyclotomicRing>,
) -> Result<CyclotomicNumber, ArithError> {
    let n = ring.order() as i64;
    let mut bins = vec![0i128; n as usize];
    for k in -n..n {
        let (js, orientation) = signed_range(-k, k);
        for j in js {
            let c = spec.term_coefficient(k, j)? * orientation;
            if c == 0 {
                continue;
            }
            let e = spec.exponent_sign as i64 * spec.quadratic(k, j)?;
            bins[ring.exponent_mod(e)] += c as i128;
        }
    }
    if spec.scalar.is_zero() {
        return Ok(ring.zero());
    }
    let bins: Vec<Rational> = bins
        .into_iter()
        .map(|c| Rational::from_integer(c.into()) * &spec.scalar)
        .collect();
    Ok(ring.from_bins(bins))
}

//! Exact checks of Bailey pairs and key lemmas at rational sample points.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{format_rational, QField, Rational, RationalPoint};

use super::key_lemma::{key_lemma_eval, KeyLemma};
use super::lemma::{apply_steps, ChainStep};
use super::pair::BaileyPair;
use super::seeds::SeedId;
use super::BaileyError;

/// A seed followed by a sequence of steps, buildable over any field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecipe {
    pub seed: SeedId,
    #[serde(default)]
    pub steps: Vec<ChainStep>,
}

impl PairRecipe {
    pub fn seed(seed: SeedId) -> Self {
        Self { seed, steps: Vec::new() }
    }

    pub fn then(mut self, step: ChainStep) -> Self {
        self.steps.push(step);
        self
    }

    pub fn build<F>(&self, field: &F) -> Result<BaileyPair<F>, BaileyError>
    where
        F: QField + 'static,
        F::Elem: 'static,
    {
        apply_steps(&self.seed.pair(field), &self.steps)
    }
}

impl fmt::Display for PairRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.seed)?;
        for s in &self.steps {
            write!(f, " ∘ {s}")?;
        }
        Ok(())
    }
}

/// Outcome at one sample point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointCheck {
    pub q: String,
    pub n_max: usize,
    /// First index where a check failed, if any.
    pub mismatch_at: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub subject: String,
    pub points: Vec<PointCheck>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.points.iter().all(|p| p.mismatch_at.is_none())
    }
}

/// Rejects sample points at which the defining denominators can vanish.
pub fn sample_point(q: &Rational) -> Result<RationalPoint, BaileyError> {
    if q.is_zero() || q.abs().is_one() {
        return Err(BaileyError::BadSamplePoint(format_rational(q)));
    }
    Ok(RationalPoint::new(q.clone())?)
}

/// The default sample points `2/3, 5/7, 3/2`.
pub fn default_points() -> Vec<Rational> {
    use crate::arith::rat;
    vec![rat(2, 3), rat(5, 7), rat(3, 2)]
}

/// First `n ≤ n_max` at which `β_n`, the defining sum and the terminating
/// form do not all agree.
pub fn first_pair_mismatch<F: QField>(pair: &BaileyPair<F>, n_max: usize) -> Result<Option<usize>, BaileyError> {
    for n in 0..=n_max {
        let b = pair.beta(n)?;
        let d = pair.beta_from_definition(n)?;
        let t = pair.beta_from_terminating_form(n)?;
        if b != d || d != t {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

pub fn verify_pair(recipe: &PairRecipe, n_max: usize, points: &[Rational]) -> Result<CheckReport, BaileyError> {
    let points = points.iter().map(sample_point).collect::<Result<Vec<_>, _>>()?;
    let mut out = Vec::with_capacity(points.len());
    for p in &points {
        let pair = recipe.build(p)?;
        out.push(PointCheck {
            q: format_rational(p.q()),
            n_max,
            mismatch_at: first_pair_mismatch(&pair, n_max)?,
        });
    }
    Ok(CheckReport {
        subject: recipe.to_string(),
        points: out,
    })
}

/// Checks both sides of `lemma` for `1 ≤ n ≤ n_max`.
pub fn verify_key_lemma(
    lemma: &KeyLemma,
    recipe: &PairRecipe,
    n_max: usize,
    points: &[Rational],
) -> Result<CheckReport, BaileyError> {
    let points = points.iter().map(sample_point).collect::<Result<Vec<_>, _>>()?;
    let mut out = Vec::with_capacity(points.len());
    for p in &points {
        let pair = recipe.build(p)?;
        let mut mismatch_at = None;
        for n in 1..=n_max {
            let (l, r) = key_lemma_eval(lemma, &pair, n)?;
            if l != r {
                mismatch_at = Some(n);
                break;
            }
        }
        out.push(PointCheck {
            q: format_rational(p.q()),
            n_max,
            mismatch_at,
        });
    }
    Ok(CheckReport {
        subject: format!("{lemma} with {recipe}"),
        points: out,
    })
}

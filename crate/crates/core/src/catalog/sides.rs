//! Series shapes appearing on either side of a catalogued identity, and their
//! exact evaluation at `q = ζ_N`.

use std::sync::Arc;

use serde::Serialize;

use crate::arith::{int, rat, CyclotomicNumber, CyclotomicRing, QRing, Rational};
use crate::qseries::{
    pochhammer, JQuadratic, KQuadratic, PochArgument, PrefixStream, QBinomialTable, SgnMode, SignMode,
    ThetaSpec, WeightMode,
};

use super::CatalogError;

/// `±Σ_{n=0}^{cap} [(-1)^n] q^{a n + b} Π_i (arg_i)_n`, stopping at the first
/// vanishing prefix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingleSum {
    pub factors: Vec<PochArgument>,
    /// `(a, b)` in `q^{a n + b}`.
    pub exponent: (i64, i64),
    pub alternating: bool,
    pub negate: bool,
}

impl SingleSum {
    pub fn new(factors: &[PochArgument]) -> Self {
        Self {
            factors: factors.to_vec(),
            exponent: (0, 0),
            alternating: false,
            negate: false,
        }
    }

    pub fn times_q_pow(mut self, a: i64, b: i64) -> Self {
        self.exponent = (a, b);
        self
    }

    pub fn alternating(mut self) -> Self {
        self.alternating = true;
        self
    }

    pub fn negated(mut self) -> Self {
        self.negate = true;
        self
    }

    pub fn eval(&self, ring: &Arc<CyclotomicRing>, cap: usize) -> CyclotomicNumber {
        let mut streams: Vec<_> = self.factors.iter().map(|a| PrefixStream::new(ring, *a)).collect();
        let mut total = ring.zero();
        for n in 0..=cap {
            let mut t = ring.one();
            for s in streams.iter_mut() {
                t = ring.mul(&t, &s.next().expect("prefix streams are infinite"));
            }
            if t.is_zero() {
                // Every later prefix contains this one as a factor.
                break;
            }
            let n = n as i64;
            t = ring.mul_q_pow(&t, self.exponent.0 * n + self.exponent.1);
            if self.alternating {
                t = ring.signed(&t, n);
            }
            total = ring.add(&total, &t);
        }
        if self.negate {
            ring.neg(&total)
        } else {
            total
        }
    }
}

/// Exponent of the power of `q` in a chain summand, as a function of the
/// bottom index `n_1` and the top index `n_L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainExponent {
    /// `-n_1(n_1+1)/2`
    MinusBottomTriangular,
    /// `n_L + 1`
    TopPlusOne,
    /// `-(n_L+1)^2`
    MinusTopPlusOneSquared,
    /// `-n_L^2`
    MinusTopSquared,
}

impl ChainExponent {
    pub fn eval(self, bottom: i64, top: i64) -> i64 {
        match self {
            ChainExponent::MinusBottomTriangular => -bottom * (bottom + 1) / 2,
            ChainExponent::TopPlusOne => top + 1,
            ChainExponent::MinusTopPlusOneSquared => -(top + 1) * (top + 1),
            ChainExponent::MinusTopSquared => -top * top,
        }
    }
}

/// `(sign · q^{c n_1 + b}; q)_{c (n_L - n_1)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Window {
    pub sign: i8,
    pub stride: i64,
    pub offset: i64,
}

impl Window {
    /// The factors added when the top index moves from `top` to `top + 1`.
    fn step<R: QRing>(&self, ring: &R, top: i64) -> R::Elem {
        let start = self.stride * top + self.offset;
        (start..start + self.stride).fold(ring.one(), |acc, t| {
            PochArgument::new(self.sign, t, 1).apply_factor(ring, &acc, 0)
        })
    }

    pub fn eval<R: QRing>(&self, ring: &R, bottom: i64, top: i64) -> R::Elem {
        (bottom..top).fold(ring.one(), |acc, t| ring.mul(&acc, &self.step(ring, t)))
    }
}

/// The part of a chain summand that depends on the two end indices:
/// `± window · (top)_{n_L} · (bottom)_{n_1} · (-1)^{…} · q^{e(n_1, n_L)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainTerm {
    pub negate: bool,
    pub window: Option<Window>,
    pub top: Option<PochArgument>,
    pub bottom: Option<PochArgument>,
    pub sign_top: bool,
    pub sign_bottom: bool,
    pub exponent: Option<ChainExponent>,
}

impl ChainTerm {
    fn scalar_part<R: QRing>(&self, ring: &R, bottom: i64, top: i64) -> R::Elem {
        let e = self.exponent.map_or(0, |x| x.eval(bottom, top));
        let mut t = ring.q_pow(e);
        if self.sign_top {
            t = ring.signed(&t, top);
        }
        if self.sign_bottom {
            t = ring.signed(&t, bottom);
        }
        if self.negate {
            t = ring.neg(&t);
        }
        t
    }

    /// The full end-index factor, computed directly.
    pub fn eval<R: QRing>(&self, ring: &R, bottom: i64, top: i64) -> R::Elem {
        let mut t = self.scalar_part(ring, bottom, top);
        if let Some(w) = self.window {
            t = ring.mul(&t, &w.eval(ring, bottom, top));
        }
        if let Some(a) = self.top {
            t = ring.mul(&t, &pochhammer(ring, a, top as usize));
        }
        if let Some(a) = self.bottom {
            t = ring.mul(&t, &pochhammer(ring, a, bottom as usize));
        }
        t
    }
}

/// How many chain indices a multisum has for a given `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainLength {
    M,
    TwoMMinusOne,
}

impl ChainLength {
    pub fn resolve(self, m: u64) -> usize {
        match self {
            ChainLength::M => m as usize,
            ChainLength::TwoMMinusOne => 2 * m as usize - 1,
        }
    }
}

/// `Σ_{cap ≥ n_L ≥ … ≥ n_1 ≥ 0} term(n_1, n_L) Π_{i=1}^{L-1} Q^{n_i^2+n_i} [n_{i+1} n_i]_Q`
/// with `Q = q^s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiSum {
    pub term: ChainTerm,
    pub base_exponent: i64,
    pub length: ChainLength,
}

impl MultiSum {
    /// `Q^{n^2+n} [n' n]_Q`.
    fn links(&self, ring: &Arc<CyclotomicRing>, cap: usize) -> Vec<Vec<CyclotomicNumber>> {
        let s = self.base_exponent;
        let table = QBinomialTable::new(ring, cap, s);
        (0..=cap as i64)
            .map(|n| {
                (n..=cap as i64)
                    .map(|np| ring.mul_q_pow(table.get(np, n), s * (n * n + n)))
                    .collect()
            })
            .collect()
    }

    /// Evaluates by propagating chain weights from each bottom index, which
    /// costs `O(L · cap^3)` field operations instead of one per chain.
    pub fn eval(&self, ring: &Arc<CyclotomicRing>, m: u64, cap: usize) -> CyclotomicNumber {
        let len = self.length.resolve(m);
        let links = self.links(ring, cap);
        let term = &self.term;
        let prefixes = |a: Option<PochArgument>| -> Vec<CyclotomicNumber> {
            match a {
                Some(a) => PrefixStream::new(ring, a).take(cap + 1).collect(),
                None => vec![ring.one(); cap + 1],
            }
        };
        let top = prefixes(term.top);
        let bottom = prefixes(term.bottom);
        let steps: Option<Vec<CyclotomicNumber>> = term
            .window
            .map(|w| (0..cap as i64).map(|t| w.step(ring, t)).collect());

        let mut total = ring.zero();
        for n1 in 0..=cap {
            if bottom[n1].is_zero() {
                continue;
            }
            // weights[n] = Σ over chains n_1 ≤ … ≤ n_l = n of the link products.
            let mut weights = vec![ring.zero(); cap + 1];
            weights[n1] = ring.one();
            for _ in 1..len {
                let mut next = vec![ring.zero(); cap + 1];
                for (n, w) in weights.iter().enumerate().skip(n1) {
                    if w.is_zero() {
                        continue;
                    }
                    for (np, slot) in next.iter_mut().enumerate().skip(n) {
                        *slot = ring.add(slot, &ring.mul(w, &links[n][np - n]));
                    }
                }
                weights = next;
            }
            let mut window = ring.one();
            for nl in n1..=cap {
                if nl > n1 {
                    if let Some(steps) = &steps {
                        window = ring.mul(&window, &steps[nl - 1]);
                    }
                }
                if window.is_zero() || top[nl].is_zero() || weights[nl].is_zero() {
                    continue;
                }
                let mut t = term.scalar_part(ring, n1 as i64, nl as i64);
                t = ring.mul(&t, &window);
                t = ring.mul(&t, &top[nl]);
                t = ring.mul(&t, &bottom[n1]);
                t = ring.mul(&t, &weights[nl]);
                total = ring.add(&total, &t);
            }
        }
        total
    }

    /// Straightforward evaluation over every chain; exponential in `L`.
    /// Every chain `n_1 ≤ … ≤ n_L ≤ cap` of the length used at `m`.
    pub fn chains(&self, m: u64, cap: usize) -> Vec<Vec<i64>> {
        fn below(len: usize, top: i64) -> Vec<Vec<i64>> {
            if len == 1 {
                return vec![vec![top]];
            }
            let mut out = Vec::new();
            for k in 0..=top {
                for mut c in below(len - 1, k) {
                    c.push(top);
                    out.push(c);
                }
            }
            out
        }
        let len = self.length.resolve(m);
        (0..=cap as i64).flat_map(|nl| below(len, nl)).collect()
    }

    /// The full summand of one chain, links included.
    pub fn chain_summand(&self, ring: &Arc<CyclotomicRing>, chain: &[i64]) -> CyclotomicNumber {
        let s = self.base_exponent;
        let mut t = self.term.eval(ring, chain[0], chain[chain.len() - 1]);
        for w in chain.windows(2) {
            let b = crate::qseries::q_binomial(ring, w[1], w[0], s);
            t = ring.mul(&t, &ring.mul_q_pow(&b, s * (w[0] * w[0] + w[0])));
        }
        t
    }

    pub fn eval_by_enumeration(&self, ring: &Arc<CyclotomicRing>, m: u64, cap: usize) -> CyclotomicNumber {
        ring.sum(self.chains(m, cap).iter().map(|c| self.chain_summand(ring, c)))
    }
}

/// The Rational prefactor and weighting of a theta side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThetaScalar {
    /// `-1/N`, weighted by the quadratic form.
    MinusOneOverN,
    /// `-1/N^2`, weighted by the quadratic form.
    MinusOneOverNSquared,
    /// A fixed scalar, unweighted.
    Fixed(#[serde(with = "crate::arith::rational::serde_str")] Rational),
    /// `-1/N^2` weighted for odd `N`; the given scalar unweighted for even `N`.
    ByParity {
        #[serde(with = "crate::arith::rational::serde_str")]
        even: Rational,
    },
}

/// The quadratic form `A(k)` as it depends on the chain parameter `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KForm {
    /// `k^2`
    Square,
    /// `m k^2 + (m-1) k`
    ChainSquare,
    /// `k(3k+1)/2`
    Pentagonal,
    /// `k(3k+1)/2 + (m-1)(k^2+k)`
    PentagonalChain,
    /// `k(3k+1)/2 + (2m-2)(k^2+k)`
    PentagonalDoubleChain,
}

impl KForm {
    pub fn quadratic(self, m: u64) -> KQuadratic {
        let m = m as i64;
        match self {
            KForm::Square => KQuadratic::square(),
            KForm::ChainSquare => KQuadratic::chain_square(m),
            KForm::Pentagonal => KQuadratic::pentagonal(),
            KForm::PentagonalChain => KQuadratic::pentagonal_plus(m - 1),
            KForm::PentagonalDoubleChain => KQuadratic::pentagonal_plus(2 * m - 2),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaForm {
    pub k_form: KForm,
    pub j_quadratic: JQuadratic,
    pub exponent_sign: i8,
    pub sign_mode: SignMode,
    pub sgn_mode: SgnMode,
    pub scalar: ThetaScalar,
}

impl ThetaForm {
    pub fn spec(&self, n: u64, m: u64) -> ThetaSpec {
        let ni = n as i64;
        let (weight_mode, scalar) = match &self.scalar {
            ThetaScalar::MinusOneOverN => (WeightMode::ByQuadratic, rat(-1, ni)),
            ThetaScalar::MinusOneOverNSquared => (WeightMode::ByQuadratic, rat(-1, ni * ni)),
            ThetaScalar::Fixed(r) => (WeightMode::Unweighted, r.clone()),
            ThetaScalar::ByParity { even } => {
                if n % 2 == 1 {
                    (WeightMode::ByQuadratic, rat(-1, ni * ni))
                } else {
                    (WeightMode::Unweighted, even.clone())
                }
            }
        };
        ThetaSpec {
            k_quadratic: self.k_form.quadratic(m),
            j_quadratic: self.j_quadratic,
            exponent_sign: self.exponent_sign,
            sign_mode: self.sign_mode,
            weight_mode,
            sgn_mode: self.sgn_mode,
            scalar,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SideExpr {
    Single(SingleSum),
    Multi(MultiSum),
    Theta(ThetaForm),
}

impl SideExpr {
    /// Evaluates at `ζ_N` with every summation index capped at `cap`. Theta
    /// sides ignore `cap`; their range is fixed by `N`.
    pub fn eval(&self, ring: &Arc<CyclotomicRing>, m: u64, cap: usize) -> Result<CyclotomicNumber, CatalogError> {
        Ok(match self {
            SideExpr::Single(s) => s.eval(ring, cap),
            SideExpr::Multi(s) => s.eval(ring, m, cap),
            SideExpr::Theta(t) => crate::qseries::theta_double_sum(&t.spec(ring.order(), m), ring)?,
        })
    }

    pub fn theta_spec(&self, n: u64, m: u64) -> Option<ThetaSpec> {
        match self {
            SideExpr::Theta(t) => Some(t.spec(n, m)),
            _ => None,
        }
    }
}

/// `1/4` and `-1/4`.
pub(crate) fn quarter(sign: i64) -> Rational {
    int(sign) / int(4)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_matches_pochhammer() {
        let r = CyclotomicRing::new(9).unwrap();
        let w = Window {
            sign: -1,
            stride: 2,
            offset: 1,
        };
        for b in 0..5i64 {
            for t in b..7 {
                let direct = pochhammer(&r, PochArgument::neg(2 * b + 1, 1), (2 * (t - b)) as usize);
                assert_eq!(w.eval(&r, b, t), direct);
            }
        }
    }

    #[test]
    fn single_sum_stops_at_the_first_zero_prefix() {
        let r = CyclotomicRing::new(5).unwrap();
        let s = SingleSum::new(&[PochArgument::pos(1, 1)]);
        assert_eq!(s.eval(&r, 4), s.eval(&r, 40));
    }
}

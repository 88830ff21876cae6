//! The catalogue of quantum q-series identities, each a pair of sides
//! evaluated exactly in `Q(ζ_N)`.

pub mod sides;

use std::fmt;
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{ArithError, CyclotomicNumber, CyclotomicRing};
use crate::qseries::{JQuadratic, PochArgument, SgnMode, SignMode, ThetaSpec};

pub use sides::{
    ChainExponent, ChainLength, ChainTerm, KForm, MultiSum, SideExpr, SingleSum, ThetaForm, ThetaScalar, Window,
};

use sides::quarter;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("{id} does not apply at N = {n} ({applicability} N only)")]
    Inapplicable {
        id: String,
        n: u64,
        applicability: Applicability,
    },
    #[error("{id} takes m = 1 only, got m = {m}")]
    MOutOfRange { id: String, m: u64 },
    #[error("{0} is not an m = 1 reduction source")]
    NoReduction(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Applicability {
    Any,
    Even,
    Odd,
}

impl Applicability {
    pub fn admits(self, n: u64) -> bool {
        match self {
            Applicability::Any => true,
            Applicability::Even => n.is_multiple_of(2),
            Applicability::Odd => n % 2 == 1,
        }
    }
}

impl fmt::Display for Applicability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Applicability::Any => "any",
            Applicability::Even => "even",
            Applicability::Odd => "odd",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MDomain {
    /// Only `m = 1`.
    One,
    /// Every `m ≥ 1`.
    AtLeastOne,
}

impl MDomain {
    pub fn admits(self, m: u64) -> bool {
        match self {
            MDomain::One => m == 1,
            MDomain::AtLeastOne => m >= 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentitySpec {
    pub id: &'static str,
    pub statement: &'static str,
    pub applicability: Applicability,
    pub m_domain: MDomain,
    pub side_a: SideExpr,
    pub side_b: SideExpr,
}

impl IdentitySpec {
    pub fn side(&self, side: Side) -> &SideExpr {
        match side {
            Side::A => &self.side_a,
            Side::B => &self.side_b,
        }
    }

    fn check(&self, n: u64, m: u64) -> Result<(), CatalogError> {
        if !self.applicability.admits(n) {
            return Err(CatalogError::Inapplicable {
                id: self.id.to_string(),
                n,
                applicability: self.applicability,
            });
        }
        if !self.m_domain.admits(m) {
            return Err(CatalogError::MOutOfRange {
                id: self.id.to_string(),
                m,
            });
        }
        Ok(())
    }
}

fn poch(sign: i8, e: i64, s: i64) -> PochArgument {
    PochArgument::new(sign, e, s)
}

fn single(factors: &[PochArgument]) -> SingleSum {
    SingleSum::new(factors)
}

fn chain(term: ChainTerm, base_exponent: i64, length: ChainLength) -> SideExpr {
    SideExpr::Multi(MultiSum {
        term,
        base_exponent,
        length,
    })
}

fn term() -> ChainTerm {
    ChainTerm {
        negate: false,
        window: None,
        top: None,
        bottom: None,
        sign_top: false,
        sign_bottom: false,
        exponent: None,
    }
}

fn theta(k_form: KForm, j: JQuadratic, exponent_sign: i8, scalar: ThetaScalar) -> SideExpr {
    let (sign_mode, sgn_mode) = match scalar {
        ThetaScalar::MinusOneOverN => (SignMode::J, SgnMode::Omit),
        _ => (SignMode::JPlusK, SgnMode::Include),
    };
    SideExpr::Theta(ThetaForm {
        k_form,
        j_quadratic: j,
        exponent_sign,
        sign_mode,
        sgn_mode,
        scalar,
    })
}

// Chain summands shared between several identities.

/// `(q)_{n_L} (-1)^{n_1} q^{-n_1(n_1+1)/2}`
fn thm1_a() -> ChainTerm {
    ChainTerm {
        top: Some(poch(1, 1, 1)),
        sign_bottom: true,
        exponent: Some(ChainExponent::MinusBottomTriangular),
        ..term()
    }
}

/// `(q)_{n_L} (q)_{n_1} q^{n_L+1}`
fn thm1_b() -> ChainTerm {
    ChainTerm {
        top: Some(poch(1, 1, 1)),
        bottom: Some(poch(1, 1, 1)),
        exponent: Some(ChainExponent::TopPlusOne),
        ..term()
    }
}

/// `(-q)_{n_L} (q)_{n_1} q^{n_L+1}`
fn thm2_a() -> ChainTerm {
    ChainTerm {
        top: Some(poch(-1, 1, 1)),
        bottom: Some(poch(1, 1, 1)),
        exponent: Some(ChainExponent::TopPlusOne),
        ..term()
    }
}

/// `-(-q)_{n_L} (-1)^{n_L+n_1} q^{-n_1(n_1+1)/2}`
fn thm2_b() -> ChainTerm {
    ChainTerm {
        negate: true,
        top: Some(poch(-1, 1, 1)),
        sign_top: true,
        sign_bottom: true,
        exponent: Some(ChainExponent::MinusBottomTriangular),
        ..term()
    }
}

/// `(-q^{n_1+1})_{n_L-n_1} (-1)^{n_L} (q)_{n_1}`
fn thm3_a() -> ChainTerm {
    ChainTerm {
        window: Some(Window {
            sign: -1,
            stride: 1,
            offset: 1,
        }),
        bottom: Some(poch(1, 1, 1)),
        sign_top: true,
        ..term()
    }
}

/// `(-q^{2n_1+2})_{2n_L-2n_1} (-1)^{n_L} q^{-(n_L+1)^2} (q^2;q^2)_{n_1}`
fn thm3_b() -> ChainTerm {
    ChainTerm {
        window: Some(Window {
            sign: -1,
            stride: 2,
            offset: 2,
        }),
        bottom: Some(poch(1, 2, 2)),
        sign_top: true,
        exponent: Some(ChainExponent::MinusTopPlusOneSquared),
        ..term()
    }
}

/// `(-q^{2n_1+1})_{2n_L-2n_1} (-1)^{n_L} q^{-n_L^2} (q;q^2)_{n_1}`
fn thm4_b() -> ChainTerm {
    ChainTerm {
        window: Some(Window {
            sign: -1,
            stride: 2,
            offset: 1,
        }),
        bottom: Some(poch(1, 1, 2)),
        sign_top: true,
        exponent: Some(ChainExponent::MinusTopSquared),
        ..term()
    }
}

fn build_catalog() -> Vec<IdentitySpec> {
    use Applicability::{Any, Even, Odd};
    use ChainLength::{TwoMMinusOne, M};
    use JQuadratic::{Pentagonal as JPent, Square as JSq};
    use KForm::*;
    use MDomain::{AtLeastOne, One};

    // Recurring single sums.
    let inv_qfac = || SideExpr::Single(single(&[poch(1, -1, -1)]));
    let q2q2_shift = || SideExpr::Single(single(&[poch(1, 2, 2)]).times_q_pow(1, 1));
    let qfac_sq_shift = || SideExpr::Single(single(&[poch(1, 1, 1), poch(1, 1, 1)]).times_q_pow(1, 1));
    let q_q2 = || SideExpr::Single(single(&[poch(1, 1, 2)]));
    let by_parity = |even: i64| ThetaScalar::ByParity { even: quarter(even) };

    vec![
        IdentitySpec {
            id: "cohen-main",
            statement: "Σ (-1)^n (q^-1;q^-1)_n = Σ (q^2;q^2)_n q^(n+1)",
            applicability: Any,
            m_domain: One,
            side_a: SideExpr::Single(single(&[poch(1, -1, -1)]).alternating()),
            side_b: q2q2_shift(),
        },
        IdentitySpec {
            id: "cohen-even",
            statement: "Σ (q^2;q^2)_n q^(n+1) = -Σ (-q^-1;q^-1)_n",
            applicability: Even,
            m_domain: One,
            side_a: q2q2_shift(),
            side_b: SideExpr::Single(single(&[poch(-1, -1, -1)]).negated()),
        },
        IdentitySpec {
            id: "cohen-odd",
            statement: "Σ (q^2;q^2)_n q^(n+1) = Σ (q;q^2)_n",
            applicability: Odd,
            m_domain: One,
            side_a: q2q2_shift(),
            side_b: q_q2(),
        },
        IdentitySpec {
            id: "bopr",
            statement: "Σ (q^-1;q^-1)_n = Σ (q)_n^2 q^(n+1)",
            applicability: Any,
            m_domain: One,
            side_a: inv_qfac(),
            side_b: qfac_sq_shift(),
        },
        IdentitySpec {
            id: "thm1",
            statement: "Σ (q)_{n_m} (-1)^{n_1} q^{-n_1(n_1+1)/2} Π = Σ (q)_{n_m} (q)_{n_1} q^{n_m+1} Π, \
                        Π = Π q^{n_i^2+n_i} [n_{i+1} n_i]",
            applicability: Any,
            m_domain: AtLeastOne,
            side_a: chain(thm1_a(), 1, M),
            side_b: chain(thm1_b(), 1, M),
        },
        IdentitySpec {
            id: "thm2",
            statement: "Σ (-q)_{n_m} (q)_{n_1} q^{n_m+1} Π = -Σ (-q)_{n_m} (-1)^{n_m+n_1} q^{-n_1(n_1+1)/2} Π",
            applicability: Even,
            m_domain: AtLeastOne,
            side_a: chain(thm2_a(), 1, M),
            side_b: chain(thm2_b(), 1, M),
        },
        IdentitySpec {
            id: "thm3",
            statement: "Σ_{2m-1 indices} (-q^{n_1+1})_{n_{2m-1}-n_1} (-1)^{n_{2m-1}} (q)_{n_1} Π \
                        = Σ (-q^{2n_1+2})_{2n_m-2n_1} (-1)^{n_m} q^{-(n_m+1)^2} (q^2;q^2)_{n_1} Π_{q^2}",
            applicability: Any,
            m_domain: AtLeastOne,
            side_a: chain(thm3_a(), 1, TwoMMinusOne),
            side_b: chain(thm3_b(), 2, M),
        },
        IdentitySpec {
            id: "thm4",
            statement: "Σ (-q^{2n_1+2})_{2n_m-2n_1} (-1)^{n_m} q^{-(n_m+1)^2} (q^2;q^2)_{n_1} Π_{q^2} \
                        = Σ (-q^{2n_1+1})_{2n_m-2n_1} (-1)^{n_m} q^{-n_m^2} (q;q^2)_{n_1} Π_{q^2}",
            applicability: Odd,
            m_domain: AtLeastOne,
            side_a: chain(thm3_b(), 2, M),
            side_b: chain(thm4_b(), 2, M),
        },
        IdentitySpec {
            id: "prop-bopr-a",
            statement: "Σ (q)_k = -1/N ΣΣ (k^2 - j(3j+1)/2) q^{-k^2+j(3j+1)/2} (-1)^j",
            applicability: Any,
            m_domain: One,
            side_a: SideExpr::Single(single(&[poch(1, 1, 1)])),
            side_b: theta(Square, JPent, -1, ThetaScalar::MinusOneOverN),
        },
        IdentitySpec {
            id: "prop-bopr-b",
            statement: "Σ (q)_k^2 q^{k+1} = -1/N ΣΣ (k^2 - j(3j+1)/2) q^{k^2-j(3j+1)/2} (-1)^j",
            applicability: Any,
            m_domain: One,
            side_a: qfac_sq_shift(),
            side_b: theta(Square, JPent, 1, ThetaScalar::MinusOneOverN),
        },
        IdentitySpec {
            id: "prop-cohenex1-a",
            statement: "Σ (q^2;q^2)_k q^{k+1} = ΣΣ sgn(k) (-1)^{k+j} q^{k^2-j(3j+1)/2} × \
                        (-(k^2-j(3j+1)/2)/N^2 for odd N, -1/4 for even N)",
            applicability: Any,
            m_domain: One,
            side_a: q2q2_shift(),
            side_b: theta(Square, JPent, 1, by_parity(-1)),
        },
        IdentitySpec {
            id: "prop-cohenex1-b",
            statement: "Σ (-q)_k = 1/4 ΣΣ sgn(k) (-1)^{k+j} q^{-k^2+j(3j+1)/2}",
            applicability: Even,
            m_domain: One,
            side_a: SideExpr::Single(single(&[poch(-1, 1, 1)])),
            side_b: theta(Square, JPent, -1, ThetaScalar::Fixed(quarter(1))),
        },
        IdentitySpec {
            id: "prop-cohen-a",
            statement: "Σ (q)_k (-1)^k = ΣΣ sgn(k) (-1)^{k+j} q^{k(3k+1)/2-j^2} × \
                        (-(k(3k+1)/2-j^2)/N^2 for odd N, 1/4 for even N)",
            applicability: Any,
            m_domain: One,
            side_a: SideExpr::Single(single(&[poch(1, 1, 1)]).alternating()),
            side_b: theta(Pentagonal, JSq, 1, by_parity(1)),
        },
        IdentitySpec {
            id: "prop-cohen-b",
            statement: "Σ (q^2;q^2)_k q^{k+1} = ΣΣ sgn(k) (-1)^{k+j} q^{-k(3k+1)/2+j^2} × \
                        (-(k(3k+1)/2-j^2)/N^2 for odd N, 1/4 for even N)",
            applicability: Any,
            m_domain: One,
            side_a: q2q2_shift(),
            side_b: theta(Pentagonal, JSq, -1, by_parity(1)),
        },
        IdentitySpec {
            id: "prop-cohenex2",
            statement: "Σ (q;q^2)_k = -1/N^2 ΣΣ sgn(k) (k(3k+1)/2-j^2) (-1)^{k+j} q^{-k(3k+1)/2+j^2}",
            applicability: Odd,
            m_domain: One,
            side_a: q_q2(),
            side_b: theta(Pentagonal, JSq, -1, ThetaScalar::MinusOneOverNSquared),
        },
        IdentitySpec {
            id: "halfway-thm1",
            statement: "Σ (q)_{n_m} (q)_{n_1} q^{n_m+1} Π = -1/N ΣΣ (mk^2+(m-1)k-j(3j+1)/2) \
                        q^{mk^2+(m-1)k-j(3j+1)/2} (-1)^j",
            applicability: Any,
            m_domain: AtLeastOne,
            side_a: chain(thm1_b(), 1, M),
            side_b: theta(ChainSquare, JPent, 1, ThetaScalar::MinusOneOverN),
        },
        IdentitySpec {
            id: "halfway-thm2",
            statement: "Σ (-q)_{n_m} (q)_{n_1} q^{n_m+1} Π = -1/4 ΣΣ sgn(k) (-1)^{j+k} q^{mk^2+(m-1)k-j(3j+1)/2}",
            applicability: Even,
            m_domain: AtLeastOne,
            side_a: chain(thm2_a(), 1, M),
            side_b: theta(ChainSquare, JPent, 1, ThetaScalar::Fixed(quarter(-1))),
        },
        IdentitySpec {
            id: "halfway-thm3-a",
            statement: "Σ (-q^{n_1+1})_{n_m-n_1} (-1)^{n_m} (q)_{n_1} Π = ΣΣ sgn(k) (-1)^{k+j} \
                        q^{k(3k+1)/2+(m-1)(k^2+k)-j^2} × (weighted -1/N^2 for odd N, 1/4 for even N)",
            applicability: Any,
            m_domain: AtLeastOne,
            side_a: chain(thm3_a(), 1, M),
            side_b: theta(PentagonalChain, JSq, 1, by_parity(1)),
        },
        IdentitySpec {
            id: "halfway-thm3-b",
            statement: "Σ (-q^{2n_1+2})_{2n_m-2n_1} (-1)^{n_m} q^{-(n_m+1)^2} (q^2;q^2)_{n_1} Π_{q^2} = ΣΣ sgn(k) \
                        (-1)^{k+j} q^{k(3k+1)/2+(2m-2)(k^2+k)-j^2} × (weighted -1/N^2 for odd N, 1/4 for even N)",
            applicability: Any,
            m_domain: AtLeastOne,
            side_a: chain(thm3_b(), 2, M),
            side_b: theta(PentagonalDoubleChain, JSq, 1, by_parity(1)),
        },
        IdentitySpec {
            id: "halfway-thm4",
            statement: "Σ (-q^{2n_1+1})_{2n_m-2n_1} (-1)^{n_m} q^{-n_m^2} (q;q^2)_{n_1} Π_{q^2} = -1/N^2 ΣΣ sgn(k) \
                        (k(3k+1)/2+(2m-2)(k^2+k)-j^2) (-1)^{k+j} q^{k(3k+1)/2+(2m-2)(k^2+k)-j^2}",
            applicability: Odd,
            m_domain: AtLeastOne,
            side_a: chain(thm4_b(), 2, M),
            side_b: theta(PentagonalDoubleChain, JSq, 1, ThetaScalar::MinusOneOverNSquared),
        },
    ]
}

/// Every catalogued identity, in a fixed order.
pub fn catalog() -> &'static [IdentitySpec] {
    static CATALOG: OnceLock<Vec<IdentitySpec>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

pub fn lookup(id: &str) -> Result<&'static IdentitySpec, CatalogError> {
    catalog()
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| CatalogError::UnknownIdentity(id.to_string()))
}

/// The ring `Q(ζ_N)`, shared between evaluations.
pub fn ring(n: u64) -> Result<Arc<CyclotomicRing>, CatalogError> {
    use std::collections::HashMap;
    use std::sync::Mutex;
    static RINGS: OnceLock<Mutex<HashMap<u64, Arc<CyclotomicRing>>>> = OnceLock::new();
    let rings = RINGS.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(r) = rings.lock().unwrap().get(&n) {
        return Ok(Arc::clone(r));
    }
    let r = CyclotomicRing::new(n)?;
    rings.lock().unwrap().insert(n, Arc::clone(&r));
    Ok(r)
}

pub fn evaluate_side(spec: &IdentitySpec, side: Side, n: u64, m: u64) -> Result<CyclotomicNumber, CatalogError> {
    let cap = n.checked_sub(1).ok_or(ArithError::ZeroOrder)? as usize;
    evaluate_side_with_cap(spec, side, n, m, cap)
}

/// As [`evaluate_side`] with every summation index capped at `cap` instead
/// of `N - 1`.
pub fn evaluate_side_with_cap(
    spec: &IdentitySpec,
    side: Side,
    n: u64,
    m: u64,
    cap: usize,
) -> Result<CyclotomicNumber, CatalogError> {
    spec.check(n, m)?;
    spec.side(side).eval(&ring(n)?, m, cap)
}

/// The theta specification behind a side, if it is a theta sum.
pub fn theta_spec(spec: &IdentitySpec, side: Side, n: u64, m: u64) -> Option<ThetaSpec> {
    spec.side(side).theta_spec(n, m)
}

/// The automorphism `ζ ↦ ζ^{-1}` of `Q(ζ_N)`.
pub fn inversion_map(x: &CyclotomicNumber) -> CyclotomicNumber {
    x.inversion_map()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedInapplicable,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedInapplicable => "skipped-inapplicable",
            Status::Error => "error",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    #[serde(rename = "N")]
    pub n: u64,
    pub m: u64,
    pub status: Status,
    #[serde(rename = "side_A", default, skip_serializing_if = "Option::is_none")]
    pub side_a: Option<CyclotomicNumber>,
    #[serde(rename = "side_B", default, skip_serializing_if = "Option::is_none")]
    pub side_b: Option<CyclotomicNumber>,
    /// `side_A - side_B`, present on a mismatch.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub difference: Option<CyclotomicNumber>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl VerificationReport {
    fn bare(id: &str, n: u64, m: u64, status: Status) -> Self {
        Self {
            id: id.to_string(),
            n,
            m,
            status,
            side_a: None,
            side_b: None,
            difference: None,
            error: None,
            elapsed_ms: None,
        }
    }
}

/// Evaluates both sides and compares them exactly.
pub fn verify_identity(spec: &IdentitySpec, n: u64, m: u64) -> VerificationReport {
    if !spec.applicability.admits(n) {
        return VerificationReport::bare(spec.id, n, m, Status::SkippedInapplicable);
    }
    let start = Instant::now();
    let sides = evaluate_side(spec, Side::A, n, m).and_then(|a| Ok((a, evaluate_side(spec, Side::B, n, m)?)));
    let elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    match sides {
        Ok((a, b)) => {
            let pass = a == b;
            VerificationReport {
                status: if pass { Status::Pass } else { Status::Fail },
                difference: (!pass).then(|| &a - &b),
                side_a: Some(a),
                side_b: Some(b),
                elapsed_ms,
                ..VerificationReport::bare(spec.id, n, m, Status::Pass)
            }
        }
        Err(e) => VerificationReport {
            error: Some(e.to_string()),
            elapsed_ms,
            ..VerificationReport::bare(spec.id, n, m, Status::Error)
        },
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReductionReport {
    pub theorem: String,
    pub classic: String,
    #[serde(rename = "N")]
    pub n: u64,
    /// Whether the classic is compared after `q ↦ 1/q`.
    pub inverted: bool,
    pub side_a_matches: bool,
    pub side_b_matches: bool,
}

impl ReductionReport {
    pub fn passed(&self) -> bool {
        self.side_a_matches && self.side_b_matches
    }
}

/// Compares a multisum theorem at `m = 1` with the classical identity it
/// specializes to: `thm1 → bopr`, `thm2 → cohen-even` directly and
/// `thm3 → cohen-main`, `thm4 → cohen-odd` after `q ↦ 1/q`.
pub fn reduction_check_m1(theorem_id: &str, n: u64) -> Result<ReductionReport, CatalogError> {
    let (classic, inverted) = match theorem_id {
        "thm1" => ("bopr", false),
        "thm2" => ("cohen-even", false),
        "thm3" => ("cohen-main", true),
        "thm4" => ("cohen-odd", true),
        other => return Err(CatalogError::NoReduction(other.to_string())),
    };
    let thm = lookup(theorem_id)?;
    let cls = lookup(classic)?;
    let map = |x: CyclotomicNumber| if inverted { x.inversion_map() } else { x };
    let matches = |side| -> Result<bool, CatalogError> {
        Ok(map(evaluate_side(thm, side, n, 1)?) == evaluate_side(cls, side, n, 1)?)
    };
    Ok(ReductionReport {
        theorem: theorem_id.to_string(),
        classic: classic.to_string(),
        n,
        inverted,
        side_a_matches: matches(Side::A)?,
        side_b_matches: matches(Side::B)?,
    })
}

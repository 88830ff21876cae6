//! Batch verification: identity grids over `N` and `m`, the engine property
//! checks, and report rendering.

use std::fmt::{self, Write as _};
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{
    cyclotomic_poly, format_rational, int, lhopital_at_root, reduce, ArithError, FormalQ, IntPoly, LaurentPoly,
    QRing, Rational,
};
use crate::bailey::{
    chain_alpha_closed_form, composed_chain, default_points, explicit_chain_beta, sample_point, verify_key_lemma,
    verify_pair, BaileyError, ChainKind, ChainStep, CheckReport, KeyLemma, Monomial, PairRecipe, SeedId,
};
use crate::catalog::{self, CatalogError, IdentitySpec, MDomain, Status, VerificationReport};
use crate::qseries::{pochhammer, PochArgument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ERROR: i32 = 3;

#[derive(Debug, Error)]
pub enum VerifierError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Bailey(#[from] BaileyError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("could not build the worker pool: {0}")]
    Pool(String),
    #[error("could not write the report: {0}")]
    Io(#[from] std::io::Error),
}

impl VerifierError {
    pub fn exit_code(&self) -> i32 {
        match self {
            VerifierError::Usage(_) | VerifierError::Bailey(BaileyError::BadSamplePoint(_)) => EXIT_USAGE,
            _ => EXIT_ERROR,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Human,
}

impl FromStr for Format {
    type Err = VerifierError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "human" => Ok(Format::Human),
            other => Err(VerifierError::Usage(format!("unknown format {other:?} (json, csv or human)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentityFilter {
    All,
    Only(Vec<String>),
}

impl FromStr for IdentityFilter {
    type Err = VerifierError;

    /// `all` or a comma-separated list of ids.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "all" {
            return Ok(IdentityFilter::All);
        }
        let ids: Vec<String> = s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(String::from).collect();
        if ids.is_empty() {
            return Err(VerifierError::Usage("empty identity list".into()));
        }
        Ok(IdentityFilter::Only(ids))
    }
}

/// Parses `lo..hi` (inclusive) or a single value.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u64>, VerifierError> {
    let bad = || VerifierError::Usage(format!("bad range {s:?}: expected lo..hi or a single integer"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (s, s),
    };
    let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

/// Parses a comma-separated list of rationals such as `2/3,5/7`.
pub fn parse_points(s: &str) -> Result<Vec<Rational>, VerifierError> {
    s.split(',')
        .map(|p| crate::arith::parse_rational(p.trim()).map_err(|e| VerifierError::Usage(e.to_string())))
        .collect()
}

/// Worker count from `QBAILEY_JOBS`, else the number of CPUs.
pub fn default_jobs() -> usize {
    std::env::var("QBAILEY_JOBS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&j| j > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub identities: IdentityFilter,
    pub n_range: RangeInclusive<u64>,
    pub m_range: RangeInclusive<u64>,
    /// Sample points for the engine checks.
    pub sample_points: Vec<Rational>,
    pub format: Format,
    pub jobs: usize,
    /// Record per-cell wall time. Off by default so output is reproducible.
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            identities: IdentityFilter::All,
            n_range: 1..=12,
            m_range: 1..=1,
            sample_points: default_points(),
            format: Format::Json,
            jobs: default_jobs(),
            timings: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), VerifierError> {
        if *self.n_range.start() < 1 {
            return Err(VerifierError::Usage("N range must start at 1 or above".into()));
        }
        if *self.m_range.start() < 1 {
            return Err(VerifierError::Usage("m range must start at 1 or above".into()));
        }
        if self.jobs == 0 {
            return Err(VerifierError::Usage("--jobs must be at least 1".into()));
        }
        Ok(())
    }

    /// The selected identities, sorted by id.
    pub fn selected(&self) -> Result<Vec<&'static IdentitySpec>, VerifierError> {
        let mut specs = match &self.identities {
            IdentityFilter::All => catalog::catalog().iter().collect(),
            IdentityFilter::Only(ids) => ids
                .iter()
                .map(|id| catalog::lookup(id).map_err(|e| VerifierError::Usage(e.to_string())))
                .collect::<Result<Vec<_>, _>>()?,
        };
        specs.sort_by_key(|s| s.id);
        specs.dedup_by_key(|s| s.id);
        Ok(specs)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub error: usize,
}

impl Summary {
    pub fn of<'a>(statuses: impl IntoIterator<Item = &'a Status>) -> Self {
        let mut s = Summary::default();
        for st in statuses {
            match st {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::SkippedInapplicable => s.skipped += 1,
                Status::Error => s.error += 1,
            }
        }
        s
    }

    /// 0 when nothing failed; errors take precedence over failures.
    pub fn exit_code(&self) -> i32 {
        if self.error > 0 {
            EXIT_ERROR
        } else if self.fail > 0 {
            EXIT_FAIL
        } else {
            EXIT_OK
        }
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pass {}, fail {}, skipped {}, error {}",
            self.pass, self.fail, self.skipped, self.error
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GridRun {
    pub reports: Vec<VerificationReport>,
    pub summary: Summary,
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, VerifierError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| VerifierError::Pool(e.to_string()))
}

/// Every `(id, N, m)` cell of the run in canonical order. Identities fixed at
/// `m = 1` contribute only `m = 1` cells.
pub fn grid_cells(config: &RunConfig) -> Result<Vec<(&'static IdentitySpec, u64, u64)>, VerifierError> {
    config.validate()?;
    let mut cells = Vec::new();
    for spec in config.selected()? {
        for n in config.n_range.clone() {
            for m in config.m_range.clone() {
                if spec.m_domain == MDomain::One && m != 1 {
                    continue;
                }
                cells.push((spec, n, m));
            }
        }
    }
    Ok(cells)
}

pub fn run_grid(config: &RunConfig) -> Result<GridRun, VerifierError> {
    let cells = grid_cells(config)?;
    let reports: Vec<VerificationReport> = pool(config.jobs)?.install(|| {
        cells
            .par_iter()
            .map(|&(spec, n, m)| {
                let mut r = catalog::verify_identity(spec, n, m);
                if !config.timings {
                    r.elapsed_ms = None;
                }
                r
            })
            .collect()
    });
    let summary = Summary::of(reports.iter().map(|r| &r.status));
    Ok(GridRun { reports, summary })
}

impl GridRun {
    pub fn exit_code(&self) -> i32 {
        self.summary.exit_code()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => render_json(&self.reports, &self.summary),
            Format::Csv => self.render_csv(),
            Format::Human => self.render_human(),
        }
    }

    fn render_csv(&self) -> String {
        let timings = self.reports.iter().any(|r| r.elapsed_ms.is_some());
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["id", "N", "m", "status", "error"];
        if timings {
            header.push("elapsed_ms");
        }
        w.write_record(&header).expect("in-memory write");
        for r in &self.reports {
            let mut row = vec![
                r.id.clone(),
                r.n.to_string(),
                r.m.to_string(),
                r.status.to_string(),
                r.error.clone().unwrap_or_default(),
            ];
            if timings {
                row.push(r.elapsed_ms.map(|t| format!("{t:.3}")).unwrap_or_default());
            }
            w.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
    }

    fn render_human(&self) -> String {
        let width = self.reports.iter().map(|r| r.id.len()).max().unwrap_or(0);
        let mut out = String::new();
        for r in &self.reports {
            let _ = write!(out, "{:<width$}  N={:<3} m={:<2} {}", r.id, r.n, r.m, r.status);
            if let Some(t) = r.elapsed_ms {
                let _ = write!(out, "  ({t:.1} ms)");
            }
            out.push('\n');
            if r.status == Status::Fail {
                for (name, v) in [("A", &r.side_a), ("B", &r.side_b), ("A-B", &r.difference)] {
                    if let Some(v) = v {
                        let _ = writeln!(out, "    {name:<3} = {v}");
                    }
                }
            }
            if let Some(e) = &r.error {
                let _ = writeln!(out, "    error: {e}");
            }
        }
        let _ = writeln!(out, "{}", self.summary);
        out
    }
}

fn render_json<T: Serialize>(items: &[T], summary: &Summary) -> String {
    let mut values: Vec<serde_json::Value> =
        items.iter().map(|r| serde_json::to_value(r).expect("report serializes")).collect();
    values.push(serde_json::to_value(summary).expect("summary serializes"));
    let mut s = serde_json::to_string_pretty(&values).expect("json");
    s.push('\n');
    s
}

/// Bounds for [`run_engine_checks`].
#[derive(Clone, Debug)]
pub struct EngineConfig {
    /// Largest index for Bailey pair checks.
    pub n_max: usize,
    /// Largest index for key-lemma checks.
    pub lemma_n_max: usize,
    pub chain_m_max: usize,
    pub chain_n_max: usize,
    /// Largest root order for the l'Hôpital checks.
    pub lhopital_n_max: u64,
    /// Largest root order for the cyclotomic factorization check.
    pub factor_n_max: u64,
    /// Largest even root order for the derivative check.
    pub derivative_n_max: u64,
    pub points: Vec<Rational>,
    pub seeds: Vec<SeedId>,
    pub jobs: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self {
            n_max: 10,
            lemma_n_max: 6,
            chain_m_max: 3,
            chain_n_max: 6,
            lhopital_n_max: 30,
            factor_n_max: 60,
            derivative_n_max: 20,
            points: default_points(),
            seeds: SeedId::ALL.to_vec(),
            jobs: default_jobs(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineReport {
    pub check: String,
    pub subject: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl EngineReport {
    fn from_check(check: &str, subject: String, r: Result<CheckReport, BaileyError>) -> Self {
        match r {
            Ok(rep) => {
                let failed: Vec<String> = rep
                    .points
                    .iter()
                    .filter_map(|p| p.mismatch_at.map(|n| format!("q = {}: first mismatch at n = {n}", p.q)))
                    .collect();
                Self {
                    check: check.into(),
                    subject,
                    status: if failed.is_empty() { Status::Pass } else { Status::Fail },
                    detail: (!failed.is_empty()).then(|| failed.join("; ")),
                }
            }
            Err(BaileyError::BaseExponent { .. }) => Self {
                check: check.into(),
                subject,
                status: Status::SkippedInapplicable,
                detail: None,
            },
            Err(e) => Self::error(check, subject, e),
        }
    }

    fn from_bool(check: &str, subject: String, ok: bool, detail: impl FnOnce() -> String) -> Self {
        Self {
            check: check.into(),
            subject,
            status: if ok { Status::Pass } else { Status::Fail },
            detail: (!ok).then(detail),
        }
    }

    fn error(check: &str, subject: String, e: impl fmt::Display) -> Self {
        Self {
            check: check.into(),
            subject,
            status: Status::Error,
            detail: Some(e.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EngineRun {
    pub reports: Vec<EngineReport>,
    pub summary: Summary,
}

impl EngineRun {
    pub fn exit_code(&self) -> i32 {
        self.summary.exit_code()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => render_json(&self.reports, &self.summary),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["check", "subject", "status", "detail"]).expect("in-memory write");
                for r in &self.reports {
                    let status = r.status.to_string();
                    let detail = r.detail.clone().unwrap_or_default();
                    w.write_record([r.check.as_str(), &r.subject, &status, &detail])
                        .expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
            }
            Format::Human => {
                let mut out = String::new();
                for r in &self.reports {
                    let _ = write!(out, "{:<14} {:<50} {}", r.check, r.subject, r.status);
                    if let Some(d) = &r.detail {
                        let _ = write!(out, "  ({d})");
                    }
                    out.push('\n');
                }
                let _ = writeln!(out, "{}", self.summary);
                out
            }
        }
    }
}

/// Step kinds exercised on every seed; those needing another base are
/// reported as skipped.
pub fn engine_steps() -> Vec<ChainStep> {
    vec![
        ChainStep::General {
            b: Monomial::new(crate::arith::rat(3, 5), 2),
            c: Monomial::new(crate::arith::rat(-2, 7), 1),
        },
        ChainStep::BcToInfinity,
        ChainStep::BcToZero,
        ChainStep::BaseChangeD1,
        ChainStep::BaseChangeD4,
    ]
}

fn engine_lemmas(seed: SeedId) -> Vec<KeyLemma> {
    if seed.base_exponent() == 2 {
        vec![KeyLemma::Kl2, KeyLemma::Kl3]
    } else {
        vec![
            KeyLemma::Kl1 {
                b: Monomial::new(crate::arith::rat(3, 5), 2),
                c: Monomial::new(crate::arith::rat(-2, 7), 1),
            },
            KeyLemma::B0Cq,
            KeyLemma::B0CMinusQ,
            KeyLemma::BInfCMinusQ,
        ]
    }
}

type Job = Box<dyn Fn() -> EngineReport + Send + Sync>;

fn chain_oracle(seed: SeedId, m: usize, n_max: usize, points: &[Rational]) -> EngineReport {
    let kind = ChainKind::for_seed(seed);
    let subject = format!("{seed} {kind:?} m={m}");
    let run = || -> Result<Option<String>, BaileyError> {
        for q in points {
            let p = sample_point(q)?;
            let composed = composed_chain(seed, kind, m, &p)?;
            for n in 0..=n_max {
                if explicit_chain_beta(seed, kind, m, n, &p)? != composed.beta(n)? {
                    return Ok(Some(format!("beta differs at q = {}, n = {n}", format_rational(q))));
                }
                if let Some(a) = chain_alpha_closed_form(seed, m, n, &p) {
                    if a != composed.alpha(n)? {
                        return Ok(Some(format!("alpha differs at q = {}, n = {n}", format_rational(q))));
                    }
                }
            }
        }
        Ok(None)
    };
    match run() {
        Ok(mismatch) => EngineReport::from_bool("chain-oracle", subject, mismatch.is_none(), || mismatch.unwrap()),
        Err(e) => EngineReport::error("chain-oracle", subject, e),
    }
}

/// `(q)_k q^{-k} + 3/2 (-q)_k`, a fixed family of test polynomials.
pub fn lhopital_family(k: usize) -> LaurentPoly {
    let a = pochhammer(&FormalQ, PochArgument::pos(1, 1), k).shift(-(k as i64));
    let b = pochhammer(&FormalQ, PochArgument::neg(1, 1), k).scale(&crate::arith::rat(3, 2));
    FormalQ.add(&a, &b)
}

fn lhopital_check(n: u64) -> Result<bool, ArithError> {
    let ring = catalog::ring(n).map_err(|e| match e {
        CatalogError::Arith(a) => a,
        other => ArithError::Parse(other.to_string()),
    })?;
    let vanish = LaurentPoly::from_terms([(0, int(1)), (n as i64, int(-1))]);
    for k in 0..=6 {
        let f = lhopital_family(k);
        if lhopital_at_root(&FormalQ.mul(&f, &vanish), &ring)? != reduce(&f, &ring) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Π_{d | N} Φ_d = q^N - 1`.
pub fn cyclotomic_factorization_holds(n: u64) -> Result<bool, ArithError> {
    let mut prod = IntPoly::from_i64(&[1]);
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        prod = prod.mul(&cyclotomic_poly(d)?);
    }
    Ok(prod == IntPoly::x_pow_minus_one(n as usize))
}

/// `d/dq (-q)_{N-1}` at `ζ_N` for even `N`, where `(-q)_{N-1}` itself
/// vanishes. `None` if it does not vanish.
pub fn minus_q_derivative(n: u64) -> Result<Option<crate::arith::CyclotomicNumber>, ArithError> {
    let ring = crate::arith::CyclotomicRing::new(n)?;
    let f = pochhammer(&FormalQ, PochArgument::neg(1, 1), n.saturating_sub(1) as usize);
    Ok(reduce(&f, &ring).is_zero().then(|| reduce(&f.derivative(), &ring)))
}

/// For even `N` the derivative above equals `-N^2/(4ζ_N)`.
pub fn minus_q_derivative_holds(n: u64) -> Result<bool, ArithError> {
    let ring = crate::arith::CyclotomicRing::new(n)?;
    let expected = ring.monomial(-Rational::from_integer((n * n).into()) / int(4), -1);
    Ok(minus_q_derivative(n)? == Some(expected))
}

fn engine_jobs(config: &EngineConfig) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for &seed in &config.seeds {
        let (points, n_max) = (config.points.clone(), config.n_max);
        jobs.push(Box::new(move || {
            let recipe = PairRecipe::seed(seed);
            EngineReport::from_check("pair", recipe.to_string(), verify_pair(&recipe, n_max, &points))
        }));
        for step in engine_steps() {
            let (points, n_max) = (config.points.clone(), config.n_max);
            jobs.push(Box::new(move || {
                let recipe = PairRecipe::seed(seed).then(step.clone());
                EngineReport::from_check("step", recipe.to_string(), verify_pair(&recipe, n_max, &points))
            }));
        }
        for lemma in engine_lemmas(seed) {
            let (points, n_max) = (config.points.clone(), config.lemma_n_max);
            jobs.push(Box::new(move || {
                let recipe = PairRecipe::seed(seed);
                let subject = format!("{lemma} with {seed}");
                EngineReport::from_check("key-lemma", subject, verify_key_lemma(&lemma, &recipe, n_max, &points))
            }));
        }
    }
    for seed in [SeedId::Indefpair1, SeedId::Posdefpair2, SeedId::Indefpair2] {
        if !config.seeds.contains(&seed) {
            continue;
        }
        for m in 1..=config.chain_m_max {
            let (points, n_max) = (config.points.clone(), config.chain_n_max);
            jobs.push(Box::new(move || chain_oracle(seed, m, n_max, &points)));
        }
    }
    for n in 1..=config.lhopital_n_max {
        jobs.push(Box::new(move || match lhopital_check(n) {
            Ok(ok) => EngineReport::from_bool("lhopital", format!("N={n}"), ok, || "limit differs".into()),
            Err(e) => EngineReport::error("lhopital", format!("N={n}"), e),
        }));
    }
    for n in 1..=config.factor_n_max {
        jobs.push(Box::new(move || match cyclotomic_factorization_holds(n) {
            Ok(ok) => EngineReport::from_bool("phi-product", format!("N={n}"), ok, || "product differs".into()),
            Err(e) => EngineReport::error("phi-product", format!("N={n}"), e),
        }));
    }
    for n in (2..=config.derivative_n_max).step_by(2) {
        jobs.push(Box::new(move || match minus_q_derivative_holds(n) {
            Ok(ok) => EngineReport::from_bool("derivative", format!("N={n}"), ok, || "value differs".into()),
            Err(e) => EngineReport::error("derivative", format!("N={n}"), e),
        }));
    }
    jobs
}

/// Runs the Bailey engine and arithmetic property checks. Sample points are
/// validated before any work.
pub fn run_engine_checks(config: &EngineConfig) -> Result<EngineRun, VerifierError> {
    if config.jobs == 0 {
        return Err(VerifierError::Usage("--jobs must be at least 1".into()));
    }
    if config.points.is_empty() {
        return Err(VerifierError::Usage("at least one sample point is needed".into()));
    }
    for q in &config.points {
        sample_point(q)?;
    }
    let jobs = engine_jobs(config);
    let reports: Vec<EngineReport> = pool(config.jobs)?.install(|| jobs.par_iter().map(|j| j()).collect());
    let summary = Summary::of(reports.iter().map(|r| &r.status));
    Ok(EngineRun { reports, summary })
}

/// Checks a single key lemma against a pair built over `RationalPoint`s,
/// surfacing base mismatches as errors rather than skips.
pub fn check_key_lemma(
    lemma: &KeyLemma,
    recipe: &PairRecipe,
    n_max: usize,
    points: &[Rational],
) -> Result<CheckReport, VerifierError> {
    Ok(verify_key_lemma(lemma, recipe, n_max, points)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn config(ids: &str, n: &str, m: &str) -> RunConfig {
        RunConfig {
            identities: ids.parse().unwrap(),
            n_range: parse_range(n).unwrap(),
            m_range: parse_range(m).unwrap(),
            jobs: 2,
            ..RunConfig::default()
        }
    }

    #[test]
    fn ranges_and_filters_parse() {
        assert_eq!(parse_range("3..7").unwrap(), 3..=7);
        assert_eq!(parse_range("4").unwrap(), 4..=4);
        assert_eq!(parse_range("1..=2").unwrap(), 1..=2);
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("x").is_err());
        assert_eq!("all".parse::<IdentityFilter>().unwrap(), IdentityFilter::All);
        assert_eq!(
            "bopr, thm1".parse::<IdentityFilter>().unwrap(),
            IdentityFilter::Only(vec!["bopr".into(), "thm1".into()])
        );
        assert_eq!(parse_points("2/3,3/2").unwrap(), vec![rat(2, 3), rat(3, 2)]);
    }

    #[test]
    fn unknown_identity_is_a_usage_error() {
        let e = run_grid(&config("bopr,nope", "1..3", "1")).unwrap_err();
        assert!(matches!(e, VerifierError::Usage(_)));
        assert_eq!(e.exit_code(), EXIT_USAGE);
        assert!(run_grid(&config("bopr", "0..3", "1")).is_err());
    }

    #[test]
    fn single_skipped_cell() {
        let run = run_grid(&config("cohen-even", "3", "1")).unwrap();
        assert_eq!(run.reports.len(), 1);
        assert_eq!(run.reports[0].status, Status::SkippedInapplicable);
        assert_eq!(run.summary, Summary { pass: 0, fail: 0, skipped: 1, error: 0 });
        assert_eq!(run.exit_code(), EXIT_OK);
    }

    #[test]
    fn grid_is_ordered_and_fixed_m_identities_skip_other_m() {
        let run = run_grid(&config("thm1,bopr", "1..4", "1..2")).unwrap();
        let keys: Vec<_> = run.reports.iter().map(|r| (r.id.clone(), r.n, r.m)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(run.reports.iter().filter(|r| r.id == "bopr").count(), 4);
        assert_eq!(run.reports.iter().filter(|r| r.id == "thm1").count(), 8);
        assert_eq!(run.summary.pass, 12);
    }

    #[test]
    fn output_is_independent_of_worker_count() {
        let mut c = config("all", "1..6", "1..2");
        c.jobs = 1;
        let a = run_grid(&c).unwrap();
        c.jobs = 4;
        let b = run_grid(&c).unwrap();
        for f in [Format::Json, Format::Csv, Format::Human] {
            assert_eq!(a.render(f), b.render(f));
        }
    }

    #[test]
    fn json_has_trailing_summary() {
        let run = run_grid(&config("cohen-main", "4", "1")).unwrap();
        let v: serde_json::Value = serde_json::from_str(&run.render(Format::Json)).unwrap();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), 2);
        assert_eq!(arr[0]["side_A"]["coeffs"], serde_json::json!(["-2/1", "1/1"]));
        assert_eq!(arr[1], serde_json::json!({"pass": 1, "fail": 0, "skipped": 0, "error": 0}));
        assert!(arr[0].get("elapsed_ms").is_none());
    }

    #[test]
    fn csv_has_no_values() {
        let run = run_grid(&config("cohen-main,cohen-odd", "2", "1")).unwrap();
        let csv = run.render(Format::Csv);
        assert_eq!(csv, "id,N,m,status,error\ncohen-main,2,1,pass,\ncohen-odd,2,1,skipped-inapplicable,\n");
    }

    #[test]
    fn timings_only_when_requested() {
        let mut c = config("bopr", "3", "1");
        c.timings = true;
        let run = run_grid(&c).unwrap();
        assert!(run.reports[0].elapsed_ms.is_some());
        assert!(run.render(Format::Csv).starts_with("id,N,m,status,error,elapsed_ms\n"));
    }

    #[test]
    fn exit_codes_distinguish_fail_and_error() {
        let s = |fail, error| Summary { pass: 1, fail, skipped: 0, error };
        assert_eq!(s(0, 0).exit_code(), EXIT_OK);
        assert_eq!(s(2, 0).exit_code(), EXIT_FAIL);
        assert_eq!(s(0, 1).exit_code(), EXIT_ERROR);
        assert_eq!(s(1, 1).exit_code(), EXIT_ERROR);
    }

    #[test]
    fn engine_rejects_unit_circle_points() {
        let c = EngineConfig {
            points: vec![rat(2, 3), int(1)],
            ..EngineConfig::default()
        };
        let e = run_engine_checks(&c).unwrap_err();
        assert!(matches!(e, VerifierError::Bailey(BaileyError::BadSamplePoint(_))));
    }

    #[test]
    fn small_engine_run_passes() {
        let c = EngineConfig {
            n_max: 4,
            lemma_n_max: 3,
            chain_m_max: 2,
            chain_n_max: 3,
            lhopital_n_max: 8,
            factor_n_max: 12,
            derivative_n_max: 8,
            points: vec![rat(2, 3)],
            jobs: 2,
            ..EngineConfig::default()
        };
        let run = run_engine_checks(&c).unwrap();
        assert_eq!(run.summary.fail + run.summary.error, 0, "{}", run.render(Format::Human));
        assert!(run.summary.pass > 40);
        // Base-changing steps do not apply to base-q seeds and vice versa.
        assert!(run.summary.skipped > 0);
    }

    #[test]
    fn base_misuse_is_rejected_with_structure() {
        let e = check_key_lemma(&KeyLemma::Kl2, &PairRecipe::seed(SeedId::Indefpair1), 2, &[rat(2, 3)]).unwrap_err();
        assert!(matches!(e, VerifierError::Bailey(BaileyError::BaseExponent { .. })));
        let e = check_key_lemma(&KeyLemma::B0Cq, &PairRecipe::seed(SeedId::Indefpair4), 2, &[rat(2, 3)]).unwrap_err();
        assert!(matches!(e, VerifierError::Bailey(BaileyError::BaseExponent { expected: 1, found: 2, .. })));
    }

    #[test]
    fn minus_q_derivative_values() {
        // (-q)_1 = 1 + q at q = -1 has slope 1 = -2^2/(4·(-1)).
        let r = crate::arith::CyclotomicRing::new(2).unwrap();
        assert_eq!(minus_q_derivative(2).unwrap(), Some(r.one()));
        // (1+q)(1+q^2)(1+q^3) at q = i has slope (1+i)(2i)(1-i) = 4i.
        let r = crate::arith::CyclotomicRing::new(4).unwrap();
        assert_eq!(minus_q_derivative(4).unwrap(), Some(r.monomial(int(4), 1)));
        // The value +N^2/(4ζ) has the opposite sign.
        for n in (2..=20u64).step_by(2) {
            let r = crate::arith::CyclotomicRing::new(n).unwrap();
            let plus = r.monomial(Rational::from_integer((n * n).into()) / int(4), -1);
            assert_eq!(minus_q_derivative(n).unwrap(), Some(-&plus));
            assert!(minus_q_derivative_holds(n).unwrap());
        }
        assert_eq!(minus_q_derivative(5).unwrap(), None);
    }
}

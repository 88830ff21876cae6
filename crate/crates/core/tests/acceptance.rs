//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRng, TestRunner};
use qbailey::arith::{int, lhopital_at_root, rat, reduce, CyclotomicNumber, LaurentPoly, QRing, Rational, RationalPoint};
use qbailey::bailey::{
    chain_alpha_closed_form, composed_chain, default_points, explicit_chain_beta, verify_key_lemma, verify_pair,
    BaileyError, ChainKind, ChainStep, KeyLemma, Monomial, PairRecipe, SeedId,
};
use qbailey::catalog::{evaluate_side, lookup, reduction_check_m1, ring, Side, Status};
use qbailey::qseries::{pochhammer, q_binomial, PochArgument};
use qbailey::verifier::{
    cyclotomic_factorization_holds, default_jobs, minus_q_derivative_holds, run_grid, IdentityFilter, RunConfig,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn grid(ids: &[&str], n: std::ops::RangeInclusive<u64>, m: std::ops::RangeInclusive<u64>) -> Outcome {
    let config = RunConfig {
        identities: IdentityFilter::Only(ids.iter().map(|s| s.to_string()).collect()),
        n_range: n,
        m_range: m,
        jobs: default_jobs(),
        ..RunConfig::default()
    };
    let run = run_grid(&config).map_err(|e| e.to_string())?;
    let bad: Vec<String> = run
        .reports
        .iter()
        .filter(|r| !matches!(r.status, Status::Pass | Status::SkippedInapplicable))
        .map(|r| format!("{} N={} m={} {}", r.id, r.n, r.m, r.status))
        .collect();
    if bad.is_empty() {
        Ok(format!("{} cells pass, {} skipped by parity", run.summary.pass, run.summary.skipped))
    } else {
        Err(format!("{} bad cells, first: {}", bad.len(), bad[0]))
    }
}

fn combine(parts: Vec<Outcome>) -> Outcome {
    let mut notes = Vec::new();
    for p in parts {
        notes.push(p?);
    }
    Ok(notes.join("; "))
}

fn within(limit: Duration, elapsed: Duration, outcome: Outcome) -> Outcome {
    let detail = outcome?;
    if elapsed > limit {
        Err(format!("{detail}, but took {elapsed:.2?} (limit {limit:?})"))
    } else {
        Ok(format!("{detail}, {elapsed:.2?}"))
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let spec = lookup("cohen-main").map_err(|e| e.to_string())?;
    let r = ring(4).map_err(|e| e.to_string())?;
    let expected = CyclotomicNumber::from_coeffs(&r, vec![int(-2), int(1)]);
    let a = evaluate_side(spec, Side::A, 4, 1).map_err(|e| e.to_string())?;
    let b = evaluate_side(spec, Side::B, 4, 1).map_err(|e| e.to_string())?;
    let ok = if a == expected && b == expected {
        Ok(format!("both sides {a}"))
    } else {
        Err(format!("A = {a}, B = {b}, expected {expected}"))
    };
    within(Duration::from_secs(1), start.elapsed(), ok)
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let ok = combine(vec![
        grid(&["cohen-main", "bopr"], 1..=60, 1..=1),
        grid(&["cohen-even"], 2..=60, 1..=1),
        grid(&["cohen-odd"], 1..=59, 1..=1),
    ]);
    within(Duration::from_secs(120), start.elapsed(), ok)
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let ok = combine(vec![
        grid(&["thm1", "thm2"], 1..=24, 1..=4),
        grid(&["thm3"], 1..=16, 1..=4),
        grid(&["thm4"], 1..=15, 1..=4),
    ]);
    within(Duration::from_secs(600), start.elapsed(), ok)
}

fn criterion_4() -> Outcome {
    grid(
        &[
            "prop-bopr-a",
            "prop-bopr-b",
            "prop-cohenex1-a",
            "prop-cohenex1-b",
            "prop-cohen-a",
            "prop-cohen-b",
            "prop-cohenex2",
        ],
        1..=24,
        1..=1,
    )
}

fn criterion_5() -> Outcome {
    combine(vec![
        grid(&["halfway-thm1", "halfway-thm2"], 1..=24, 1..=4),
        grid(&["halfway-thm3-a", "halfway-thm3-b"], 1..=16, 1..=4),
        grid(&["halfway-thm4"], 1..=15, 1..=4),
    ])
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    for n in 1..=24u64 {
        for thm in ["thm1", "thm2", "thm3", "thm4"] {
            if !lookup(thm).map_err(|e| e.to_string())?.applicability.admits(n) {
                continue;
            }
            let r = reduction_check_m1(thm, n).map_err(|e| e.to_string())?;
            if !r.passed() {
                return Err(format!("{thm} vs {} at N = {n}", r.classic));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} reductions"))
}

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

fn criterion_7() -> Outcome {
    let points = default_points();
    let steps = [
        ChainStep::General {
            b: Monomial::new(rat(3, 5), 2),
            c: Monomial::new(rat(-2, 7), 1),
        },
        ChainStep::BcToInfinity,
        ChainStep::BcToZero,
        ChainStep::BaseChangeD1,
        ChainStep::BaseChangeD4,
    ];
    let (mut pairs, mut stepped, mut lemmas) = (0, 0, 0);
    for seed in SeedId::ALL {
        let report = verify_pair(&PairRecipe::seed(seed), 10, &points).map_err(|e| e.to_string())?;
        if !report.passed() {
            return Err(format!("seed {seed}: {report:?}"));
        }
        pairs += 1;
        for step in &steps {
            let recipe = PairRecipe::seed(seed).then(step.clone());
            match verify_pair(&recipe, 10, &points) {
                Ok(r) if r.passed() => stepped += 1,
                Ok(r) => return Err(format!("{recipe}: {r:?}")),
                Err(BaileyError::BaseExponent { .. }) => {}
                Err(e) => return Err(format!("{recipe}: {e}")),
            }
        }
        for lemma in lemmas_for(seed) {
            let r = verify_key_lemma(&lemma, &PairRecipe::seed(seed), 6, &points).map_err(|e| e.to_string())?;
            if !r.passed() {
                return Err(format!("{lemma} with {seed}: {r:?}"));
            }
            lemmas += 1;
        }
    }
    Ok(format!("{pairs} seeds, {stepped} seed/step outputs, {lemmas} seed/lemma pairs at 3 points"))
}

fn criterion_8() -> Outcome {
    let mut alphas = 0;
    for q in default_points() {
        let p = RationalPoint::new(q).map_err(|e| e.to_string())?;
        for seed in [SeedId::Indefpair1, SeedId::Posdefpair2, SeedId::Indefpair2] {
            let kind = ChainKind::for_seed(seed);
            for m in 1..=3 {
                let composed = composed_chain(seed, kind, m, &p).map_err(|e| e.to_string())?;
                for n in 0..=6 {
                    let explicit = explicit_chain_beta(seed, kind, m, n, &p).map_err(|e| e.to_string())?;
                    if explicit != composed.beta(n).map_err(|e| e.to_string())? {
                        return Err(format!("beta of {seed} m = {m} n = {n} at q = {:?}", p.q()));
                    }
                    if let Some(a) = chain_alpha_closed_form(seed, m, n, &p) {
                        if a != composed.alpha(n).map_err(|e| e.to_string())? {
                            return Err(format!("alpha of {seed} m = {m} n = {n}"));
                        }
                        alphas += 1;
                    }
                }
            }
        }
    }
    Ok(format!("3 seeds, m <= 3, n <= 6; {alphas} closed-form alpha values"))
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-8i64..=16, (-30i64..=30, 1i64..=9).prop_map(|(a, b)| rat(a, b))), 0..7)
        .prop_map(LaurentPoly::from_terms)
}

fn run_property<S: Strategy>(cases: u32, s: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Outcome {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    let rng = TestRng::deterministic_rng(config.rng_algorithm);
    let mut runner = TestRunner::new_with_rng(config, rng);
    runner.run(&s, test).map(|_| format!("{cases} cases")).map_err(|e| e.to_string())
}

fn criterion_9() -> Outcome {
    for n in 1..=60 {
        if !cyclotomic_factorization_holds(n).map_err(|e| e.to_string())? {
            return Err(format!("Phi product differs at N = {n}"));
        }
    }
    let hom = run_property(200, (1u64..=30, laurent(), laurent()), |(n, a, b)| {
        let r = ring(n).unwrap();
        prop_assert_eq!(reduce(&(&a * &b), &r), &reduce(&a, &r) * &reduce(&b, &r));
        prop_assert_eq!(reduce(&(&a + &b), &r), &reduce(&a, &r) + &reduce(&b, &r));
        Ok(())
    })?;
    let lh = run_property(200, (1u64..=30, laurent()), |(n, f)| {
        let r = ring(n).unwrap();
        let vanish = LaurentPoly::from_terms([(0, int(1)), (n as i64, int(-1))]);
        prop_assert_eq!(lhopital_at_root(&(&f * &vanish), &r).unwrap(), reduce(&f, &r));
        Ok(())
    })?;
    for n in (2..=20).step_by(2) {
        if !minus_q_derivative_holds(n).map_err(|e| e.to_string())? {
            return Err(format!("derivative of (-q)_{{N-1}} at N = {n}"));
        }
    }
    Ok(format!(
        "Phi product N <= 60; homomorphism {hom}; l'Hopital {lh}; \
         d/dq (-q)_{{N-1}} = -N^2/(4z) for even N <= 20 (the printed +N^2/(4z) has the wrong sign)"
    ))
}

fn sample_q() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=12)
        .prop_map(|(n, d)| rat(n, d))
        .prop_filter("off the unit circle", |q| *q != rat(0, 1) && *q != rat(1, 1) && *q != rat(-1, 1))
}

fn criterion_10() -> Outcome {
    for order in 1..=20u64 {
        let r = ring(order).map_err(|e| e.to_string())?;
        for n in 0..order as usize {
            let ni = n as i64;
            let lhs = pochhammer(&r, PochArgument::pos(-1, -1), n);
            let rhs = r.signed(&r.mul_q_pow(&pochhammer(&r, PochArgument::pos(1, 1), n), -ni * (ni + 1) / 2), ni);
            if lhs != rhs {
                return Err(format!("inverse q-factorial at N = {order}, n = {n}"));
            }
        }
    }
    let shift = run_property(
        200,
        (sample_q(), (-9i64..=9, 1i64..=5, -3i64..=3), 0usize..=10, 0usize..=10),
        |(q, (c, d, e), n, k)| {
            prop_assume!(c != 0 && k <= n);
            let f = RationalPoint::new(q).unwrap();
            let x = Monomial::new(rat(c, d), e);
            let (ni, ki) = (n as i64, k as i64);
            let lhs = f.mul(&x.poch(&f, 1, n - k), &Monomial::q_pow(1 - ni).div(&x).poch(&f, 1, k));
            let factor = Monomial::q_pow(1).neg().div(&x).pow(ki).mul(&Monomial::q_pow(ki * (ki - 1) / 2 - ni * ki));
            prop_assert_eq!(lhs, f.mul(&x.poch(&f, 1, n), &factor.eval(&f)));
            Ok(())
        },
    )?;
    let inversion = run_property(200, (sample_q(), 0i64..=10, 0i64..=10), |(q, n, k)| {
        let f = RationalPoint::new(q.clone()).unwrap();
        let g = RationalPoint::new(q.recip()).unwrap();
        prop_assert_eq!(q_binomial(&g, n, k, 1), f.mul_q_pow(&q_binomial(&f, n, k, 1), k * k - n * k));
        Ok(())
    })?;
    for order in 1..=30u64 {
        let r = ring(order).map_err(|e| e.to_string())?;
        let ni = order as i64;
        for k in 0..order as usize {
            let low = pochhammer(&r, PochArgument::pos(1 - ni, 1), k);
            let high = pochhammer(&r, PochArgument::pos(1 + ni, 1), k);
            let plain = pochhammer(&r, PochArgument::pos(1, 1), k);
            if plain.is_zero() || low != high || low != plain {
                return Err(format!("root-of-unity quotient at N = {order}, k = {k}"));
            }
        }
    }
    Ok(format!(
        "inverse q-factorial N <= 20; Pochhammer reversal {shift}; q-binomial inversion {inversion}; \
         quotients N <= 30"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("worked value cohen-main at N=4", criterion_1),
        ("classical identities grid", criterion_2),
        ("theorems grid", criterion_3),
        ("propositions grid", criterion_4),
        ("halfway identities", criterion_5),
        ("m=1 reductions", criterion_6),
        ("Bailey engine properties", criterion_7),
        ("chain oracle", criterion_8),
        ("arithmetic substrate", criterion_9),
        ("relation properties", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2}. {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2}. {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

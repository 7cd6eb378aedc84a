//! Seeded randomized suites for the algebraic laws the engine relies on.
//!
//! Every case draws from its own ChaCha stream, indexed by the case number,
//! so a report depends only on the options and never on the strategy.

use std::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::diffpoly::{is_solution, Verdict};
use crate::error::Result;
use crate::exec::{self, Strategy};
use crate::forest::{eval_forest, normalize, Assignment, ForestExpr, Label, Node, Tree};
use crate::semiring::{int, rat, Rational, SemiringKind, SemiringValue};
use crate::seminorm::{
    check_enhancement_commutes, check_seminorm_axioms, enhance, eval_rat_poly, solve_linear_ode, trop_equation,
    value, EnhancedSeminorm, RatDiffPoly, RatSeries,
};
use crate::series::{
    project, separating_derivative_order, trop_vanishes_series, NatNorm, PairDescriptor, SeriesDifferential,
    TruncSeries,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub cases: usize,
    pub seed: u64,
    pub trunc: u32,
    pub strategy: Strategy,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { cases: 500, seed: 0x7d1f_2024, trunc: 12, strategy: Strategy::Parallel }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub first_failure: Option<String>,
    pub note: Option<String>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} cases, {} passed, {} failed, {} skipped",
            self.name, self.cases, self.passed, self.failed, self.skipped
        )?;
        if let Some(n) = &self.note {
            write!(f, " ({n})")?;
        }
        if let Some(msg) = &self.first_failure {
            write!(f, "; first failure: {msg}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Outcome {
    Pass,
    Fail(String),
    Skip,
}

fn case_rng(seed: u64, case: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case as u64);
    rng
}

fn run_cases<F>(name: impl Into<String>, opts: &SuiteOptions, case: F) -> SuiteReport
where
    F: Fn(&mut ChaCha8Rng) -> Outcome + Sync + Send,
{
    let outcomes = exec::map_range(opts.strategy, opts.cases, |i| case(&mut case_rng(opts.seed, i)));
    let mut report = SuiteReport {
        name: name.into(),
        cases: opts.cases,
        passed: 0,
        failed: 0,
        skipped: 0,
        first_failure: None,
        note: None,
    };
    for (i, o) in outcomes.into_iter().enumerate() {
        match o {
            Outcome::Pass => report.passed += 1,
            Outcome::Skip => report.skipped += 1,
            Outcome::Fail(msg) => {
                report.failed += 1;
                if report.first_failure.is_none() {
                    report.first_failure = Some(format!("case {i}: {msg}"));
                }
            }
        }
    }
    report
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn outcome(r: std::result::Result<(), String>) -> Outcome {
    match r {
        Ok(()) => Outcome::Pass,
        Err(msg) => Outcome::Fail(msg),
    }
}

/// Same kind and equal coefficients on every degree known in both.
pub fn agree_within_truncation(a: &TruncSeries, b: &TruncSeries) -> bool {
    if a.kind() != b.kind() {
        return false;
    }
    let top = match (a.trunc(), b.trunc()) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    };
    let within = |d: &&u32| top.is_none_or(|t| **d <= t);
    let da: Vec<_> = a.coeffs().iter().filter(|(d, _)| within(d)).collect();
    let db: Vec<_> = b.coeffs().iter().filter(|(d, _)| within(d)).collect();
    da == db
}

fn small_rational(rng: &mut impl Rng, signed: bool) -> Rational {
    let num: i64 = rng.random_range(1..=12);
    let den: i64 = *[1, 1, 2, 3, 4, 8, 9].get(rng.random_range(0..7)).expect("in range");
    let q = rat(num, den);
    if signed && rng.random_bool(0.5) {
        -q
    } else {
        q
    }
}

/// A random value of `kind`; zero with probability about 1/10.
pub fn random_value(rng: &mut impl Rng, kind: SemiringKind) -> SemiringValue {
    if rng.random_bool(0.1) {
        return SemiringValue::zero(kind);
    }
    match kind {
        SemiringKind::Bool => SemiringValue::boolean(true),
        SemiringKind::TropExp => SemiringValue::trop(rat(rng.random_range(-8..=8), rng.random_range(1..=3))),
        SemiringKind::PosRat => SemiringValue::pos(small_rational(rng, false)).expect("positive"),
        SemiringKind::Rank2 => {
            let order = rat(rng.random_range(-4..=4), rng.random_range(1..=2));
            SemiringValue::rank2(order, small_rational(rng, false)).expect("positive")
        }
    }
}

/// A random series of `kind` known through `trunc`, each degree present
/// with probability `density`.
pub fn random_series(rng: &mut impl Rng, kind: SemiringKind, trunc: u32, density: f64) -> TruncSeries {
    let mut coeffs: Vec<(u32, SemiringValue)> = Vec::new();
    for d in 0..=trunc {
        if !rng.random_bool(density) {
            continue;
        }
        let v = match kind {
            SemiringKind::Bool => SemiringValue::boolean(true),
            SemiringKind::PosRat => SemiringValue::pos(small_rational(rng, false)).expect("positive"),
            other => loop {
                let v = random_value(rng, other);
                if !v.is_zero() {
                    break v;
                }
            },
        };
        coeffs.push((d, v));
    }
    TruncSeries::from_coeffs(kind, coeffs, Some(trunc)).expect("same kind")
}

/// A random ℚ-series known through `trunc`; coefficients include multiples
/// of small primes so that p-adic norms vary.
pub fn random_rat_series(rng: &mut impl Rng, trunc: u32, density: f64) -> RatSeries {
    let mut coeffs: Vec<(u32, Rational)> = Vec::new();
    for d in 0..=trunc {
        if rng.random_bool(density) {
            let scale = int(*[1, 2, 3, 4, 6, 9, 12].get(rng.random_range(0..7)).expect("in range"));
            coeffs.push((d, small_rational(rng, true) * scale));
        }
    }
    RatSeries::from_coeffs(coeffs, Some(trunc))
}

/// Semiring laws on random triples of `kind`.
pub fn law_suite(kind: SemiringKind, opts: &SuiteOptions) -> SuiteReport {
    run_cases(format!("laws[{kind}]"), opts, |rng| {
        let (a, b, c) = (random_value(rng, kind), random_value(rng, kind), random_value(rng, kind));
        outcome(laws_hold(&a, &b, &c))
    })
}

fn laws_hold(a: &SemiringValue, b: &SemiringValue, c: &SemiringValue) -> std::result::Result<(), String> {
    let kind = a.kind();
    let (zero, one) = (SemiringValue::zero(kind), SemiringValue::one(kind));
    let e = |r: crate::Result<SemiringValue>| r.map_err(|e| e.to_string());
    let show = || format!("a = {a}, b = {b}, c = {c}");
    check(e(a.add(a))? == *a, || format!("a ⊕ a ≠ a for {}", show()))?;
    check(e(a.add(&zero))? == *a, || format!("a ⊕ 0 ≠ a for {}", show()))?;
    check(e(a.mul(&one))? == *a, || format!("a ⊗ 1 ≠ a for {}", show()))?;
    check(e(a.mul(&zero))?.is_zero(), || format!("a ⊗ 0 ≠ 0 for {}", show()))?;
    check(e(a.add(b))? == e(b.add(a))?, || format!("⊕ not commutative for {}", show()))?;
    check(e(a.mul(b))? == e(b.mul(a))?, || format!("⊗ not commutative for {}", show()))?;
    check(e(e(a.add(b))?.add(c))? == e(a.add(&e(b.add(c))?))?, || format!("⊕ not associative for {}", show()))?;
    check(e(e(a.mul(b))?.mul(c))? == e(a.mul(&e(b.mul(c))?))?, || format!("⊗ not associative for {}", show()))?;
    let lhs = e(a.mul(&e(b.add(c))?))?;
    let rhs = e(e(a.mul(b))?.add(&e(a.mul(c))?))?;
    check(lhs == rhs, || format!("⊗ does not distribute over ⊕ for {}", show()))?;
    let leq = |x: &SemiringValue, y: &SemiringValue| x.leq(y).map_err(|e| e.to_string());
    check(leq(&zero, a)?, || format!("0 ≤ a fails for {}", show()))?;
    check(leq(a, a)?, || format!("≤ not reflexive for {}", show()))?;
    check(!(leq(a, b)? && leq(b, a)?) || a == b, || format!("≤ not antisymmetric for {}", show()))?;
    check(!(leq(a, b)? && leq(b, c)?) || leq(a, c)?, || format!("≤ not transitive for {}", show()))?;
    if kind == SemiringKind::Rank2 {
        check(leq(a, b)? || leq(b, a)?, || format!("≤ not total on 𝕋₂ for {}", show()))?;
    }
    Ok(())
}

fn differential_name(d: &SeriesDifferential) -> String {
    match d {
        SeriesDifferential::StrictShift => "strict-shift".into(),
        SeriesDifferential::Weighted(n) => format!("d_v {n}"),
    }
}

fn coeff_kind_for(d: &SeriesDifferential) -> SemiringKind {
    match d {
        SeriesDifferential::StrictShift => SemiringKind::Bool,
        SeriesDifferential::Weighted(_) => SemiringKind::PosRat,
    }
}

/// Bend relations of d(ab) ⊕ a·db ⊕ b·da on random series pairs.
pub fn leibniz_suite(d: SeriesDifferential, opts: &SuiteOptions) -> SuiteReport {
    let kind = coeff_kind_for(&d);
    run_cases(format!("leibniz[{}]", differential_name(&d)), opts, move |rng| {
        let a = random_series(rng, kind, opts.trunc, 0.5);
        let b = random_series(rng, kind, opts.trunc, 0.5);
        let r = (|| -> crate::Result<Vec<TruncSeries>> {
            Ok(vec![a.mul(&b)?.differentiate(&d)?, a.mul(&b.differentiate(&d)?)?, b.mul(&a.differentiate(&d)?)?])
        })();
        match r.and_then(|terms| trop_vanishes_series(&terms)) {
            Ok(true) => Outcome::Pass,
            Ok(false) => Outcome::Fail(format!("a = {a}, b = {b}")),
            Err(e) => Outcome::Fail(e.to_string()),
        }
    })
}

/// Bend relations of d(abc) ⊕ (da)bc ⊕ a(db)c ⊕ ab(dc).
pub fn leibniz_triple_suite(d: SeriesDifferential, opts: &SuiteOptions) -> SuiteReport {
    let kind = coeff_kind_for(&d);
    run_cases(format!("leibniz3[{}]", differential_name(&d)), opts, move |rng| {
        let a = random_series(rng, kind, opts.trunc, 0.4);
        let b = random_series(rng, kind, opts.trunc, 0.4);
        let c = random_series(rng, kind, opts.trunc, 0.4);
        let r = (|| -> crate::Result<Vec<TruncSeries>> {
            let (da, db, dc) = (a.differentiate(&d)?, b.differentiate(&d)?, c.differentiate(&d)?);
            Ok(vec![
                a.mul(&b)?.mul(&c)?.differentiate(&d)?,
                da.mul(&b)?.mul(&c)?,
                a.mul(&db)?.mul(&c)?,
                a.mul(&b)?.mul(&dc)?,
            ])
        })();
        match r.and_then(|terms| trop_vanishes_series(&terms)) {
            Ok(true) => Outcome::Pass,
            Ok(false) => Outcome::Fail(format!("a = {a}, b = {b}, c = {c}")),
            Err(e) => Outcome::Fail(e.to_string()),
        }
    })
}

/// π(a ⊕ b) = π(a) ⊕ π(b) and π(ab) = π(a)π(b), skipping caveated cases.
pub fn homomorphism_suite(pair: &PairDescriptor, opts: &SuiteOptions) -> SuiteReport {
    let kind = pair.coeff_kind();
    let name = match pair.target() {
        SemiringKind::Rank2 => "homomorphism[T[[t]] -> T2]",
        _ => "homomorphism[B[[t]] -> T]",
    };
    let mut report = run_cases(name, opts, |rng| {
        let density = [0.05, 0.2, 0.5][rng.random_range(0..3)];
        let a = random_series(rng, kind, opts.trunc, density);
        let b = random_series(rng, kind, opts.trunc, density);
        let r = (|| -> crate::Result<Outcome> {
            let (pa, pb) = (project(&a, pair)?, project(&b, pair)?);
            let (ps, pp) = (project(&a.add(&b)?, pair)?, project(&a.mul(&b)?, pair)?);
            if [&pa, &pb, &ps, &pp].iter().any(|p| p.caveat.is_some()) {
                return Ok(Outcome::Skip);
            }
            if ps.value != pa.value.add(&pb.value)? {
                return Ok(Outcome::Fail(format!("π(a ⊕ b) ≠ π(a) ⊕ π(b) for a = {a}, b = {b}")));
            }
            if pp.value != pa.value.mul(&pb.value)? {
                return Ok(Outcome::Fail(format!("π(ab) ≠ π(a)π(b) for a = {a}, b = {b}")));
            }
            Ok(Outcome::Pass)
        })();
        r.unwrap_or_else(|e| Outcome::Fail(e.to_string()))
    });
    report.note = Some(format!("caveat rate {}/{}", report.skipped, report.cases));
    report
}

/// ṽ(d/dt a) = d(ṽ(a)) and π(ṽ(a)) = v(a) on random ℚ-series.
pub fn enhancement_suite(e: EnhancedSeminorm, opts: &SuiteOptions) -> SuiteReport {
    run_cases(format!("enhancement[{e}]"), opts, move |rng| {
        let a = random_rat_series(rng, opts.trunc, 0.5);
        let r = (|| -> crate::Result<Outcome> {
            let report = check_enhancement_commutes(&e, std::slice::from_ref(&a))?;
            if let Some(msg) = report.first_failure {
                return Ok(Outcome::Fail(msg));
            }
            if project(&enhance(&a, &e)?, &e.pair())? != value(&a, &e)? {
                return Ok(Outcome::Fail(format!("π ∘ ṽ ≠ v at {a}")));
            }
            Ok(Outcome::Pass)
        })();
        r.unwrap_or_else(|e| Outcome::Fail(e.to_string()))
    })
}

/// Seminorm axioms on random pairs, plus constants.
pub fn axiom_suite(e: EnhancedSeminorm, opts: &SuiteOptions) -> SuiteReport {
    run_cases(format!("axioms[{e}]"), opts, move |rng| {
        let mut samples = vec![random_rat_series(rng, opts.trunc, 0.5), random_rat_series(rng, opts.trunc, 0.5)];
        samples.push(RatSeries::constant(small_rational(rng, true), None));
        match check_seminorm_axioms(&e, &samples) {
            Ok(r) => match r.first_failure {
                None => Outcome::Pass,
                Some(msg) => Outcome::Fail(msg),
            },
            Err(err) => Outcome::Fail(err.to_string()),
        }
    })
}

fn random_node(rng: &mut impl Rng, depth: usize, budget: &mut usize, trunc: u32) -> Node {
    if depth == 0 || *budget <= 1 || rng.random_bool(0.55) {
        *budget = budget.saturating_sub(1);
        let label = match rng.random_range(0..10) {
            0 => Label::coeff(TruncSeries::zero(SemiringKind::PosRat, None)),
            1 => Label::coeff(TruncSeries::one(SemiringKind::PosRat, None)),
            2..=4 => Label::coeff(random_series(rng, SemiringKind::PosRat, trunc, 0.4)),
            _ => Label::Var(rng.random_range(0..2)),
        };
        return Node::Leaf(label);
    }
    let n = rng.random_range(1..=2);
    let mut children = vec![random_node(rng, depth - 1, budget, trunc)];
    if n == 2 && *budget > 0 {
        children.push(random_node(rng, depth - 1, budget, trunc));
    }
    Node::Inner(children)
}

/// A random forest of depth ≤ 4 with at most 6 leaves.
pub fn random_forest(rng: &mut impl Rng, trunc: u32) -> ForestExpr {
    let mut budget = 6usize;
    let trees = rng.random_range(1..=3);
    let mut out = Vec::new();
    for _ in 0..trees {
        if budget == 0 {
            break;
        }
        let width = rng.random_range(1..=3);
        let mut children = Vec::new();
        for _ in 0..width {
            if budget == 0 {
                break;
            }
            children.push(random_node(rng, 3, &mut budget, trunc));
        }
        out.push(Tree { children });
    }
    ForestExpr { trees: out }
}

/// eval ∘ normalize = eval, eval respects sum, product and d, and the
/// Leibniz bend holds for evaluated forests.
pub fn forest_suite(opts: &SuiteOptions) -> SuiteReport {
    let norm = NatNorm::PAdic(2);
    run_cases("forest[T[[t]], d_v 2-adic]", opts, move |rng| {
        let (a, b) = (random_forest(rng, opts.trunc), random_forest(rng, opts.trunc));
        let asg = Assignment {
            kind: SemiringKind::PosRat,
            differential: SeriesDifferential::Weighted(norm),
            values: (0..2).map(|_| random_series(rng, SemiringKind::PosRat, opts.trunc, 0.5)).collect(),
        };
        let d = asg.differential;
        let r = (|| -> crate::Result<std::result::Result<(), String>> {
            let (ea, eb) = (eval_forest(&a, &asg)?, eval_forest(&b, &asg)?);
            let same = |x: &TruncSeries, y: &TruncSeries, what: &str| {
                check(agree_within_truncation(x, y), || format!("{what}: a = {a}, b = {b}: {x} vs {y}"))
            };
            let checks = [
                same(&eval_forest(&normalize(&a), &asg)?, &ea, "normalize"),
                same(&eval_forest(&a.sum(&b), &asg)?, &ea.add(&eb)?, "sum"),
                same(&eval_forest(&a.mul(&b), &asg)?, &ea.mul(&eb)?, "product"),
            ];
            for c in checks {
                if c.is_err() {
                    return Ok(c);
                }
            }
            // d needs one more known degree than the forest keeps
            let (Ok(dea), Ok(deb)) = (ea.differentiate(&d), eb.differentiate(&d)) else {
                return Ok(Ok(()));
            };
            let c = same(&eval_forest(&a.d(), &asg)?, &dea, "d");
            if c.is_err() {
                return Ok(c);
            }
            let terms = [eval_forest(&a.mul(&b).d(), &asg)?, ea.mul(&deb)?, eb.mul(&dea)?];
            Ok(check(trop_vanishes_series(&terms)?, || format!("Leibniz bend fails: a = {a}, b = {b}")))
        })();
        match r {
            Ok(Ok(())) => Outcome::Pass,
            Ok(Err(msg)) => Outcome::Fail(msg),
            Err(crate::Error::TruncationExhausted(_)) => Outcome::Skip,
            Err(e) => Outcome::Fail(e.to_string()),
        }
    })
}

/// Distinct boolean series are separated by some π(dⁿ ·).
pub fn reducedness_suite(opts: &SuiteOptions) -> SuiteReport {
    let pair = PairDescriptor::grigoriev();
    run_cases("reduced[B[[t]] -> T]", opts, move |rng| {
        let a = random_series(rng, SemiringKind::Bool, opts.trunc, 0.5);
        let mut b = random_series(rng, SemiringKind::Bool, opts.trunc, 0.5);
        if a == b {
            // flip one degree so the pair is distinct
            let d = rng.random_range(0..=opts.trunc);
            let mut degrees = b.support_degrees();
            match degrees.iter().position(|x| *x == d) {
                Some(i) => {
                    degrees.remove(i);
                }
                None => degrees.push(d),
            }
            b = TruncSeries::support(&degrees, Some(opts.trunc));
        }
        let r = (|| -> crate::Result<Outcome> {
            let Some(n) = separating_derivative_order(&a, &b, &pair)? else {
                return Ok(Outcome::Fail(format!("no separating order for {a} and {b}")));
            };
            let d = pair.differential();
            let (pa, pb) = (project(&a.differentiate_n(d, n)?, &pair)?, project(&b.differentiate_n(d, n)?, &pair)?);
            Ok(if pa.certainly_differs(&pb) {
                Outcome::Pass
            } else {
                Outcome::Fail(format!("order {n} does not separate {a} and {b}"))
            })
        })();
        r.unwrap_or_else(|e| Outcome::Fail(e.to_string()))
    })
}

/// A classical linear ODE with named initial data.
#[derive(Debug, Clone)]
pub struct ClassicalCase {
    pub name: &'static str,
    pub coeffs: Vec<RatSeries>,
    pub init: Vec<Rational>,
}

/// exp, sin, cos, cosh and sinh as solutions of x′ = x, x″ = −x, x″ = x.
pub fn classical_cases() -> Vec<ClassicalCase> {
    let c = |q: i64| RatSeries::constant(int(q), None);
    let zero = RatSeries::zero(None);
    vec![
        ClassicalCase { name: "x' - x, exp", coeffs: vec![c(-1), c(1)], init: vec![int(1)] },
        ClassicalCase { name: "x'' + x, sin", coeffs: vec![c(1), zero.clone(), c(1)], init: vec![int(0), int(1)] },
        ClassicalCase { name: "x'' + x, cos", coeffs: vec![c(1), zero.clone(), c(1)], init: vec![int(1), int(0)] },
        ClassicalCase { name: "x'' - x, cosh", coeffs: vec![c(-1), zero.clone(), c(1)], init: vec![int(1), int(0)] },
        ClassicalCase { name: "x'' - x, sinh", coeffs: vec![c(-1), zero, c(1)], init: vec![int(0), int(1)] },
    ]
}

/// Outcome of tropicalizing one classical solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoundnessCase {
    pub equation: String,
    pub seminorm: EnhancedSeminorm,
    pub verdict: Verdict,
    pub caveat: bool,
}

/// Solves each classical case to `deg`, tropicalizes equation and solution
/// under `e`, and records the membership verdict.
pub fn tropicalization_cases(e: EnhancedSeminorm, deg: u32) -> Result<Vec<SoundnessCase>> {
    let pair = e.pair();
    classical_cases()
        .into_iter()
        .map(|case| {
            let x = solve_linear_ode(&case.coeffs, &case.init, deg)?;
            let f = RatDiffPoly::linear_ode(&case.coeffs);
            let residual = eval_rat_poly(&f, std::slice::from_ref(&x))?;
            if !residual.is_empty() {
                return Err(crate::Error::InvalidValue(format!("{}: residual {residual}", case.name)));
            }
            let trop = trop_equation(&f, &e)?;
            let point = [enhance(&x, &e)?];
            let eval = crate::diffpoly::eval_poly(&trop.poly, &point, &pair);
            let caveat = !trop.caveats.is_empty() || eval.as_ref().map_or(true, |ev| ev.has_caveat());
            Ok(SoundnessCase {
                equation: case.name.to_string(),
                seminorm: e,
                verdict: is_solution(&trop.poly, &point, &pair),
                caveat,
            })
        })
        .collect()
}

/// Tropicalized classical solutions are tropical solutions: yes without a
/// caveat, and never no.
pub fn soundness_suite(primes: &[u64], deg: u32) -> Result<SuiteReport> {
    let mut seminorms = vec![EnhancedSeminorm::Grigoriev];
    for p in primes {
        seminorms.push(EnhancedSeminorm::padic_rank2(*p)?);
    }
    let mut report = SuiteReport {
        name: "soundness[tropicalization]".into(),
        cases: 0,
        passed: 0,
        failed: 0,
        skipped: 0,
        first_failure: None,
        note: None,
    };
    let mut caveats = 0;
    for e in seminorms {
        for c in tropicalization_cases(e, deg)? {
            report.cases += 1;
            caveats += usize::from(c.caveat);
            let ok = matches!((c.verdict, c.caveat), (Verdict::Yes, _) | (Verdict::Unknown, true));
            if ok {
                report.passed += 1;
            } else {
                report.failed += 1;
                if report.first_failure.is_none() {
                    report.first_failure = Some(format!("{} under {e}: {}", c.equation, c.verdict));
                }
            }
        }
    }
    report.note = Some(format!("{caveats} with truncation caveats"));
    Ok(report)
}

/// Names accepted by [`run_named`].
pub const SUITES: [&str; 9] =
    ["laws", "leibniz", "homomorphism", "enhancement", "forest", "reduced", "axioms", "soundness", "all"];

/// Which pair the suites should exercise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairChoice {
    Boolean,
    Rank2,
    Both,
}

/// Runs a suite by name. `prime` selects the norm for the p-adic variants.
pub fn run_named(name: &str, opts: &SuiteOptions, pair: PairChoice, prime: u64) -> Result<Vec<SuiteReport>> {
    let boolean = pair != PairChoice::Rank2;
    let rank2 = pair != PairChoice::Boolean;
    let padic = NatNorm::padic(prime)?;
    let enhanced = EnhancedSeminorm::padic_rank2(prime)?;
    let mut out = Vec::new();
    let all = name == "all";
    if all || name == "laws" {
        for kind in SemiringKind::ALL {
            out.push(law_suite(kind, &SuiteOptions { cases: opts.cases.max(1000), ..*opts }));
        }
    }
    if all || name == "leibniz" {
        if boolean {
            out.push(leibniz_suite(SeriesDifferential::StrictShift, opts));
        }
        if rank2 {
            for norm in [padic, NatNorm::degenerate(prime)?] {
                out.push(leibniz_suite(SeriesDifferential::Weighted(norm), opts));
                out.push(leibniz_triple_suite(SeriesDifferential::Weighted(norm), opts));
            }
        }
    }
    if all || name == "homomorphism" {
        if boolean {
            out.push(homomorphism_suite(&PairDescriptor::grigoriev(), opts));
        }
        if rank2 {
            out.push(homomorphism_suite(&PairDescriptor::rank2(padic), opts));
        }
    }
    if all || name == "enhancement" {
        if boolean {
            out.push(enhancement_suite(EnhancedSeminorm::Grigoriev, opts));
        }
        if rank2 {
            out.push(enhancement_suite(enhanced, opts));
        }
    }
    if all || name == "forest" {
        out.push(forest_suite(opts));
    }
    if all || name == "reduced" {
        out.push(reducedness_suite(opts));
    }
    if all || name == "axioms" {
        let small = SuiteOptions { cases: opts.cases.min(200), ..*opts };
        if boolean {
            out.push(axiom_suite(EnhancedSeminorm::Grigoriev, &small));
        }
        if rank2 {
            out.push(axiom_suite(enhanced, &small));
        }
    }
    if all || name == "soundness" {
        out.push(soundness_suite(&[prime], opts.trunc)?);
    }
    if out.is_empty() && !SUITES.contains(&name) {
        return Err(crate::Error::InvalidValue(format!("unknown suite `{name}`")));
    }
    Ok(out)
}

/// A quick structural check that trop_vanishes of the per-term list agrees
/// with an independent max-count formulation on totally ordered values.
pub fn vanishes_by_count(values: &[SemiringValue]) -> Option<bool> {
    let max = values.iter().max_by(|a, b| {
        if a.leq(b).unwrap_or(false) {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    })?;
    if max.is_zero() {
        return Some(true);
    }
    Some(values.iter().filter(|v| *v == max).count() >= 2)
}

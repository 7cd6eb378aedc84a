//! Verb implementations. Each returns a JSON report, a text rendering and
//! an exit code.

use std::fmt::Write as _;

use serde_json::{json, Value};
use tropdiff::diffpoly::{eval_poly, is_solution_of_system, verdict_of_terms, DiffMonomial, DiffPoly, Verdict};
use tropdiff::parse::{parse_poly, parse_rat_poly, parse_rat_series, parse_rational, parse_series};
use tropdiff::seminorm::{enhance, solve_linear_ode, trop_equation, value, EnhancedSeminorm, RatDiffPoly, RatSeries};
use tropdiff::solve::{
    enumerate_boolean_solutions, scan_template, slot_symbol, solve_leading_coefficient, spot_check, CoeffTemplate,
    SlotSolution, SolveVerdict,
};
use tropdiff::verify::{run_named, PairChoice, SuiteOptions, SuiteReport};
use tropdiff::{Error, NatNorm, PairDescriptor, Projection, TruncSeries};

use crate::config::{PairName, RunConfig};

/// The equation of the worked rank-2 example.
pub const DEMO_EQUATION: &str = "(e^-4,1)*x1 + (1,8)*x1' + (e^-1,8)*x1''";

pub const EXIT_YES: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_UNKNOWN: u8 = 2;
pub const EXIT_USAGE: u8 = 3;
pub const EXIT_ENGINE: u8 = 4;

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Engine(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            other => Failure::Engine(other.to_string()),
        }
    }
}

pub struct Report {
    pub json: Value,
    pub text: String,
    pub exit: u8,
}

type Outcome = Result<Report, Failure>;

fn verdict_exit(v: Verdict) -> u8 {
    match v {
        Verdict::Yes => EXIT_YES,
        Verdict::No => EXIT_NO,
        Verdict::Unknown => EXIT_UNKNOWN,
    }
}

fn pair_descriptor(pair: PairName, prime: u64) -> Result<PairDescriptor, Failure> {
    Ok(match pair {
        PairName::Boolean => PairDescriptor::grigoriev(),
        PairName::Rank2 => PairDescriptor::rank2(NatNorm::padic(prime)?),
    })
}

fn seminorm(pair: PairName, prime: u64) -> Result<EnhancedSeminorm, Failure> {
    Ok(match pair {
        PairName::Boolean => EnhancedSeminorm::Grigoriev,
        PairName::Rank2 => EnhancedSeminorm::padic_rank2(prime)?,
    })
}

fn header(verb: &str, pair: PairName, cfg: &RunConfig) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("verb".into(), json!(verb));
    m.insert("pair".into(), json!(pair.to_string()));
    m.insert("prime".into(), json!(cfg.prime));
    m.insert("deg".into(), json!(cfg.trunc_deg));
    m
}

/// A series literal; without an `O(t^k)` tail it is known through `deg`.
fn series_arg(src: &str, pair: &PairDescriptor, deg: u32) -> Result<TruncSeries, Failure> {
    let s = parse_series(src, pair.coeff_kind())?;
    Ok(if s.is_exact() { s.truncate(deg) } else { s })
}

fn rat_series_arg(src: &str, deg: u32) -> Result<RatSeries, Failure> {
    let s = parse_rat_series(src)?;
    Ok(if s.trunc().is_none() { s.truncate(deg) } else { s })
}

fn caveat_json(order: Option<String>) -> Value {
    match order {
        Some(o) => json!({ "min_order": o }),
        None => Value::Null,
    }
}

fn projection_json(p: &Projection) -> Value {
    json!({ "value": p.value.to_string(), "caveat": caveat_json(p.caveat.map(|c| c.to_string())) })
}

fn one_variable(f: &DiffPoly) -> Result<(), Failure> {
    if f.num_vars() > 1 {
        return Err(Failure::Usage(format!("`{f}` uses more than one variable")));
    }
    Ok(())
}

pub fn check(cfg: &RunConfig, eqs: &[String], sols: &[String]) -> Outcome {
    let name = cfg.pair_or(PairName::Rank2);
    let pair = pair_descriptor(name, cfg.prime)?;
    if eqs.is_empty() {
        return Err(Failure::Usage("check needs at least one --eq".into()));
    }
    let point = sols.iter().map(|s| series_arg(s, &pair, cfg.trunc_deg)).collect::<Result<Vec<_>, _>>()?;
    let system = eqs.iter().map(|e| parse_poly(e, pair.target())).collect::<Result<Vec<_>, _>>()?;
    let needed = system.iter().map(DiffPoly::num_vars).max().unwrap_or(0);
    if point.len() < needed {
        return Err(Failure::Usage(format!("the system uses {needed} variables but {} --sol given", point.len())));
    }
    let verdict = is_solution_of_system(&system, &point, &pair);
    let mut text = String::new();
    let mut equations = Vec::new();
    for f in &system {
        let ev = match eval_poly(f, &point, &pair) {
            Ok(ev) => ev,
            // too little of the point is known to form every derivative
            Err(e @ Error::TruncationExhausted(_)) => {
                let _ = writeln!(text, "{f}: unknown ({e})");
                equations.push(json!({
                    "equation": f.to_string(),
                    "verdict": Verdict::Unknown.as_str(),
                    "sum": Value::Null,
                    "terms": [],
                    "note": e.to_string(),
                }));
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        let v = verdict_of_terms(&ev.terms);
        let terms: Vec<Value> = f
            .terms()
            .iter()
            .zip(&ev.terms)
            .map(|((m, c), t)| {
                json!({
                    "monomial": m.to_string(),
                    "coefficient": c.to_string(),
                    "value": t.value.to_string(),
                    "caveat": caveat_json(t.uncertain_order.as_ref().map(ToString::to_string)),
                })
            })
            .collect();
        let _ = writeln!(text, "{f}: {}", v.as_str());
        let _ = writeln!(text, "  sum {}", ev.sum);
        for ((m, _), t) in f.terms().iter().zip(&ev.terms) {
            match &t.uncertain_order {
                Some(o) => {
                    let _ = writeln!(text, "  {m}: 0 (order ≥ {o} beyond truncation)");
                }
                None => {
                    let _ = writeln!(text, "  {m}: {}", t.value);
                }
            }
        }
        equations.push(json!({
            "equation": f.to_string(),
            "verdict": v.as_str(),
            "sum": ev.sum.to_string(),
            "terms": terms,
        }));
    }
    let _ = writeln!(text, "verdict: {}", verdict.as_str());
    let mut m = header("check", name, cfg);
    m.insert("point".into(), json!(point.iter().map(ToString::to_string).collect::<Vec<_>>()));
    m.insert("verdict".into(), json!(verdict.as_str()));
    m.insert("equations".into(), Value::Array(equations));
    Ok(Report { json: Value::Object(m), text, exit: verdict_exit(verdict) })
}

pub fn enumerate(cfg: &RunConfig, eq: &str, max_deg: u32) -> Outcome {
    let name = cfg.pair_or(PairName::Boolean);
    if name != PairName::Boolean {
        return Err(Failure::Usage("enumerate works over the boolean pair (--pair B)".into()));
    }
    let pair = PairDescriptor::grigoriev();
    let f = parse_poly(eq, pair.target())?;
    one_variable(&f)?;
    let e = enumerate_boolean_solutions(&f, max_deg, &pair, cfg.strategy)?;
    let fmt_set = |s: &Vec<u32>| format!("{{{}}}", s.iter().map(u32::to_string).collect::<Vec<_>>().join(","));
    let mut text = format!("{f}: {} of {} supports in {{0..{max_deg}}} are solutions\n", e.solutions.len(), e.examined);
    for s in &e.solutions {
        let _ = writeln!(text, "  {}", fmt_set(s));
    }
    if !e.unknown.is_empty() {
        let _ = writeln!(text, "unknown: {}", e.unknown.iter().map(fmt_set).collect::<Vec<_>>().join(" "));
    }
    let mut m = header("enumerate", name, cfg);
    m.insert("equation".into(), json!(f.to_string()));
    m.insert("max_deg".into(), json!(max_deg));
    m.insert("examined".into(), json!(e.examined));
    m.insert("solutions".into(), json!(e.solutions));
    m.insert("unknown".into(), json!(e.unknown));
    Ok(Report { json: Value::Object(m), text, exit: EXIT_YES })
}

fn slot_json(s: &SlotSolution, checked: Option<bool>) -> Value {
    let mut m = serde_json::Map::new();
    m.insert("slot".into(), json!(s.slot));
    m.insert("symbol".into(), json!(slot_symbol(s.slot)));
    m.insert("verdict".into(), json!(s.verdict.name()));
    m.insert("witness_terms".into(), json!(s.terms.iter().map(ToString::to_string).collect::<Vec<_>>()));
    match &s.verdict {
        SolveVerdict::SingleValue(c) => {
            m.insert("c".into(), json!(c.to_string()));
        }
        SolveVerdict::Unresolved(eqs) => {
            m.insert("equations".into(), json!(eqs));
        }
        _ => {}
    }
    if let Some(ok) = checked {
        m.insert("spot_check".into(), json!(ok));
    }
    Value::Object(m)
}

fn slot_text(s: &SlotSolution) -> String {
    let terms: Vec<String> = s.terms.iter().map(ToString::to_string).collect();
    format!("{}: {}  [{}]", slot_symbol(s.slot), s.verdict, terms.join(" ⊕ "))
}

fn slot_exit(v: &SolveVerdict) -> u8 {
    match v {
        SolveVerdict::AllPositive | SolveVerdict::SingleValue(_) => EXIT_YES,
        SolveVerdict::NoSolution => EXIT_NO,
        SolveVerdict::Unresolved(_) => EXIT_UNKNOWN,
    }
}

fn rank2_only(cfg: &RunConfig, verb: &str) -> Result<(PairName, PairDescriptor), Failure> {
    let name = cfg.pair_or(PairName::Rank2);
    if name != PairName::Rank2 {
        return Err(Failure::Usage(format!("{verb} works over the rank-2 pair (--pair T2)")));
    }
    Ok((name, pair_descriptor(name, cfg.prime)?))
}

pub fn solve_coeff(cfg: &RunConfig, eq: &str, slot: u32, base: Option<&str>) -> Outcome {
    let (name, pair) = rank2_only(cfg, "solve-coeff")?;
    let f = parse_poly(eq, pair.target())?;
    one_variable(&f)?;
    let trunc = cfg.trunc_deg.max(slot);
    let tmpl = match base {
        Some(b) => CoeffTemplate::new(parse_series(b, pair.coeff_kind())?, slot, trunc)?,
        None => CoeffTemplate::new(TruncSeries::one(pair.coeff_kind(), None), slot, trunc)?,
    };
    let s = solve_leading_coefficient(&f, &tmpl, &pair)?;
    let checked = spot_check(&f, &tmpl, &pair, &s.verdict)?;
    let mut m = header("solve-coeff", name, cfg);
    m.insert("equation".into(), json!(f.to_string()));
    m.insert("template".into(), json!(format!("{} + {}t^{slot} + …", tmpl.base(), slot_symbol(slot))));
    m.insert("solution".into(), slot_json(&s, Some(checked)));
    let text = format!("{}\nspot check: {}\n", slot_text(&s), if checked { "pass" } else { "FAIL" });
    let exit = if checked { slot_exit(&s.verdict) } else { EXIT_ENGINE };
    Ok(Report { json: Value::Object(m), text, exit })
}

pub fn scan(cfg: &RunConfig, eq: Option<&str>, max_slot: u32, demo: bool) -> Outcome {
    let (name, pair) = rank2_only(cfg, "scan")?;
    let src = match (eq, demo) {
        (Some(_), true) => return Err(Failure::Usage("--paper-demo replaces --eq".into())),
        (Some(e), false) => e,
        (None, true) => DEMO_EQUATION,
        (None, false) => return Err(Failure::Usage("scan needs --eq or --paper-demo".into())),
    };
    let pair = if demo { PairDescriptor::rank2(NatNorm::padic(2)?) } else { pair };
    let max_slot = if demo { 5 } else { max_slot };
    let f = parse_poly(src, pair.target())?;
    one_variable(&f)?;
    let slots = scan_template(&f, max_slot, &pair)?;
    let mut text = format!("{f}\n");
    for s in &slots {
        let _ = writeln!(text, "{}", slot_text(s));
    }
    let mut m = header("scan", name, cfg);
    if demo {
        m.insert("prime".into(), json!(2));
    }
    m.insert("equation".into(), json!(f.to_string()));
    m.insert("slots".into(), Value::Array(slots.iter().map(|s| slot_json(s, None)).collect()));
    Ok(Report { json: Value::Object(m), text, exit: EXIT_YES })
}

pub fn tropicalize(cfg: &RunConfig, eq: &str, sols: &[String]) -> Outcome {
    let name = cfg.pair_or(PairName::Rank2);
    let e = seminorm(name, cfg.prime)?;
    let f = parse_rat_poly(eq)?;
    let trop = trop_equation(&f, &e)?;
    let mut text = format!("{e}: {}\n", trop.poly);
    let caveats: Vec<String> = trop.caveats.iter().map(DiffMonomial::to_string).collect();
    if !caveats.is_empty() {
        let _ = writeln!(text, "coefficients vanishing within truncation: {}", caveats.join(", "));
    }
    let mut m = header("tropicalize", name, cfg);
    m.insert("seminorm".into(), json!(e.to_string()));
    m.insert("equation".into(), json!(f.to_string()));
    m.insert("tropical_equation".into(), json!(trop.poly.to_string()));
    m.insert("caveats".into(), json!(caveats));
    let mut exit = EXIT_YES;
    if !sols.is_empty() {
        let point = sols.iter().map(|s| rat_series_arg(s, cfg.trunc_deg)).collect::<Result<Vec<_>, _>>()?;
        let (points, verdict) = tropical_point(&trop, &point, &e)?;
        for (x, p) in point.iter().zip(&points) {
            let _ = writeln!(text, "ṽ({x}) = {}", p["enhanced"].as_str().unwrap_or(""));
        }
        let _ = writeln!(text, "verdict: {}", verdict.as_str());
        m.insert("point".into(), Value::Array(points));
        m.insert("verdict".into(), json!(verdict.as_str()));
        exit = verdict_exit(verdict);
    }
    Ok(Report { json: Value::Object(m), text, exit })
}

/// Enhances a classical point and tests it against the tropical equation.
/// A coefficient that vanished within truncation makes the verdict unknown.
fn tropical_point(
    trop: &tropdiff::seminorm::TropEquation,
    point: &[RatSeries],
    e: &EnhancedSeminorm,
) -> Result<(Vec<Value>, Verdict), Failure> {
    let mut enhanced = Vec::new();
    let mut out = Vec::new();
    for x in point {
        let ex = enhance(x, e)?;
        out.push(json!({
            "series": x.to_string(),
            "enhanced": ex.to_string(),
            "value": projection_json(&value(x, e)?),
        }));
        enhanced.push(ex);
    }
    let verdict = match is_solution_of_system(std::slice::from_ref(&trop.poly), &enhanced, &e.pair()) {
        Verdict::Yes if !trop.caveats.is_empty() => Verdict::Unknown,
        v => v,
    };
    Ok((out, verdict))
}

/// Splits Σ cⱼ(t) x1^(j) into its coefficient list.
fn linear_coeffs(f: &RatDiffPoly) -> Result<Vec<RatSeries>, Failure> {
    let mut coeffs: Vec<RatSeries> = Vec::new();
    for (m, c) in f.terms() {
        let factors: Vec<_> = m.factors().collect();
        let [(0, j, 1)] = factors[..] else {
            return Err(Failure::Usage(format!("`{f}` is not a homogeneous linear equation in x1")));
        };
        let j = j as usize;
        if coeffs.len() <= j {
            coeffs.resize(j + 1, RatSeries::zero(None));
        }
        coeffs[j] = c.clone();
    }
    if coeffs.is_empty() {
        return Err(Failure::Usage("the equation is zero".into()));
    }
    Ok(coeffs)
}

pub fn classical_solve(cfg: &RunConfig, eq: &str, init: &str) -> Outcome {
    let name = cfg.pair_or(PairName::Rank2);
    let e = seminorm(name, cfg.prime)?;
    let f = parse_rat_poly(eq)?;
    let coeffs = linear_coeffs(&f)?;
    let init = if init.trim().is_empty() {
        Vec::new()
    } else {
        init.split(',').map(|s| parse_rational(s.trim())).collect::<Result<Vec<_>, _>>()?
    };
    let x = solve_linear_ode(&coeffs, &init, cfg.trunc_deg)?;
    let trop = trop_equation(&f, &e)?;
    let (points, verdict) = tropical_point(&trop, std::slice::from_ref(&x), &e)?;
    let text = format!(
        "x = {x}\n{e}: {}\nṽ(x) = {}\nverdict: {}\n",
        trop.poly,
        points[0]["enhanced"].as_str().unwrap_or(""),
        verdict.as_str()
    );
    let mut m = header("classical-solve", name, cfg);
    m.insert("seminorm".into(), json!(e.to_string()));
    m.insert("equation".into(), json!(f.to_string()));
    m.insert("init".into(), json!(init.iter().map(ToString::to_string).collect::<Vec<_>>()));
    m.insert("solution".into(), json!(x.to_string()));
    m.insert("tropical_equation".into(), json!(trop.poly.to_string()));
    m.insert("point".into(), Value::Array(points));
    m.insert("verdict".into(), json!(verdict.as_str()));
    Ok(Report { json: Value::Object(m), text, exit: verdict_exit(verdict) })
}

fn report_json(r: &SuiteReport) -> Value {
    json!({
        "name": r.name,
        "cases": r.cases,
        "passed": r.passed,
        "failed": r.failed,
        "skipped": r.skipped,
        "first_failure": r.first_failure,
        "note": r.note,
    })
}

pub fn verify(cfg: &RunConfig, suite: &str, cases: usize, seed: u64) -> Outcome {
    let choice = match cfg.pair {
        None => PairChoice::Both,
        Some(PairName::Boolean) => PairChoice::Boolean,
        Some(PairName::Rank2) => PairChoice::Rank2,
    };
    let opts = SuiteOptions { cases, seed, strategy: cfg.strategy, ..SuiteOptions::default() };
    let reports = run_named(suite, &opts, choice, cfg.prime).map_err(|e| match e {
        Error::InvalidValue(msg) if msg.starts_with("unknown suite") => Failure::Usage(msg),
        other => Failure::from(other),
    })?;
    let ok = reports.iter().all(SuiteReport::ok);
    let mut text = String::new();
    for r in &reports {
        let _ = writeln!(text, "{} {r}", if r.ok() { "ok  " } else { "FAIL" });
    }
    let mut m = serde_json::Map::new();
    m.insert("verb".into(), json!("verify"));
    m.insert("suite".into(), json!(suite));
    m.insert("prime".into(), json!(cfg.prime));
    m.insert("seed".into(), json!(seed));
    m.insert("ok".into(), json!(ok));
    m.insert("reports".into(), Value::Array(reports.iter().map(report_json).collect()));
    Ok(Report { json: Value::Object(m), text, exit: if ok { EXIT_YES } else { EXIT_NO } })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn demo_cascade() {
        let r = scan(&RunConfig::default(), None, 5, true).unwrap();
        let verdicts: Vec<&str> = r.json["slots"].as_array().unwrap().iter().map(|s| s["verdict"].as_str().unwrap()).collect();
        assert_eq!(verdicts, ["none", "all_positive_c", "none", "all_positive_c", "single_value"]);
        assert_eq!(r.json["slots"][4]["c"], "1/8");
    }

    #[test]
    fn linear_split() {
        let f = parse_rat_poly("x1'' + x1").unwrap();
        assert_eq!(linear_coeffs(&f).unwrap().len(), 3);
        assert!(linear_coeffs(&parse_rat_poly("x1*x1'").unwrap()).is_err());
    }
}

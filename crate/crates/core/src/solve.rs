//! Solution search.
//!
//! Over the boolean pair, candidate solutions are finite supports and can be
//! enumerated outright. Over the rank-2 pair, [`solve_leading_coefficient`]
//! follows the one-slot-at-a-time method: fix the coefficients below slot m,
//! leave one positive unknown c at slot m, and decide for which c the
//! leading terms of f(x) tropically vanish.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::diffpoly::{is_solution, DiffPoly, Verdict};
use crate::error::{Error, Result};
use crate::exec::{self, Strategy};
use crate::semiring::{fmt_exp, fmt_rational, int, Rational, SemiringKind, SemiringValue};
use crate::series::{PairDescriptor, ProjectionKind, TruncSeries, DEFAULT_TRUNC};

/// Largest `max_deg` accepted by [`enumerate_boolean_solutions`].
pub const MAX_ENUM_DEG: u32 = 16;
/// Largest number of monomials accepted by [`enumerate_boolean_solutions`].
pub const MAX_ENUM_TERMS: usize = 32;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Enumeration {
    /// Supports with verdict yes, by cardinality and then lexicographically.
    pub solutions: Vec<Vec<u32>>,
    /// Supports whose verdict is unknown.
    pub unknown: Vec<Vec<u32>>,
    pub examined: usize,
}

fn check_boolean_pair(pair: &PairDescriptor) -> Result<()> {
    if pair.coeff_kind() != SemiringKind::Bool || pair.pi() != ProjectionKind::BooleanLeadingExponent {
        return Err(Error::UnsupportedEquation("support enumeration needs the boolean pair".into()));
    }
    Ok(())
}

/// Every subset of {0..=max_deg}, by cardinality and then lexicographically.
pub fn supports_in_order(max_deg: u32) -> Vec<Vec<u32>> {
    let n = max_deg + 1;
    let mut all: Vec<Vec<u32>> = (0u64..1 << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    all
}

/// All supports S ⊆ {0..=max_deg}, read as exact boolean polynomials, at
/// which the single-variable polynomial f tropically vanishes.
pub fn enumerate_boolean_solutions(
    f: &DiffPoly,
    max_deg: u32,
    pair: &PairDescriptor,
    strategy: Strategy,
) -> Result<Enumeration> {
    check_boolean_pair(pair)?;
    if f.kind() != pair.target() {
        return Err(Error::TagMismatch { left: f.kind(), right: pair.target() });
    }
    if f.num_vars() > 1 {
        return Err(Error::UnsupportedEquation("support enumeration handles one variable".into()));
    }
    if max_deg > MAX_ENUM_DEG {
        return Err(Error::Budget(format!("max degree {max_deg} exceeds {MAX_ENUM_DEG}")));
    }
    if f.len() > MAX_ENUM_TERMS {
        return Err(Error::Budget(format!("{} monomials exceed {MAX_ENUM_TERMS}", f.len())));
    }
    let supports = supports_in_order(max_deg);
    let verdicts = exec::map(strategy, &supports, |s| is_solution(f, &[TruncSeries::support(s, None)], pair));
    let mut out = Enumeration { examined: supports.len(), ..Enumeration::default() };
    for (s, v) in supports.into_iter().zip(verdicts) {
        match v {
            Verdict::Yes => out.solutions.push(s),
            Verdict::Unknown => out.unknown.push(s),
            Verdict::No => {}
        }
    }
    Ok(out)
}

/// x = base + c·t^slot + (unspecified higher terms), with c > 0 unknown.
/// The base may only have coefficients below the slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTemplate {
    base: TruncSeries,
    slot: u32,
    trunc: u32,
}

impl CoeffTemplate {
    pub fn new(base: TruncSeries, slot: u32, trunc: u32) -> Result<Self> {
        if base.kind() != SemiringKind::PosRat {
            return Err(Error::UnsupportedTemplate(format!("base must be over 𝕋, got {}", base.kind())));
        }
        if let Some((&d, _)) = base.coeffs().range(slot..).next() {
            return Err(Error::UnsupportedTemplate(format!("base has a coefficient at degree {d} ≥ slot {slot}")));
        }
        if slot > trunc {
            return Err(Error::UnsupportedTemplate(format!("slot {slot} beyond truncation {trunc}")));
        }
        Ok(CoeffTemplate { base, slot, trunc })
    }

    /// 1 ⊕ c·t^slot, the shape of the worked case analysis.
    pub fn unit_plus(slot: u32) -> Result<Self> {
        let one = TruncSeries::one(SemiringKind::PosRat, None);
        if slot == 0 {
            return Err(Error::UnsupportedTemplate("slot 0 would replace the constant term".into()));
        }
        Self::new(one, slot, DEFAULT_TRUNC.max(slot))
    }

    pub fn slot(&self) -> u32 {
        self.slot
    }

    pub fn base(&self) -> &TruncSeries {
        &self.base
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    /// The concrete series with c substituted and higher slots zero through truncation.
    pub fn instantiate(&self, c: &Rational) -> Result<TruncSeries> {
        let mut coeffs: Vec<(u32, Rational)> = self
            .base
            .coeffs()
            .iter()
            .map(|(d, v)| match v {
                SemiringValue::PosRat(p) => (*d, p.value().clone()),
                _ => unreachable!("template base is over 𝕋"),
            })
            .collect();
        coeffs.push((self.slot, c.clone()));
        TruncSeries::positive(&coeffs, Some(self.trunc))
    }

    fn base_coeff(&self, deg: u32) -> Rational {
        match self.base.coeffs().get(&deg) {
            Some(SemiringValue::PosRat(p)) => p.value().clone(),
            _ => Rational::zero(),
        }
    }
}

/// Greek names for slots 1..=5 as in the case analysis, then a6, a7, ….
pub fn slot_symbol(slot: u32) -> String {
    match slot {
        1 => "α".into(),
        2 => "β".into(),
        3 => "γ".into(),
        4 => "δ".into(),
        5 => "ε".into(),
        n => format!("a{n}"),
    }
}

/// A per-term value (e^{−order}, coeff · ∏ slot^power). When `exact` is
/// false the term involves a free later slot and `order` is only the order
/// it has if that slot is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymTerm {
    pub order: Rational,
    pub coeff: Rational,
    pub powers: BTreeMap<u32, u32>,
    pub exact: bool,
}

impl SymTerm {
    fn one() -> Self {
        SymTerm { order: Rational::zero(), coeff: Rational::one(), powers: BTreeMap::new(), exact: true }
    }

    fn times(&mut self, order: &Rational, coeff: &Rational, slot: Option<u32>, k: u32) {
        let ki = int(i64::from(k));
        self.order += order * &ki;
        self.coeff *= coeff.pow(k as i32);
        if let Some(s) = slot {
            *self.powers.entry(s).or_insert(0) += k;
        }
    }

    /// Power of the unknown at `slot`.
    pub fn power_of(&self, slot: u32) -> u32 {
        self.powers.get(&slot).copied().unwrap_or(0)
    }

    /// The concrete 𝕋₂ value at a given c, if no free slot is involved.
    pub fn at(&self, slot: u32, c: &Rational) -> Option<SemiringValue> {
        if !self.exact || self.powers.keys().any(|s| *s != slot) {
            return None;
        }
        SemiringValue::rank2(self.order.clone(), &self.coeff * c.pow(self.power_of(slot) as i32)).ok()
    }
}

fn fmt_symbolic(coeff: &Rational, powers: &BTreeMap<u32, u32>) -> String {
    let symbols: String = powers
        .iter()
        .map(|(s, k)| match k {
            1 => slot_symbol(*s),
            k => format!("{}^{k}", slot_symbol(*s)),
        })
        .collect();
    if symbols.is_empty() {
        return fmt_rational(coeff);
    }
    if coeff.is_one() {
        symbols
    } else if coeff.is_integer() {
        format!("{}{symbols}", fmt_rational(coeff))
    } else if coeff.numer().is_one() {
        format!("{symbols}/{}", coeff.denom())
    } else {
        format!("({}){symbols}", fmt_rational(coeff))
    }
}

impl fmt::Display for SymTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", fmt_exp(&self.order), fmt_symbolic(&self.coeff, &self.powers))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SolveVerdict {
    /// Every c > 0 gives a solution.
    AllPositive,
    /// Exactly one c > 0 gives a solution.
    SingleValue(Rational),
    /// No c > 0 gives a solution.
    NoSolution,
    /// The answer depends on equations or data the solver does not settle.
    Unresolved(Vec<String>),
}

impl SolveVerdict {
    pub fn name(&self) -> &'static str {
        match self {
            SolveVerdict::AllPositive => "all_positive_c",
            SolveVerdict::SingleValue(_) => "single_value",
            SolveVerdict::NoSolution => "none",
            SolveVerdict::Unresolved(_) => "unresolved",
        }
    }
}

impl fmt::Display for SolveVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveVerdict::SingleValue(c) => write!(f, "single_value {}", fmt_rational(c)),
            SolveVerdict::Unresolved(eqs) => write!(f, "unresolved [{}]", eqs.join("; ")),
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotSolution {
    pub slot: u32,
    /// Per-term values in the monomial order of f; zero terms are omitted.
    pub terms: Vec<SymTerm>,
    pub verdict: SolveVerdict,
}

/// Symbolic leading term of π(dʲx).
enum Factor {
    Known { order: u32, coeff: Rational, power: u32 },
    Free { order: u32, coeff: Rational, slot: u32 },
    Zero,
}

/// Search limit for the first nonzero weight run past the slot.
const WEIGHT_SEARCH: u32 = 4096;

fn leading_factor(tmpl: &CoeffTemplate, j: u32, pair: &PairDescriptor) -> Factor {
    let d = pair.differential();
    let m = tmpl.slot;
    for n in j..m {
        let w = d.weight_run(u64::from(n), j);
        let a = tmpl.base_coeff(n);
        if !w.is_zero() && !a.is_zero() {
            return Factor::Known { order: n - j, coeff: w * a, power: 0 };
        }
    }
    if m >= j {
        let w = d.weight_run(u64::from(m), j);
        if !w.is_zero() {
            return Factor::Known { order: m - j, coeff: w, power: 1 };
        }
    }
    if d.kills_order(j) {
        return Factor::Zero;
    }
    let start = (m + 1).max(j);
    (start..start + WEIGHT_SEARCH)
        .find_map(|n| {
            let w = d.weight_run(u64::from(n), j);
            (!w.is_zero()).then(|| Factor::Free { order: n - j, coeff: w, slot: n })
        })
        .unwrap_or(Factor::Zero)
}

/// The per-term symbolic values of f at the template, omitting terms that vanish identically.
pub fn template_terms(f: &DiffPoly, tmpl: &CoeffTemplate, pair: &PairDescriptor) -> Result<Vec<SymTerm>> {
    if pair.pi() != ProjectionKind::Rank2LeadingTerm || pair.coeff_kind() != SemiringKind::PosRat {
        return Err(Error::UnsupportedTemplate("the coefficient solver needs the rank-2 pair".into()));
    }
    if f.kind() != SemiringKind::Rank2 {
        return Err(Error::TagMismatch { left: f.kind(), right: SemiringKind::Rank2 });
    }
    if f.num_vars() > 1 {
        return Err(Error::UnsupportedTemplate("templates cover a single variable".into()));
    }
    let mut out = Vec::with_capacity(f.len());
    'terms: for (m, c) in f.terms() {
        let (Some(order), SemiringValue::Rank2(r)) = (c.t_order(), c) else {
            continue;
        };
        let mut term = SymTerm::one();
        term.times(order, r.coeff().expect("nonzero"), None, 1);
        for (_, j, k) in m.factors() {
            match leading_factor(tmpl, j, pair) {
                Factor::Zero => continue 'terms,
                Factor::Known { order, coeff, power } => {
                    term.times(&int(i64::from(order)), &coeff, (power > 0).then_some(tmpl.slot), k);
                }
                Factor::Free { order, coeff, slot } => {
                    term.times(&int(i64::from(order)), &coeff, Some(slot), k);
                    term.exact = false;
                }
            }
        }
        out.push(term);
    }
    Ok(out)
}

/// A breakpoint c = r^{1/e} of the upper envelope.
#[derive(Debug, Clone)]
struct Root {
    r: Rational,
    e: u32,
}

impl Root {
    fn cmp(&self, other: &Root) -> Ordering {
        self.r.pow(other.e as i32).cmp(&other.r.pow(self.e as i32))
    }

    fn rational(&self) -> Option<Rational> {
        let exact = |n: &BigInt| {
            let root = n.nth_root(self.e);
            (root.pow(self.e) == *n).then_some(root)
        };
        Some(Rational::new(exact(self.r.numer())?, exact(self.r.denom())?))
    }

    fn equation(&self) -> String {
        match self.e {
            1 => format!("c = {}", fmt_rational(&self.r)),
            e => format!("c^{e} = {}", fmt_rational(&self.r)),
        }
    }
}

/// Decides the removal test on the maximal terms, as a function of c > 0.
fn decide(terms: &[SymTerm], slot: u32) -> SolveVerdict {
    let known: Vec<&SymTerm> = terms.iter().filter(|t| t.exact).collect();
    let Some(top) = known.iter().map(|t| &t.order).min() else {
        return match terms.is_empty() {
            true => SolveVerdict::AllPositive,
            false => SolveVerdict::Unresolved(vec!["every term involves a later free coefficient".into()]),
        };
    };
    if let Some(t) = terms.iter().find(|t| !t.exact && t.order <= *top) {
        return SolveVerdict::Unresolved(vec![format!("term {t} depends on a later free coefficient")]);
    }
    // strongest line q·c^k for each power k, with its multiplicity
    let mut lines: BTreeMap<u32, (Rational, usize)> = BTreeMap::new();
    for t in known.iter().filter(|t| t.order == *top) {
        let k = t.power_of(slot);
        let entry = lines.entry(k).or_insert_with(|| (t.coeff.clone(), 0));
        match t.coeff.cmp(&entry.0) {
            Ordering::Greater => *entry = (t.coeff.clone(), 1),
            Ordering::Equal => entry.1 += 1,
            Ordering::Less => {}
        }
    }
    let lines: Vec<(u32, Rational, usize)> = lines.into_iter().map(|(k, (q, n))| (k, q, n)).collect();
    // walk the upper envelope from c → 0 (smallest power) to c → ∞
    let mut cur = 0;
    let mut segments = vec![lines[0].2];
    let mut breaks: Vec<Root> = Vec::new();
    while cur + 1 < lines.len() {
        let (kc, qc, _) = &lines[cur];
        let mut best: Option<(usize, Root)> = None;
        for (idx, (k, q, _)) in lines.iter().enumerate().skip(cur + 1) {
            let root = Root { r: qc / q, e: k - kc };
            let better = match &best {
                None => true,
                Some((_, b)) => root.cmp(b) != Ordering::Greater,
            };
            if better {
                best = Some((idx, root));
            }
        }
        let (next, root) = best.expect("a later line exists");
        breaks.push(root);
        segments.push(lines[next].2);
        cur = next;
    }
    let open_ok: Vec<bool> = segments.iter().map(|n| *n >= 2).collect();
    if open_ok.iter().all(|ok| *ok) {
        return SolveVerdict::AllPositive;
    }
    if breaks.is_empty() {
        return SolveVerdict::NoSolution;
    }
    if open_ok.iter().any(|ok| *ok) || breaks.len() > 1 {
        let mut eqs: Vec<String> = breaks.iter().map(Root::equation).collect();
        eqs.push("solution set is not a single point".into());
        return SolveVerdict::Unresolved(eqs);
    }
    match breaks[0].rational() {
        Some(c) => SolveVerdict::SingleValue(c),
        None => SolveVerdict::Unresolved(vec![breaks[0].equation()]),
    }
}

pub fn solve_leading_coefficient(
    f: &DiffPoly,
    tmpl: &CoeffTemplate,
    pair: &PairDescriptor,
) -> Result<SlotSolution> {
    let terms = template_terms(f, tmpl, pair)?;
    let verdict = decide(&terms, tmpl.slot);
    Ok(SlotSolution { slot: tmpl.slot, terms, verdict })
}

/// Runs the solver on 1 ⊕ c·t^m for m = 1..=max_slot, lower slots zero.
pub fn scan_template(f: &DiffPoly, max_slot: u32, pair: &PairDescriptor) -> Result<Vec<SlotSolution>> {
    (1..=max_slot)
        .map(|m| solve_leading_coefficient(f, &CoeffTemplate::unit_plus(m)?, pair))
        .collect()
}

/// Re-checks a verdict with concrete values: all-positive at c ∈ {1/3, 1, 7/2},
/// a single value at c itself and its failure at c ± 1/1000.
pub fn spot_check(f: &DiffPoly, tmpl: &CoeffTemplate, pair: &PairDescriptor, verdict: &SolveVerdict) -> Result<bool> {
    let at = |c: &Rational| -> Result<Verdict> { Ok(is_solution(f, &[tmpl.instantiate(c)?], pair)) };
    let third = Rational::new(1.into(), 3.into());
    let samples = [third, int(1), Rational::new(7.into(), 2.into())];
    Ok(match verdict {
        SolveVerdict::AllPositive => samples.iter().map(at).collect::<Result<Vec<_>>>()?.iter().all(|v| *v == Verdict::Yes),
        SolveVerdict::NoSolution => samples.iter().map(at).collect::<Result<Vec<_>>>()?.iter().all(|v| *v == Verdict::No),
        SolveVerdict::SingleValue(c) => {
            let eps = Rational::new(1.into(), 1000.into());
            let (lo, hi) = (c - &eps, c + &eps);
            at(c)? == Verdict::Yes
                && (!lo.is_positive() || at(&lo)? == Verdict::No)
                && at(&hi)? == Verdict::No
        }
        SolveVerdict::Unresolved(_) => true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffpoly::DiffMonomial;
    use crate::semiring::rat;
    use crate::series::NatNorm;

    fn r2(order: i64, q: Rational) -> SemiringValue {
        SemiringValue::rank2(int(order), q).unwrap()
    }

    fn worked_f() -> DiffPoly {
        DiffPoly::from_terms(
            SemiringKind::Rank2,
            [
                (DiffMonomial::var(0, 0), r2(4, int(1))),
                (DiffMonomial::var(0, 1), r2(0, int(8))),
                (DiffMonomial::var(0, 2), r2(1, int(8))),
            ],
        )
        .unwrap()
    }

    fn pair() -> PairDescriptor {
        PairDescriptor::rank2(NatNorm::PAdic(2))
    }

    #[test]
    fn worked_cascade() {
        let got: Vec<SolveVerdict> =
            scan_template(&worked_f(), 5, &pair()).unwrap().into_iter().map(|s| s.verdict).collect();
        assert_eq!(
            got,
            vec![
                SolveVerdict::NoSolution,
                SolveVerdict::AllPositive,
                SolveVerdict::NoSolution,
                SolveVerdict::AllPositive,
                SolveVerdict::SingleValue(rat(1, 8)),
            ]
        );
    }

    #[test]
    fn displayed_terms() {
        let scan = scan_template(&worked_f(), 5, &pair()).unwrap();
        let shown: Vec<Vec<String>> =
            scan.iter().map(|s| s.terms.iter().map(|t| t.to_string()).collect()).collect();
        assert_eq!(shown[0], ["(e^-4, 1)", "(e^0, 8α)", "(e^-1, 4β)"]);
        assert_eq!(shown[1], ["(e^-4, 1)", "(e^-1, 4β)", "(e^-1, 4β)"]);
        assert_eq!(shown[2], ["(e^-4, 1)", "(e^-2, 8γ)", "(e^-2, 4γ)"]);
        assert_eq!(shown[3], ["(e^-4, 1)", "(e^-3, 2δ)", "(e^-3, 2δ)"]);
        assert_eq!(shown[4], ["(e^-4, 1)", "(e^-4, 8ε)", "(e^-4, 2ε)"]);
        assert!(!scan[0].terms[2].exact);
    }

    #[test]
    fn verdicts_survive_spot_checks() {
        let f = worked_f();
        for s in scan_template(&f, 5, &pair()).unwrap() {
            let tmpl = CoeffTemplate::unit_plus(s.slot).unwrap();
            assert!(spot_check(&f, &tmpl, &pair(), &s.verdict).unwrap(), "slot {}", s.slot);
        }
    }

    #[test]
    fn trivial_equations() {
        let zero = DiffPoly::zero(SemiringKind::Rank2);
        assert!(scan_template(&zero, 4, &pair()).unwrap().iter().all(|s| s.verdict == SolveVerdict::AllPositive));
        let x = DiffPoly::from_terms(SemiringKind::Rank2, [(DiffMonomial::var(0, 0), r2(0, int(1)))]).unwrap();
        assert!(scan_template(&x, 4, &pair()).unwrap().iter().all(|s| s.verdict == SolveVerdict::NoSolution));
    }

    #[test]
    fn irrational_tie_is_unresolved() {
        // (e^-2, 2)·1 against (e^0, 1)·(x')² with x = 1 ⊕ c t: needs c² = 2
        let f = DiffPoly::from_terms(
            SemiringKind::Rank2,
            [
                (DiffMonomial::one(), r2(0, int(2))),
                (DiffMonomial::power(0, 1, 2), r2(0, int(1))),
            ],
        )
        .unwrap();
        let tmpl = CoeffTemplate::unit_plus(1).unwrap();
        let s = solve_leading_coefficient(&f, &tmpl, &pair()).unwrap();
        assert_eq!(s.verdict, SolveVerdict::Unresolved(vec!["c^2 = 2".into()]));
        let f = DiffPoly::from_terms(
            SemiringKind::Rank2,
            [
                (DiffMonomial::one(), r2(0, rat(9, 4))),
                (DiffMonomial::power(0, 1, 2), r2(0, int(1))),
            ],
        )
        .unwrap();
        let s = solve_leading_coefficient(&f, &tmpl, &pair()).unwrap();
        assert_eq!(s.verdict, SolveVerdict::SingleValue(rat(3, 2)));
        assert!(spot_check(&f, &tmpl, &pair(), &s.verdict).unwrap());
    }

    #[test]
    fn template_validation() {
        let base = TruncSeries::positive(&[(0, int(1)), (3, int(1))], None).unwrap();
        assert!(CoeffTemplate::new(base, 2, 16).is_err());
        assert!(CoeffTemplate::unit_plus(0).is_err());
        let grig = PairDescriptor::grigoriev();
        let tmpl = CoeffTemplate::unit_plus(1).unwrap();
        assert!(solve_leading_coefficient(&worked_f(), &tmpl, &grig).is_err());
    }

    fn boolean_f(orders: &[u32]) -> DiffPoly {
        DiffPoly::from_terms(
            SemiringKind::TropExp,
            orders.iter().map(|j| (DiffMonomial::var(0, *j), SemiringValue::one(SemiringKind::TropExp))),
        )
        .unwrap()
    }

    #[test]
    fn enumeration_examples() {
        let pair = PairDescriptor::grigoriev();
        let e = enumerate_boolean_solutions(&boolean_f(&[0, 1]), 5, &pair, Strategy::Sequential).unwrap();
        assert_eq!(e.examined, 64);
        assert!(e.unknown.is_empty());
        assert_eq!(e.solutions.len(), 17);
        assert_eq!(e.solutions[0], Vec::<u32>::new());
        assert_eq!(e.solutions[1], vec![0, 1]);
        assert!(e.solutions[1..].iter().all(|s| s.starts_with(&[0, 1])));

        let e = enumerate_boolean_solutions(&boolean_f(&[0]), 4, &pair, Strategy::Parallel).unwrap();
        assert_eq!(e.solutions, vec![Vec::<u32>::new()]);
        let e = enumerate_boolean_solutions(&boolean_f(&[1]), 4, &pair, Strategy::Parallel).unwrap();
        assert_eq!(e.solutions, vec![vec![], vec![0]]);
    }

    #[test]
    fn enumeration_budget() {
        let pair = PairDescriptor::grigoriev();
        assert!(matches!(
            enumerate_boolean_solutions(&boolean_f(&[0]), MAX_ENUM_DEG + 1, &pair, Strategy::Sequential),
            Err(Error::Budget(_))
        ));
    }
}

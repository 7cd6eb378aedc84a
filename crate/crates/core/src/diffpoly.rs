//! Basic differential polynomials over S₀ and their evaluation at points of
//! S₁ⁿ through a tropical pair.
//!
//! A polynomial `f = ⊕ f_α x^α` is evaluated term by term: each factor
//! `x_i^(j)` becomes `π(dʲ C_i)`, and the per-term values are kept so that
//! callers can see which terms are jointly maximal.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::semiring::{int, trop_vanishes, Rational, SemiringKind, SemiringValue};
use crate::series::{project, PairDescriptor, Projection, TruncSeries};

/// Monomial in the symbols x_i^(j): (var index, derivative order) ↦ multiplicity.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiffMonomial(BTreeMap<(usize, u32), u32>);

impl DiffMonomial {
    pub fn one() -> Self {
        DiffMonomial::default()
    }

    /// x_var^(order).
    pub fn var(var: usize, order: u32) -> Self {
        Self::power(var, order, 1)
    }

    pub fn power(var: usize, order: u32, mult: u32) -> Self {
        let mut m = BTreeMap::new();
        if mult > 0 {
            m.insert((var, order), mult);
        }
        DiffMonomial(m)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.0.clone();
        for (key, k) in &other.0 {
            *out.entry(*key).or_insert(0) += k;
        }
        DiffMonomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// `(var, order, multiplicity)` triples in canonical order.
    pub fn factors(&self) -> impl Iterator<Item = (usize, u32, u32)> + '_ {
        self.0.iter().map(|(&(i, j), &k)| (i, j, k))
    }

    pub fn max_order(&self) -> u32 {
        self.0.keys().map(|(_, j)| *j).max().unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.keys().map(|(i, _)| *i)
    }
}

pub(crate) fn fmt_symbol(var: usize, order: u32) -> String {
    match order {
        0..=2 => format!("x{}{}", var + 1, "'".repeat(order as usize)),
        j => format!("x{}^({j})", var + 1),
    }
}

impl fmt::Display for DiffMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors()
            .map(|(i, j, k)| match k {
                1 => fmt_symbol(i, j),
                k => format!("{}^{k}", fmt_symbol(i, j)),
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffPoly {
    kind: SemiringKind,
    terms: BTreeMap<DiffMonomial, SemiringValue>,
}

impl DiffPoly {
    pub fn zero(kind: SemiringKind) -> Self {
        DiffPoly { kind, terms: BTreeMap::new() }
    }

    /// Repeated monomials are combined with ⊕; zero coefficients are dropped.
    pub fn from_terms<I>(kind: SemiringKind, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (DiffMonomial, SemiringValue)>,
    {
        let mut p = Self::zero(kind);
        for (m, c) in terms {
            p.add_term(m, c)?;
        }
        Ok(p)
    }

    pub fn add_term(&mut self, m: DiffMonomial, c: SemiringValue) -> Result<()> {
        if c.kind() != self.kind {
            return Err(Error::TagMismatch { left: self.kind, right: c.kind() });
        }
        let merged = match self.terms.remove(&m) {
            Some(prev) => prev.add(&c)?,
            None => c,
        };
        if !merged.is_zero() {
            self.terms.insert(m, merged);
        }
        Ok(())
    }

    pub fn kind(&self) -> SemiringKind {
        self.kind
    }

    pub fn terms(&self) -> &BTreeMap<DiffMonomial, SemiringValue> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &SemiringValue) -> Result<Self> {
        let scaled = self
            .terms
            .iter()
            .map(|(m, v)| v.mul(c).map(|p| (m.clone(), p)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(self.kind, scaled)
    }

    /// Number of variables referenced (highest index + 1).
    pub fn num_vars(&self) -> usize {
        self.terms.keys().flat_map(|m| m.vars()).max().map_or(0, |i| i + 1)
    }
}

impl fmt::Display for DiffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| match (m.is_one(), c.is_one()) {
                (true, _) => c.to_string(),
                (false, true) => m.to_string(),
                (false, false) => format!("{c}*{m}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// One evaluated term. When `uncertain_order` is set the term involved a
/// series that is empty within truncation: `value` is then 0, and the true
/// value is either 0 or has leading t-order at least the stored bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermValue {
    pub value: SemiringValue,
    pub uncertain_order: Option<Rational>,
}

impl TermValue {
    fn certain(value: SemiringValue) -> Self {
        TermValue { value, uncertain_order: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub sum: SemiringValue,
    pub terms: Vec<TermValue>,
}

impl Evaluation {
    pub fn values(&self) -> Vec<SemiringValue> {
        self.terms.iter().map(|t| t.value.clone()).collect()
    }

    pub fn has_caveat(&self) -> bool {
        self.terms.iter().any(|t| t.uncertain_order.is_some())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn factor_projection(point: &[TruncSeries], var: usize, order: u32, pair: &PairDescriptor) -> Result<Projection> {
    let series = point
        .get(var)
        .ok_or_else(|| Error::InvalidValue(format!("no value supplied for x{}", var + 1)))?;
    project(&series.differentiate_n(pair.differential(), order)?, pair)
}

/// ∏ π(dʲ C_i)^k in S₀.
pub fn eval_monomial(m: &DiffMonomial, point: &[TruncSeries], pair: &PairDescriptor) -> Result<TermValue> {
    let target = pair.target();
    let mut value = SemiringValue::one(target);
    let mut order_bound = Rational::zero();
    let mut uncertain = false;
    for (var, order, mult) in m.factors() {
        let proj = factor_projection(point, var, order, pair)?;
        let k = int(i64::from(mult));
        match (proj.caveat, proj.value.t_order()) {
            (Some(bound), _) => {
                uncertain = true;
                order_bound += int(bound as i64) * &k;
            }
            (None, Some(o)) => order_bound += o * &k,
            // exactly zero: the whole monomial is zero
            (None, None) => return Ok(TermValue::certain(SemiringValue::zero(target))),
        }
        value = value.mul(&proj.value.pow(mult))?;
    }
    Ok(TermValue {
        value: if uncertain { SemiringValue::zero(target) } else { value },
        uncertain_order: uncertain.then_some(order_bound),
    })
}

/// `f(C) = ⊕ f_α π(C^α)`, together with the per-term values.
pub fn eval_poly(f: &DiffPoly, point: &[TruncSeries], pair: &PairDescriptor) -> Result<Evaluation> {
    if f.kind() != pair.target() {
        return Err(Error::TagMismatch { left: f.kind(), right: pair.target() });
    }
    let mut terms = Vec::with_capacity(f.len());
    let mut sum = SemiringValue::zero(pair.target());
    for (m, c) in f.terms() {
        let mono = eval_monomial(m, point, pair)?;
        let value = c.mul(&mono.value)?;
        let uncertain_order = mono
            .uncertain_order
            .map(|b| b + c.t_order().cloned().unwrap_or_else(Rational::zero));
        sum = sum.add(&value)?;
        terms.push(TermValue { value, uncertain_order });
    }
    Ok(Evaluation { sum, terms })
}

/// Decides the bend relations of the evaluated terms. Terms that are
/// uncertain because of truncation only matter if they could reach the
/// maximal known order; S₀ is totally ordered for every supported pair.
pub fn verdict_of_terms(terms: &[TermValue]) -> Verdict {
    if terms.is_empty() {
        return Verdict::Yes;
    }
    let values: Vec<SemiringValue> = terms.iter().map(|t| t.value.clone()).collect();
    let decided = || match trop_vanishes(&values) {
        Ok(true) => Verdict::Yes,
        Ok(false) => Verdict::No,
        Err(_) => Verdict::Unknown,
    };
    let bounds: Vec<&Rational> = terms.iter().filter_map(|t| t.uncertain_order.as_ref()).collect();
    if bounds.is_empty() {
        return decided();
    }
    let kind = values[0].kind();
    let Ok(max) = crate::semiring::sum_values(kind, &values) else {
        return Verdict::Unknown;
    };
    match max.t_order() {
        Some(top) if bounds.iter().all(|b| *b > top) => decided(),
        _ => Verdict::Unknown,
    }
}

pub fn is_solution(f: &DiffPoly, point: &[TruncSeries], pair: &PairDescriptor) -> Verdict {
    match eval_poly(f, point, pair) {
        Ok(eval) => verdict_of_terms(&eval.terms),
        Err(_) => Verdict::Unknown,
    }
}

/// Membership in Sol(E) = ⋂ Sol(f) over the system.
pub fn is_solution_of_system(system: &[DiffPoly], point: &[TruncSeries], pair: &PairDescriptor) -> Verdict {
    let mut verdict = Verdict::Yes;
    for f in system {
        match is_solution(f, point, pair) {
            Verdict::No => return Verdict::No,
            Verdict::Unknown => verdict = Verdict::Unknown,
            Verdict::Yes => {}
        }
    }
    verdict
}

/// Grigoriev's Val_W(j) = π(dʲ W) for a boolean series W.
pub fn grigoriev_val(w: &TruncSeries, j: u32, pair: &PairDescriptor) -> Result<Projection> {
    if pair.coeff_kind() != SemiringKind::Bool || pair.target() != SemiringKind::TropExp {
        return Err(Error::InvalidValue("Val_W is defined over the boolean pair".into()));
    }
    project(&w.differentiate_n(pair.differential(), j)?, pair)
}

//! The classical side: truncated ℚ[[t]] with d/dt, the t-adic and p-adic
//! seminorms, their differential enhancements into 𝔹[[t]] and 𝕋[[t]], and
//! tropicalization of equations and points.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::diffpoly::{DiffMonomial, DiffPoly};
use crate::error::{Error, Result};
use crate::semiring::{fmt_rational, int, PosRat, Rational, SemiringKind, SemiringValue};
use crate::series::{add_trunc, is_prime, project, fmt_monomial_t, NatNorm, PairDescriptor, Projection, TruncSeries};

/// Truncated power series over ℚ. Coefficients above `trunc` are unknown;
/// `trunc = None` marks an exact polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatSeries {
    coeffs: BTreeMap<u32, Rational>,
    trunc: Option<u32>,
}

impl RatSeries {
    pub fn zero(trunc: Option<u32>) -> Self {
        RatSeries { coeffs: BTreeMap::new(), trunc }
    }

    pub fn one(trunc: Option<u32>) -> Self {
        Self::constant(Rational::one(), trunc)
    }

    pub fn constant(q: Rational, trunc: Option<u32>) -> Self {
        Self::from_coeffs([(0, q)], trunc)
    }

    /// Duplicate degrees are summed; zero and out-of-range coefficients dropped.
    pub fn from_coeffs<I>(coeffs: I, trunc: Option<u32>) -> Self
    where
        I: IntoIterator<Item = (u32, Rational)>,
    {
        let mut s = Self::zero(trunc);
        for (d, q) in coeffs {
            s.add_coeff(d, q);
        }
        s
    }

    fn add_coeff(&mut self, d: u32, q: Rational) {
        if self.trunc.is_some_and(|t| d > t) {
            return;
        }
        let sum = self.coeffs.remove(&d).unwrap_or_else(Rational::zero) + q;
        if !sum.is_zero() {
            self.coeffs.insert(d, sum);
        }
    }

    pub fn trunc(&self) -> Option<u32> {
        self.trunc
    }

    pub fn coeffs(&self) -> &BTreeMap<u32, Rational> {
        &self.coeffs
    }

    /// The coefficient at `deg`, or `None` when it lies beyond truncation.
    pub fn coeff(&self, deg: u32) -> Option<Rational> {
        if self.trunc.is_some_and(|t| deg > t) {
            return None;
        }
        Some(self.coeffs.get(&deg).cloned().unwrap_or_else(Rational::zero))
    }

    pub fn leading(&self) -> Option<(u32, &Rational)> {
        self.coeffs.iter().next().map(|(d, q)| (*d, q))
    }

    pub fn is_exact_zero(&self) -> bool {
        self.coeffs.is_empty() && self.trunc.is_none()
    }

    /// No known nonzero coefficient.
    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn lead_bound(&self) -> Option<u64> {
        match (self.leading(), self.trunc) {
            (Some((d, _)), _) => Some(u64::from(d)),
            (None, Some(t)) => Some(u64::from(t) + 1),
            (None, None) => None,
        }
    }

    pub fn truncate(&self, trunc: u32) -> Self {
        let t = self.trunc.map_or(trunc, |cur| cur.min(trunc));
        RatSeries {
            coeffs: self.coeffs.range(..=t).map(|(d, q)| (*d, q.clone())).collect(),
            trunc: Some(t),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = Self::zero(add_trunc(self.trunc, other.trunc));
        for (d, q) in self.coeffs.iter().chain(other.coeffs.iter()) {
            out.add_coeff(*d, q.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        RatSeries {
            coeffs: self.coeffs.iter().map(|(d, q)| (*d, -q)).collect(),
            trunc: self.trunc,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|(d, c)| (*d, c * q)), self.trunc)
    }

    /// Cauchy product. ℚ[[t]] has no zero divisors, so the leading degree of
    /// the product is the sum of the leading degrees and the truncation is
    /// as tight as for the tropical series.
    pub fn mul(&self, other: &Self) -> Self {
        let bound = |t: Option<u32>, lead: Option<u64>| match (t, lead) {
            (Some(t), Some(l)) => Some(u64::from(t) + l),
            _ => None,
        };
        let trunc = match (bound(self.trunc, other.lead_bound()), bound(other.trunc, self.lead_bound())) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, None) => a,
            (None, b) => b,
        }
        .map(|t| u32::try_from(t).unwrap_or(u32::MAX));
        let mut out = Self::zero(trunc);
        for (da, qa) in &self.coeffs {
            for (db, qb) in &other.coeffs {
                out.add_coeff(da + db, qa * qb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(None), |acc, _| acc.mul(self))
    }

    /// d/dt.
    pub fn ddt(&self) -> Result<Self> {
        let trunc = match self.trunc {
            Some(0) => return Err(Error::TruncationExhausted(0)),
            t => t.map(|t| t - 1),
        };
        Ok(Self::from_coeffs(
            self.coeffs.iter().filter(|(d, _)| **d > 0).map(|(d, q)| (d - 1, q * int(i64::from(*d)))),
            trunc,
        ))
    }

    pub fn ddt_n(&self, n: u32) -> Result<Self> {
        (0..n).try_fold(self.clone(), |s, _| s.ddt())
    }
}

impl fmt::Display for RatSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, (d, q)) in self.coeffs.iter().enumerate() {
            let (neg, abs) = (q.is_negative(), q.abs());
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let body = if *d == 0 {
                fmt_rational(&abs)
            } else if abs.is_one() {
                fmt_monomial_t(*d)
            } else if abs.is_integer() {
                format!("{}{}", fmt_rational(&abs), fmt_monomial_t(*d))
            } else {
                format!("({}){}", fmt_rational(&abs), fmt_monomial_t(*d))
            };
            out.push_str(&body);
        }
        if let Some(t) = self.trunc {
            if !out.is_empty() {
                out.push_str(" + ");
            }
            out.push_str(&format!("O({})", fmt_monomial_t(t + 1)));
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// Exponent of `p` in a nonzero rational.
pub fn padic_valuation(q: &Rational, p: u64) -> Option<i64> {
    if q.is_zero() {
        return None;
    }
    let count = |n: &BigInt| {
        let p = BigInt::from(p);
        let mut n = n.abs();
        let mut k = 0i64;
        while (&n % &p).is_zero() {
            n /= &p;
            k += 1;
        }
        k
    };
    Some(count(q.numer()) - count(q.denom()))
}

/// |q|_p = p^{−k} for q = pᵏ·a/b with p ∤ ab, and |0|_p = 0.
pub fn padic_norm(q: &Rational, p: u64) -> Result<PosRat> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let Some(k) = padic_valuation(q, p) else {
        return PosRat::new(Rational::zero());
    };
    let base = Rational::from_integer(BigInt::from(p));
    let exp = i32::try_from(k).map_err(|_| Error::InvalidValue("valuation out of range".into()))?;
    PosRat::new(base.pow(-exp))
}

/// A seminorm on ℚ[[t]] together with its differential enhancement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnhancedSeminorm {
    /// t-adic norm, enhanced to the support map into 𝔹[[t]].
    Grigoriev,
    /// (t-order, |leading coeff|_p) into 𝕋₂, enhanced coefficientwise into 𝕋[[t]].
    PAdicRank2(u64),
}

impl EnhancedSeminorm {
    pub fn padic_rank2(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(EnhancedSeminorm::PAdicRank2(p))
    }

    pub fn pair(&self) -> PairDescriptor {
        match self {
            EnhancedSeminorm::Grigoriev => PairDescriptor::grigoriev(),
            EnhancedSeminorm::PAdicRank2(p) => PairDescriptor::rank2(NatNorm::PAdic(*p)),
        }
    }

    pub fn target(&self) -> SemiringKind {
        self.pair().target()
    }
}

impl fmt::Display for EnhancedSeminorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnhancedSeminorm::Grigoriev => f.write_str("grigoriev"),
            EnhancedSeminorm::PAdicRank2(p) => write!(f, "padic-rank2(p={p})"),
        }
    }
}

/// ṽ(a): the support of `a` in 𝔹[[t]], or its coefficientwise p-adic norms in 𝕋[[t]].
pub fn enhance(a: &RatSeries, e: &EnhancedSeminorm) -> Result<TruncSeries> {
    match e {
        EnhancedSeminorm::Grigoriev => {
            let degrees: Vec<u32> = a.coeffs.keys().copied().collect();
            Ok(TruncSeries::support(&degrees, a.trunc))
        }
        EnhancedSeminorm::PAdicRank2(p) => {
            let coeffs = a
                .coeffs
                .iter()
                .map(|(d, q)| Ok((*d, padic_norm(q, *p)?.into_inner())))
                .collect::<Result<Vec<_>>>()?;
            TruncSeries::positive(&coeffs, a.trunc)
        }
    }
}

/// v(a) = π(ṽ(a)), with the caveat of [`project`] when `a` vanishes within truncation.
pub fn value(a: &RatSeries, e: &EnhancedSeminorm) -> Result<Projection> {
    project(&enhance(a, e)?, &e.pair())
}

/// Outcome of a randomized or listed check.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub checked: usize,
    pub skipped: usize,
    pub first_failure: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }

    fn fail(&mut self, msg: String) {
        if self.first_failure.is_none() {
            self.first_failure = Some(msg);
        }
    }
}

/// Checks v(0) = 0, v(±1) = 1, multiplicativity and the ultrametric identity
/// v(a+b) ⊕ v(a) ⊕ v(b) = v(a) ⊕ v(b) on all pairs of samples. Pairs whose
/// values carry a truncation caveat are skipped.
pub fn check_seminorm_axioms(e: &EnhancedSeminorm, samples: &[RatSeries]) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    let kind = e.target();
    let exact = |a: &RatSeries| -> Result<Option<SemiringValue>> {
        let p = value(a, e)?;
        Ok(p.caveat.is_none().then_some(p.value))
    };
    let one = SemiringValue::one(kind);
    report.checked += 1;
    if exact(&RatSeries::zero(None))? != Some(SemiringValue::zero(kind)) {
        report.fail("v(0) ≠ 0".into());
    }
    for q in [int(1), int(-1)] {
        report.checked += 1;
        if exact(&RatSeries::constant(q.clone(), None))? != Some(one.clone()) {
            report.fail(format!("v({q}) ≠ 1"));
        }
    }
    for (i, a) in samples.iter().enumerate() {
        for b in &samples[i..] {
            let (Some(va), Some(vb)) = (exact(a)?, exact(b)?) else {
                report.skipped += 1;
                continue;
            };
            report.checked += 1;
            match exact(&a.mul(b))? {
                Some(vab) if vab == va.mul(&vb)? => {}
                Some(vab) => report.fail(format!("v(({a})·({b})) = {vab} ≠ {}", va.mul(&vb)?)),
                None => report.fail(format!("product of ({a}) and ({b}) lost its leading term")),
            }
            match exact(&a.add(b))? {
                Some(vs) => {
                    let rhs = va.add(&vb)?;
                    if vs.add(&rhs)? != rhs {
                        report.fail(format!("v(({a}) + ({b})) = {vs} exceeds {rhs}"));
                    }
                }
                None => report.skipped += 1,
            }
        }
    }
    Ok(report)
}

/// Checks ṽ(d/dt a) = d_{S₁}(ṽ(a)) exactly, truncation included.
pub fn check_enhancement_commutes(e: &EnhancedSeminorm, samples: &[RatSeries]) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    let pair = e.pair();
    for a in samples {
        let Ok(da) = a.ddt() else {
            report.skipped += 1;
            continue;
        };
        report.checked += 1;
        let lhs = enhance(&da, e)?;
        let rhs = enhance(a, e)?.differentiate(pair.differential())?;
        if lhs != rhs {
            report.fail(format!("a = {a}: ṽ(a') = {lhs} but d ṽ(a) = {rhs}"));
        }
    }
    Ok(report)
}

/// A differential polynomial with coefficients in ℚ[[t]].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RatDiffPoly {
    terms: BTreeMap<DiffMonomial, RatSeries>,
}

impl RatDiffPoly {
    pub fn zero() -> Self {
        RatDiffPoly::default()
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (DiffMonomial, RatSeries)>,
    {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Σ cᵢ(t) x1^(i).
    pub fn linear_ode(coeffs: &[RatSeries]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, c)| (DiffMonomial::var(0, i as u32), c.clone())))
    }

    pub fn add_term(&mut self, m: DiffMonomial, c: RatSeries) {
        let sum = match self.terms.remove(&m) {
            Some(prev) => prev.add(&c),
            None => c,
        };
        if !sum.is_exact_zero() {
            self.terms.insert(m, sum);
        }
    }

    pub fn terms(&self) -> &BTreeMap<DiffMonomial, RatSeries> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_vars(&self) -> usize {
        self.terms.keys().flat_map(|m| m.vars()).max().map_or(0, |i| i + 1)
    }
}

impl fmt::Display for RatDiffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            // a lone rational constant prints with its sign pulled out
            let constant = c.trunc.is_none() && c.coeffs.len() == 1 && c.coeffs.contains_key(&0);
            let (neg, c) = match constant && c.coeffs[&0].is_negative() {
                true => (true, c.neg()),
                false => (false, c.clone()),
            };
            out.push_str(match (i, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            let coeff = if constant {
                fmt_rational(&c.coeffs[&0])
            } else {
                format!("({c})")
            };
            match (m.is_one(), constant && c.coeffs[&0].is_one()) {
                (true, _) => out.push_str(&coeff),
                (false, true) => out.push_str(&m.to_string()),
                (false, false) => out.push_str(&format!("{coeff}*{m}")),
            }
        }
        f.write_str(&out)
    }
}

/// trop(f) together with the monomials whose coefficient vanished within
/// truncation (and were therefore dropped without a definite value).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropEquation {
    pub poly: DiffPoly,
    pub caveats: Vec<DiffMonomial>,
}

pub fn trop_equation(f: &RatDiffPoly, e: &EnhancedSeminorm) -> Result<TropEquation> {
    let mut poly = DiffPoly::zero(e.target());
    let mut caveats = Vec::new();
    for (m, c) in &f.terms {
        let v = value(c, e)?;
        if v.caveat.is_some() {
            caveats.push(m.clone());
        } else if !v.value.is_zero() {
            poly.add_term(m.clone(), v.value)?;
        }
    }
    Ok(TropEquation { poly, caveats })
}

/// f(x) in ℚ[[t]] at the given point.
pub fn eval_rat_poly(f: &RatDiffPoly, point: &[RatSeries]) -> Result<RatSeries> {
    let mut sum = RatSeries::zero(None);
    for (m, c) in &f.terms {
        let mut term = c.clone();
        for (var, order, mult) in m.factors() {
            let x = point
                .get(var)
                .ok_or_else(|| Error::InvalidValue(format!("no value supplied for x{}", var + 1)))?;
            term = term.mul(&x.ddt_n(order)?.pow(mult));
        }
        sum = sum.add(&term);
    }
    Ok(sum)
}

/// (s+1)(s+2)…(s+i): the factor that d^i applies to t^{s+i}.
fn rising(s: u32, i: u32) -> Rational {
    (1..=i).fold(Rational::one(), |acc, k| acc * int(i64::from(s + k)))
}

/// Solves Σ cᵢ(t) x^(i) = 0 by coefficient recursion from the initial
/// coefficients x_0..x_{m−1}. The result is known through degree `deg`, or
/// less if some cᵢ is not known far enough.
pub fn solve_linear_ode(coeffs: &[RatSeries], init: &[Rational], deg: u32) -> Result<RatSeries> {
    let Some((lead, rest)) = coeffs.split_last() else {
        return Err(Error::UnsupportedEquation("empty equation".into()));
    };
    let m = rest.len() as u32;
    if init.len() != m as usize {
        return Err(Error::UnsupportedEquation(format!("order {m} equation needs {m} initial coefficients")));
    }
    let lead0 = lead.coeff(0).unwrap_or_else(Rational::zero);
    if lead0.is_zero() {
        return Err(Error::UnsupportedEquation("leading coefficient vanishes at t = 0".into()));
    }
    let known = coeffs.iter().filter_map(|c| c.trunc).min();
    let top = match known {
        Some(k) => deg.min(k.saturating_add(m)),
        None => deg,
    };
    let mut x: Vec<Rational> = init.to_vec();
    for k in 0..=top.saturating_sub(m) {
        if k + m > top {
            break;
        }
        // coefficient of t^k in Σ cᵢ x^(i), leaving out c_m(0)·x_{k+m}
        let mut acc = Rational::zero();
        for (i, c) in coeffs.iter().enumerate() {
            let i = i as u32;
            for (l, cl) in c.coeffs.range(..=k) {
                let s = k - l;
                if i == m && *l == 0 {
                    continue;
                }
                acc += cl * rising(s, i) * &x[(s + i) as usize];
            }
        }
        x.push(-acc / (&lead0 * rising(k, m)));
    }
    x.truncate(top as usize + 1);
    Ok(RatSeries::from_coeffs(x.into_iter().enumerate().map(|(d, q)| (d as u32, q)), Some(top)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::rat;

    fn poly(coeffs: &[(u32, i64, i64)]) -> RatSeries {
        RatSeries::from_coeffs(coeffs.iter().map(|&(d, n, q)| (d, rat(n, q))), None)
    }

    fn factorial(n: u32) -> Rational {
        rising(0, n)
    }

    #[test]
    fn ring_arithmetic() {
        let a = poly(&[(0, 1, 1), (1, 1, 1)]);
        let b = poly(&[(0, 1, 1), (1, -1, 1)]);
        assert_eq!(a.mul(&b), poly(&[(0, 1, 1), (2, -1, 1)]));
        assert_eq!(poly(&[(3, 1, 1)]).ddt().unwrap(), poly(&[(2, 3, 1)]));
        assert!(poly(&[(0, 5, 1)]).ddt().unwrap().is_exact_zero());
        assert!(matches!(RatSeries::one(Some(0)).ddt(), Err(Error::TruncationExhausted(0))));
    }

    #[test]
    fn truncated_product_is_tight() {
        let a = RatSeries::from_coeffs([(2, int(1))], Some(5));
        let b = RatSeries::from_coeffs([(0, int(1))], Some(3));
        assert_eq!(a.mul(&b).trunc(), Some(5));
    }

    #[test]
    fn padic_norms() {
        assert_eq!(padic_norm(&int(8), 2).unwrap().value(), &rat(1, 8));
        assert_eq!(padic_norm(&rat(1, 4), 2).unwrap().value(), &int(4));
        assert_eq!(padic_norm(&int(3), 2).unwrap().value(), &int(1));
        assert!(padic_norm(&int(0), 2).unwrap().value().is_zero());
        assert_eq!(padic_norm(&rat(-9, 2), 3).unwrap().value(), &rat(1, 9));
        assert!(matches!(padic_norm(&int(3), 4), Err(Error::NotPrime(4))));
    }

    #[test]
    fn enhancements() {
        let g = EnhancedSeminorm::Grigoriev;
        assert_eq!(enhance(&poly(&[(0, 1, 1), (2, -1, 1)]), &g).unwrap(), TruncSeries::support(&[0, 2], None));
        let p2 = EnhancedSeminorm::padic_rank2(2).unwrap();
        let a = poly(&[(0, 1, 1), (1, 2, 1), (2, 1, 2)]);
        let expect = TruncSeries::positive(&[(0, int(1)), (1, rat(1, 2)), (2, int(2))], None).unwrap();
        assert_eq!(enhance(&a, &p2).unwrap(), expect);
        assert!(enhance(&RatSeries::zero(None), &p2).unwrap().is_exact_zero());
    }

    #[test]
    fn values() {
        let g = EnhancedSeminorm::Grigoriev;
        let p2 = EnhancedSeminorm::PAdicRank2(2);
        assert_eq!(value(&poly(&[(3, 1, 1), (7, 1, 1)]), &g).unwrap().value, SemiringValue::trop(int(3)));
        assert_eq!(
            value(&poly(&[(2, 8, 1), (3, 1, 1)]), &p2).unwrap().value,
            SemiringValue::rank2(int(2), rat(1, 8)).unwrap()
        );
        assert_eq!(value(&RatSeries::one(None), &p2).unwrap().value, SemiringValue::one(SemiringKind::Rank2));
        let empty = value(&RatSeries::zero(Some(4)), &p2).unwrap();
        assert_eq!(empty.caveat, Some(5));
    }

    #[test]
    fn grigoriev_is_not_multiplicative() {
        let g = EnhancedSeminorm::Grigoriev;
        let a = poly(&[(0, 1, 1), (1, 1, 1)]);
        let b = poly(&[(0, 1, 1), (1, -1, 1)]);
        let lhs = enhance(&a.mul(&b), &g).unwrap();
        let rhs = enhance(&a, &g).unwrap().mul(&enhance(&b, &g).unwrap()).unwrap();
        assert_eq!(lhs, TruncSeries::support(&[0, 2], None));
        assert_eq!(rhs, TruncSeries::support(&[0, 1, 2], None));
    }

    #[test]
    fn axioms_on_listed_samples() {
        let samples = vec![
            poly(&[(0, 1, 1), (1, 1, 1)]),
            poly(&[(0, -1, 1), (1, 1, 1)]),
            poly(&[(2, 8, 1), (3, 1, 1)]),
            poly(&[(0, 3, 4)]),
        ];
        for e in [EnhancedSeminorm::Grigoriev, EnhancedSeminorm::PAdicRank2(2), EnhancedSeminorm::PAdicRank2(3)] {
            let r = check_seminorm_axioms(&e, &samples).unwrap();
            assert!(r.passed(), "{e}: {:?}", r.first_failure);
        }
    }

    #[test]
    fn commutation_examples() {
        let p2 = EnhancedSeminorm::PAdicRank2(2);
        let t2 = poly(&[(2, 1, 1)]);
        assert_eq!(
            enhance(&t2.ddt().unwrap(), &p2).unwrap(),
            TruncSeries::positive(&[(1, rat(1, 2))], None).unwrap()
        );
        let samples = vec![t2, poly(&[(0, 7, 1)]), poly(&[(3, 1, 1)]), poly(&[(0, 1, 1), (4, 2, 3)]).truncate(6)];
        for e in [EnhancedSeminorm::Grigoriev, p2, EnhancedSeminorm::PAdicRank2(3)] {
            assert!(check_enhancement_commutes(&e, &samples).unwrap().passed());
        }
    }

    #[test]
    fn tropicalized_equations() {
        let p2 = EnhancedSeminorm::PAdicRank2(2);
        let f = RatDiffPoly::linear_ode(&[poly(&[(0, -1, 1)]), RatSeries::zero(None), poly(&[(0, 1, 1)])]);
        let trop = trop_equation(&f, &p2).unwrap();
        let one = SemiringValue::one(SemiringKind::Rank2);
        let expect = DiffPoly::from_terms(
            SemiringKind::Rank2,
            [(DiffMonomial::var(0, 0), one.clone()), (DiffMonomial::var(0, 2), one)],
        )
        .unwrap();
        assert_eq!(trop.poly, expect);
        assert!(trop.caveats.is_empty());

        let f = RatDiffPoly::from_terms([(DiffMonomial::var(0, 1), poly(&[(0, 4, 1)]))]);
        let trop = trop_equation(&f, &p2).unwrap();
        assert_eq!(trop.poly.terms()[&DiffMonomial::var(0, 1)], SemiringValue::rank2(int(0), rat(1, 4)).unwrap());
        assert!(trop_equation(&RatDiffPoly::zero(), &p2).unwrap().poly.is_zero());
    }

    #[test]
    fn exponential_and_sine() {
        let one = poly(&[(0, 1, 1)]);
        let exp = solve_linear_ode(&[one.neg(), one.clone()], &[int(1)], 8).unwrap();
        for n in 0..=8 {
            assert_eq!(exp.coeff(n).unwrap(), Rational::one() / factorial(n));
        }
        let sin = solve_linear_ode(&[one.clone(), RatSeries::zero(None), one.clone()], &[int(0), int(1)], 9).unwrap();
        for k in 0..=4u32 {
            let sign = if k % 2 == 0 { int(1) } else { int(-1) };
            assert_eq!(sin.coeff(2 * k + 1).unwrap(), sign / factorial(2 * k + 1));
            assert!(sin.coeff(2 * k).unwrap().is_zero());
        }
        let c = solve_linear_ode(&[RatSeries::zero(None), one.clone()], &[int(5)], 6).unwrap();
        assert_eq!(c, RatSeries::constant(int(5), Some(6)));
    }

    #[test]
    fn solution_satisfies_equation() {
        // (1 + t) x' - x = 0
        let coeffs = [poly(&[(0, -1, 1)]), poly(&[(0, 1, 1), (1, 1, 1)])];
        let x = solve_linear_ode(&coeffs, &[int(1)], 10).unwrap();
        let residual = eval_rat_poly(&RatDiffPoly::linear_ode(&coeffs), &[x]).unwrap();
        assert!(residual.is_empty());
        assert_eq!(residual.trunc(), Some(9));
    }

    #[test]
    fn singular_leading_coefficient() {
        let t = poly(&[(1, 1, 1)]);
        assert!(matches!(
            solve_linear_ode(&[poly(&[(0, 1, 1)]), t], &[int(1)], 5),
            Err(Error::UnsupportedEquation(_))
        ));
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[(0, 1, 1), (1, 2, 1), (2, 1, 2)]).to_string(), "1 + 2t + (1/2)t^2");
        assert_eq!(poly(&[(1, -1, 1), (3, 1, 6)]).truncate(4).to_string(), "-t + (1/6)t^3 + O(t^5)");
        let f = RatDiffPoly::linear_ode(&[poly(&[(0, -1, 1)]), RatSeries::zero(None), poly(&[(0, 1, 1)])]);
        assert_eq!(f.to_string(), "-x1 + x1''");
    }
}

//! Truncated power series over a coefficient semiring, tropical
//! differentials on them, and the projections that turn a series semiring
//! into a tropical pair.
//!
//! A series is known through `trunc` (`None` means it is an exact
//! polynomial). Coefficients above the truncation degree are unknown, not
//! zero, and every operation returns the tightest truncation it can prove.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::semiring::{fmt_exp, fmt_rational, int, rat, Rational, SemiringKind, SemiringValue};

pub const DEFAULT_TRUNC: u32 = 16;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Exponent of `p` in `n` (n > 0).
pub(crate) fn multiplicity(mut n: u64, p: u64) -> u32 {
    let mut k = 0;
    while n.is_multiple_of(p) {
        n /= p;
        k += 1;
    }
    k
}

/// A non-archimedean seminorm ℕ → 𝕋 used to weight the differential.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NatNorm {
    /// |n|_p = p^(−v_p(n)).
    PAdic(u64),
    /// 0 when p divides n, 1 otherwise.
    Degenerate(u64),
}

impl NatNorm {
    pub fn padic(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(NatNorm::PAdic(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn degenerate(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(NatNorm::Degenerate(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn prime(&self) -> u64 {
        match *self {
            NatNorm::PAdic(p) | NatNorm::Degenerate(p) => p,
        }
    }

    pub fn weight(&self, n: u64) -> Rational {
        if n == 0 {
            return Rational::zero();
        }
        match *self {
            NatNorm::PAdic(p) => {
                let k = multiplicity(n, p);
                rat(1, 1) / Rational::from_integer(num_bigint::BigInt::from(p).pow(k))
            }
            NatNorm::Degenerate(p) => {
                if n.is_multiple_of(p) {
                    Rational::zero()
                } else {
                    Rational::one()
                }
            }
        }
    }

    /// True when j consecutive weights always contain a zero, i.e. the j-fold
    /// derivative annihilates every monomial.
    pub fn kills_order(&self, j: u32) -> bool {
        match *self {
            NatNorm::PAdic(_) => false,
            NatNorm::Degenerate(p) => u64::from(j) >= p,
        }
    }
}

impl fmt::Display for NatNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NatNorm::PAdic(p) => write!(f, "|.|_{p}"),
            NatNorm::Degenerate(p) => write!(f, "degenerate |.|_{p}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SeriesDifferential {
    /// tⁿ ↦ tⁿ⁻¹.
    StrictShift,
    /// tⁿ ↦ v(n)·tⁿ⁻¹.
    Weighted(NatNorm),
}

impl SeriesDifferential {
    pub fn weight(&self, n: u64) -> Rational {
        match self {
            _ if n == 0 => Rational::zero(),
            SeriesDifferential::StrictShift => Rational::one(),
            SeriesDifferential::Weighted(norm) => norm.weight(n),
        }
    }

    /// Product of the weights picked up by tⁿ under j differentiations.
    pub fn weight_run(&self, n: u64, j: u32) -> Rational {
        let mut w = Rational::one();
        for i in 0..u64::from(j) {
            if n < i + 1 {
                return Rational::zero();
            }
            w *= self.weight(n - i);
        }
        w
    }

    pub fn kills_order(&self, j: u32) -> bool {
        match self {
            SeriesDifferential::StrictShift => false,
            SeriesDifferential::Weighted(norm) => norm.kills_order(j),
        }
    }
}

/// Multiplies a coefficient by a norm weight inside its own semiring.
fn scale(value: &SemiringValue, weight: &Rational) -> Result<Option<SemiringValue>> {
    if weight.is_zero() {
        return Ok(None);
    }
    let scaled = match value {
        SemiringValue::Bool(_) => value.clone(),
        SemiringValue::PosRat(_) => value.mul(&SemiringValue::pos(weight.clone())?)?,
        SemiringValue::Rank2(_) => value.mul(&SemiringValue::rank2(Rational::zero(), weight.clone())?)?,
        SemiringValue::TropExp(_) if weight.is_one() => value.clone(),
        SemiringValue::TropExp(_) => {
            return Err(Error::InvalidValue(format!(
                "weight {weight} is not a pure exponential and cannot scale a 𝕋 coefficient"
            )))
        }
    };
    Ok((!scaled.is_zero()).then_some(scaled))
}

pub(crate) fn add_trunc(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    kind: SemiringKind,
    coeffs: BTreeMap<u32, SemiringValue>,
    trunc: Option<u32>,
}

impl TruncSeries {
    pub fn zero(kind: SemiringKind, trunc: Option<u32>) -> Self {
        TruncSeries { kind, coeffs: BTreeMap::new(), trunc }
    }

    pub fn one(kind: SemiringKind, trunc: Option<u32>) -> Self {
        Self::constant(SemiringValue::one(kind), trunc)
    }

    pub fn constant(value: SemiringValue, trunc: Option<u32>) -> Self {
        let mut s = Self::zero(value.kind(), trunc);
        if !value.is_zero() {
            s.coeffs.insert(0, value);
        }
        s
    }

    /// Builds a series; repeated degrees are combined with ⊕, zero
    /// coefficients and degrees beyond `trunc` are dropped.
    pub fn from_coeffs<I>(kind: SemiringKind, coeffs: I, trunc: Option<u32>) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, SemiringValue)>,
    {
        let mut s = Self::zero(kind, trunc);
        for (deg, value) in coeffs {
            if value.kind() != kind {
                return Err(Error::TagMismatch { left: kind, right: value.kind() });
            }
            if trunc.is_some_and(|t| deg > t) {
                continue;
            }
            let merged = match s.coeffs.remove(&deg) {
                Some(prev) => prev.add(&value)?,
                None => value,
            };
            if !merged.is_zero() {
                s.coeffs.insert(deg, merged);
            }
        }
        Ok(s)
    }

    /// Boolean series with the given support.
    pub fn support(degrees: &[u32], trunc: Option<u32>) -> Self {
        let ones = degrees.iter().map(|&d| (d, SemiringValue::boolean(true)));
        Self::from_coeffs(SemiringKind::Bool, ones, trunc).expect("boolean coefficients")
    }

    /// Series with nonnegative rational (𝕋) coefficients.
    pub fn positive(coeffs: &[(u32, Rational)], trunc: Option<u32>) -> Result<Self> {
        let values = coeffs
            .iter()
            .map(|(d, q)| SemiringValue::pos(q.clone()).map(|v| (*d, v)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_coeffs(SemiringKind::PosRat, values, trunc)
    }

    pub fn kind(&self) -> SemiringKind {
        self.kind
    }

    pub fn trunc(&self) -> Option<u32> {
        self.trunc
    }

    pub fn is_exact(&self) -> bool {
        self.trunc.is_none()
    }

    pub fn coeffs(&self) -> &BTreeMap<u32, SemiringValue> {
        &self.coeffs
    }

    /// Coefficient at `deg`, or `None` when it lies beyond the truncation.
    pub fn coeff(&self, deg: u32) -> Option<SemiringValue> {
        if self.trunc.is_some_and(|t| deg > t) {
            return None;
        }
        Some(self.coeffs.get(&deg).cloned().unwrap_or_else(|| SemiringValue::zero(self.kind)))
    }

    pub fn support_degrees(&self) -> Vec<u32> {
        self.coeffs.keys().copied().collect()
    }

    pub fn leading(&self) -> Option<(u32, &SemiringValue)> {
        self.coeffs.iter().next().map(|(d, v)| (*d, v))
    }

    /// No coefficient is known to be nonzero.
    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.coeffs.is_empty() && self.trunc.is_none()
    }

    /// Lower bound on the true leading degree: the leading degree if one is
    /// known, `trunc + 1` for a series empty within truncation, `None` for
    /// the exact zero series.
    pub fn lead_bound(&self) -> Option<u64> {
        match (self.leading(), self.trunc) {
            (Some((d, _)), _) => Some(u64::from(d)),
            (None, Some(t)) => Some(u64::from(t) + 1),
            (None, None) => None,
        }
    }

    /// Restricts knowledge to degrees ≤ `trunc`.
    pub fn truncate(&self, trunc: u32) -> Self {
        let t = match self.trunc {
            Some(cur) => cur.min(trunc),
            None => trunc,
        };
        TruncSeries {
            kind: self.kind,
            coeffs: self.coeffs.range(..=t).map(|(d, v)| (*d, v.clone())).collect(),
            trunc: Some(t),
        }
    }

    fn check_kind(&self, other: &Self) -> Result<()> {
        if self.kind != other.kind {
            return Err(Error::TagMismatch { left: self.kind, right: other.kind });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_kind(other)?;
        let trunc = add_trunc(self.trunc, other.trunc);
        let mut out = Self::zero(self.kind, trunc);
        for (d, v) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if trunc.is_some_and(|t| *d > t) {
                continue;
            }
            let merged = match out.coeffs.remove(d) {
                Some(prev) => prev.add(v)?,
                None => v.clone(),
            };
            out.coeffs.insert(*d, merged);
        }
        Ok(out)
    }

    /// Cauchy product; the truncation is the largest degree whose
    /// coefficient only involves known coefficients of both factors.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_kind(other)?;
        let bound = |t: Option<u32>, lead: Option<u64>| -> Option<u64> {
            match (t, lead) {
                (Some(t), Some(l)) => Some(u64::from(t) + l),
                _ => None,
            }
        };
        let trunc = match (
            bound(self.trunc, other.lead_bound()),
            bound(other.trunc, self.lead_bound()),
        ) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, None) => a,
            (None, b) => b,
        }
        .map(|t| u32::try_from(t).unwrap_or(u32::MAX));
        let mut out = Self::zero(self.kind, trunc);
        for (da, va) in &self.coeffs {
            for (db, vb) in &other.coeffs {
                let d = da + db;
                if trunc.is_some_and(|t| d > t) {
                    continue;
                }
                let prod = va.mul(vb)?;
                if prod.is_zero() {
                    continue;
                }
                let merged = match out.coeffs.remove(&d) {
                    Some(prev) => prev.add(&prod)?,
                    None => prod,
                };
                out.coeffs.insert(d, merged);
            }
        }
        Ok(out)
    }

    pub fn differentiate(&self, d: &SeriesDifferential) -> Result<Self> {
        let trunc = match self.trunc {
            Some(0) => return Err(Error::TruncationExhausted(0)),
            Some(t) => Some(t - 1),
            None => None,
        };
        let mut out = Self::zero(self.kind, trunc);
        for (deg, v) in &self.coeffs {
            if *deg == 0 {
                continue;
            }
            if let Some(scaled) = scale(v, &d.weight(u64::from(*deg)))? {
                out.coeffs.insert(deg - 1, scaled);
            }
        }
        Ok(out)
    }

    pub fn differentiate_n(&self, d: &SeriesDifferential, n: u32) -> Result<Self> {
        let mut s = self.clone();
        for _ in 0..n {
            s = s.differentiate(d)?;
        }
        Ok(s)
    }

    /// Keeps the support, forgetting coefficient values (𝕋[[t]] → 𝔹[[t]]).
    pub fn to_support(&self) -> Self {
        TruncSeries {
            kind: SemiringKind::Bool,
            coeffs: self.coeffs.keys().map(|d| (*d, SemiringValue::boolean(true))).collect(),
            trunc: self.trunc,
        }
    }
}

/// Bend relations of a sum of series, checked coefficientwise on the
/// degrees known in every term.
pub fn trop_vanishes_series(terms: &[TruncSeries]) -> Result<bool> {
    let first = terms.first().ok_or(Error::EmptyTerms)?;
    for t in &terms[1..] {
        first.check_kind(t)?;
    }
    let trunc = terms.iter().fold(None, |acc, t| add_trunc(acc, t.trunc));
    let mut degrees: Vec<u32> = terms.iter().flat_map(|t| t.coeffs.keys().copied()).collect();
    degrees.sort_unstable();
    degrees.dedup();
    for deg in degrees {
        if trunc.is_some_and(|t| deg > t) {
            break;
        }
        let column: Vec<SemiringValue> =
            terms.iter().map(|t| t.coeff(deg).expect("within truncation")).collect();
        if !crate::semiring::trop_vanishes(&column)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProjectionKind {
    /// Leading exponent n ↦ e⁻ⁿ ∈ 𝕋.
    BooleanLeadingExponent,
    /// Leading term a·tⁿ ↦ (e⁻ⁿ, a) ∈ 𝕋₂.
    Rank2LeadingTerm,
}

/// A tropical pair S₁ = (coefficient semiring)[[t]] with a differential,
/// projected onto S₀ by `pi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PairDescriptor {
    coeff_kind: SemiringKind,
    differential: SeriesDifferential,
    pi: ProjectionKind,
}

impl PairDescriptor {
    pub fn new(coeff_kind: SemiringKind, differential: SeriesDifferential, pi: ProjectionKind) -> Result<Self> {
        match (pi, coeff_kind) {
            (ProjectionKind::Rank2LeadingTerm, SemiringKind::PosRat | SemiringKind::Bool) => {}
            (ProjectionKind::BooleanLeadingExponent, _) => {}
            (_, k) => {
                return Err(Error::InvalidValue(format!(
                    "leading-term projection to 𝕋₂ needs 𝕋 or 𝔹 coefficients, not {k}"
                )))
            }
        }
        if coeff_kind == SemiringKind::TropExp {
            if let SeriesDifferential::Weighted(NatNorm::PAdic(_)) = differential {
                return Err(Error::InvalidValue(
                    "p-adic weights are not pure exponentials; use rational coefficients".into(),
                ));
            }
        }
        Ok(PairDescriptor { coeff_kind, differential, pi })
    }

    /// 𝔹[[t]] with tⁿ ↦ tⁿ⁻¹, projected to 𝕋 by the leading exponent.
    pub fn grigoriev() -> Self {
        PairDescriptor {
            coeff_kind: SemiringKind::Bool,
            differential: SeriesDifferential::StrictShift,
            pi: ProjectionKind::BooleanLeadingExponent,
        }
    }

    /// 𝕋[[t]] with the weighted differential d_v, projected to 𝕋₂.
    pub fn rank2(norm: NatNorm) -> Self {
        PairDescriptor {
            coeff_kind: SemiringKind::PosRat,
            differential: SeriesDifferential::Weighted(norm),
            pi: ProjectionKind::Rank2LeadingTerm,
        }
    }

    pub fn coeff_kind(&self) -> SemiringKind {
        self.coeff_kind
    }

    pub fn differential(&self) -> &SeriesDifferential {
        &self.differential
    }

    pub fn pi(&self) -> ProjectionKind {
        self.pi
    }

    /// The semiring S₀.
    pub fn target(&self) -> SemiringKind {
        match self.pi {
            ProjectionKind::BooleanLeadingExponent => SemiringKind::TropExp,
            ProjectionKind::Rank2LeadingTerm => SemiringKind::Rank2,
        }
    }
}

/// The image of a series under π. `caveat` is set when the series has no
/// known nonzero coefficient: the value is then reported as 0, but the true
/// leading degree could be any degree ≥ the stored bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    pub value: SemiringValue,
    pub caveat: Option<u64>,
}

impl Projection {
    /// Whether the two underlying series certainly project to different
    /// values. A caveated side is 0 or has leading degree ≥ its bound, so it
    /// differs from any known nonzero value of smaller order.
    pub fn certainly_differs(&self, other: &Projection) -> bool {
        let below = |p: &Projection, bound: u64| {
            p.caveat.is_none() && p.value.t_order().is_some_and(|o| *o < int(bound as i64))
        };
        match (self.caveat, other.caveat) {
            (None, None) => self.value != other.value,
            (Some(c), None) => below(other, c),
            (None, Some(c)) => below(self, c),
            (Some(_), Some(_)) => false,
        }
    }
}

pub fn project(a: &TruncSeries, pair: &PairDescriptor) -> Result<Projection> {
    if a.kind() != pair.coeff_kind {
        return Err(Error::TagMismatch { left: a.kind(), right: pair.coeff_kind });
    }
    let Some((deg, lead)) = a.leading() else {
        return Ok(Projection {
            value: SemiringValue::zero(pair.target()),
            caveat: a.trunc.map(|t| u64::from(t) + 1),
        });
    };
    let order = int(i64::from(deg));
    let value = match pair.pi {
        ProjectionKind::BooleanLeadingExponent => SemiringValue::trop(order),
        ProjectionKind::Rank2LeadingTerm => {
            let coeff = match lead {
                SemiringValue::PosRat(p) => p.value().clone(),
                SemiringValue::Bool(_) => Rational::one(),
                other => return Err(Error::TagMismatch { left: other.kind(), right: SemiringKind::PosRat }),
            };
            SemiringValue::rank2(order, coeff)?
        }
    };
    Ok(Projection { value, caveat: None })
}

/// Least n with π(dⁿa) ≠ π(dⁿb) certainly, searched while both derivatives
/// stay within truncation.
pub fn separating_derivative_order(
    a: &TruncSeries,
    b: &TruncSeries,
    pair: &PairDescriptor,
) -> Result<Option<u32>> {
    a.check_kind(b)?;
    let limit = match add_trunc(a.trunc, b.trunc) {
        Some(t) => t,
        None => {
            let top = a.coeffs.keys().chain(b.coeffs.keys()).max().copied().unwrap_or(0);
            top + 1
        }
    };
    let d = pair.differential;
    let (mut da, mut db) = (a.clone(), b.clone());
    for n in 0..=limit {
        let (pa, pb) = (project(&da, pair)?, project(&db, pair)?);
        if pa.certainly_differs(&pb) {
            return Ok(Some(n));
        }
        if n == limit || da.trunc == Some(0) || db.trunc == Some(0) {
            break;
        }
        da = da.differentiate(&d)?;
        db = db.differentiate(&d)?;
    }
    Ok(None)
}

/// The least degree at which two series have different known coefficients.
pub fn first_differing_degree(a: &TruncSeries, b: &TruncSeries) -> Option<u32> {
    let top = a.coeffs.keys().chain(b.coeffs.keys()).copied().collect::<Vec<_>>();
    let trunc = add_trunc(a.trunc, b.trunc);
    let mut degrees = top;
    degrees.sort_unstable();
    degrees.dedup();
    degrees
        .into_iter()
        .take_while(|d| trunc.is_none_or(|t| *d <= t))
        .find(|d| a.coeffs.get(d) != b.coeffs.get(d))
}

fn fmt_coeff_prefix(v: &SemiringValue, with_t: bool) -> String {
    match v {
        SemiringValue::Bool(_) if with_t => String::new(),
        SemiringValue::Bool(_) => "1".into(),
        SemiringValue::PosRat(p) => {
            let q = p.value();
            if with_t && q.is_one() {
                String::new()
            } else if q.is_integer() || !with_t {
                fmt_rational(q)
            } else {
                format!("({})", fmt_rational(q))
            }
        }
        SemiringValue::TropExp(t) => {
            let order = t.order().expect("nonzero");
            if with_t && order.is_zero() {
                String::new()
            } else if with_t {
                format!("({})", fmt_exp(order))
            } else {
                fmt_exp(order)
            }
        }
        SemiringValue::Rank2(_) if with_t && v.is_one() => String::new(),
        SemiringValue::Rank2(_) => v.to_string(),
    }
}

pub(crate) fn fmt_monomial_t(deg: u32) -> String {
    match deg {
        1 => "t".into(),
        d => format!("t^{d}"),
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(d, v)| {
                if *d == 0 {
                    fmt_coeff_prefix(v, false)
                } else {
                    format!("{}{}", fmt_coeff_prefix(v, true), fmt_monomial_t(*d))
                }
            })
            .collect();
        if let Some(t) = self.trunc {
            parts.push(format!("O({})", fmt_monomial_t(t + 1)));
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" + "))
    }
}

/// Checks `n` against the seminorm conditions on ℕ ⊂ ℚ: multiplicativity
/// and the ultrametric inequality on all pairs up to `up_to`.
pub fn check_nat_norm(norm: &NatNorm, up_to: u64) -> std::result::Result<(), String> {
    let v = |n: u64| if n == 0 { Rational::zero() } else { norm.weight(n) };
    if !v(1).is_one() {
        return Err("v(1) ≠ 1".into());
    }
    for a in 0..=up_to {
        for b in 0..=up_to {
            if v(a * b) != v(a) * v(b) {
                return Err(format!("v({a}·{b}) ≠ v({a})·v({b})"));
            }
            let bound = v(a).max(v(b));
            if v(a + b) > bound {
                return Err(format!("v({a}+{b}) exceeds v({a}) ⊕ v({b})"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::int;

    fn pos(q: Rational) -> SemiringValue {
        SemiringValue::pos(q).unwrap()
    }

    #[test]
    fn boolean_minkowski_product() {
        let a = TruncSeries::support(&[0, 2], None);
        let b = TruncSeries::support(&[1], None);
        assert_eq!(a.mul(&b).unwrap(), TruncSeries::support(&[1, 3], None));
    }

    #[test]
    fn tropical_square_of_one_plus_t() {
        let a = TruncSeries::positive(&[(0, int(1)), (1, int(1))], None).unwrap();
        let sq = a.mul(&a).unwrap();
        let expected = TruncSeries::positive(&[(0, int(1)), (1, int(1)), (2, int(1))], None).unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn idempotent_addition() {
        let a = TruncSeries::positive(&[(0, int(3)), (4, rat(1, 2))], Some(8)).unwrap();
        assert_eq!(a.add(&a).unwrap(), a);
    }

    #[test]
    fn product_truncation_is_tight() {
        // t·(1 + O(t^4)) is known through degree 4
        let a = TruncSeries::support(&[1], None);
        let b = TruncSeries::support(&[0], Some(3));
        assert_eq!(a.mul(&b).unwrap().trunc(), Some(4));
        // exact zero annihilates truncation
        let z = TruncSeries::zero(SemiringKind::Bool, None);
        assert!(z.mul(&b).unwrap().is_exact_zero());
        // two truncated series
        let c = TruncSeries::support(&[2], Some(5));
        assert_eq!(b.mul(&c).unwrap().trunc(), Some(5));
    }

    #[test]
    fn weighted_two_adic_derivatives() {
        // x = 1 + αt + βt² + γt³ + δt⁴ + εt⁵ with distinct primes as symbols
        let (a, b, c, d, e) = (int(3), int(5), int(7), int(11), int(13));
        let x = TruncSeries::positive(
            &[(0, int(1)), (1, a.clone()), (2, b.clone()), (3, c.clone()), (4, d.clone()), (5, e.clone())],
            Some(5),
        )
        .unwrap();
        let dv = SeriesDifferential::Weighted(NatNorm::PAdic(2));
        let x1 = x.differentiate(&dv).unwrap();
        let expected1 = TruncSeries::positive(
            &[(0, a), (1, &b / int(2)), (2, c.clone()), (3, &d / int(4)), (4, e.clone())],
            Some(4),
        )
        .unwrap();
        assert_eq!(x1, expected1);
        let x2 = x1.differentiate(&dv).unwrap();
        let expected2 = TruncSeries::positive(
            &[(0, &b / int(2)), (1, &c / int(2)), (2, &d / int(4)), (3, &e / int(4))],
            Some(3),
        )
        .unwrap();
        assert_eq!(x2, expected2);
    }

    #[test]
    fn derivative_of_constant_and_degenerate_kill() {
        let one = TruncSeries::support(&[0], None);
        assert!(one.differentiate(&SeriesDifferential::StrictShift).unwrap().is_exact_zero());
        let t2 = TruncSeries::positive(&[(2, int(1))], None).unwrap();
        let degenerate = SeriesDifferential::Weighted(NatNorm::Degenerate(2));
        assert!(t2.differentiate(&degenerate).unwrap().is_exact_zero());
    }

    #[test]
    fn differentiating_at_truncation_zero_fails() {
        let s = TruncSeries::support(&[0], Some(0));
        assert_eq!(
            s.differentiate(&SeriesDifferential::StrictShift),
            Err(Error::TruncationExhausted(0))
        );
    }

    #[test]
    fn projections() {
        let pair = PairDescriptor::rank2(NatNorm::PAdic(2));
        let x = TruncSeries::positive(&[(0, int(1)), (2, rat(1, 2))], Some(16)).unwrap();
        assert_eq!(project(&x, &pair).unwrap().value, SemiringValue::rank2(int(0), int(1)).unwrap());
        let dx = x.differentiate(pair.differential()).unwrap();
        assert_eq!(project(&dx, &pair).unwrap().value, SemiringValue::rank2(int(1), rat(1, 4)).unwrap());

        let b = TruncSeries::support(&[3, 5], Some(10));
        assert_eq!(project(&b, &PairDescriptor::grigoriev()).unwrap().value, SemiringValue::trop(int(3)));

        let empty = TruncSeries::zero(SemiringKind::Bool, Some(4));
        let p = project(&empty, &PairDescriptor::grigoriev()).unwrap();
        assert!(p.value.is_zero());
        assert_eq!(p.caveat, Some(5));
        let exact = TruncSeries::zero(SemiringKind::Bool, None);
        assert_eq!(project(&exact, &PairDescriptor::grigoriev()).unwrap().caveat, None);
    }

    #[test]
    fn separating_orders() {
        let pair = PairDescriptor::grigoriev();
        let a = TruncSeries::support(&[0, 2], Some(10));
        let b = TruncSeries::support(&[0, 3], Some(10));
        // brute force: n=0 gives e^0 vs e^0, n=1 gives e^-1 vs e^-2
        assert_eq!(separating_derivative_order(&a, &b, &pair).unwrap(), Some(1));
        // the first differing coefficient also separates
        let n = first_differing_degree(&a, &b).unwrap();
        assert_eq!(n, 2);
        let d = pair.differential();
        assert_ne!(
            project(&a.differentiate_n(d, n).unwrap(), &pair).unwrap(),
            project(&b.differentiate_n(d, n).unwrap(), &pair).unwrap()
        );
        assert_eq!(separating_derivative_order(&a, &a, &pair).unwrap(), None);
        let c = TruncSeries::support(&[1], Some(10));
        let e = TruncSeries::support(&[2], Some(10));
        assert_eq!(separating_derivative_order(&c, &e, &pair).unwrap(), Some(0));
    }

    #[test]
    fn leibniz_on_monomials() {
        let dv = SeriesDifferential::Weighted(NatNorm::PAdic(2));
        for n in 0..6u32 {
            for m in 0..6u32 {
                let a = TruncSeries::positive(&[(n, int(1))], None).unwrap();
                let b = TruncSeries::positive(&[(m, int(1))], None).unwrap();
                let lhs = a.mul(&b).unwrap().differentiate(&dv).unwrap();
                let t1 = a.mul(&b.differentiate(&dv).unwrap()).unwrap();
                let t2 = b.mul(&a.differentiate(&dv).unwrap()).unwrap();
                assert!(trop_vanishes_series(&[lhs, t1, t2]).unwrap(), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn nat_norms_are_seminorms() {
        for p in [2, 3, 5] {
            check_nat_norm(&NatNorm::PAdic(p), 30).unwrap();
            check_nat_norm(&NatNorm::Degenerate(p), 30).unwrap();
        }
        assert_eq!(NatNorm::padic(4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn display() {
        let x = TruncSeries::positive(&[(0, int(1)), (2, rat(1, 2)), (5, int(8))], Some(16)).unwrap();
        assert_eq!(x.to_string(), "1 + (1/2)t^2 + 8t^5 + O(t^17)");
        assert_eq!(TruncSeries::support(&[0, 1], None).to_string(), "1 + t");
        assert_eq!(TruncSeries::zero(SemiringKind::Bool, Some(3)).to_string(), "O(t^4)");
        let _ = pos(int(1));
    }
}

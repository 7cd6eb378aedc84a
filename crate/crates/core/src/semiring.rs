//! Concrete idempotent semirings with exact arithmetic.
//!
//! | Type       | ⊕                         | ⊗              | 0         |
//! |------------|---------------------------|----------------|-----------|
//! | [`BoolVal`]| or                        | and            | `false`   |
//! | [`TropExp`]| smaller order (larger e⁻ʳ)| order addition | order ∞   |
//! | [`PosRat`] | max                       | product        | `0`       |
//! | [`Rank2`]  | lexicographic max         | componentwise  | `(0, 0)`  |
//!
//! `TropExp` stores the element e⁻ʳ of the max-times semiring ℝ≥0 by its
//! order `r`, so that every value that appears as a pure exponential is
//! exact. `Rank2` pairs a `TropExp` with a `PosRat`.
//!
//! [`SemiringValue`] is the tagged union the rest of the crate passes
//! around; its binary operations reject operands of different kinds.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Builds the rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Operations shared by every concrete idempotent semiring.
pub trait Semiring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    /// Canonical order: `a ≤ b` iff `a ⊕ b = b`.
    fn leq(&self, other: &Self) -> bool {
        self.add(other) == *other
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoolVal(pub bool);

impl Semiring for BoolVal {
    fn zero() -> Self {
        BoolVal(false)
    }
    fn one() -> Self {
        BoolVal(true)
    }
    fn add(&self, other: &Self) -> Self {
        BoolVal(self.0 || other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        BoolVal(self.0 && other.0)
    }
}

/// The element e⁻ʳ of 𝕋, stored by its order `r`; `None` is the zero element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TropExp {
    order: Option<Rational>,
}

impl TropExp {
    /// e^(−order).
    pub fn from_order(order: Rational) -> Self {
        TropExp { order: Some(order) }
    }

    pub fn order(&self) -> Option<&Rational> {
        self.order.as_ref()
    }

    /// Compares in the semiring order (zero is least, smaller order is larger).
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        match (&self.order, &other.order) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => b.cmp(a),
        }
    }
}

impl Semiring for TropExp {
    fn zero() -> Self {
        TropExp { order: None }
    }
    fn one() -> Self {
        TropExp::from_order(Rational::zero())
    }
    fn add(&self, other: &Self) -> Self {
        if self.cmp_value(other) == Ordering::Less {
            other.clone()
        } else {
            self.clone()
        }
    }
    fn mul(&self, other: &Self) -> Self {
        match (&self.order, &other.order) {
            (Some(a), Some(b)) => TropExp::from_order(a + b),
            _ => TropExp::zero(),
        }
    }
}

/// A nonnegative rational in the max-times semiring.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PosRat(Rational);

impl PosRat {
    pub fn new(value: Rational) -> Result<Self> {
        if value.is_negative() {
            return Err(Error::InvalidValue(format!("{value} is negative")));
        }
        Ok(PosRat(value))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_inner(self) -> Rational {
        self.0
    }
}

impl Semiring for PosRat {
    fn zero() -> Self {
        PosRat(Rational::zero())
    }
    fn one() -> Self {
        PosRat(Rational::one())
    }
    fn add(&self, other: &Self) -> Self {
        if self.0 >= other.0 {
            self.clone()
        } else {
            other.clone()
        }
    }
    fn mul(&self, other: &Self) -> Self {
        PosRat(&self.0 * &other.0)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

/// Element of the rank-2 semiring 𝕋₂: either zero, or a pair
/// `(e^(−order), coeff)` with `coeff > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rank2 {
    inner: Option<(Rational, Rational)>,
}

impl Rank2 {
    /// `(e^(−order), coeff)`; `coeff` must be strictly positive.
    pub fn new(order: Rational, coeff: Rational) -> Result<Self> {
        if !coeff.is_positive() {
            return Err(Error::InvalidValue(format!(
                "rank-2 second component must be positive, got {coeff}"
            )));
        }
        Ok(Rank2 { inner: Some((order, coeff)) })
    }

    pub fn from_parts(first: &TropExp, second: &PosRat) -> Result<Self> {
        match (first.order(), second.is_zero()) {
            (None, true) => Ok(Rank2::zero()),
            (Some(order), false) => Rank2::new(order.clone(), second.value().clone()),
            _ => Err(Error::InvalidValue(
                "rank-2 components must be both zero or both nonzero".into(),
            )),
        }
    }

    pub fn first(&self) -> TropExp {
        match &self.inner {
            Some((order, _)) => TropExp::from_order(order.clone()),
            None => TropExp::zero(),
        }
    }

    pub fn second(&self) -> PosRat {
        match &self.inner {
            Some((_, coeff)) => PosRat(coeff.clone()),
            None => PosRat::zero(),
        }
    }

    pub fn order(&self) -> Option<&Rational> {
        self.inner.as_ref().map(|(o, _)| o)
    }

    pub fn coeff(&self) -> Option<&Rational> {
        self.inner.as_ref().map(|(_, c)| c)
    }

    pub fn cmp_value(&self, other: &Self) -> Ordering {
        match (&self.inner, &other.inner) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some((oa, ca)), Some((ob, cb))) => ob.cmp(oa).then_with(|| ca.cmp(cb)),
        }
    }
}

impl Semiring for Rank2 {
    fn zero() -> Self {
        Rank2 { inner: None }
    }
    fn one() -> Self {
        Rank2 { inner: Some((Rational::zero(), Rational::one())) }
    }
    fn add(&self, other: &Self) -> Self {
        if self.cmp_value(other) == Ordering::Less {
            other.clone()
        } else {
            self.clone()
        }
    }
    fn mul(&self, other: &Self) -> Self {
        match (&self.inner, &other.inner) {
            (Some((oa, ca)), Some((ob, cb))) => Rank2 { inner: Some((oa + ob, ca * cb)) },
            _ => Rank2::zero(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SemiringKind {
    Bool,
    TropExp,
    PosRat,
    Rank2,
}

impl SemiringKind {
    pub const ALL: [SemiringKind; 4] =
        [SemiringKind::Bool, SemiringKind::TropExp, SemiringKind::PosRat, SemiringKind::Rank2];

    pub fn name(self) -> &'static str {
        match self {
            SemiringKind::Bool => "B",
            SemiringKind::TropExp => "T",
            SemiringKind::PosRat => "T(rational)",
            SemiringKind::Rank2 => "T2",
        }
    }
}

impl fmt::Display for SemiringKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SemiringValue {
    Bool(BoolVal),
    TropExp(TropExp),
    PosRat(PosRat),
    Rank2(Rank2),
}

macro_rules! same_kind {
    ($a:expr, $b:expr, |$x:ident, $y:ident| $body:expr) => {
        match ($a, $b) {
            (SemiringValue::Bool($x), SemiringValue::Bool($y)) => Ok(SemiringValue::Bool($body)),
            (SemiringValue::TropExp($x), SemiringValue::TropExp($y)) => {
                Ok(SemiringValue::TropExp($body))
            }
            (SemiringValue::PosRat($x), SemiringValue::PosRat($y)) => {
                Ok(SemiringValue::PosRat($body))
            }
            (SemiringValue::Rank2($x), SemiringValue::Rank2($y)) => Ok(SemiringValue::Rank2($body)),
            (a, b) => Err(Error::TagMismatch { left: a.kind(), right: b.kind() }),
        }
    };
}

impl SemiringValue {
    pub fn zero(kind: SemiringKind) -> Self {
        match kind {
            SemiringKind::Bool => SemiringValue::Bool(BoolVal::zero()),
            SemiringKind::TropExp => SemiringValue::TropExp(TropExp::zero()),
            SemiringKind::PosRat => SemiringValue::PosRat(PosRat::zero()),
            SemiringKind::Rank2 => SemiringValue::Rank2(Rank2::zero()),
        }
    }

    pub fn one(kind: SemiringKind) -> Self {
        match kind {
            SemiringKind::Bool => SemiringValue::Bool(BoolVal::one()),
            SemiringKind::TropExp => SemiringValue::TropExp(TropExp::one()),
            SemiringKind::PosRat => SemiringValue::PosRat(PosRat::one()),
            SemiringKind::Rank2 => SemiringValue::Rank2(Rank2::one()),
        }
    }

    pub fn boolean(b: bool) -> Self {
        SemiringValue::Bool(BoolVal(b))
    }

    /// e^(−order) in 𝕋.
    pub fn trop(order: Rational) -> Self {
        SemiringValue::TropExp(TropExp::from_order(order))
    }

    pub fn pos(value: Rational) -> Result<Self> {
        PosRat::new(value).map(SemiringValue::PosRat)
    }

    /// `(e^(−order), coeff)` in 𝕋₂.
    pub fn rank2(order: Rational, coeff: Rational) -> Result<Self> {
        Rank2::new(order, coeff).map(SemiringValue::Rank2)
    }

    pub fn kind(&self) -> SemiringKind {
        match self {
            SemiringValue::Bool(_) => SemiringKind::Bool,
            SemiringValue::TropExp(_) => SemiringKind::TropExp,
            SemiringValue::PosRat(_) => SemiringKind::PosRat,
            SemiringValue::Rank2(_) => SemiringKind::Rank2,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            SemiringValue::Bool(v) => v.is_zero(),
            SemiringValue::TropExp(v) => v.is_zero(),
            SemiringValue::PosRat(v) => v.is_zero(),
            SemiringValue::Rank2(v) => v.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == SemiringValue::one(self.kind())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_kind!(self, other, |a, b| a.add(b))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        same_kind!(self, other, |a, b| a.mul(b))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = SemiringValue::one(self.kind());
        for _ in 0..exp {
            acc = acc.mul(self).expect("same kind");
        }
        acc
    }

    /// `a ≤ b` iff `a ⊕ b = b`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        Ok(self.add(other)? == *other)
    }

    /// Leading t-order carried by values of 𝕋 and 𝕋₂ (`None` for zero and
    /// for kinds without one).
    pub fn t_order(&self) -> Option<&Rational> {
        match self {
            SemiringValue::TropExp(v) => v.order(),
            SemiringValue::Rank2(v) => v.order(),
            _ => None,
        }
    }

    /// Total order used for canonical sorting; not the semiring order.
    pub(crate) fn sort_key(&self) -> (u8, Option<Rational>, Option<Rational>) {
        match self {
            SemiringValue::Bool(b) => (0, None, Some(if b.0 { Rational::one() } else { Rational::zero() })),
            SemiringValue::TropExp(t) => (1, t.order().cloned(), None),
            SemiringValue::PosRat(p) => (2, None, Some(p.value().clone())),
            SemiringValue::Rank2(r) => (3, r.order().cloned(), r.coeff().cloned()),
        }
    }
}

impl PartialOrd for SemiringValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SemiringValue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

/// Sums a slice of same-kind values; the empty sum needs `kind`.
pub fn sum_values(kind: SemiringKind, values: &[SemiringValue]) -> Result<SemiringValue> {
    values
        .iter()
        .try_fold(SemiringValue::zero(kind), |acc, v| acc.add(v))
}

/// Bend-relation test at a point: every single-term removal leaves the sum
/// unchanged. A lone term vanishes only if it is zero.
pub fn trop_vanishes(terms: &[SemiringValue]) -> Result<bool> {
    let first = terms.first().ok_or(Error::EmptyTerms)?;
    let kind = first.kind();
    let total = sum_values(kind, terms)?;
    for skip in 0..terms.len() {
        let mut partial = SemiringValue::zero(kind);
        for (i, t) in terms.iter().enumerate() {
            if i != skip {
                partial = partial.add(t)?;
            }
        }
        if partial != total {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Writes e^(−order) as `e^-4`, `e^0`, `e^3`, `e^-1/2`.
pub(crate) fn fmt_exp(order: &Rational) -> String {
    format!("e^{}", fmt_rational(&-order))
}

impl fmt::Display for SemiringValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        match self {
            SemiringValue::Bool(_) => f.write_str("1"),
            SemiringValue::TropExp(t) => f.write_str(&fmt_exp(t.order().expect("nonzero"))),
            SemiringValue::PosRat(p) => f.write_str(&fmt_rational(p.value())),
            SemiringValue::Rank2(r) => write!(
                f,
                "({}, {})",
                fmt_exp(r.order().expect("nonzero")),
                fmt_rational(r.coeff().expect("nonzero"))
            ),
        }
    }
}

//! Textual literals.
//!
//! Values are read in the context of a semiring kind: `0` and `1` are the
//! zero and unit of any semiring, `e^-4` is a 𝕋 literal, `8` or `1/2` a
//! rational, and `(e^-4, 1)` or `(1, 8)` a 𝕋₂ pair. Series are sums of
//! `coeff t^n` terms with an optional `O(t^k)` tail, boolean series may be
//! written as support sets `{0,2,5}`, polynomials use `x1`, `x1'`, `x1''`,
//! `x1^(3)` and `^k` powers, and forests add `d(...)` and `[series]`
//! coefficients. Errors carry the character position of the offending token.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::diffpoly::{DiffMonomial, DiffPoly};
use crate::error::{Error, Result};
use crate::forest::{ForestExpr, Label, Node};
use crate::seminorm::{RatDiffPoly, RatSeries};
use crate::semiring::{Rational, SemiringKind, SemiringValue};
use crate::series::TruncSeries;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    T,
    E,
    D,
    BigO,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Prime,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("`{n}`"),
        Tok::Var(i) => format!("`x{}`", i + 1),
        Tok::T => "`t`".into(),
        Tok::E => "`e`".into(),
        Tok::D => "`d`".into(),
        Tok::BigO => "`O`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::LBracket => "`[`".into(),
        Tok::RBracket => "`]`".into(),
        Tok::LBrace => "`{`".into(),
        Tok::RBrace => "`}`".into(),
        Tok::Comma => "`,`".into(),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::Prime => "`'`".into(),
        Tok::End => "end of input".into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            ',' => Some(Tok::Comma),
            '+' => Some(Tok::Plus),
            '-' | '−' => Some(Tok::Minus),
            '*' | '·' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '\'' | '′' => Some(Tok::Prime),
            't' => Some(Tok::T),
            'e' => Some(Tok::E),
            'd' => Some(Tok::D),
            'O' => Some(Tok::BigO),
            _ => None,
        };
        if let Some(tok) = single {
            out.push((tok, start));
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Int(digits.parse().expect("ascii digits")), start));
        } else if c == 'x' {
            i += 1;
            let begin = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let idx = if begin == i {
                0
            } else {
                let n: usize = chars[begin..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| Error::parse(start, "variable index out of range"))?;
                if n == 0 {
                    return Err(Error::parse(start, "variables are numbered from x1"));
                }
                n - 1
            };
            out.push((Tok::Var(idx), start));
        } else {
            return Err(Error::parse(start, format!("unexpected character `{c}`")));
        }
    }
    out.push((Tok::End, chars.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    i: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Self> {
        Ok(Parser { toks: tokenize(src)?, i: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.i + k).min(self.toks.len() - 1)].0
    }

    fn pos(&self) -> usize {
        self.toks[self.i].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.i].0.clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.bump();
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::parse(self.pos(), msg))
    }

    fn unexpected<T>(&self, wanted: &str) -> Result<T> {
        self.err(format!("expected {wanted}, found {}", describe(self.peek())))
    }

    fn expect(&mut self, t: &Tok) -> Result<()> {
        if self.eat(t) {
            Ok(())
        } else {
            self.unexpected(&describe(t))
        }
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            Tok::End => Ok(()),
            _ => self.unexpected("end of input"),
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.unexpected("an integer"),
        }
    }

    fn small(&mut self) -> Result<u32> {
        let pos = self.pos();
        let n = self.int()?;
        u32::try_from(n).map_err(|_| Error::parse(pos, "integer too large"))
    }

    /// `[-] n [/ m]`
    fn rational(&mut self) -> Result<Rational> {
        let neg = self.eat(&Tok::Minus);
        let num = self.int()?;
        let den = if self.eat(&Tok::Slash) {
            let pos = self.pos();
            let d = self.int()?;
            if d.is_zero() {
                return Err(Error::parse(pos, "zero denominator"));
            }
            d
        } else {
            BigInt::one()
        };
        let q = Rational::new(num, den);
        Ok(if neg { -q } else { q })
    }

    /// `e^r`, returned as the order −r.
    fn exp_order(&mut self) -> Result<Rational> {
        self.expect(&Tok::E)?;
        self.expect(&Tok::Caret)?;
        let r = if self.eat(&Tok::LParen) {
            let r = self.rational()?;
            self.expect(&Tok::RParen)?;
            r
        } else {
            self.rational()?
        };
        Ok(-r)
    }

    fn starts_value(&self, kind: SemiringKind) -> bool {
        match self.peek() {
            Tok::Int(_) | Tok::LParen => true,
            Tok::E => kind == SemiringKind::TropExp,
            _ => false,
        }
    }

    fn value(&mut self, kind: SemiringKind) -> Result<SemiringValue> {
        let pos = self.pos();
        if let Tok::Int(n) = self.peek() {
            if n.is_zero() && !matches!(self.peek_at(1), Tok::Slash) {
                self.bump();
                return Ok(SemiringValue::zero(kind));
            }
        }
        let invalid = |e: Error| match e {
            Error::Parse { .. } => e,
            other => Error::parse(pos, other.to_string()),
        };
        match kind {
            SemiringKind::Bool => {
                if self.eat(&Tok::LParen) {
                    let v = self.value(kind)?;
                    self.expect(&Tok::RParen)?;
                    return Ok(v);
                }
                match self.int()? {
                    n if n.is_one() => Ok(SemiringValue::boolean(true)),
                    _ => Err(Error::parse(pos, "boolean literals are 0 or 1")),
                }
            }
            SemiringKind::TropExp => {
                if self.eat(&Tok::LParen) {
                    let v = self.value(kind)?;
                    self.expect(&Tok::RParen)?;
                    return Ok(v);
                }
                if matches!(self.peek(), Tok::Int(_)) {
                    return match self.int()? {
                        n if n.is_one() => Ok(SemiringValue::one(kind)),
                        _ => Err(Error::parse(pos, "𝕋 literals are written e^r, 0 or 1")),
                    };
                }
                Ok(SemiringValue::trop(self.exp_order()?))
            }
            SemiringKind::PosRat => {
                if self.eat(&Tok::LParen) {
                    let v = self.value(kind)?;
                    self.expect(&Tok::RParen)?;
                    return Ok(v);
                }
                let q = self.rational()?;
                SemiringValue::pos(q).map_err(invalid)
            }
            SemiringKind::Rank2 => {
                if matches!(self.peek(), Tok::Int(_)) {
                    return match self.int()? {
                        n if n.is_one() => Ok(SemiringValue::one(kind)),
                        _ => Err(Error::parse(pos, "𝕋₂ literals are written (e^r, q), 0 or 1")),
                    };
                }
                self.expect(&Tok::LParen)?;
                let order = match self.peek() {
                    Tok::E => self.exp_order()?,
                    Tok::Int(n) if n.is_one() => {
                        self.bump();
                        Rational::zero()
                    }
                    _ => return self.unexpected("`e^r` or `1`"),
                };
                self.expect(&Tok::Comma)?;
                let q = self.rational()?;
                self.expect(&Tok::RParen)?;
                SemiringValue::rank2(order, q).map_err(invalid)
            }
        }
    }

    /// `t` or `t^n`.
    fn t_power(&mut self) -> Result<u32> {
        self.expect(&Tok::T)?;
        if self.eat(&Tok::Caret) {
            self.small()
        } else {
            Ok(1)
        }
    }

    /// `O(t^k)`, returned as the truncation k − 1.
    fn big_o(&mut self) -> Result<u32> {
        self.expect(&Tok::BigO)?;
        self.expect(&Tok::LParen)?;
        let pos = self.pos();
        let k = match self.peek() {
            Tok::T => self.t_power()?,
            _ => return self.unexpected("`t^k`"),
        };
        self.expect(&Tok::RParen)?;
        if k == 0 {
            return Err(Error::parse(pos, "O(t^0) leaves no known coefficient"));
        }
        Ok(k - 1)
    }

    fn support_set(&mut self) -> Result<Vec<u32>> {
        self.expect(&Tok::LBrace)?;
        let mut out = Vec::new();
        if !self.eat(&Tok::RBrace) {
            loop {
                out.push(self.small()?);
                if self.eat(&Tok::RBrace) {
                    break;
                }
                self.expect(&Tok::Comma)?;
            }
        }
        Ok(out)
    }

    fn series(&mut self, kind: SemiringKind) -> Result<TruncSeries> {
        let mut coeffs: Vec<(u32, SemiringValue)> = Vec::new();
        let mut trunc = None;
        if kind == SemiringKind::Bool && matches!(self.peek(), Tok::LBrace) {
            let one = SemiringValue::boolean(true);
            coeffs.extend(self.support_set()?.into_iter().map(|d| (d, one.clone())));
            if !self.eat(&Tok::Plus) {
                return TruncSeries::from_coeffs(kind, coeffs, trunc);
            }
        }
        loop {
            if matches!(self.peek(), Tok::BigO) {
                let pos = self.pos();
                if trunc.is_some() {
                    return Err(Error::parse(pos, "repeated O(t^k) term"));
                }
                trunc = Some(self.big_o()?);
            } else {
                let pos = self.pos();
                let coeff = if self.starts_value(kind) { Some(self.value(kind)?) } else { None };
                if coeff.is_some() {
                    self.eat_star_before(&Tok::T);
                }
                let deg = if matches!(self.peek(), Tok::T) { Some(self.t_power()?) } else { None };
                match (coeff, deg) {
                    (None, None) => return self.unexpected("a series term"),
                    (c, d) => {
                        let c = c.unwrap_or_else(|| SemiringValue::one(kind));
                        let d = d.unwrap_or(0);
                        if trunc.is_some_and(|t| d > t) {
                            return Err(Error::parse(pos, "term beyond the O(t^k) tail"));
                        }
                        coeffs.push((d, c));
                    }
                }
            }
            if !self.eat(&Tok::Plus) {
                break;
            }
        }
        if let Some(t) = trunc {
            if let Some((d, _)) = coeffs.iter().find(|(d, _)| *d > t) {
                return self.err(format!("term of degree {d} lies beyond the O(t^k) tail"));
            }
        }
        TruncSeries::from_coeffs(kind, coeffs, trunc)
    }

    fn eat_star_before(&mut self, next: &Tok) {
        if matches!(self.peek(), Tok::Star) && self.peek_at(1) == next {
            self.bump();
        }
    }

    fn rat_series(&mut self) -> Result<RatSeries> {
        let mut coeffs: Vec<(u32, Rational)> = Vec::new();
        let mut trunc = None;
        let mut neg = self.eat(&Tok::Minus);
        loop {
            if matches!(self.peek(), Tok::BigO) {
                let pos = self.pos();
                if trunc.is_some() || neg {
                    return Err(Error::parse(pos, "misplaced O(t^k) term"));
                }
                trunc = Some(self.big_o()?);
            } else {
                let coeff = match self.peek() {
                    Tok::Int(_) => Some(self.rational()?),
                    Tok::LParen => {
                        self.bump();
                        let q = self.rational()?;
                        self.expect(&Tok::RParen)?;
                        Some(q)
                    }
                    _ => None,
                };
                if coeff.is_some() {
                    self.eat_star_before(&Tok::T);
                }
                let deg = if matches!(self.peek(), Tok::T) { Some(self.t_power()?) } else { None };
                if coeff.is_none() && deg.is_none() {
                    return self.unexpected("a series term");
                }
                let q = coeff.unwrap_or_else(Rational::one);
                coeffs.push((deg.unwrap_or(0), if neg { -q } else { q }));
            }
            neg = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
        }
        if let Some(t) = trunc {
            if let Some((d, _)) = coeffs.iter().find(|(d, _)| *d > t) {
                return self.err(format!("term of degree {d} lies beyond the O(t^k) tail"));
            }
        }
        Ok(RatSeries::from_coeffs(coeffs, trunc))
    }

    /// `x1`, `x1'`, `x1''`, `x1^(j)`, each optionally followed by `^k`;
    /// returns (index, derivative order, power).
    fn variable(&mut self) -> Result<(usize, u32, u32)> {
        let idx = match self.bump() {
            Tok::Var(i) => i,
            _ => unreachable!("caller checked for a variable"),
        };
        let mut order = 0;
        while self.eat(&Tok::Prime) {
            order += 1;
        }
        if order == 0 && matches!(self.peek(), Tok::Caret) && matches!(self.peek_at(1), Tok::LParen) {
            self.bump();
            self.bump();
            order = self.small()?;
            self.expect(&Tok::RParen)?;
        }
        let power = if self.eat(&Tok::Caret) { self.small()? } else { 1 };
        Ok((idx, order, power))
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Tok::Var(_) | Tok::Int(_) | Tok::LParen | Tok::E | Tok::D | Tok::LBracket | Tok::T)
    }

    fn poly(&mut self, kind: SemiringKind) -> Result<DiffPoly> {
        let mut p = DiffPoly::zero(kind);
        loop {
            let mut coeff = SemiringValue::one(kind);
            let mut mono = DiffMonomial::one();
            let mut first = true;
            while first || self.eat(&Tok::Star) || (self.starts_factor() && !matches!(self.peek(), Tok::D)) {
                first = false;
                match self.peek() {
                    Tok::Var(_) => {
                        let (i, j, k) = self.variable()?;
                        mono = mono.mul(&DiffMonomial::power(i, j, k));
                    }
                    _ if self.starts_value(kind) => {
                        let pos = self.pos();
                        let v = self.value(kind)?;
                        coeff = coeff.mul(&v).map_err(|e| Error::parse(pos, e.to_string()))?;
                    }
                    _ => return self.unexpected("a coefficient or variable"),
                }
            }
            p.add_term(mono, coeff)?;
            if !self.eat(&Tok::Plus) {
                break;
            }
        }
        Ok(p)
    }

    fn rat_poly(&mut self) -> Result<RatDiffPoly> {
        let mut p = RatDiffPoly::zero();
        let mut neg = self.eat(&Tok::Minus);
        loop {
            let mut coeff = RatSeries::one(None);
            let mut mono = DiffMonomial::one();
            let mut first = true;
            while first || self.eat(&Tok::Star) || matches!(self.peek(), Tok::Var(_) | Tok::LParen | Tok::T) {
                first = false;
                match self.peek() {
                    Tok::Var(_) => {
                        let (i, j, k) = self.variable()?;
                        mono = mono.mul(&DiffMonomial::power(i, j, k));
                    }
                    Tok::Int(_) => coeff = coeff.scale(&self.rational()?),
                    Tok::T => {
                        let d = self.t_power()?;
                        coeff = coeff.mul(&RatSeries::from_coeffs([(d, Rational::one())], None));
                    }
                    Tok::LParen => {
                        self.bump();
                        let s = self.rat_series()?;
                        self.expect(&Tok::RParen)?;
                        coeff = coeff.mul(&s);
                    }
                    _ => return self.unexpected("a coefficient or variable"),
                }
            }
            p.add_term(mono, if neg { coeff.neg() } else { coeff });
            neg = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
        }
        Ok(p)
    }

    fn forest(&mut self, kind: SemiringKind) -> Result<ForestExpr> {
        let mut sum = self.forest_product(kind)?;
        while self.eat(&Tok::Plus) {
            sum = sum.sum(&self.forest_product(kind)?);
        }
        Ok(sum)
    }

    fn forest_product(&mut self, kind: SemiringKind) -> Result<ForestExpr> {
        let mut prod = self.forest_factor(kind)?;
        while self.eat(&Tok::Star) || self.starts_factor() {
            prod = prod.mul(&self.forest_factor(kind)?);
        }
        Ok(prod)
    }

    fn forest_factor(&mut self, kind: SemiringKind) -> Result<ForestExpr> {
        match self.peek() {
            Tok::D => {
                self.bump();
                self.expect(&Tok::LParen)?;
                let inner = self.forest(kind)?;
                self.expect(&Tok::RParen)?;
                // d over a lone coefficient is recorded on the label
                if let [tree] = inner.trees.as_slice() {
                    if let [Node::Leaf(Label::Coeff { value, derivs })] = tree.children.as_slice() {
                        return Ok(ForestExpr::leaf(Label::Coeff { value: value.clone(), derivs: derivs + 1 }));
                    }
                }
                Ok(inner.d())
            }
            Tok::Var(_) => {
                let (i, j, k) = self.variable()?;
                let x = ForestExpr::var_derivative(i, j);
                Ok((0..k).fold(ForestExpr::one(), |acc, _| acc.mul(&x)))
            }
            Tok::LBracket => {
                self.bump();
                let s = self.series(kind)?;
                self.expect(&Tok::RBracket)?;
                Ok(ForestExpr::coeff(s))
            }
            _ if self.starts_value(kind) => {
                let v = self.value(kind)?;
                Ok(if v.is_zero() {
                    ForestExpr::zero()
                } else if v.is_one() {
                    ForestExpr::one()
                } else {
                    ForestExpr::coeff(TruncSeries::constant(v, None))
                })
            }
            _ => self.unexpected("a forest factor"),
        }
    }
}

fn run<T>(src: &str, f: impl FnOnce(&mut Parser) -> Result<T>) -> Result<T> {
    let mut p = Parser::new(src)?;
    let out = f(&mut p)?;
    p.finish()?;
    Ok(out)
}

pub fn parse_rational(src: &str) -> Result<Rational> {
    run(src, Parser::rational)
}

pub fn parse_value(src: &str, kind: SemiringKind) -> Result<SemiringValue> {
    run(src, |p| p.value(kind))
}

/// Without an `O(t^k)` tail the result is an exact polynomial.
pub fn parse_series(src: &str, kind: SemiringKind) -> Result<TruncSeries> {
    run(src, |p| p.series(kind))
}

pub fn parse_rat_series(src: &str) -> Result<RatSeries> {
    run(src, Parser::rat_series)
}

pub fn parse_poly(src: &str, kind: SemiringKind) -> Result<DiffPoly> {
    run(src, |p| p.poly(kind))
}

pub fn parse_rat_poly(src: &str) -> Result<RatDiffPoly> {
    run(src, Parser::rat_poly)
}

pub fn parse_forest(src: &str, kind: SemiringKind) -> Result<ForestExpr> {
    run(src, |p| p.forest(kind))
}

/// A strictly positive rational.
pub fn parse_positive(src: &str) -> Result<Rational> {
    let q = parse_rational(src)?;
    if !q.is_positive() {
        return Err(Error::parse(0, format!("{src} is not positive")));
    }
    Ok(q)
}

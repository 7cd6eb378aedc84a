//! Forests as differential expressions.
//!
//! A tree is a product of its root's children; an internal node applies the
//! differential to the product of its own children; a forest is the sum of
//! its trees. Leaves carry either a coefficient series or a variable index.
//! A coefficient leaf may also carry a count of formal derivatives, which is
//! how `d(r)` is recorded without choosing a differential.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::semiring::{SemiringKind, SemiringValue};
use crate::series::{SeriesDifferential, TruncSeries};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Label {
    /// dᵏ(value).
    Coeff { value: TruncSeries, derivs: u32 },
    Var(usize),
}

impl Label {
    pub fn coeff(value: TruncSeries) -> Self {
        Label::Coeff { value, derivs: 0 }
    }

    fn plain_coeff(&self) -> Option<&TruncSeries> {
        match self {
            Label::Coeff { value, derivs: 0 } => Some(value),
            _ => None,
        }
    }
}

fn cmp_series(a: &TruncSeries, b: &TruncSeries) -> Ordering {
    (a.kind(), a.trunc().map_or(u64::MAX, u64::from))
        .cmp(&(b.kind(), b.trunc().map_or(u64::MAX, u64::from)))
        .then_with(|| a.coeffs().iter().cmp(b.coeffs().iter()))
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Label::Coeff { value: a, derivs: i }, Label::Coeff { value: b, derivs: j }) => {
                i.cmp(j).then_with(|| cmp_series(a, b))
            }
            (Label::Coeff { .. }, Label::Var(_)) => Ordering::Less,
            (Label::Var(_), Label::Coeff { .. }) => Ordering::Greater,
            (Label::Var(a), Label::Var(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Node {
    Leaf(Label),
    /// d applied to the product of the children.
    Inner(Vec<Node>),
}

/// A product of root children; no children is the unit 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tree {
    pub children: Vec<Node>,
}

/// A sum of trees; no trees is the zero element.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ForestExpr {
    pub trees: Vec<Tree>,
}

impl ForestExpr {
    pub fn zero() -> Self {
        ForestExpr::default()
    }

    pub fn one() -> Self {
        ForestExpr { trees: vec![Tree::default()] }
    }

    pub fn leaf(label: Label) -> Self {
        ForestExpr { trees: vec![Tree { children: vec![Node::Leaf(label)] }] }
    }

    pub fn coeff(value: TruncSeries) -> Self {
        Self::leaf(Label::coeff(value))
    }

    pub fn var(i: usize) -> Self {
        Self::leaf(Label::Var(i))
    }

    /// x_i^(j) as j nested edges over the leaf x_i.
    pub fn var_derivative(i: usize, j: u32) -> Self {
        (0..j).fold(Self::var(i), |f, _| f.d())
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut trees = self.trees.clone();
        trees.extend(other.trees.iter().cloned());
        ForestExpr { trees }
    }

    /// Glues roots pairwise, distributing over the sums.
    pub fn mul(&self, other: &Self) -> Self {
        let trees = self
            .trees
            .iter()
            .flat_map(|a| {
                other.trees.iter().map(move |b| {
                    let mut children = a.children.clone();
                    children.extend(b.children.iter().cloned());
                    Tree { children }
                })
            })
            .collect();
        ForestExpr { trees }
    }

    /// Inserts a new edge at every root.
    pub fn d(&self) -> Self {
        let trees = self
            .trees
            .iter()
            .map(|t| Tree { children: vec![Node::Inner(t.children.clone())] })
            .collect();
        ForestExpr { trees }
    }

    pub fn is_zero(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn leaf_count(&self) -> usize {
        fn count(n: &Node) -> usize {
            match n {
                Node::Leaf(_) => 1,
                Node::Inner(c) => c.iter().map(count).sum(),
            }
        }
        self.trees.iter().flat_map(|t| &t.children).map(count).sum()
    }

    /// Longest root-to-leaf edge count.
    pub fn depth(&self) -> usize {
        fn depth(n: &Node) -> usize {
            match n {
                Node::Leaf(_) => 1,
                Node::Inner(c) => 1 + c.iter().map(depth).max().unwrap_or(0),
            }
        }
        self.trees.iter().flat_map(|t| &t.children).map(depth).max().unwrap_or(0)
    }

    pub fn num_vars(&self) -> usize {
        fn max_var(n: &Node) -> Option<usize> {
            match n {
                Node::Leaf(Label::Var(i)) => Some(*i),
                Node::Leaf(_) => None,
                Node::Inner(c) => c.iter().filter_map(max_var).max(),
            }
        }
        self.trees.iter().flat_map(|t| &t.children).filter_map(max_var).max().map_or(0, |i| i + 1)
    }
}

/// Upper bound on rewrite passes in [`normalize`].
pub const NORMALIZE_STEP_LIMIT: usize = 64;

/// Outcome of rewriting a product of siblings: `None` means it is zero.
fn normalize_children(children: &[Node]) -> Option<Vec<Node>> {
    let mut out = Vec::with_capacity(children.len());
    let mut coeff: Option<TruncSeries> = None;
    for child in children {
        match child {
            Node::Leaf(Label::Coeff { value, .. }) if value.is_exact_zero() => return None,
            Node::Leaf(label) => match label.plain_coeff() {
                Some(v) => {
                    coeff = Some(match coeff.take() {
                        None => v.clone(),
                        Some(prev) => match prev.mul(v) {
                            Ok(p) => p,
                            Err(_) => {
                                out.push(Node::Leaf(Label::coeff(prev)));
                                v.clone()
                            }
                        },
                    });
                }
                None => out.push(child.clone()),
            },
            Node::Inner(grand) => {
                let grand = normalize_children(grand)?;
                match grand.as_slice() {
                    [Node::Leaf(Label::Coeff { value, derivs })] => out.push(Node::Leaf(Label::Coeff {
                        value: value.clone(),
                        derivs: derivs + 1,
                    })),
                    _ => out.push(Node::Inner(grand)),
                }
            }
        }
    }
    if let Some(c) = coeff {
        if c.is_exact_zero() {
            return None;
        }
        if c != TruncSeries::one(c.kind(), None) {
            out.push(Node::Leaf(Label::coeff(c)));
        }
    }
    // a derivative of an exact zero is zero
    if out.iter().any(|n| matches!(n, Node::Leaf(Label::Coeff { value, .. }) if value.is_exact_zero())) {
        return None;
    }
    out.sort();
    Some(out)
}

fn normalize_pass(a: &ForestExpr) -> ForestExpr {
    // group by the non-coefficient part of the root, merging coefficients with ⊕
    let mut groups: BTreeMap<Vec<Node>, Vec<Option<TruncSeries>>> = BTreeMap::new();
    for tree in &a.trees {
        let Some(children) = normalize_children(&tree.children) else {
            continue;
        };
        let (coeffs, rest): (Vec<Node>, Vec<Node>) =
            children.into_iter().partition(|n| matches!(n, Node::Leaf(l) if l.plain_coeff().is_some()));
        let coeff = match coeffs.as_slice() {
            [] => None,
            [Node::Leaf(l)] => l.plain_coeff().cloned(),
            _ => {
                // coefficients of different kinds stay apart
                let mut rest = rest;
                rest.extend(coeffs);
                rest.sort();
                groups.entry(rest).or_default();
                continue;
            }
        };
        let slot = groups.entry(rest).or_default();
        let merged = slot.iter_mut().find_map(|existing| {
            let unit = |c: &Option<TruncSeries>, kind| c.clone().unwrap_or_else(|| TruncSeries::one(kind, None));
            let kind = existing.as_ref().or(coeff.as_ref()).map(|c| c.kind())?;
            let sum = unit(existing, kind).add(&unit(&coeff, kind)).ok()?;
            *existing = (sum != TruncSeries::one(kind, None)).then_some(sum);
            Some(())
        });
        if merged.is_none() && !(coeff.is_none() && slot.contains(&None)) {
            slot.push(coeff);
        }
    }
    let mut trees: Vec<Tree> = groups
        .into_iter()
        .flat_map(|(rest, coeffs)| {
            let coeffs = if coeffs.is_empty() { vec![None] } else { coeffs };
            coeffs.into_iter().map(move |c| {
                let mut children = rest.clone();
                if let Some(c) = c {
                    children.push(Node::Leaf(Label::coeff(c)));
                    children.sort();
                }
                Tree { children }
            })
        })
        .collect();
    trees.sort();
    ForestExpr { trees }
}

/// Applies the rewrite rules to a fixed point:
/// drop trees with a zero leaf, delete unit leaves, multiply sibling
/// coefficient leaves, turn an edge over a lone coefficient into a formal
/// derivative of that coefficient, and add coefficients of trees that agree
/// otherwise. Children and trees are kept in canonical order.
pub fn normalize(a: &ForestExpr) -> ForestExpr {
    let mut cur = a.clone();
    for _ in 0..NORMALIZE_STEP_LIMIT {
        let next = normalize_pass(&cur);
        if next == cur {
            break;
        }
        cur = next;
    }
    cur
}

/// A target differential semiring (series over `kind` with `differential`)
/// and values for the variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub kind: SemiringKind,
    pub differential: SeriesDifferential,
    pub values: Vec<TruncSeries>,
}

fn eval_product(children: &[Node], asg: &Assignment) -> Result<TruncSeries> {
    children
        .iter()
        .try_fold(TruncSeries::one(asg.kind, None), |acc, n| acc.mul(&eval_node(n, asg)?))
}

fn eval_node(n: &Node, asg: &Assignment) -> Result<TruncSeries> {
    match n {
        Node::Leaf(Label::Coeff { value, derivs }) => {
            if value.kind() != asg.kind {
                return Err(Error::TagMismatch { left: value.kind(), right: asg.kind });
            }
            value.differentiate_n(&asg.differential, *derivs)
        }
        Node::Leaf(Label::Var(i)) => asg
            .values
            .get(*i)
            .cloned()
            .ok_or_else(|| Error::InvalidValue(format!("no value assigned to x{}", i + 1))),
        Node::Inner(children) => eval_product(children, asg)?.differentiate(&asg.differential),
    }
}

pub fn eval_forest(a: &ForestExpr, asg: &Assignment) -> Result<TruncSeries> {
    a.trees
        .iter()
        .try_fold(TruncSeries::zero(asg.kind, None), |acc, t| acc.add(&eval_product(&t.children, asg)?))
}

fn fmt_coeff(value: &TruncSeries) -> String {
    let constant = value.is_exact() && value.coeffs().keys().all(|d| *d == 0);
    match (constant, value.coeff(0)) {
        (true, Some(c)) if !matches!(c, SemiringValue::Rank2(_)) => c.to_string(),
        _ => format!("[{value}]"),
    }
}

fn fmt_node(n: &Node) -> String {
    match n {
        Node::Leaf(Label::Var(i)) => format!("x{}", i + 1),
        Node::Leaf(Label::Coeff { value, derivs }) => {
            let mut s = fmt_coeff(value);
            for _ in 0..*derivs {
                s = format!("d({s})");
            }
            s
        }
        Node::Inner(children) => format!("d({})", fmt_product(children)),
    }
}

fn fmt_product(children: &[Node]) -> String {
    if children.is_empty() {
        return "1".into();
    }
    children.iter().map(fmt_node).collect::<Vec<_>>().join(" * ")
}

impl fmt::Display for ForestExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.trees.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.trees.iter().map(|t| fmt_product(&t.children)).collect();
        f.write_str(&parts.join(" + "))
    }
}

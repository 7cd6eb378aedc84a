//! Exact arithmetic for tropical differential algebra.
//!
//! The crate is organized bottom-up:
//!
//! - [`semiring`]: the concrete idempotent semirings 𝔹, 𝕋 (as exact
//!   exponentials or exact rationals) and 𝕋₂, with the bend-relation test.
//! - [`series`]: truncated power series over those semirings, tropical
//!   differentials, and the pairs S₁ → S₀ given by leading-term projection.
//! - [`diffpoly`]: basic differential polynomials, their evaluation through
//!   a pair, and solution membership.
//! - [`forest`]: the forest presentation of differential expressions.
//! - [`seminorm`]: classical ℚ[[t]] arithmetic, p-adic and t-adic
//!   seminorms, differential enhancements, and tropicalization.
//! - [`solve`]: boolean support enumeration and the one-coefficient solver.
//! - [`verify`]: seeded randomized law suites.
//! - [`parse`]: textual literals for values, series, equations and forests.

pub mod diffpoly;
pub mod error;
pub mod exec;
pub mod forest;
pub mod parse;
pub mod semiring;
pub mod seminorm;
pub mod series;
pub mod solve;
pub mod verify;

pub use error::{Error, Result};
pub use semiring::{rat, Rational, Semiring, SemiringKind, SemiringValue};
pub use series::{NatNorm, PairDescriptor, Projection, SeriesDifferential, TruncSeries};

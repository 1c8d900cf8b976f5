//! Exact classification of time-dependent infinitesimal exponents of Lie
//! algebras, and an exponent calculus on polynomial group models.

pub mod cocycle;
pub mod error;
pub mod group;
pub mod lie;
pub mod realization;
pub mod report;
pub mod linalg;
pub mod poly;

pub use error::{Error, Result};
pub use poly::{parse_poly, MultiPoly, Rational};

//! Exact Lie-symmetry analysis of polynomial ordinary differential
//! equations over the rationals.
//!
//! Everything is computed in exact rational arithmetic: bracket calculus,
//! symmetry verification and degree-bounded discovery, invariant theory of
//! diagonal toral actions, Poincare-Dulac normalization, and invariant-set
//! certificates. The `cli` module drives the same operations from system
//! files; `liesym-ffi` re-exports them over a C ABI.

pub mod cli;
pub mod error;
pub mod field;
pub mod invariant;
pub mod lie;
pub mod linalg;
pub mod matrix;
pub mod normalform;
pub mod parse;
pub mod poly;
pub mod report;
pub mod solve;
pub mod symmetry;
pub mod toral;

pub use error::{Error, ParseError, Result};
pub use field::VectorField;
pub use lie::{lie_bracket, lie_derivative};
pub use poly::{Monomial, MultiPoly, Rational};

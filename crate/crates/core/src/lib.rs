//! Exact total ordering of trapezoidal intuitionistic fuzzy numbers by a
//! lexicographic score stream over dense cut levels, plus a weighted
//! dominance decision procedure built on it.

pub mod curve;
pub mod cuts;
pub mod decision;
pub mod dense;
pub mod error;
pub mod literal;
pub mod number;
pub mod order;
pub mod reference;
pub mod scalar;
pub mod scores;

pub use dense::DenseSequence;
pub use error::Error;
pub use number::{Ifn, IfnKind, LegBranch, TrapFn, Validation};
pub use scalar::Rational;

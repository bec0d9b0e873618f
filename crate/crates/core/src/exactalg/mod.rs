//! Exact arithmetic substrate.
//!
//! Coefficients are arbitrary-precision rationals. [`LaurentPoly`] is a sparse
//! map from [`ExponentVector`] to nonzero coefficients over a shared
//! [`VarTable`]; [`RationalFunction`] is a normalized quotient of two of
//! them; [`TruncatedSeries`] is a power series in the distinguished variable
//! `X` cut at a fixed order.

mod laurent;
mod rational;
mod ratfunc;
mod series;
mod vars;

pub use laurent::{ExponentVector, LaurentPoly, PolyJson, TermJson};
pub use rational::{format_rational, parse_rational, rat, ratio, Rational};
pub use ratfunc::{RationalFunction, RationalFunctionJson};
pub use series::TruncatedSeries;
pub use vars::VarTable;

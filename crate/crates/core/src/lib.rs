//! Exact computation of unramified Bessel functions on `GSpin(2n+1)` and
//! truncated verification of the associated Rankin-Selberg generating-series
//! identities.
//!
//! Every quantity is an exact multivariate Laurent polynomial (or a quotient
//! of two) over the rationals. Satake parameters are encoded by the variables
//! of a [`VarTable`]: `s0` is the square root of `alpha_0`, `a1..an` are
//! `alpha_1..alpha_n`, `b` is `beta`, `v` is `q^{-1/2}`, `g1..gn` are the
//! `GL_n` parameters `gamma_i`, and `X` is the generating-series variable.
//!
//! Module map:
//! - [`exactalg`]: rationals, Laurent polynomials, rational functions, truncated series
//! - [`rootdata`]: type `B_n` roots, coroots, and the signed-permutation Weyl group
//! - [`characters`]: alternators, Weyl denominators, Schur and symplectic characters
//! - [`bessel`]: closed-form Bessel values and the ingredients of their derivation
//! - [`rankinselberg`]: generating series, Euler factors and identity verifiers
//! - [`conventions`]: exact resolution of the normalization conventions
//! - [`evalcheck`]: randomized modular identity testing
//! - [`cli`]: the `gspin` command-line front end

pub mod bessel;
pub mod characters;
pub mod conventions;
pub mod cli;
pub mod error;
pub mod evalcheck;
pub mod exactalg;
pub mod rankinselberg;
pub mod rootdata;

pub use error::{Error, Result};
pub use exactalg::{ExponentVector, LaurentPoly, Rational, RationalFunction, TruncatedSeries, VarTable};
pub use rootdata::{SatakeSpec, Torus, WeylElement};

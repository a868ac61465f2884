//! Exact scalars: Gaussian rationals, bivariate polynomials in `E` and `λ`
//! over them, and the fraction field of those polynomials.

mod bipoly;
pub mod expr;
mod gaussian;
pub mod json;
mod ratfunc;
mod unipoly;

pub use bipoly::BiPoly;
pub use gaussian::{GaussianRational, ParseGaussianError};
pub use ratfunc::{ArithError, RationalFunction};

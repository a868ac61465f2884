//! The field abstraction shared by the symbolic and specialized code paths.
//!
//! Representation matrices, echelon forms, submodule closures and intertwiner
//! solvers are written once against [`Scalar`] and instantiated at
//! [`RationalFunction`](crate::RationalFunction) (generic parameters) and
//! [`GaussianRational`](crate::GaussianRational) (numeric specializations).
//! Only exact fields are admissible: pivoting relies on `is_zero` being a
//! decision, not an estimate.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::GaussianRational;

pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// Multiplicative inverse, `None` exactly when `self` is zero.
    fn inverse(&self) -> Option<Self>;

    /// Embeds a constant.
    fn from_gaussian(c: &GaussianRational) -> Self;

    fn imag_unit() -> Self {
        Self::from_gaussian(&GaussianRational::i())
    }

    fn from_int(n: i64) -> Self {
        Self::from_gaussian(&GaussianRational::from_int(n))
    }
}

//! Z₂²-graded classical mechanics: graded-commutative variables, SUSY
//! variations, Euler-Lagrange equations and Noether charges.

mod algebra;
mod calculus;
mod lagrangian;
mod poly;
mod report;
mod rules;
mod symbol;

use thiserror::Error;

pub use algebra::{bracket_on, operator_algebra, FieldCheck};
pub use calculus::{apply_derivation, left_derivative, Calculus, DEFAULT_DERIV_CAP, DERIV_CAP_ENV};
pub use lagrangian::{
    build_action1, catalogue, example_prepotential, is_real_mod_td, Lagrangian, LagrangianId, NoetherCharge,
    NoetherSet,
};
pub use poly::{canonical_order, canonical_product, degree_of, GradedPoly, ParsePolyError};
pub use report::{action1_report, analyze, reference_charges, Action1Report, ChargeResult, InvarianceResult, MechanicsReport, ACTION1_REFERENCE};
pub use rules::{strip_left, Variation, VariableSystem};
pub use symbol::{Const, FieldName, FieldVar, Symbol};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MechError {
    #[error("derivative cap {cap} exceeded differentiating `{var}`")]
    DerivCap { var: String, cap: u8 },
    #[error("invalid derivative cap `{0}`")]
    BadCap(String),
    #[error("variable `{var}` has no rule in the system ({system})")]
    Leftover { var: String, system: String },
    #[error("cannot strip `{param}` from `{expr}`")]
    Unstrippable { param: String, expr: String },
    #[error("degree mismatch: {0}")]
    Degree(String),
    #[error("{lagrangian} is not invariant under {variation}")]
    NonInvariant { lagrangian: String, variation: String },
    #[error("the equation of motion for `{0}` is not algebraic")]
    NonAlgebraicEom(String),
    #[error("internal error: total-derivative witness failed for `{0}`")]
    WitnessMismatch(String),
    #[error("unknown name `{0}`")]
    Unknown(String),
    #[error(transparent)]
    Parse(#[from] ParsePolyError),
}

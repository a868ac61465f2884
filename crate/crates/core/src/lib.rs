pub mod acceptance;
pub mod arith;
pub mod graded;
pub mod induced;
pub mod modtools;
pub mod linalg;
pub mod mech;
pub mod scalar;

pub use arith::{BiPoly, GaussianRational, RationalFunction};
pub use linalg::{Matrix, Subspace};
pub use scalar::Scalar;

/// Matrices over `Q(i)(E, λ)`.
pub type SymMatrix = Matrix<RationalFunction>;
/// Matrices over `Q(i)`, i.e. after specializing `E` and `λ`.
pub type NumMatrix = Matrix<GaussianRational>;
pub type SymSubspace = Subspace<RationalFunction>;
pub type NumSubspace = Subspace<GaussianRational>;
pub type SymRep = graded::MatrixRep<RationalFunction>;
pub type NumRep = graded::MatrixRep<GaussianRational>;

//! Dense exact linear algebra, generic over the scalar field.

mod matrix;
mod rref;
mod subspace;

pub use matrix::Matrix;
pub use rref::{nullspace, rank, rref_rows, solve};
pub use subspace::Subspace;

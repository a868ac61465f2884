//! Z₂² degrees, the defining relations and a verifier for matrix
//! representations.

mod degree;
mod relations;
mod rep;

pub use degree::{swap_sign, Degree};
pub use relations::{relation_list, BracketRelation, GeneratorId, Operator};
pub use rep::{general_bracket, verify_relations, MatrixRep, RelationReport, RelationResult, RepError};

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use super::{relation_list, swap_sign, BracketRelation, Degree, GeneratorId, Operator};
use crate::arith::ArithError;
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::{GaussianRational, RationalFunction};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("generator {generator} is missing")]
    MissingGenerator { generator: GeneratorId },
    #[error("generator {generator} has shape {rows}x{cols}, expected {dim}x{dim}")]
    Shape {
        generator: GeneratorId,
        rows: usize,
        cols: usize,
        dim: usize,
    },
    #[error(
        "grading violation: {generator} maps {col_label} (degree {col_degree}) onto {row_label} (degree {row_degree})"
    )]
    Grading {
        generator: GeneratorId,
        row: usize,
        col: usize,
        row_label: String,
        col_label: String,
        row_degree: Degree,
        col_degree: Degree,
    },
}

/// A finite-dimensional graded representation: one matrix per generator,
/// acting on column vectors in the labeled, degree-tagged basis.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixRep<S> {
    labels: Vec<String>,
    degrees: Vec<Degree>,
    mats: BTreeMap<GeneratorId, Matrix<S>>,
}

impl<S: Scalar> MatrixRep<S> {
    pub fn new(
        labels: Vec<String>,
        degrees: Vec<Degree>,
        mats: BTreeMap<GeneratorId, Matrix<S>>,
    ) -> Result<Self, RepError> {
        assert_eq!(labels.len(), degrees.len(), "one degree per basis label");
        let dim = labels.len();
        for g in GeneratorId::ALL {
            let m = mats.get(&g).ok_or(RepError::MissingGenerator { generator: g })?;
            if m.rows() != dim || m.cols() != dim {
                return Err(RepError::Shape {
                    generator: g,
                    rows: m.rows(),
                    cols: m.cols(),
                    dim,
                });
            }
        }
        Ok(MatrixRep { labels, degrees, mats })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn basis_degrees(&self) -> &[Degree] {
        &self.degrees
    }

    pub fn mat(&self, g: GeneratorId) -> &Matrix<S> {
        &self.mats[&g]
    }

    pub fn mats(&self) -> &BTreeMap<GeneratorId, Matrix<S>> {
        &self.mats
    }

    /// Replaces one generator matrix (used to build mutants in tests).
    pub fn with_mat(mut self, g: GeneratorId, m: Matrix<S>) -> Self {
        assert_eq!((m.rows(), m.cols()), (self.dim(), self.dim()));
        self.mats.insert(g, m);
        self
    }

    /// First entry that maps a degree-d vector outside degree `d + deg g`.
    pub fn check_grading(&self) -> Result<(), RepError> {
        for g in GeneratorId::ALL {
            for (row, col, _) in self.mat(g).nonzero_entries() {
                if self.degrees[row] != self.degrees[col] + g.degree() {
                    return Err(RepError::Grading {
                        generator: g,
                        row,
                        col,
                        row_label: self.labels[row].clone(),
                        col_label: self.labels[col].clone(),
                        row_degree: self.degrees[row],
                        col_degree: self.degrees[col],
                    });
                }
            }
        }
        Ok(())
    }

    pub fn try_map<T: Scalar, E>(&self, f: impl Fn(&S) -> Result<T, E> + Copy) -> Result<MatrixRep<T>, E> {
        Ok(MatrixRep {
            labels: self.labels.clone(),
            degrees: self.degrees.clone(),
            mats: self
                .mats
                .iter()
                .map(|(g, m)| Ok((*g, m.try_map(f)?)))
                .collect::<Result<_, E>>()?,
        })
    }
}

impl MatrixRep<RationalFunction> {
    pub fn specialize(
        &self,
        e0: &GaussianRational,
        l0: &GaussianRational,
    ) -> Result<MatrixRep<GaussianRational>, ArithError> {
        self.try_map(|x| x.specialize(e0, l0))
    }

    /// Substitutes `E := e`, `λ := l` in every entry.
    pub fn substitute(&self, e: &RationalFunction, l: &RationalFunction) -> Result<Self, ArithError> {
        self.try_map(|x| x.substitute(e, l))
    }
}

/// `M1·M2 − swap_sign(deg1, deg2)·M2·M1`.
pub fn general_bracket<S: Scalar>(rep: &MatrixRep<S>, g1: GeneratorId, g2: GeneratorId) -> Matrix<S> {
    let (a, b) = (rep.mat(g1), rep.mat(g2));
    let ab = a.mul(b);
    let ba = b.mul(a);
    if swap_sign(g1.degree(), g2.degree()) == 1 {
        ab.sub(&ba)
    } else {
        ab.add(&ba)
    }
}

fn rhs_matrix<S: Scalar>(rep: &MatrixRep<S>, rel: &BracketRelation) -> Matrix<S> {
    let mut acc = Matrix::zeros(rep.dim(), rep.dim());
    for (op, c) in &rel.rhs {
        let m = match op {
            Operator::Identity => Matrix::identity(rep.dim()),
            Operator::Gen(g) => rep.mat(*g).clone(),
        };
        let c = c.as_constant().expect("relation coefficients are constants");
        acc = acc.add(&m.scale(&S::from_gaussian(&c)));
    }
    acc
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationResult<S> {
    pub relation: BracketRelation,
    pub pass: bool,
    pub residual: Matrix<S>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationReport<S> {
    pub results: Vec<RelationResult<S>>,
}

impl<S: Scalar> RelationReport<S> {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationResult<S>> {
        self.results.iter().filter(|r| !r.pass)
    }
}

/// Checks the grading, then every relation of [`relation_list`]; a relation
/// passes iff its residual `[[X,Y]] − rhs` is exactly zero.
pub fn verify_relations<S: Scalar>(rep: &MatrixRep<S>) -> Result<RelationReport<S>, RepError> {
    rep.check_grading()?;
    let results = relation_list()
        .into_par_iter()
        .map(|relation| {
            let residual = general_bracket(rep, relation.left, relation.right).sub(&rhs_matrix(rep, &relation));
            RelationResult {
                pass: residual.is_zero(),
                relation,
                residual,
            }
        })
        .collect();
    Ok(RelationReport { results })
}

impl RelationReport<RationalFunction> {
    /// Residuals are listed as `[row, col, text, value]` for nonzero entries.
    pub fn to_json(&self) -> serde_json::Value {
        use crate::arith::json::ratfunc_to_json;
        serde_json::json!({
            "all_pass": self.all_pass(),
            "relations": self.results.iter().map(|r| serde_json::json!({
                "relation": r.relation.to_string(),
                "anticommutator": r.relation.is_anticommutator(),
                "pass": r.pass,
                "residual_nonzero_entries": r.residual.nonzero_entries().iter()
                    .map(|(i, j, v)| serde_json::json!([i, j, v.to_string(), ratfunc_to_json(v)]))
                    .collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::induced::build_DEl;

    #[test]
    fn sign_flip_is_detected() {
        let m = build_DEl();
        let rep = m.rep().clone();
        let q = rep.mat(GeneratorId::Q10).clone();
        let (r, c, v) = q.nonzero_entries()[0].clone();
        let mut flipped = q;
        flipped.set(r, c, -v);
        let report = verify_relations(&rep.with_mat(GeneratorId::Q10, flipped)).unwrap();
        assert!(!report.all_pass());
        let json = report.to_json();
        assert_eq!(json["all_pass"], false);
        let failing: Vec<_> = report.failures().map(|f| f.relation.to_string()).collect();
        assert!(failing.contains(&"{Q10,Q10d} = H".to_string()), "{failing:?}");
        assert!(report.failures().all(|f| !f.residual.is_zero()));
    }
}

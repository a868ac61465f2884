//! Closure, change of basis, decomposition checks, the invariant-subspace
//! probe and intertwiner spaces.

pub mod catalog;
mod decompose;
mod intertwine;
mod irrep4;
mod probe;

use num_traits::Zero;
use thiserror::Error;

use crate::arith::expr::{parse_linear, ExprError};
use crate::arith::ArithError;
use crate::graded::{Degree, GeneratorId, MatrixRep, RepError};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;
use crate::{GaussianRational, NumSubspace, RationalFunction, SymSubspace};

pub use decompose::{block_report, change_of_basis, BasisDiff, ClosureFailure, DecompositionReport, IrrepReport, TableDiff};
pub use intertwine::{intertwiner_dim, intertwiner_space};
pub use irrep4::extract_irrep_4d;
pub use probe::{invariant_subspace_probe, ProbeBlock, ProbeReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ToolError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("basis is singular: rank {rank} of {dim}")]
    Singular { rank: usize, dim: usize },
    #[error("{0}")]
    Invalid(String),
}

/// Exact symbolic computation, or evaluation at `E = e0`, `λ = l0` first.
#[derive(Clone, Debug, PartialEq)]
pub enum Mode {
    Symbolic,
    Specialized(GaussianRational, GaussianRational),
}

/// A subspace in either mode.
#[derive(Clone, Debug, PartialEq)]
pub enum ModeSubspace {
    Symbolic(SymSubspace),
    Specialized(NumSubspace),
}

impl ModeSubspace {
    pub fn dim(&self) -> usize {
        match self {
            ModeSubspace::Symbolic(s) => s.dim(),
            ModeSubspace::Specialized(s) => s.dim(),
        }
    }

    /// Echelon basis rendered over `labels`.
    pub fn render(&self, labels: &[String]) -> Vec<String> {
        match self {
            ModeSubspace::Symbolic(s) => s.basis().iter().map(|v| render_vector(v, labels)).collect(),
            ModeSubspace::Specialized(s) => s.basis().iter().map(|v| render_vector(v, labels)).collect(),
        }
    }
}

fn specialize_vec(v: &[RationalFunction], e0: &GaussianRational, l0: &GaussianRational) -> Result<Vec<GaussianRational>, ArithError> {
    v.iter().map(|x| x.specialize(e0, l0)).collect()
}

/// Echelon basis of the span of `vectors`.
pub fn rref(ambient: usize, vectors: &[Vec<RationalFunction>], mode: &Mode) -> Result<ModeSubspace, ArithError> {
    Ok(match mode {
        Mode::Symbolic => ModeSubspace::Symbolic(Subspace::span(ambient, vectors.iter().cloned())),
        Mode::Specialized(e0, l0) => ModeSubspace::Specialized(Subspace::span(
            ambient,
            vectors.iter().map(|v| specialize_vec(v, e0, l0)).collect::<Result<Vec<_>, _>>()?,
        )),
    })
}

/// Smallest subspace containing `seeds` and stable under every generator.
pub fn closure<S: Scalar>(rep: &MatrixRep<S>, seeds: Vec<Vec<S>>) -> Subspace<S> {
    let mut space = Subspace::zero(rep.dim());
    let mut frontier = seeds;
    while !frontier.is_empty() {
        let before = space.dim();
        let fresh: Vec<Vec<S>> = frontier
            .into_iter()
            .filter(|v| !space.contains(v))
            .collect();
        space.extend(fresh.clone());
        if space.dim() == before {
            break;
        }
        frontier = fresh
            .iter()
            .flat_map(|v| GeneratorId::ALL.map(|g| rep.mat(g).mul_vec(v)))
            .filter(|w| !w.iter().all(S::is_zero))
            .collect();
    }
    space
}

pub fn submodule_closure(
    rep: &MatrixRep<RationalFunction>,
    seeds: &[Vec<RationalFunction>],
    mode: &Mode,
) -> Result<ModeSubspace, ArithError> {
    Ok(match mode {
        Mode::Symbolic => ModeSubspace::Symbolic(closure(rep, seeds.to_vec())),
        Mode::Specialized(e0, l0) => {
            let num = rep.specialize(e0, l0)?;
            let seeds = seeds.iter().map(|v| specialize_vec(v, e0, l0)).collect::<Result<Vec<_>, _>>()?;
            ModeSubspace::Specialized(closure(&num, seeds))
        }
    })
}

/// Degree of a block label such as `chi2` or `sigma`.
pub fn label_degree(label: &str) -> Option<Degree> {
    let family = label.trim_end_matches(|c: char| c.is_ascii_digit());
    match family {
        "v" => Some(Degree::D00),
        "u" => Some(Degree::D11),
        "chi" => Some(Degree::D10),
        "sigma" => Some(Degree::D01),
        _ => None,
    }
}

/// Coordinates of a combination of `labels`.
pub fn parse_vector(src: &str, labels: &[String]) -> Result<Vec<RationalFunction>, ExprError> {
    let lin = parse_linear(src, |s| labels.iter().any(|l| l == s))?;
    if !lin.scalar.is_zero() {
        return Err(ExprError::NonLinear(src.to_string()));
    }
    Ok(labels
        .iter()
        .map(|l| lin.terms.get(l).cloned().unwrap_or_else(RationalFunction::zero))
        .collect())
}

/// Renders `Σ c_k·label_k`, e.g. `E*chi1 - i*lam*sigma2`; `0` when empty.
pub fn render_vector<S: Scalar>(v: &[S], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, l) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let s = c.to_string();
        let (neg, body) = if let Some(rest) = s.strip_prefix('-').filter(|r| !r.contains([' ', '+', '-'])) {
            (true, rest.to_string())
        } else {
            (false, s)
        };
        let term = if body == "1" {
            l.clone()
        } else if body.contains(' ') || body[1..].contains(['+', '-']) {
            format!("({body})*{l}")
        } else {
            format!("{body}*{l}")
        };
        match (out.is_empty(), neg) {
            (true, false) => out.push_str(&term),
            (true, true) => out.push_str(&format!("-{term}")),
            (false, false) => out.push_str(&format!(" + {term}")),
            (false, true) => out.push_str(&format!(" - {term}")),
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn labels_of(spec: &[&str]) -> Vec<String> {
    spec.iter().map(|s| s.to_string()).collect()
}

/// Representation on a block basis, with `H = E·Id`.
pub(crate) fn block_rep(
    labels: &[String],
    mats: impl IntoIterator<Item = (GeneratorId, Matrix<RationalFunction>)>,
) -> Result<MatrixRep<RationalFunction>, ToolError> {
    let degrees = labels
        .iter()
        .map(|l| label_degree(l).ok_or_else(|| ToolError::Invalid(format!("bad block label `{l}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    let mut all: std::collections::BTreeMap<_, _> = mats.into_iter().collect();
    all.entry(GeneratorId::H)
        .or_insert_with(|| Matrix::scalar(labels.len(), RationalFunction::e()));
    Ok(MatrixRep::new(labels.to_vec(), degrees, all)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::induced::{build_DE, build_DEl};

    #[test]
    fn renders_combinations() {
        let labels = labels_of(&["v1", "chi2", "sigma1"]);
        let v = parse_vector("-i/2*lam*v1 + E*chi2 - sigma1", &labels).unwrap();
        assert_eq!(render_vector(&v, &labels), "-1/2*i*lam*v1 + E*chi2 - sigma1");
        let w = parse_vector("(E - lam)/(lam + 2)*v1 - i/lam*chi2", &labels).unwrap();
        let text = render_vector(&w, &labels);
        assert_eq!(parse_vector(&text, &labels).unwrap(), w, "{text}");
        assert_eq!(render_vector(&vec![RationalFunction::zero(); 3], &labels), "0");
    }

    #[test]
    fn closure_of_u1_in_de_is_block_one() {
        let de = build_DE();
        let seed = de.vector("u1").unwrap();
        let c = closure(de.rep(), vec![seed]);
        assert_eq!(c.dim(), 4);
        let block = catalog::de_blocks()[0].vectors.iter().map(|s| de.vector(s).unwrap());
        assert_eq!(Subspace::span(16, block), c);
    }

    #[test]
    fn specialized_closure_dimensions() {
        let del = build_DEl();
        let d1 = catalog::del_blocks()[0].vectors.iter().map(|s| del.vector(s).unwrap()).collect::<Vec<_>>();
        let g = GaussianRational::from_int;
        let at = |e, l, seed: Vec<RationalFunction>| {
            submodule_closure(del.rep(), &[seed], &Mode::Specialized(g(e), g(l))).unwrap().dim()
        };
        assert_eq!(at(1, 1, d1[1].clone()), 4);
        let sum: Vec<RationalFunction> = d1[0].iter().zip(&d1[1]).map(|(a, b)| a + b).collect();
        assert_eq!(at(1, 2, sum), 8);
    }

    #[test]
    fn rref_modes() {
        let f = &RationalFunction::lambda() - &(&RationalFunction::e() * &RationalFunction::e());
        let v = vec![vec![f, RationalFunction::zero()]];
        let g = GaussianRational::from_int;
        assert_eq!(rref(2, &v, &Mode::Symbolic).unwrap().dim(), 1);
        assert_eq!(rref(2, &v, &Mode::Specialized(g(1), g(1))).unwrap().dim(), 0);
    }
}

//! The induced modules D(E,λ) (dimension 32) and D(E) (dimension 16).
//!
//! Basis order is v₁..vₙ, u₁..uₙ, χ₁..χₙ, σ₁..σₙ with n = 8 or 4. The matrix
//! column of a basis vector is the coefficient list of its image.

mod tables;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::arith::expr::{parse_linear, ExprError};
use crate::graded::{Degree, GeneratorId, MatrixRep};
use crate::linalg::Matrix;
use crate::{RationalFunction, SymMatrix, SymRep};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    V,
    U,
    Chi,
    Sigma,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::V, Family::U, Family::Chi, Family::Sigma];

    pub const fn degree(self) -> Degree {
        match self {
            Family::V => Degree::D00,
            Family::U => Degree::D11,
            Family::Chi => Degree::D10,
            Family::Sigma => Degree::D01,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            Family::V => "v",
            Family::U => "u",
            Family::Chi => "chi",
            Family::Sigma => "sigma",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisLabel {
    pub family: Family,
    pub index: u8,
}

impl BasisLabel {
    pub fn degree(self) -> Degree {
        self.family.degree()
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.name(), self.index)
    }
}

impl FromStr for BasisLabel {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(|| format!("bad label `{s}`"))?;
        let (name, idx) = s.split_at(split);
        let family = Family::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| format!("bad label `{s}`"))?;
        let index: u8 = idx.parse().map_err(|_| format!("bad label `{s}`"))?;
        if !(1..=8).contains(&index) {
            return Err(format!("bad label `{s}`"));
        }
        Ok(BasisLabel { family, index })
    }
}

/// A matrix representation on the labeled induced basis.
#[derive(Clone, Debug, PartialEq)]
pub struct InducedModule {
    basis: Vec<BasisLabel>,
    rep: SymRep,
}

impl InducedModule {
    fn from_parts(basis: Vec<BasisLabel>, mats: BTreeMap<GeneratorId, SymMatrix>) -> Self {
        let rep = MatrixRep::new(
            basis.iter().map(ToString::to_string).collect(),
            basis.iter().map(|b| b.degree()).collect(),
            mats,
        )
        .expect("all six generators present with matching shapes");
        InducedModule { basis, rep }
    }

    pub fn rep(&self) -> &SymRep {
        &self.rep
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisLabel] {
        &self.basis
    }

    pub fn position(&self, label: BasisLabel) -> Option<usize> {
        self.basis.iter().position(|b| *b == label)
    }

    /// Coordinates of a linear combination such as `2*E*chi1 - chi4`.
    pub fn vector(&self, src: &str) -> Result<Vec<RationalFunction>, ExprError> {
        let known = |s: &str| s.parse::<BasisLabel>().ok().and_then(|l| self.position(l)).is_some();
        let lin = parse_linear(src, known)?;
        if !lin.scalar.is_zero() {
            return Err(ExprError::NonLinear(src.to_string()));
        }
        let mut out = vec![RationalFunction::zero(); self.dim()];
        for (k, c) in lin.terms {
            let pos = self.position(k.parse().expect("checked label")).expect("checked label");
            out[pos] = c;
        }
        Ok(out)
    }
}

fn labels(n: u8) -> Vec<BasisLabel> {
    Family::ALL
        .into_iter()
        .flat_map(|family| (1..=n).map(move |index| BasisLabel { family, index }))
        .collect()
}

fn table(g: GeneratorId) -> &'static tables::Table {
    match g {
        GeneratorId::Q10 => &tables::Q10,
        GeneratorId::Q10d => &tables::Q10D,
        GeneratorId::Q01 => &tables::Q01,
        GeneratorId::Q01d => &tables::Q01D,
        GeneratorId::Z => &tables::Z,
        GeneratorId::H => unreachable!("H acts as E"),
    }
}

/// D(E,λ), transcribed from the appendix tables; `H = E·Id`.
#[allow(non_snake_case)]
pub fn build_DEl() -> InducedModule {
    let basis = labels(8);
    let shell = InducedModule::from_parts(
        basis.clone(),
        GeneratorId::ALL.into_iter().map(|g| (g, Matrix::zeros(32, 32))).collect(),
    );
    let mut mats = BTreeMap::new();
    mats.insert(GeneratorId::H, Matrix::scalar(32, RationalFunction::e()));
    for g in GeneratorId::ACTING {
        let cols: Vec<Vec<RationalFunction>> = table(g)
            .iter()
            .flatten()
            .map(|src| shell.vector(src).expect("appendix table entries parse"))
            .collect();
        mats.insert(g, Matrix::from_columns(32, &cols));
    }
    InducedModule::from_parts(basis, mats)
}

/// D(E): λ = 0 and only indices 1..4 kept; components along index 5..8
/// vectors are dropped.
#[allow(non_snake_case)]
pub fn build_DE() -> InducedModule {
    let full = build_DEl();
    let keep: Vec<usize> = (0..32).filter(|k| k % 8 < 4).collect();
    let zero = RationalFunction::zero();
    let mats = full
        .rep
        .mats()
        .iter()
        .map(|(g, m)| {
            let m = m
                .submatrix(&keep, &keep)
                .try_map(|x| x.substitute(&RationalFunction::e(), &zero))
                .expect("table entries are polynomial");
            (*g, m)
        })
        .collect();
    InducedModule::from_parts(labels(4), mats)
}

/// `Z·Z`.
pub fn casimir_eval(m: &InducedModule) -> SymMatrix {
    let z = m.rep.mat(GeneratorId::Z);
    z.mul(z)
}

/// Nonzero entry counts of the Q10, Q10d, Q01, Q01d, Z matrices of D(E,λ),
/// recorded after the first verified build.
pub const DEL_NONZERO_COUNTS: [usize; 5] = [52, 44, 44, 52, 32];
/// The same for D(E).
pub const DE_NONZERO_COUNTS: [usize; 5] = [16, 13, 13, 16, 0];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::verify_relations;
    use crate::GaussianRational;

    #[test]
    fn label_roundtrip() {
        let l: BasisLabel = "sigma7".parse().unwrap();
        assert_eq!(l.to_string(), "sigma7");
        assert_eq!(l.degree(), Degree::D01);
        assert!("w1".parse::<BasisLabel>().is_err());
        assert!("v9".parse::<BasisLabel>().is_err());
    }

    #[test]
    fn z_columns() {
        let m = build_DEl();
        let z = m.rep().mat(GeneratorId::Z);
        let v1 = m.position("v1".parse().unwrap()).unwrap();
        let u5 = m.position("u5".parse().unwrap()).unwrap();
        assert_eq!(z.column(v1), m.vector("u5").unwrap());
        assert_eq!(z.column(u5), m.vector("lam*v1").unwrap());
        let v5 = m.position("v5".parse().unwrap()).unwrap();
        assert!(m.rep().mat(GeneratorId::Q10).column(v5).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn relations_hold() {
        for m in [build_DEl(), build_DE()] {
            let report = verify_relations(m.rep()).unwrap();
            let bad: Vec<String> = report.failures().map(|r| r.relation.to_string()).collect();
            assert!(bad.is_empty(), "failing relations: {bad:?}");
        }
    }

    #[test]
    fn casimir() {
        let del = build_DEl();
        assert_eq!(casimir_eval(&del), Matrix::scalar(32, RationalFunction::lambda()));
        let spec = casimir_eval(&del)
            .try_map(|x| x.specialize(&GaussianRational::from_int(5), &GaussianRational::from_int(3)))
            .unwrap();
        assert_eq!(spec, Matrix::scalar(32, GaussianRational::from_int(3)));
        let de = build_DE();
        assert!(casimir_eval(&de).is_zero());
        assert!(de.rep().mat(GeneratorId::Z).is_zero());
    }

    #[test]
    fn restriction_drops_descendants() {
        let de = build_DE();
        let u1 = de.position("u1".parse().unwrap()).unwrap();
        assert_eq!(
            de.rep().mat(GeneratorId::Q10d).column(u1),
            de.vector("2*E*sigma1 - sigma3").unwrap()
        );
    }

    #[test]
    fn nonzero_checksums() {
        let counts = |m: &InducedModule| GeneratorId::ACTING.map(|g| m.rep().mat(g).nonzero_count());
        assert_eq!(counts(&build_DEl()), DEL_NONZERO_COUNTS);
        assert_eq!(counts(&build_DE()), DE_NONZERO_COUNTS);
    }
}

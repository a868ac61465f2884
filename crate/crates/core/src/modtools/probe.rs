use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::Zero;
use serde_json::{json, Value};

use super::catalog::del_blocks;
use super::{block_report, closure, render_vector, IrrepReport, ToolError};
use crate::graded::GeneratorId;
use crate::induced::build_DEl;
use crate::linalg::Subspace;
use crate::GaussianRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ProbeBlock {
    D1,
    D2,
}

impl ProbeBlock {
    /// The seed `(c1, c2)` that spans the invariant subspace on the locus.
    pub fn reference_seed(self) -> (GaussianRational, GaussianRational) {
        match self {
            ProbeBlock::D1 => (GaussianRational::zero(), GaussianRational::from_int(1)),
            ProbeBlock::D2 => (GaussianRational::from_int(1), GaussianRational::zero()),
        }
    }

    pub(crate) fn report(self) -> &'static IrrepReport {
        static D1: OnceLock<IrrepReport> = OnceLock::new();
        static D2: OnceLock<IrrepReport> = OnceLock::new();
        let (cell, idx) = match self {
            ProbeBlock::D1 => (&D1, 0),
            ProbeBlock::D2 => (&D2, 2),
        };
        cell.get_or_init(|| {
            let del = build_DEl();
            let spec = &del_blocks()[idx];
            let vectors = spec.vectors.iter().map(|s| del.vector(s).expect("catalog parses")).collect();
            let labels: Vec<String> = spec.labels.iter().map(|s| s.to_string()).collect();
            block_report(del.rep(), spec.name, &labels, vectors, spec.printed_table).expect("catalog block is regular")
        })
    }
}

impl fmt::Display for ProbeBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProbeBlock::D1 => "D1",
            ProbeBlock::D2 => "D2",
        })
    }
}

impl FromStr for ProbeBlock {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "D1" => Ok(ProbeBlock::D1),
            "D2" => Ok(ProbeBlock::D2),
            _ => Err(format!("unknown block `{s}` (expected D1 or D2)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbeReport {
    pub block: ProbeBlock,
    pub e0: GaussianRational,
    pub l0: GaussianRational,
    pub seed: (GaussianRational, GaussianRational),
    pub dim: usize,
    /// `Q10 w`, `Q10d w`, `Q01 Z w`, `Q01d Z w` in block coordinates.
    pub witnesses: Vec<(String, String)>,
    pub invariant_basis: Option<Vec<String>>,
}

impl ProbeReport {
    pub fn to_json(&self) -> Value {
        json!({
            "block": self.block.to_string(),
            "E": self.e0.to_string(),
            "lambda": self.l0.to_string(),
            "seed": [self.seed.0.to_string(), self.seed.1.to_string()],
            "dim": self.dim,
            "witnesses": self.witnesses.iter().map(|(k, v)| json!({"name": k, "vector": v})).collect::<Vec<_>>(),
            "invariant_basis": self.invariant_basis,
        })
    }
}

/// Closure of `c1·v1 + c2·v2` inside the D1 or D2 block specialized at
/// `(e0, l0)`.
pub fn invariant_subspace_probe(
    block: ProbeBlock,
    e0: &GaussianRational,
    l0: &GaussianRational,
    seed: (GaussianRational, GaussianRational),
) -> Result<ProbeReport, ToolError> {
    if e0.is_zero() {
        return Err(ToolError::Invalid("E = 0 is a pole of the rescaled basis".into()));
    }
    if seed.0.is_zero() && seed.1.is_zero() {
        return Err(ToolError::Invalid("seed coefficients must not both vanish".into()));
    }
    let report = block.report();
    let rep = report.rep().expect("catalog block is closed").specialize(e0, l0)?;
    let mut w = vec![GaussianRational::zero(); 8];
    w[0] = seed.0.clone();
    w[1] = seed.1.clone();
    let zw = rep.mat(GeneratorId::Z).mul_vec(&w);
    let labels = &report.labels;
    let witnesses = vec![
        ("Q10 w".to_string(), render_vector(&rep.mat(GeneratorId::Q10).mul_vec(&w), labels)),
        ("Q10d w".to_string(), render_vector(&rep.mat(GeneratorId::Q10d).mul_vec(&w), labels)),
        ("Q01 Z w".to_string(), render_vector(&rep.mat(GeneratorId::Q01).mul_vec(&zw), labels)),
        ("Q01d Z w".to_string(), render_vector(&rep.mat(GeneratorId::Q01d).mul_vec(&zw), labels)),
    ];
    let space: Subspace<GaussianRational> = closure(&rep, vec![w]);
    let dim = space.dim();
    let invariant_basis = (dim == 4).then(|| space.basis().iter().map(|v| render_vector(v, labels)).collect());
    Ok(ProbeReport {
        block,
        e0: e0.clone(),
        l0: l0.clone(),
        seed,
        dim,
        witnesses,
        invariant_basis,
    })
}


#[cfg(test)]
mod tests {
    use super::*;

    fn g(k: i64) -> GaussianRational {
        GaussianRational::from_int(k)
    }

    #[test]
    fn reference_cases() {
        let d1 = invariant_subspace_probe(ProbeBlock::D1, &g(1), &g(1), (g(0), g(1))).unwrap();
        assert_eq!(d1.dim, 4);
        let d2 = invariant_subspace_probe(ProbeBlock::D2, &g(2), &g(4), (g(1), g(0))).unwrap();
        assert_eq!(d2.dim, 4);
        let off = invariant_subspace_probe(ProbeBlock::D1, &g(1), &g(3), (g(0), g(1))).unwrap();
        assert_eq!(off.dim, 8);
        assert!(invariant_subspace_probe(ProbeBlock::D1, &g(0), &g(0), (g(0), g(1))).is_err());
    }

    #[test]
    fn d1_witnesses_are_in_d1_coordinates() {
        let r = invariant_subspace_probe(ProbeBlock::D1, &g(2), &g(3), (g(0), g(1))).unwrap();
        assert_eq!(r.witnesses[0].1, "0");
        assert_eq!(r.witnesses[1].1, "i*chi1 + 2*chi2");
        assert_eq!(r.witnesses[3].1, "2*chi1 - 3*i*chi2");
    }
}

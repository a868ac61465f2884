use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::catalog::{BlockSpec, PrintedTable};
use super::{block_rep, labels_of, parse_vector, render_vector, ToolError};
use crate::arith::json::ratfunc_to_json;
use crate::graded::{verify_relations, GeneratorId, MatrixRep};
use crate::induced::InducedModule;
use crate::linalg::{rank, solve, Matrix, Subspace};
use crate::{RationalFunction, SymMatrix};

/// A generator image that leaves the block.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosureFailure {
    pub generator: GeneratorId,
    pub column: String,
}

/// A printed table entry that differs from the regenerated one.
#[derive(Clone, Debug, PartialEq)]
pub struct TableDiff {
    pub generator: GeneratorId,
    pub column: String,
    pub printed: String,
    pub regenerated: String,
}

/// A printed basis vector that differs from the canonical one.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisDiff {
    pub label: String,
    pub printed: String,
    pub corrected: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IrrepReport {
    pub block: String,
    pub dim: usize,
    pub labels: Vec<String>,
    /// Block action matrices; absent when the block is not closed.
    pub action_table: Option<BTreeMap<GeneratorId, SymMatrix>>,
    pub closure_passed: bool,
    pub closure_failures: Vec<ClosureFailure>,
    pub relations_pass: bool,
    pub matches_reference: bool,
    pub diffs: Vec<TableDiff>,
    pub basis_diffs: Vec<BasisDiff>,
    /// Whether the printed basis (when it differs) spans a closed subspace.
    pub printed_basis_closed: Option<bool>,
}

impl IrrepReport {
    pub fn rep(&self) -> Option<MatrixRep<RationalFunction>> {
        let table = self.action_table.as_ref()?;
        block_rep(&self.labels, table.clone()).ok()
    }

    /// Regenerated image of each basis vector, rendered over the block labels.
    pub fn rendered_table(&self) -> BTreeMap<GeneratorId, Vec<String>> {
        let Some(table) = &self.action_table else {
            return BTreeMap::new();
        };
        table
            .iter()
            .map(|(g, m)| (*g, (0..m.cols()).map(|c| render_vector(&m.column(c), &self.labels)).collect()))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let table: serde_json::Map<String, Value> = self
            .action_table
            .iter()
            .flatten()
            .map(|(g, m)| {
                let cols: Vec<Value> = (0..m.cols())
                    .map(|c| {
                        json!({
                            "image_of": self.labels[c],
                            "text": render_vector(&m.column(c), &self.labels),
                            "coords": m.column(c).iter().map(ratfunc_to_json).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                (g.name().to_string(), Value::Array(cols))
            })
            .collect();
        json!({
            "block": self.block,
            "dim": self.dim,
            "labels": self.labels,
            "closure_passed": self.closure_passed,
            "closure_failures": self.closure_failures.iter().map(|f| json!({"generator": f.generator.name(), "column": f.column})).collect::<Vec<_>>(),
            "relations_pass": self.relations_pass,
            "matches_reference": self.matches_reference,
            "action_table": table,
            "diffs": self.diffs.iter().map(|d| json!({
                "generator": d.generator.name(), "column": d.column, "printed": d.printed, "regenerated": d.regenerated,
            })).collect::<Vec<_>>(),
            "basis_diffs": self.basis_diffs.iter().map(|d| json!({
                "label": d.label, "printed": d.printed, "corrected": d.corrected,
            })).collect::<Vec<_>>(),
            "printed_basis_closed": self.printed_basis_closed,
        })
    }
}

/// Block action `A` with `M·B = B·A`, or the offending columns.
fn block_action(rep: &MatrixRep<RationalFunction>, basis: &SymMatrix, g: GeneratorId, labels: &[String]) -> Result<SymMatrix, Vec<ClosureFailure>> {
    let image = rep.mat(g).mul(basis);
    if let Some(a) = solve(basis, &image) {
        return Ok(a);
    }
    let cols: Vec<Vec<RationalFunction>> = (0..basis.cols()).map(|c| basis.column(c)).collect();
    let span = Subspace::span(basis.rows(), cols);
    Err((0..image.cols())
        .filter(|&c| !span.contains(&image.column(c)))
        .map(|c| ClosureFailure { generator: g, column: labels[c].clone() })
        .collect())
}

fn is_closed(rep: &MatrixRep<RationalFunction>, basis: &SymMatrix) -> bool {
    let cols: Vec<Vec<RationalFunction>> = (0..basis.cols()).map(|c| basis.column(c)).collect();
    let span = Subspace::span(basis.rows(), cols.clone());
    span.dim() == cols.len()
        && GeneratorId::ACTING
            .iter()
            .all(|g| cols.iter().all(|v| span.contains(&rep.mat(*g).mul_vec(v))))
}

/// Regenerates the action on the block spanned by `vectors` and diffs it
/// against `printed`.
pub fn block_report(
    rep: &MatrixRep<RationalFunction>,
    name: &str,
    labels: &[String],
    vectors: Vec<Vec<RationalFunction>>,
    printed: PrintedTable,
) -> Result<IrrepReport, ToolError> {
    let basis = Matrix::from_columns(rep.dim(), &vectors);
    let dim = vectors.len();
    let r = rank(&basis);
    if r < dim {
        return Err(ToolError::Singular { rank: r, dim });
    }
    let mut table = BTreeMap::new();
    let mut failures = Vec::new();
    for g in GeneratorId::ALL {
        match block_action(rep, &basis, g, labels) {
            Ok(a) => {
                table.insert(g, a);
            }
            Err(f) => failures.extend(f),
        }
    }
    let closure_passed = failures.is_empty();
    let mut diffs = Vec::new();
    let mut relations_pass = false;
    if closure_passed {
        for (g, cols) in printed {
            let a = &table[g];
            for (c, src) in cols.iter().enumerate() {
                let expected = parse_vector(src, labels)?;
                let got = a.column(c);
                if got != expected {
                    diffs.push(TableDiff {
                        generator: *g,
                        column: labels[c].clone(),
                        printed: src.to_string(),
                        regenerated: render_vector(&got, labels),
                    });
                }
            }
        }
        let brep = block_rep(labels, table.clone())?;
        relations_pass = verify_relations(&brep).map(|r| r.all_pass()).unwrap_or(false);
    }
    Ok(IrrepReport {
        block: name.to_string(),
        dim,
        labels: labels.to_vec(),
        matches_reference: closure_passed && diffs.is_empty(),
        action_table: closure_passed.then_some(table),
        closure_passed,
        closure_failures: failures,
        relations_pass,
        diffs,
        basis_diffs: Vec::new(),
        printed_basis_closed: None,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecompositionReport {
    pub ambient_dim: usize,
    pub rank: usize,
    pub blocks: Vec<IrrepReport>,
}

impl DecompositionReport {
    pub fn spans(&self) -> bool {
        self.rank == self.ambient_dim
    }

    pub fn all_closed(&self) -> bool {
        self.blocks.iter().all(|b| b.closure_passed && b.relations_pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ambient_dim": self.ambient_dim,
            "rank": self.rank,
            "spans": self.spans(),
            "blocks": self.blocks.iter().map(IrrepReport::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Conjugates the module into the concatenated block bases, checks each block
/// is closed, regenerates its table and diffs it (and the printed basis)
/// against the catalog.
pub fn change_of_basis(module: &InducedModule, blocks: &[BlockSpec]) -> Result<DecompositionReport, ToolError> {
    let parsed: Vec<(Vec<Vec<RationalFunction>>, Vec<Vec<RationalFunction>>)> = blocks
        .iter()
        .map(|b| {
            let canon = b.vectors.iter().map(|s| module.vector(s)).collect::<Result<Vec<_>, _>>()?;
            let printed = b.printed_vectors.iter().map(|s| module.vector(s)).collect::<Result<Vec<_>, _>>()?;
            Ok((canon, printed))
        })
        .collect::<Result<_, ToolError>>()?;
    let all: Vec<Vec<RationalFunction>> = parsed.iter().flat_map(|(c, _)| c.iter().cloned()).collect();
    let r = rank(&Matrix::from_columns(module.dim(), &all));
    if r < module.dim() {
        return Err(ToolError::Singular { rank: r, dim: module.dim() });
    }
    let reports = blocks
        .par_iter()
        .zip(parsed.par_iter())
        .map(|(spec, (canon, printed))| {
            let labels = labels_of(spec.labels);
            let mut report = block_report(module.rep(), spec.name, &labels, canon.clone(), spec.printed_table)?;
            for ((label, (c, p)), (cs, ps)) in labels
                .iter()
                .zip(canon.iter().zip(printed))
                .zip(spec.vectors.iter().zip(spec.printed_vectors))
            {
                if c != p {
                    report.basis_diffs.push(BasisDiff {
                        label: label.clone(),
                        printed: ps.to_string(),
                        corrected: cs.to_string(),
                    });
                }
            }
            if !report.basis_diffs.is_empty() {
                let pb = Matrix::from_columns(module.dim(), printed);
                report.printed_basis_closed = Some(is_closed(module.rep(), &pb));
            }
            Ok(report)
        })
        .collect::<Result<Vec<_>, ToolError>>()?;
    Ok(DecompositionReport {
        ambient_dim: module.dim(),
        rank: r,
        blocks: reports,
    })
}

//! The acceptance suite as data: every criterion evaluated from its literal
//! statement, one `Check` per sub-claim.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::graded::{verify_relations, GeneratorId};
use crate::induced::{build_DE, build_DEl, casimir_eval};
use crate::linalg::Matrix;
use crate::mech::{
    action1_report, analyze, example_prepotential, operator_algebra, Calculus, LagrangianId, MechError, Variation,
    VariableSystem,
};
use crate::modtools::catalog::{de_blocks, del_blocks};
use crate::modtools::{
    change_of_basis, extract_irrep_4d, intertwiner_dim, invariant_subspace_probe, DecompositionReport, ProbeBlock,
    ToolError,
};
use crate::{GaussianRational, RationalFunction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(criterion: u8, name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            criterion,
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({"criterion": self.criterion, "name": self.name, "pass": self.pass, "detail": self.detail})
    }
}

/// Checks that fail by analysis of the underlying mathematics, not by defect.
/// See the README for the derivations.
pub const EXPECTED_FAILURES: [&str; 3] = ["Lg invariant under delta01", "Lg invariant under delta11", "literal identity"];

/// Printed table entries that disagree with the regenerated tables and are
/// accounted for by a documented erratum, as `(block, generator, column)`.
pub const DOCUMENTED_TABLE_ERRATA: [(&str, &str, &str); 3] = [
    ("DE.4", "Q01", "sigma"),
    ("DEl.D2", "Q10d", "sigma1"),
    ("DEl.D2t", "Q10d", "sigma1"),
];

/// Default specialization panel with the expected closure dimension.
pub const PROBE_PANEL: [((i64, i64), usize); 5] = [((1, 2), 8), ((2, 3), 8), ((3, -1), 8), ((1, 1), 4), ((2, 4), 4)];

#[derive(Debug, thiserror::Error)]
pub enum AcceptanceError {
    #[error(transparent)]
    Tool(#[from] ToolError),
    #[error(transparent)]
    Mech(#[from] MechError),
    #[error("{0}")]
    Other(String),
}

type Result<T> = std::result::Result<T, AcceptanceError>;

fn g(k: i64) -> GaussianRational {
    GaussianRational::from_int(k)
}

pub fn criterion1() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (name, module) in [("DEl", build_DEl()), ("DE", build_DE())] {
        let report = verify_relations(module.rep()).map_err(|e| AcceptanceError::Other(e.to_string()))?;
        let failing: Vec<String> = report.failures().map(|r| r.relation.to_string()).collect();
        out.push(Check::new(
            1,
            format!("{name}: {} relations", report.results.len()),
            report.all_pass() && report.results.len() == 21,
            if failing.is_empty() { "zero residuals".into() } else { format!("failing: {}", failing.join(", ")) },
        ));
        let expected = if name == "DEl" {
            Matrix::scalar(module.dim(), RationalFunction::lambda())
        } else {
            Matrix::zeros(module.dim(), module.dim())
        };
        let z2 = casimir_eval(&module);
        out.push(Check::new(
            1,
            format!("{name}: Z^2 = {}", if name == "DEl" { "lam*Id" } else { "0" }),
            z2 == expected,
            format!("{} nonzero entries", z2.nonzero_count()),
        ));
    }
    Ok(out)
}

fn decomposition_checks(
    criterion: u8,
    r: &DecompositionReport,
    block_dim: usize,
) -> Vec<Check> {
    let mut out = vec![Check::new(
        criterion,
        "basis spans",
        r.spans(),
        format!("rank {} of {}", r.rank, r.ambient_dim),
    )];
    for b in &r.blocks {
        out.push(Check::new(
            criterion,
            format!("{} closed, dim {block_dim}, relations hold", b.block),
            b.closure_passed && b.relations_pass && b.dim == block_dim,
            format!("dim {}, closed {}, relations {}", b.dim, b.closure_passed, b.relations_pass),
        ));
        let unexplained: Vec<String> = b
            .diffs
            .iter()
            .filter(|d| {
                !DOCUMENTED_TABLE_ERRATA.contains(&(b.block.as_str(), d.generator.name(), d.column.as_str()))
            })
            .map(|d| format!("{} {}: printed {} regenerated {}", d.generator, d.column, d.printed, d.regenerated))
            .collect();
        out.push(Check::new(
            criterion,
            format!("{} table matches the reference", b.block),
            unexplained.is_empty(),
            if b.diffs.is_empty() {
                "entry-for-entry".to_string()
            } else if unexplained.is_empty() {
                format!("{} documented erratum entr(ies), corrected block passes the relations", b.diffs.len())
            } else {
                unexplained.join("; ")
            },
        ));
    }
    out
}

pub fn criterion2() -> Result<Vec<Check>> {
    let r = change_of_basis(&build_DE(), &de_blocks())?;
    let mut out = decomposition_checks(2, &r, 4);
    out.push(Check::new(2, "four blocks", r.blocks.len() == 4, format!("{} blocks", r.blocks.len())));
    Ok(out)
}

pub fn criterion3() -> Result<Vec<Check>> {
    let r = change_of_basis(&build_DEl(), &del_blocks())?;
    let mut out = decomposition_checks(3, &r, 8);
    out.push(Check::new(3, "four blocks", r.blocks.len() == 4, format!("{} blocks", r.blocks.len())));
    Ok(out)
}

pub fn criterion4() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for block in [ProbeBlock::D1, ProbeBlock::D2] {
        for ((e, l), want) in PROBE_PANEL {
            let r = invariant_subspace_probe(block, &g(e), &g(l), block.reference_seed())?;
            out.push(Check::new(
                4,
                format!("{block} at (E, lam) = ({e}, {l}): dim {want}"),
                r.dim == want,
                format!("closure dim {}", r.dim),
            ));
        }
    }
    Ok(out)
}

pub fn criterion5() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let del = change_of_basis(&build_DEl(), &del_blocks())?;
    let rep = |r: &DecompositionReport, k: usize| {
        r.blocks[k]
            .rep()
            .ok_or_else(|| AcceptanceError::Other(format!("block {} not closed", r.blocks[k].block)))
    };
    let (d1, d2) = (rep(&del, 0)?, rep(&del, 2)?);
    for (e, l) in [(1, 2), (2, 3), (3, -1)] {
        let d = intertwiner_dim(&d1, &d2, &g(e), &g(l))?;
        out.push(Check::new(5, format!("D1 vs D2 at ({e}, {l})"), d == 0, format!("intertwiner dim {d}")));
    }
    let de = change_of_basis(&build_DE(), &de_blocks())?;
    let reps = (0..de.blocks.len()).map(|k| rep(&de, k)).collect::<Result<Vec<_>>>()?;
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            let d = intertwiner_dim(&reps[i], &reps[j], &g(2), &g(0))?;
            out.push(Check::new(
                5,
                format!("{} vs {} at E = 2", de.blocks[i].block, de.blocks[j].block),
                d == 0,
                format!("intertwiner dim {d}"),
            ));
        }
    }
    Ok(out)
}

pub fn criterion6() -> Result<Vec<Check>> {
    [ProbeBlock::D1, ProbeBlock::D2]
        .into_iter()
        .map(|block| {
            let r = extract_irrep_4d(block, true)?;
            Ok(Check::new(
                6,
                format!("rescaled 4-dim irrep in {block}"),
                r.closure_passed && r.relations_pass && r.matches_reference,
                format!("closed {}, relations {}, {} table diffs", r.closure_passed, r.relations_pass, r.diffs.len()),
            ))
        })
        .collect()
}

pub fn criterion7(calc: &Calculus) -> Result<Vec<Check>> {
    let systems = [
        VariableSystem::base(),
        VariableSystem::x_f(calc)?,
        VariableSystem::y_a_f(calc)?,
        VariableSystem::y_a_z(calc)?,
        VariableSystem::a_z(calc)?,
    ];
    systems
        .iter()
        .map(|sys| {
            let checks = operator_algebra(sys, calc)?;
            let failing: Vec<String> = checks
                .iter()
                .filter(|c| !c.pass())
                .map(|c| format!("{} on {}", c.relation, c.field))
                .collect();
            Ok(Check::new(
                7,
                format!("operator algebra on {}", sys.name()),
                failing.is_empty(),
                if failing.is_empty() { format!("{} identities", checks.len()) } else { failing.join(", ") },
            ))
        })
        .collect()
}

const CATALOGUE: [LagrangianId; 5] = [
    LagrangianId::L0,
    LagrangianId::L1,
    LagrangianId::L2,
    LagrangianId::L3,
    LagrangianId::L4,
];

/// Criteria 8 and 9 share the catalogue analysis.
pub fn criteria8_9(calc: &Calculus) -> Result<(Vec<Check>, Vec<Check>)> {
    let reports = CATALOGUE
        .par_iter()
        .map(|&id| analyze(id, calc))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let mut c8 = Vec::new();
    let mut c9 = Vec::new();
    for r in &reports {
        let name = &r.lagrangian.name;
        for inv in &r.invariance {
            c8.push(Check::new(
                8,
                format!("{name} invariant under {}", inv.variation),
                inv.witness.is_some(),
                match &inv.witness {
                    Some(k) => format!("K = {k}"),
                    None => format!("variation {}", inv.variation_expr),
                },
            ));
        }
        for c in &r.charges {
            c9.push(Check::new(
                9,
                format!("{name} charge {} matches and is conserved", c.generator),
                c.matches() && c.conserved,
                format!(
                    "{}{}",
                    c.charge,
                    c.ratio.as_ref().map(|k| format!(" = ({k}) x reference")).unwrap_or_default()
                ),
            ));
        }
        if r.charges.len() != 5 {
            c9.push(Check::new(9, format!("{name} charges computed"), false, "not invariant"));
        }
    }
    let z = |k: usize| reports[k].charges.iter().find(|c| c.generator == GeneratorId::Z);
    let zcheck = |k: usize, want_zero: bool, on_shell: bool| -> Check {
        let name = &reports[k].lagrangian.name;
        let (pass, text) = match z(k) {
            Some(c) => {
                let p = if on_shell { &c.on_shell } else { &c.charge };
                (p.is_zero() == want_zero, p.to_string())
            }
            None => (false, "missing".into()),
        };
        let what = match (want_zero, on_shell) {
            (true, false) => "Z = 0",
            (true, true) => "Z = 0 on shell",
            _ => "Z nonzero",
        };
        Check::new(9, format!("{name}: {what}"), pass, text)
    };
    c9.push(zcheck(1, true, false));
    c9.push(zcheck(2, false, false));
    c9.push(zcheck(2, true, true));
    c9.push(zcheck(3, false, true));
    c9.push(zcheck(4, true, false));
    let l0_nonzero = reports[0].charges.len() == 5 && reports[0].charges.iter().all(|c| !c.charge.is_zero());
    c9.push(Check::new(9, "L0: all five charges nonzero", l0_nonzero, ""));

    let a = action1_report(&example_prepotential(), calc)?;
    c8.push(Check::new(
        8,
        "Lg matches the reference display up to a total derivative",
        a.matches_reference == Some(true),
        a.base.lagrangian.expr.to_string(),
    ));
    for inv in &a.base.invariance {
        c8.push(Check::new(
            8,
            format!("Lg invariant under {}", inv.variation),
            inv.witness.is_some(),
            match &inv.witness {
                Some(k) => format!("K = {k}"),
                None => "variational derivative nonzero".to_string(),
            },
        ));
    }
    debug_assert_eq!(a.base.invariance.len(), Variation::ALL.len());
    Ok((c8, c9))
}

pub fn criterion10(calc: &Calculus) -> Result<Vec<Check>> {
    let a = action1_report(&example_prepotential(), calc)?;
    Ok(vec![
        Check::new(10, "literal identity", a.q10_identity, "Q10 L == -i d/dt(Z Q01d Q01 g)"),
        Check::new(
            10,
            "identity with the missing Q10 restored",
            a.q10_identity_with_q10,
            "Q10 L == -i d/dt(Z Q10 Q01d Q01 g)",
        ),
    ])
}

/// Criteria 1 to 10. Criterion 11 (property suites) runs under `cargo test`.
pub fn run(calc: &Calculus) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    out.extend(criterion1()?);
    out.extend(criterion2()?);
    out.extend(criterion3()?);
    out.extend(criterion4()?);
    out.extend(criterion5()?);
    out.extend(criterion6()?);
    out.extend(criterion7(calc)?);
    let (c8, c9) = criteria8_9(calc)?;
    out.extend(c8);
    out.extend(c9);
    out.extend(criterion10(calc)?);
    Ok(out)
}

/// Failing checks not in `EXPECTED_FAILURES`, and expected failures that
/// unexpectedly pass.
pub fn deviations(checks: &[Check]) -> (Vec<String>, Vec<String>) {
    let failing: BTreeSet<&str> = checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
    let expected: BTreeSet<&str> = EXPECTED_FAILURES.into_iter().collect();
    (
        failing.difference(&expected).map(|s| s.to_string()).collect(),
        expected.difference(&failing).map(|s| s.to_string()).collect(),
    )
}

/// `criterion N PASS|FAIL name: detail`.
pub fn render_line(c: &Check) -> String {
    let tag = match (c.pass, EXPECTED_FAILURES.contains(&c.name.as_str())) {
        (true, _) => "PASS",
        (false, true) => "FAIL (expected, see README)",
        (false, false) => "FAIL",
    };
    if c.detail.is_empty() {
        format!("criterion {:>2} {tag} {}", c.criterion, c.name)
    } else {
        format!("criterion {:>2} {tag} {}: {}", c.criterion, c.name, c.detail)
    }
}

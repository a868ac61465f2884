//! Text forms of the reports.

use std::fmt::Write as _;

use serde_json::Value;

use z2susy::acceptance::{render_line, Check};
use z2susy::graded::{GeneratorId, RelationReport};
use z2susy::mech::{Action1Report, MechanicsReport};
use z2susy::modtools::catalog::errata;
use z2susy::modtools::{render_vector, DecompositionReport, IrrepReport, ProbeReport};
use z2susy::{RationalFunction, SymRep};

fn mark(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn relations(
    rep: &str,
    dim: usize,
    report: &RelationReport<RationalFunction>,
    casimir: &str,
    casimir_ok: bool,
    z_zero: bool,
) -> String {
    let mut s = format!("{rep} (dim {dim}): {} relations\n", report.results.len());
    for r in &report.results {
        let _ = writeln!(s, "  {} {}", mark(r.pass), r.relation);
        for (i, j, v) in r.residual.nonzero_entries() {
            let _ = writeln!(s, "      residual [{i},{j}] = {v}");
        }
    }
    let _ = writeln!(s, "  {} Z^2 = {casimir}", mark(casimir_ok));
    let _ = writeln!(s, "  Z matrix is zero: {z_zero}");
    s
}

fn irrep(s: &mut String, b: &IrrepReport, title: &str) {
    let _ = writeln!(
        s,
        "{title} (dim {}): closed {}, relations {}, matches reference {}",
        b.dim, b.closure_passed, b.relations_pass, b.matches_reference
    );
    for f in &b.closure_failures {
        let _ = writeln!(s, "  leaves the block: {} {}", f.generator, f.column);
    }
    for (g, cols) in b.rendered_table() {
        if g == GeneratorId::H {
            continue;
        }
        let _ = writeln!(s, "  {:<4} ({})", g.name(), cols.join(", "));
    }
    for d in &b.diffs {
        let _ = writeln!(
            s,
            "  erratum: {} {}: printed {}, regenerated {}",
            d.generator, d.column, d.printed, d.regenerated
        );
    }
    for d in &b.basis_diffs {
        let _ = writeln!(s, "  erratum: basis {}: printed {}, corrected {}", d.label, d.printed, d.corrected);
    }
    if let Some(c) = b.printed_basis_closed {
        let _ = writeln!(s, "  printed basis closed: {c}");
    }
}

pub fn decomposition(rep: &str, r: &DecompositionReport, irreps: &[(bool, IrrepReport)]) -> String {
    let mut s = format!("{rep}: block bases have rank {} of {}\n", r.rank, r.ambient_dim);
    for b in &r.blocks {
        irrep(&mut s, b, &b.block);
    }
    for (rescaled, b) in irreps {
        let title = format!("{}{}", b.block, if *rescaled { " rescaled" } else { "" });
        irrep(&mut s, b, &title);
    }
    let listed = errata();
    if r.blocks.iter().any(|b| !b.diffs.is_empty() || !b.basis_diffs.is_empty()) {
        let _ = writeln!(s, "documented errata:");
        for e in &listed {
            let _ = writeln!(s, "  {}: printed {}; corrected {}", e.location, e.printed, e.corrected);
        }
    }
    s
}

pub fn probe(rows: &[(ProbeReport, Option<usize>, bool)], warnings: &[String]) -> String {
    let mut s = String::new();
    for (r, expected, pass) in rows {
        let exp = expected.map(|d| format!(" (expected {d})")).unwrap_or_default();
        let _ = writeln!(
            s,
            "{} {} E={} lam={} seed=({}, {}): dim {}{exp}",
            mark(*pass),
            r.block,
            r.e0,
            r.l0,
            r.seed.0,
            r.seed.1,
            r.dim
        );
        for (name, v) in &r.witnesses {
            let _ = writeln!(s, "    {name} = {v}");
        }
        if let Some(basis) = &r.invariant_basis {
            let _ = writeln!(s, "    invariant subspace: {}", basis.join("; "));
        }
    }
    for w in warnings {
        let _ = writeln!(s, "warning: {w}");
    }
    s
}

pub fn intertwiners(rows: &[Value]) -> String {
    let mut s = String::new();
    for r in rows {
        let expected = match &r["expected"] {
            Value::Null => String::new(),
            v => format!(" (expected {v})"),
        };
        let _ = writeln!(
            s,
            "{} {} vs {} at E={} lam={}: dim {}{expected}",
            mark(r["pass"].as_bool().unwrap_or(false)),
            r["a"].as_str().unwrap_or_default(),
            r["b"].as_str().unwrap_or_default(),
            r["E"].as_str().unwrap_or_default(),
            r["lambda"].as_str().unwrap_or_default(),
            r["dim"],
        );
    }
    s
}

fn on_shell_section(s: &mut String, r: &MechanicsReport) {
    if r.charges.is_empty() {
        return;
    }
    let _ = writeln!(s, "  on shell (auxiliaries eliminated):");
    for c in &r.charges {
        let _ = writeln!(s, "    {} = {}", c.generator, c.on_shell);
    }
}

pub fn mechanics(r: &MechanicsReport, on_shell: bool) -> String {
    let mut s = r.render();
    if on_shell {
        on_shell_section(&mut s, r);
    }
    s
}

pub fn action1(r: &Action1Report, on_shell: bool) -> String {
    let mut s = r.render();
    if on_shell {
        on_shell_section(&mut s, &r.base);
    }
    s
}

pub fn dump(rep: &str, r: &SymRep) -> String {
    let labels = r.labels();
    let mut s = format!("{rep} (dim {})\n", r.dim());
    for g in GeneratorId::ALL {
        let m = r.mat(g);
        let _ = writeln!(s, "{}:", g.name());
        for c in 0..m.cols() {
            let _ = writeln!(s, "  {} -> {}", labels[c], render_vector(&m.column(c), labels));
        }
    }
    s
}

pub fn all(checks: &[Check], unexpected: &[String], now_passing: &[String]) -> String {
    let mut s = String::new();
    for c in checks {
        let _ = writeln!(s, "{}", render_line(c));
    }
    let _ = writeln!(s, "documented errata:");
    for e in errata() {
        let _ = writeln!(s, "  {}: printed {}; corrected {}", e.location, e.printed, e.corrected);
    }
    let _ = writeln!(s, "unexpected failures: {}", if unexpected.is_empty() { "none".to_string() } else { unexpected.join(", ") });
    let _ = writeln!(
        s,
        "documented failures now passing: {}",
        if now_passing.is_empty() { "none".to_string() } else { now_passing.join(", ") }
    );
    s
}

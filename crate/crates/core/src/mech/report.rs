use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::calculus::Calculus;
use super::lagrangian::{build_action1, catalogue, example_prepotential, is_real_mod_td, Lagrangian, LagrangianId};
use super::poly::GradedPoly;
use super::rules::Variation;
use super::MechError;
use crate::arith::json::gaussian_to_json;
use crate::arith::GaussianRational;
use crate::graded::GeneratorId;

const CHARGE_ORDER: [GeneratorId; 5] = [
    GeneratorId::Q10,
    GeneratorId::Q10d,
    GeneratorId::Q01,
    GeneratorId::Q01d,
    GeneratorId::Z,
];

/// Expected charges, each up to an overall constant.
pub fn reference_charges(id: LagrangianId) -> Option<[&'static str; 5]> {
    Some(match id {
        LagrangianId::L0 => [
            "dx*psibar + dz*xibar",
            "dxbar*psi - dzbar*xi",
            "dx*xibar + dz*psibar",
            "dxbar*xi - dzbar*psi",
            "dxbar*dz + dx*dzbar",
        ],
        LagrangianId::L1 => ["dx*psibar", "dxbar*psi", "dx*xibar", "dxbar*xi", "0"],
        LagrangianId::L2 => ["dy*psibar", "dy*psi", "dy*xibar", "dy*xi", "A*(F - Fbar)"],
        LagrangianId::L3 => [
            "dy*psibar + dz*xibar",
            "dy*psi - dzbar*xi",
            "dy*xibar + dz*psibar",
            "dy*xi - dzbar*psi",
            "dy*(dz + dzbar)",
        ],
        LagrangianId::L4 => ["dz*xibar", "dzbar*xi", "dz*psibar", "dzbar*psi", "0"],
        LagrangianId::Lg => return None,
    })
}

/// Expected form of `Z Q10† Q10 Q01† Q01 (μ x x̄)` up to a total derivative.
pub const ACTION1_REFERENCE: &str = "2*i*mu*(dx*ddzbar - ddxbar*dz + i*dpsibar*dxi - i*dpsi*dxibar)";

#[derive(Clone, Debug)]
pub struct InvarianceResult {
    pub variation: Variation,
    pub variation_expr: GradedPoly,
    pub witness: Option<GradedPoly>,
}

#[derive(Clone, Debug)]
pub struct ChargeResult {
    pub generator: GeneratorId,
    pub charge: GradedPoly,
    pub conserved: bool,
    pub on_shell: GradedPoly,
    pub reference: Option<GradedPoly>,
    /// `computed = ratio · reference`; `None` when they differ.
    pub ratio: Option<GaussianRational>,
    /// Whether the match needed the auxiliary equations of motion.
    pub matched_on_shell: bool,
}

impl ChargeResult {
    pub fn matches(&self) -> bool {
        match &self.reference {
            None => true,
            Some(r) if r.is_zero() => self.charge.is_zero() || self.on_shell.is_zero(),
            Some(_) => self.ratio.is_some(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct MechanicsReport {
    pub lagrangian: Lagrangian,
    pub real_mod_td: bool,
    pub invariance: Vec<InvarianceResult>,
    pub equations_of_motion: BTreeMap<String, GradedPoly>,
    pub auxiliaries: Vec<String>,
    pub charges: Vec<ChargeResult>,
    pub z_vanishes_on_shell: Option<bool>,
}

fn match_charge(
    l: &Lagrangian,
    g: GeneratorId,
    charge: GradedPoly,
    conserved: bool,
    reference: Option<&str>,
    calc: &Calculus,
) -> Result<ChargeResult, MechError> {
    let aux = l.auxiliaries(calc);
    let on_shell = l.substitute_eom(&charge, &aux, calc)?;
    let reference: Option<GradedPoly> = reference.map(str::parse).transpose()?;
    let (ratio, matched_on_shell) = match &reference {
        Some(r) if !r.is_zero() => match r.ratio_to(&charge) {
            Some(k) => (Some(k), false),
            None => (r.ratio_to(&on_shell), true),
        },
        Some(_) => (None, !charge.is_zero()),
        None => (None, false),
    };
    Ok(ChargeResult {
        generator: g,
        charge,
        conserved,
        on_shell,
        reference,
        ratio,
        matched_on_shell,
    })
}

fn invariance(l: &Lagrangian, calc: &Calculus) -> Result<Vec<InvarianceResult>, MechError> {
    Variation::ALL
        .par_iter()
        .map(|&v| {
            let e = l.variation(v, calc)?;
            Ok(InvarianceResult {
                variation: v,
                witness: calc.total_derivative_witness(&e)?,
                variation_expr: e,
            })
        })
        .collect()
}

fn base_report(l: Lagrangian, calc: &Calculus) -> Result<MechanicsReport, MechError> {
    let equations_of_motion = l
        .equations_of_motion(calc)?
        .into_iter()
        .map(|(q, e)| (q.to_string(), e))
        .collect();
    Ok(MechanicsReport {
        real_mod_td: is_real_mod_td(&l.expr, calc)?,
        invariance: invariance(&l, calc)?,
        equations_of_motion,
        auxiliaries: l.auxiliaries(calc).iter().map(|v| v.to_string()).collect(),
        charges: Vec::new(),
        z_vanishes_on_shell: None,
        lagrangian: l,
    })
}

/// Invariance, equations of motion and Noether charges of a catalogue entry.
pub fn analyze(id: LagrangianId, calc: &Calculus) -> Result<MechanicsReport, MechError> {
    let l = catalogue(id, calc)?;
    let mut report = base_report(l.clone(), calc)?;
    if report.invariance.iter().all(|r| r.witness.is_some()) {
        let set = l.noether_charges(calc)?;
        let refs = reference_charges(id);
        for (k, g) in CHARGE_ORDER.into_iter().enumerate() {
            let c = &set.charges[&g];
            report.charges.push(match_charge(
                &l,
                g,
                c.charge.clone(),
                c.conserved,
                refs.map(|r| r[k]),
                calc,
            )?);
        }
        report.z_vanishes_on_shell = report
            .charges
            .iter()
            .find(|c| c.generator == GeneratorId::Z)
            .map(|c| c.on_shell.is_zero());
    }
    Ok(report)
}

impl MechanicsReport {
    pub fn invariant(&self) -> bool {
        self.invariance.iter().all(|r| r.witness.is_some())
    }

    pub fn charges_match(&self) -> bool {
        !self.charges.is_empty() && self.charges.iter().all(|c| c.matches() && c.conserved)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lagrangian": self.lagrangian.to_json(),
            "real_mod_total_derivative": self.real_mod_td,
            "invariance": self.invariance.iter().map(|r| json!({
                "variation": r.variation.name(),
                "total_derivative": r.witness.is_some(),
                "variation_text": r.variation_expr.to_string(),
                "witness": r.witness.as_ref().map(|k| k.to_string()),
            })).collect::<Vec<_>>(),
            "equations_of_motion": self.equations_of_motion.iter()
                .map(|(q, e)| (q.clone(), Value::String(e.to_string())))
                .collect::<serde_json::Map<_, _>>(),
            "auxiliaries": self.auxiliaries,
            "charges": self.charges.iter().map(|c| json!({
                "generator": c.generator.name(),
                "charge": c.charge.to_string(),
                "terms": c.charge.to_json(),
                "conserved": c.conserved,
                "on_shell": c.on_shell.to_string(),
                "reference": c.reference.as_ref().map(|r| r.to_string()),
                "ratio": c.ratio.as_ref().map(gaussian_to_json),
                "ratio_text": c.ratio.as_ref().map(|r| r.to_string()),
                "matched_on_shell": c.matched_on_shell,
                "matches": c.matches(),
            })).collect::<Vec<_>>(),
            "z_vanishes_on_shell": self.z_vanishes_on_shell,
        })
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let l = &self.lagrangian;
        let _ = writeln!(s, "{} = {}", l.name, l.expr);
        let _ = writeln!(s, "  variables: {}", l.variables().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "));
        let _ = writeln!(s, "  real up to total derivative: {}", self.real_mod_td);
        for r in &self.invariance {
            match &r.witness {
                Some(k) => {
                    let _ = writeln!(s, "  {}: invariant, K = {}", r.variation, k);
                }
                None => {
                    let _ = writeln!(s, "  {}: NOT a total derivative: {}", r.variation, r.variation_expr);
                }
            }
        }
        for (q, e) in &self.equations_of_motion {
            let _ = writeln!(s, "  EL[{q}] = {e}");
        }
        if !self.auxiliaries.is_empty() {
            let _ = writeln!(s, "  auxiliary: {}", self.auxiliaries.join(", "));
        }
        for c in &self.charges {
            let verdict = match (&c.reference, &c.ratio) {
                (Some(r), _) if r.is_zero() => {
                    if c.matches() { "matches 0".to_string() } else { "MISMATCH (expected 0)".to_string() }
                }
                (Some(_), Some(k)) => format!(
                    "matches reference x ({k}){}",
                    if c.matched_on_shell { " on shell" } else { "" }
                ),
                (Some(r), None) => format!("MISMATCH (reference {r})"),
                (None, _) => String::new(),
            };
            let _ = writeln!(
                s,
                "  {} = {}   [{}; {}]",
                c.generator,
                c.charge,
                if c.conserved { "conserved" } else { "NOT conserved" },
                verdict
            );
            if c.on_shell != c.charge {
                let _ = writeln!(s, "    on shell: {}", c.on_shell);
            }
        }
        if let Some(z) = self.z_vanishes_on_shell {
            let _ = writeln!(s, "  Z vanishes on shell: {z}");
        }
        s
    }
}

/// Checks around `L = Z Q10† Q10 Q01† Q01 g`.
#[derive(Clone, Debug)]
pub struct Action1Report {
    pub g: GradedPoly,
    pub base: MechanicsReport,
    /// `L − reference` is a total derivative (only for the example `g`).
    pub matches_reference: Option<bool>,
    /// `Q10 L == −i d/dt (Z Q01† Q01 g)`.
    pub q10_identity: bool,
    /// `Q10 L == −i d/dt (Z Q10 Q01† Q01 g)`.
    pub q10_identity_with_q10: bool,
    /// `L + conj(L)` is a total derivative (real for imaginary `μ`).
    pub anti_real_mod_td: bool,
}

pub fn action1_report(g: &GradedPoly, calc: &Calculus) -> Result<Action1Report, MechError> {
    let l = build_action1(g, calc)?;
    let sys = l.system.clone();
    let apply = |ops: &[GeneratorId], p: &GradedPoly| -> Result<GradedPoly, MechError> {
        let mut acc = p.clone();
        for &op in ops.iter().rev() {
            acc = sys.apply_generator(op, &acc, calc)?;
        }
        Ok(acc)
    };
    let lhs = apply(&[GeneratorId::Q10], &l.expr)?;
    let mi = -GaussianRational::i();
    let rhs = calc
        .dt(&apply(&[GeneratorId::Z, GeneratorId::Q01d, GeneratorId::Q01], g)?)?
        .scale(&mi);
    let rhs_q10 = calc
        .dt(&apply(&[GeneratorId::Z, GeneratorId::Q10, GeneratorId::Q01d, GeneratorId::Q01], g)?)?
        .scale(&mi);
    let matches_reference = if *g == example_prepotential() {
        let r: GradedPoly = ACTION1_REFERENCE.parse()?;
        Some(calc.is_total_derivative(&(l.expr.clone() - r))?)
    } else {
        None
    };
    let anti_real_mod_td = calc.is_total_derivative(&(l.expr.clone() + l.expr.conjugate()))?;
    Ok(Action1Report {
        g: g.clone(),
        matches_reference,
        q10_identity: lhs == rhs,
        q10_identity_with_q10: lhs == rhs_q10,
        anti_real_mod_td,
        base: base_report(l, calc)?,
    })
}

impl Action1Report {
    pub fn to_json(&self) -> Value {
        json!({
            "g": self.g.to_string(),
            "matches_reference_mod_total_derivative": self.matches_reference,
            "reference": self.matches_reference.map(|_| ACTION1_REFERENCE),
            "q10_identity": self.q10_identity,
            "q10_identity_with_q10": self.q10_identity_with_q10,
            "anti_real_mod_total_derivative": self.anti_real_mod_td,
            "mechanics": self.base.to_json(),
        })
    }

    pub fn render(&self) -> String {
        let mut s = self.base.render();
        if let Some(m) = self.matches_reference {
            let _ = writeln!(s, "  equals {ACTION1_REFERENCE} up to total derivative: {m}");
        }
        let _ = writeln!(s, "  Q10 L == -i d/dt(Z Q01d Q01 g): {}", self.q10_identity);
        let _ = writeln!(s, "  Q10 L == -i d/dt(Z Q10 Q01d Q01 g): {}", self.q10_identity_with_q10);
        let _ = writeln!(s, "  L + conj(L) total derivative (real for imaginary mu): {}", self.anti_real_mod_td);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_charges_match() {
        let c = Calculus::default();
        for id in [LagrangianId::L0, LagrangianId::L1, LagrangianId::L2, LagrangianId::L3, LagrangianId::L4] {
            let r = analyze(id, &c).unwrap();
            assert!(r.invariant(), "{id}");
            assert!(r.charges_match(), "{}", r.render());
        }
    }
}

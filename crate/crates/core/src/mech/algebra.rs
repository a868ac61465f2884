use rayon::prelude::*;

use super::calculus::Calculus;
use super::poly::GradedPoly;
use super::rules::VariableSystem;
use super::symbol::FieldVar;
use super::MechError;
use crate::arith::GaussianRational;
use crate::graded::{relation_list, swap_sign, BracketRelation, GeneratorId, Operator};

/// One defining relation checked on one field.
#[derive(Clone, Debug)]
pub struct FieldCheck {
    pub relation: String,
    pub field: FieldVar,
    pub residual: GradedPoly,
}

impl FieldCheck {
    pub fn pass(&self) -> bool {
        self.residual.is_zero()
    }
}

/// `[A, B}` on `p`: `A(B p) − swap_sign(deg A, deg B)·B(A p)`.
pub fn bracket_on(
    sys: &VariableSystem,
    a: GeneratorId,
    b: GeneratorId,
    p: &GradedPoly,
    calc: &Calculus,
) -> Result<GradedPoly, MechError> {
    let ab = sys.apply_generator(a, &sys.apply_generator(b, p, calc)?, calc)?;
    let ba = sys.apply_generator(b, &sys.apply_generator(a, p, calc)?, calc)?;
    Ok(if swap_sign(a.degree(), b.degree()) < 0 { ab + ba } else { ab - ba })
}

fn rhs_on(
    sys: &VariableSystem,
    rel: &BracketRelation,
    p: &GradedPoly,
    calc: &Calculus,
) -> Result<GradedPoly, MechError> {
    let mut out = GradedPoly::zero();
    for (op, c) in &rel.rhs {
        let c: GaussianRational = c.as_constant().expect("relation coefficients are constants");
        let img = match op {
            Operator::Identity => p.clone(),
            Operator::Gen(g) => sys.apply_generator(*g, p, calc)?,
        };
        out = out + img.scale(&c);
    }
    Ok(out)
}

/// All defining relations with `H = i·d/dt`, plus `Z² = −d²/dt²`, on every
/// variable of the system.
pub fn operator_algebra(sys: &VariableSystem, calc: &Calculus) -> Result<Vec<FieldCheck>, MechError> {
    let fields = sys.vars().to_vec();
    let rels = relation_list();
    let mut jobs: Vec<(String, Option<BracketRelation>, FieldVar)> = Vec::new();
    for rel in &rels {
        for &f in &fields {
            jobs.push((rel.to_string(), Some(rel.clone()), f));
        }
    }
    for &f in &fields {
        jobs.push(("Z^2 = -d^2/dt^2".to_string(), None, f));
    }
    jobs.into_par_iter()
        .map(|(name, rel, f)| {
            let p = GradedPoly::symbol(f);
            let residual = match rel {
                Some(rel) => bracket_on(sys, rel.left, rel.right, &p, calc)? - rhs_on(sys, &rel, &p, calc)?,
                None => {
                    let zz = sys.apply_generator(
                        GeneratorId::Z,
                        &sys.apply_generator(GeneratorId::Z, &p, calc)?,
                        calc,
                    )?;
                    zz + calc.dt_n(&p, 2)?
                }
            };
            Ok(FieldCheck {
                relation: name,
                field: f,
                residual,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_holds_on_fields() {
        let c = Calculus::default();
        let checks = operator_algebra(&VariableSystem::base(), &c).unwrap();
        assert_eq!(checks.len(), 22 * 8);
        let bad: Vec<String> = checks
            .iter()
            .filter(|k| !k.pass())
            .map(|k| format!("{} on {}: {}", k.relation, k.field, k.residual))
            .collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }
}

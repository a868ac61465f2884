use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::calculus::{base_vars, Calculus};
use super::poly::GradedPoly;
use super::rules::{strip_left, Variation, VariableSystem};
use super::symbol::{FieldVar, Symbol};
use super::MechError;
use crate::graded::{Degree, GeneratorId};

/// The catalogue of Lagrangians.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LagrangianId {
    L0,
    L1,
    L2,
    L3,
    L4,
    Lg,
}

impl LagrangianId {
    pub const ALL: [LagrangianId; 6] = [
        LagrangianId::L0,
        LagrangianId::L1,
        LagrangianId::L2,
        LagrangianId::L3,
        LagrangianId::L4,
        LagrangianId::Lg,
    ];

    pub const fn name(self) -> &'static str {
        match self {
            LagrangianId::L0 => "L0",
            LagrangianId::L1 => "L1",
            LagrangianId::L2 => "L2",
            LagrangianId::L3 => "L3",
            LagrangianId::L4 => "L4",
            LagrangianId::Lg => "Lg",
        }
    }
}

impl fmt::Display for LagrangianId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LagrangianId {
    type Err = MechError;
    fn from_str(s: &str) -> Result<Self, MechError> {
        LagrangianId::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| MechError::Unknown(s.to_string()))
    }
}

#[derive(Clone, Debug)]
pub struct Lagrangian {
    pub name: String,
    pub expr: GradedPoly,
    pub system: Arc<VariableSystem>,
}

const FERMIONS: &str = " - i*psibar*dpsi - i*xibar*dxi";

fn transcribed(id: LagrangianId) -> String {
    let bosons = match id {
        LagrangianId::L0 => "dxbar*dx + dzbar*dz",
        LagrangianId::L1 => "dxbar*dx + Fbar*F",
        LagrangianId::L2 => "dy*dy + A*A + Fbar*F",
        LagrangianId::L3 => "dy*dy + A*A + dzbar*dz",
        LagrangianId::L4 => "abar*a + dzbar*dz",
        LagrangianId::Lg => unreachable!("built from the generators"),
    };
    format!("{bosons}{FERMIONS}")
}

/// `g = μ·x·x̄`, the example prepotential.
pub fn example_prepotential() -> GradedPoly {
    "mu*x*xbar".parse().expect("literal parses")
}

pub fn catalogue(id: LagrangianId, calc: &Calculus) -> Result<Lagrangian, MechError> {
    let system = match id {
        LagrangianId::L0 | LagrangianId::Lg => VariableSystem::base(),
        LagrangianId::L1 => VariableSystem::x_f(calc)?,
        LagrangianId::L2 => VariableSystem::y_a_f(calc)?,
        LagrangianId::L3 => VariableSystem::y_a_z(calc)?,
        LagrangianId::L4 => VariableSystem::a_z(calc)?,
    };
    if id == LagrangianId::Lg {
        return build_action1(&example_prepotential(), calc);
    }
    let expr: GradedPoly = transcribed(id).parse().expect("catalogue parses");
    Ok(Lagrangian {
        name: id.name().to_string(),
        expr,
        system: Arc::new(system),
    })
}

/// `L = Z Q10† Q10 Q01† Q01 g`.
pub fn build_action1(g: &GradedPoly, calc: &Calculus) -> Result<Lagrangian, MechError> {
    if !g.is_homogeneous_of(Degree::D11) {
        return Err(MechError::Degree(format!("g = {g} is not of degree (1,1)")));
    }
    if [super::Const::Eps10, super::Const::EpsBar10, super::Const::Eps01, super::Const::EpsBar01, super::Const::Eps11]
        .into_iter()
        .any(|e| g.contains_const(e))
    {
        return Err(MechError::Degree(format!("g = {g} contains a SUSY parameter")));
    }
    let system = VariableSystem::base();
    let mut acc = g.clone();
    for gen in [
        GeneratorId::Q01,
        GeneratorId::Q01d,
        GeneratorId::Q10,
        GeneratorId::Q10d,
        GeneratorId::Z,
    ] {
        acc = system.apply_generator(gen, &acc, calc)?;
    }
    Ok(Lagrangian {
        name: format!("Lg[{g}]"),
        expr: acc,
        system: Arc::new(system),
    })
}

/// Reality up to a total derivative.
pub fn is_real_mod_td(l: &GradedPoly, calc: &Calculus) -> Result<bool, MechError> {
    calc.is_total_derivative(&(l.clone() - l.conjugate()))
}

#[derive(Clone, Debug)]
pub struct NoetherCharge {
    pub generator: GeneratorId,
    pub charge: GradedPoly,
    /// `dQ/dt + Σ_q G(q)·EL_q == 0` exactly.
    pub conserved: bool,
}

#[derive(Clone, Debug)]
pub struct NoetherSet {
    pub witnesses: BTreeMap<Variation, GradedPoly>,
    pub charges: BTreeMap<GeneratorId, NoetherCharge>,
}

impl NoetherSet {
    pub fn charge(&self, g: GeneratorId) -> &GradedPoly {
        &self.charges[&g].charge
    }
}

impl Lagrangian {
    pub fn variables(&self) -> Vec<FieldVar> {
        let mut vars: Vec<FieldVar> = self.system.vars().to_vec();
        for v in base_vars(&self.expr) {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        vars.sort();
        vars
    }

    pub fn euler_lagrange(&self, q: FieldVar, calc: &Calculus) -> Result<GradedPoly, MechError> {
        calc.euler_lagrange(&self.expr, q.base())
    }

    pub fn equations_of_motion(&self, calc: &Calculus) -> Result<BTreeMap<FieldVar, GradedPoly>, MechError> {
        self.variables()
            .into_iter()
            .map(|q| Ok((q, self.euler_lagrange(q, calc)?)))
            .collect()
    }

    pub fn variation(&self, var: Variation, calc: &Calculus) -> Result<GradedPoly, MechError> {
        self.system.apply_delta(var, &self.expr, calc)
    }

    /// The witness `K` with `dK/dt = δL`, or `None` if `δL` is not a total
    /// derivative.
    pub fn invariance_witness(&self, var: Variation, calc: &Calculus) -> Result<Option<GradedPoly>, MechError> {
        calc.total_derivative_witness(&self.variation(var, calc)?)
    }

    pub fn noether_charges(&self, calc: &Calculus) -> Result<NoetherSet, MechError> {
        let eom = self.equations_of_motion(calc)?;
        let mut momenta = BTreeMap::new();
        for q in self.variables() {
            momenta.insert(q, calc.momenta(&self.expr, q)?);
        }
        let per_variation: Vec<_> = Variation::ALL
            .par_iter()
            .map(|&var| -> Result<_, MechError> {
                let k = self
                    .invariance_witness(var, calc)?
                    .ok_or_else(|| MechError::NonInvariant {
                        lagrangian: self.name.clone(),
                        variation: var.to_string(),
                    })?;
                let mut j = -k.clone();
                for (q, ps) in &momenta {
                    let dq = self.system.delta_rule(var, *q)?;
                    let mut dqm = dq;
                    for pm in ps {
                        j = j + &dqm * pm;
                        dqm = calc.dt(&dqm)?;
                    }
                }
                let mut charges = Vec::new();
                for (eps, g, coef) in var.decomposition() {
                    let only: GradedPoly = j
                        .terms()
                        .filter(|(f, _)| f.contains(&Symbol::Const(eps)))
                        .fold(GradedPoly::zero(), |mut acc, (f, c)| {
                            acc.add_canonical(f.clone(), c.clone());
                            acc
                        });
                    let charge = strip_left(&only, eps)?.scale(&coef.inv().expect("nonzero"));
                    let mut residual = calc.dt(&charge)?;
                    for (q, el) in &eom {
                        residual = residual + &self.system.generator_image(g, *q)? * el;
                    }
                    charges.push(NoetherCharge {
                        generator: g,
                        charge,
                        conserved: residual.is_zero(),
                    });
                }
                Ok((var, k, charges))
            })
            .collect::<Result<_, _>>()?;
        let mut set = NoetherSet {
            witnesses: BTreeMap::new(),
            charges: BTreeMap::new(),
        };
        for (var, k, charges) in per_variation {
            set.witnesses.insert(var, k);
            for c in charges {
                set.charges.insert(c.generator, c);
            }
        }
        Ok(set)
    }

    /// Solves the Euler-Lagrange equation that is algebraic and linear in
    /// `w`: `c·w + R = 0` with `R` free of `w`.
    pub fn solve_algebraic(&self, w: FieldVar, calc: &Calculus) -> Result<GradedPoly, MechError> {
        let target = vec![Symbol::Field(w)];
        for el in self.equations_of_motion(calc)?.values() {
            let c = el.coefficient(&target);
            if c.is_zero() {
                continue;
            }
            let rest = el.clone() - GradedPoly::term(c.clone(), target.clone());
            if rest.field_vars().iter().any(|v| v.base() == w) {
                continue;
            }
            return Ok(-rest.scale(&c.inv().expect("nonzero")));
        }
        Err(MechError::NonAlgebraicEom(w.to_string()))
    }

    /// Variables whose equation of motion is algebraic.
    pub fn auxiliaries(&self, calc: &Calculus) -> Vec<FieldVar> {
        self.variables()
            .into_iter()
            .filter(|&w| self.solve_algebraic(w, calc).is_ok())
            .collect()
    }

    /// Eliminates `vars` from `p` using their algebraic equations of motion.
    pub fn substitute_eom(&self, p: &GradedPoly, vars: &[FieldVar], calc: &Calculus) -> Result<GradedPoly, MechError> {
        let mut out = p.clone();
        for &w in vars {
            let w = w.base();
            let sol = self.solve_algebraic(w, calc)?;
            out = out.flat_map(|factors, c| {
                let mut acc = GradedPoly::constant(c.clone());
                for &s in factors {
                    let f = match s {
                        Symbol::Field(v) if v.base() == w => calc.dt_n(&sol, v.order)?,
                        s => GradedPoly::symbol(s),
                    };
                    acc = &acc * &f;
                }
                Ok::<_, MechError>(acc)
            })?;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "variables": self.variables().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "text": self.expr.to_string(),
            "terms": self.expr.to_json(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mech::symbol::FieldName;

    fn p(s: &str) -> GradedPoly {
        s.parse().unwrap()
    }

    #[test]
    fn euler_lagrange_examples() {
        let c = Calculus::default();
        let l2 = catalogue(LagrangianId::L2, &c).unwrap();
        assert_eq!(l2.euler_lagrange(FieldVar::plain(FieldName::A), &c).unwrap(), p("2*A"));
        let l1 = catalogue(LagrangianId::L1, &c).unwrap();
        assert_eq!(l1.euler_lagrange(FieldVar::bar(FieldName::F), &c).unwrap(), p("F"));
        let l0 = catalogue(LagrangianId::L0, &c).unwrap();
        assert_eq!(l0.euler_lagrange(FieldVar::bar(FieldName::X), &c).unwrap(), p("-ddx"));
    }

    #[test]
    fn action1_of_zero_is_zero() {
        let c = Calculus::default();
        assert!(build_action1(&GradedPoly::zero(), &c).unwrap().expr.is_zero());
        assert!(build_action1(&p("x*xbar"), &c).is_err());
        assert!(build_action1(&p("eps11*x"), &c).is_err());
    }
}

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use super::calculus::{apply_derivation, base_vars, Calculus};
use super::poly::{degree_of, GradedPoly};
use super::symbol::{Const, FieldName, FieldVar, Symbol};
use super::MechError;
use crate::arith::GaussianRational;
use crate::graded::{swap_sign, Degree, GeneratorId};

use FieldName::{Psi, Xi, X, Z};

/// The three SUSY variations. Each is an even derivation: the parameter sits
/// inside the image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variation {
    Delta10,
    Delta01,
    Delta11,
}

impl Variation {
    pub const ALL: [Variation; 3] = [Variation::Delta10, Variation::Delta01, Variation::Delta11];

    pub const fn name(self) -> &'static str {
        match self {
            Variation::Delta10 => "delta10",
            Variation::Delta01 => "delta01",
            Variation::Delta11 => "delta11",
        }
    }

    /// `δ = Σ coef·ε·G` over `(ε, G, coef)`.
    pub fn decomposition(self) -> Vec<(Const, GeneratorId, GaussianRational)> {
        let m1 = GaussianRational::from_int(-1);
        match self {
            Variation::Delta10 => vec![
                (Const::Eps10, GeneratorId::Q10, m1.clone()),
                (Const::EpsBar10, GeneratorId::Q10d, m1),
            ],
            Variation::Delta01 => vec![
                (Const::Eps01, GeneratorId::Q01, m1.clone()),
                (Const::EpsBar01, GeneratorId::Q01d, m1),
            ],
            Variation::Delta11 => vec![(Const::Eps11, GeneratorId::Z, GaussianRational::i())],
        }
    }
}

impl fmt::Display for Variation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variation {
    type Err = MechError;
    fn from_str(s: &str) -> Result<Self, MechError> {
        Variation::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| MechError::Unknown(s.to_string()))
    }
}

/// Removes the parameter `eps` from the left of every term of `p`. Fails if a
/// term does not contain it.
pub fn strip_left(p: &GradedPoly, eps: Const) -> Result<GradedPoly, MechError> {
    let target = Symbol::Const(eps);
    let mut out = GradedPoly::zero();
    for (factors, c) in p.terms() {
        let k = factors
            .iter()
            .position(|&s| s == target)
            .ok_or_else(|| MechError::Unstrippable {
                param: eps.text().to_string(),
                expr: p.to_string(),
            })?;
        let sign = swap_sign(eps.degree(), degree_of(&factors[..k]));
        let mut f = factors[..k].to_vec();
        f.extend(factors[k + 1..].iter().copied());
        out.add_term(if sign < 0 { -c.clone() } else { c.clone() }, f);
    }
    Ok(out)
}

/// Splits `p` by which of the given parameters its terms contain.
fn split_by_param(p: &GradedPoly, params: &[Const]) -> Result<Vec<GradedPoly>, MechError> {
    let mut parts = vec![GradedPoly::zero(); params.len()];
    for (factors, c) in p.terms() {
        let k = params
            .iter()
            .position(|&e| factors.contains(&Symbol::Const(e)))
            .ok_or_else(|| MechError::Unstrippable {
                param: params.iter().map(|e| e.text()).collect::<Vec<_>>().join("|"),
                expr: p.to_string(),
            })?;
        parts[k].add_canonical(factors.clone(), c.clone());
    }
    Ok(parts)
}

/// Rewrites a base variable that is not part of a derived system.
type InverseRule = fn(FieldVar) -> Option<GradedPoly>;

/// A closed set of variables with its SUSY variations and the generator
/// derivations obtained by stripping the parameters.
#[derive(Clone, Debug)]
pub struct VariableSystem {
    name: &'static str,
    vars: Vec<FieldVar>,
    definitions: Vec<(FieldVar, GradedPoly)>,
    deltas: BTreeMap<(Variation, FieldVar), GradedPoly>,
    gens: BTreeMap<(GeneratorId, FieldVar), GradedPoly>,
}

fn both(names: &[FieldName]) -> Vec<FieldVar> {
    let mut out = Vec::new();
    for &n in names {
        out.push(FieldVar::plain(n));
        if !n.is_real() {
            out.push(FieldVar::bar(n));
        }
    }
    out
}

fn poly(s: &str) -> GradedPoly {
    s.parse().expect("built-in expression parses")
}

/// The transformation tables of the two 4-dimensional irreps on
/// `(x, z, ψ, ξ)` and their conjugates.
fn base_table() -> Vec<(Variation, FieldVar, &'static str)> {
    use Variation::*;
    let p = FieldVar::plain;
    let b = FieldVar::bar;
    vec![
        (Delta10, p(X), "epsbar10*psi"),
        (Delta10, p(Z), "epsbar10*xi"),
        (Delta10, p(Psi), "i*eps10*dx"),
        (Delta10, p(Xi), "i*eps10*dz"),
        (Delta01, p(X), "-i*epsbar01*xi"),
        (Delta01, p(Z), "-i*epsbar01*psi"),
        (Delta01, p(Psi), "-eps01*dz"),
        (Delta01, p(Xi), "-eps01*dx"),
        (Delta11, p(X), "-eps11*dz"),
        (Delta11, p(Z), "-eps11*dx"),
        (Delta11, p(Psi), "eps11*dxi"),
        (Delta11, p(Xi), "eps11*dpsi"),
        (Delta10, b(X), "-eps10*psibar"),
        (Delta10, b(Z), "eps10*xibar"),
        (Delta10, b(Psi), "-i*epsbar10*dxbar"),
        (Delta10, b(Xi), "i*epsbar10*dzbar"),
        (Delta01, b(X), "-i*eps01*xibar"),
        (Delta01, b(Z), "i*eps01*psibar"),
        (Delta01, b(Psi), "epsbar01*dzbar"),
        (Delta01, b(Xi), "-epsbar01*dxbar"),
        (Delta11, b(X), "-eps11*dzbar"),
        (Delta11, b(Z), "-eps11*dxbar"),
        (Delta11, b(Psi), "-eps11*dxibar"),
        (Delta11, b(Xi), "-eps11*dpsibar"),
    ]
}

/// Shifts the derivative order down by one, or `None` at order 0.
fn lower(v: FieldVar, name: FieldName, barred: bool) -> Option<FieldVar> {
    v.order.checked_sub(1).map(|k| FieldVar::new(name, barred, k))
}

fn inverse_z_to_f(v: FieldVar) -> Option<GradedPoly> {
    (v.name == Z).then(|| lower(v, FieldName::F, v.barred).map(GradedPoly::symbol))?
}

fn inverse_x_to_ya(v: FieldVar) -> Option<GradedPoly> {
    if v.name != X {
        return None;
    }
    let a = lower(v, FieldName::A, false)?;
    let y = GradedPoly::symbol(FieldVar::new(FieldName::Y, false, v.order));
    // x^(k) = y^(k) − i A^(k−1), x̄^(k) = y^(k) + i A^(k−1)
    let s = if v.barred { GaussianRational::i() } else { -GaussianRational::i() };
    Some(y + GradedPoly::symbol(a).scale(&s))
}

fn inverse_l2(v: FieldVar) -> Option<GradedPoly> {
    inverse_x_to_ya(v).or_else(|| inverse_z_to_f(v))
}

fn inverse_x_to_a(v: FieldVar) -> Option<GradedPoly> {
    (v.name == X).then(|| lower(v, FieldName::LowA, v.barred).map(GradedPoly::symbol))?
}

impl VariableSystem {
    /// `(x, z, ψ, ξ)` and conjugates.
    pub fn base() -> Self {
        let mut deltas = BTreeMap::new();
        for (var, q, img) in base_table() {
            deltas.insert((var, q), poly(img));
        }
        let mut sys = VariableSystem {
            name: "x,z,psi,xi",
            vars: both(&[X, Z, Psi, Xi]),
            definitions: Vec::new(),
            deltas,
            gens: BTreeMap::new(),
        };
        sys.strip_generators().expect("base table strips");
        sys
    }

    fn derived(
        name: &'static str,
        kept: &[FieldName],
        definitions: &[(FieldVar, &str)],
        inverse: InverseRule,
        calc: &Calculus,
    ) -> Result<Self, MechError> {
        let base = VariableSystem::base();
        let mut vars = both(kept);
        let definitions: Vec<(FieldVar, GradedPoly)> =
            definitions.iter().map(|(v, e)| (*v, poly(e))).collect();
        vars.extend(definitions.iter().map(|(v, _)| *v));
        vars.sort();
        let mut sys = VariableSystem {
            name,
            vars,
            definitions: definitions.clone(),
            deltas: BTreeMap::new(),
            gens: BTreeMap::new(),
        };
        for var in Variation::ALL {
            for q in sys.vars.clone() {
                let in_base = match definitions.iter().find(|(v, _)| *v == q) {
                    Some((_, def)) => base.apply_delta(var, def, calc)?,
                    None => base.delta_image(var, q)?.clone(),
                };
                let img = sys.rewrite(&in_base, inverse)?;
                sys.deltas.insert((var, q), img);
            }
        }
        sys.strip_generators()?;
        Ok(sys)
    }

    /// `(x, F, ψ, ξ)` with `F := ż`.
    pub fn x_f(calc: &Calculus) -> Result<Self, MechError> {
        VariableSystem::derived(
            "x,F,psi,xi",
            &[X, Psi, Xi],
            &[(FieldVar::plain(FieldName::F), "dz"), (FieldVar::bar(FieldName::F), "dzbar")],
            inverse_z_to_f,
            calc,
        )
    }

    /// `(y, A, F, ψ, ξ)` with `y := (x+x̄)/2`, `A := (i/2)(ẋ−x̄̇)`, `F := ż`.
    pub fn y_a_f(calc: &Calculus) -> Result<Self, MechError> {
        VariableSystem::derived(
            "y,A,F,psi,xi",
            &[Psi, Xi],
            &[
                (FieldVar::plain(FieldName::Y), "1/2*(x + xbar)"),
                (FieldVar::plain(FieldName::A), "i/2*(dx - dxbar)"),
                (FieldVar::plain(FieldName::F), "dz"),
                (FieldVar::bar(FieldName::F), "dzbar"),
            ],
            inverse_l2,
            calc,
        )
    }

    /// `(y, A, z, ψ, ξ)`.
    pub fn y_a_z(calc: &Calculus) -> Result<Self, MechError> {
        VariableSystem::derived(
            "y,A,z,psi,xi",
            &[Z, Psi, Xi],
            &[
                (FieldVar::plain(FieldName::Y), "1/2*(x + xbar)"),
                (FieldVar::plain(FieldName::A), "i/2*(dx - dxbar)"),
            ],
            inverse_x_to_ya,
            calc,
        )
    }

    /// `(a, z, ψ, ξ)` with `a := ẋ`.
    pub fn a_z(calc: &Calculus) -> Result<Self, MechError> {
        VariableSystem::derived(
            "a,z,psi,xi",
            &[Z, Psi, Xi],
            &[
                (FieldVar::plain(FieldName::LowA), "dx"),
                (FieldVar::bar(FieldName::LowA), "dxbar"),
            ],
            inverse_x_to_a,
            calc,
        )
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn vars(&self) -> &[FieldVar] {
        &self.vars
    }

    pub fn definitions(&self) -> &[(FieldVar, GradedPoly)] {
        &self.definitions
    }

    /// Variables reached by the variations of the system's own variables.
    pub fn closed_variable_set(&self) -> BTreeSet<FieldVar> {
        let mut out: BTreeSet<FieldVar> = self.vars.iter().copied().collect();
        for img in self.deltas.values() {
            out.extend(base_vars(img));
        }
        out
    }

    /// Rewrites base variables outside the system through `inverse`.
    fn rewrite(&self, p: &GradedPoly, inverse: InverseRule) -> Result<GradedPoly, MechError> {
        p.flat_map(|factors, c| {
            let mut acc = GradedPoly::constant(c.clone());
            for &s in factors {
                let f = match s {
                    Symbol::Field(v) if !self.vars.contains(&v.base()) => {
                        inverse(v).ok_or_else(|| MechError::Leftover {
                            var: v.to_string(),
                            system: self.name.to_string(),
                        })?
                    }
                    s => GradedPoly::symbol(s),
                };
                acc = &acc * &f;
            }
            Ok(acc)
        })
    }

    fn strip_generators(&mut self) -> Result<(), MechError> {
        for ((var, q), img) in &self.deltas {
            let dec = var.decomposition();
            let params: Vec<Const> = dec.iter().map(|(e, _, _)| *e).collect();
            let parts = split_by_param(img, &params)?;
            for ((eps, g, coef), part) in dec.iter().zip(parts) {
                let inv = coef.inv().expect("nonzero");
                let image = strip_left(&part, *eps)?.scale(&inv);
                if !image.is_homogeneous_of(q.degree() + g.degree()) {
                    return Err(MechError::Degree(format!("{g} {q} = {image}")));
                }
                self.gens.insert((*g, *q), image);
            }
        }
        Ok(())
    }

    fn delta_image(&self, var: Variation, q: FieldVar) -> Result<&GradedPoly, MechError> {
        self.deltas.get(&(var, q)).ok_or_else(|| MechError::Leftover {
            var: q.to_string(),
            system: self.name.to_string(),
        })
    }

    /// The image of an order-0 variable under a generator.
    pub fn generator_image(&self, g: GeneratorId, q: FieldVar) -> Result<GradedPoly, MechError> {
        if g == GeneratorId::H {
            return Ok(GradedPoly::symbol(q.with_order(1)).scale(&GaussianRational::i()));
        }
        self.gens.get(&(g, q)).cloned().ok_or_else(|| MechError::Leftover {
            var: q.to_string(),
            system: self.name.to_string(),
        })
    }

    pub fn delta_rule(&self, var: Variation, q: FieldVar) -> Result<GradedPoly, MechError> {
        self.delta_image(var, q).cloned()
    }

    fn image_at_order(
        &self,
        base_image: &GradedPoly,
        order: u8,
        calc: &Calculus,
    ) -> Result<GradedPoly, MechError> {
        calc.dt_n(base_image, order)
    }

    pub fn apply_delta(
        &self,
        var: Variation,
        p: &GradedPoly,
        calc: &Calculus,
    ) -> Result<GradedPoly, MechError> {
        apply_derivation(p, Degree::D00, |s| match s {
            Symbol::Const(_) => Ok(GradedPoly::zero()),
            Symbol::Field(v) => self.image_at_order(self.delta_image(var, v.base())?, v.order, calc),
        })
    }

    /// The ε-free derivation of degree `deg g`; `H` acts as `i·d/dt`.
    pub fn apply_generator(
        &self,
        g: GeneratorId,
        p: &GradedPoly,
        calc: &Calculus,
    ) -> Result<GradedPoly, MechError> {
        if g == GeneratorId::H {
            return Ok(calc.dt(p)?.scale(&GaussianRational::i()));
        }
        apply_derivation(p, g.degree(), |s| match s {
            Symbol::Const(_) => Ok(GradedPoly::zero()),
            Symbol::Field(v) => {
                let img = self.gens.get(&(g, v.base())).ok_or_else(|| MechError::Leftover {
                    var: v.to_string(),
                    system: self.name.to_string(),
                })?;
                self.image_at_order(img, v.order, calc)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> GradedPoly {
        s.parse().unwrap()
    }

    #[test]
    fn tabulated_variations() {
        let c = Calculus::default();
        let s = VariableSystem::base();
        assert_eq!(s.apply_delta(Variation::Delta10, &p("x"), &c).unwrap(), p("epsbar10*psi"));
        assert_eq!(s.apply_delta(Variation::Delta11, &p("xibar"), &c).unwrap(), p("-eps11*dpsibar"));
        assert_eq!(
            s.apply_delta(Variation::Delta01, &p("x*xbar"), &c).unwrap(),
            p("-i*epsbar01*xi*xbar - i*x*eps01*xibar")
        );
    }

    #[test]
    fn stripped_generators() {
        let c = Calculus::default();
        let s = VariableSystem::base();
        let g = |g, e: &str| s.apply_generator(g, &p(e), &c).unwrap();
        assert_eq!(g(GeneratorId::Q10d, "x"), p("-psi"));
        assert_eq!(g(GeneratorId::Q10, "psi"), p("-i*dx"));
        assert_eq!(g(GeneratorId::Z, "x"), p("i*dz"));
        assert_eq!(g(GeneratorId::Z, "z"), p("i*dx"));
        assert!(g(GeneratorId::Q10, "x").is_zero());
        let zz = s.apply_generator(GeneratorId::Z, &g(GeneratorId::Z, "x"), &c).unwrap();
        assert_eq!(zz, p("-ddx"));
    }

    #[test]
    fn auxiliary_systems_close() {
        let c = Calculus::default();
        let l2 = VariableSystem::y_a_f(&c).unwrap();
        let closed: Vec<String> = l2.closed_variable_set().iter().map(|v| v.to_string()).collect();
        assert_eq!(closed, ["psi", "psibar", "xi", "xibar", "F", "Fbar", "y", "A"]);
        assert_eq!(l2.delta_rule(Variation::Delta10, FieldVar::plain(Psi)).unwrap(), p("i*eps10*dy + eps10*A"));
        for sys in [
            VariableSystem::x_f(&c).unwrap(),
            VariableSystem::y_a_z(&c).unwrap(),
            VariableSystem::a_z(&c).unwrap(),
        ] {
            assert_eq!(sys.closed_variable_set().len(), sys.vars().len());
        }
    }
}

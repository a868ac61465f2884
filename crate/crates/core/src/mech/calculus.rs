use std::collections::BTreeSet;

use super::poly::{degree_of, GradedPoly};
use super::symbol::{FieldVar, Symbol};
use super::MechError;
use crate::arith::GaussianRational;
use crate::graded::{swap_sign, Degree};

pub const DEFAULT_DERIV_CAP: u8 = 6;
pub const DERIV_CAP_ENV: &str = "Z2TK_DERIV_CAP";

/// Applies the graded derivation of degree `deg` defined on symbols by `r`:
/// `R(fg) = R(f)·g + swap_sign(deg, deg f)·f·R(g)`.
pub fn apply_derivation(
    p: &GradedPoly,
    deg: Degree,
    mut r: impl FnMut(Symbol) -> Result<GradedPoly, MechError>,
) -> Result<GradedPoly, MechError> {
    let mut out = GradedPoly::zero();
    for (factors, c) in p.terms() {
        let mut prefix_deg = Degree::D00;
        for (k, &s) in factors.iter().enumerate() {
            let image = r(s)?;
            if !image.is_zero() {
                let c = if swap_sign(deg, prefix_deg) < 0 { -c.clone() } else { c.clone() };
                for (mid, cm) in image.terms() {
                    let mut f = factors[..k].to_vec();
                    f.extend(mid.iter().copied());
                    f.extend(factors[k + 1..].iter().copied());
                    out.add_term(&c * cm, f);
                }
            }
            prefix_deg = prefix_deg + s.degree();
        }
    }
    Ok(out)
}

/// Left derivative `∂/∂q`: each occurrence of `q` is commuted to the front
/// with sign factors and removed.
pub fn left_derivative(p: &GradedPoly, q: FieldVar) -> GradedPoly {
    let target = Symbol::Field(q);
    let mut out = GradedPoly::zero();
    for (factors, c) in p.terms() {
        for (k, &s) in factors.iter().enumerate() {
            if s != target {
                continue;
            }
            let sign = swap_sign(q.degree(), degree_of(&factors[..k]));
            let mut f = factors[..k].to_vec();
            f.extend(factors[k + 1..].iter().copied());
            out.add_term(if sign < 0 { -c.clone() } else { c.clone() }, f);
        }
    }
    out
}

/// Order-0 field variables occurring in `p` (any derivative order).
pub fn base_vars(p: &GradedPoly) -> BTreeSet<FieldVar> {
    p.field_vars().into_iter().map(FieldVar::base).collect()
}

/// Symbolic calculus with a derivative-order cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Calculus {
    pub cap: u8,
}

impl Default for Calculus {
    fn default() -> Self {
        Calculus { cap: DEFAULT_DERIV_CAP }
    }
}

impl Calculus {
    pub fn new(cap: u8) -> Self {
        Calculus { cap }
    }

    /// Cap from `Z2TK_DERIV_CAP`, falling back to the default.
    pub fn from_env() -> Result<Self, MechError> {
        match std::env::var(DERIV_CAP_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map(Calculus::new)
                .map_err(|_| MechError::BadCap(v)),
            Err(_) => Ok(Calculus::default()),
        }
    }

    pub fn dt(&self, p: &GradedPoly) -> Result<GradedPoly, MechError> {
        apply_derivation(p, Degree::D00, |s| match s {
            Symbol::Const(_) => Ok(GradedPoly::zero()),
            Symbol::Field(v) => {
                if v.order >= self.cap {
                    return Err(MechError::DerivCap {
                        var: v.to_string(),
                        cap: self.cap,
                    });
                }
                Ok(GradedPoly::symbol(v.with_order(v.order + 1)))
            }
        })
    }

    pub fn dt_n(&self, p: &GradedPoly, n: u8) -> Result<GradedPoly, MechError> {
        let mut acc = p.clone();
        for _ in 0..n {
            if acc.is_zero() {
                break;
            }
            acc = self.dt(&acc)?;
        }
        Ok(acc)
    }

    /// `Σ_k (−d/dt)^k ∂P/∂q^(k)` for an order-0 variable `q`.
    pub fn euler_lagrange(&self, p: &GradedPoly, q: FieldVar) -> Result<GradedPoly, MechError> {
        let max = max_order_of(p, q);
        let mut out = GradedPoly::zero();
        for k in (0..=max).rev() {
            // Horner: out = ∂P/∂q^(k) − d/dt(out)
            let d = if out.is_zero() { out } else { self.dt(&out)? };
            out = left_derivative(p, q.with_order(k)) - d;
        }
        Ok(out)
    }

    /// Momenta `p_{q,m} = Σ_{j>m} (−d/dt)^{j−m−1} ∂P/∂q^(j)` for
    /// `m = 0..max_order(q)`.
    pub fn momenta(&self, p: &GradedPoly, q: FieldVar) -> Result<Vec<GradedPoly>, MechError> {
        let max = max_order_of(p, q);
        let mut out = vec![GradedPoly::zero(); usize::from(max)];
        let mut acc = GradedPoly::zero();
        for m in (0..max).rev() {
            let d = if acc.is_zero() { acc } else { self.dt(&acc)? };
            acc = left_derivative(p, q.with_order(m + 1)) - d;
            out[usize::from(m)] = acc.clone();
        }
        Ok(out)
    }

    /// `Σ_{q,m} q^(m)·p_{q,m}`, the boundary term of the first variation.
    fn boundary(&self, p: &GradedPoly) -> Result<GradedPoly, MechError> {
        let mut out = GradedPoly::zero();
        for q in base_vars(p) {
            for (m, pm) in self.momenta(p, q)?.iter().enumerate() {
                let m = u8::try_from(m).expect("order fits u8");
                out = out + &GradedPoly::symbol(q.with_order(m)) * pm;
            }
        }
        Ok(out)
    }

    /// `Some(K)` with `dK/dt = p` when every variational derivative of `p`
    /// vanishes, `None` otherwise. The witness is verified before return.
    pub fn total_derivative_witness(&self, p: &GradedPoly) -> Result<Option<GradedPoly>, MechError> {
        if p.is_zero() {
            return Ok(Some(GradedPoly::zero()));
        }
        for q in base_vars(p) {
            if !self.euler_lagrange(p, q)?.is_zero() {
                return Ok(None);
            }
        }
        let mut k = GradedPoly::zero();
        for (d, part) in p.by_field_degree() {
            if d == 0 {
                // A field-free constant is never a derivative.
                return Ok(None);
            }
            let inv = GaussianRational::from_int(d as i64).inv().expect("nonzero");
            k = k + self.boundary(&part)?.scale(&inv);
        }
        if self.dt(&k)? != *p {
            return Err(MechError::WitnessMismatch(p.to_string()));
        }
        Ok(Some(k))
    }

    pub fn is_total_derivative(&self, p: &GradedPoly) -> Result<bool, MechError> {
        Ok(self.total_derivative_witness(p)?.is_some())
    }
}

fn max_order_of(p: &GradedPoly, q: FieldVar) -> u8 {
    p.field_vars()
        .iter()
        .filter(|v| v.base() == q.base())
        .map(|v| v.order)
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mech::symbol::FieldName;

    fn p(s: &str) -> GradedPoly {
        s.parse().unwrap()
    }

    #[test]
    fn leibniz_and_constants() {
        let c = Calculus::default();
        assert_eq!(c.dt(&p("x*z")).unwrap(), p("dx*z + x*dz"));
        assert!(c.dt(&p("eps10")).unwrap().is_zero());
        assert_eq!(c.dt(&p("psi*xi")).unwrap(), p("dpsi*xi + psi*dxi"));
    }

    #[test]
    fn cap_is_enforced() {
        let c = Calculus::new(2);
        assert!(c.dt(&p("dx")).is_ok());
        assert!(matches!(c.dt(&p("ddx")), Err(MechError::DerivCap { .. })));
    }

    #[test]
    fn left_derivative_signs() {
        let psi = FieldVar::plain(FieldName::Psi);
        // ψ̄ψ̇: moving ψ̇ past ψ̄ costs a sign.
        assert_eq!(left_derivative(&p("psibar*dpsi"), psi.with_order(1)), p("-psibar"));
        assert_eq!(left_derivative(&p("psibar*dpsi"), FieldVar::bar(FieldName::Psi)), p("dpsi"));
    }

    #[test]
    fn euler_lagrange_free_particle() {
        let c = Calculus::default();
        let l = p("dxbar*dx");
        assert_eq!(c.euler_lagrange(&l, FieldVar::bar(FieldName::X)).unwrap(), p("-ddx"));
    }

    #[test]
    fn total_derivatives() {
        let c = Calculus::default();
        let e = c.dt(&p("x*zbar")).unwrap();
        let k = c.total_derivative_witness(&e).unwrap().unwrap();
        assert_eq!(c.dt(&k).unwrap(), e);
        assert_eq!(k, p("x*zbar"));
        assert!(c.total_derivative_witness(&p("psibar*dpsi")).unwrap().is_none());
        assert!(c.total_derivative_witness(&p("1")).unwrap().is_none());
        let e = c.dt(&p("mu*psi*dddxi*x")).unwrap();
        let k = c.total_derivative_witness(&e).unwrap().unwrap();
        assert_eq!(c.dt(&k).unwrap(), e);
    }
}

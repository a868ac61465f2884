use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use super::{BiPoly, GaussianRational};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("pole at E = {e0}, lam = {l0}: denominator `{den}` vanishes")]
    Pole {
        den: String,
        e0: String,
        l0: String,
    },
}

/// An element of `Q(i)(E, λ)`.
///
/// Always stored in canonical form: `gcd(num, den) = 1` and the leading
/// coefficient of `den` (lexicographic in `(deg_E, deg_λ)`) is 1. Zero is
/// `0/1`. Equality is therefore structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: BiPoly,
    den: BiPoly,
}

impl RationalFunction {
    /// Builds `num/den` in canonical form.
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: BiPoly, den: BiPoly) -> Self {
        if num.is_zero() {
            return RationalFunction::zero();
        }
        let (num, den) = if den.is_constant() || num.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_constant() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        let lc_inv = den
            .leading()
            .and_then(|(_, c)| c.inv())
            .expect("nonzero denominator");
        RationalFunction {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        }
    }

    /// Scales coprime `num/den` so the leading coefficient of `den` is 1.
    fn normalized(num: BiPoly, den: BiPoly) -> Self {
        let lc_inv = den
            .leading()
            .and_then(|(_, c)| c.inv())
            .expect("nonzero denominator");
        RationalFunction {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        }
    }

    pub fn from_poly(p: BiPoly) -> Self {
        RationalFunction {
            num: p,
            den: BiPoly::one(),
        }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_poly(BiPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussianRational::from_int(n))
    }

    pub fn e() -> Self {
        Self::from_poly(BiPoly::e())
    }

    pub fn lambda() -> Self {
        Self::from_poly(BiPoly::lambda())
    }

    pub fn i() -> Self {
        Self::constant(GaussianRational::i())
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    /// Re-normalizes a value; canonical values are fixed points.
    pub fn canonicalize(&self) -> Self {
        Self::canonical(self.num.clone(), self.den.clone())
    }

    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<Self, ArithError> {
        let inv = rhs.inv().ok_or(ArithError::DivisionByZero)?;
        Ok(self * &inv)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::canonical(self.den.clone(), self.num.clone()))
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        Self::canonical(self.num.pow(exp), self.den.pow(exp))
    }

    /// Exact evaluation at `E = e0`, `λ = l0`.
    pub fn specialize(
        &self,
        e0: &GaussianRational,
        l0: &GaussianRational,
    ) -> Result<GaussianRational, ArithError> {
        let d = self.den.eval(e0, l0);
        let inv = d.inv().ok_or_else(|| ArithError::Pole {
            den: self.den.to_string(),
            e0: e0.to_string(),
            l0: l0.to_string(),
        })?;
        Ok(&self.num.eval(e0, l0) * &inv)
    }

    /// Substitutes rational functions for `E` and `λ`.
    pub fn substitute(
        &self,
        e: &RationalFunction,
        l: &RationalFunction,
    ) -> Result<RationalFunction, ArithError> {
        let num = subst_poly(&self.num, e, l);
        let den = subst_poly(&self.den, e, l);
        if den.is_zero() {
            return Err(ArithError::Pole {
                den: self.den.to_string(),
                e0: e.to_string(),
                l0: l.to_string(),
            });
        }
        Ok(&num * &den.inv().expect("nonzero"))
    }

    /// Complex conjugation of coefficients (`E`, `λ` treated as real).
    pub fn conj(&self) -> Self {
        Self::canonical(self.num.conj(), self.den.conj())
    }
}

fn subst_poly(p: &BiPoly, e: &RationalFunction, l: &RationalFunction) -> RationalFunction {
    let mut acc = RationalFunction::zero();
    for ((a, b), c) in p.terms() {
        let term = &(&RationalFunction::constant(c.clone()) * &e.pow(*a)) * &l.pow(*b);
        acc = &acc + &term;
    }
    acc
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction {
            num: BiPoly::zero(),
            den: BiPoly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::from_int(1)
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = self.num.add(&rhs.num);
            if self.is_polynomial() {
                return RationalFunction {
                    num,
                    den: self.den.clone(),
                };
            }
            return RationalFunction::canonical(num, self.den.clone());
        }
        // With g = gcd(b, d), b = g·b', d = g·d': the numerator a·d' + c·b'
        // is coprime to b' and d', so only g can cancel.
        let g = self.den.gcd(&rhs.den);
        let (b1, d1) = if g.is_constant() {
            (self.den.clone(), rhs.den.clone())
        } else {
            (
                self.den.div_exact(&g).expect("gcd divides"),
                rhs.den.div_exact(&g).expect("gcd divides"),
            )
        };
        let num = self.num.mul(&d1).add(&rhs.num.mul(&b1));
        if num.is_zero() {
            return RationalFunction::zero();
        }
        let den = b1.mul(&d1);
        if g.is_constant() {
            return RationalFunction::normalized(num, den.scale(&g.as_constant().expect("constant")));
        }
        let h = num.gcd(&g);
        if h.is_constant() {
            return RationalFunction::normalized(num, den.mul(&g));
        }
        RationalFunction::normalized(
            num.div_exact(&h).expect("gcd divides"),
            den.mul(&g.div_exact(&h).expect("gcd divides")),
        )
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            // Both denominators are 1 in canonical form.
            return RationalFunction {
                num: self.num.mul(&rhs.num),
                den: BiPoly::one(),
            };
        }
        // Both operands are reduced, so only the cross gcds can cancel.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let cancel = |p: &BiPoly, g: &BiPoly| {
            if g.is_constant() {
                p.clone()
            } else {
                p.div_exact(g).expect("gcd divides")
            }
        };
        let num = cancel(&self.num, &g1).mul(&cancel(&rhs.num, &g2));
        let den = cancel(&self.den, &g2).mul(&cancel(&rhs.den, &g1));
        RationalFunction::normalized(num, den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl Div for RationalFunction {
    type Output = RationalFunction;
    /// Panics on division by zero; see [`RationalFunction::checked_div`].
    fn div(self, rhs: RationalFunction) -> RationalFunction {
        self.checked_div(&rhs).expect("division by the zero rational function")
    }
}

impl From<GaussianRational> for RationalFunction {
    fn from(c: GaussianRational) -> Self {
        RationalFunction::constant(c)
    }
}

impl Scalar for RationalFunction {
    fn inverse(&self) -> Option<Self> {
        self.inv()
    }
    fn from_gaussian(c: &GaussianRational) -> Self {
        RationalFunction::constant(c.clone())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &BiPoly| {
            let s = p.to_string();
            if p.terms().count() > 1 || s.contains(['*', '/', '+']) {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl BiPoly {
    fn is_one_poly(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e() -> RationalFunction {
        RationalFunction::e()
    }
    fn l() -> RationalFunction {
        RationalFunction::lambda()
    }

    #[test]
    fn add_polynomials() {
        assert_eq!((&e() + &l()).to_string(), "E + lam");
    }

    #[test]
    fn division_cancels_gcd() {
        // (λ² − λE²)/λ = λ − E²
        let num = &(&l() * &l()) - &(&l() * &(&e() * &e()));
        let q = num.checked_div(&l()).unwrap();
        assert_eq!(q, &l() - &(&e() * &e()));
        assert!(q.is_polynomial());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let one = RationalFunction::one();
        assert_eq!(
            one.checked_div(&RationalFunction::zero()),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    fn specialization_and_poles() {
        let f = (&l() - &(&e() * &e())).checked_div(&l()).unwrap();
        let one = GaussianRational::from_int(1);
        let two = GaussianRational::from_int(2);
        assert_eq!(f.specialize(&one, &two).unwrap(), GaussianRational::from_ratio(1, 2));
        let g = &l() - &(&e() * &e());
        assert!(g
            .specialize(&two, &GaussianRational::from_int(4))
            .unwrap()
            .is_zero());
        let pole = RationalFunction::one().checked_div(&l()).unwrap();
        assert!(matches!(
            pole.specialize(&one, &GaussianRational::zero()),
            Err(ArithError::Pole { .. })
        ));
    }

    #[test]
    fn zero_tests() {
        let f = &l() - &(&e() * &e());
        assert!((&f - &f).is_zero());
        assert!(!f.is_zero());
        let el = (&e() * &l()).checked_div(&l()).unwrap();
        assert!((&el - &e()).is_zero());
    }

    #[test]
    fn canonical_denominator_is_monic() {
        let f = RationalFunction::new(BiPoly::one(), BiPoly::lambda().scale(&GaussianRational::from_int(2))).unwrap();
        assert_eq!(f.den(), &BiPoly::lambda());
        assert_eq!(f.to_string(), "(1/2)/lam");
        assert_eq!(f.canonicalize(), f);
    }

    #[test]
    fn substitute_lambda_by_e_squared() {
        let f = (&l() - &(&e() * &e())).checked_div(&l()).unwrap();
        let e2 = &e() * &e();
        assert!(f.substitute(&e(), &e2).unwrap().is_zero());
        let inv = RationalFunction::one().checked_div(&(&l() - &e2)).unwrap();
        assert!(inv.substitute(&e(), &e2).is_err());
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        RationalFunction::zero()
    }
}

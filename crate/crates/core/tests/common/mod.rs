//! Strategies and property bodies shared by the property and acceptance
//! targets.
#![allow(dead_code)]

use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use z2susy::graded::{swap_sign, GeneratorId};
use z2susy::mech::{degree_of, Calculus, Const, FieldName, FieldVar, GradedPoly, Symbol, VariableSystem};
use z2susy::{BiPoly, GaussianRational, RationalFunction};

pub fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4).prop_map(|(a, b, c, d)| {
        &GaussianRational::from_ratio(a, b) + &(&GaussianRational::from_ratio(c, d) * &GaussianRational::i())
    })
}

pub fn bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((0u32..3, 0u32..3), gaussian()), 0..4).prop_map(BiPoly::from_terms)
}

pub fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (bipoly(), bipoly())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

pub fn symbol() -> impl Strategy<Value = Symbol> {
    prop_oneof![
        (0usize..6).prop_map(|k| Symbol::Const(Const::ALL[k])),
        (0usize..4, any::<bool>(), 0u8..3).prop_map(|(k, b, o)| {
            Symbol::Field(FieldVar::new([FieldName::X, FieldName::Z, FieldName::Psi, FieldName::Xi][k], b, o))
        }),
    ]
}

pub fn monomial() -> impl Strategy<Value = (GaussianRational, Vec<Symbol>)> {
    (gaussian(), prop::collection::vec(symbol(), 0..6))
}

pub fn poly() -> impl Strategy<Value = GradedPoly> {
    prop::collection::vec(monomial(), 0..4).prop_map(|ts| {
        ts.into_iter()
            .fold(GradedPoly::zero(), |acc, (c, f)| acc + GradedPoly::term(c, f))
    })
}

pub fn generator() -> impl Strategy<Value = GeneratorId> {
    (0usize..6).prop_map(|k| GeneratorId::ALL[k])
}

pub fn field_axioms(a: &RationalFunction, b: &RationalFunction, c: &RationalFunction) -> Result<(), TestCaseError> {
    prop_assert_eq!(a + b, b + a);
    prop_assert_eq!(a * b, b * a);
    prop_assert_eq!(&(a + b) + c, a + &(b + c));
    prop_assert_eq!(&(a * b) * c, a * &(b * c));
    prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    prop_assert!((a - a).is_zero());
    prop_assert_eq!(a * &RationalFunction::one(), a.clone());
    if let Some(inv) = a.inv() {
        prop_assert_eq!(a * &inv, RationalFunction::one());
    }
    prop_assert_eq!(a.canonicalize(), a.clone());
    Ok(())
}

/// Any sequence of adjacent swaps, with the sign rule applied, normalizes to
/// the same canonical term.
pub fn normalization_confluent(c: GaussianRational, factors: Vec<Symbol>, swaps: &[usize]) -> Result<(), TestCaseError> {
    let mut shuffled = factors.clone();
    let mut sign = 1i8;
    for &s in swaps {
        if shuffled.len() < 2 {
            break;
        }
        let k = s % (shuffled.len() - 1);
        sign *= swap_sign(shuffled[k].degree(), shuffled[k + 1].degree());
        shuffled.swap(k, k + 1);
    }
    let c2 = if sign < 0 { -c.clone() } else { c.clone() };
    prop_assert_eq!(GradedPoly::term(c, factors), GradedPoly::term(c2, shuffled));
    Ok(())
}

pub fn conjugation_involution(p: &GradedPoly) -> Result<(), TestCaseError> {
    prop_assert_eq!(p.conjugate().conjugate(), p.clone());
    let i = GaussianRational::i();
    prop_assert_eq!(p.scale(&i).conjugate(), p.conjugate().scale(&i.conj()));
    Ok(())
}

pub fn graded_derivation(g: GeneratorId, cf: GaussianRational, ff: Vec<Symbol>, h: &GradedPoly) -> Result<(), TestCaseError> {
    let calc = Calculus::default();
    let sys = VariableSystem::base();
    let f = GradedPoly::term(cf, ff.clone());
    let lhs = sys.apply_generator(g, &(&f * h), &calc).unwrap();
    let gf = sys.apply_generator(g, &f, &calc).unwrap();
    let gh = sys.apply_generator(g, h, &calc).unwrap();
    let s = swap_sign(g.degree(), degree_of(&ff));
    let rhs = &gf * h + (&f * &gh).scale(&GaussianRational::from_int(s.into()));
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

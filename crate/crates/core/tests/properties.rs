mod common;

use proptest::prelude::*;

use common::*;

use z2susy::graded::{general_bracket, swap_sign, Degree, GeneratorId};
use z2susy::induced::build_DEl;
use num_traits::One;
use z2susy::mech::{canonical_order, Calculus, FieldName, FieldVar, GradedPoly, Symbol, Variation, VariableSystem};
use z2susy::{GaussianRational, Matrix};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ratfunc_field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        field_axioms(&a, &b, &c)?;
    }

    #[test]
    fn specialization_is_a_homomorphism(a in ratfunc(), b in ratfunc(), e0 in gaussian(), l0 in gaussian()) {
        if let (Ok(x), Ok(y)) = (a.specialize(&e0, &l0), b.specialize(&e0, &l0)) {
            prop_assert_eq!((&a + &b).specialize(&e0, &l0).unwrap(), &x + &y);
            prop_assert_eq!((&a * &b).specialize(&e0, &l0).unwrap(), &x * &y);
        }
    }

    #[test]
    fn normalization_is_confluent(
        (c, factors) in monomial(),
        swaps in prop::collection::vec(0usize..8, 0..20),
    ) {
        normalization_confluent(c, factors, &swaps)?;
    }

    #[test]
    fn canonical_order_is_idempotent((_, factors) in monomial()) {
        let mut once = factors.clone();
        if canonical_order(&mut once).is_some() {
            let mut twice = once.clone();
            prop_assert_eq!(canonical_order(&mut twice), Some(1));
            prop_assert_eq!(once, twice);
        }
    }

    #[test]
    fn conjugation_is_an_involution(p in poly()) {
        conjugation_involution(&p)?;
    }

    #[test]
    fn printer_parser_roundtrip(p in poly()) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<GradedPoly>().unwrap(), p.clone());
        prop_assert_eq!(GradedPoly::from_json(&p.to_json()), Some(p));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn generators_are_graded_derivations(
        g in generator(),
        (cf, ff) in monomial(),
        h in poly(),
    ) {
        graded_derivation(g, cf, ff, &h)?;
    }

    #[test]
    fn variations_are_even_derivations(k in 0usize..3, f in poly(), h in poly()) {
        let calc = Calculus::default();
        let sys = VariableSystem::base();
        let v = Variation::ALL[k];
        let lhs = sys.apply_delta(v, &(&f * &h), &calc).unwrap();
        let rhs = &sys.apply_delta(v, &f, &calc).unwrap() * &h + &f * &sys.apply_delta(v, &h, &calc).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn time_derivative_is_leibniz(f in poly(), h in poly()) {
        let calc = Calculus::default();
        let lhs = calc.dt(&(&f * &h)).unwrap();
        let rhs = &calc.dt(&f).unwrap() * &h + &f * &calc.dt(&h).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// The bracket of two generator derivations is the derivation prescribed
    /// by the defining relations, on arbitrary polynomials.
    #[test]
    fn operator_algebra_on_polynomials(a in generator(), b in generator(), p in poly()) {
        let calc = Calculus::default();
        let sys = VariableSystem::base();
        let lhs = z2susy::mech::bracket_on(&sys, a, b, &p, &calc).unwrap();
        let rel = z2susy::graded::relation_list()
            .into_iter()
            .find(|r| (r.left, r.right) == (a, b) || (r.left, r.right) == (b, a));
        if let Some(rel) = rel {
            let mut rhs = GradedPoly::zero();
            for (op, c) in &rel.rhs {
                let img = match op {
                    z2susy::graded::Operator::Identity => p.clone(),
                    z2susy::graded::Operator::Gen(g) => sys.apply_generator(*g, &p, &calc).unwrap(),
                };
                rhs = rhs + img.scale(&c.as_constant().unwrap());
            }
            // [B,A} = −swap_sign(a,b)·[A,B}
            if (rel.left, rel.right) != (a, b) {
                rhs = rhs.scale(&GaussianRational::from_int(-i64::from(swap_sign(a.degree(), b.degree()))));
            }
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn swap_sign_table_matches_symbol_products() {
    let reps = [
        (Degree::D00, Symbol::Field(FieldVar::plain(FieldName::X))),
        (Degree::D11, Symbol::Field(FieldVar::plain(FieldName::Z))),
        (Degree::D10, Symbol::Field(FieldVar::plain(FieldName::Psi))),
        (Degree::D01, Symbol::Field(FieldVar::plain(FieldName::Xi))),
    ];
    let others = [
        Symbol::Field(FieldVar::bar(FieldName::X)),
        Symbol::Field(FieldVar::bar(FieldName::Z)),
        Symbol::Field(FieldVar::bar(FieldName::Psi)),
        Symbol::Field(FieldVar::bar(FieldName::Xi)),
    ];
    for (d1, s1) in reps {
        for s2 in others {
            let d2 = s2.degree();
            assert_eq!(swap_sign(d1, d2), swap_sign(d2, d1));
            let ab = GradedPoly::term(GaussianRational::one(), vec![s1, s2]);
            let ba = GradedPoly::term(GaussianRational::one(), vec![s2, s1]);
            assert_eq!(ab, ba.scale(&GaussianRational::from_int(swap_sign(d1, d2).into())), "{d1} {d2}");
        }
    }
}

fn bracket(a: &Matrix<GaussianRational>, da: Degree, b: &Matrix<GaussianRational>, db: Degree) -> Matrix<GaussianRational> {
    let s = GaussianRational::from_int(swap_sign(da, db).into());
    a.mul(b).sub(&b.mul(a).scale(&s))
}

#[test]
fn graded_jacobi_on_the_induced_module() {
    let two = GaussianRational::from_int(2);
    let three = GaussianRational::from_int(3);
    let rep = build_DEl().rep().specialize(&two, &three).unwrap();
    for a in GeneratorId::ALL {
        for b in GeneratorId::ALL {
            for c in GeneratorId::ALL {
                let (ma, mb, mc) = (rep.mat(a), rep.mat(b), rep.mat(c));
                let (da, db, dc) = (a.degree(), b.degree(), c.degree());
                let lhs = bracket(ma, da, &bracket(mb, db, mc, dc), db + dc);
                let r1 = bracket(&bracket(ma, da, mb, db), da + db, mc, dc);
                let r2 = bracket(mb, db, &bracket(ma, da, mc, dc), da + dc)
                    .scale(&GaussianRational::from_int(swap_sign(da, db).into()));
                assert_eq!(lhs, r1.add(&r2), "{a} {b} {c}");
            }
        }
    }
    assert_eq!(general_bracket(&rep, GeneratorId::Q10, GeneratorId::Q10d), rep.mat(GeneratorId::H).clone());
}

#[test]
fn time_derivative_commutes_with_every_rule() {
    let calc = Calculus::default();
    for sys in [
        VariableSystem::base(),
        VariableSystem::x_f(&calc).unwrap(),
        VariableSystem::y_a_f(&calc).unwrap(),
        VariableSystem::y_a_z(&calc).unwrap(),
        VariableSystem::a_z(&calc).unwrap(),
    ] {
        for &q in sys.vars() {
            let p = GradedPoly::symbol(q);
            let dp = calc.dt(&p).unwrap();
            for g in GeneratorId::ALL {
                let a = calc.dt(&sys.apply_generator(g, &p, &calc).unwrap()).unwrap();
                let b = sys.apply_generator(g, &dp, &calc).unwrap();
                assert_eq!(a, b, "{} {g} {q}", sys.name());
            }
            for v in Variation::ALL {
                let a = calc.dt(&sys.apply_delta(v, &p, &calc).unwrap()).unwrap();
                let b = sys.apply_delta(v, &dp, &calc).unwrap();
                assert_eq!(a, b, "{} {v} {q}", sys.name());
            }
        }
    }
}

#[test]
fn operator_algebra_holds_in_every_variable_system() {
    let calc = Calculus::default();
    for sys in [
        VariableSystem::base(),
        VariableSystem::x_f(&calc).unwrap(),
        VariableSystem::y_a_f(&calc).unwrap(),
        VariableSystem::y_a_z(&calc).unwrap(),
        VariableSystem::a_z(&calc).unwrap(),
    ] {
        let checks = z2susy::mech::operator_algebra(&sys, &calc).unwrap();
        for k in checks {
            assert!(k.pass(), "{}: {} on {}: {}", sys.name(), k.relation, k.field, k.residual);
        }
    }
}

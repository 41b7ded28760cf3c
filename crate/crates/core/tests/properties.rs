//! Algebraic laws checked on random inputs.

mod common;

use std::collections::BTreeMap;

use cubic_clifford::cliffordf::CliffordF;
use cubic_clifford::curves::{jacobian_of, EllipticCurve};
use cubic_clifford::forms::{action_matrix, orbit_equivalent, orbit_invariants, BinaryCubicForm, Equivalence};
use cubic_clifford::freealg::FreeElement;
use cubic_clifford::gca::identities::{alpha, beta};
use cubic_clifford::gca::{Gca, GcaElement};
use cubic_clifford::gl2::Gl2;
use cubic_clifford::poly::{ga_vars, s_vars, Poly};
use cubic_clifford::{CyclotomicOmega, Field, PrimeField, Rationals};
use proptest::prelude::*;
use rand::Rng;

fn f13() -> PrimeField {
    PrimeField::new(13).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_ring_axioms(seed in any::<u64>()) {
        let k = CyclotomicOmega;
        let v = s_vars();
        let mut r = common::rng(seed);
        let [a, b, c] = [(); 3].map(|_| common::random_poly(&k, &v, &mut r, 3, 2));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn poly_eval_is_a_homomorphism(seed in any::<u64>()) {
        let k = Rationals;
        let v = s_vars();
        let mut r = common::rng(seed);
        let a = common::random_poly(&k, &v, &mut r, 3, 2);
        let b = common::random_poly(&k, &v, &mut r, 3, 2);
        let point: BTreeMap<String, _> = v.iter().map(|n| (n.clone(), k.random(&mut r))).collect();
        let ev = |p: &Poly<Rationals>| p.eval(&point).unwrap();
        prop_assert_eq!(ev(&(&a * &b)), k.mul(&ev(&a), &ev(&b)));
        prop_assert_eq!(ev(&(&a + &b)), k.add(&ev(&a), &ev(&b)));
    }

    #[test]
    fn poly_text_round_trip(seed in any::<u64>()) {
        let k = CyclotomicOmega;
        let v = s_vars();
        let a = common::random_poly(&k, &v, &mut common::rng(seed), 4, 3);
        prop_assert_eq!(Poly::parse(&k, &v, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn free_text_and_json_round_trip(seed in any::<u64>()) {
        let k = f13();
        let e = common::random_free(&k, &mut common::rng(seed), 5, 6);
        prop_assert_eq!(FreeElement::parse(&k, &e.to_string()).unwrap(), e.clone());
        prop_assert_eq!(FreeElement::from_json(&k, &e.to_json()).unwrap(), e);
    }

    #[test]
    fn substitution_is_multiplicative_and_composes(seed in any::<u64>()) {
        let k = f13();
        let mut r = common::rng(seed);
        let a = common::random_free(&k, &mut r, 3, 3);
        let b = common::random_free(&k, &mut r, 3, 3);
        let g = Gl2::random(&k, &mut r);
        let h = Gl2::random(&k, &mut r);
        let sub = |e: &FreeElement<PrimeField>, m: &Gl2<PrimeField>| e.linear_substitute(m).unwrap();
        prop_assert_eq!(sub(&(&a * &b), &g), &sub(&a, &g) * &sub(&b, &g));
        prop_assert_eq!(sub(&sub(&a, &h), &g), sub(&a, &g.mul(&h).unwrap()));
    }

    #[test]
    fn gca_multiplication_is_associative(seed in any::<u64>()) {
        let k = f13();
        let gca = Gca::new(&k).unwrap();
        let mut r = common::rng(seed);
        let [a, b, c] = [(); 3].map(|_| common::random_gca(&k, &mut r));
        let ab_c = gca.mul(&gca.mul(&a, &b).unwrap(), &c).unwrap();
        let a_bc = gca.mul(&a, &gca.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        prop_assert_eq!(gca.mul(&a, &GcaElement::one(&k)).unwrap(), a.clone());
        prop_assert_eq!(gca.mul(&GcaElement::one(&k), &a).unwrap(), a);
    }

    #[test]
    fn reduce_is_a_homomorphism(seed in any::<u64>()) {
        let k = PrimeField::with_omega(7, 4).unwrap();
        let gca = Gca::new(&k).unwrap();
        let mut r = common::rng(seed);
        let a = common::random_free(&k, &mut r, 3, 5);
        let b = common::random_free(&k, &mut r, 3, 5);
        let lhs = gca.reduce(&(&a * &b)).unwrap();
        prop_assert_eq!(lhs, gca.mul(&gca.reduce(&a).unwrap(), &gca.reduce(&b).unwrap()).unwrap());
    }

    #[test]
    fn linear_elements_cube_to_the_generic_form(seed in any::<u64>()) {
        let k = CyclotomicOmega;
        let gca = Gca::new(&k).unwrap();
        let mut r = common::rng(seed);
        let (p, q) = (k.random(&mut r), k.random(&mut r));
        let v = &FreeElement::x(&k).scale(&p) + &FreeElement::y(&k).scale(&q);
        let cube = gca.reduce(&v.pow(3)).unwrap();
        let vars = s_vars();
        let mut expected = Poly::zero(&k, &vars);
        for (i, name) in ["X3", "AL", "BE", "Y3"].iter().enumerate() {
            let c = k.mul(&k.pow(&p, 3 - i as u64), &k.pow(&q, i as u64));
            expected = &expected + &Poly::var(&k, &vars, name).unwrap().scale(&c);
        }
        prop_assert_eq!(cube, GcaElement::from_poly(expected));
    }

    #[test]
    fn gca_json_round_trip(seed in any::<u64>()) {
        let k = CyclotomicOmega;
        let a = common::random_gca(&k, &mut common::rng(seed));
        prop_assert_eq!(GcaElement::from_json(&k, &a.to_json()).unwrap(), a);
    }

    #[test]
    fn action_is_a_right_action_and_matches_substitution(seed in any::<u64>()) {
        let k = f13();
        let gca = Gca::new(&k).unwrap();
        let mut r = common::rng(seed);
        let f = BinaryCubicForm::random(&k, &mut r);
        let g = Gl2::random(&k, &mut r);
        let h = Gl2::random(&k, &mut r);
        prop_assert_eq!(f.act(&h).unwrap().act(&g).unwrap(), f.act(&h.mul(&g).unwrap()).unwrap());
        // Column j of the transposed matrix is the image of the j-th cube generator.
        let m = action_matrix(&g);
        let gens = [FreeElement::x(&k).pow(3), alpha(&k), beta(&k), FreeElement::y(&k).pow(3)];
        let vars = s_vars();
        for (j, e) in gens.iter().enumerate() {
            let img = gca.reduce(&e.linear_substitute(&g).unwrap()).unwrap();
            let mut expected = Poly::zero(&k, &vars);
            for (i, name) in ["X3", "AL", "BE", "Y3"].iter().enumerate() {
                expected = &expected + &Poly::var(&k, &vars, name).unwrap().scale(&m[j][i]);
            }
            prop_assert_eq!(img, GcaElement::from_poly(expected));
        }
    }

    #[test]
    fn discriminant_is_covariant_over_q(seed in any::<u64>()) {
        let k = Rationals;
        let mut r = common::rng(seed);
        let f = BinaryCubicForm::random(&k, &mut r);
        let g = Gl2::random(&k, &mut r);
        let lhs = f.act(&g).unwrap().discriminant();
        prop_assert_eq!(lhs, k.mul(&k.pow(&g.det(), 6), &f.discriminant()));
    }

    #[test]
    fn specialization_is_an_algebra_map(seed in any::<u64>()) {
        let k = f13();
        let gca = Gca::new(&k).unwrap();
        let mut r = common::rng(seed);
        let f = BinaryCubicForm::random_nondegenerate(&k, &mut r);
        let af = CliffordF::new(&gca, &f).unwrap();
        let a = common::random_gca(&k, &mut r);
        let b = common::random_gca(&k, &mut r);
        let lhs = af.specialize(&gca.mul(&a, &b).unwrap()).unwrap();
        let rhs = af.mul(&af.specialize(&a).unwrap(), &af.specialize(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn center_specializes_to_the_jacobian(seed in any::<u64>()) {
        let k = PrimeField::with_omega(13, 9).unwrap();
        let gca = Gca::new(&k).unwrap();
        let s = gca.special().unwrap().s;
        let f = BinaryCubicForm::random_nondegenerate(&k, &mut common::rng(seed));
        let af = CliffordF::new(&gca, &f).unwrap();
        let sf = af.specialize(&s).unwrap();
        let a = jacobian_of(&f).unwrap();
        let ga = Poly::var(&k, &ga_vars(), "GA").unwrap();
        let rhs = &ga.pow(3) + &Poly::constant(&k, &ga_vars(), *a.a());
        prop_assert_eq!(af.mul(&sf, &sf).unwrap(), af.scalar_poly(rhs).unwrap());
    }

    #[test]
    fn elliptic_group_axioms(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        for p in [7u64, 13] {
            let k = PrimeField::new(p).unwrap();
            let e = EllipticCurve::new(&k, k.random_nonzero(&mut r)).unwrap();
            let pts = e.points().unwrap();
            let pick = |r: &mut rand_chacha::ChaCha8Rng| pts[r.gen_range(0..pts.len())].clone();
            let (a, b, c) = (pick(&mut r), pick(&mut r), pick(&mut r));
            let ab_c = a.add(&b).unwrap().add(&c).unwrap();
            prop_assert_eq!(ab_c, a.add(&b.add(&c).unwrap()).unwrap());
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert!(a.add(&a.neg()).unwrap().is_infinity());
            let ta = a.theta().unwrap();
            prop_assert_eq!(a.add(&b).unwrap().theta().unwrap(), ta.add(&b.theta().unwrap()).unwrap());
            prop_assert_eq!(ta.theta().unwrap().theta().unwrap(), a);
        }
    }

    #[test]
    fn orbit_equivalence_is_sound_on_translates(seed in any::<u64>()) {
        let k = Rationals;
        let mut r = common::rng(seed);
        let f = BinaryCubicForm::random_nondegenerate(&k, &mut r);
        let g = Gl2::random(&k, &mut r);
        let h = f.act(&g).unwrap();
        match orbit_equivalent(&f, &h).unwrap() {
            Equivalence::Equivalent(w) => prop_assert_eq!(f.act(&w).unwrap(), h.clone()),
            Equivalence::Inequivalent(why) => prop_assert!(false, "translate declared inequivalent: {}", why),
            Equivalence::Unknown => {}
        }
        let a = orbit_invariants(&f, 3).unwrap();
        let b = orbit_invariants(&h, 3).unwrap();
        prop_assert_eq!(a.delta_class6, b.delta_class6);
    }

    #[test]
    fn orbit_equivalence_over_f7_matches_invariants(seed in any::<u64>()) {
        let k = PrimeField::new(7).unwrap();
        let mut r = common::rng(seed);
        let f = BinaryCubicForm::random_nondegenerate(&k, &mut r);
        let h = BinaryCubicForm::random_nondegenerate(&k, &mut r);
        let e = orbit_equivalent(&f, &h).unwrap();
        if let Equivalence::Equivalent(w) = &e {
            prop_assert_eq!(f.act(w).unwrap(), h.clone());
        }
        let same_class = k.power_class_token(&f.discriminant(), 6).unwrap()
            == k.power_class_token(&h.discriminant(), 6).unwrap();
        if e.decided() == Some(true) {
            prop_assert!(same_class);
        }
    }
}

//! Normal forms checked against ideal membership in the free algebra.
//!
//! For a free element e, e − lift(reduce(e)) must lie in the two-sided ideal
//! of the defining relations. Membership is decided degree by degree by
//! linear algebra on all words, independently of the structure matrices.

mod common;

use std::collections::BTreeMap;

use cubic_clifford::gca::quotient::{s_monomials, GradedPiece};
use cubic_clifford::gca::{Gca, BASIS_WORDS};
use cubic_clifford::{Field, PrimeField};

const MAX_DEGREE: usize = 9;

fn pieces(k: &PrimeField) -> BTreeMap<usize, GradedPiece<PrimeField>> {
    (0..=MAX_DEGREE).map(|n| (n, GradedPiece::new(k, n))).collect()
}

#[test]
fn hilbert_function_matches_free_basis_through_degree_nine() {
    let k = PrimeField::new(13).unwrap();
    for (n, piece) in pieces(&k) {
        let lifted: usize = BASIS_WORDS
            .iter()
            .filter(|b| b.len() <= n)
            .map(|b| s_monomials((n - b.len()) as u32).len())
            .sum();
        assert_eq!(piece.quotient_dim(), lifted, "degree {n}");
    }
}

#[test]
fn normal_forms_differ_by_ideal_elements() {
    for (p, w) in [(7, 2), (7, 4), (13, 3)] {
        let k = PrimeField::with_omega(p, w).unwrap();
        let gca = Gca::new(&k).unwrap();
        let pieces = pieces(&k);
        let mut rng = common::rng(p * 31 + w);
        for _ in 0..40 {
            let e = common::random_free(&k, &mut rng, 6, MAX_DEGREE);
            let nf = gca.reduce(&e).unwrap();
            let diff = &e - &gca.lift(&nf);
            for (n, part) in diff.homogeneous_parts() {
                assert!(
                    pieces[&n].contains(&part),
                    "degree {n} part of {e} not in the ideal over {}",
                    k.name()
                );
            }
        }
    }
}

#[test]
fn distinct_normal_forms_are_distinct_classes() {
    // A nonzero normal form must not lie in the ideal.
    let k = PrimeField::new(7).unwrap();
    let gca = Gca::new(&k).unwrap();
    let pieces = pieces(&k);
    let mut rng = common::rng(5);
    let mut checked = 0;
    while checked < 30 {
        let e = common::random_free(&k, &mut rng, 4, MAX_DEGREE);
        let nf = gca.reduce(&e).unwrap();
        if nf.is_zero() {
            continue;
        }
        let lifted = gca.lift(&nf);
        let outside = lifted
            .homogeneous_parts()
            .iter()
            .any(|(n, part)| *n <= MAX_DEGREE && !pieces[n].contains(part));
        if lifted.max_len() <= MAX_DEGREE {
            assert!(outside, "{nf} is a nonzero normal form of an ideal element");
            checked += 1;
        }
    }
}

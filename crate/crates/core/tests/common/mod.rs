#![allow(dead_code)]

use cubic_clifford::freealg::{FreeElement, Word};
use cubic_clifford::gca::{GcaElement, RANK};
use cubic_clifford::poly::{s_vars, Poly, Vars};
use cubic_clifford::Field;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_poly<F: Field>(k: &F, vars: &Vars, rng: &mut dyn RngCore, terms: usize, max_exp: u16) -> Poly<F> {
    let mut p = Poly::zero(k, vars);
    for _ in 0..rng.gen_range(0..=terms) {
        let exps: Vec<u16> = (0..vars.len()).map(|_| rng.gen_range(0..=max_exp)).collect();
        p = &p + &Poly::monomial(k, vars, exps, k.random(rng));
    }
    p
}

pub fn random_word(rng: &mut dyn RngCore, max_len: usize) -> Word {
    let n = rng.gen_range(0..=max_len);
    Word::from_index(n, rng.gen_range(0..1usize << n))
}

pub fn random_free<F: Field>(k: &F, rng: &mut dyn RngCore, terms: usize, max_len: usize) -> FreeElement<F> {
    let mut e = FreeElement::zero(k);
    for _ in 0..rng.gen_range(1..=terms) {
        let w = random_word(rng, max_len);
        e = &e + &FreeElement::term(k, w, k.random(rng));
    }
    e
}

/// A sparse element of A with small S-coefficients.
pub fn random_gca<F: Field>(k: &F, rng: &mut dyn RngCore) -> GcaElement<F> {
    let vars = s_vars();
    let mut coords = vec![Poly::zero(k, &vars); RANK];
    for _ in 0..3 {
        let i = rng.gen_range(0..RANK);
        coords[i] = random_poly(k, &vars, rng, 2, 1);
    }
    GcaElement::from_coords(coords).unwrap()
}

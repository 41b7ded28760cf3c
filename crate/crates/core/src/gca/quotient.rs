//! Graded pieces of A = k⟨x,y⟩/I and the derivation of the structure
//! matrices by exact linear algebra.
//!
//! The defining ideal I is homogeneous, generated in degree 4, so its degree-n
//! part I_n is spanned by the products u·r·v with r a relation and
//! |u| + |v| = n − 4. In each degree n the products m·bᵢ, with m an
//! S-monomial of weighted degree n − |bᵢ|, are lifted to the free algebra;
//! they must form a basis of A_n = k⟨x,y⟩_n / I_n. Expressing bⱼ·x and bⱼ·y
//! in that basis yields the columns of Mx and My.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::freealg::{FreeElement, Word};
use crate::linalg::Echelon;
use crate::poly::{s_vars, Monomial, Poly};
use crate::scalars::{Field, Rationals};

/// Words of the normal-form basis b₀ … b₁₇.
pub const BASIS_WORDS: [&str; 18] = [
    "", "x", "y", "xx", "xy", "yx", "yy", "xxy", "xyy", "yyx", "yxx", "xxyy", "xyxy", "xyxx",
    "yyxy", "xxyyx", "xyxyy", "xxyyxy",
];

/// Weighted degrees of X3, AL, BE, Y3, GA.
pub const S_WEIGHTS: [u32; 5] = [3, 3, 3, 3, 4];

pub fn basis_word(i: usize) -> Word {
    BASIS_WORDS[i].parse().expect("basis words are over {x,y}")
}

/// Letter strings of the free-algebra lifts of X3, AL, BE, Y3, GA, with signs.
const LIFTS: [&[(&str, i64)]; 5] = [
    &[("xxx", 1)],
    &[("xxy", 1), ("xyx", 1), ("yxx", 1)],
    &[("xyy", 1), ("yxy", 1), ("yyx", 1)],
    &[("yyy", 1)],
    &[("xyxy", 1), ("yyxx", -1)],
];

/// The free-algebra element representing an S variable (by index into
/// [`crate::poly::S_VARS`]).
pub fn lift_var<F: Field>(field: &F, i: usize) -> FreeElement<F> {
    let mut out = FreeElement::zero(field);
    for (w, c) in LIFTS[i] {
        out = &out + &FreeElement::term(field, w.parse().expect("letters"), field.from_i64(*c));
    }
    out
}

/// Lift of an S-monomial, factors taken in the order X3, AL, BE, Y3, GA.
pub fn lift_monomial<F: Field>(field: &F, exps: &[u16]) -> FreeElement<F> {
    let mut out = FreeElement::one(field);
    for (i, &e) in exps.iter().enumerate() {
        if e > 0 {
            out = &out * &lift_var(field, i).pow(e as u32);
        }
    }
    out
}

/// Lift of an S-polynomial.
pub fn lift_poly<F: Field>(p: &Poly<F>) -> FreeElement<F> {
    let k = p.field();
    let mut out = FreeElement::zero(k);
    for (m, c) in p.terms() {
        out = &out + &lift_monomial(k, m).scale(c);
    }
    out
}

/// S-monomials of weighted degree `w`, in lexicographic exponent order.
pub fn s_monomials(w: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for ga in 0..=w / 4 {
        let rest = w - 4 * ga;
        if rest % 3 != 0 {
            continue;
        }
        let d = (rest / 3) as u16;
        for a in 0..=d {
            for b in 0..=d - a {
                for c in 0..=d - a - b {
                    out.push(vec![a, b, c, d - a - b - c, ga as u16]);
                }
            }
        }
    }
    out.sort();
    out
}

/// The three defining relations x³y − yx³, xy³ − y³x, x²y² + xyxy − y²x² − yxyx.
pub fn relations<F: Field>(field: &F) -> [FreeElement<F>; 3] {
    let w = |s: &str| FreeElement::word(field, s).expect("letters");
    [
        &w("xxxy") - &w("yxxx"),
        &w("xyyy") - &w("yyyx"),
        &(&(&w("xxyy") + &w("xyxy")) - &w("yyxx")) - &w("yxyx"),
    ]
}

/// The degree-n part of the defining ideal.
#[derive(Clone, Debug)]
pub struct GradedPiece<F: Field> {
    field: F,
    degree: usize,
    ideal: Echelon<F>,
}

impl<F: Field> GradedPiece<F> {
    pub fn new(field: &F, degree: usize) -> Self {
        let width = 1usize << degree;
        let mut ideal = Echelon::new(field, width);
        if degree >= 4 {
            let rels = relations(field);
            let free = degree - 4;
            for r in &rels {
                for left in 0..=free {
                    let right = free - left;
                    for ui in 0..1usize << left {
                        let u = FreeElement::term(field, Word::from_index(left, ui), field.one());
                        for vi in 0..1usize << right {
                            let v =
                                FreeElement::term(field, Word::from_index(right, vi), field.one());
                            let g = &(&u * r) * &v;
                            ideal.insert(dense(field, degree, &g));
                        }
                    }
                }
            }
        }
        GradedPiece {
            field: field.clone(),
            degree,
            ideal,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn ideal_rank(&self) -> usize {
        self.ideal.rank()
    }

    /// dim A_n.
    pub fn quotient_dim(&self) -> usize {
        (1usize << self.degree) - self.ideal.rank()
    }

    /// Whether a homogeneous element of this degree lies in I.
    pub fn contains(&self, e: &FreeElement<F>) -> bool {
        self.ideal.contains(&dense(&self.field, self.degree, e))
    }

    pub(crate) fn reduce_dense(&self, v: &mut [F::Elem]) {
        self.ideal.reduce(v)
    }
}

/// Coordinates of a homogeneous element in the word basis of degree n.
pub(crate) fn dense<F: Field>(field: &F, degree: usize, e: &FreeElement<F>) -> Vec<F::Elem> {
    let mut v = vec![field.zero(); 1 << degree];
    for (w, c) in e.terms() {
        assert_eq!(w.len(), degree, "element is not homogeneous of degree {degree}");
        v[w.index()] = c.clone();
    }
    v
}

/// Structure matrices over ℚ together with the dimension bookkeeping of
/// their derivation.
#[derive(Clone, Debug)]
pub struct Derivation {
    /// `mx[i][j]` is the coefficient of bᵢ in bⱼ·x.
    pub mx: Vec<Vec<Poly<Rationals>>>,
    pub my: Vec<Vec<Poly<Rationals>>>,
    /// (degree, dim A_n, number of lifted S-monomial multiples of basis words)
    pub dimensions: Vec<(usize, usize, usize)>,
}

/// Lifted basis of A_n: (basis index, S-monomial, lift).
fn graded_basis<F: Field>(field: &F, n: usize) -> Vec<(usize, Monomial, FreeElement<F>)> {
    let mut out = Vec::new();
    for i in 0..18 {
        let len = BASIS_WORDS[i].len();
        if len > n {
            continue;
        }
        let word = FreeElement::term(field, basis_word(i), field.one());
        for m in s_monomials((n - len) as u32) {
            let lift = &lift_monomial(field, &m) * &word;
            out.push((i, m, lift));
        }
    }
    out
}

/// Express homogeneous degree-n elements in the lifted basis of A_n.
pub(crate) struct GradedSolver<F: Field> {
    field: F,
    piece: GradedPiece<F>,
    basis: Vec<(usize, Monomial)>,
    lifts: Echelon<F>,
}

impl<F: Field> GradedSolver<F> {
    pub(crate) fn new(field: &F, n: usize) -> Result<Self> {
        let piece = GradedPiece::new(field, n);
        let lifted = graded_basis(field, n);
        if lifted.len() != piece.quotient_dim() {
            return Err(Error::Derivation(format!(
                "degree {n}: {} lifted monomials but dim A_n = {}",
                lifted.len(),
                piece.quotient_dim()
            )));
        }
        let width = 1usize << n;
        let k = lifted.len();
        let mut lifts = Echelon::new(field, width + k);
        let mut basis = Vec::with_capacity(k);
        for (t, (i, m, e)) in lifted.into_iter().enumerate() {
            let mut v = dense(field, n, &e);
            piece.reduce_dense(&mut v);
            v.resize(width + k, field.zero());
            v[width + t] = field.one();
            if !lifts.insert_upto(v, width) {
                return Err(Error::Derivation(format!(
                    "degree {n}: lifted basis is linearly dependent modulo I"
                )));
            }
            basis.push((i, m));
        }
        Ok(GradedSolver {
            field: field.clone(),
            piece,
            basis,
            lifts,
        })
    }

    /// Coefficients (basis index, S-monomial, scalar) with e ≡ Σ c·m·bᵢ mod I.
    pub(crate) fn solve(&self, e: &FreeElement<F>) -> Result<Vec<(usize, Monomial, F::Elem)>> {
        let k = &self.field;
        let n = self.piece.degree();
        let width = 1usize << n;
        let mut v = dense(k, n, e);
        self.piece.reduce_dense(&mut v);
        v.resize(width + self.basis.len(), k.zero());
        self.lifts.reduce_upto(&mut v, width);
        if v[..width].iter().any(|c| !k.is_zero(c)) {
            return Err(Error::Derivation(format!(
                "degree {n}: element not in the span of the lifted basis"
            )));
        }
        Ok(self
            .basis
            .iter()
            .zip(&v[width..])
            .filter(|(_, c)| !k.is_zero(c))
            .map(|((i, m), c)| (*i, m.clone(), k.neg(c)))
            .collect())
    }
}

fn derive() -> Result<Derivation> {
    let q = Rationals;
    let sv = s_vars();
    let zero = Poly::zero(&q, &sv);
    let mut mx = vec![vec![zero.clone(); 18]; 18];
    let mut my = mx.clone();
    let mut dimensions = Vec::new();
    for n in 1..=7 {
        let solver = GradedSolver::new(&q, n)?;
        dimensions.push((n, solver.piece.quotient_dim(), solver.basis.len()));
        for j in (0..18).filter(|&j| BASIS_WORDS[j].len() == n - 1) {
            for (target, letter) in [(&mut mx, "x"), (&mut my, "y")] {
                let w = FreeElement::word(&q, &format!("{}{}", BASIS_WORDS[j], letter))?;
                for (i, m, c) in solver.solve(&w)? {
                    let term = Poly::monomial(&q, &sv, m, c);
                    target[i][j] = &target[i][j] + &term;
                }
            }
        }
    }
    Ok(Derivation { mx, my, dimensions })
}

/// The structure matrices over ℚ, derived on first use.
pub fn structure_constants() -> &'static Derivation {
    static CACHE: OnceLock<Derivation> = OnceLock::new();
    CACHE.get_or_init(|| derive().expect("structure matrices derive over Q"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_monomial_counts() {
        assert_eq!(s_monomials(0).len(), 1);
        assert_eq!(s_monomials(3).len(), 4);
        assert_eq!(s_monomials(4).len(), 1);
        assert_eq!(s_monomials(6).len(), 10);
        assert_eq!(s_monomials(7).len(), 4);
        assert!(s_monomials(5).is_empty());
    }

    #[test]
    fn hilbert_function_matches_rank_18_freeness() {
        let d = structure_constants();
        let expected = [(1, 2), (2, 4), (3, 8), (4, 13), (5, 20), (6, 31), (7, 44)];
        for ((n, dim, lifts), (en, edim)) in d.dimensions.iter().zip(expected) {
            assert_eq!((*n, *dim), (en, edim));
            assert_eq!(dim, lifts);
        }
    }
}

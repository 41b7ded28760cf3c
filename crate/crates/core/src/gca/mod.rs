//! The binary cubic generic Clifford algebra
//! A = k⟨x,y⟩ / (x³y − yx³, xy³ − y³x, x²y² + (xy)² − y²x² − (yx)²)
//! as a free module of rank 18 over S = k\[x³, α, β, y³, γ\].
//!
//! Elements are stored as 18 coordinates in S with respect to the basis
//! words of [`quotient::BASIS_WORDS`]. Right multiplication by a letter is a
//! matrix over S (Mx, My); everything else is built from it.

pub mod identities;
pub mod quotient;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::freealg::{FreeElement, Letter, Word};
use crate::poly::{s_vars, Poly};
use crate::scalars::Field;

pub use quotient::{basis_word, BASIS_WORDS};

pub const RANK: usize = 18;

/// An element of A in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcaElement<F: Field> {
    coords: Vec<Poly<F>>,
}

impl<F: Field> GcaElement<F> {
    pub fn from_coords(coords: Vec<Poly<F>>) -> Result<Self> {
        if coords.len() != RANK {
            return Err(Error::PreconditionFailed(format!(
                "expected {RANK} coordinates, got {}",
                coords.len()
            )));
        }
        let first = coords[0].clone();
        for c in &coords[1..] {
            first.checked_add(c)?;
        }
        Ok(GcaElement { coords })
    }

    pub fn zero(field: &F) -> Self {
        GcaElement {
            coords: vec![Poly::zero(field, &s_vars()); RANK],
        }
    }

    /// p·b₀ for p ∈ S.
    pub fn from_poly(p: Poly<F>) -> Self {
        let mut out = Self::zero(p.field());
        out.coords[0] = p;
        out
    }

    pub fn scalar(field: &F, c: F::Elem) -> Self {
        Self::from_poly(Poly::constant(field, &s_vars(), c))
    }

    pub fn one(field: &F) -> Self {
        Self::scalar(field, field.one())
    }

    /// The basis vector eᵢ.
    pub fn basis(field: &F, i: usize) -> Self {
        let mut out = Self::zero(field);
        out.coords[i] = Poly::one(field, &s_vars());
        out
    }

    pub fn field(&self) -> &F {
        self.coords[0].field()
    }

    pub fn coords(&self) -> &[Poly<F>] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Poly<F> {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Poly::is_zero)
    }

    /// The S-coefficient when the element lies in S·b₀.
    pub fn as_scalar_poly(&self) -> Option<&Poly<F>> {
        self.coords[1..]
            .iter()
            .all(Poly::is_zero)
            .then(|| &self.coords[0])
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<_>>()?;
        Ok(GcaElement { coords })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    /// Multiplication by a central coefficient p ∈ S.
    pub fn scale_poly(&self, p: &Poly<F>) -> Result<Self> {
        let coords = self
            .coords
            .iter()
            .map(|a| a.checked_mul(p))
            .collect::<Result<_>>()?;
        Ok(GcaElement { coords })
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        GcaElement {
            coords: self.coords.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// `{"coords": [18 polynomial strings]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "coords": self.coords.iter().map(|p| p.to_string()).collect::<Vec<_>>()
        })
    }

    pub fn from_json(field: &F, v: &serde_json::Value) -> Result<Self> {
        let bad = || Error::InvalidScalar(v.to_string());
        let arr = v.get("coords").and_then(|c| c.as_array()).ok_or_else(bad)?;
        let coords = arr
            .iter()
            .map(|p| Poly::parse(field, &s_vars(), p.as_str().ok_or_else(bad)?))
            .collect::<Result<Vec<_>>>()?;
        Self::from_coords(coords)
    }
}

impl<F: Field> fmt::Display for GcaElement<F> {
    /// `(p₀)*e0 + (p₃)*e3 + …` over the nonzero coordinates, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(i, p)| format!("({p})*e{i}"))
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl<F: Field> Add for &GcaElement<F> {
    type Output = GcaElement<F>;
    fn add(self, rhs: Self) -> GcaElement<F> {
        self.checked_add(rhs).expect("operands must share a field")
    }
}

impl<F: Field> Sub for &GcaElement<F> {
    type Output = GcaElement<F>;
    fn sub(self, rhs: Self) -> GcaElement<F> {
        self.checked_sub(rhs).expect("operands must share a field")
    }
}

impl<F: Field> Neg for &GcaElement<F> {
    type Output = GcaElement<F>;
    fn neg(self) -> GcaElement<F> {
        GcaElement {
            coords: self.coords.iter().map(|p| -p).collect(),
        }
    }
}

/// Sparse columns of a structure matrix: `cols[j]` lists (i, Mᵢⱼ) with Mᵢⱼ ≠ 0.
type Columns<F> = Vec<Vec<(usize, Poly<F>)>>;

/// The algebra A over a chosen field, with its structure matrices.
#[derive(Clone, Debug)]
pub struct Gca<F: Field> {
    field: F,
    cols_x: Columns<F>,
    cols_y: Columns<F>,
}

impl<F: Field> Gca<F> {
    /// Map the rational structure matrices into `field`.
    pub fn new(field: &F) -> Result<Self> {
        let d = quotient::structure_constants();
        let convert = |m: &Vec<Vec<Poly<crate::scalars::Rationals>>>| -> Result<Columns<F>> {
            (0..RANK)
                .map(|j| {
                    (0..RANK)
                        .filter(|&i| !m[i][j].is_zero())
                        .map(|i| Ok((i, m[i][j].map_coeffs(field, |c| field.from_rational(c))?)))
                        .collect()
                })
                .collect()
        };
        Ok(Gca {
            field: field.clone(),
            cols_x: convert(&d.mx)?,
            cols_y: convert(&d.my)?,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    fn columns(&self, l: Letter) -> &Columns<F> {
        match l {
            Letter::X => &self.cols_x,
            Letter::Y => &self.cols_y,
        }
    }

    /// Column j of Mx or My: the normal form of bⱼ·letter.
    pub fn column(&self, l: Letter, j: usize) -> GcaElement<F> {
        let mut out = GcaElement::zero(&self.field);
        for (i, p) in &self.columns(l)[j] {
            out.coords[*i] = p.clone();
        }
        out
    }

    /// The full 18×18 matrix, `m[i][j]` = coefficient of bᵢ in bⱼ·letter.
    pub fn structure_matrix(&self, l: Letter) -> Vec<Vec<Poly<F>>> {
        let mut m = vec![vec![Poly::zero(&self.field, &s_vars()); RANK]; RANK];
        for (j, col) in self.columns(l).iter().enumerate() {
            for (i, p) in col {
                m[*i][j] = p.clone();
            }
        }
        m
    }

    fn check(&self, u: &GcaElement<F>) -> Result<()> {
        self.field.ensure_same(u.field())
    }

    /// u·letter.
    pub fn mul_letter(&self, u: &GcaElement<F>, l: Letter) -> GcaElement<F> {
        let mut out = GcaElement::zero(&self.field);
        for (j, uj) in u.coords.iter().enumerate() {
            if uj.is_zero() {
                continue;
            }
            for (i, m) in &self.columns(l)[j] {
                out.coords[*i] = &out.coords[*i] + &(m * uj);
            }
        }
        out
    }

    /// u·w for a word w.
    pub fn mul_word(&self, u: &GcaElement<F>, w: &Word) -> GcaElement<F> {
        w.letters()
            .iter()
            .fold(u.clone(), |acc, &l| self.mul_letter(&acc, l))
    }

    /// The normal form of a free-algebra element.
    pub fn reduce(&self, e: &FreeElement<F>) -> Result<GcaElement<F>> {
        self.field.ensure_same(e.field())?;
        let one = GcaElement::one(&self.field);
        let mut out = GcaElement::zero(&self.field);
        for (w, c) in e.terms() {
            out = &out + &self.mul_word(&one, w).scale(c);
        }
        Ok(out)
    }

    /// Parse an expression in x, y, w and reduce it.
    pub fn reduce_text(&self, text: &str) -> Result<GcaElement<F>> {
        self.reduce(&FreeElement::parse(&self.field, text)?)
    }

    pub fn mul(&self, u: &GcaElement<F>, v: &GcaElement<F>) -> Result<GcaElement<F>> {
        self.check(u)?;
        self.check(v)?;
        let mut out = GcaElement::zero(&self.field);
        for (j, vj) in v.coords.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            let ub = self.mul_word(u, &basis_word(j));
            out = &out + &ub.scale_poly(vj)?;
        }
        Ok(out)
    }

    pub fn pow(&self, u: &GcaElement<F>, e: u32) -> Result<GcaElement<F>> {
        let mut acc = GcaElement::one(&self.field);
        for _ in 0..e {
            acc = self.mul(&acc, u)?;
        }
        Ok(acc)
    }

    /// letter·u.
    pub fn left_mul_letter(&self, l: Letter, u: &GcaElement<F>) -> GcaElement<F> {
        let idx = match l {
            Letter::X => 1,
            Letter::Y => 2,
        };
        self.mul(&GcaElement::basis(&self.field, idx), u)
            .expect("same field")
    }

    /// Commutator u·v − v·u.
    pub fn commutator(&self, u: &GcaElement<F>, v: &GcaElement<F>) -> Result<GcaElement<F>> {
        Ok(&self.mul(u, v)? - &self.mul(v, u)?)
    }

    /// Whether u commutes with both generators (hence with all of A).
    pub fn is_central(&self, u: &GcaElement<F>) -> bool {
        [Letter::X, Letter::Y]
            .into_iter()
            .all(|l| self.mul_letter(u, l) == self.left_mul_letter(l, u))
    }

    /// A free-algebra representative: Σ lift(uᵢ)·bᵢ.
    pub fn lift(&self, u: &GcaElement<F>) -> FreeElement<F> {
        let mut out = FreeElement::zero(&self.field);
        for (i, p) in u.coords.iter().enumerate() {
            if !p.is_zero() {
                let b = FreeElement::term(&self.field, basis_word(i), self.field.one());
                out = &out + &(&quotient::lift_poly(p) * &b);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{CyclotomicOmega, PrimeField};

    #[test]
    fn defining_relations_vanish() {
        let a = Gca::new(&CyclotomicOmega).unwrap();
        for r in quotient::relations(a.field()) {
            assert!(a.reduce(&r).unwrap().is_zero());
        }
    }

    #[test]
    fn small_columns() {
        let k = PrimeField::with_omega(7, 2).unwrap();
        let a = Gca::new(&k).unwrap();
        assert_eq!(a.column(Letter::X, 0), GcaElement::basis(&k, 1));
        let x3 = Poly::var(&k, &s_vars(), "X3").unwrap();
        assert_eq!(a.column(Letter::X, 3), GcaElement::from_poly(x3));
        let xy = a.mul(&a.reduce_text("x").unwrap(), &a.reduce_text("y").unwrap()).unwrap();
        assert_eq!(xy, GcaElement::basis(&k, 4));
    }

    #[test]
    fn json_round_trip() {
        let k = CyclotomicOmega;
        let a = Gca::new(&k).unwrap();
        let u = a.reduce_text("x*y*x*x*y - w*y*y*x").unwrap();
        assert_eq!(GcaElement::from_json(&k, &u.to_json()).unwrap(), u);
    }
}

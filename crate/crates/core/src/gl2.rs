//! Invertible 2×2 matrices.

use std::fmt;

use rand::RngCore;

use crate::error::{Error, Result};
use crate::scalars::Field;

/// 𝔤 = (a b; c d), row-major, with ad − bc ≠ 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gl2<F: Field> {
    field: F,
    pub a: F::Elem,
    pub b: F::Elem,
    pub c: F::Elem,
    pub d: F::Elem,
}

impl<F: Field> Gl2<F> {
    pub fn new(field: &F, a: F::Elem, b: F::Elem, c: F::Elem, d: F::Elem) -> Result<Self> {
        let g = Gl2 {
            field: field.clone(),
            a,
            b,
            c,
            d,
        };
        if field.is_zero(&g.det()) {
            return Err(Error::SingularMatrix);
        }
        Ok(g)
    }

    pub fn from_ints(field: &F, e: [i64; 4]) -> Result<Self> {
        let [a, b, c, d] = e.map(|x| field.from_i64(x));
        Self::new(field, a, b, c, d)
    }

    pub fn identity(field: &F) -> Self {
        Self::from_ints(field, [1, 0, 0, 1]).expect("identity is invertible")
    }

    /// The swap u ↔ v.
    pub fn swap(field: &F) -> Self {
        Self::from_ints(field, [0, 1, 1, 0]).expect("swap is invertible")
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn entries(&self) -> [&F::Elem; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> F::Elem {
        let k = &self.field;
        k.sub(&k.mul(&self.a, &self.d), &k.mul(&self.b, &self.c))
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.field.ensure_same(&other.field)?;
        let k = &self.field;
        let dot = |p: &F::Elem, q: &F::Elem, r: &F::Elem, s: &F::Elem| {
            k.add(&k.mul(p, q), &k.mul(r, s))
        };
        Ok(Gl2 {
            field: k.clone(),
            a: dot(&self.a, &other.a, &self.b, &other.c),
            b: dot(&self.a, &other.b, &self.b, &other.d),
            c: dot(&self.c, &other.a, &self.d, &other.c),
            d: dot(&self.c, &other.b, &self.d, &other.d),
        })
    }

    pub fn inv(&self) -> Self {
        let k = &self.field;
        let di = k.inv(&self.det()).expect("invertible by construction");
        Gl2 {
            field: k.clone(),
            a: k.mul(&self.d, &di),
            b: k.neg(&k.mul(&self.b, &di)),
            c: k.neg(&k.mul(&self.c, &di)),
            d: k.mul(&self.a, &di),
        }
    }

    pub fn scalar(field: &F, lambda: F::Elem) -> Result<Self> {
        Self::new(field, lambda.clone(), field.zero(), field.zero(), lambda)
    }

    pub fn random(field: &F, rng: &mut dyn RngCore) -> Self {
        loop {
            let [a, b, c, d] = [(); 4].map(|_| field.random(rng));
            if let Ok(g) = Self::new(field, a, b, c, d) {
                return g;
            }
        }
    }

    /// Every element of GL₂ over a finite field, in lexicographic entry order.
    pub fn all(field: &F) -> Option<Vec<Self>> {
        let elems = field.elements()?;
        let mut out = Vec::new();
        for a in &elems {
            for b in &elems {
                for c in &elems {
                    for d in &elems {
                        if let Ok(g) = Self::new(field, a.clone(), b.clone(), c.clone(), d.clone())
                        {
                            out.push(g);
                        }
                    }
                }
            }
        }
        Some(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.entries().iter().map(|e| self.field.to_json(e)).collect())
    }
}

impl<F: Field> fmt::Display for Gl2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = &self.field;
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            k.format(&self.a),
            k.format(&self.b),
            k.format(&self.c),
            k.format(&self.d)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::PrimeField;

    #[test]
    fn group_order_f7() {
        let k = PrimeField::new(7).unwrap();
        assert_eq!(Gl2::all(&k).unwrap().len(), 2016);
    }

    #[test]
    fn inverse_and_singular() {
        let k = PrimeField::new(13).unwrap();
        let g = Gl2::from_ints(&k, [2, 5, 1, 7]).unwrap();
        assert_eq!(g.mul(&g.inv()).unwrap(), Gl2::identity(&k));
        assert_eq!(Gl2::from_ints(&k, [1, 2, 2, 4]), Err(Error::SingularMatrix));
    }
}

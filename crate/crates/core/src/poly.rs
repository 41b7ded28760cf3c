//! Sparse commutative polynomials over a [`Field`].
//!
//! The coefficient ring S = k\[X3, AL, BE, Y3, GA\] of the generic Clifford
//! algebra and its extension Z = S\[S\] are instances with the fixed variable
//! lists [`S_VARS`] and [`Z_VARS`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::expr::{self, ExprRing};
use crate::scalars::Field;

/// x³, α, β, y³, γ.
pub const S_VARS: [&str; 5] = ["X3", "AL", "BE", "Y3", "GA"];
/// S together with the central element s.
pub const Z_VARS: [&str; 6] = ["X3", "AL", "BE", "Y3", "GA", "S"];

pub type Vars = Arc<[String]>;

pub fn vars(names: &[&str]) -> Vars {
    names.iter().map(|s| s.to_string()).collect()
}

/// Shared variable list of S.
pub fn s_vars() -> Vars {
    static V: OnceLock<Vars> = OnceLock::new();
    V.get_or_init(|| vars(&S_VARS)).clone()
}

/// Shared variable list of Z = S\[S\].
pub fn z_vars() -> Vars {
    static V: OnceLock<Vars> = OnceLock::new();
    V.get_or_init(|| vars(&Z_VARS)).clone()
}

/// The single variable `GA`, for the specialized algebras over k\[γ\].
pub fn ga_vars() -> Vars {
    static V: OnceLock<Vars> = OnceLock::new();
    V.get_or_init(|| vars(&["GA"])).clone()
}

pub type Monomial = Vec<u16>;

/// Graded order: total degree, then the exponent of the last variable, then
/// the one before it, and so on.
fn grlex(a: &Monomial, b: &Monomial) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<F: Field> {
    field: F,
    vars: Vars,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> Poly<F> {
    pub fn zero(field: &F, vars: &Vars) -> Self {
        Poly {
            field: field.clone(),
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &F, vars: &Vars, c: F::Elem) -> Self {
        let mut p = Self::zero(field, vars);
        if !field.is_zero(&c) {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(field: &F, vars: &Vars) -> Self {
        Self::constant(field, vars, field.one())
    }

    pub fn var(field: &F, vars: &Vars, name: &str) -> Result<Self> {
        let i = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::MissingAssignment(name.to_string()))?;
        let mut exps = vec![0; vars.len()];
        exps[i] = 1;
        Ok(Self::monomial(field, vars, exps, field.one()))
    }

    pub fn monomial(field: &F, vars: &Vars, exps: Monomial, c: F::Elem) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(field, vars);
        if !field.is_zero(&c) {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, F::Elem> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> F::Elem {
        self.terms
            .get(&vec![0; self.vars.len()])
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// The coefficient if the polynomial is constant.
    pub fn as_constant(&self) -> Option<F::Elem> {
        match self.terms.len() {
            0 => Some(self.field.zero()),
            1 => self.terms.iter().next().and_then(|(m, c)| {
                m.iter().all(|&e| e == 0).then(|| c.clone())
            }),
            _ => None,
        }
    }

    pub fn coeff(&self, exps: &[u16]) -> F::Elem {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| m.iter().map(|&e| e as u32).sum())
            .max()
    }

    fn check(&self, other: &Self) -> Result<()> {
        self.field.ensure_same(&other.field)?;
        if self.vars != other.vars {
            return Err(Error::VariableMismatch(
                self.vars.to_vec(),
                other.vars.to_vec(),
            ));
        }
        Ok(())
    }

    fn add_term(&mut self, m: Monomial, c: F::Elem) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !self.field.is_zero(&c) {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = self.field.add(o.get(), &c);
                if self.field.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.field, &self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(m, self.field.mul(c1, c2));
            }
        }
        Ok(out)
    }

    fn neg_ref(&self) -> Self {
        Poly {
            field: self.field.clone(),
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.field.neg(c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(&self.field, &self.vars);
        }
        Poly {
            field: self.field.clone(),
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), self.field.mul(a, c)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.field, &self.vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn lookup<'a>(
        &self,
        point: &'a BTreeMap<String, F::Elem>,
        name: &str,
    ) -> Result<&'a F::Elem> {
        point
            .get(name)
            .ok_or_else(|| Error::MissingAssignment(name.to_string()))
    }

    /// Evaluate at a point assigning every variable.
    pub fn eval(&self, point: &BTreeMap<String, F::Elem>) -> Result<F::Elem> {
        let values: Vec<&F::Elem> = self
            .vars
            .iter()
            .map(|v| self.lookup(point, v))
            .collect::<Result<_>>()?;
        let k = &self.field;
        let mut acc = k.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in values.iter().zip(m) {
                if e > 0 {
                    t = k.mul(&t, &k.pow(x, e as u64));
                }
            }
            acc = k.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Substitute the assigned variables and re-express the result over
    /// `target`, which must contain every unassigned variable.
    pub fn specialize(&self, point: &BTreeMap<String, F::Elem>, target: &Vars) -> Result<Self> {
        let k = &self.field;
        let mut slots = Vec::with_capacity(self.vars.len());
        for v in self.vars.iter() {
            match point.get(v) {
                Some(x) => slots.push(Err(x)),
                None => {
                    let j = target.iter().position(|t| t == v).ok_or_else(|| {
                        Error::VariableMismatch(self.vars.to_vec(), target.to_vec())
                    })?;
                    slots.push(Ok(j));
                }
            }
        }
        let mut out = Self::zero(k, target);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            let mut exps = vec![0u16; target.len()];
            for (slot, &e) in slots.iter().zip(m) {
                match slot {
                    Ok(j) => exps[*j] += e,
                    Err(x) => {
                        if e > 0 {
                            t = k.mul(&t, &k.pow(x, e as u64));
                        }
                    }
                }
            }
            out.add_term(exps, t);
        }
        Ok(out)
    }

    /// Image under a coefficient map into another field.
    pub fn map_coeffs<G: Field>(
        &self,
        target: &G,
        f: impl Fn(&F::Elem) -> Result<G::Elem>,
    ) -> Result<Poly<G>> {
        let mut out = Poly::zero(target, &self.vars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Terms in descending canonical order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &F::Elem)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex(b.0, a.0));
        v
    }

    fn monomial_text(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (v, &e) in self.vars.iter().zip(m) {
            match e {
                0 => {}
                1 => parts.push(v.clone()),
                _ => parts.push(format!("{v}^{e}")),
            }
        }
        parts.join("*")
    }

    /// Parse canonical (or any grammar-conforming) text over `vars`.
    pub fn parse(field: &F, vars: &Vars, text: &str) -> Result<Self> {
        let ctx = PolyParser { field, vars };
        expr::parse(text)?.eval(&ctx)
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = expr::render_sum(
            &self.field,
            self.sorted_terms()
                .into_iter()
                .map(|(m, c)| (c, self.monomial_text(m))),
        );
        f.write_str(&rendered)
    }
}

struct PolyParser<'a, F: Field> {
    field: &'a F,
    vars: &'a Vars,
}

impl<F: Field> ExprRing for PolyParser<'_, F> {
    type Value = Poly<F>;

    fn constant(&self, r: &BigRational) -> Result<Poly<F>> {
        Ok(Poly::constant(self.field, self.vars, self.field.from_rational(r)?))
    }
    fn omega(&self) -> Result<Poly<F>> {
        Ok(Poly::constant(self.field, self.vars, self.field.omega()?))
    }
    fn symbol(&self, name: &str, position: usize) -> Result<Poly<F>> {
        Poly::var(self.field, self.vars, name).map_err(|_| Error::UnknownSymbol {
            position,
            symbol: name.to_string(),
        })
    }
    fn add(&self, a: &Poly<F>, b: &Poly<F>) -> Result<Poly<F>> {
        a.checked_add(b)
    }
    fn sub(&self, a: &Poly<F>, b: &Poly<F>) -> Result<Poly<F>> {
        a.checked_sub(b)
    }
    fn mul(&self, a: &Poly<F>, b: &Poly<F>) -> Result<Poly<F>> {
        a.checked_mul(b)
    }
    fn neg(&self, a: &Poly<F>) -> Result<Poly<F>> {
        Ok(-a)
    }
}

// Operator forms panic on mismatched fields or variable lists; the checked
// methods report them as errors.

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: Self) -> Poly<F> {
        self.checked_add(rhs).expect("polynomial operands must agree")
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: Self) -> Poly<F> {
        self.checked_sub(rhs).expect("polynomial operands must agree")
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: Self) -> Poly<F> {
        self.checked_mul(rhs).expect("polynomial operands must agree")
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        self.neg_ref()
    }
}

/// Δ = 18·X3·AL·BE·Y3 − 4·AL³·Y3 + AL²·BE² − 4·X3·BE³ − 27·X3²·Y3² over S.
pub fn discriminant_poly<F: Field>(field: &F) -> Poly<F> {
    let v = s_vars();
    let mut p = Poly::zero(field, &v);
    for (exps, c) in [
        ([1, 1, 1, 1, 0], 18),
        ([0, 3, 0, 1, 0], -4),
        ([0, 2, 2, 0, 0], 1),
        ([1, 0, 3, 0, 0], -4),
        ([2, 0, 0, 2, 0], -27),
    ] {
        p.add_term(exps.to_vec(), field.from_i64(c));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{CyclotomicOmega, PrimeField, Rationals};

    fn point<F: Field>(k: &F, vals: &[(&str, i64)]) -> BTreeMap<String, F::Elem> {
        vals.iter()
            .map(|(n, v)| (n.to_string(), k.from_i64(*v)))
            .collect()
    }

    #[test]
    fn difference_of_squares() {
        let k = Rationals;
        let v = s_vars();
        let x3 = Poly::var(&k, &v, "X3").unwrap();
        let ga = Poly::var(&k, &v, "GA").unwrap();
        let lhs = &(&x3 + &ga) * &(&x3 - &ga);
        assert_eq!(lhs, Poly::parse(&k, &v, "X3^2 - GA^2").unwrap());
        assert_eq!(lhs.to_string(), "-GA^2 + X3^2");
    }

    #[test]
    fn discriminant_text_round_trip() {
        let k = Rationals;
        let d = discriminant_poly(&k);
        let text = d.to_string();
        assert_eq!(
            text,
            "-27*X3^2*Y3^2 + 18*X3*AL*BE*Y3 - 4*AL^3*Y3 - 4*X3*BE^3 + AL^2*BE^2"
        );
        assert_eq!(Poly::parse(&k, &s_vars(), &text).unwrap(), d);
        let displayed = "18*X3*AL*BE*Y3 - 4*AL^3*Y3 + AL^2*BE^2 - 4*X3*BE^3 - 27*X3^2*Y3^2";
        assert_eq!(Poly::parse(&k, &s_vars(), displayed).unwrap(), d);
    }

    #[test]
    fn evaluation_examples() {
        let k = Rationals;
        let d = discriminant_poly(&k);
        let at = point(&k, &[("X3", 1), ("AL", 0), ("BE", 0), ("Y3", 1), ("GA", 0)]);
        assert_eq!(d.eval(&at).unwrap(), k.from_i64(-27));

        let f7 = PrimeField::with_omega(7, 2).unwrap();
        let ga3 = Poly::parse(&f7, &s_vars(), "GA^3").unwrap();
        let at = point(&f7, &[("X3", 0), ("AL", 0), ("BE", 0), ("Y3", 0), ("GA", 2)]);
        assert_eq!(ga3.eval(&at).unwrap(), 1);

        let partial = point(&k, &[("X3", 1)]);
        assert_eq!(
            d.eval(&partial),
            Err(Error::MissingAssignment("AL".into()))
        );
    }

    #[test]
    fn specialize_keeps_free_variables() {
        let k = CyclotomicOmega;
        let p = Poly::parse(&k, &s_vars(), "w*GA^2*X3 + AL - 2").unwrap();
        let at = point(&k, &[("X3", 3), ("AL", 1), ("BE", 0), ("Y3", 0)]);
        let q = p.specialize(&at, &ga_vars()).unwrap();
        assert_eq!(q, Poly::parse(&k, &ga_vars(), "3*w*GA^2 - 1").unwrap());
    }

    #[test]
    fn mismatches_are_reported() {
        let k = Rationals;
        let a = Poly::one(&k, &s_vars());
        let b = Poly::one(&k, &z_vars());
        assert_eq!(a.checked_add(&b).unwrap_err().code(), "VariableMismatch");
        assert!(matches!(
            Poly::parse(&k, &s_vars(), "X3 + Q"),
            Err(Error::UnknownSymbol { position: 5, .. })
        ));
        assert_eq!(
            Poly::parse(&k, &s_vars(), "w*X3").unwrap_err().code(),
            "UnsupportedField"
        );
    }
}

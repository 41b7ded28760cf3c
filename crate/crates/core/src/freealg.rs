//! The free associative algebra k⟨x, y⟩.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::expr::{self, ExprRing};
use crate::gl2::Gl2;
use crate::scalars::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

/// A word over {x, y}; ordered by length, then lexicographically with x < y.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Letter string such as `xxy`; the empty word is `""`.
    pub fn as_letters(&self) -> String {
        self.0.iter().map(|l| l.as_char()).collect()
    }

    /// Product form such as `x^2*y`; the empty word is `""`.
    pub fn product_text(&self) -> String {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == l {
                j += 1;
            }
            let run = j - i;
            if run == 1 {
                parts.push(l.as_char().to_string());
            } else {
                parts.push(format!("{}^{}", l.as_char(), run));
            }
            i = j;
        }
        parts.join("*")
    }

    /// Bit pattern with x = 0, y = 1, first letter most significant.
    pub fn index(&self) -> usize {
        self.0
            .iter()
            .fold(0, |acc, l| (acc << 1) | (*l == Letter::Y) as usize)
    }

    pub fn from_index(len: usize, idx: usize) -> Word {
        Word(
            (0..len)
                .map(|i| {
                    if (idx >> (len - 1 - i)) & 1 == 1 {
                        Letter::Y
                    } else {
                        Letter::X
                    }
                })
                .collect(),
        )
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        s.char_indices()
            .map(|(i, c)| match c {
                'x' => Ok(Letter::X),
                'y' => Ok(Letter::Y),
                _ => Err(Error::UnknownSymbol {
                    position: i,
                    symbol: c.to_string(),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.as_letters())
    }
}

/// A finite k-linear combination of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeElement<F: Field> {
    field: F,
    terms: BTreeMap<Word, F::Elem>,
}

impl<F: Field> FreeElement<F> {
    pub fn zero(field: &F) -> Self {
        FreeElement {
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(field: &F, c: F::Elem) -> Self {
        Self::term(field, Word::empty(), c)
    }

    pub fn one(field: &F) -> Self {
        Self::scalar(field, field.one())
    }

    pub fn term(field: &F, w: Word, c: F::Elem) -> Self {
        let mut e = Self::zero(field);
        e.add_term(w, c);
        e
    }

    pub fn word(field: &F, w: &str) -> Result<Self> {
        Ok(Self::term(field, w.parse()?, field.one()))
    }

    pub fn x(field: &F) -> Self {
        Self::term(field, Word(vec![Letter::X]), field.one())
    }

    pub fn y(field: &F) -> Self {
        Self::term(field, Word(vec![Letter::Y]), field.one())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn terms(&self) -> &BTreeMap<Word, F::Elem> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> F::Elem {
        self.terms.get(w).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, w: Word, c: F::Elem) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
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
        self.field.ensure_same(&other.field)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scale(&self.field.neg(&self.field.one())))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.field.ensure_same(&other.field)?;
        let k = &self.field;
        let mut out = Self::zero(k);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), k.mul(c1, c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let mut out = Self::zero(&self.field);
        for (w, a) in &self.terms {
            out.add_term(w.clone(), self.field.mul(a, c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.field);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Replace x by a·x + c·y and y by b·x + d·y, for 𝔤 = (a b; c d).
    ///
    /// With this convention substituting by 𝔥 and then by 𝔤 equals
    /// substituting by 𝔤𝔥.
    pub fn linear_substitute(&self, g: &Gl2<F>) -> Result<Self> {
        self.field.ensure_same(g.field())?;
        let k = &self.field;
        let x = Self::x(k);
        let y = Self::y(k);
        let gx = &x.scale(&g.a) + &y.scale(&g.c);
        let gy = &x.scale(&g.b) + &y.scale(&g.d);
        let mut out = Self::zero(k);
        for (w, c) in &self.terms {
            let mut img = Self::scalar(k, c.clone());
            for l in w.letters() {
                img = &img
                    * match l {
                        Letter::X => &gx,
                        Letter::Y => &gy,
                    };
            }
            out = &out + &img;
        }
        Ok(out)
    }

    /// Components of fixed word length, keyed by length.
    pub fn homogeneous_parts(&self) -> BTreeMap<usize, Self> {
        let mut out: BTreeMap<usize, Self> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.len())
                .or_insert_with(|| Self::zero(&self.field))
                .add_term(w.clone(), c.clone());
        }
        out
    }

    /// Image under a coefficient map into another field.
    pub fn map_coeffs<G: Field>(
        &self,
        target: &G,
        f: impl Fn(&F::Elem) -> Result<G::Elem>,
    ) -> Result<FreeElement<G>> {
        let mut out = FreeElement::zero(target);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn parse(field: &F, text: &str) -> Result<Self> {
        expr::parse(text)?.eval(&FreeParser { field })
    }

    /// `[{"word": "xy", "coeff": …}, …]` in canonical word order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(w, c)| {
                    serde_json::json!({ "word": w.as_letters(), "coeff": self.field.to_json(c) })
                })
                .collect(),
        )
    }

    pub fn from_json(field: &F, v: &serde_json::Value) -> Result<Self> {
        let bad = || Error::InvalidScalar(v.to_string());
        let mut out = Self::zero(field);
        for item in v.as_array().ok_or_else(bad)? {
            let w: Word = item
                .get("word")
                .and_then(|w| w.as_str())
                .ok_or_else(bad)?
                .parse()?;
            let c = field.from_json(item.get("coeff").ok_or_else(bad)?)?;
            out.add_term(w, c);
        }
        Ok(out)
    }
}

impl<F: Field> fmt::Display for FreeElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = expr::render_sum(
            &self.field,
            self.terms.iter().map(|(w, c)| (c, w.product_text())),
        );
        f.write_str(&rendered)
    }
}

struct FreeParser<'a, F: Field> {
    field: &'a F,
}

impl<F: Field> ExprRing for FreeParser<'_, F> {
    type Value = FreeElement<F>;

    fn constant(&self, r: &BigRational) -> Result<FreeElement<F>> {
        Ok(FreeElement::scalar(self.field, self.field.from_rational(r)?))
    }
    fn omega(&self) -> Result<FreeElement<F>> {
        Ok(FreeElement::scalar(self.field, self.field.omega()?))
    }
    fn symbol(&self, name: &str, position: usize) -> Result<FreeElement<F>> {
        match name {
            "x" => Ok(FreeElement::x(self.field)),
            "y" => Ok(FreeElement::y(self.field)),
            _ => Err(Error::UnknownSymbol {
                position,
                symbol: name.to_string(),
            }),
        }
    }
    fn add(&self, a: &FreeElement<F>, b: &FreeElement<F>) -> Result<FreeElement<F>> {
        a.checked_add(b)
    }
    fn sub(&self, a: &FreeElement<F>, b: &FreeElement<F>) -> Result<FreeElement<F>> {
        a.checked_sub(b)
    }
    fn mul(&self, a: &FreeElement<F>, b: &FreeElement<F>) -> Result<FreeElement<F>> {
        a.checked_mul(b)
    }
    fn neg(&self, a: &FreeElement<F>) -> Result<FreeElement<F>> {
        Ok(-a)
    }
}

// Operator forms panic on mismatched fields; the checked methods report them.

impl<F: Field> Add for &FreeElement<F> {
    type Output = FreeElement<F>;
    fn add(self, rhs: Self) -> FreeElement<F> {
        self.checked_add(rhs).expect("operands must share a field")
    }
}

impl<F: Field> Sub for &FreeElement<F> {
    type Output = FreeElement<F>;
    fn sub(self, rhs: Self) -> FreeElement<F> {
        self.checked_sub(rhs).expect("operands must share a field")
    }
}

impl<F: Field> Mul for &FreeElement<F> {
    type Output = FreeElement<F>;
    fn mul(self, rhs: Self) -> FreeElement<F> {
        self.checked_mul(rhs).expect("operands must share a field")
    }
}

impl<F: Field> Neg for &FreeElement<F> {
    type Output = FreeElement<F>;
    fn neg(self) -> FreeElement<F> {
        self.scale(&self.field.neg(&self.field.one()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{CyclotomicOmega, PrimeField, Rationals};

    #[test]
    fn parse_and_print() {
        let k = CyclotomicOmega;
        let e = FreeElement::parse(&k, "x*y - w*y*x").unwrap();
        assert_eq!(e.to_string(), "x*y - w*y*x");
        assert_eq!(e.coeff(&"yx".parse().unwrap()), k.neg(&k.omega().unwrap()));

        let cube = FreeElement::parse(&k, "(x+y)^3").unwrap();
        assert_eq!(cube.terms().len(), 8);
        assert!(cube.terms().values().all(|c| k.is_one(c)));
        assert_eq!(FreeElement::parse(&k, &cube.to_string()).unwrap(), cube);
    }

    #[test]
    fn relation_parses_to_difference() {
        let k = Rationals;
        let r = FreeElement::parse(&k, "x^3*y - y*x^3").unwrap();
        let expected = &FreeElement::word(&k, "xxxy").unwrap() - &FreeElement::word(&k, "yxxx").unwrap();
        assert_eq!(r, expected);
        assert_eq!(r.to_string(), "x^3*y - y*x^3");
    }

    #[test]
    fn unknown_symbols() {
        let k = Rationals;
        assert_eq!(
            FreeElement::parse(&k, "x*z"),
            Err(Error::UnknownSymbol {
                position: 2,
                symbol: "z".into()
            })
        );
    }

    #[test]
    fn substitution_examples() {
        let k = Rationals;
        let x = FreeElement::x(&k);
        let swap = Gl2::swap(&k);
        assert_eq!(x.linear_substitute(&swap).unwrap(), FreeElement::y(&k));
        let u = Gl2::from_ints(&k, [1, 1, 0, 1]).unwrap();
        let x3 = x.pow(3);
        assert_eq!(x3.linear_substitute(&u).unwrap(), x3);
    }

    #[test]
    fn substitution_composes_as_product() {
        let k = PrimeField::new(13).unwrap();
        let g = Gl2::from_ints(&k, [2, 5, 1, 7]).unwrap();
        let h = Gl2::from_ints(&k, [3, 1, 4, 1]).unwrap();
        let e = FreeElement::parse(&k, "x*y*y + 3*y*x - 2").unwrap();
        let lhs = e.linear_substitute(&h).unwrap().linear_substitute(&g).unwrap();
        let rhs = e.linear_substitute(&g.mul(&h).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_round_trip() {
        let k = CyclotomicOmega;
        let e = FreeElement::parse(&k, "1/2 + w*x*y - y^2").unwrap();
        let j = e.to_json();
        assert_eq!(j[0]["word"], "");
        assert_eq!(FreeElement::from_json(&k, &j).unwrap(), e);
    }

    #[test]
    fn word_index_round_trip() {
        let w: Word = "xyyx".parse().unwrap();
        assert_eq!(w.index(), 0b0110);
        assert_eq!(Word::from_index(4, 0b0110), w);
    }
}

//! Exact coefficient fields.
//!
//! Every algebraic structure in the crate is generic over [`Field`], a
//! field *context* that owns the arithmetic. Contexts are needed because
//! the prime field's modulus and its chosen cube root of unity are runtime
//! values. Three base fields are provided:
//!
//! * [`Rationals`]: ℚ with `BigRational` elements,
//! * [`CyclotomicOmega`]: ℚ(ω) = ℚ\[t\]/(t² + t + 1),
//! * [`PrimeField`]: 𝔽_p with p ≡ 1 (mod 3) and a fixed primitive cube root ω,
//!
//! plus [`CubicExtension`] (𝔽_{p³}) for the few places that need to leave
//! the base field.

mod cyclotomic;
mod dynamic;
mod extension;
mod prime;
mod rational;

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::RngCore;

use crate::error::{Error, Result};

pub use cyclotomic::{CyclotomicOmega, QwElem};
pub use dynamic::{FieldSpec, Scalar, ScalarValue};
pub use extension::CubicExtension;
pub use prime::PrimeField;
pub use rational::Rationals;

/// Arithmetic context of an exact field.
///
/// Elements are plain values; all operations go through the context so that
/// runtime parameters (modulus, ω) never have to be stored per element.
pub trait Field: Clone + Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    /// Short human-readable name, e.g. `Q`, `Qw`, `F7(w=2)`.
    fn name(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// Image of a rational number; fails when the denominator vanishes.
    fn from_rational(&self, r: &BigRational) -> Result<Self::Elem>;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// The chosen primitive cube root of unity.
    fn omega(&self) -> Result<Self::Elem>;

    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;

    /// All elements, for finite fields.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    /// Deterministic square root, if one exists in the field.
    fn sqrt(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Deterministic cube root, if one exists in the field.
    fn cbrt(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Whether `a` (nonzero) is an n-th power of a field element.
    fn is_nth_power(&self, a: &Self::Elem, n: u32) -> Result<bool>;

    /// Canonical token naming the class of `a` in k× / (k×)ⁿ.
    fn power_class_token(&self, a: &Self::Elem, n: u32) -> Result<String>;

    /// Canonical text, parseable back by the expression grammar.
    fn format(&self, a: &Self::Elem) -> String;
    fn to_json(&self, a: &Self::Elem) -> serde_json::Value;
    fn from_json(&self, v: &serde_json::Value) -> Result<Self::Elem>;

    /// A random element for property runs (small height in characteristic 0).
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem;

    // Provided helpers.

    /// The runtime description, for the three base fields.
    fn spec(&self) -> Option<FieldSpec> {
        None
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn random_nonzero(&self, rng: &mut dyn RngCore) -> Self::Elem {
        loop {
            let a = self.random(rng);
            if !self.is_zero(&a) {
                return a;
            }
        }
    }

    fn ensure_same(&self, other: &Self) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.name(), other.name()))
        }
    }
}

/// Parse a decimal integer or `num/den` string into a rational.
pub(crate) fn parse_ratio_text(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidScalar(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Rational from a JSON integer or `"num/den"` string.
pub(crate) fn ratio_from_json(v: &serde_json::Value) -> Result<BigRational> {
    match v {
        serde_json::Value::Number(n) => {
            let text = n.to_string();
            parse_ratio_text(&text)
        }
        serde_json::Value::String(s) => parse_ratio_text(s),
        other => Err(Error::InvalidScalar(other.to_string())),
    }
}

/// JSON for a rational: an integer when it fits in i64, otherwise a string.
pub(crate) fn ratio_to_json(r: &BigRational) -> serde_json::Value {
    use num_traits::{One, ToPrimitive};
    if r.denom().is_one() {
        if let Some(i) = r.numer().to_i64() {
            return serde_json::Value::from(i);
        }
    }
    serde_json::Value::String(format_ratio(r))
}

pub(crate) fn format_ratio(r: &BigRational) -> String {
    use num_traits::One;
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

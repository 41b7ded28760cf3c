use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, RngCore};

use super::{format_ratio, ratio_from_json, ratio_to_json, Field};
use crate::error::{Error, Result};

/// The rational numbers ℚ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

/// Exact integer n-th root of a signed integer, if there is one.
pub(crate) fn exact_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() && k % 2 == 0 {
        return None;
    }
    let r = n.nth_root(k);
    (num_traits::pow(r.clone(), k as usize) == *n).then_some(r)
}

pub(crate) fn exact_rational_root(a: &BigRational, k: u32) -> Option<BigRational> {
    let n = exact_root(a.numer(), k)?;
    let d = exact_root(a.denom(), k)?;
    Some(BigRational::new(n, d))
}

/// Prime factorization of |n| (n ≠ 0).
pub(crate) fn factor_abs(n: &BigInt) -> BTreeMap<BigUint, usize> {
    let m = n.magnitude().clone();
    if m.is_one() {
        return BTreeMap::new();
    }
    num_prime::nt_funcs::factorize(m)
}

/// ∏ p^(e mod k) over the factorization of |num/den|, as a positive integer.
pub(crate) fn power_free_part(a: &BigRational, k: u32) -> BigInt {
    let k = k as i64;
    let mut exps: BTreeMap<BigUint, i64> = BTreeMap::new();
    for (p, e) in factor_abs(a.numer()) {
        *exps.entry(p).or_default() += e as i64;
    }
    for (p, e) in factor_abs(a.denom()) {
        *exps.entry(p).or_default() -= e as i64;
    }
    let mut out = BigUint::one();
    for (p, e) in exps {
        let r = e.rem_euclid(k);
        out *= num_traits::pow(p, r as usize);
    }
    BigInt::from_biguint(Sign::Plus, out)
}

pub(crate) fn random_ratio(rng: &mut dyn RngCore) -> BigRational {
    let n: i64 = rng.gen_range(-20..=20);
    let d: i64 = rng.gen_range(1..=6);
    BigRational::new(n.into(), d.into())
}

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> Option<crate::scalars::FieldSpec> {
        Some(crate::scalars::FieldSpec::Rationals)
    }
    fn name(&self) -> String {
        "Q".into()
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn from_rational(&self, r: &BigRational) -> Result<BigRational> {
        Ok(r.clone())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn omega(&self) -> Result<BigRational> {
        Err(Error::UnsupportedField(
            "Q carries no primitive cube root of unity".into(),
        ))
    }
    fn characteristic(&self) -> u64 {
        0
    }

    /// The nonnegative root.
    fn sqrt(&self, a: &BigRational) -> Option<BigRational> {
        exact_rational_root(a, 2)
    }

    /// The real root.
    fn cbrt(&self, a: &BigRational) -> Option<BigRational> {
        exact_rational_root(a, 3)
    }

    fn is_nth_power(&self, a: &BigRational, n: u32) -> Result<bool> {
        if a.is_zero() {
            return Err(Error::ZeroInput);
        }
        if n == 0 {
            return Err(Error::PreconditionFailed("n must be positive".into()));
        }
        Ok(exact_rational_root(a, n).is_some())
    }

    fn power_class_token(&self, a: &BigRational, n: u32) -> Result<String> {
        if a.is_zero() {
            return Err(Error::ZeroInput);
        }
        let part = power_free_part(a, n);
        // For odd n the sign is itself an n-th power.
        let neg = a.is_negative() && n % 2 == 0;
        Ok(format!("Q:{}{}", if neg { "-" } else { "" }, part))
    }

    fn format(&self, a: &BigRational) -> String {
        format_ratio(a)
    }
    fn to_json(&self, a: &BigRational) -> serde_json::Value {
        ratio_to_json(a)
    }
    fn from_json(&self, v: &serde_json::Value) -> Result<BigRational> {
        ratio_from_json(v)
    }
    fn random(&self, rng: &mut dyn RngCore) -> BigRational {
        random_ratio(rng)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn sqrt_examples() {
        let k = Rationals;
        assert_eq!(k.sqrt(&q(0, 1)), Some(q(0, 1)));
        assert_eq!(k.sqrt(&q(2, 1)), None);
        assert_eq!(k.sqrt(&q(9, 4)), Some(q(3, 2)));
        assert_eq!(k.sqrt(&q(-4, 1)), None);
    }

    #[test]
    fn sixth_powers() {
        let k = Rationals;
        assert!(k.is_nth_power(&q(64, 1), 6).unwrap());
        assert!(!k.is_nth_power(&q(4, 1), 6).unwrap());
        assert!(!k.is_nth_power(&q(-64, 1), 6).unwrap());
        assert!(k.is_nth_power(&q(-8, 27), 3).unwrap());
        assert_eq!(k.is_nth_power(&q(0, 1), 2), Err(Error::ZeroInput));
    }

    #[test]
    fn class_token_is_invariant_under_nth_powers() {
        let k = Rationals;
        let a = q(-108, 5);
        let b = &a * num_traits::pow(q(14, 9), 6);
        assert_eq!(
            k.power_class_token(&a, 6).unwrap(),
            k.power_class_token(&b, 6).unwrap()
        );
        assert_ne!(
            k.power_class_token(&a, 6).unwrap(),
            k.power_class_token(&(&a * q(2, 1)), 6).unwrap()
        );
    }
}

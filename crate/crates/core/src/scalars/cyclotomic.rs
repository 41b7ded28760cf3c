use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::RngCore;
use serde_json::json;

use super::rational::{exact_rational_root, exact_root, power_free_part, random_ratio};
use super::{format_ratio, ratio_from_json, ratio_to_json, Field};
use crate::error::{Error, Result};

/// ℚ(ω) = ℚ\[t\]/(t² + t + 1), with ω the class of t.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CyclotomicOmega;

/// `a + b·ω` with rational `a`, `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QwElem {
    pub a: BigRational,
    pub b: BigRational,
}

impl QwElem {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QwElem { a, b }
    }

    pub fn rational(a: BigRational) -> Self {
        QwElem {
            a,
            b: BigRational::zero(),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// N(a + bω) = a² − ab + b².
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }
}

fn qw_mul(x: &QwElem, y: &QwElem) -> QwElem {
    // ω² = −1 − ω
    let bd = &x.b * &y.b;
    QwElem {
        a: &x.a * &y.a - &bd,
        b: &x.a * &y.b + &x.b * &y.a - bd,
    }
}

/// Square token of a rational inside ℚ(ω): −3 is a square there.
fn qw_square_token(a: &BigRational) -> BigInt {
    let normalized = if a.is_negative() {
        a * BigRational::from_integer((-3).into())
    } else {
        a.clone()
    };
    power_free_part(&normalized, 2)
}

impl CyclotomicOmega {
    /// Cube root in ℤ\[ω\] of an algebraic integer `A + Bω`, by norm search.
    fn integral_cbrt(&self, big_a: &BigInt, big_b: &BigInt) -> Option<(BigInt, BigInt)> {
        let norm = big_a * big_a - big_a * big_b + big_b * big_b;
        let n = exact_root(&norm, 3)?;
        let four_n: BigInt = &n * 4;
        let third: BigInt = &four_n / 3;
        let bound: BigInt = third.sqrt() + 1;
        let target = QwElem::new(
            BigRational::from_integer(big_a.clone()),
            BigRational::from_integer(big_b.clone()),
        );
        let mut best: Option<(BigInt, BigInt)> = None;
        let mut d = -bound.clone();
        while d <= bound {
            let disc: BigInt = &four_n - BigInt::from(3) * &d * &d;
            if !disc.is_negative() {
                if let Some(s) = exact_root(&disc, 2) {
                    for num in [&d + &s, &d - &s] {
                        if num.is_even() {
                            let c: BigInt = num / 2;
                            let w = QwElem::new(
                                BigRational::from_integer(c.clone()),
                                BigRational::from_integer(d.clone()),
                            );
                            if qw_mul(&qw_mul(&w, &w), &w) == target {
                                let cand = (c, d.clone());
                                if best.as_ref().is_none_or(|b| cand < *b) {
                                    best = Some(cand);
                                }
                            }
                        }
                    }
                }
            }
            d += 1;
        }
        best
    }
}

impl Field for CyclotomicOmega {
    type Elem = QwElem;

    fn spec(&self) -> Option<crate::scalars::FieldSpec> {
        Some(crate::scalars::FieldSpec::CyclotomicOmega)
    }
    fn name(&self) -> String {
        "Qw".into()
    }
    fn zero(&self) -> QwElem {
        QwElem::rational(BigRational::zero())
    }
    fn one(&self) -> QwElem {
        QwElem::rational(BigRational::one())
    }
    fn from_bigint(&self, n: &BigInt) -> QwElem {
        QwElem::rational(BigRational::from_integer(n.clone()))
    }
    fn from_rational(&self, r: &BigRational) -> Result<QwElem> {
        Ok(QwElem::rational(r.clone()))
    }
    fn add(&self, x: &QwElem, y: &QwElem) -> QwElem {
        QwElem::new(&x.a + &y.a, &x.b + &y.b)
    }
    fn sub(&self, x: &QwElem, y: &QwElem) -> QwElem {
        QwElem::new(&x.a - &y.a, &x.b - &y.b)
    }
    fn mul(&self, x: &QwElem, y: &QwElem) -> QwElem {
        qw_mul(x, y)
    }
    fn neg(&self, x: &QwElem) -> QwElem {
        QwElem::new(-&x.a, -&x.b)
    }
    fn inv(&self, x: &QwElem) -> Result<QwElem> {
        let n = x.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // conjugate of a + bω is (a − b) − bω
        Ok(QwElem::new((&x.a - &x.b) / &n, -&x.b / &n))
    }
    fn is_zero(&self, x: &QwElem) -> bool {
        x.a.is_zero() && x.b.is_zero()
    }
    fn omega(&self) -> Result<QwElem> {
        Ok(QwElem::new(BigRational::zero(), BigRational::one()))
    }
    fn characteristic(&self) -> u64 {
        0
    }

    /// Writes z = u + v√−3 and solves (p + q√−3)² = z; the branch with
    /// p > 0, or p = 0 and q ≥ 0, is returned.
    fn sqrt(&self, z: &QwElem) -> Option<QwElem> {
        if self.is_zero(z) {
            return Some(self.zero());
        }
        let half = BigRational::new(1.into(), 2.into());
        let u = &z.a - &z.b * &half;
        let v = &z.b * &half;
        let m = exact_rational_root(&z.norm(), 2)?;
        let p = exact_rational_root(&((&u + &m) * &half), 2)?;
        let q = exact_rational_root(&((&m - &u) / BigRational::from_integer(6.into())), 2)?;
        let two = BigRational::from_integer(2.into());
        let q = if &two * &p * &q == v {
            q
        } else if &two * &p * &q == -&v {
            -q
        } else {
            return None;
        };
        // p + q√−3 = (p + q) + 2qω
        Some(QwElem::new(&p + &q, &two * &q))
    }

    /// Of the three roots, the one with lexicographically least (a, b).
    fn cbrt(&self, z: &QwElem) -> Option<QwElem> {
        if self.is_zero(z) {
            return Some(self.zero());
        }
        let den = z.a.denom().lcm(z.b.denom());
        let scale = BigRational::from_integer(num_traits::pow(den.clone(), 3));
        let za = &z.a * &scale;
        let zb = &z.b * &scale;
        let (c, d) = self.integral_cbrt(za.numer(), zb.numer())?;
        let den = BigRational::from_integer(den);
        Some(QwElem::new(
            BigRational::from_integer(c) / &den,
            BigRational::from_integer(d) / &den,
        ))
    }

    /// Supported for rational arguments and n ∈ {2, 3, 6}.
    fn is_nth_power(&self, z: &QwElem, n: u32) -> Result<bool> {
        if self.is_zero(z) {
            return Err(Error::ZeroInput);
        }
        if !z.is_rational() || !matches!(n, 2 | 3 | 6) {
            return Err(Error::UnsupportedField(format!(
                "Qw power test needs a rational argument and n in {{2,3,6}}, got n = {n}"
            )));
        }
        let a = &z.a;
        let square = || {
            exact_rational_root(a, 2).is_some()
                || exact_rational_root(&(a * BigRational::from_integer((-3).into())), 2).is_some()
        };
        let cube = || exact_rational_root(a, 3).is_some();
        Ok(match n {
            2 => square(),
            3 => cube(),
            _ => square() && cube(),
        })
    }

    fn power_class_token(&self, z: &QwElem, n: u32) -> Result<String> {
        if self.is_zero(z) {
            return Err(Error::ZeroInput);
        }
        if !z.is_rational() || !matches!(n, 2 | 3 | 6) {
            return Err(Error::UnsupportedField(format!(
                "Qw power class needs a rational argument and n in {{2,3,6}}, got n = {n}"
            )));
        }
        let cube = power_free_part(&z.a, 3);
        let square = qw_square_token(&z.a);
        Ok(match n {
            2 => format!("Qw:s{square}"),
            3 => format!("Qw:c{cube}"),
            _ => format!("Qw:c{cube}:s{square}"),
        })
    }

    fn format(&self, z: &QwElem) -> String {
        let coeff_w = |b: &BigRational| -> String {
            if b.is_one() {
                "w".into()
            } else if *b == -BigRational::one() {
                "-w".into()
            } else {
                format!("{}*w", format_ratio(b))
            }
        };
        if z.b.is_zero() {
            format_ratio(&z.a)
        } else if z.a.is_zero() {
            coeff_w(&z.b)
        } else if z.b.is_negative() {
            format!("({} - {})", format_ratio(&z.a), coeff_w(&-&z.b))
        } else {
            format!("({} + {})", format_ratio(&z.a), coeff_w(&z.b))
        }
    }

    fn to_json(&self, z: &QwElem) -> serde_json::Value {
        json!({ "a": ratio_to_json(&z.a), "b": ratio_to_json(&z.b) })
    }

    fn from_json(&self, v: &serde_json::Value) -> Result<QwElem> {
        match v {
            serde_json::Value::Object(map) => {
                let a = map.get("a").map(ratio_from_json).transpose()?;
                let b = map.get("b").map(ratio_from_json).transpose()?;
                Ok(QwElem::new(
                    a.unwrap_or_else(BigRational::zero),
                    b.unwrap_or_else(BigRational::zero),
                ))
            }
            other => Ok(QwElem::rational(ratio_from_json(other)?)),
        }
    }

    fn random(&self, rng: &mut dyn RngCore) -> QwElem {
        QwElem::new(random_ratio(rng), random_ratio(rng))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qw(a: i64, b: i64) -> QwElem {
        QwElem::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    #[test]
    fn omega_has_order_three() {
        let k = CyclotomicOmega;
        let w = k.omega().unwrap();
        assert_eq!(k.mul(&k.mul(&w, &w), &w), k.one());
        let w2 = k.mul(&w, &w);
        assert_eq!(k.add(&w, &w2), k.from_i64(-1));
    }

    #[test]
    fn inverse_round_trip() {
        let k = CyclotomicOmega;
        let z = qw(3, -7);
        assert_eq!(k.mul(&z, &k.inv(&z).unwrap()), k.one());
    }

    #[test]
    fn square_roots() {
        let k = CyclotomicOmega;
        // √−3 = 1 + 2ω
        let r = k.sqrt(&qw(-3, 0)).unwrap();
        assert_eq!(k.mul(&r, &r), qw(-3, 0));
        for z in [qw(2, 5), qw(-1, 4), qw(7, 0), qw(0, 3)] {
            let sq = k.mul(&z, &z);
            let r = k.sqrt(&sq).unwrap();
            assert_eq!(k.mul(&r, &r), sq);
        }
        assert_eq!(k.sqrt(&qw(2, 0)), None);
    }

    #[test]
    fn cube_roots() {
        let k = CyclotomicOmega;
        for z in [qw(2, 5), qw(-1, 4), qw(7, 0), qw(0, 3)] {
            let c = k.mul(&k.mul(&z, &z), &z);
            let r = k.cbrt(&c).unwrap();
            assert_eq!(k.mul(&k.mul(&r, &r), &r), c);
        }
        assert_eq!(k.cbrt(&qw(2, 0)), None);
    }

    #[test]
    fn minus_27_is_a_sixth_power() {
        let k = CyclotomicOmega;
        assert!(k.is_nth_power(&qw(-27, 0), 6).unwrap());
        assert!(!k.is_nth_power(&qw(4, 0), 6).unwrap());
        assert!(k.is_nth_power(&qw(1, 1), 6).is_err());
        assert_eq!(
            k.power_class_token(&qw(-27, 0), 6).unwrap(),
            k.power_class_token(&qw(1, 0), 6).unwrap()
        );
    }

    #[test]
    fn format_shapes() {
        let k = CyclotomicOmega;
        assert_eq!(k.format(&qw(0, 1)), "w");
        assert_eq!(k.format(&qw(0, -1)), "-w");
        assert_eq!(k.format(&qw(2, -3)), "(2 - 3*w)");
        assert_eq!(k.format(&qw(-5, 0)), "-5");
    }
}

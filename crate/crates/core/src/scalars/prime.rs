use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::{Rng, RngCore};

use super::{parse_ratio_text, Field};
use crate::error::{Error, Result};

/// 𝔽_p for a prime p ≡ 1 (mod 3), p < 2³¹, with a chosen primitive cube root ω.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
    omega: u64,
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn is_prime(p: u64) -> bool {
    num_prime::nt_funcs::is_prime64(p)
}

impl PrimeField {
    /// 𝔽_p with ω the smallest residue of multiplicative order 3.
    pub fn new(p: u64) -> Result<Self> {
        Self::check_modulus(p)?;
        let w = (2..p)
            .map(|r| pow_mod(r, (p - 1) / 3, p))
            .find(|&w| w != 1)
            .expect("p ≡ 1 mod 3 has a primitive cube root of unity");
        let omega = w.min(mul_mod(w, w, p));
        Ok(PrimeField { p, omega })
    }

    /// 𝔽_p with an explicitly chosen ω.
    pub fn with_omega(p: u64, omega: u64) -> Result<Self> {
        Self::check_modulus(p)?;
        let omega = omega % p;
        if omega == 1 || pow_mod(omega, 3, p) != 1 {
            return Err(Error::InvalidField(format!(
                "{omega} is not a primitive cube root of unity mod {p}"
            )));
        }
        Ok(PrimeField { p, omega })
    }

    fn check_modulus(p: u64) -> Result<()> {
        if p >= 1 << 31 || !is_prime(p) || p % 3 != 1 {
            return Err(Error::InvalidField(format!(
                "p = {p} must be a prime below 2^31 with p = 1 mod 3"
            )));
        }
        Ok(())
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn omega_residue(&self) -> u64 {
        self.omega
    }

    /// The same field with ω replaced by ω².
    pub fn conjugate(&self) -> Self {
        PrimeField {
            p: self.p,
            omega: mul_mod(self.omega, self.omega, self.p),
        }
    }

    pub fn elem(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    fn tonelli_shanks(&self, a: u64) -> Option<u64> {
        let p = self.p;
        if a == 0 {
            return Some(0);
        }
        if pow_mod(a, (p - 1) / 2, p) != 1 {
            return None;
        }
        let mut q = p - 1;
        let mut s = 0;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let z = (2..p).find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)?;
        let mut m = s;
        let mut c = pow_mod(z, q, p);
        let mut t = pow_mod(a, q, p);
        let mut r = pow_mod(a, (q + 1) / 2, p);
        while t != 1 {
            let mut i = 0;
            let mut tt = t;
            while tt != 1 {
                tt = mul_mod(tt, tt, p);
                i += 1;
            }
            let b = pow_mod(c, 1 << (m - i - 1), p);
            m = i;
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            r = mul_mod(r, b, p);
        }
        Some(r)
    }

    /// Cube root via the 3-Sylow subgroup: with p − 1 = 3ˢ·t, take
    /// x₀ = a^k where 3k ≡ 1 (mod t), then correct x₀ by the discrete log of
    /// x₀³/a in the cyclic 3-Sylow subgroup.
    fn cube_root(&self, a: u64) -> Option<u64> {
        let p = self.p;
        if a == 0 {
            return Some(0);
        }
        if pow_mod(a, (p - 1) / 3, p) != 1 {
            return None;
        }
        let mut t = p - 1;
        let mut s = 0u32;
        while t % 3 == 0 {
            t /= 3;
            s += 1;
        }
        let k = {
            // inverse of 3 modulo t (t coprime to 3); t = 1 gives k = 0
            let inv = BigInt::from(3).extended_gcd(&BigInt::from(t));
            inv.x.mod_floor(&BigInt::from(t)).to_u64().unwrap_or(0)
        };
        let x0 = pow_mod(a, k, p);
        let err = mul_mod(pow_mod(x0, 3, p), self.inv_raw(a), p);
        // generator of the 3-Sylow subgroup
        let g = (2..p)
            .map(|r| pow_mod(r, t, p))
            .find(|&g| s == 0 || pow_mod(g, 3u64.pow(s - 1), p) != 1)?;
        let log = self.sylow3_log(err, g, s)?;
        if log % 3 != 0 {
            return None;
        }
        let correction = pow_mod(self.inv_raw(g), log / 3, p);
        let r = mul_mod(x0, correction, p);
        debug_assert_eq!(pow_mod(r, 3, p), a);
        let w = self.omega;
        let candidates = [r, mul_mod(r, w, p), mul_mod(r, mul_mod(w, w, p), p)];
        candidates.into_iter().min()
    }

    /// Discrete log of `h` base `g` where g has order 3ˢ (Pohlig–Hellman).
    fn sylow3_log(&self, h: u64, g: u64, s: u32) -> Option<u64> {
        let p = self.p;
        if s == 0 {
            return (h == 1).then_some(0);
        }
        let gamma = pow_mod(g, 3u64.pow(s - 1), p);
        let g_inv = self.inv_raw(g);
        let mut x = 0u64;
        for k in 0..s {
            let hk = mul_mod(pow_mod(g_inv, x, p), h, p);
            let probe = pow_mod(hk, 3u64.pow(s - 1 - k), p);
            let digit = (0..3).find(|&d| pow_mod(gamma, d, p) == probe)?;
            x += digit * 3u64.pow(k);
        }
        Some(x)
    }

    fn inv_raw(&self, a: u64) -> u64 {
        pow_mod(a, self.p - 2, self.p)
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> Option<crate::scalars::FieldSpec> {
        Some((*self).into())
    }
    fn name(&self) -> String {
        format!("F{}(w={})", self.p, self.omega)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p)).to_u64().expect("residue fits")
    }
    fn from_rational(&self, r: &BigRational) -> Result<u64> {
        let d = self.from_bigint(r.denom());
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(mul_mod(self.from_bigint(r.numer()), self.inv_raw(d), self.p))
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.inv_raw(*a))
        }
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn omega(&self) -> Result<u64> {
        Ok(self.omega)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.p).collect())
    }

    /// The least nonnegative residue among the two roots.
    fn sqrt(&self, a: &u64) -> Option<u64> {
        let r = self.tonelli_shanks(*a)?;
        Some(r.min(self.neg(&r)))
    }

    /// The least residue among the three roots.
    fn cbrt(&self, a: &u64) -> Option<u64> {
        self.cube_root(*a)
    }

    fn is_nth_power(&self, a: &u64, n: u32) -> Result<bool> {
        if *a == 0 {
            return Err(Error::ZeroInput);
        }
        if n == 0 {
            return Err(Error::PreconditionFailed("n must be positive".into()));
        }
        let g = (n as u64).gcd(&(self.p - 1));
        Ok(pow_mod(*a, (self.p - 1) / g, self.p) == 1)
    }

    /// The least residue c with a/c an n-th power.
    fn power_class_token(&self, a: &u64, n: u32) -> Result<String> {
        if *a == 0 {
            return Err(Error::ZeroInput);
        }
        for c in 1..self.p {
            let q = mul_mod(*a, self.inv_raw(c), self.p);
            if self.is_nth_power(&q, n)? {
                return Ok(format!("F{}:{}", self.p, c));
            }
        }
        unreachable!("a itself lies in its own class")
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn to_json(&self, a: &u64) -> serde_json::Value {
        serde_json::Value::from(*a)
    }
    fn from_json(&self, v: &serde_json::Value) -> Result<u64> {
        let r = match v {
            serde_json::Value::Number(n) => parse_ratio_text(&n.to_string())?,
            serde_json::Value::String(s) => parse_ratio_text(s)?,
            other => return Err(Error::InvalidScalar(other.to_string())),
        };
        self.from_rational(&r)
    }
    fn random(&self, rng: &mut dyn RngCore) -> u64 {
        rng.gen_range(0..self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_omega() {
        assert_eq!(PrimeField::new(7).unwrap().omega_residue(), 2);
        assert_eq!(PrimeField::new(13).unwrap().omega_residue(), 3);
        assert_eq!(PrimeField::new(7).unwrap().conjugate().omega_residue(), 4);
    }

    #[test]
    fn rejects_bad_moduli() {
        for p in [2, 3, 5, 11, 15, 1 << 31] {
            assert!(PrimeField::new(p).is_err(), "{p}");
        }
        assert!(PrimeField::with_omega(7, 1).is_err());
        assert!(PrimeField::with_omega(7, 3).is_err());
        assert!(PrimeField::with_omega(7, 4).is_ok());
    }

    #[test]
    fn omega_cubed() {
        let k = PrimeField::new(7).unwrap();
        assert_eq!(k.pow(&2, 3), 1);
    }

    #[test]
    fn sqrt_least_root() {
        let k = PrimeField::new(7).unwrap();
        assert_eq!(k.sqrt(&2), Some(3));
        assert_eq!(k.sqrt(&3), None);
        let big = PrimeField::new(10009).unwrap();
        for a in 1..200u64 {
            if let Some(r) = big.sqrt(&a) {
                assert_eq!(big.mul(&r, &r), a);
                assert!(r <= big.neg(&r));
            }
        }
    }

    #[test]
    fn cube_roots_match_brute_force() {
        for p in [7u64, 13, 19, 37, 10009, 2_147_483_029] {
            let k = PrimeField::new(p).unwrap();
            let limit = p.min(500);
            for a in 1..limit {
                let brute = if p < 1000 {
                    (0..p).filter(|x| pow_mod(*x, 3, p) == a).min()
                } else {
                    None
                };
                let fast = k.cbrt(&a);
                if let Some(r) = fast {
                    assert_eq!(pow_mod(r, 3, p), a);
                }
                if p < 1000 {
                    assert_eq!(fast, brute, "p={p} a={a}");
                } else {
                    assert_eq!(fast.is_some(), k.is_nth_power(&a, 3).unwrap());
                }
            }
        }
    }

    #[test]
    fn cubes_mod_seven() {
        let k = PrimeField::new(7).unwrap();
        assert!(!k.is_nth_power(&3, 3).unwrap());
        assert!(k.is_nth_power(&6, 3).unwrap());
        assert!(k.is_nth_power(&1, 6).unwrap());
    }
}

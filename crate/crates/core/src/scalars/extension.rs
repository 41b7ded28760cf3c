use num_bigint::BigInt;
use num_rational::BigRational;
use rand::RngCore;
use serde_json::json;

use super::prime::PrimeField;
use super::Field;
use crate::error::{Error, Result};

/// 𝔽_{p³} = 𝔽_p\[t\]/(m(t)) where m is the lexicographically least monic
/// irreducible cubic t³ + m₂t² + m₁t + m₀, ordered by (m₂, m₁, m₀).
///
/// Elements are coefficient triples `[c₀, c₁, c₂]` of c₀ + c₁t + c₂t².
/// Root extraction is by exhaustive scan, so this is meant for small p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CubicExtension {
    base: PrimeField,
    /// [m₀, m₁, m₂]
    modulus: [u64; 3],
}

/// Largest p for which exhaustive scans over 𝔽_{p³} are allowed.
pub const EXTENSION_SCAN_LIMIT: u64 = 101;

impl CubicExtension {
    pub fn new(base: PrimeField) -> Self {
        let p = base.p();
        for m2 in 0..p {
            for m1 in 0..p {
                for m0 in 0..p {
                    let has_root = (0..p).any(|t| {
                        let v = base.add(
                            &base.add(&base.pow(&t, 3), &base.mul(&m2, &base.mul(&t, &t))),
                            &base.add(&base.mul(&m1, &t), &m0),
                        );
                        v == 0
                    });
                    if !has_root {
                        return CubicExtension {
                            base,
                            modulus: [m0, m1, m2],
                        };
                    }
                }
            }
        }
        unreachable!("irreducible cubics exist over every finite field")
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    pub fn modulus(&self) -> [u64; 3] {
        self.modulus
    }

    pub fn embed(&self, a: u64) -> [u64; 3] {
        [a % self.base.p(), 0, 0]
    }

    /// The base-field value when the element lies in 𝔽_p.
    pub fn as_base(&self, a: &[u64; 3]) -> Option<u64> {
        (a[1] == 0 && a[2] == 0).then_some(a[0])
    }

    fn order(&self) -> u64 {
        self.base.p().pow(3)
    }

    fn scan<P: Fn(&[u64; 3]) -> bool>(&self, pred: P) -> Option<[u64; 3]> {
        let p = self.base.p();
        if p > EXTENSION_SCAN_LIMIT {
            return None;
        }
        for c2 in 0..p {
            for c1 in 0..p {
                for c0 in 0..p {
                    let e = [c0, c1, c2];
                    if pred(&e) {
                        return Some(e);
                    }
                }
            }
        }
        None
    }
}

impl Field for CubicExtension {
    type Elem = [u64; 3];

    fn name(&self) -> String {
        let [m0, m1, m2] = self.modulus;
        format!(
            "F{}^3(t^3+{}t^2+{}t+{}, w={})",
            self.base.p(),
            m2,
            m1,
            m0,
            self.base.omega_residue()
        )
    }
    fn zero(&self) -> [u64; 3] {
        [0; 3]
    }
    fn one(&self) -> [u64; 3] {
        [1, 0, 0]
    }
    fn from_bigint(&self, n: &BigInt) -> [u64; 3] {
        [self.base.from_bigint(n), 0, 0]
    }
    fn from_rational(&self, r: &BigRational) -> Result<[u64; 3]> {
        Ok([self.base.from_rational(r)?, 0, 0])
    }
    fn add(&self, a: &[u64; 3], b: &[u64; 3]) -> [u64; 3] {
        let k = &self.base;
        [k.add(&a[0], &b[0]), k.add(&a[1], &b[1]), k.add(&a[2], &b[2])]
    }
    fn sub(&self, a: &[u64; 3], b: &[u64; 3]) -> [u64; 3] {
        let k = &self.base;
        [k.sub(&a[0], &b[0]), k.sub(&a[1], &b[1]), k.sub(&a[2], &b[2])]
    }
    fn mul(&self, a: &[u64; 3], b: &[u64; 3]) -> [u64; 3] {
        let k = &self.base;
        let mut prod = [0u64; 5];
        for i in 0..3 {
            for j in 0..3 {
                prod[i + j] = k.add(&prod[i + j], &k.mul(&a[i], &b[j]));
            }
        }
        // t³ = −(m₂t² + m₁t + m₀)
        for deg in (3..5).rev() {
            let c = prod[deg];
            if c != 0 {
                for (i, m) in self.modulus.iter().enumerate() {
                    let idx = deg - 3 + i;
                    prod[idx] = k.sub(&prod[idx], &k.mul(&c, m));
                }
                prod[deg] = 0;
            }
        }
        [prod[0], prod[1], prod[2]]
    }
    fn neg(&self, a: &[u64; 3]) -> [u64; 3] {
        let k = &self.base;
        [k.neg(&a[0]), k.neg(&a[1]), k.neg(&a[2])]
    }
    fn inv(&self, a: &[u64; 3]) -> Result<[u64; 3]> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.order() - 2))
    }
    fn is_zero(&self, a: &[u64; 3]) -> bool {
        *a == [0; 3]
    }
    fn omega(&self) -> Result<[u64; 3]> {
        Ok([self.base.omega_residue(), 0, 0])
    }
    fn characteristic(&self) -> u64 {
        self.base.p()
    }
    fn elements(&self) -> Option<Vec<[u64; 3]>> {
        let p = self.base.p();
        let mut out = Vec::with_capacity(self.order() as usize);
        for c2 in 0..p {
            for c1 in 0..p {
                for c0 in 0..p {
                    out.push([c0, c1, c2]);
                }
            }
        }
        Some(out)
    }
    fn sqrt(&self, a: &[u64; 3]) -> Option<[u64; 3]> {
        self.scan(|x| self.mul(x, x) == *a)
    }
    fn cbrt(&self, a: &[u64; 3]) -> Option<[u64; 3]> {
        self.scan(|x| self.mul(&self.mul(x, x), x) == *a)
    }
    fn is_nth_power(&self, a: &[u64; 3], n: u32) -> Result<bool> {
        if self.is_zero(a) {
            return Err(Error::ZeroInput);
        }
        let q1 = self.order() - 1;
        let g = num_integer::gcd(n as u64, q1);
        Ok(self.pow(a, q1 / g) == self.one())
    }
    fn power_class_token(&self, a: &[u64; 3], n: u32) -> Result<String> {
        if self.is_zero(a) {
            return Err(Error::ZeroInput);
        }
        let rep = self
            .scan(|c| !self.is_zero(c) && self.is_nth_power(&self.div(a, c).unwrap(), n).unwrap())
            .ok_or_else(|| Error::UnsupportedField(self.name()))?;
        Ok(format!("F{}^3:{:?}", self.base.p(), rep))
    }
    fn format(&self, a: &[u64; 3]) -> String {
        format!("[{}, {}, {}]", a[0], a[1], a[2])
    }
    fn to_json(&self, a: &[u64; 3]) -> serde_json::Value {
        json!([a[0], a[1], a[2]])
    }
    fn from_json(&self, v: &serde_json::Value) -> Result<[u64; 3]> {
        let arr = v
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or_else(|| Error::InvalidScalar(v.to_string()))?;
        let mut out = [0u64; 3];
        for (o, x) in out.iter_mut().zip(arr) {
            *o = self.base.from_json(x)?;
        }
        Ok(out)
    }
    fn random(&self, rng: &mut dyn RngCore) -> [u64; 3] {
        [self.base.random(rng), self.base.random(rng), self.base.random(rng)]
    }
}

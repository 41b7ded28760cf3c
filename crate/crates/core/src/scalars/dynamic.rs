use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{CyclotomicOmega, Field, PrimeField, QwElem, Rationals};
use crate::error::{Error, Result};

/// Runtime description of a coefficient field, as carried in JSON:
/// `{"kind":"Fp","p":7,"omega":2}`, `{"kind":"Qw"}` or `{"kind":"Q"}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFieldSpec", into = "RawFieldSpec")]
pub enum FieldSpec {
    Rationals,
    CyclotomicOmega,
    PrimeField { p: u64, omega: u64 },
}

#[derive(Serialize, Deserialize)]
struct RawFieldSpec {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    omega: Option<u64>,
}

impl TryFrom<RawFieldSpec> for FieldSpec {
    type Error = Error;

    fn try_from(raw: RawFieldSpec) -> Result<Self> {
        FieldSpec::parse(&raw.kind, raw.p, raw.omega)
    }
}

impl From<FieldSpec> for RawFieldSpec {
    fn from(spec: FieldSpec) -> Self {
        match spec {
            FieldSpec::Rationals => RawFieldSpec {
                kind: "Q".into(),
                p: None,
                omega: None,
            },
            FieldSpec::CyclotomicOmega => RawFieldSpec {
                kind: "Qw".into(),
                p: None,
                omega: None,
            },
            FieldSpec::PrimeField { p, omega } => RawFieldSpec {
                kind: "Fp".into(),
                p: Some(p),
                omega: Some(omega),
            },
        }
    }
}

impl FieldSpec {
    /// Validating constructor from the CLI/JSON triple; for `Fp` a missing
    /// ω defaults to the smallest residue of order 3.
    pub fn parse(kind: &str, p: Option<u64>, omega: Option<u64>) -> Result<Self> {
        match kind {
            "Q" => Ok(FieldSpec::Rationals),
            "Qw" => Ok(FieldSpec::CyclotomicOmega),
            "Fp" => {
                let p = p.ok_or_else(|| Error::InvalidField("Fp needs p".into()))?;
                let field = match omega {
                    Some(w) => PrimeField::with_omega(p, w)?,
                    None => PrimeField::new(p)?,
                };
                Ok(field.into())
            }
            other => Err(Error::InvalidField(format!("unknown field kind `{other}`"))),
        }
    }

    pub fn prime_field(&self) -> Option<PrimeField> {
        match *self {
            FieldSpec::PrimeField { p, omega } => {
                Some(PrimeField::with_omega(p, omega).expect("validated on construction"))
            }
            _ => None,
        }
    }

    pub fn has_omega(&self) -> bool {
        !matches!(self, FieldSpec::Rationals)
    }
}

impl From<PrimeField> for FieldSpec {
    fn from(k: PrimeField) -> Self {
        FieldSpec::PrimeField {
            p: k.p(),
            omega: k.omega_residue(),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::CyclotomicOmega => write!(f, "Qw"),
            FieldSpec::PrimeField { p, omega } => write!(f, "F{p}(w={omega})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ScalarValue {
    Rational(BigRational),
    Cyclotomic(QwElem),
    Residue(u64),
}

/// A field element tagged with its field, for the dynamically typed surface
/// (JSON, CLI). Equality is representation equality; representations are
/// canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    spec: FieldSpec,
    value: ScalarValue,
}

enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

fn apply<F: Field>(k: &F, a: &F::Elem, b: &F::Elem, op: Op) -> Result<F::Elem> {
    Ok(match op {
        Op::Add => k.add(a, b),
        Op::Sub => k.sub(a, b),
        Op::Mul => k.mul(a, b),
        Op::Div => k.div(a, b)?,
    })
}

impl Scalar {
    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn value(&self) -> &ScalarValue {
        &self.value
    }

    pub fn rational(r: BigRational) -> Self {
        Scalar {
            spec: FieldSpec::Rationals,
            value: ScalarValue::Rational(r),
        }
    }

    pub fn cyclotomic(z: QwElem) -> Self {
        Scalar {
            spec: FieldSpec::CyclotomicOmega,
            value: ScalarValue::Cyclotomic(z),
        }
    }

    pub fn residue(k: &PrimeField, a: u64) -> Self {
        Scalar {
            spec: (*k).into(),
            value: ScalarValue::Residue(a % k.p()),
        }
    }

    pub fn from_int(spec: FieldSpec, n: i64) -> Self {
        match spec {
            FieldSpec::Rationals => Scalar::rational(Rationals.from_i64(n)),
            FieldSpec::CyclotomicOmega => Scalar::cyclotomic(CyclotomicOmega.from_i64(n)),
            FieldSpec::PrimeField { .. } => {
                let k = spec.prime_field().unwrap();
                Scalar::residue(&k, k.from_i64(n))
            }
        }
    }

    pub fn omega(spec: FieldSpec) -> Result<Self> {
        match spec {
            FieldSpec::Rationals => Rationals.omega().map(Scalar::rational),
            FieldSpec::CyclotomicOmega => CyclotomicOmega.omega().map(Scalar::cyclotomic),
            FieldSpec::PrimeField { omega, .. } => Ok(Scalar {
                spec,
                value: ScalarValue::Residue(omega),
            }),
        }
    }

    /// Scalar JSON: integer, `"num/den"` string, or `{"a":…,"b":…}` for a + bω.
    pub fn from_json(spec: FieldSpec, v: &serde_json::Value) -> Result<Self> {
        let value = match spec {
            FieldSpec::Rationals => ScalarValue::Rational(Rationals.from_json(v)?),
            FieldSpec::CyclotomicOmega => ScalarValue::Cyclotomic(CyclotomicOmega.from_json(v)?),
            FieldSpec::PrimeField { .. } => {
                ScalarValue::Residue(spec.prime_field().unwrap().from_json(v)?)
            }
        };
        Ok(Scalar { spec, value })
    }

    pub fn to_json(&self) -> serde_json::Value {
        match &self.value {
            ScalarValue::Rational(r) => Rationals.to_json(r),
            ScalarValue::Cyclotomic(z) => CyclotomicOmega.to_json(z),
            ScalarValue::Residue(a) => serde_json::Value::from(*a),
        }
    }

    fn binary(&self, other: &Scalar, op: Op) -> Result<Scalar> {
        if self.spec != other.spec {
            return Err(Error::FieldMismatch(
                self.spec.to_string(),
                other.spec.to_string(),
            ));
        }
        let value = match (&self.value, &other.value) {
            (ScalarValue::Rational(a), ScalarValue::Rational(b)) => {
                ScalarValue::Rational(apply(&Rationals, a, b, op)?)
            }
            (ScalarValue::Cyclotomic(a), ScalarValue::Cyclotomic(b)) => {
                ScalarValue::Cyclotomic(apply(&CyclotomicOmega, a, b, op)?)
            }
            (ScalarValue::Residue(a), ScalarValue::Residue(b)) => {
                let k = self.spec.prime_field().unwrap();
                ScalarValue::Residue(apply(&k, a, b, op)?)
            }
            _ => unreachable!("value variant always matches its spec"),
        };
        Ok(Scalar {
            spec: self.spec,
            value,
        })
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.binary(other, Op::Add)
    }
    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.binary(other, Op::Sub)
    }
    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.binary(other, Op::Mul)
    }
    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        self.binary(other, Op::Div)
    }

    pub fn is_nth_power(&self, n: u32) -> Result<bool> {
        match &self.value {
            ScalarValue::Rational(a) => Rationals.is_nth_power(a, n),
            ScalarValue::Cyclotomic(a) => CyclotomicOmega.is_nth_power(a, n),
            ScalarValue::Residue(a) => self.spec.prime_field().unwrap().is_nth_power(a, n),
        }
    }

    pub fn sqrt(&self) -> Option<Scalar> {
        let value = match &self.value {
            ScalarValue::Rational(a) => ScalarValue::Rational(Rationals.sqrt(a)?),
            ScalarValue::Cyclotomic(a) => ScalarValue::Cyclotomic(CyclotomicOmega.sqrt(a)?),
            ScalarValue::Residue(a) => {
                ScalarValue::Residue(self.spec.prime_field().unwrap().sqrt(a)?)
            }
        };
        Some(Scalar {
            spec: self.spec,
            value,
        })
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match &self.value {
            ScalarValue::Rational(r) => Rationals.format(r),
            ScalarValue::Cyclotomic(z) => CyclotomicOmega.format(z),
            ScalarValue::Residue(a) => a.to_string(),
        };
        f.write_str(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn field_spec_json_shapes() {
        let fp: FieldSpec = serde_json::from_value(json!({"kind":"Fp","p":7,"omega":2})).unwrap();
        assert_eq!(fp, FieldSpec::PrimeField { p: 7, omega: 2 });
        let default: FieldSpec = serde_json::from_value(json!({"kind":"Fp","p":13})).unwrap();
        assert_eq!(default, FieldSpec::PrimeField { p: 13, omega: 3 });
        let qw: FieldSpec = serde_json::from_value(json!({"kind":"Qw"})).unwrap();
        assert_eq!(serde_json::to_value(qw).unwrap(), json!({"kind":"Qw"}));
        assert!(serde_json::from_value::<FieldSpec>(json!({"kind":"Fp","p":11})).is_err());
        assert_eq!(
            serde_json::to_value(fp).unwrap(),
            json!({"kind":"Fp","p":7,"omega":2})
        );
    }

    #[test]
    fn scalar_arithmetic_examples() {
        let qw = FieldSpec::CyclotomicOmega;
        let w = Scalar::omega(qw).unwrap();
        assert_eq!(w.mul(&w).unwrap().mul(&w).unwrap(), Scalar::from_int(qw, 1));
        assert_eq!(w.add(&w.mul(&w).unwrap()).unwrap(), Scalar::from_int(qw, -1));

        let f7 = FieldSpec::PrimeField { p: 7, omega: 2 };
        let two = Scalar::from_int(f7, 2);
        assert_eq!(two.mul(&two).unwrap().mul(&two).unwrap(), Scalar::from_int(f7, 1));
    }

    #[test]
    fn scalar_errors() {
        let q = Scalar::from_int(FieldSpec::Rationals, 3);
        let w = Scalar::omega(FieldSpec::CyclotomicOmega).unwrap();
        assert_eq!(q.add(&w).unwrap_err().code(), "FieldMismatch");
        let zero = Scalar::from_int(FieldSpec::Rationals, 0);
        assert_eq!(q.div(&zero), Err(Error::DivisionByZero));
        assert!(Scalar::omega(FieldSpec::Rationals).is_err());
    }

    #[test]
    fn scalar_json_round_trip() {
        let spec = FieldSpec::CyclotomicOmega;
        let s = Scalar::from_json(spec, &json!({"a": "1/2", "b": -3})).unwrap();
        assert_eq!(s.to_string(), "(1/2 - 3*w)");
        assert_eq!(Scalar::from_json(spec, &s.to_json()).unwrap(), s);
        let f7 = FieldSpec::PrimeField { p: 7, omega: 2 };
        assert_eq!(Scalar::from_json(f7, &json!("1/2")).unwrap(), Scalar::from_int(f7, 4));
        assert_eq!(Scalar::from_json(f7, &json!(-1)).unwrap(), Scalar::from_int(f7, 6));
    }

    #[test]
    fn sqrt_examples() {
        let f7 = FieldSpec::PrimeField { p: 7, omega: 2 };
        assert_eq!(Scalar::from_int(f7, 2).sqrt(), Some(Scalar::from_int(f7, 3)));
        assert_eq!(Scalar::from_int(FieldSpec::Rationals, 2).sqrt(), None);
        assert_eq!(
            Scalar::from_int(FieldSpec::Rationals, 0).sqrt(),
            Some(Scalar::from_int(FieldSpec::Rationals, 0))
        );
    }
}

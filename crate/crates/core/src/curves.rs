//! The plane cubic w³ = f(u, v) and its Jacobian s² = γ³ + A with A = Δ(f)/4.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::forms::BinaryCubicForm;
use crate::scalars::{CubicExtension, Field, PrimeField};

/// Height bound used when a caller does not supply one.
pub const DEFAULT_HEIGHT: u64 = 20;

/// A projective point (u : v : w), scaled so its first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlaneCubicPoint<F: Field> {
    field: F,
    pub u: F::Elem,
    pub v: F::Elem,
    pub w: F::Elem,
}

impl<F: Field> PlaneCubicPoint<F> {
    pub fn new(field: &F, u: F::Elem, v: F::Elem, w: F::Elem) -> Result<Self> {
        let k = field;
        let lead = [&u, &v, &w]
            .into_iter()
            .find(|c| !k.is_zero(c))
            .cloned()
            .ok_or(Error::ZeroInput)?;
        let s = k.inv(&lead)?;
        Ok(PlaneCubicPoint {
            field: k.clone(),
            u: k.mul(&u, &s),
            v: k.mul(&v, &s),
            w: k.mul(&w, &s),
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// Whether w³ − f(u, v) = 0.
    pub fn lies_on(&self, f: &BinaryCubicForm<F>) -> bool {
        let k = &self.field;
        k.pow(&self.w, 3) == f.eval(&self.u, &self.v)
    }

    pub fn to_json(&self) -> Value {
        let k = &self.field;
        json!({"u": k.to_json(&self.u), "v": k.to_json(&self.v), "w": k.to_json(&self.w)})
    }
}

impl<F: Field> fmt::Display for PlaneCubicPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = &self.field;
        write!(f, "({}:{}:{})", k.format(&self.u), k.format(&self.v), k.format(&self.w))
    }
}

/// Search for a k-point of w³ = f(u, v).
///
/// Over a finite field every (u : v) ∈ ℙ¹ is tried, which is exhaustive since
/// u = v = 0 forces w = 0. Over ℚ and ℚ(ω) the coprime integer pairs (u, v)
/// with max(|u|, |v|) ≤ `height` are tried in order of height; `height = 0`
/// means [`DEFAULT_HEIGHT`]. `None` only means nothing was found.
pub fn point_search<F: Field>(f: &BinaryCubicForm<F>, height: u64) -> Option<PlaneCubicPoint<F>> {
    let k = f.field();
    let try_pair = |u: F::Elem, v: F::Elem| {
        let w = k.cbrt(&f.eval(&u, &v))?;
        PlaneCubicPoint::new(k, u, v, w).ok()
    };
    if let Some(elems) = k.elements() {
        return elems
            .iter()
            .find_map(|v| try_pair(k.one(), v.clone()))
            .or_else(|| try_pair(k.zero(), k.one()));
    }
    let height = if height == 0 { DEFAULT_HEIGHT } else { height } as i64;
    let int = |n: i64| k.from_bigint(&BigInt::from(n));
    if let Some(p) = try_pair(int(1), int(0)) {
        return Some(p);
    }
    for h in 1..=height {
        for u in -h..=h {
            for v in 1..=h {
                if u.abs().max(v) != h || u.gcd(&v) != 1 {
                    continue;
                }
                if let Some(p) = try_pair(int(u), int(v)) {
                    return Some(p);
                }
            }
        }
    }
    None
}

/// A point of w³ = f(u, v) over 𝔽_p or over 𝔽_{p³}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverPoint {
    Base(PlaneCubicPoint<PrimeField>),
    Extension(PlaneCubicPoint<CubicExtension>),
}

impl CoverPoint {
    /// Check the curve equation for the form read in the point's field.
    pub fn verify(&self, f: &BinaryCubicForm<PrimeField>) -> bool {
        match self {
            CoverPoint::Base(p) => p.lies_on(f),
            CoverPoint::Extension(p) => p.lies_on(&embed_form(p.field(), f)),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            CoverPoint::Base(p) => json!({"field": "base", "point": p.to_json()}),
            CoverPoint::Extension(p) => json!({
                "field": "cubic_extension",
                "modulus": p.field().modulus(),
                "point": p.to_json(),
            }),
        }
    }
}

impl fmt::Display for CoverPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverPoint::Base(p) => write!(f, "{p}"),
            CoverPoint::Extension(p) => write!(f, "{p} over F_p^3"),
        }
    }
}

pub fn embed_form(ext: &CubicExtension, f: &BinaryCubicForm<PrimeField>) -> BinaryCubicForm<CubicExtension> {
    BinaryCubicForm::new(ext, f.coeffs().map(|c| ext.embed(c)))
}

/// The points on the four opens of the cover:
/// 1: (x : 0 : x²) with x³ = c₀; 2: (0 : y : y²) with y³ = c₃;
/// 3: (1 : 1 : t) with t³ = f(1, 1); 4: (1 : −1 : t) with t³ = f(1, −1).
pub fn construct_cover_point(f: &BinaryCubicForm<PrimeField>, which: u8) -> Result<CoverPoint> {
    let k = *f.field();
    let [c0, _, _, c3] = *f.coeffs();
    let one = k.one();
    let minus = k.neg(&one);
    let target = match which {
        1 => c0,
        2 => c3,
        3 => f.eval(&one, &one),
        4 => f.eval(&one, &minus),
        _ => return Err(Error::PreconditionFailed(format!("no cover open {which}"))),
    };
    if k.is_zero(&target) {
        return Err(Error::PreconditionFailed(format!(
            "the point of open {which} needs a nonzero cube"
        )));
    }
    fn build<G: Field>(g: &G, which: u8, r: G::Elem, minus: G::Elem) -> Result<PlaneCubicPoint<G>> {
        let sq = g.mul(&r, &r);
        match which {
            1 => PlaneCubicPoint::new(g, r, g.zero(), sq),
            2 => PlaneCubicPoint::new(g, g.zero(), r, sq),
            3 => PlaneCubicPoint::new(g, g.one(), g.one(), r),
            _ => PlaneCubicPoint::new(g, g.one(), minus, r),
        }
    }
    let point = match k.cbrt(&target) {
        Some(r) => CoverPoint::Base(build(&k, which, r, minus)?),
        None => {
            let ext = CubicExtension::new(k);
            let r = ext
                .cbrt(&ext.embed(target))
                .ok_or_else(|| Error::UnsupportedField(ext.name()))?;
            CoverPoint::Extension(build(&ext, which, r, ext.embed(minus))?)
        }
    };
    if !point.verify(f) {
        return Err(Error::Derivation(format!("cover point {point} is not on the curve")));
    }
    Ok(point)
}

/// The curve s² = γ³ + A.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EllipticCurve<F: Field> {
    field: F,
    a: F::Elem,
}

/// A point of an [`EllipticCurve`]; `None` is the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EllipticPoint<F: Field> {
    curve: EllipticCurve<F>,
    coords: Option<(F::Elem, F::Elem)>,
}

/// The Jacobian s² = γ³ + Δ(f)/4 of w³ = f(u, v).
pub fn jacobian_of<F: Field>(f: &BinaryCubicForm<F>) -> Result<EllipticCurve<F>> {
    f.ensure_nondegenerate()?;
    let k = f.field();
    EllipticCurve::new(k, k.div(&f.discriminant(), &k.from_i64(4))?)
}

impl<F: Field> EllipticCurve<F> {
    /// Requires A ≠ 0, which is smoothness.
    pub fn new(field: &F, a: F::Elem) -> Result<Self> {
        if field.is_zero(&a) {
            return Err(Error::DegenerateForm);
        }
        Ok(EllipticCurve {
            field: field.clone(),
            a,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn a(&self) -> &F::Elem {
        &self.a
    }

    pub fn infinity(&self) -> EllipticPoint<F> {
        EllipticPoint {
            curve: self.clone(),
            coords: None,
        }
    }

    pub fn point(&self, gamma: F::Elem, s: F::Elem) -> Result<EllipticPoint<F>> {
        let k = &self.field;
        let rhs = k.add(&k.pow(&gamma, 3), &self.a);
        if k.mul(&s, &s) != rhs {
            return Err(Error::PreconditionFailed(format!(
                "({}, {}) is not on the curve",
                k.format(&gamma),
                k.format(&s)
            )));
        }
        Ok(EllipticPoint {
            curve: self.clone(),
            coords: Some((gamma, s)),
        })
    }

    /// j = 1728·4a³/(4a³ + 27b²) for the short model s² = γ³ + aγ + b, here a = 0.
    pub fn j_invariant(&self) -> F::Elem {
        let k = &self.field;
        let a4 = k.zero();
        let four_a3 = k.mul(&k.from_i64(4), &k.pow(&a4, 3));
        let denom = k.add(&four_a3, &k.mul(&k.from_i64(27), &k.mul(&self.a, &self.a)));
        let num = k.mul(&k.from_i64(1728), &four_a3);
        k.div(&num, &denom).expect("smooth curve")
    }

    /// Curves of j-invariant 0 are isomorphic exactly when the ratio of
    /// their constants is a sixth power.
    pub fn is_isomorphic(&self, other: &Self) -> Result<bool> {
        self.field.ensure_same(&other.field)?;
        self.field.is_nth_power(&self.field.div(&self.a, &other.a)?, 6)
    }

    /// Every point, over a finite field.
    pub fn points(&self) -> Option<Vec<EllipticPoint<F>>> {
        let k = &self.field;
        let mut out = vec![self.infinity()];
        for g in k.elements()? {
            let rhs = k.add(&k.pow(&g, 3), &self.a);
            if let Some(r) = k.sqrt(&rhs) {
                let neg = k.neg(&r);
                let twin = neg != r;
                out.push(self.point(g.clone(), r).expect("on curve"));
                if twin {
                    out.push(self.point(g, neg).expect("on curve"));
                }
            }
        }
        Some(out)
    }

    /// 𝒯 = {∞, (0, ±√A)}, of size 3 when √A ∈ k and 1 otherwise.
    pub fn torsion_t(&self) -> Vec<EllipticPoint<F>> {
        let k = &self.field;
        let mut out = vec![self.infinity()];
        if let Some(r) = k.sqrt(&self.a) {
            out.push(self.point(k.zero(), k.neg(&r)).expect("on curve"));
            out.push(self.point(k.zero(), r).expect("on curve"));
        }
        out
    }

    /// The points killed by λ = θ − [1], over a finite field.
    pub fn lambda_kernel(&self) -> Result<Vec<EllipticPoint<F>>> {
        let pts = self
            .points()
            .ok_or_else(|| Error::UnsupportedField(self.field.name()))?;
        let mut out = Vec::new();
        for p in pts {
            if p.lambda()?.is_infinity() {
                out.push(p);
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        json!({"A": self.field.to_json(&self.a)})
    }
}

impl<F: Field> EllipticPoint<F> {
    pub fn curve(&self) -> &EllipticCurve<F> {
        &self.curve
    }

    pub fn coords(&self) -> Option<&(F::Elem, F::Elem)> {
        self.coords.as_ref()
    }

    pub fn is_infinity(&self) -> bool {
        self.coords.is_none()
    }

    fn with(&self, coords: Option<(F::Elem, F::Elem)>) -> Self {
        EllipticPoint {
            curve: self.curve.clone(),
            coords,
        }
    }

    pub fn neg(&self) -> Self {
        let k = &self.curve.field;
        self.with(self.coords.as_ref().map(|(g, s)| (g.clone(), k.neg(s))))
    }

    /// Chord-tangent addition.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.curve != other.curve {
            return Err(Error::CurveMismatch);
        }
        let k = &self.curve.field;
        let (Some((g1, s1)), Some((g2, s2))) = (&self.coords, &other.coords) else {
            return Ok(if self.is_infinity() { other.clone() } else { self.clone() });
        };
        let slope = if g1 != g2 {
            k.div(&k.sub(s2, s1), &k.sub(g2, g1))?
        } else if k.is_zero(&k.add(s1, s2)) {
            return Ok(self.with(None));
        } else {
            // Tangent: 3γ² / 2s.
            k.div(
                &k.mul(&k.from_i64(3), &k.mul(g1, g1)),
                &k.mul(&k.from_i64(2), s1),
            )?
        };
        let g3 = k.sub(&k.sub(&k.mul(&slope, &slope), g1), g2);
        let s3 = k.sub(&k.mul(&slope, &k.sub(g1, &g3)), s1);
        Ok(self.with(Some((g3, s3))))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// [n]P for n ≥ 0.
    pub fn times(&self, mut n: u64) -> Self {
        let mut acc = self.with(None);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.add(&base).expect("same curve");
            }
            base = base.add(&base).expect("same curve");
            n >>= 1;
        }
        acc
    }

    /// θ(γ, s) = (ωγ, s).
    pub fn theta(&self) -> Result<Self> {
        let k = &self.curve.field;
        let w = k.omega()?;
        Ok(self.with(self.coords.as_ref().map(|(g, s)| (k.mul(&w, g), s.clone()))))
    }

    /// λ(P) = θ(P) − P.
    pub fn lambda(&self) -> Result<Self> {
        self.theta()?.sub(self)
    }

    pub fn to_json(&self) -> Value {
        let k = &self.curve.field;
        match &self.coords {
            None => json!("infinity"),
            Some((g, s)) => json!({"gamma": k.to_json(g), "s": k.to_json(s)}),
        }
    }
}

impl<F: Field> fmt::Display for EllipticPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = &self.curve.field;
        match &self.coords {
            None => write!(f, "infinity"),
            Some((g, s)) => write!(f, "({}, {})", k.format(g), k.format(s)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rationals;
    use num_rational::BigRational;

    #[test]
    fn jacobian_constants() {
        let q = Rationals;
        let e = jacobian_of(&BinaryCubicForm::from_ints(&q, [1, 0, 0, 1])).unwrap();
        assert_eq!(*e.a(), BigRational::new((-27).into(), 4.into()));
        let k = PrimeField::new(7).unwrap();
        let e = jacobian_of(&BinaryCubicForm::from_ints(&k, [1, 0, 0, 1])).unwrap();
        assert_eq!(*e.a(), 2);
        let bad = BinaryCubicForm::from_ints(&q, [1, 0, 0, 0]);
        assert_eq!(jacobian_of(&bad).unwrap_err(), Error::DegenerateForm);
    }

    #[test]
    fn small_group_law_f7() {
        let k = PrimeField::new(7).unwrap();
        let e = EllipticCurve::new(&k, 2).unwrap();
        let p = e.point(0, 3).unwrap();
        assert_eq!(p.add(&p).unwrap(), e.point(0, 4).unwrap());
        assert!(p.add(&p.neg()).unwrap().is_infinity());
        assert_eq!(p.add(&e.infinity()).unwrap(), p);
        assert_eq!(e.torsion_t().len(), 3);
        assert_eq!(e.lambda_kernel().unwrap().len(), 3);
        assert!(p.lambda().unwrap().is_infinity());
    }

    #[test]
    fn torsion_over_q() {
        let q = Rationals;
        let e = EllipticCurve::new(&q, q.from_i64(2)).unwrap();
        assert_eq!(e.torsion_t().len(), 1);
    }

    #[test]
    fn point_search_examples() {
        let q = Rationals;
        let p = point_search(&BinaryCubicForm::from_ints(&q, [1, 0, 0, 1]), 5).unwrap();
        assert_eq!((p.u.clone(), p.v.clone(), p.w.clone()), (q.one(), q.zero(), q.one()));
        let k = PrimeField::new(7).unwrap();
        assert!(point_search(&BinaryCubicForm::from_ints(&k, [1, 0, 0, 1]), 0).is_some());
        // 75u³ + 100v³ = w³ has no rational points at all.
        assert!(point_search(&BinaryCubicForm::from_ints(&q, [75, 0, 0, 100]), 20).is_none());
        let f = BinaryCubicForm::from_ints(&q, [3, 0, 0, 4]);
        assert!(point_search(&f, 20).unwrap().lies_on(&f));
    }

    #[test]
    fn cover_point_examples() {
        let k = PrimeField::new(7).unwrap();
        let f = BinaryCubicForm::from_ints(&k, [1, 0, 0, 3]);
        match construct_cover_point(&f, 1).unwrap() {
            CoverPoint::Base(p) => assert_eq!((p.u, p.v, p.w), (1, 0, 1)),
            other => panic!("{other:?}"),
        }
        let f = BinaryCubicForm::from_ints(&k, [3, 0, 0, 1]);
        let p = construct_cover_point(&f, 1).unwrap();
        assert!(matches!(p, CoverPoint::Extension(_)) && p.verify(&f));
        let f = BinaryCubicForm::from_ints(&k, [1, 1, 1, 1]);
        assert!(construct_cover_point(&f, 3).unwrap().verify(&f));
        let f = BinaryCubicForm::from_ints(&k, [1, 1, 1, 1]);
        assert_eq!(
            construct_cover_point(&f, 4).unwrap_err().code(),
            "PreconditionFailed"
        );
    }
}

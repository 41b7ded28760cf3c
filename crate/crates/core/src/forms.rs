//! Binary cubic forms c₀u³ + c₁u²v + c₂uv² + c₃v³ and the GL₂ action.
//!
//! The action is (𝔤·f)(u, v) = f(au + bv, cu + dv) for 𝔤 = (a b; c d). It is
//! the action induced on forms by the substitution x ↦ ax + cy, y ↦ bx + dy
//! of the free algebra: (p·𝔤.x + q·𝔤.y)³ = (𝔤·f)(p, q). It composes as
//! 𝔤·(𝔥·f) = (𝔥𝔤)·f.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::curves;
use crate::error::{Error, Result};
use crate::gl2::Gl2;
use crate::scalars::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryCubicForm<F: Field> {
    field: F,
    coeffs: [F::Elem; 4],
}

/// Multiply two binary forms given by coefficient lists indexed by the
/// exponent of v.
fn form_mul<F: Field>(k: &F, p: &[F::Elem], q: &[F::Elem]) -> Vec<F::Elem> {
    let mut out = vec![k.zero(); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            out[i + j] = k.add(&out[i + j], &k.mul(a, b));
        }
    }
    out
}

impl<F: Field> BinaryCubicForm<F> {
    pub fn new(field: &F, coeffs: [F::Elem; 4]) -> Self {
        BinaryCubicForm {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_ints(field: &F, c: [i64; 4]) -> Self {
        Self::new(field, c.map(|x| field.from_i64(x)))
    }

    /// Build from (a, b, c, d) read as au³ + 3bu²v + 3cuv² + dv³.
    pub fn from_threes(field: &F, c: [F::Elem; 4]) -> Self {
        let three = field.from_i64(3);
        let [a, b, cc, d] = c;
        Self::new(field, [a, field.mul(&three, &b), field.mul(&three, &cc), d])
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem; 4] {
        &self.coeffs
    }

    pub fn random(field: &F, rng: &mut dyn rand::RngCore) -> Self {
        Self::new(field, [(); 4].map(|_| field.random(rng)))
    }

    /// A random form with nonzero discriminant.
    pub fn random_nondegenerate(field: &F, rng: &mut dyn rand::RngCore) -> Self {
        loop {
            let f = Self::random(field, rng);
            if !f.is_degenerate() {
                return f;
            }
        }
    }

    /// 18c₀c₁c₂c₃ − 4c₁³c₃ + c₁²c₂² − 4c₀c₂³ − 27c₀²c₃².
    pub fn discriminant(&self) -> F::Elem {
        let k = &self.field;
        let [a, b, c, d] = &self.coeffs;
        let m = |xs: &[&F::Elem]| xs.iter().fold(k.one(), |acc, x| k.mul(&acc, x));
        let terms = [
            (18, m(&[a, b, c, d])),
            (-4, m(&[b, b, b, d])),
            (1, m(&[b, b, c, c])),
            (-4, m(&[a, c, c, c])),
            (-27, m(&[a, a, d, d])),
        ];
        terms.iter().fold(k.zero(), |acc, (n, t)| {
            k.add(&acc, &k.mul(&k.from_i64(*n), t))
        })
    }

    pub fn is_degenerate(&self) -> bool {
        self.field.is_zero(&self.discriminant())
    }

    pub fn ensure_nondegenerate(&self) -> Result<()> {
        if self.is_degenerate() {
            Err(Error::DegenerateForm)
        } else {
            Ok(())
        }
    }

    /// Whether c₁ = c₂ = 0.
    pub fn is_diagonal(&self) -> bool {
        self.field.is_zero(&self.coeffs[1]) && self.field.is_zero(&self.coeffs[2])
    }

    pub fn eval(&self, u: &F::Elem, v: &F::Elem) -> F::Elem {
        let k = &self.field;
        let mut acc = k.zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let t = k.mul(c, &k.mul(&k.pow(u, 3 - i as u64), &k.pow(v, i as u64)));
            acc = k.add(&acc, &t);
        }
        acc
    }

    /// 𝔤·f, i.e. f(au + bv, cu + dv).
    pub fn act(&self, g: &Gl2<F>) -> Result<Self> {
        self.field.ensure_same(g.field())?;
        let k = &self.field;
        let l1 = [g.a.clone(), g.b.clone()];
        let l2 = [g.c.clone(), g.d.clone()];
        let mut out = vec![k.zero(); 4];
        for (i, c) in self.coeffs.iter().enumerate() {
            if k.is_zero(c) {
                continue;
            }
            let mut t = vec![c.clone()];
            for _ in 0..3 - i {
                t = form_mul(k, &t, &l1);
            }
            for _ in 0..i {
                t = form_mul(k, &t, &l2);
            }
            for (o, x) in out.iter_mut().zip(&t) {
                *o = k.add(o, x);
            }
        }
        Ok(Self::new(k, [0, 1, 2, 3].map(|i| out[i].clone())))
    }

    /// Map an S-valued form onto its coefficient vector.
    pub fn to_vec(&self) -> Vec<F::Elem> {
        self.coeffs.to_vec()
    }

    pub fn to_json_coeffs(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(|c| self.field.to_json(c)).collect())
    }

    /// `{"field": …, "coeffs": […], "threes": false}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "field": self.field.spec(),
            "coeffs": self.to_json_coeffs(),
            "threes": false,
        })
    }

    /// Read `{"coeffs": […], "threes": bool}`; the field is supplied by the caller.
    pub fn from_json(field: &F, v: &serde_json::Value) -> Result<Self> {
        let bad = || Error::InvalidScalar(format!("not a form: {v}"));
        let arr = v
            .get("coeffs")
            .and_then(|c| c.as_array())
            .filter(|c| c.len() == 4)
            .ok_or_else(bad)?;
        let mut cs = Vec::with_capacity(4);
        for c in arr {
            cs.push(field.from_json(c)?);
        }
        let cs: [F::Elem; 4] = cs.try_into().map_err(|_| bad())?;
        let threes = v.get("threes").and_then(|t| t.as_bool()).unwrap_or(false);
        Ok(if threes {
            Self::from_threes(field, cs)
        } else {
            Self::new(field, cs)
        })
    }

    pub fn format_coeffs(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| self.field.format(c)).collect();
        format!("({})", parts.join(","))
    }
}

/// The 4×4 matrix M(𝔤) with coeffs(𝔤·f) = M(𝔤)·coeffs(f).
///
/// Its transpose lists, column by column, the images of x³, α, β, y³ under
/// x ↦ ax + cy, y ↦ bx + dy written in the same basis.
pub fn action_matrix<F: Field>(g: &Gl2<F>) -> [[F::Elem; 4]; 4] {
    let k = g.field();
    let mut m: [[F::Elem; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| k.zero()));
    for j in 0..4 {
        let mut e = [0i64; 4];
        e[j] = 1;
        let img = BinaryCubicForm::from_ints(k, e).act(g).expect("same field");
        for i in 0..4 {
            m[i][j] = img.coeffs[i].clone();
        }
    }
    m
}

fn apply_matrix<F: Field>(k: &F, m: &[[F::Elem; 4]; 4], v: &[F::Elem; 4]) -> [F::Elem; 4] {
    std::array::from_fn(|i| {
        (0..4).fold(k.zero(), |acc, j| k.add(&acc, &k.mul(&m[i][j], &v[j])))
    })
}

/// The quantities r, s, t, D of the Hessian, with D = s² − rt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HessianData<F: Field> {
    pub r: F::Elem,
    pub s: F::Elem,
    pub t: F::Elem,
    pub d: F::Elem,
}

/// r = c₀c₂/3 − c₁²/9, 2s = c₀c₃ − c₁c₂/9, t = c₁c₃/3 − c₂²/9, D = s² − rt.
pub fn hessian_data<F: Field>(f: &BinaryCubicForm<F>) -> Result<HessianData<F>> {
    let k = f.field();
    let [c0, c1, c2, c3] = f.coeffs();
    let third = k.inv(&k.from_i64(3))?;
    let ninth = k.mul(&third, &third);
    let half = k.inv(&k.from_i64(2))?;
    let r = k.sub(&k.mul(&k.mul(c0, c2), &third), &k.mul(&k.mul(c1, c1), &ninth));
    let s = k.mul(
        &k.sub(&k.mul(c0, c3), &k.mul(&k.mul(c1, c2), &ninth)),
        &half,
    );
    let t = k.sub(&k.mul(&k.mul(c1, c3), &third), &k.mul(&k.mul(c2, c2), &ninth));
    let d = k.sub(&k.mul(&s, &s), &k.mul(&r, &t));
    Ok(HessianData { r, s, t, d })
}

/// Result of [`diagonalize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagonalization<F: Field> {
    pub transform: Gl2<F>,
    pub diagonal: BinaryCubicForm<F>,
    /// Hessian data of the form the transform was built from (after the swap,
    /// if one was needed); `None` when the input was already diagonal.
    pub hessian: Option<HessianData<F>>,
    pub swapped: bool,
}

/// Find 𝔤 with 𝔤·f diagonal, using
/// u ↦ (√D + s)ũ + (√D − s)ṽ, v ↦ −rũ + rṽ, of determinant 2r√D.
pub fn diagonalize<F: Field>(f: &BinaryCubicForm<F>) -> Result<Diagonalization<F>> {
    let k = f.field();
    f.ensure_nondegenerate()?;
    if f.is_diagonal() {
        return Ok(Diagonalization {
            transform: Gl2::identity(k),
            diagonal: f.clone(),
            hessian: None,
            swapped: false,
        });
    }
    let mut swapped = false;
    let mut h = hessian_data(f)?;
    if k.is_zero(&h.r) {
        h = hessian_data(&f.act(&Gl2::swap(k))?)?;
        swapped = true;
        if k.is_zero(&h.r) {
            return Err(Error::NotDiagonalizable);
        }
    }
    let root = k.sqrt(&h.d).ok_or_else(|| {
        Error::SquareRootAbsent(k.format(&k.mul(&k.from_i64(-108), &f.discriminant())))
    })?;
    let g0 = Gl2::new(
        k,
        k.add(&root, &h.s),
        k.sub(&root, &h.s),
        k.neg(&h.r),
        h.r.clone(),
    )?;
    let transform = if swapped {
        Gl2::swap(k).mul(&g0)?
    } else {
        g0
    };
    let diagonal = f.act(&transform)?;
    if !diagonal.is_diagonal() {
        return Err(Error::NotDiagonalizable);
    }
    Ok(Diagonalization {
        transform,
        diagonal,
        hessian: Some(h),
        swapped,
    })
}

fn roots_of_unity<F: Field>(k: &F) -> Vec<F::Elem> {
    match k.omega() {
        Ok(w) => vec![k.one(), w.clone(), k.mul(&w, &w)],
        Err(_) => vec![k.one()],
    }
}

/// The stabilizer of a diagonal form (p, 0, 0, r): diag(ζ, ζ') for cube
/// roots of unity ζ, ζ', and, when p/r = μ³ in k, the antidiagonal
/// elements (0, ζ/μ; ζ'μ, 0).
pub fn diagonal_stabilizer<F: Field>(f: &BinaryCubicForm<F>) -> Result<Vec<Gl2<F>>> {
    let k = f.field();
    f.ensure_nondegenerate()?;
    if !f.is_diagonal() {
        return Err(Error::PreconditionFailed("form is not diagonal".into()));
    }
    let zs = roots_of_unity(k);
    let mut out = Vec::new();
    for a in &zs {
        for d in &zs {
            out.push(Gl2::new(k, a.clone(), k.zero(), k.zero(), d.clone())?);
        }
    }
    let [p, _, _, r] = f.coeffs();
    if let Some(mu) = k.cbrt(&k.div(p, r)?) {
        let mu_inv = k.inv(&mu)?;
        for a in &zs {
            for d in &zs {
                out.push(Gl2::new(
                    k,
                    k.zero(),
                    k.mul(a, &mu_inv),
                    k.mul(d, &mu),
                    k.zero(),
                )?);
            }
        }
    }
    Ok(out)
}

/// Exhaustive stabilizer over a finite field.
pub fn stabilizer_exhaustive<F: Field>(f: &BinaryCubicForm<F>) -> Result<Vec<Gl2<F>>> {
    let k = f.field();
    let group = Gl2::all(k).ok_or_else(|| Error::UnsupportedField(k.name()))?;
    let hits: Vec<Option<Gl2<F>>> = group
        .into_par_iter()
        .map(|g| (f.act(&g).ok()? == *f).then_some(g))
        .collect();
    Ok(hits.into_iter().flatten().collect())
}

/// The stabilizer of a nondegenerate form: the closed formula for diagonal
/// forms, exhaustive search over finite fields, and otherwise the
/// conjugate of the stabilizer of a diagonalization.
pub fn stabilizer<F: Field>(f: &BinaryCubicForm<F>) -> Result<Vec<Gl2<F>>> {
    f.ensure_nondegenerate()?;
    if f.is_diagonal() {
        return diagonal_stabilizer(f);
    }
    if f.field().elements().is_some() {
        return stabilizer_exhaustive(f);
    }
    let diag = diagonalize(f).map_err(|_| Error::UnsupportedField(f.field().name()))?;
    let g = &diag.transform;
    let gi = g.inv();
    diagonal_stabilizer(&diag.diagonal)?
        .iter()
        .map(|h| g.mul(h)?.mul(&gi))
        .collect()
}

/// One GL₂(𝔽_q)-orbit of forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit<F: Field> {
    /// Lexicographically least coefficient vector in the orbit.
    pub representative: BinaryCubicForm<F>,
    pub size: usize,
    pub stabilizer_order: usize,
    pub delta: F::Elem,
    /// Sixth-power class token of Δ, `0` for degenerate orbits.
    pub delta_class6: String,
    pub has_point: bool,
}

/// Largest q⁴·|GL₂(𝔽_q)| accepted by [`orbit_enumerate`] (the value at q = 13).
pub const ORBIT_BUDGET: u64 = 13u64.pow(4) * (13 * 13 - 1) * (13 * 13 - 13);

/// Partition the forms over a finite field into GL₂-orbits.
pub fn orbit_enumerate<F: Field>(field: &F, nondegenerate_only: bool) -> Result<Vec<Orbit<F>>> {
    let elems = field
        .elements()
        .ok_or_else(|| Error::UnsupportedField(field.name()))?;
    let q = elems.len() as u64;
    let group_order = (q * q - 1) * (q * q - q);
    if q.pow(4) * group_order > ORBIT_BUDGET {
        return Err(Error::BudgetExceeded(format!(
            "q = {q}: q^4 * |GL2| exceeds {ORBIT_BUDGET}"
        )));
    }
    let position: HashMap<F::Elem, usize> =
        elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let qu = q as usize;
    let encode = |c: &[F::Elem; 4]| c.iter().fold(0usize, |acc, x| acc * qu + position[x]);
    let decode = |mut idx: usize| -> [F::Elem; 4] {
        let mut digits = [0usize; 4];
        for d in digits.iter_mut().rev() {
            *d = idx % qu;
            idx /= qu;
        }
        digits.map(|d| elems[d].clone())
    };
    let matrices: Vec<[[F::Elem; 4]; 4]> = Gl2::all(field)
        .expect("finite field")
        .iter()
        .map(action_matrix)
        .collect();
    let total = qu.pow(4);
    let mut visited = vec![false; total];
    let mut orbits = Vec::new();
    for idx in 0..total {
        if visited[idx] {
            continue;
        }
        let coeffs = decode(idx);
        let form = BinaryCubicForm::new(field, coeffs.clone());
        let images: Vec<usize> = matrices
            .par_iter()
            .map(|m| encode(&apply_matrix(field, m, &coeffs)))
            .collect();
        let stabilizer_order = images.iter().filter(|&&i| i == idx).count();
        let mut size = 0;
        for &i in &images {
            if !visited[i] {
                visited[i] = true;
                size += 1;
            }
        }
        let delta = form.discriminant();
        let degenerate = field.is_zero(&delta);
        if degenerate && nondegenerate_only {
            continue;
        }
        let delta_class6 = if degenerate {
            "0".to_string()
        } else {
            field.power_class_token(&delta, 6)?
        };
        let has_point = curves::point_search(&form, 0).is_some();
        orbits.push(Orbit {
            representative: form,
            size,
            stabilizer_order,
            delta,
            delta_class6,
            has_point,
        });
    }
    Ok(orbits)
}

/// Outcome of an orbit-equivalence test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence<F: Field> {
    /// 𝔤 with 𝔤·f = g.
    Equivalent(Gl2<F>),
    /// The reason the forms are provably inequivalent.
    Inequivalent(String),
    /// No decision within the available methods.
    Unknown,
}

impl<F: Field> Equivalence<F> {
    /// true / false, or `None` for Unknown.
    pub fn decided(&self) -> Option<bool> {
        match self {
            Equivalence::Equivalent(_) => Some(true),
            Equivalence::Inequivalent(_) => Some(false),
            Equivalence::Unknown => None,
        }
    }
}

/// Decide whether g lies in the GL₂-orbit of f.
///
/// Finite fields are decided exhaustively. Otherwise the sixth-power class of
/// Δ(g)/Δ(f) is compared first; then both forms are diagonalized, and two
/// diagonal forms are related only by diagonal or antidiagonal matrices,
/// which are found (or excluded) by cube-root tests.
pub fn orbit_equivalent<F: Field>(
    f: &BinaryCubicForm<F>,
    g: &BinaryCubicForm<F>,
) -> Result<Equivalence<F>> {
    let k = f.field();
    k.ensure_same(g.field())?;
    f.ensure_nondegenerate()?;
    g.ensure_nondegenerate()?;
    if let Some(group) = Gl2::all(k) {
        let hit = group.into_par_iter().find_first(|h| f.act(h).ok().as_ref() == Some(g));
        return Ok(match hit {
            Some(h) => Equivalence::Equivalent(h),
            None => Equivalence::Inequivalent("exhaustive search over GL2".into()),
        });
    }
    let ratio = k.div(&g.discriminant(), &f.discriminant())?;
    if let Ok(false) = k.is_nth_power(&ratio, 6) {
        return Ok(Equivalence::Inequivalent(
            "discriminant ratio is not a sixth power".into(),
        ));
    }
    let (df, dg) = match (diagonalize(f), diagonalize(g)) {
        (Ok(a), Ok(b)) => (a, b),
        (Ok(_), Err(Error::SquareRootAbsent(_))) | (Err(Error::SquareRootAbsent(_)), Ok(_)) => {
            return Ok(Equivalence::Inequivalent(
                "only one form is diagonalizable over the field".into(),
            ))
        }
        _ => return Ok(Equivalence::Unknown),
    };
    let [p1, _, _, r1] = df.diagonal.coeffs().clone();
    let [p2, _, _, r2] = dg.diagonal.coeffs().clone();
    let mut candidates = Vec::new();
    if let (Some(l), Some(m)) = (k.cbrt(&k.div(&p2, &p1)?), k.cbrt(&k.div(&r2, &r1)?)) {
        candidates.push(Gl2::new(k, l, k.zero(), k.zero(), m)?);
    }
    if let (Some(l), Some(m)) = (k.cbrt(&k.div(&r2, &p1)?), k.cbrt(&k.div(&p2, &r1)?)) {
        candidates.push(Gl2::new(k, k.zero(), l, m, k.zero())?);
    }
    for h in candidates {
        let w = df.transform.mul(&h)?.mul(&dg.transform.inv())?;
        if f.act(&w)? == *g {
            return Ok(Equivalence::Equivalent(w));
        }
    }
    // A matrix carrying one diagonal form to another preserves the pair of
    // Hessian lines uv = 0, so it is diagonal or antidiagonal.
    Ok(Equivalence::Inequivalent(
        "diagonal forms not related by a diagonal or antidiagonal matrix".into(),
    ))
}

/// Orbit invariants of a nondegenerate form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitInvariants<F: Field> {
    pub delta: F::Elem,
    pub delta_class6: String,
    pub has_point: bool,
}

pub fn orbit_invariants<F: Field>(
    f: &BinaryCubicForm<F>,
    budget: u64,
) -> Result<OrbitInvariants<F>> {
    f.ensure_nondegenerate()?;
    let k = f.field();
    let delta = f.discriminant();
    Ok(OrbitInvariants {
        delta_class6: k.power_class_token(&delta, 6)?,
        delta,
        has_point: curves::point_search(f, budget).is_some(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{CyclotomicOmega, PrimeField, Rationals};

    #[test]
    fn discriminant_examples() {
        let k = Rationals;
        let d = |c| BinaryCubicForm::from_ints(&k, c).discriminant();
        assert_eq!(d([1, 0, 0, 1]), k.from_i64(-27));
        assert_eq!(d([1, 0, 0, 0]), k.from_i64(0));
        assert_eq!(d([0, 1, 1, 0]), k.from_i64(1));
        assert_eq!(d([8, 0, 0, 8]), k.from_i64(-27 * 4096));
    }

    #[test]
    fn action_examples() {
        let k = Rationals;
        let f = BinaryCubicForm::from_ints(&k, [1, 2, 3, 4]);
        assert_eq!(f.act(&Gl2::identity(&k)).unwrap(), f);
        assert_eq!(
            f.act(&Gl2::swap(&k)).unwrap(),
            BinaryCubicForm::from_ints(&k, [4, 3, 2, 1])
        );
        let two = Gl2::from_ints(&k, [2, 0, 0, 2]).unwrap();
        let g = BinaryCubicForm::from_ints(&k, [1, 0, 0, 1]);
        assert_eq!(g.act(&two).unwrap(), BinaryCubicForm::from_ints(&k, [8, 0, 0, 8]));
    }

    #[test]
    fn action_is_right_action() {
        let k = PrimeField::new(13).unwrap();
        let g = Gl2::from_ints(&k, [2, 5, 1, 7]).unwrap();
        let h = Gl2::from_ints(&k, [3, 1, 4, 1]).unwrap();
        let f = BinaryCubicForm::from_ints(&k, [1, 2, 0, 5]);
        let lhs = f.act(&h).unwrap().act(&g).unwrap();
        assert_eq!(lhs, f.act(&h.mul(&g).unwrap()).unwrap());
    }

    #[test]
    fn diagonalize_examples() {
        let k = PrimeField::new(7).unwrap();
        let f = BinaryCubicForm::from_ints(&k, [0, 1, 1, 0]);
        let d = diagonalize(&f).unwrap();
        assert!(d.diagonal.is_diagonal());
        assert_eq!(f.act(&d.transform).unwrap(), d.diagonal);

        let q = Rationals;
        let f = BinaryCubicForm::from_ints(&q, [0, 1, 1, 0]);
        assert_eq!(diagonalize(&f).unwrap_err().code(), "SquareRootAbsent");
        let e = BinaryCubicForm::from_ints(&q, [1, 0, 0, 1]);
        assert_eq!(diagonalize(&e).unwrap().transform, Gl2::identity(&q));
    }

    #[test]
    fn stabilizer_orders_f7() {
        let k = PrimeField::new(7).unwrap();
        let f = BinaryCubicForm::from_ints(&k, [1, 0, 0, 1]);
        assert_eq!(stabilizer(&f).unwrap().len(), 18);
        assert_eq!(stabilizer_exhaustive(&f).unwrap().len(), 18);
        let g = BinaryCubicForm::from_ints(&k, [1, 0, 0, 3]);
        assert_eq!(stabilizer(&g).unwrap().len(), 9);
    }

    #[test]
    fn stabilizer_over_qw_is_exact() {
        let k = CyclotomicOmega;
        let f = BinaryCubicForm::from_ints(&k, [1, 0, 0, 1]);
        let st = stabilizer(&f).unwrap();
        assert_eq!(st.len(), 18);
        for g in &st {
            assert_eq!(f.act(g).unwrap(), f);
        }
    }

    #[test]
    fn rational_equivalence_examples() {
        let k = Rationals;
        let f = BinaryCubicForm::from_ints(&k, [1, 0, 0, 1]);
        let g = BinaryCubicForm::from_ints(&k, [2, 0, 0, 1]);
        assert_eq!(orbit_equivalent(&f, &g).unwrap().decided(), Some(false));
        let h = Gl2::from_ints(&k, [1, 2, 3, 4]).unwrap();
        let fh = f.act(&h).unwrap();
        assert_eq!(orbit_equivalent(&f, &fh).unwrap().decided(), Some(true));
    }
}

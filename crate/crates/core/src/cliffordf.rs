//! The Clifford algebra A_f of a binary cubic form, as a rank-18 module over
//! k\[γ\], obtained from A by X3, AL, BE, Y3 ↦ c₀, c₁, c₂, c₃.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::curves::{self, PlaneCubicPoint};
use crate::error::{Error, Result};
use crate::forms::{self, BinaryCubicForm};
use crate::freealg::{FreeElement, Letter, Word};
use crate::gca::identities::{alpha, beta, epsilon, gamma};
use crate::gca::{basis_word, Gca, GcaElement, RANK};
use crate::gl2::Gl2;
use crate::linalg::Echelon;
use crate::poly::{ga_vars, Poly};
use crate::report::Report;
use crate::scalars::Field;

/// An element of A_f: coordinates in k\[GA\] on b₀, …, b₁₇.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordFElement<F: Field> {
    form: BinaryCubicForm<F>,
    coords: Vec<Poly<F>>,
}

impl<F: Field> CliffordFElement<F> {
    pub fn form(&self) -> &BinaryCubicForm<F> {
        &self.form
    }

    pub fn coords(&self) -> &[Poly<F>] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Poly::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.form != other.form {
            return Err(Error::FormMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(CliffordFElement {
            form: self.form.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scale(&self.form.field().from_i64(-1)))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        CliffordFElement {
            form: self.form.clone(),
            coords: self.coords.iter().map(|p| p.scale(c)).collect(),
        }
    }

    fn scale_poly(&self, p: &Poly<F>) -> Self {
        CliffordFElement {
            form: self.form.clone(),
            coords: self.coords.iter().map(|q| q * p).collect(),
        }
    }

    /// `{"form": …, "coords": [18 polynomials in GA]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "form": self.form.to_json(),
            "coords": self.coords.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        })
    }
}

impl<F: Field> fmt::Display for CliffordFElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(i, p)| format!("({p})*e{i}"))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

type Columns<F> = Vec<Vec<(usize, Poly<F>)>>;

/// The algebra A_f with specialized structure matrices.
#[derive(Clone, Debug)]
pub struct CliffordF<F: Field> {
    form: BinaryCubicForm<F>,
    point: BTreeMap<String, F::Elem>,
    cols_x: Columns<F>,
    cols_y: Columns<F>,
}

impl<F: Field> CliffordF<F> {
    pub fn new(gca: &Gca<F>, form: &BinaryCubicForm<F>) -> Result<Self> {
        gca.field().ensure_same(form.field())?;
        form.ensure_nondegenerate()?;
        let point: BTreeMap<String, F::Elem> = ["X3", "AL", "BE", "Y3"]
            .iter()
            .zip(form.coeffs())
            .map(|(n, c)| (n.to_string(), c.clone()))
            .collect();
        let columns = |l: Letter| -> Result<Columns<F>> {
            (0..RANK)
                .map(|j| {
                    let col = gca.column(l, j);
                    let mut out = Vec::new();
                    for (i, p) in col.coords().iter().enumerate() {
                        let q = p.specialize(&point, &ga_vars())?;
                        if !q.is_zero() {
                            out.push((i, q));
                        }
                    }
                    Ok(out)
                })
                .collect()
        };
        Ok(CliffordF {
            form: form.clone(),
            cols_x: columns(Letter::X)?,
            cols_y: columns(Letter::Y)?,
            point,
        })
    }

    pub fn form(&self) -> &BinaryCubicForm<F> {
        &self.form
    }

    fn field(&self) -> &F {
        self.form.field()
    }

    pub fn zero(&self) -> CliffordFElement<F> {
        CliffordFElement {
            form: self.form.clone(),
            coords: vec![Poly::zero(self.field(), &ga_vars()); RANK],
        }
    }

    pub fn basis(&self, i: usize) -> CliffordFElement<F> {
        let mut e = self.zero();
        e.coords[i] = Poly::one(self.field(), &ga_vars());
        e
    }

    pub fn one(&self) -> CliffordFElement<F> {
        self.basis(0)
    }

    /// c·1.
    pub fn scalar(&self, c: F::Elem) -> CliffordFElement<F> {
        self.one().scale(&c)
    }

    /// p(γ)·1 for a polynomial p in GA.
    pub fn scalar_poly(&self, p: Poly<F>) -> Result<CliffordFElement<F>> {
        if p.vars() != &ga_vars() {
            return Err(Error::VariableMismatch(p.vars().to_vec(), ga_vars().to_vec()));
        }
        let mut e = self.zero();
        e.coords[0] = p;
        Ok(e)
    }

    /// The image of a normal form of A.
    pub fn specialize(&self, u: &GcaElement<F>) -> Result<CliffordFElement<F>> {
        self.field().ensure_same(u.field())?;
        let coords = u
            .coords()
            .iter()
            .map(|p| p.specialize(&self.point, &ga_vars()))
            .collect::<Result<_>>()?;
        Ok(CliffordFElement {
            form: self.form.clone(),
            coords,
        })
    }

    fn ensure_mine(&self, u: &CliffordFElement<F>) -> Result<()> {
        if u.form != self.form {
            return Err(Error::FormMismatch);
        }
        Ok(())
    }

    pub fn mul_letter(&self, u: &CliffordFElement<F>, l: Letter) -> CliffordFElement<F> {
        let cols = match l {
            Letter::X => &self.cols_x,
            Letter::Y => &self.cols_y,
        };
        let mut out = self.zero();
        for (j, uj) in u.coords.iter().enumerate() {
            if uj.is_zero() {
                continue;
            }
            for (i, m) in &cols[j] {
                out.coords[*i] = &out.coords[*i] + &(m * uj);
            }
        }
        out
    }

    pub fn mul_word(&self, u: &CliffordFElement<F>, w: &Word) -> CliffordFElement<F> {
        w.letters()
            .iter()
            .fold(u.clone(), |acc, &l| self.mul_letter(&acc, l))
    }

    pub fn mul(&self, u: &CliffordFElement<F>, v: &CliffordFElement<F>) -> Result<CliffordFElement<F>> {
        self.ensure_mine(u)?;
        self.ensure_mine(v)?;
        let mut out = self.zero();
        for (j, vj) in v.coords.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            let ub = self.mul_word(u, &basis_word(j));
            out = out.checked_add(&ub.scale_poly(vj))?;
        }
        Ok(out)
    }

    pub fn pow(&self, u: &CliffordFElement<F>, e: u32) -> Result<CliffordFElement<F>> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, u)?;
        }
        Ok(acc)
    }

    /// The image of a free-algebra element.
    pub fn reduce(&self, e: &FreeElement<F>) -> Result<CliffordFElement<F>> {
        self.field().ensure_same(e.field())?;
        let one = self.one();
        let mut out = self.zero();
        for (w, c) in e.terms() {
            out = out.checked_add(&self.mul_word(&one, w).scale(c))?;
        }
        Ok(out)
    }

    pub fn is_central(&self, u: &CliffordFElement<F>) -> Result<bool> {
        for i in [1, 2] {
            let g = self.basis(i);
            if self.mul(u, &g)? != self.mul(&g, u)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn record(report: &mut Report, name: &str, diff: &CliffordFElement<F>) {
        if diff.is_zero() {
            report.push(name, true, "0");
        } else {
            report.push(name, false, diff);
        }
    }
}

/// Result of [`check_clifford_iso`].
#[derive(Clone, Debug)]
pub struct IsoCheck<F: Field> {
    pub report: Report,
    /// λ with φ(γ) = λγ, when φ(γ) is a scalar multiple of γ.
    pub gamma_factor: Option<F::Elem>,
    pub det_squared: F::Elem,
}

/// Check that x ↦ 𝔤.x, y ↦ 𝔤.y (i.e. x ↦ ax + cy, y ↦ bx + dy) defines a map
/// A_{𝔤·f} → A_f, and measure the image of γ.
pub fn check_clifford_iso<F: Field>(gca: &Gca<F>, g: &Gl2<F>, f: &BinaryCubicForm<F>) -> Result<IsoCheck<F>> {
    let k = f.field();
    let af = CliffordF::new(gca, f)?;
    let target = f.act(g)?;
    let [t0, t1, t2, t3] = target.coeffs().clone();
    let image = |e: FreeElement<F>| af.reduce(&e.linear_substitute(g)?);
    let mut report = Report::new();
    let rels = [
        ("x_cubed", FreeElement::x(k).pow(3), t0),
        ("alpha", alpha(k), t1),
        ("beta", beta(k), t2),
        ("y_cubed", FreeElement::y(k).pow(3), t3),
    ];
    for (name, rel, c) in rels {
        let diff = image(rel)?.checked_sub(&af.scalar(c))?;
        CliffordF::record(&mut report, name, &diff);
    }
    let gamma_f = af.reduce(&gamma(k))?;
    let phi_gamma = image(gamma(k))?;
    let ga = Poly::var(k, &ga_vars(), "GA")?;
    let gamma_factor = (gamma_f.coords[0] == ga)
        .then(|| phi_gamma.coords[0].coeff(&[1]))
        .filter(|lambda| phi_gamma == gamma_f.scale(lambda));
    let det_squared = k.pow(&g.det(), 2);
    match &gamma_factor {
        Some(l) if *l == det_squared => report.push("gamma_scaling", true, "0"),
        Some(l) => report.push("gamma_scaling", false, k.format(&k.sub(l, &det_squared))),
        None => report.push("gamma_scaling", false, &phi_gamma),
    }
    Ok(IsoCheck {
        report,
        gamma_factor,
        det_squared,
    })
}

/// εx = ωxε, εy = ωyε + (1 − ω)γ and ε³ central, in A_f.
pub fn symbol_relations_check<F: Field>(gca: &Gca<F>, f: &BinaryCubicForm<F>) -> Result<Report> {
    let k = f.field();
    let af = CliffordF::new(gca, f)?;
    let w = k.omega()?;
    let eps = af.reduce(&epsilon(k)?)?;
    let x = af.basis(1);
    let y = af.basis(2);
    let gam = af.reduce(&gamma(k))?;
    let mut report = Report::new();
    let ex = af.mul(&eps, &x)?.checked_sub(&af.mul(&x, &eps)?.scale(&w))?;
    CliffordF::record(&mut report, "epsilon_x", &ex);
    let one_minus_w = k.sub(&k.one(), &w);
    let ey = af
        .mul(&eps, &y)?
        .checked_sub(&af.mul(&y, &eps)?.scale(&w))?
        .checked_sub(&gam.scale(&one_minus_w))?;
    CliffordF::record(&mut report, "epsilon_y", &ey);
    let e3 = af.pow(&eps, 3)?;
    let mut central = af.zero();
    for g in [&x, &y] {
        let c = af.mul(&e3, g)?.checked_sub(&af.mul(g, &e3)?)?;
        if !c.is_zero() {
            central = c;
            break;
        }
    }
    CliffordF::record(&mut report, "epsilon_cubed_central", &central);
    Ok(report)
}

/// Outcome of [`brauer_triviality_probe`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BrauerProbe<F: Field> {
    /// A point of w³ = f(u, v), which makes the class of A_f trivial.
    TrivialWithWitness(PlaneCubicPoint<F>),
    UnknownWithinBudget,
}

pub fn brauer_triviality_probe<F: Field>(f: &BinaryCubicForm<F>, height: u64) -> Result<BrauerProbe<F>> {
    f.ensure_nondegenerate()?;
    Ok(match curves::point_search(f, height) {
        Some(p) => BrauerProbe::TrivialWithWitness(p),
        None => BrauerProbe::UnknownWithinBudget,
    })
}

/// Whether the left multiplications by γ_f^j·bᵢ (j ≤ `degree_bound`) are
/// linearly independent as maps on the span of the words of length at most
/// `degree_bound + 4`.
///
/// The products are formed with the structure matrices of A_f, so this checks
/// that γ_f acts on the basis without collapsing it. Requires √(−108Δ) ∈ k.
pub fn gamma_independence_check<F: Field>(
    gca: &Gca<F>,
    f: &BinaryCubicForm<F>,
    degree_bound: u32,
) -> Result<bool> {
    let k = f.field();
    f.ensure_nondegenerate()?;
    let disc = k.mul(&k.from_i64(-108), &f.discriminant());
    if k.sqrt(&disc).is_none() {
        return Err(Error::HypothesisNotMet(format!(
            "-108*Delta = {} is not a square",
            k.format(&disc)
        )));
    }
    let af = CliffordF::new(gca, f)?;
    let gam = af.reduce(&gamma(k))?;
    let max_len = degree_bound as usize + 4;
    let words: Vec<Word> = (0..=max_len)
        .flat_map(|n| (0..1usize << n).map(move |i| Word::from_index(n, i)))
        .collect();
    let mut operators = Vec::new();
    let mut gj = af.one();
    for _ in 0..=degree_bound {
        for i in 0..RANK {
            let u = af.mul(&gj, &af.basis(i))?;
            let images: Vec<CliffordFElement<F>> =
                words.iter().map(|w| af.mul_word(&u, w)).collect();
            operators.push(images);
        }
        gj = af.mul(&gj, &gam)?;
    }
    // Flatten each operator into the coefficients of GA^m·bᵢ in every image.
    let max_deg = operators
        .iter()
        .flatten()
        .flat_map(|e| e.coords.iter().filter_map(|p| p.total_degree()))
        .max()
        .unwrap_or(0) as usize;
    let slot = RANK * (max_deg + 1);
    let width = words.len() * slot;
    let mut ech = Echelon::new(k, width);
    for op in &operators {
        let mut v = vec![k.zero(); width];
        for (wi, img) in op.iter().enumerate() {
            for (i, p) in img.coords.iter().enumerate() {
                for (m, c) in p.terms() {
                    v[wi * slot + i * (max_deg + 1) + m[0] as usize] = c.clone();
                }
            }
        }
        if !ech.insert(v) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The diagonalizing transform of f together with its Clifford-level check.
pub fn diagonalization_iso<F: Field>(
    gca: &Gca<F>,
    f: &BinaryCubicForm<F>,
) -> Result<(forms::Diagonalization<F>, IsoCheck<F>)> {
    let d = forms::diagonalize(f)?;
    let check = check_clifford_iso(gca, &d.transform, f)?;
    Ok((d, check))
}

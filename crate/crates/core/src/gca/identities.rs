//! The distinguished elements α, β, γ, δ, ε, s of A and the closed-form
//! identities they satisfy.

use super::{Gca, GcaElement};
use crate::error::Result;
use crate::freealg::FreeElement;
use crate::poly::{discriminant_poly, s_vars, Poly};
use crate::report::Report;
use crate::scalars::Field;

fn words<F: Field>(field: &F, terms: &[(&str, F::Elem)]) -> FreeElement<F> {
    let mut out = FreeElement::zero(field);
    for (w, c) in terms {
        out = &out + &FreeElement::term(field, w.parse().expect("letters"), c.clone());
    }
    out
}

/// α = x²y + xyx + yx².
pub fn alpha<F: Field>(field: &F) -> FreeElement<F> {
    let one = field.one();
    words(field, &[("xxy", one.clone()), ("xyx", one.clone()), ("yxx", one)])
}

/// β = xy² + yxy + y²x.
pub fn beta<F: Field>(field: &F) -> FreeElement<F> {
    let one = field.one();
    words(field, &[("xyy", one.clone()), ("yxy", one.clone()), ("yyx", one)])
}

/// γ = (xy)² − y²x².
pub fn gamma<F: Field>(field: &F) -> FreeElement<F> {
    words(field, &[("xyxy", field.one()), ("yyxx", field.from_i64(-1))])
}

/// δ = yx − ωxy.
pub fn delta<F: Field>(field: &F) -> Result<FreeElement<F>> {
    let w = field.omega()?;
    Ok(words(field, &[("yx", field.one()), ("xy", field.neg(&w))]))
}

/// ε = xyx + ωx²y + ω²yx².
pub fn epsilon<F: Field>(field: &F) -> Result<FreeElement<F>> {
    let w = field.omega()?;
    let w2 = field.mul(&w, &w);
    Ok(words(field, &[("xyx", field.one()), ("xxy", w), ("yxx", w2)]))
}

fn s_poly<F: Field>(field: &F, text: &str) -> Poly<F> {
    Poly::parse(field, &s_vars(), text).expect("well-formed constant polynomial")
}

/// 3ω(1−ω)·x³y³ + (1+2ω²)·αβ, the coefficient of δ³ in the δ⁶ identity.
pub fn delta_cubed_coefficient<F: Field>(field: &F) -> Result<Poly<F>> {
    field.omega()?;
    Ok(s_poly(field, "3*w*(1 - w)*X3*Y3 + (1 + 2*w^2)*AL*BE"))
}

/// The normal form of δ³ as displayed in the center theorem:
/// γ(b₅ + 2b₄) − βb₇ + 2αb₈ + αb₉ + βb₁₀ + 3b₁₇ + (ω + 2ω²)αβ − 3ω²x³y³.
pub fn delta_cubed_displayed<F: Field>(field: &F) -> Result<GcaElement<F>> {
    field.omega()?;
    let mut coords = vec![Poly::zero(field, &s_vars()); 18];
    coords[0] = s_poly(field, "(w + 2*w^2)*AL*BE - 3*w^2*X3*Y3");
    coords[4] = s_poly(field, "2*GA");
    coords[5] = s_poly(field, "GA");
    coords[7] = s_poly(field, "-BE");
    coords[8] = s_poly(field, "2*AL");
    coords[9] = s_poly(field, "AL");
    coords[10] = s_poly(field, "BE");
    coords[17] = s_poly(field, "3");
    GcaElement::from_coords(coords)
}

/// Normal forms of the distinguished elements over a field with ω.
#[derive(Clone, Debug)]
pub struct Special<F: Field> {
    pub x: GcaElement<F>,
    pub y: GcaElement<F>,
    pub alpha: GcaElement<F>,
    pub beta: GcaElement<F>,
    pub gamma: GcaElement<F>,
    pub delta: GcaElement<F>,
    pub delta3: GcaElement<F>,
    pub epsilon: GcaElement<F>,
    pub epsilon3: GcaElement<F>,
    /// s = δ³ − ½(3ω(1−ω)x³y³ + (1+2ω²)αβ).
    pub s: GcaElement<F>,
}

impl<F: Field> Gca<F> {
    pub fn special(&self) -> Result<Special<F>> {
        let k = self.field();
        let delta = self.reduce(&delta(k)?)?;
        let delta3 = self.pow(&delta, 3)?;
        let epsilon = self.reduce(&epsilon(k)?)?;
        let epsilon3 = self.pow(&epsilon, 3)?;
        let half = k.inv(&k.from_i64(2))?;
        let shift = GcaElement::from_poly(delta_cubed_coefficient(k)?.scale(&half));
        let s = &delta3 - &shift;
        Ok(Special {
            x: self.reduce(&FreeElement::x(k))?,
            y: self.reduce(&FreeElement::y(k))?,
            alpha: self.reduce(&alpha(k))?,
            beta: self.reduce(&beta(k))?,
            gamma: self.reduce(&gamma(k))?,
            delta,
            delta3,
            epsilon,
            epsilon3,
            s,
        })
    }

    /// Check the commutation rules of δ, the δ⁶ identity, s² = γ³ + ¼Δ and
    /// the commutation rules of ε.
    pub fn verify_center_identities(&self) -> Result<Report> {
        let k = self.field();
        let sp = self.special()?;
        let w = k.omega()?;
        let w2 = k.mul(&w, &w);
        let poly = |t: &str| GcaElement::from_poly(s_poly(k, t));
        let mut report = Report::new();

        let mut record = |name: &str, diffs: Vec<GcaElement<F>>| {
            match diffs.iter().find(|d| !d.is_zero()) {
                Some(d) => report.push(name, false, d),
                None => report.push(name, true, "0"),
            }
        };

        // δx = ω²xδ + α and yδ = ω²δy + β
        let dx = &self.mul(&sp.delta, &sp.x)? - &(&self.mul(&sp.x, &sp.delta)?.scale(&w2) + &sp.alpha);
        let yd = &self.mul(&sp.y, &sp.delta)? - &(&self.mul(&sp.delta, &sp.y)?.scale(&w2) + &sp.beta);
        record("delta_commutation", vec![dx, yd]);

        // δ⁶ = (3ω(1−ω)x³y³ + (1+2ω²)αβ)δ³ + γ³ − x³β³ − y³α³ + α²β²
        let d6 = self.mul(&sp.delta3, &sp.delta3)?;
        let rhs = &sp.delta3.scale_poly(&delta_cubed_coefficient(k)?)?
            + &poly("GA^3 - X3*BE^3 - Y3*AL^3 + AL^2*BE^2");
        record("delta_sixth_power", vec![&d6 - &rhs]);

        // s² = γ³ + ¼Δ
        let quarter = k.inv(&k.from_i64(4))?;
        let s2 = self.mul(&sp.s, &sp.s)?;
        let rhs = &poly("GA^3") + &GcaElement::from_poly(discriminant_poly(k).scale(&quarter));
        record("s_squared", vec![&s2 - &rhs]);

        // εx = ωxε and εy = ωyε + γ − ωγ
        let ex = &self.mul(&sp.epsilon, &sp.x)? - &self.mul(&sp.x, &sp.epsilon)?.scale(&w);
        let ey = &self.mul(&sp.epsilon, &sp.y)?
            - &(&(&self.mul(&sp.y, &sp.epsilon)?.scale(&w) + &sp.gamma) - &sp.gamma.scale(&w));
        record("epsilon_commutation", vec![ex, ey]);

        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{CyclotomicOmega, PrimeField};

    #[test]
    fn identities_over_f7_both_roots() {
        for w in [2, 4] {
            let k = PrimeField::with_omega(7, w).unwrap();
            let r = Gca::new(&k).unwrap().verify_center_identities().unwrap();
            assert!(r.all_pass(), "{:?}", r.first_failure());
            assert_eq!(r.passed(), 4);
        }
    }

    #[test]
    fn delta_cubed_matches_display() {
        let k = CyclotomicOmega;
        let a = Gca::new(&k).unwrap();
        let sp = a.special().unwrap();
        assert_eq!(sp.delta3, delta_cubed_displayed(&k).unwrap(), "{}", sp.delta3);
    }
}

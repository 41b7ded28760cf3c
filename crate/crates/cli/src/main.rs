//! Command-line front end.
//!
//! Every subcommand prints one JSON document (sorted keys) or, for `orbits`,
//! a CSV table. Exit status: 0 success, 1 domain error or failed check,
//! 2 usage error.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cubic_clifford::cliffordf::{
    brauer_triviality_probe, check_clifford_iso, gamma_independence_check, symbol_relations_check,
    BrauerProbe,
};
use cubic_clifford::curves::{self, construct_cover_point, jacobian_of, EllipticCurve};
use cubic_clifford::expr::parse_scalar;
use cubic_clifford::forms::{diagonalize, orbit_enumerate, stabilizer, BinaryCubicForm};
use cubic_clifford::gca::Gca;
use cubic_clifford::gl2::Gl2;
use cubic_clifford::report::Report;
use cubic_clifford::{CyclotomicOmega, Error, Field, FieldSpec, Rationals};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "cubic-clifford", version, about = "Binary cubic forms and their Clifford algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of an expression in x, y (and w for ω).
    Reduce(Opts),
    /// The commutation, δ⁶, s² and ε identities of the center.
    VerifyIdentities(Opts),
    /// Discriminant of a form.
    Disc(Opts),
    /// Image of a form under a matrix.
    Act(Opts),
    /// Diagonalizing transform of a form.
    Diagonalize(Opts),
    /// Stabilizer of a form in GL₂.
    Stab(Opts),
    /// GL₂-orbits of forms over a prime field.
    Orbits(Opts),
    /// The Jacobian s² = γ³ + Δ/4.
    Jacobian(Opts),
    /// The subgroup {∞, (0, ±√A)}.
    Torsion(Opts),
    /// Kernel of λ = θ − 1 by exhaustive scan.
    LambdaKernel(Opts),
    /// Search for a point of w³ = f(u, v).
    PointSearch(Opts),
    /// A point on one of the four opens of the cover.
    CoverPoint(Opts),
    /// Check the algebra map induced by a matrix.
    CliffordIso(Opts),
    /// The ε relations in the Clifford algebra of a form.
    SymbolCheck(Opts),
    /// Look for a witness that the class of the Clifford algebra is trivial.
    BrauerProbe(Opts),
    /// Independence of γ^j·bᵢ in the Clifford algebra of a form.
    GammaFree(Opts),
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldKind {
    #[value(name = "Q")]
    Q,
    #[value(name = "Qw")]
    Qw,
    #[value(name = "Fp")]
    Fp,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Clone)]
struct Opts {
    #[arg(long, value_enum, default_value = "Qw")]
    field: FieldKind,
    /// Prime for `--field Fp`, p ≡ 1 (mod 3).
    #[arg(long)]
    p: Option<u64>,
    /// Cube root of unity for `--field Fp`.
    #[arg(long)]
    omega: Option<u64>,
    /// Form coefficients c0,c1,c2,c3.
    #[arg(long)]
    coeffs: Option<String>,
    /// Read the coefficients as a,b,c,d of au³ + 3bu²v + 3cuv² + dv³.
    #[arg(long)]
    threes: bool,
    #[arg(long)]
    expr: Option<String>,
    /// Matrix entries a,b,c,d of (a b; c d).
    #[arg(long)]
    matrix: Option<String>,
    /// Curve constant A (torsion, lambda-kernel) instead of a form.
    #[arg(long)]
    a: Option<String>,
    /// Which open of the cover (1 to 4).
    #[arg(long)]
    which: Option<u8>,
    /// Height bound for point searches; degree bound for gamma-free.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Seed for a random matrix when --matrix is absent.
    #[arg(long)]
    seed: Option<u64>,
    /// Only nondegenerate forms (orbits).
    #[arg(long)]
    nondegenerate: bool,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

enum Output {
    Json(Value),
    /// A JSON report whose failure makes the exit status 1.
    Checked(Value, bool),
    Text(String),
}

type Outcome = Result<Output, Failure>;

fn usage(flag: &str, msg: impl std::fmt::Display) -> Failure {
    Failure::Usage(format!("{flag}: {msg}"))
}

impl Opts {
    fn spec(&self) -> Result<FieldSpec, Failure> {
        let kind = match self.field {
            FieldKind::Q => "Q",
            FieldKind::Qw => "Qw",
            FieldKind::Fp => "Fp",
        };
        if !matches!(self.field, FieldKind::Fp) && (self.p.is_some() || self.omega.is_some()) {
            return Err(usage("--p", "only meaningful with --field Fp"));
        }
        FieldSpec::parse(kind, self.p, self.omega).map_err(|e| match self.p {
            None => usage("--p", e),
            Some(_) => usage("--p/--omega", e),
        })
    }

    fn scalars<F: Field>(&self, k: &F, flag: &str, text: &Option<String>, n: usize) -> Result<Vec<F::Elem>, Failure> {
        let text = text.as_deref().ok_or_else(|| usage(flag, "required"))?;
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != n {
            return Err(usage(flag, format!("expected {n} comma-separated values")));
        }
        parts
            .iter()
            .map(|s| parse_scalar(k, s).map_err(|e| usage(flag, e)))
            .collect()
    }

    fn form<F: Field>(&self, k: &F) -> Result<BinaryCubicForm<F>, Failure> {
        let c: [F::Elem; 4] = self
            .scalars(k, "--coeffs", &self.coeffs, 4)?
            .try_into()
            .map_err(|_| usage("--coeffs", "expected 4 values"))?;
        Ok(if self.threes {
            BinaryCubicForm::from_threes(k, c)
        } else {
            BinaryCubicForm::new(k, c)
        })
    }

    fn matrix<F: Field>(&self, k: &F) -> Result<Gl2<F>, Failure> {
        if self.matrix.is_none() {
            if let Some(seed) = self.seed {
                return Ok(Gl2::random(k, &mut ChaCha8Rng::seed_from_u64(seed)));
            }
        }
        let [a, b, c, d]: [F::Elem; 4] = self
            .scalars(k, "--matrix", &self.matrix, 4)?
            .try_into()
            .map_err(|_| usage("--matrix", "expected 4 values"))?;
        Gl2::new(k, a, b, c, d).map_err(Failure::Domain)
    }

    fn curve<F: Field>(&self, k: &F) -> Result<EllipticCurve<F>, Failure> {
        if self.a.is_some() {
            let a = self.scalars(k, "--a", &self.a, 1)?.remove(0);
            return Ok(EllipticCurve::new(k, a)?);
        }
        Ok(jacobian_of(&self.form(k)?)?)
    }

    fn json_only(&self) -> Result<(), Failure> {
        if self.format == Some(Format::Csv) {
            return Err(usage("--format", "csv is only available for orbits"));
        }
        Ok(())
    }
}

fn report_output(field: Value, report: &Report, extra: Value) -> Output {
    let mut v = json!({"field": field, "report": report.to_json()});
    if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
        m.extend(e);
    }
    Output::Checked(v, report.all_pass())
}

fn run<F: Field>(k: &F, cmd: &Command, o: &Opts) -> Outcome {
    let spec = json!(k.spec());
    let gca = || Gca::new(k);
    Ok(match cmd {
        Command::Reduce(_) => {
            let text = o.expr.as_deref().ok_or_else(|| usage("--expr", "required"))?;
            let nf = gca()?.reduce_text(text).map_err(|e| match e {
                Error::Syntax { .. } | Error::UnknownSymbol { .. } => usage("--expr", e),
                other => Failure::Domain(other),
            })?;
            let mut v = nf.to_json();
            v["field"] = spec;
            v["normal_form"] = json!(nf.to_string());
            Output::Json(v)
        }
        Command::VerifyIdentities(_) => {
            let r = gca()?.verify_center_identities()?;
            report_output(spec, &r, json!({}))
        }
        Command::Disc(_) => {
            let f = o.form(k)?;
            let d = f.discriminant();
            let class = if k.is_zero(&d) {
                Value::Null
            } else {
                json!(k.power_class_token(&d, 6)?)
            };
            Output::Json(json!({"form": f.to_json(), "delta": k.to_json(&d), "delta_class6": class}))
        }
        Command::Act(_) => {
            let f = o.form(k)?;
            let g = o.matrix(k)?;
            Output::Json(json!({"form": f.to_json(), "matrix": g.to_json(), "image": f.act(&g)?.to_json()}))
        }
        Command::Diagonalize(_) => {
            let f = o.form(k)?;
            let d = diagonalize(&f)?;
            let hessian = d.hessian.as_ref().map(|h| {
                json!({"r": k.to_json(&h.r), "s": k.to_json(&h.s), "t": k.to_json(&h.t), "D": k.to_json(&h.d)})
            });
            Output::Json(json!({
                "form": f.to_json(),
                "transform": d.transform.to_json(),
                "det": k.to_json(&d.transform.det()),
                "diagonal": d.diagonal.to_json(),
                "hessian": hessian,
                "swapped": d.swapped,
            }))
        }
        Command::Stab(_) => {
            let f = o.form(k)?;
            let st = stabilizer(&f)?;
            Output::Json(json!({
                "form": f.to_json(),
                "order": st.len(),
                "elements": st.iter().map(Gl2::to_json).collect::<Vec<_>>(),
            }))
        }
        Command::Orbits(_) => {
            let orbits = orbit_enumerate(k, o.nondegenerate)?;
            if o.format == Some(Format::Json) {
                let rows: Vec<Value> = orbits
                    .iter()
                    .map(|r| {
                        json!({
                            "representative": r.representative.to_json_coeffs(),
                            "size": r.size,
                            "stabilizer_order": r.stabilizer_order,
                            "delta": k.to_json(&r.delta),
                            "delta_class6": r.delta_class6,
                            "has_point": r.has_point,
                        })
                    })
                    .collect();
                Output::Json(json!({"field": spec, "count": rows.len(), "orbits": rows}))
            } else {
                let mut out = String::from("representative,size,stabilizer_order,delta,delta_class6,has_point\n");
                for r in &orbits {
                    let rep: Vec<String> = r.representative.coeffs().iter().map(|c| k.format(c)).collect();
                    out.push_str(&format!(
                        "{},{},{},{},{},{}\n",
                        rep.join(" "),
                        r.size,
                        r.stabilizer_order,
                        k.format(&r.delta),
                        r.delta_class6,
                        r.has_point
                    ));
                }
                Output::Text(out)
            }
        }
        Command::Jacobian(_) => {
            let f = o.form(k)?;
            let e = jacobian_of(&f)?;
            Output::Json(json!({"form": f.to_json(), "A": k.to_json(e.a()), "j": k.to_json(&e.j_invariant())}))
        }
        Command::Torsion(_) => {
            let e = o.curve(k)?;
            let t = e.torsion_t();
            Output::Json(json!({
                "A": k.to_json(e.a()),
                "size": t.len(),
                "points": t.iter().map(|p| p.to_json()).collect::<Vec<_>>(),
            }))
        }
        Command::LambdaKernel(_) => {
            let e = o.curve(k)?;
            let ker = e.lambda_kernel()?;
            let t = e.torsion_t();
            let agrees = ker.len() == t.len() && t.iter().all(|p| ker.contains(p));
            Output::Checked(
                json!({
                    "A": k.to_json(e.a()),
                    "kernel": ker.iter().map(|p| p.to_json()).collect::<Vec<_>>(),
                    "size": ker.len(),
                    "torsion_size": t.len(),
                    "agrees_with_torsion": agrees,
                }),
                agrees,
            )
        }
        Command::PointSearch(_) => {
            let f = o.form(k)?;
            let budget = o.budget.unwrap_or(curves::DEFAULT_HEIGHT);
            let found = curves::point_search(&f, budget);
            Output::Json(json!({
                "form": f.to_json(),
                "budget": budget,
                "status": if found.is_some() { "Found" } else { "AbsentWithinBudget" },
                "point": found.map(|p| p.to_json()),
            }))
        }
        Command::CoverPoint(_) => unreachable!("dispatched on the prime field"),
        Command::CliffordIso(_) => {
            let f = o.form(k)?;
            let g = o.matrix(k)?;
            let c = check_clifford_iso(&gca()?, &g, &f)?;
            report_output(
                spec,
                &c.report,
                json!({
                    "matrix": g.to_json(),
                    "gamma_factor": c.gamma_factor.as_ref().map(|x| k.to_json(x)),
                    "det_squared": k.to_json(&c.det_squared),
                }),
            )
        }
        Command::SymbolCheck(_) => {
            let f = o.form(k)?;
            let r = symbol_relations_check(&gca()?, &f)?;
            report_output(spec, &r, json!({"form": f.to_json()}))
        }
        Command::BrauerProbe(_) => {
            let f = o.form(k)?;
            let budget = o.budget.unwrap_or(curves::DEFAULT_HEIGHT);
            let v = match brauer_triviality_probe(&f, budget)? {
                BrauerProbe::TrivialWithWitness(p) => json!({"status": "TrivialWithWitness", "witness": p.to_json()}),
                BrauerProbe::UnknownWithinBudget => json!({"status": "UnknownWithinBudget", "witness": null}),
            };
            Output::Json(json!({"form": f.to_json(), "budget": budget, "result": v}))
        }
        Command::GammaFree(_) => {
            let f = o.form(k)?;
            let bound = o.budget.unwrap_or(2);
            let bound = u32::try_from(bound).map_err(|_| usage("--budget", "too large"))?;
            let independent = gamma_independence_check(&gca()?, &f, bound)?;
            Output::Checked(
                json!({"form": f.to_json(), "degree_bound": bound, "independent": independent}),
                independent,
            )
        }
    })
}

fn cover_point(o: &Opts, spec: FieldSpec) -> Outcome {
    let k = spec
        .prime_field()
        .ok_or_else(|| usage("--field", "cover-point needs --field Fp"))?;
    let which = o.which.ok_or_else(|| usage("--which", "required (1 to 4)"))?;
    if !(1..=4).contains(&which) {
        return Err(usage("--which", "must be 1, 2, 3 or 4"));
    }
    let f = o.form(&k)?;
    let p = construct_cover_point(&f, which)?;
    Ok(Output::Json(json!({"form": f.to_json(), "which": which, "point": p.to_json(), "verified": p.verify(&f)})))
}

fn dispatch(cmd: &Command) -> Outcome {
    let o = match cmd {
        Command::Reduce(o)
        | Command::VerifyIdentities(o)
        | Command::Disc(o)
        | Command::Act(o)
        | Command::Diagonalize(o)
        | Command::Stab(o)
        | Command::Orbits(o)
        | Command::Jacobian(o)
        | Command::Torsion(o)
        | Command::LambdaKernel(o)
        | Command::PointSearch(o)
        | Command::CoverPoint(o)
        | Command::CliffordIso(o)
        | Command::SymbolCheck(o)
        | Command::BrauerProbe(o)
        | Command::GammaFree(o) => o,
    };
    if !matches!(cmd, Command::Orbits(_)) {
        o.json_only()?;
    }
    let spec = o.spec()?;
    if matches!(cmd, Command::CoverPoint(_)) {
        return cover_point(o, spec);
    }
    match spec {
        FieldSpec::Rationals => run(&Rationals, cmd, o),
        FieldSpec::CyclotomicOmega => run(&CyclotomicOmega, cmd, o),
        FieldSpec::PrimeField { .. } => run(&spec.prime_field().expect("prime field"), cmd, o),
    }
}

/// Write to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json(v: &Value) {
    emit(&format!("{}\n", serde_json::to_string_pretty(v).expect("serializable")));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli.command) {
        Ok(Output::Json(v)) => {
            print_json(&v);
            ExitCode::SUCCESS
        }
        Ok(Output::Checked(v, ok)) => {
            print_json(&v);
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Ok(Output::Text(t)) => {
            emit(&t);
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            print_json(&json!({"error": {"code": e.code(), "message": e.to_string()}}));
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

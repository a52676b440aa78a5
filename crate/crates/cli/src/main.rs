use std::fmt::Display;
use std::io::{self, Write};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use reciprocity::characters::{
    char_make, gauss_jacobi_relation_check, gauss_magnitude_check, gauss_sum, jacobi_sum,
    ring_for_order, supported_characters,
};
use reciprocity::cubic::{
    cubic_gauss_cube_check, pi_mod_two_criterion, supplement_omega, supplement_one_minus_omega,
    two_as_cubic_residue, CubicCharCtx,
};
use reciprocity::eisenstein::{classify_prime, EisensteinInt, PrimeClassification};
use reciprocity::field::{count_irreducibles, ext_make, order_census};
use reciprocity::gaussian::{biquadratic_char, GaussianInt};
use reciprocity::integers::{lcm, legendre, mobius, quadratic_reciprocity, totient};
use reciprocity::literal::ParseLiteralError;
use reciprocity::sweep::{self, Law, SweepOptions, SweepReport};
use reciprocity::Error;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "reciprocity", version, about = "Exact checks of power residue reciprocity laws")]
struct Cli {
    /// Print one JSON object per result; integers are decimal strings.
    #[arg(long, global = true)]
    json: bool,
    /// Print sweep reports as CSV.
    #[arg(long, global = true, conflicts_with = "json")]
    csv: bool,
    /// Worker threads for sweeps.
    #[arg(long, global = true, value_name = "J")]
    jobs: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, global = true, value_name = "S", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Legendre symbol (a/p).
    Legendre {
        #[arg(allow_hyphen_values = true)]
        a: i64,
        p: u64,
    },
    /// Quadratic reciprocity and both supplements for odd primes p != q.
    QrCheck { p: u64, q: u64 },
    /// Moebius function.
    Mobius { n: u64 },
    /// Number of monic irreducibles of degree n over F_p.
    CountIrreducibles { p: u64, n: u32 },
    /// Number of elements of each order in F_{p^n}.
    FieldCensus { p: u64, n: u32 },
    /// Quadratic Gauss sum checks in F_{q^n}, n = ord_p(q).
    Hausner { p: u64, q: u64 },
    /// Eisenstein integer utilities.
    Eis {
        #[command(subcommand)]
        op: EisOp,
    },
    /// Cubic residue character chi_pi(alpha).
    CubicChar {
        #[arg(allow_hyphen_values = true)]
        pi: String,
        #[arg(allow_hyphen_values = true)]
        alpha: String,
    },
    /// Cubic reciprocity sweep over primary primes.
    CubicVerify(MaxNorm),
    /// Closed forms for chi_pi(w) and chi_pi(1 - w) against direct evaluation.
    Supplement {
        which: SupplementKind,
        #[arg(allow_hyphen_values = true)]
        pi: String,
    },
    /// Whether 2 is a cube mod p, three ways.
    TwoCubic { p: u64 },
    /// Gauss sum g_a(chi) for the character of order k.
    GaussSum {
        p: u64,
        k: u64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        a: i64,
    },
    /// Jacobi sum of the characters of orders k1 and k2.
    JacobiSum { p: u64, k1: u64, k2: u64 },
    /// One Gauss or Jacobi sum identity.
    IdentityCheck {
        which: Identity,
        p: u64,
        k: Option<u64>,
    },
    /// Biquadratic residue character chi_pi(alpha).
    BiquadChar {
        #[arg(allow_hyphen_values = true)]
        pi: String,
        #[arg(allow_hyphen_values = true)]
        alpha: String,
    },
    /// Biquadratic reciprocity sweep over primary primes.
    BiquadVerify(MaxNorm),
    /// Any sweep by name.
    Verify {
        law: LawArg,
        /// Defaults to the acceptance bound of the law.
        #[arg(long)]
        bound: Option<u64>,
    },
}

#[derive(Args)]
struct MaxNorm {
    #[arg(long, default_value_t = 10_000)]
    max_norm: u64,
}

#[derive(Subcommand)]
enum EisOp {
    /// Decomposition of a rational prime.
    Split { p: u64 },
    /// Primary associate and the unit reaching it.
    Primary {
        #[arg(allow_hyphen_values = true)]
        alpha: String,
    },
    /// Norm a^2 - ab + b^2.
    Norm {
        #[arg(allow_hyphen_values = true)]
        alpha: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SupplementKind {
    Omega,
    OneMinusOmega,
}

#[derive(Clone, Copy, ValueEnum)]
enum Identity {
    Magnitude,
    JacobiRelation,
    GaussCube,
}

#[derive(Clone, Copy)]
struct LawArg(Law);

impl FromStr for LawArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        s.parse::<Law>().map(LawArg).map_err(|_| {
            let names: Vec<&str> = Law::ALL.iter().map(|l| l.name()).collect();
            format!("expected one of {}", names.join(", "))
        })
    }
}

enum Failure {
    Usage(String),
    Resource(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Resource(_) => Failure::Resource(e.to_string()),
            Error::Internal(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

/// A finished command: JSON and text renderings, and whether it verified.
struct Output {
    json: Value,
    text: String,
    ok: bool,
    report: Option<SweepReport>,
}

impl Output {
    fn value(json: Value, text: impl Display) -> Self {
        Self { json, text: text.to_string(), ok: true, report: None }
    }

    fn verdict(json: Value, text: impl Display, ok: bool) -> Self {
        Self { json, text: text.to_string(), ok, report: None }
    }
}

fn s(x: impl Display) -> Value {
    Value::String(x.to_string())
}

fn literal<T: FromStr<Err = ParseLiteralError>>(input: &str, what: &str) -> CliResult<T> {
    input.parse::<T>().map_err(|e| {
        Failure::Usage(format!(
            "invalid {what} literal at position {}: {}\n  {input}\n  {}^",
            e.position,
            e.message,
            " ".repeat(e.position)
        ))
    })
}

fn sweep_output(law: Law, bound: u64, cli: &Cli) -> CliResult<Output> {
    let report = sweep::run(law, bound, SweepOptions { jobs: cli.jobs, seed: cli.seed })?;
    let mut text = format!(
        "{}: bound {}, {} cases, {} failures, {} ms",
        report.law,
        report.bound,
        report.cases_checked,
        report.failures.len(),
        report.elapsed_ms
    );
    for f in &report.failures {
        text.push_str(&format!("\n  FAIL {}: {}", f.case.join(" "), f.detail));
    }
    let json = serde_json::to_value(&report).map_err(|e| Failure::Internal(e.to_string()))?;
    let ok = report.passed();
    Ok(Output { json, text, ok, report: Some(report) })
}

fn eis_split(p: u64) -> CliResult<Output> {
    Ok(match classify_prime(p)? {
        PrimeClassification::Split { pi, pi_conj } => Output::value(
            json!({"p": s(p), "class": "split", "pi": s(pi), "conj": s(pi_conj)}),
            format!("{p} = ({pi}) * ({pi_conj})  [split]"),
        ),
        PrimeClassification::Inert { q } => Output::value(
            json!({"p": s(p), "class": "inert", "pi": s(q)}),
            format!("{q} is inert"),
        ),
        PrimeClassification::Ramified { unit, pi } => Output::value(
            json!({"p": s(p), "class": "ramified", "unit": s(unit), "pi": s(pi)}),
            format!("{p} = ({unit}) * ({pi})^2  [ramified]"),
        ),
    })
}

fn cubic_char_cmd(pi: &str, alpha: &str) -> CliResult<Output> {
    let pi: EisensteinInt = literal(pi, "Eisenstein")?;
    let alpha: EisensteinInt = literal(alpha, "Eisenstein")?;
    let v = CubicCharCtx::new(&pi)?.eval(&alpha)?;
    Ok(Output::value(json!({"pi": s(pi), "alpha": s(alpha), "value": s(v)}), v))
}

fn supplement_cmd(which: SupplementKind, pi: &str) -> CliResult<Output> {
    let pi: EisensteinInt = literal(pi, "Eisenstein")?;
    let ctx = CubicCharCtx::new(&pi)?;
    let (name, closed, arg) = match which {
        SupplementKind::Omega => ("omega", supplement_omega(&ctx), EisensteinInt::OMEGA),
        SupplementKind::OneMinusOmega => (
            "one-minus-omega",
            supplement_one_minus_omega(&ctx)?,
            EisensteinInt::ONE_MINUS_OMEGA,
        ),
    };
    let direct = ctx.eval(&arg)?;
    let ok = closed == direct;
    Ok(Output::verdict(
        json!({"pi": s(pi), "supplement": name, "closed_form": s(closed), "direct": s(direct), "agree": ok}),
        format!("chi_{pi}({arg}) = {direct}; closed form {closed}"),
        ok,
    ))
}

fn two_cubic_cmd(p: u64) -> CliResult<Output> {
    let form = two_as_cubic_residue(p)?;
    let pi = match classify_prime(p)? {
        PrimeClassification::Split { pi, .. } => pi,
        _ => return Err(Failure::Usage(format!("{p} is not a prime = 1 (mod 3)"))),
    };
    let chi = CubicCharCtx::new(&pi)?.eval(&EisensteinInt::from_int(2))?;
    let by_char = chi == reciprocity::cubic::CubicValue::One;
    let by_pi = pi_mod_two_criterion(&pi)?;
    let ok = form.solvable == by_char && by_char == by_pi;
    let (c, d) = match form.rep {
        Some((c, d)) => (s(c), s(d)),
        None => (Value::Null, Value::Null),
    };
    let text = match form.rep {
        Some((c, d)) => format!("{p} = {c}^2 + 27*{d}^2; 2 is a cube mod {p} (chi_{pi}(2) = {chi})"),
        None => format!("{p} is not C^2 + 27 D^2; 2 is not a cube mod {p} (chi_{pi}(2) = {chi})"),
    };
    Ok(Output::verdict(
        json!({"p": s(p), "solvable": form.solvable, "C": c, "D": d, "pi": s(pi),
               "chi_pi_2": s(chi), "pi_mod_two": by_pi, "consistent": ok}),
        text,
        ok,
    ))
}

fn gauss_sum_cmd(p: u64, k: u64, a: i64) -> CliResult<Output> {
    let chi = char_make(p, k)?;
    let g = gauss_sum(&chi, a)?;
    let z = g.to_complex();
    Ok(Output::value(
        json!({"p": s(p), "k": s(k), "a": s(a), "exponent": s(chi.exponent()), "value": s(&g),
               "approx": [z.re, z.im]}),
        format!("{g}  (~ {:.9} {:+.9}i)", z.re, z.im),
    ))
}

fn jacobi_sum_cmd(p: u64, k1: u64, k2: u64) -> CliResult<Output> {
    let v = jacobi_sum(&char_make(p, k1)?, &char_make(p, k2)?)?;
    Ok(Output::value(json!({"p": s(p), "k1": s(k1), "k2": s(k2), "value": s(v)}), v))
}

fn identity_cmd(which: Identity, p: u64, k: Option<u64>) -> CliResult<Output> {
    let chars = |k: Option<u64>| -> CliResult<Vec<_>> {
        Ok(match k {
            Some(k) => vec![char_make(p, k)?],
            None => supported_characters(p)?.into_iter().filter(|c| !c.is_trivial()).collect(),
        })
    };
    let (name, checked, ok) = match which {
        Identity::Magnitude => {
            let cs = chars(k)?;
            let mut ok = true;
            for c in &cs {
                ok &= gauss_magnitude_check(c)?;
            }
            ("magnitude", cs.len(), ok)
        }
        Identity::JacobiRelation => {
            let lams: Vec<_> = supported_characters(p)?.into_iter().filter(|c| !c.is_trivial()).collect();
            let mut n = 0;
            let mut ok = true;
            for chi in chars(k)? {
                for lam in &lams {
                    let prod = chi.mul(lam)?;
                    if prod.is_trivial() || ring_for_order(lcm(chi.order(), lam.order())).is_err() {
                        continue;
                    }
                    ok &= gauss_jacobi_relation_check(&chi, lam)?;
                    n += 1;
                }
            }
            ("jacobi-relation", n, ok)
        }
        Identity::GaussCube => {
            if k.is_some_and(|k| k != 3) {
                return Err(Failure::Usage("gauss-cube is about the cubic character (k = 3)".into()));
            }
            ("gauss-cube", 1, cubic_gauss_cube_check(p)?)
        }
    };
    Ok(Output::verdict(
        json!({"identity": name, "p": s(p), "cases": s(checked), "holds": ok}),
        format!("{name} at p = {p}: {} ({checked} cases)", if ok { "holds" } else { "FAILS" }),
        ok,
    ))
}

fn biquad_char_cmd(pi: &str, alpha: &str) -> CliResult<Output> {
    let pi: GaussianInt = literal(pi, "Gaussian")?;
    let alpha: GaussianInt = literal(alpha, "Gaussian")?;
    let v = biquadratic_char(&pi, &alpha)?;
    Ok(Output::value(json!({"pi": s(pi), "alpha": s(alpha), "value": s(v)}), v))
}

fn dispatch(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Legendre { a, p } => {
            let v = legendre(*a, *p)?;
            Ok(Output::value(json!({"a": s(a), "p": s(p), "symbol": s(v)}), v))
        }
        Command::QrCheck { p, q } => {
            let r = quadratic_reciprocity(*p, *q)?;
            Ok(Output::verdict(
                json!({"p": s(p), "q": s(q), "p_over_q": s(r.p_over_q), "q_over_p": s(r.q_over_p),
                       "law": r.law, "first_supplement": r.first_supplement,
                       "second_supplement": r.second_supplement}),
                format!(
                    "({p}/{q}) = {}, ({q}/{p}) = {}; law {}, supplements {} {}",
                    r.p_over_q, r.q_over_p, r.law, r.first_supplement, r.second_supplement
                ),
                r.all_hold(),
            ))
        }
        Command::Mobius { n } => {
            let v = mobius(*n)?;
            Ok(Output::value(json!({"n": s(n), "mu": s(v)}), v))
        }
        Command::CountIrreducibles { p, n } => {
            let v = count_irreducibles(*p, *n)?;
            Ok(Output::value(json!({"p": s(p), "n": s(n), "count": s(v)}), v))
        }
        Command::FieldCensus { p, n } => {
            let census = order_census(&ext_make(*p, *n)?)?;
            let mut ok = true;
            let mut text = Vec::new();
            let mut obj = serde_json::Map::new();
            for (&d, &c) in &census {
                ok &= c == totient(d)?;
                text.push(format!("{d}: {c}"));
                obj.insert(d.to_string(), s(c));
            }
            Ok(Output::verdict(
                json!({"p": s(p), "n": s(n), "census": obj, "matches_phi": ok}),
                text.join("\n"),
                ok,
            ))
        }
        Command::Hausner { p, q } => {
            let r = reciprocity::field::hausner_check(*p, *q)?;
            Ok(Output::verdict(
                json!({"p": s(r.p), "q": s(r.q), "n": s(r.n), "tau_sq": r.tau_sq_ok,
                       "tau_q": r.tau_q_ok, "qr_consistent": r.qr_consistent}),
                format!(
                    "F_{q}^{}: tau^2 = p* {}, tau^q = (q/p) tau {}, (p*/q) = (q/p) {}",
                    r.n, r.tau_sq_ok, r.tau_q_ok, r.qr_consistent
                ),
                r.all_ok(),
            ))
        }
        Command::Eis { op } => match op {
            EisOp::Split { p } => eis_split(*p),
            EisOp::Primary { alpha } => {
                let z: EisensteinInt = literal(alpha, "Eisenstein")?;
                let (unit, primary) = z.primary_associate()?;
                Ok(Output::value(
                    json!({"alpha": s(z), "unit": s(unit), "primary": s(primary)}),
                    format!("{primary} = ({unit}) * ({z})"),
                ))
            }
            EisOp::Norm { alpha } => {
                let z: EisensteinInt = literal(alpha, "Eisenstein")?;
                Ok(Output::value(json!({"alpha": s(z), "norm": s(z.norm())}), z.norm()))
            }
        },
        Command::CubicChar { pi, alpha } => cubic_char_cmd(pi, alpha),
        Command::CubicVerify(m) => sweep_output(Law::Cubic, m.max_norm, cli),
        Command::Supplement { which, pi } => supplement_cmd(*which, pi),
        Command::TwoCubic { p } => two_cubic_cmd(*p),
        Command::GaussSum { p, k, a } => gauss_sum_cmd(*p, *k, *a),
        Command::JacobiSum { p, k1, k2 } => jacobi_sum_cmd(*p, *k1, *k2),
        Command::IdentityCheck { which, p, k } => identity_cmd(*which, *p, *k),
        Command::BiquadChar { pi, alpha } => biquad_char_cmd(pi, alpha),
        Command::BiquadVerify(m) => sweep_output(Law::Biquadratic, m.max_norm, cli),
        Command::Verify { law, bound } => sweep_output(law.0, bound.unwrap_or(law.0.default_bound()), cli),
    }
}

fn write_csv(report: &SweepReport) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(io::stdout());
    w.write_record(["law", "bound", "cases_checked", "elapsed_ms", "case", "detail"])?;
    let head = [
        report.law.to_string(),
        report.bound.to_string(),
        report.cases_checked.to_string(),
        report.elapsed_ms.to_string(),
    ];
    if report.failures.is_empty() {
        w.write_record(head.iter().map(String::as_str).chain(["", ""]))?;
    }
    for f in &report.failures {
        let case = f.case.join(" ");
        w.write_record(head.iter().map(String::as_str).chain([case.as_str(), f.detail.as_str()]))?;
    }
    w.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match dispatch(&cli) {
        Ok(out) => out,
        Err(f) => {
            let (msg, code) = match f {
                Failure::Usage(m) => (m, 2),
                Failure::Resource(m) => (m, 3),
                Failure::Internal(m) => (m, 1),
            };
            eprintln!("error: {msg}");
            return ExitCode::from(code);
        }
    };
    let printed = match (&out.report, cli.csv, cli.json) {
        (Some(report), true, _) => write_csv(report).map_err(|e| e.to_string()),
        (None, true, _) => {
            eprintln!("error: --csv applies to sweep reports only");
            return ExitCode::from(2);
        }
        (_, _, true) => writeln!(io::stdout(), "{}", out.json).map_err(|e| e.to_string()),
        _ => writeln!(io::stdout(), "{}", out.text).map_err(|e| e.to_string()),
    };
    if let Err(e) = printed {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    if out.ok { ExitCode::SUCCESS } else { ExitCode::from(1) }
}

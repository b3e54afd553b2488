//! Command-line front-end.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
//! input errors. Big integers are printed as exact decimal strings.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::arith::{is_perfect_square, is_prime, is_squarefree};
use crate::cyclotomic::CycInt;
use crate::error::Error;
use crate::gauss_split::split_fg;
use crate::pell::{classify, solve_cf, solve_dirichlet, DirichletTrace};
use crate::suite::run_suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest prime accepted by `pell` and `decompose` without `--allow-large`.
pub const DEFAULT_P_MAX: u64 = 499;

#[derive(Parser, Debug)]
#[command(name = "cyclopell", version, about = "Exact arithmetic in prime cyclotomic rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve x^2 - p y^2 = 1.
    Pell {
        p: u64,
        #[arg(long, value_enum, default_value_t = Method::Dirichlet)]
        method: Method,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        allow_large: bool,
    },
    /// Print f, g with 4 m_p = f^2 - p* g^2.
    Decompose {
        p: u64,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        allow_large: bool,
    },
    /// Print lambda-digits, primary exponent and the primary associate.
    Normalize {
        p: u64,
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Report unit, reality and primary status of an element.
    CheckUnit {
        p: u64,
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Run the invariant suite for every odd prime up to p_max.
    Verify { p_max: u64 },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Dirichlet,
    Cf,
    Both,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Dirichlet => "dirichlet",
            Method::Cf => "cf",
            Method::Both => "both",
        }
    }
}

/// A failure mapped onto an exit code.
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Internal(_) | Error::NotInGroup => EXIT_VERIFY_FAILED,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_VERIFY_FAILED,
            message: format!("i/o error: {e}"),
        }
    }
}

/// Runs the CLI on `argv` (including the program name) and returns the exit
/// code. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Pell {
            p,
            method,
            json,
            allow_large,
        } => pell(p, method, json, allow_large, out, err),
        Command::Decompose {
            p,
            json,
            allow_large,
        } => decompose(p, json, allow_large, out),
        Command::Normalize { p, coeffs } => normalize(p, &coeffs, out),
        Command::CheckUnit { p, coeffs } => check_unit(p, &coeffs, out),
        Command::Verify { p_max } => verify(p_max, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn guard_size(p: u64, allow_large: bool) -> Result<(), Failure> {
    if p > DEFAULT_P_MAX && !allow_large {
        return Err(usage(format!(
            "{p} exceeds the default limit of {DEFAULT_P_MAX}; pass --allow-large to proceed"
        )));
    }
    Ok(())
}

fn parse_element(p: u64, coeffs: &str) -> Result<CycInt, Failure> {
    if !is_prime(p) || p < 3 || p > u32::MAX as u64 {
        return Err(usage(format!("{p} is not an odd prime")));
    }
    let raw = coeffs
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<BigInt>()
                .map_err(|_| usage(format!("malformed coefficient {s:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CycInt::new(p as u32, raw)?)
}

fn trace_json(t: &DirichletTrace) -> Value {
    let s = |n: &BigInt| Value::String(n.to_string());
    let opt = |n: &Option<BigInt>| n.as_ref().map(s).unwrap_or(Value::Null);
    let gauss = |g: &Option<crate::gauss_split::GaussianInt>| match g {
        Some(g) => json!({ "re": g.re.to_string(), "im": g.im.to_string() }),
        None => Value::Null,
    };
    json!({
        "case": t.case.tag(),
        "f1": s(&t.f1),
        "g1": s(&t.g1),
        "x1": s(t.x1()),
        "y1": s(t.y1()),
        "xi1": s(&t.xi1),
        "y2": s(&t.y2),
        "xi2": s(&t.xi2),
        "y3": opt(&t.y3),
        "xi3": opt(&t.xi3),
        "i_star": gauss(&t.i_star),
        "f_at_i": gauss(&t.f_at_i),
        "g_at_i": gauss(&t.g_at_i),
    })
}

fn pell(
    p: u64,
    method: Method,
    as_json: bool,
    allow_large: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    guard_size(p, allow_large)?;
    if p < 2 || is_perfect_square(p) || !is_squarefree(p) {
        return Err(usage(format!("{p} must be a squarefree integer >= 2")));
    }
    let mut method = method;
    if method != Method::Cf && (p <= 3 || !is_prime(p)) {
        writeln!(
            err,
            "note: the cyclotomic method needs a prime p > 3; using continued fractions for {p}"
        )?;
        method = Method::Cf;
    }

    let fund = solve_cf(p)?;
    let (solution, trace) = match method {
        Method::Cf => (fund.clone(), None),
        Method::Dirichlet | Method::Both => {
            let (s, t) = solve_dirichlet(p)?;
            (s, Some(t))
        }
    };
    let power = classify(&solution, &fund)?;

    if as_json {
        let doc = json!({
            "p": p,
            "method": method.name(),
            "a": solution.a().to_string(),
            "b": solution.b().to_string(),
            "fundamental_power": power,
            "trace": trace.as_ref().map(trace_json).unwrap_or(Value::Null),
        });
        writeln!(out, "{doc}")?;
        return Ok(EXIT_OK);
    }

    writeln!(out, "p = {p}, method = {}", method.name())?;
    writeln!(out, "solution: (a, b) = {solution}")?;
    if let Some(t) = &trace {
        writeln!(out, "case: {}", t.case.tag())?;
        writeln!(out, "f(1) = {}, g(1) = {}, xi1 = {}", t.f1, t.g1, t.xi1)?;
        writeln!(out, "y2 = {}, xi2 = {}", t.y2, t.xi2)?;
        if let (Some(y3), Some(xi3)) = (&t.y3, &t.xi3) {
            writeln!(out, "y3 = {y3}, xi3 = {xi3}")?;
        }
        if let (Some(fi), Some(gi), Some(is)) = (&t.f_at_i, &t.g_at_i, &t.i_star) {
            writeln!(out, "f(i) = {fi}, g(i) = {gi}, i* = {is}")?;
        }
    }
    if method == Method::Both {
        writeln!(out, "continued fraction: {fund}")?;
        writeln!(out, "methods agree: solution = fundamental^{power}")?;
    } else {
        writeln!(out, "power index: {power}")?;
    }
    Ok(EXIT_OK)
}

fn decompose(p: u64, as_json: bool, allow_large: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    guard_size(p, allow_large)?;
    if !is_prime(p) || p < 3 || p > u32::MAX as u64 {
        return Err(usage(format!("{p} is not an odd prime")));
    }
    let split = split_fg(p as u32)?;
    let ok = split.identity_holds();
    if as_json {
        let strings = |poly: &crate::gauss_split::IntPoly| {
            poly.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>()
        };
        let doc = json!({
            "p": p,
            "p_star": split.p_star.to_string(),
            "f": strings(&split.f),
            "g": strings(&split.g),
            "identity": ok,
        });
        writeln!(out, "{doc}")?;
    } else {
        writeln!(out, "p = {p}, p* = {}", split.p_star)?;
        writeln!(out, "f = {}", split.f)?;
        writeln!(out, "g = {}", split.g)?;
        writeln!(
            out,
            "4 m_p = f^2 - p* g^2: {}",
            if ok { "OK" } else { "FAILED" }
        )?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn normalize(p: u64, coeffs: &str, out: &mut dyn Write) -> Result<i32, Failure> {
    let x = parse_element(p, coeffs)?;
    let digits = x.lambda_digits();
    writeln!(out, "element: {x}")?;
    writeln!(out, "lambda digits: a0 = {}, a1 = {}", digits.a0, digits.a1)?;
    let (k, normalized) = x.normalize_primary()?;
    writeln!(out, "primary exponent: {k}")?;
    writeln!(out, "normalized: {normalized}")?;
    let list: Vec<String> = normalized.coeffs().iter().map(|c| c.to_string()).collect();
    writeln!(out, "coefficients: {}", list.join(","))?;
    Ok(EXIT_OK)
}

fn check_unit(p: u64, coeffs: &str, out: &mut dyn Write) -> Result<i32, Failure> {
    let x = parse_element(p, coeffs)?;
    let norm = x.norm()?;
    let unit = x.is_unit()?;
    writeln!(out, "element: {x}")?;
    writeln!(out, "unit: {unit} (norm {norm})")?;
    writeln!(out, "real: {}", x.is_real())?;
    match x.is_primary() {
        Ok(b) => writeln!(out, "primary: {b}")?,
        Err(_) => writeln!(out, "primary: n/a (not prime to lambda)")?,
    }
    if unit {
        writeln!(out, "unit ratio exponent: {}", x.unit_ratio_exponent()?)?;
    } else {
        writeln!(out, "unit ratio exponent: n/a")?;
    }
    Ok(EXIT_OK)
}

fn verify(p_max: u64, out: &mut dyn Write) -> Result<i32, Failure> {
    let results = run_suite(p_max);
    let mut failed = 0;
    for r in &results {
        if r.passed {
            writeln!(out, "ok   p={:<4} {}", r.p, r.name)?;
        } else {
            failed += 1;
            writeln!(out, "FAIL p={:<4} {}: {}", r.p, r.name, r.detail)?;
        }
    }
    writeln!(out, "{} checks, {failed} failed", results.len())?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

/// Used by `main`: the same as [`run`] against the process streams.
pub fn main_with_args() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

//! `quintic`: solve quintics, evaluate invariants and run the exact
//! certificates from the command line.

use std::io::{self, BufRead, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::value::RawValue;

use quintic_core::icosa::{icos_i, ExtComplex};
use quintic_core::invariantmap::formulas::resolvent_products;
use quintic_core::invariantmap::{ResolventValues, DEGENERACY};
use quintic_core::inverter::invert_icosahedral_traced;
use quintic_core::quintic::{nabla, CanonicalQuintic};
use quintic_core::{bjseries, certify, solve, Error, GeneralQuintic64, Solution64, SolveMethod};

#[derive(Parser)]
#[command(name = "quintic", version, about = "Icosahedral solution of the quintic")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Roots of x^5 + a1 x^4 + a2 x^3 + a3 x^2 + a4 x + a5.
    Solve {
        /// a1..a5 as comma-separated `re[:im]` values.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: Option<String>,
        #[arg(long, default_value = "icosahedral")]
        method: String,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Read one request object from standard input.
        #[arg(long)]
        json: bool,
        /// Read JSON lines from standard input, one response per line.
        #[arg(long)]
        batch: bool,
    },
    /// Discriminant, resolvent products and Z for y^5 + 5 alpha y^2 + 5 beta y + gamma.
    Invariant {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
    },
    /// A preimage of Z under the icosahedral map.
    Invert {
        #[arg(long = "Z", allow_hyphen_values = true)]
        z: String,
    },
    /// Run every exact certificate.
    Certify,
    /// The series root of y^5 - y + gamma.
    Bring {
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        /// Relative size of the last series terms.
        #[arg(long, default_value_t = f64::EPSILON)]
        tol: f64,
    },
}

/// A failure with its exit status.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 4, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::RepeatedRoots | Error::DegenerateConfiguration(_) | Error::DegenerateImage => 2,
            Error::InvalidInput(_)
            | Error::OutsideRadius(_)
            | Error::OutOfSeriesDomain(_)
            | Error::TooLarge(_)
            | Error::InvalidC(_)
            | Error::NotOnSphere { .. } => 4,
            _ => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

type CliResult<T> = Result<T, Failure>;

/// A float printed with 17 significant digits; non-finite values become null.
#[derive(Debug, Clone, Copy)]
struct Num(f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(format!("{:.16e}", self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

type Pair = [Num; 2];

fn pair(z: Complex64) -> Pair {
    [Num(z.re), Num(z.im)]
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SolveRequest {
    coefficients: [[f64; 2]; 5],
    #[serde(default = "default_method")]
    method: String,
    #[serde(default = "default_tol")]
    tolerance: f64,
}

fn default_method() -> String {
    "icosahedral".into()
}

fn default_tol() -> f64 {
    1e-6
}

#[derive(Serialize)]
struct CanonicalOut {
    alpha: Pair,
    beta: Pair,
    gamma: Pair,
}

#[derive(Serialize)]
struct TschirnhausOut {
    shift: Pair,
    b1: Pair,
    b2: Pair,
    trivial: bool,
}

#[derive(Serialize)]
struct BranchOut {
    qsign: i8,
    z_index: Option<usize>,
    delta_power: u32,
}

#[derive(Serialize)]
struct SolveResponse {
    roots: Vec<Pair>,
    residuals: Vec<Num>,
    max_residual: Num,
    canonical: Option<CanonicalOut>,
    tschirnhaus: Option<TschirnhausOut>,
    #[serde(rename = "Z")]
    z: Option<Pair>,
    branch: Option<BranchOut>,
    method_used: &'static str,
    fallback_used: bool,
    fallback_reason: Option<String>,
}

impl From<&Solution64> for SolveResponse {
    fn from(s: &Solution64) -> Self {
        SolveResponse {
            roots: s.roots.iter().map(|z| pair(*z)).collect(),
            residuals: s.residuals.iter().map(|r| Num(*r)).collect(),
            max_residual: Num(s.max_residual()),
            canonical: s.canonical.map(|c| CanonicalOut {
                alpha: pair(c.alpha),
                beta: pair(c.beta),
                gamma: pair(c.gamma),
            }),
            tschirnhaus: s.tschirnhaus.as_ref().map(|t| TschirnhausOut {
                shift: pair(t.shift),
                b1: pair(t.b1),
                b2: pair(t.b2),
                trivial: t.trivial,
            }),
            z: s.z.map(pair),
            branch: s.branch.map(|b| BranchOut { qsign: b.qsign, z_index: b.z_index, delta_power: b.delta_power }),
            method_used: s.method_used,
            fallback_used: s.fallback.is_some(),
            fallback_reason: s.fallback.clone(),
        }
    }
}

#[derive(Serialize)]
struct ErrorLine {
    error: String,
    exit_code: u8,
}

/// `re`, `re:im` or `re,im`.
fn parse_complex(s: &str) -> CliResult<Complex64> {
    let s = s.trim();
    let parts: Vec<&str> = s.split([':', ',']).collect();
    let num = |t: &str| {
        t.trim().parse::<f64>().map_err(|_| Failure::usage(format!("cannot parse {t:?} as a number")))
    };
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(Failure::usage(format!("cannot parse {s:?} as a complex number"))),
    }
}

fn parse_coeffs(s: &str) -> CliResult<[Complex64; 5]> {
    let items: Vec<&str> = s.split(',').collect();
    if items.len() != 5 {
        return Err(Failure::usage(format!("expected 5 coefficients, got {}", items.len())));
    }
    let mut out = [Complex64::default(); 5];
    for (o, t) in out.iter_mut().zip(items) {
        *o = parse_complex(t)?;
    }
    Ok(out)
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serialisable output")
}

fn run_solve(coeffs: [Complex64; 5], method: &str, tol: f64) -> CliResult<String> {
    let method: SolveMethod = method.parse()?;
    if !(tol > 0.0) {
        return Err(Failure::usage("tolerance must be positive"));
    }
    if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
        return Err(Failure::usage("coefficients must be finite"));
    }
    let q = GeneralQuintic64::new(coeffs);
    let sol = solve(&q, method, tol)?;
    Ok(to_json(&SolveResponse::from(&sol)))
}

fn run_request(line: &str) -> CliResult<String> {
    let req: SolveRequest =
        serde_json::from_str(line).map_err(|e| Failure::usage(format!("bad request: {e}")))?;
    let coeffs = req.coefficients.map(|[re, im]| Complex64::new(re, im));
    run_solve(coeffs, &req.method, req.tolerance)
}

fn cmd_solve(coeffs: Option<String>, method: String, tol: f64, json: bool, batch: bool) -> CliResult<()> {
    match (coeffs, json, batch) {
        (Some(c), false, false) => {
            let out = run_solve(parse_coeffs(&c)?, &method, tol)?;
            println!("{out}");
            Ok(())
        }
        (None, true, false) => {
            let mut input = String::new();
            io::stdin().read_to_string(&mut input).map_err(|e| Failure::usage(e.to_string()))?;
            println!("{}", run_request(&input)?);
            Ok(())
        }
        (None, false, true) => {
            let stdout = io::stdout();
            let mut out = stdout.lock();
            for line in io::stdin().lock().lines() {
                let line = line.map_err(|e| Failure::usage(e.to_string()))?;
                if line.trim().is_empty() {
                    continue;
                }
                let text = match run_request(&line) {
                    Ok(s) => s,
                    Err(f) => to_json(&ErrorLine { error: f.message, exit_code: f.code }),
                };
                writeln!(out, "{text}").map_err(|e| Failure::usage(e.to_string()))?;
            }
            Ok(())
        }
        _ => Err(Failure::usage("give exactly one of --coeffs, --json, --batch")),
    }
}

#[derive(Serialize)]
struct InvariantOut {
    #[serde(rename = "D")]
    d: Pair,
    nabla: Pair,
    f1f2: Pair,
    h1h2: Pair,
    t1t2: Pair,
    p: Pair,
    q: Pair,
    #[serde(rename = "Z1")]
    z1: Pair,
    #[serde(rename = "Z2")]
    z2: Pair,
}

fn cmd_invariant(alpha: &str, beta: &str, gamma: &str) -> CliResult<()> {
    let c = CanonicalQuintic::new(parse_complex(alpha)?, parse_complex(beta)?, parse_complex(gamma)?);
    let d = c.discriminant();
    let (f1f2, _, _) = resolvent_products(&c.alpha, &c.beta, &c.gamma);
    // Only f1 f2 = 0 is fatal here; repeated roots still have a Z.
    if c.is_zero() || f1f2.norm() <= DEGENERACY * c.scale().powi(12) {
        return Err(Error::DegenerateConfiguration(format!("f1 f2 = {f1f2} vanishes")).into());
    }
    let nab = nabla(d);
    let v = ResolventValues::new(&c, 1);
    let out = InvariantOut {
        d: pair(d),
        nabla: pair(nab),
        f1f2: pair(v.f1f2),
        h1h2: pair(v.h1h2),
        t1t2: pair(v.t1t2),
        p: pair(v.p),
        q: pair(v.q),
        z1: pair(v.z(nab)),
        z2: pair(v.z(-nab)),
    };
    println!("{}", to_json(&out));
    Ok(())
}

#[derive(Serialize)]
struct InvertOut {
    #[serde(rename = "Z")]
    big_z: Pair,
    z: Pair,
    #[serde(rename = "I_of_z")]
    i_of_z: Option<Pair>,
    defect: Num,
    path: &'static str,
}

fn cmd_invert(z: &str) -> CliResult<()> {
    let big_z = parse_complex(z)?;
    let (s, path) = invert_icosahedral_traced(big_z)?;
    let i = match icos_i(ExtComplex::Finite(s)) {
        ExtComplex::Finite(i) => Some(i),
        ExtComplex::Infinity => None,
    };
    let defect = quintic_core::inverter::inversion_defect(s, big_z);
    let out = InvertOut { big_z: pair(big_z), z: pair(s), i_of_z: i.map(pair), defect: Num(defect), path: path.name() };
    println!("{}", to_json(&out));
    Ok(())
}

fn cmd_certify() -> CliResult<bool> {
    let certs = certify::run_all();
    let width = certs.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut all = true;
    for c in &certs {
        all &= c.passed;
        println!(
            "{}  {:width$}  {:>9.3}s  {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.elapsed.as_secs_f64(),
            c.detail
        );
    }
    let passed = certs.iter().filter(|c| c.passed).count();
    println!("{passed}/{} certificates passed", certs.len());
    Ok(all)
}

#[derive(Serialize)]
struct BringOut {
    gamma: Pair,
    root: Pair,
    residual: Num,
}

fn cmd_bring(gamma: &str, tol: f64) -> CliResult<()> {
    let g = parse_complex(gamma)?;
    let y = bjseries::bj_root_series(g, tol)?;
    let residual = (y.powu(5) - y + g).norm();
    println!("{}", to_json(&BringOut { gamma: pair(g), root: pair(y), residual: Num(residual) }));
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(4) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.cmd {
        Cmd::Solve { coeffs, method, tol, json, batch } => cmd_solve(coeffs, method, tol, json, batch),
        Cmd::Invariant { alpha, beta, gamma } => cmd_invariant(&alpha, &beta, &gamma),
        Cmd::Invert { z } => cmd_invert(&z),
        Cmd::Certify => match cmd_certify() {
            Ok(true) => Ok(()),
            Ok(false) => return ExitCode::from(1),
            Err(e) => Err(e),
        },
        Cmd::Bring { gamma, tol } => cmd_bring(&gamma, tol),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_flags() {
        assert_eq!(parse_complex("2,0").unwrap(), Complex64::new(2.0, 0.0));
        assert_eq!(parse_complex("-1.5:2").unwrap(), Complex64::new(-1.5, 2.0));
        assert_eq!(parse_complex(" 3 ").unwrap(), Complex64::new(3.0, 0.0));
        assert_eq!(parse_complex("x").unwrap_err().code, 4);
        assert_eq!(parse_coeffs("0,0,1:1,1,-1").unwrap()[2], Complex64::new(1.0, 1.0));
        assert!(parse_coeffs("0,0,1").is_err());
    }

    #[test]
    fn seventeen_digits() {
        assert_eq!(to_json(&Num(0.1)), "1.0000000000000001e-1");
        assert_eq!(to_json(&Num(-2.0)), "-2.0000000000000000e0");
        assert_eq!(to_json(&Num(f64::NAN)), "null");
        let back: f64 = serde_json::from_str(&to_json(&Num(std::f64::consts::PI))).unwrap();
        assert_eq!(back, std::f64::consts::PI);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Failure::from(Error::RepeatedRoots).code, 2);
        assert_eq!(Failure::from(Error::NoConvergence("x".into())).code, 3);
        assert_eq!(Failure::from(Error::OutsideRadius(0.7)).code, 4);
    }
}

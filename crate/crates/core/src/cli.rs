//! The `rootspace` command-line front end.
//!
//! Inputs are JSON documents:
//!
//! * polynomial file: `{"n": 2, "coeffs": [[1, 0], [0, 0]]}` lists
//!   `a_0..a_{n-1}` as `[re, im]` pairs, the leading 1 implied;
//! * multiset file: `{"elems": [[0, 1], [0, -1]]}`.
//!
//! Every command prints one JSON document on stdout. Floating-point numbers
//! are written with 17 significant digits. Exit codes: 0 success, 1 input
//! error, 2 solver non-convergence (or tracking refinement exhausted),
//! 3 certificate failure.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::metric::{multiset_metric, poly_metric};
use crate::ordering::discontinuity_witness_with;
use crate::paths::{track_with, TrackConfig};
use crate::perturbation::{
    certify_with, ostrowski, rahman_schmeisser, BoundName, DEFAULT_RS_DELTA_THRESHOLD,
};
use crate::rootfinder::{cauchy_bound, solve, SolverConfig};
use crate::types::{MonicPolynomial, RootMultiset};
use crate::vieta::expand;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NOT_CONVERGED: i32 = 2;
pub const EXIT_CERTIFICATE_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "rootspace", version, about = "Polynomials, root multisets and the metrics between them")]
pub struct Cli {
    /// Solver residual tolerance.
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Solver iteration limit.
    #[arg(long = "max-iter", global = true)]
    max_iter: Option<usize>,

    /// Accepted for reproducible invocations; every command is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Roots of a polynomial file.
    Roots { input: PathBuf },
    /// Distance between two polynomial files or two multiset files.
    Metric {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value_t = Space::Roots)]
        space: Space,
    },
    /// Monic polynomial with the given roots.
    Expand { input: PathBuf },
    /// Root-displacement bound against the measured distance.
    Certify {
        f: PathBuf,
        g: PathBuf,
        #[arg(long, value_enum, default_value_t = BoundArg::Ostrowski)]
        bound: BoundArg,
    },
    /// Roots along the segment from p to q.
    Track {
        p: PathBuf,
        q: PathBuf,
        #[arg(long, default_value_t = 8)]
        steps: usize,
    },
    /// Converging polynomials whose sorted roots do not converge.
    DemoDiscontinuity {
        #[arg(long = "k-max", default_value_t = 10)]
        k_max: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Space {
    Poly,
    Roots,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundArg {
    Ostrowski,
    Rs,
}

/// A failed command: exit code and message for stderr.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotConverged(_) | Error::DepthLimitExceeded { .. } => EXIT_NOT_CONVERGED,
            _ => EXIT_INPUT,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

/// Outcome of a successful command: the document and the exit code to use.
struct Output {
    doc: Value,
    code: i32,
}

impl From<Value> for Output {
    fn from(doc: Value) -> Self {
        Self { doc, code: EXIT_OK }
    }
}

#[derive(Deserialize)]
struct PolyFile {
    n: usize,
    coeffs: Vec<[f64; 2]>,
}

#[derive(Deserialize)]
struct MultisetFile {
    elems: Vec<[f64; 2]>,
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn to_complex(pairs: &[[f64; 2]]) -> Vec<Complex64> {
    pairs.iter().map(|&[re, im]| Complex64::new(re, im)).collect()
}

fn check_pairs(path: &Path, field: &str, pairs: &[[f64; 2]]) -> Result<(), Failure> {
    if let Some(i) = pairs.iter().position(|p| !p[0].is_finite() || !p[1].is_finite()) {
        return Err(Failure::input(format!(
            "{}: field `{field}`: entry {i} is not finite",
            path.display()
        )));
    }
    Ok(())
}

pub fn parse_poly(path: &Path, text: &str) -> Result<MonicPolynomial, String> {
    let file: PolyFile =
        serde_json::from_str(text).map_err(|e| format!("{}: {e}", path.display()))?;
    if file.n < 2 {
        return Err(format!("{}: field `n`: degree must be at least 2, got {}", path.display(), file.n));
    }
    if file.coeffs.len() != file.n {
        return Err(format!(
            "{}: field `coeffs`: expected {} entries, got {}",
            path.display(),
            file.n,
            file.coeffs.len()
        ));
    }
    check_pairs(path, "coeffs", &file.coeffs).map_err(|f| f.message)?;
    MonicPolynomial::new(to_complex(&file.coeffs)).map_err(|e| format!("{}: field `coeffs`: {e}", path.display()))
}

pub fn parse_multiset(path: &Path, text: &str) -> Result<RootMultiset, String> {
    let file: MultisetFile =
        serde_json::from_str(text).map_err(|e| format!("{}: {e}", path.display()))?;
    if file.elems.len() < 2 {
        return Err(format!(
            "{}: field `elems`: need at least 2 entries, got {}",
            path.display(),
            file.elems.len()
        ));
    }
    check_pairs(path, "elems", &file.elems).map_err(|f| f.message)?;
    RootMultiset::new(to_complex(&file.elems)).map_err(|e| format!("{}: field `elems`: {e}", path.display()))
}

fn load_poly(path: &Path) -> Result<MonicPolynomial, Failure> {
    parse_poly(path, &read(path)?).map_err(Failure::input)
}

fn load_multiset(path: &Path) -> Result<RootMultiset, Failure> {
    parse_multiset(path, &read(path)?).map_err(Failure::input)
}

fn pairs(values: &[Complex64]) -> Value {
    Value::Array(values.iter().map(|z| json!([z.re, z.im])).collect())
}

fn poly_doc(p: &MonicPolynomial) -> Value {
    json!({ "n": p.degree(), "coeffs": pairs(p.coeffs()) })
}

/// Writes `f64` values as decimal with 17 significant digits.
struct FixedDigits;

impl serde_json::ser::Formatter for FixedDigits {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }
}

/// Serializes a document the way every command prints it.
pub fn render(doc: &Value) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, FixedDigits);
    serde::Serialize::serialize(doc, &mut ser).expect("in-memory serialization");
    String::from_utf8(buf).expect("json is utf-8")
}

impl Cli {
    fn solver(&self) -> Result<SolverConfig, Failure> {
        let mut cfg = SolverConfig::default();
        if let Some(tol) = self.tol {
            cfg.residual_tolerance = tol;
        }
        if let Some(max_iter) = self.max_iter {
            cfg.max_iterations = max_iter;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn execute(&self) -> Result<Output, Failure> {
        let cfg = self.solver()?;
        match &self.command {
            Command::Roots { input } => {
                let p = load_poly(input)?;
                let report = solve(&p, &cfg)?;
                let doc = json!({
                    "elems": pairs(report.roots.elems()),
                    "report": {
                        "iterations": report.iterations,
                        "max_residual": report.max_residual,
                        "cauchy_bound": cauchy_bound(&p),
                        "converged": report.converged,
                    }
                });
                let code = if report.converged { EXIT_OK } else { EXIT_NOT_CONVERGED };
                Ok(Output { doc, code })
            }
            Command::Metric { a, b, space } => match space {
                Space::Poly => {
                    let value = poly_metric(&load_poly(a)?, &load_poly(b)?)?;
                    Ok(json!({ "space": "poly", "value": value }).into())
                }
                Space::Roots => {
                    let m = multiset_metric(&load_multiset(a)?, &load_multiset(b)?)?;
                    Ok(json!({
                        "space": "roots",
                        "value": m.value,
                        "permutation": m.permutation.as_slice(),
                    })
                    .into())
                }
            },
            Command::Expand { input } => Ok(poly_doc(&expand(&load_multiset(input)?)).into()),
            Command::Certify { f, g, bound } => {
                let (f, g) = (load_poly(f)?, load_poly(g)?);
                let which = match bound {
                    BoundArg::Ostrowski => BoundName::Ostrowski,
                    BoundArg::Rs => BoundName::RahmanSchmeisser,
                };
                let details = match which {
                    BoundName::Ostrowski => {
                        let o = ostrowski(&f, &g)?;
                        json!({ "gamma_cap": o.gamma_cap, "gamma": o.gamma, "epsilon": o.epsilon })
                    }
                    BoundName::RahmanSchmeisser => {
                        let r = rahman_schmeisser(&f, &g)?;
                        json!({
                            "a_cap": r.a_cap,
                            "delta": r.delta,
                            "small_delta_threshold": DEFAULT_RS_DELTA_THRESHOLD,
                            "within_small_delta": r.within_small_delta(DEFAULT_RS_DELTA_THRESHOLD),
                        })
                    }
                };
                let cert = certify_with(&f, &g, which, &cfg)?;
                let doc = json!({
                    "bound_name": cert.bound_name.to_string(),
                    "bound_value": cert.bound_value,
                    "measured_dF": cert.measured_df,
                    "holds": cert.holds,
                    "details": details,
                });
                let code = if cert.holds { EXIT_OK } else { EXIT_CERTIFICATE_FAILED };
                Ok(Output { doc, code })
            }
            Command::Track { p, q, steps } => {
                let (p, q) = (load_poly(p)?, load_poly(q)?);
                let tcfg = TrackConfig {
                    solver: cfg,
                    ..TrackConfig::default()
                };
                let traj = track_with(&p, &q, *steps, &tcfg)?;
                let branches = traj.branches();
                let rows: Vec<Value> = traj
                    .ts
                    .iter()
                    .enumerate()
                    .map(|(j, &t)| {
                        let elems: Vec<Complex64> = branches.iter().map(|b| b[j]).collect();
                        let step = if j == 0 { 0.0 } else { traj.step_dfs[j - 1] };
                        json!({ "t": t, "elems": pairs(&elems), "step_dF": step })
                    })
                    .collect();
                Ok(json!({ "trajectory": rows }).into())
            }
            Command::DemoDiscontinuity { k_max } => {
                let w = discontinuity_witness_with(*k_max, &cfg)?;
                let rows: Vec<Value> = w
                    .sequence_polys
                    .iter()
                    .enumerate()
                    .map(|(i, p)| {
                        json!({
                            "k": i + 1,
                            "poly": poly_doc(p),
                            "dF_gap": w.df_gaps[i],
                            "ordered_gap": w.ordered_gaps[i],
                        })
                    })
                    .collect();
                Ok(json!({ "limit_poly": poly_doc(&w.limit_poly), "sequence": rows }).into())
            }
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{e}");
            return code;
        }
    };
    match cli.execute() {
        Ok(Output { doc, code }) => {
            let _ = writeln!(out, "{}", render(&doc));
            code
        }
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_seventeen_significant_digits() {
        let s = render(&json!({ "x": 0.1, "y": [1.0, -2.5], "k": 3 }));
        assert_eq!(s, r#"{"k":3,"x":1.0000000000000001e-1,"y":[1.0000000000000000e0,-2.5000000000000000e0]}"#);
        let back: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(back["x"].as_f64(), Some(0.1));
    }

    #[test]
    fn poly_file_validation_names_fields() {
        let p = Path::new("p.json");
        assert!(parse_poly(p, r#"{"n": 2, "coeffs": [[1, 0], [0, 0]]}"#).is_ok());
        let e = parse_poly(p, r#"{"n": 3, "coeffs": [[1, 0], [0, 0]]}"#).unwrap_err();
        assert!(e.contains("`coeffs`"), "{e}");
        let e = parse_poly(p, r#"{"n": 1, "coeffs": [[1, 0]]}"#).unwrap_err();
        assert!(e.contains("`n`"), "{e}");
        let e = parse_poly(p, r#"{"coeffs": [[1, 0], [0, 0]]}"#).unwrap_err();
        assert!(e.contains("`n`"), "{e}");
        let e = parse_poly(p, r#"{"n": 2, "coeffs": [[1, 0], [0]]}"#).unwrap_err();
        assert!(e.contains("p.json"), "{e}");
        assert!(parse_poly(p, r#"{"n": 2, "coeffs": [[1, 0], [0, 0]"#).is_err());
    }

    #[test]
    fn multiset_file_validation() {
        let p = Path::new("m.json");
        assert_eq!(parse_multiset(p, r#"{"elems": [[0, 1], [0, -1]]}"#).unwrap().len(), 2);
        let e = parse_multiset(p, r#"{"elems": [[0, 1]]}"#).unwrap_err();
        assert!(e.contains("`elems`"), "{e}");
        let e = parse_multiset(p, r#"{"roots": [[0, 1], [0, 2]]}"#).unwrap_err();
        assert!(e.contains("`elems`"), "{e}");
    }
}

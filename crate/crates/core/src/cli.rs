//! Command-line front end.
//!
//! Exit codes: 0 success (regardless of verdict), 1 verification failure,
//! 2 usage, I/O or JSON parse error, 3 dimension or domain error in the
//! input, 4 `decompose` on a matrix that is not a 2x2 isometry.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

use crate::classify::Classifier;
use crate::error::Error;
use crate::frame::{frame_report, Frame};
use crate::matrix::OMatrix;
use crate::octonion::{basis_mul, fmt_sig, Octonion};
use crate::tolerance::Tolerances;
use crate::vector::OVector;
use crate::verify::{self, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DIMENSION: i32 = 3;
pub const EXIT_NOT_DECOMPOSABLE: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "octolin", version, about = "Octonionic linear algebra checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Absolute per-coordinate equality tolerance.
    #[arg(long, global = true, default_value_t = Tolerances::DEFAULT.eq)]
    pub tol_eq: f64,

    /// Gram and associator residual tolerance.
    #[arg(long, global = true, default_value_t = Tolerances::DEFAULT.gram)]
    pub tol_gram: f64,

    /// Rank threshold relative to the largest singular value.
    #[arg(long, global = true, default_value_t = Tolerances::DEFAULT.rank)]
    pub tol_rank: f64,

    /// Seed for random probes and the verify suites.
    #[arg(long, global = true, env = "OCTOLIN_SEED", default_value_t = 42)]
    pub seed: u64,

    /// Text rounds to 6 significant digits; JSON keeps full precision.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a square matrix: isometry and partial-isometry verdicts.
    Check {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Report on a frame: orthonormality, (weak) associativity, completeness.
    Basis {
        #[arg(long)]
        frame: PathBuf,
    },
    /// Dimension of O(Oy) for a unit vector y.
    Stiefel {
        #[arg(long)]
        vector: PathBuf,
    },
    /// Split a 2x2 isometry as p·U with U unitary over C_J.
    Decompose {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Run the seeded property suites.
    Verify {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Break one property on purpose to test the harness.
        #[arg(long)]
        inject_fault: bool,
    },
    /// Print the basis multiplication table.
    MultTable,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn dimension(e: Error) -> Failure {
    Failure::new(EXIT_DIMENSION, e.to_string())
}

/// Reads `path` as JSON of the raw shape `R`; malformed input is a parse
/// error, while shape violations found later are dimension errors.
fn read_json<R: DeserializeOwned>(path: &Path) -> Result<R, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    serde_json::from_value(value)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn octonions(raw: Vec<[f64; 8]>) -> Result<Vec<Octonion>, Failure> {
    raw.into_iter()
        .map(|c| Octonion::new(c).map_err(dimension))
        .collect()
}

fn read_vector(path: &Path) -> Result<OVector, Failure> {
    let raw: Vec<[f64; 8]> = read_json(path)?;
    OVector::new(octonions(raw)?).map_err(dimension)
}

fn read_rows(path: &Path) -> Result<Vec<OVector>, Failure> {
    let raw: Vec<Vec<[f64; 8]>> = read_json(path)?;
    raw.into_iter()
        .map(|r| OVector::new(octonions(r)?).map_err(dimension))
        .collect()
}

fn read_matrix(path: &Path) -> Result<OMatrix, Failure> {
    OMatrix::new(read_rows(path)?).map_err(dimension)
}

fn read_frame(path: &Path) -> Result<Frame, Failure> {
    Frame::new(read_rows(path)?).map_err(dimension)
}

fn as_octonion(v: &Value) -> Option<Octonion> {
    let a = v.as_array()?;
    if a.len() != 8 {
        return None;
    }
    let mut c = [0.0; 8];
    for (slot, x) in c.iter_mut().zip(a) {
        *slot = x.as_f64()?;
    }
    Octonion::new(c).ok()
}

fn text_scalar(v: &Value) -> String {
    match v {
        Value::Number(n) if n.is_f64() => fmt_sig(n.as_f64().unwrap_or(f64::NAN), 6),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn text_inline(v: &Value) -> Option<String> {
    if let Some(o) = as_octonion(v) {
        return Some(o.to_string());
    }
    match v {
        Value::Array(items) if !items.is_empty() => {
            let parts: Option<Vec<String>> = items
                .iter()
                .map(as_octonion)
                .map(|o| o.map(|o| o.to_string()))
                .collect();
            parts.map(|p| format!("({})", p.join(", ")))
        }
        Value::Array(_) | Value::Object(_) => None,
        other => Some(text_scalar(other)),
    }
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match text_inline(val) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(val, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match text_inline(item) {
                    Some(s) => out.push_str(&format!("{pad}{s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render_text(item, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", text_scalar(other))),
    }
}

fn emit<T: Serialize>(report: &T, format: Format) -> String {
    let value = serde_json::to_value(report).expect("reports serialize");
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            render_text(&value, 0, &mut s);
            s
        }
    }
}

fn basis_name(sign: i8, index: u8) -> String {
    let name = if index == 0 {
        "1".to_string()
    } else {
        format!("e{index}")
    };
    if sign < 0 {
        format!("-{name}")
    } else {
        format!("+{name}")
    }
}

/// The signed basis table, rows indexed by the left factor.
pub fn mult_table_text() -> String {
    let mut s = String::from("   *");
    for j in 0..8 {
        s.push_str(&format!(
            "{:>5}",
            if j == 0 { "1".into() } else { format!("e{j}") }
        ));
    }
    s.push('\n');
    for i in 0..8 {
        s.push_str(&format!(
            "{:>4}",
            if i == 0 { "1".into() } else { format!("e{i}") }
        ));
        for j in 0..8 {
            let p = basis_mul(i, j);
            s.push_str(&format!("{:>5}", basis_name(p.sign, p.index)));
        }
        s.push('\n');
    }
    s
}

fn mult_table_json() -> String {
    let rows: Vec<Vec<[i64; 2]>> = (0..8)
        .map(|i| {
            (0..8)
                .map(|j| {
                    let p = basis_mul(i, j);
                    [i64::from(p.sign), i64::from(p.index)]
                })
                .collect()
        })
        .collect();
    let mut s = serde_json::to_string(&rows).expect("serializable");
    s.push('\n');
    s
}

fn verify_text(summary: &verify::Summary) -> String {
    let mut s = String::new();
    for p in &summary.properties {
        s.push_str(&format!(
            "{} {:<38} max_residual={} threshold={} cases={}\n",
            if p.passed { "PASS" } else { "FAIL" },
            p.name,
            fmt_sig(p.max_residual, 6),
            fmt_sig(p.threshold, 6),
            p.cases
        ));
    }
    let failed = summary.properties.iter().filter(|p| !p.passed).count();
    s.push_str(&format!(
        "seed={} trials={} properties={} failed={}\n",
        summary.seed,
        summary.trials,
        summary.properties.len(),
        failed
    ));
    s
}

fn execute(cli: &Cli) -> Result<(String, i32), Failure> {
    let tol = Tolerances {
        eq: cli.tol_eq,
        gram: cli.tol_gram,
        assoc: cli.tol_gram,
        rank: cli.tol_rank,
    };
    let classifier = Classifier::new(tol, cli.seed);
    match &cli.command {
        Command::Check { matrix } => {
            let t = read_matrix(matrix)?;
            let report = classifier.classify(&t).map_err(dimension)?;
            Ok((emit(&report, cli.format), EXIT_OK))
        }
        Command::Basis { frame } => {
            let f = read_frame(frame)?;
            Ok((emit(&frame_report(&f, &tol), cli.format), EXIT_OK))
        }
        Command::Stiefel { vector } => {
            let y = read_vector(vector)?;
            let report = classifier.stiefel_oo_y_dim(&y).map_err(dimension)?;
            Ok((emit(&report, cli.format), EXIT_OK))
        }
        Command::Decompose { matrix } => {
            let t = read_matrix(matrix)?;
            let d = classifier
                .iso2_decompose(&t)
                .map_err(|e| Failure::new(EXIT_NOT_DECOMPOSABLE, e.to_string()))?;
            Ok((emit(&d, cli.format), EXIT_OK))
        }
        Command::Verify {
            trials,
            inject_fault,
        } => {
            let summary = verify::run(&VerifyConfig {
                seed: cli.seed,
                trials: *trials,
                inject_fault: *inject_fault,
                tol,
            });
            let code = if summary.all_passed {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            };
            let text = match cli.format {
                Format::Json => emit(&summary, Format::Json),
                Format::Text => verify_text(&summary),
            };
            Ok((text, code))
        }
        Command::MultTable => Ok((
            match cli.format {
                Format::Json => mult_table_json(),
                Format::Text => mult_table_text(),
            },
            EXIT_OK,
        )),
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

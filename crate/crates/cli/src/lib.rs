//! Argument handling and report rendering for the `pzeta` binary.
//!
//! [`run`] does all the work and returns the exit code with the text that
//! belongs on stdout and stderr, so tests can drive it without a process.

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use pzeta_core::exact::{parse_rational, partition_zeta_exact, ExactError};
use pzeta_core::numeric::{
    direct_sum_truncated, euler_product_eval, partition_zeta_family, pole_order_fit, EvalResult,
    NumericError, ProductForm,
};
use pzeta_core::qseries::{
    faa_di_bruno_check, macmahon_exact_identity, macmahon_lhs, macmahon_rhs,
    restricted_genfun_coeffs, series_exp, QSeriesError, TruncatedSeries,
};
use pzeta_core::BigRational;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Series,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Form {
    Even,
    Distinct,
    NotOne,
    Subset,
}

#[derive(Debug, Parser)]
#[command(name = "pzeta", version, about = "Partition zeta functions, exact and numeric")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate ζ_P({s}^k) through the explicit formula.
    Eval {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        s: Complex64,
        #[arg(long)]
        k: u32,
    },
    /// Exact value of ζ_P({2m}^k) as a rational multiple of a power of π.
    Exact {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: u32,
    },
    /// Truncated definition: sum over partitions of length k with parts <= M.
    Oracle {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        s: Complex64,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 1000)]
        max_part: u64,
    },
    /// Fitted pole orders at s = 1/j for j = 1..=k.
    Poles {
        #[arg(long)]
        k: u32,
    },
    /// Check the partial-fraction identity for partitions with exactly k parts.
    Macmahon {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
        /// Series order for `--mode series` (default 2k+10).
        #[arg(long)]
        order: Option<usize>,
    },
    /// Check the partition form of exp(Σ a_j x^j).
    Faadibruno {
        #[arg(long)]
        order: usize,
        /// Comma-separated rationals a_1,a_2,... (default a_j = 1/j).
        #[arg(long)]
        coeffs: Option<String>,
    },
    /// Evaluate a partition Euler product.
    EulerProduct {
        #[arg(long, value_enum)]
        form: Form,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        s: Complex64,
        #[arg(long, default_value_t = 1_000_000)]
        max_factor: u64,
        /// Subset form: admit parts n with n ≡ residue (mod modulus).
        #[arg(long)]
        modulus: Option<u64>,
        #[arg(long)]
        residue: Option<u64>,
    },
    /// Coefficients of the restricted generating function in z.
    Genfun {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        s: Complex64,
        #[arg(long, default_value_t = 1000)]
        max_part: u64,
        #[arg(long)]
        k_max: usize,
    },
}

/// Parses `a`, `a+bi`, `a-bi`, `bi` or `i`. Exponents such as `1e-3` are
/// allowed in either component.
pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("invalid complex number {text:?}, expected a, a+bi or bi");
    let number = |s: &str| -> Result<f64, String> {
        let v: f64 = s.parse().map_err(|_| bad())?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(bad())
        }
    };
    let Some(body) = t.strip_suffix('i') else {
        return Ok(Complex64::new(number(&t)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (number(&body[..i])?, &body[i..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => number(other)?,
    };
    Ok(Complex64::new(re, im))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain { name: &'static str, message: String },
}

impl From<NumericError> for Failure {
    fn from(e: NumericError) -> Self {
        Failure::Domain { name: e.name(), message: e.to_string() }
    }
}

impl From<ExactError> for Failure {
    fn from(e: ExactError) -> Self {
        Failure::Domain { name: e.name(), message: e.to_string() }
    }
}

impl From<QSeriesError> for Failure {
    fn from(e: QSeriesError) -> Self {
        Failure::Domain { name: e.name(), message: e.to_string() }
    }
}

/// A computed report: the JSON document, how to show it as text, and
/// whether a verification check passed.
struct Report {
    json: Value,
    text: String,
    verified: bool,
}

impl Report {
    fn new(json: Value, text: String) -> Self {
        Self { json, text, verified: true }
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Output { code: EXIT_USAGE, stdout: String::new(), stderr: rendered }
            } else {
                Output { code: EXIT_OK, stdout: rendered, stderr: String::new() }
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Output {
    match dispatch(&cli.command) {
        Ok(report) => {
            let stdout = match cli.format {
                Format::Json => format!("{}\n", report.json),
                Format::Text => report.text,
            };
            let code = if report.verified { EXIT_OK } else { EXIT_DOMAIN };
            Output { code, stdout, stderr: String::new() }
        }
        Err(Failure::Usage(message)) => Output {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        },
        Err(Failure::Domain { name, message }) => {
            let stdout = match cli.format {
                Format::Json => format!("{}\n", json!({ "error": name, "message": message })),
                Format::Text => table(&[], &[vec!["error".into(), name.into()], vec!["message".into(), message]]),
            };
            Output { code: EXIT_DOMAIN, stdout, stderr: String::new() }
        }
    }
}

fn dispatch(command: &Command) -> Result<Report, Failure> {
    match *command {
        Command::Eval { s, k } => Ok(eval_report(&partition_zeta_family(s, k)?)),
        Command::Exact { m, k } => {
            let v = partition_zeta_exact(m, k)?;
            let json = serde_json::to_value(&v).expect("PiPower serializes");
            let text = table(
                &[],
                &[
                    vec!["coeff".into(), v.coeff.to_string()],
                    vec!["pi_power".into(), v.exponent.to_string()],
                    vec!["approx".into(), format!("{:.15e}", v.to_f64())],
                ],
            );
            Ok(Report::new(json, text))
        }
        Command::Oracle { s, k, max_part } => {
            if max_part == 0 {
                return Err(Failure::Usage("--max-part must be positive".into()));
            }
            Ok(eval_report(&direct_sum_truncated(s, k, max_part)?))
        }
        Command::Poles { k } => poles(k),
        Command::Macmahon { k, mode, order } => macmahon(k, mode, order),
        Command::Faadibruno { order, ref coeffs } => faadibruno(order, coeffs.as_deref()),
        Command::EulerProduct { form, s, max_factor, modulus, residue } => {
            let form = match (form, modulus, residue) {
                (Form::Subset, Some(m), Some(r)) => ProductForm::residue_class(m, r)?,
                (Form::Subset, _, _) => {
                    return Err(Failure::Usage(
                        "--form subset requires --modulus and --residue".into(),
                    ))
                }
                (_, None, None) => match form {
                    Form::Even => ProductForm::even_parts(),
                    Form::Distinct => ProductForm::DistinctParts,
                    _ => ProductForm::PartsNotOne,
                },
                _ => {
                    return Err(Failure::Usage(
                        "--modulus and --residue only apply to --form subset".into(),
                    ))
                }
            };
            Ok(eval_report(&euler_product_eval(&form, s, max_factor)?))
        }
        Command::Genfun { s, max_part, k_max } => {
            let coeffs = restricted_genfun_coeffs(s, max_part, k_max)?;
            let json = json!({
                "coeffs": coeffs.iter().map(complex_value).collect::<Vec<_>>(),
                "k_max": k_max,
                "max_part": max_part,
            });
            let rows: Vec<_> = coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| vec![k.to_string(), fmt_f64(c.re), fmt_f64(c.im)])
                .collect();
            Ok(Report::new(json, table(&["k", "re", "im"], &rows)))
        }
    }
}

fn complex_value(z: &Complex64) -> Value {
    json!({ "im": z.im, "re": z.re })
}

fn fmt_f64(x: f64) -> String {
    format!("{x:.15e}")
}

fn eval_report(r: &EvalResult) -> Report {
    let json = serde_json::to_value(r).expect("EvalResult serializes");
    let text = table(
        &[],
        &[
            vec!["re".into(), fmt_f64(r.value.re)],
            vec!["im".into(), fmt_f64(r.value.im)],
            vec!["est_error".into(), format!("{:.3e}", r.est_error)],
            vec!["terms_used".into(), r.terms_used.to_string()],
        ],
    );
    Report::new(json, text)
}

fn poles(k: u32) -> Result<Report, Failure> {
    if k == 0 {
        return Err(Failure::Usage("--k must be positive".into()));
    }
    let mut entries = Vec::new();
    let mut rows = Vec::new();
    let mut all_match = true;
    for j in 1..=k {
        let fit = pole_order_fit(k, j)?;
        let expected = k / j;
        all_match &= fit.order == expected;
        entries.push(json!({
            "expected_order": expected,
            "j": j,
            "location": fit.location,
            "order": fit.order,
            "raw": fit.raw,
        }));
        rows.push(vec![
            j.to_string(),
            format!("1/{j}"),
            format!("{:.4}", fit.raw[0]),
            format!("{:.4}", fit.raw[1]),
            fit.order.to_string(),
            expected.to_string(),
        ]);
    }
    let json = json!({ "k": k, "poles": entries, "verified": all_match });
    let text = table(&["j", "location", "fit(1e-3)", "fit(5e-4)", "order", "expected"], &rows);
    Ok(Report::new(json, text))
}

fn macmahon(k: u32, mode: Mode, order: Option<usize>) -> Result<Report, Failure> {
    if k == 0 {
        return Err(Failure::Usage("--k must be positive".into()));
    }
    let report = match mode {
        Mode::Exact => {
            let verified = macmahon_exact_identity(k);
            let json = json!({ "identity": "macmahon", "k": k, "verified": verified });
            let text = table(
                &[],
                &[
                    vec!["identity".into(), "macmahon".into()],
                    vec!["k".into(), k.to_string()],
                    vec!["mode".into(), "exact".into()],
                    vec!["verified".into(), verified.to_string()],
                ],
            );
            Report { json, text, verified }
        }
        Mode::Series => {
            let order = order.unwrap_or(2 * k as usize + 10);
            let lhs = macmahon_lhs(k, order)?;
            let rhs = macmahon_rhs(k, order)?;
            let verified = lhs == rhs;
            let json = json!({
                "identity": "macmahon",
                "k": k,
                "mode": "series",
                "order": order,
                "series": series_strings(&lhs),
                "verified": verified,
            });
            let rows: Vec<_> = lhs
                .coeffs()
                .iter()
                .zip(rhs.coeffs())
                .enumerate()
                .map(|(n, (a, b))| vec![n.to_string(), a.to_string(), b.to_string()])
                .collect();
            let mut text = table(&["n", "lhs", "rhs"], &rows);
            text.push_str(&format!("verified: {verified}\n"));
            Report { json, text, verified }
        }
    };
    Ok(report)
}

fn series_strings(s: &TruncatedSeries) -> Vec<String> {
    s.coeffs().iter().map(|c| c.to_string()).collect()
}

fn faadibruno(order: usize, coeffs: Option<&str>) -> Result<Report, Failure> {
    let a: Vec<BigRational> = match coeffs {
        Some(list) => list
            .split(',')
            .map(|t| {
                parse_rational(t).map_err(|_| Failure::Usage(format!("--coeffs: invalid rational {t:?}")))
            })
            .collect::<Result<_, _>>()?,
        None => (1..=order.max(1) as i64)
            .map(|j| BigRational::new(1.into(), j.into()))
            .collect(),
    };
    let verified = faa_di_bruno_check(&a, order);
    let mut padded = a.clone();
    padded.resize(order + 1, BigRational::from_integer(0.into()));
    padded.insert(0, BigRational::from_integer(0.into()));
    let exp = series_exp(&TruncatedSeries::from_coeffs(padded, order))?;
    let json = json!({
        "identity": "faadibruno",
        "order": order,
        "series": series_strings(&exp),
        "verified": verified,
    });
    let rows: Vec<_> = exp
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| vec![n.to_string(), c.to_string()])
        .collect();
    let mut text = table(&["n", "b_n"], &rows);
    text.push_str(&format!("verified: {verified}\n"));
    Ok(Report { json, text, verified })
}

/// Left-aligned columns separated by two spaces. With no headers the rows
/// are printed as a key/value listing.
fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let columns = headers.len().max(rows.iter().map(Vec::len).max().unwrap_or(0));
    let mut widths = vec![0; columns];
    let head: Vec<String> = headers.iter().map(|h| h.to_string()).collect();
    for row in std::iter::once(&head).chain(rows) {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let line = |row: &[String]| {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{c:<w$}", w = widths[i]))
            .collect();
        format!("{}\n", cells.join("  ").trim_end())
    };
    let mut out = String::new();
    if !head.is_empty() {
        out.push_str(&line(&head));
        let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
        out.push_str(&line(&rule));
    }
    for row in rows {
        out.push_str(&line(row));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_syntax() {
        let c = |re, im| Complex64::new(re, im);
        assert_eq!(parse_complex("2").unwrap(), c(2.0, 0.0));
        assert_eq!(parse_complex("-2").unwrap(), c(-2.0, 0.0));
        assert_eq!(parse_complex("0.5+14.134725i").unwrap(), c(0.5, 14.134725));
        assert_eq!(parse_complex("0.5-3i").unwrap(), c(0.5, -3.0));
        assert_eq!(parse_complex("3i").unwrap(), c(0.0, 3.0));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("1+i").unwrap(), c(1.0, 1.0));
        assert_eq!(parse_complex("1e-3+2e-2i").unwrap(), c(1e-3, 2e-2));
        assert_eq!(parse_complex("-1e+2-1E-1i").unwrap(), c(-100.0, -0.1));
        assert_eq!(parse_complex(" 2 + 1i ").unwrap(), c(2.0, 1.0));
        for bad in ["", "x", "2+", "1+2j", "inf", "nan", "1+nani", "2ii"] {
            assert!(parse_complex(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn table_alignment() {
        let t = table(&["a", "long"], &[vec!["xyz".into(), "1".into()]]);
        assert_eq!(t, "a    long\n---  ----\nxyz  1\n");
    }
}

//! The `gspin` command-line front end.
//!
//! Exit codes: `0` success, `1` a verification found a failing coefficient,
//! `2` usage or configuration error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bessel::{bessel_value, s_delta};
use crate::characters::DominantWeight;
use crate::conventions::{conventions_report, ReportScope};
use crate::error::{Error, Result};
use crate::evalcheck::{EvalConfig, DEFAULT_PRIME};
use crate::exactalg::{LaurentPoly, RationalFunction, TruncatedSeries};
use crate::rankinselberg::{
    d_series, lfactor_ext_square, lfactor_pi_sigma, lfactor_sigma_lambda, verify_a8, verify_bfg1, verify_bfg1_perturbed,
    verify_claim,
    verify_corollary, zeta_local_series, Comparison, VerificationReport,
};
use crate::rootdata::{SatakeSpec, Torus};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "gspin", version, about = "Exact unramified Bessel values on GSpin(2n+1) and Rankin-Selberg series checks")]
pub struct Cli {
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true, env = "GSPIN_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a closed-form value at one dominant weight.
    Compute(ComputeArgs),
    /// Check a series identity coefficient by coefficient.
    Verify(VerifyArgs),
    /// Print the coefficients of a generating series.
    Series(SeriesArgs),
    /// Print the convention-resolution report.
    Report(ReportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ComputeKind {
    Bessel,
    Sdelta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    Bfg1,
    /// Negative control: `bfg1` with the sign of `z1` flipped on the left.
    Bfg1Perturbed,
    Claim,
    A8,
    Corollary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    D,
    Zeta,
    PiSigma,
    ExtSquare,
    SigmaLambda,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Fast,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to a file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(value_enum)]
    pub kind: ComputeKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "split")]
    pub torus: Torus,
    /// Comma-separated parts, e.g. `2,1,0`.
    #[arg(long, allow_hyphen_values = true)]
    pub delta: String,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub identity: Identity,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "split")]
    pub torus: Torus,
    #[arg(long)]
    pub order: usize,
    /// Number of `GL` variables kept by `corollary`.
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    pub prime: u64,
    #[arg(long, default_value_t = 5)]
    pub trials: usize,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(value_enum)]
    pub kind: SeriesKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "split")]
    pub torus: Torus,
    #[arg(long)]
    pub order: usize,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(long, default_value_t = 3)]
    pub max_n: usize,
    #[arg(long, default_value_t = 3)]
    pub max_total: i32,
    #[arg(long, default_value_t = 2)]
    pub series_n: usize,
    #[arg(long, default_value_t = 3)]
    pub series_order: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn to_json_string<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn emit(text: &str, path: &Option<PathBuf>, stdout: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn parse_delta(s: &str, n: usize) -> Result<DominantWeight> {
    let delta: DominantWeight = s.parse()?;
    if delta.len() != n {
        return Err(Error::InvalidArgument(format!("delta has {} parts, expected {n}", delta.len())));
    }
    Ok(delta)
}

fn cmd_compute(args: &ComputeArgs, stdout: &mut dyn Write) -> Result<i32> {
    let spec = SatakeSpec::new(args.n, args.torus)?;
    let delta = parse_delta(&args.delta, args.n)?;
    let (name, value): (&str, RationalFunction) = match args.kind {
        ComputeKind::Bessel => ("bessel", bessel_value(&delta, &spec)?),
        ComputeKind::Sdelta => ("sdelta", s_delta(&delta, &spec)?),
    };
    let text = match args.out.format {
        Format::Json => to_json_string(&json!({
            "kind": name,
            "n": args.n,
            "torus": args.torus.to_string(),
            "delta": delta.parts(),
            "value": value.to_json(),
        }))?,
        Format::Csv => format!(
            "numerator,denominator\n{},{}\n",
            csv_field(&value.num().to_flat_string()),
            csv_field(&value.den().to_flat_string())
        ),
    };
    emit(&text, &args.out.output, stdout)?;
    Ok(EXIT_OK)
}

fn render_report(report: &VerificationReport, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json_string(report),
        Format::Csv => {
            let mut s = String::from("degree,subset,pass,lhs_minus_rhs_terms\n");
            for c in &report.coefficients {
                let subset = c
                    .subset
                    .as_ref()
                    .map(|v| v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" "))
                    .unwrap_or_default();
                let terms = c.lhs_minus_rhs_terms.map(|t| t.to_string()).unwrap_or_default();
                s.push_str(&format!("{},{},{},{}\n", c.degree, subset, c.pass, terms));
            }
            Ok(s)
        }
    }
}

fn cmd_verify(args: &VerifyArgs, stdout: &mut dyn Write) -> Result<i32> {
    let spec = SatakeSpec::new(args.n, args.torus)?;
    let cmp = match args.mode {
        Mode::Exact => Comparison::Exact,
        Mode::Fast => {
            let cfg = EvalConfig { trials: args.trials, seed: args.seed, prime: args.prime, ..EvalConfig::default() };
            cfg.validate()?;
            Comparison::Fast(cfg)
        }
    };
    if args.l.is_some() && args.identity != Identity::Corollary {
        return Err(Error::InvalidArgument("--l applies only to corollary".into()));
    }
    let report = match args.identity {
        Identity::Bfg1 => verify_bfg1(&spec, args.order, &cmp)?,
        Identity::Bfg1Perturbed => verify_bfg1_perturbed(&spec, args.order, &cmp)?,
        Identity::Claim => verify_claim(&spec, args.order, &cmp)?,
        Identity::A8 => verify_a8(&spec, args.order, &cmp)?,
        Identity::Corollary => {
            let l = args.l.ok_or_else(|| Error::InvalidArgument("corollary needs --l".into()))?;
            verify_corollary(&spec, l, args.order, &cmp)?
        }
    };
    emit(&render_report(&report, args.out.format)?, &args.out.output, stdout)?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED })
}

fn series_rows(series: &TruncatedSeries) -> Vec<(usize, &LaurentPoly)> {
    (0..=series.order()).map(|k| (k, series.coeff(k))).collect()
}

fn cmd_series(args: &SeriesArgs, stdout: &mut dyn Write) -> Result<i32> {
    let spec = SatakeSpec::new(args.n, args.torus)?;
    let series = match args.kind {
        SeriesKind::D => d_series(args.n, args.order)?,
        SeriesKind::Zeta => zeta_local_series(&spec, args.order)?,
        SeriesKind::PiSigma => lfactor_pi_sigma(args.n, args.order)?,
        SeriesKind::ExtSquare => lfactor_ext_square(args.n, args.order)?,
        SeriesKind::SigmaLambda => lfactor_sigma_lambda(args.n, &spec, args.order)?,
    };
    let name = args.kind.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    let text = match args.out.format {
        Format::Json => {
            let coeffs: Vec<_> =
                series_rows(&series).into_iter().map(|(k, c)| json!({ "degree": k, "value": c.to_json() })).collect();
            to_json_string(&json!({
                "series": name,
                "n": args.n,
                "torus": args.torus.to_string(),
                "order": args.order,
                "coefficients": coeffs,
            }))?
        }
        Format::Csv => {
            let mut s = String::from("degree,coefficient\n");
            for (k, c) in series_rows(&series) {
                s.push_str(&format!("{k},{}\n", csv_field(&c.to_flat_string())));
            }
            s
        }
    };
    emit(&text, &args.out.output, stdout)?;
    Ok(EXIT_OK)
}

fn cmd_report(args: &ReportArgs, stdout: &mut dyn Write) -> Result<i32> {
    if args.max_n == 0 || args.series_n == 0 || args.max_total < 0 {
        return Err(Error::InvalidArgument("report ranges must be positive".into()));
    }
    let scope = ReportScope {
        max_n: args.max_n,
        max_total: args.max_total,
        series_n: args.series_n,
        series_order: args.series_order,
    };
    let report = conventions_report(&scope)?;
    emit(&to_json_string(&report)?, &args.output, stdout)?;
    Ok(if report.resolved() { EXIT_OK } else { EXIT_FAILED })
}

fn dispatch(cli: &Cli, stdout: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Compute(a) => cmd_compute(a, stdout),
        Command::Verify(a) => cmd_verify(a, stdout),
        Command::Series(a) => cmd_series(a, stdout),
        Command::Report(a) => cmd_report(a, stdout),
    }
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{e}");
            return EXIT_OK;
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        if t == 0 {
            let _ = writeln!(stderr, "error: --threads must be positive");
            return EXIT_USAGE;
        }
        builder = builder.num_threads(t);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut buf = Vec::new();
    let result = pool.install(|| dispatch(&cli, &mut buf));
    if stdout.write_all(&buf).and_then(|_| stdout.flush()).is_err() {
        return EXIT_USAGE;
    }
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("gspin").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn compute_identity_value() {
        let (code, out, _) = run_str(&["compute", "bessel", "--n", "2", "--torus", "nonsplit", "--delta", "0,0", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out, "numerator,denominator\n1,1\n");
    }

    #[test]
    fn bad_delta_is_usage_error() {
        assert_eq!(run_str(&["compute", "bessel", "--n", "2", "--delta", "0,1"]).0, 2);
        assert_eq!(run_str(&["compute", "bessel", "--n", "2", "--delta", "1"]).0, 2);
        assert_eq!(run_str(&["compute", "bessel", "--n", "2", "--delta", "x"]).0, 2);
    }

    #[test]
    fn series_rows_count() {
        let (code, out, _) = run_str(&["series", "d", "--n", "1", "--order", "0", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out, "degree,coefficient\n0,1\n");
    }

    #[test]
    fn corollary_restriction_checked() {
        assert_eq!(run_str(&["verify", "corollary", "--n", "2", "--l", "2", "--order", "1"]).0, 2);
        assert_eq!(run_str(&["verify", "corollary", "--n", "2", "--order", "1"]).0, 2);
        assert_eq!(run_str(&["verify", "a8", "--n", "2", "--l", "1", "--order", "1"]).0, 2);
    }
}

//! Command-line driver.
//!
//! Subcommands: `corep` (compute and print T_ℓ, cached), `verify` (run the
//! exact check suites, one PASS/FAIL line each), `index` (multi-index ↔
//! half-integer index table), `det` and `minor` (quantum determinant and
//! minors as polynomials).
//!
//! Exit codes: 0 on success / all checks passing, 1 when a verification
//! check fails, 2 on invalid input. Verification always recomputes from
//! scratch; only `corep` reads and writes the cache, so a stale cache can
//! never influence a verdict.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::ncalg::{confluence_suite, coproduct, TensorPoly2};
use crate::qcomb::enumerate_desc_lex;
use crate::qplane::verify_q_binomial_theorem;
use crate::qscalar::Scalar;
use crate::{cache, corep, minors, serialize};

#[derive(Parser)]
#[command(
    name = "qcorep",
    version,
    about = "Exact matrix corepresentations of the quantum special linear group"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the corepresentation matrix T for (N, k) and print it.
    Corep(CorepArgs),
    /// Run exact verification checks and report PASS/FAIL per check.
    Verify(VerifyArgs),
    /// Print the multi-index to half-integer index table for (N, k).
    Index(IndexArgs),
    /// Print the quantum determinant for N.
    Det(DetArgs),
    /// Print the quantum minor for the given row and column sets.
    Minor(MinorArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CheckName {
    /// Left- and right-derived matrices coincide.
    Match,
    /// Coproduct of every entry equals the matrix convolution.
    Coassoc,
    /// Counit of T is the identity matrix.
    Counit,
    /// Determinant identities: group-like coproduct, counit 1, row = column
    /// expansion, centrality.
    Det,
    /// Minor coproduct and counit identities for all index-set pairs.
    Minors,
    /// Antipode axiom, plus sign-convention uniqueness at N = 2.
    Antipode,
    /// Randomized rewrite strategies agree on normal forms.
    Confluence,
    /// Two-variable q-binomial theorem up to degree 8.
    Qbinom,
}

impl CheckName {
    fn name(self) -> &'static str {
        match self {
            CheckName::Match => "match",
            CheckName::Coassoc => "coassoc",
            CheckName::Counit => "counit",
            CheckName::Det => "det",
            CheckName::Minors => "minors",
            CheckName::Antipode => "antipode",
            CheckName::Confluence => "confluence",
            CheckName::Qbinom => "qbinom",
        }
    }

    const ALL: [CheckName; 8] = [
        CheckName::Match,
        CheckName::Coassoc,
        CheckName::Counit,
        CheckName::Det,
        CheckName::Minors,
        CheckName::Antipode,
        CheckName::Confluence,
        CheckName::Qbinom,
    ];
}

#[derive(Args)]
struct CorepArgs {
    /// Number of quantum plane variables (N >= 2).
    #[arg(long)]
    n: u8,
    /// Homogeneous degree (k >= 1).
    #[arg(long)]
    k: u32,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Evaluate coefficients at this rational q in (0, 1]; text format only.
    #[arg(long = "eval-q")]
    eval_q: Option<String>,
    /// Write the output to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Cache directory (the QCOREP_CACHE_DIR environment variable overrides
    /// this flag).
    #[arg(long = "cache-dir")]
    cache_dir: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Number of quantum plane variables (N >= 2).
    #[arg(long)]
    n: u8,
    /// Homogeneous degree; required by the match/coassoc/counit checks.
    #[arg(long)]
    k: Option<u32>,
    /// Comma-separated list of checks to run; defaults to every check
    /// applicable to (N, k).
    #[arg(long, value_enum, value_delimiter = ',')]
    checks: Option<Vec<CheckName>>,
    /// Write the report to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct IndexArgs {
    /// Number of quantum plane variables (N >= 2).
    #[arg(long)]
    n: u8,
    /// Homogeneous degree (k >= 1).
    #[arg(long)]
    k: u32,
    /// Write the table to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct DetArgs {
    /// Matrix size N >= 1.
    #[arg(long)]
    n: u8,
    /// Output format (text or latex).
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Evaluate coefficients at this rational q in (0, 1]; text format only.
    #[arg(long = "eval-q")]
    eval_q: Option<String>,
    /// Write the output to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct MinorArgs {
    /// Matrix size N >= 1.
    #[arg(long)]
    n: u8,
    /// Comma-separated row indices, strictly increasing, 1-based.
    #[arg(long, value_delimiter = ',')]
    rows: Vec<u8>,
    /// Comma-separated column indices, strictly increasing, 1-based.
    #[arg(long, value_delimiter = ',')]
    cols: Vec<u8>,
    /// Output format (text or latex).
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Evaluate coefficients at this rational q in (0, 1]; text format only.
    #[arg(long = "eval-q")]
    eval_q: Option<String>,
    /// Write the output to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Parses argv and executes; returns the process exit code.
pub fn run<I>(args: I) -> i32
where
    I: IntoIterator<Item = OsString>,
{
    let argv: Vec<OsString> = args.into_iter().collect();
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Corep(args) => cmd_corep(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Index(args) => cmd_index(args),
        Command::Det(args) => cmd_det(args),
        Command::Minor(args) => cmd_minor(args),
    }
}

fn emit(text: &str, output: Option<&Path>) -> i32 {
    match output {
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                2
            }
        },
        None => {
            print!("{text}");
            0
        }
    }
}

/// Exit code for an engine error: invalid-input errors map to 2, failed
/// identities and internal errors to 1.
fn failure_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgs(_)
        | Error::InvalidMultiIndex(_)
        | Error::IndexOutOfRange(_)
        | Error::SizeMismatch { .. }
        | Error::Parse(_) => 2,
        _ => 1,
    }
}

fn parse_eval_q(s: &str) -> Option<f64> {
    let v = if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p.trim().parse().ok()?;
        let q: i64 = q.trim().parse().ok()?;
        if q == 0 {
            return None;
        }
        p as f64 / q as f64
    } else {
        s.trim().parse::<f64>().ok()?
    };
    (v.is_finite() && v > 0.0 && v <= 1.0).then_some(v)
}

/// Validates the --eval-q/--format combination; `Err(code)` is the exit
/// code to return immediately.
fn resolve_eval_q(eval_q: Option<&str>, format: Format) -> Result<Option<f64>, i32> {
    match eval_q {
        None => Ok(None),
        Some(s) => match parse_eval_q(s) {
            None => {
                eprintln!("error: --eval-q must be a rational in (0, 1], got `{s}`");
                Err(2)
            }
            Some(_) if format != Format::Text => {
                eprintln!("error: --eval-q is only available with --format text");
                Err(2)
            }
            Some(v) => Ok(Some(v)),
        },
    }
}

fn cmd_corep(args: CorepArgs) -> i32 {
    let eval_q = match resolve_eval_q(args.eval_q.as_deref(), args.format) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let dir = cache::resolve_cache_dir(args.cache_dir.as_deref());
    let t = match cache::load(&dir, args.n, args.k) {
        Some(t) => t,
        None => match corep::corep_matrix(args.n, args.k) {
            Ok(t) => {
                if let Err(e) = cache::store(&dir, &t) {
                    eprintln!("warning: could not write cache: {e}");
                }
                t
            }
            Err(e) => {
                eprintln!("error: {e}");
                return failure_code(&e);
            }
        },
    };
    let text = match (args.format, eval_q) {
        (Format::Json, _) => serialize::serialize_json(&t),
        (Format::Latex, _) => serialize::serialize_latex(&t),
        (Format::Text, Some(q0)) => serialize::serialize_text_eval(&t, q0),
        (Format::Text, None) => serialize::serialize_text(&t),
    };
    emit(&text, args.output.as_deref())
}

fn cmd_index(args: IndexArgs) -> i32 {
    if args.n < 2 || args.k < 1 {
        eprintln!("error: index tables need N >= 2 and k >= 1");
        return 2;
    }
    let ell = corep::ell_of(args.n, args.k);
    let basis = enumerate_desc_lex(args.n as usize, args.k);
    let mut out = format!(
        "index table for N = {}, k = {} (ell = {}, dim = {})\n",
        args.n,
        args.k,
        ell,
        basis.len()
    );
    for m in &basis {
        match corep::index_of(m, args.n, args.k) {
            Ok(s) => out.push_str(&format!("{m} -> {s}\n")),
            Err(e) => {
                eprintln!("error: {e}");
                return failure_code(&e);
            }
        }
    }
    emit(&out, args.output.as_deref())
}

fn render_poly(
    p: &crate::ncalg::NCPoly,
    format: Format,
    eval_q: Option<f64>,
) -> Option<String> {
    match (format, eval_q) {
        (Format::Json, _) => None,
        (Format::Latex, _) => Some(format!("{}\n", serialize::ncpoly_latex(p))),
        (Format::Text, Some(q0)) => Some(format!("{}\n", serialize::ncpoly_eval_text(p, q0))),
        (Format::Text, None) => Some(format!("{p}\n")),
    }
}

fn cmd_det(args: DetArgs) -> i32 {
    let eval_q = match resolve_eval_q(args.eval_q.as_deref(), args.format) {
        Ok(v) => v,
        Err(code) => return code,
    };
    if args.n < 1 {
        eprintln!("error: det needs N >= 1");
        return 2;
    }
    let det = minors::quantum_determinant(args.n);
    match render_poly(&det, args.format, eval_q) {
        Some(text) => emit(&text, args.output.as_deref()),
        None => {
            eprintln!("error: json format is not available for det");
            2
        }
    }
}

fn cmd_minor(args: MinorArgs) -> i32 {
    let eval_q = match resolve_eval_q(args.eval_q.as_deref(), args.format) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let rows = match minors::IndexSet::new(args.rows) {
        Ok(rows) => rows,
        Err(e) => {
            eprintln!("error: --rows: {e}");
            return 2;
        }
    };
    let cols = match minors::IndexSet::new(args.cols) {
        Ok(cols) => cols,
        Err(e) => {
            eprintln!("error: --cols: {e}");
            return 2;
        }
    };
    let minor = match minors::minor(&rows, &cols, args.n) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return failure_code(&e);
        }
    };
    match render_poly(&minor, args.format, eval_q) {
        Some(text) => emit(&text, args.output.as_deref()),
        None => {
            eprintln!("error: json format is not available for minor");
            2
        }
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

/// Why a check cannot run for the given job, if it cannot.
fn check_unavailable(c: CheckName, n: u8, k: Option<u32>) -> Option<String> {
    match c {
        CheckName::Match | CheckName::Coassoc | CheckName::Counit if k.is_none() => {
            Some(format!("check {} requires --k", c.name()))
        }
        CheckName::Det | CheckName::Minors | CheckName::Confluence if n > 4 => {
            Some(format!("check {} is limited to N <= 4", c.name()))
        }
        CheckName::Antipode if n > 3 => {
            Some(format!("check {} is limited to N <= 3", c.name()))
        }
        _ => None,
    }
}

fn run_check(c: CheckName, n: u8, k: Option<u32>) -> crate::error::Result<bool> {
    match c {
        CheckName::Match => match corep::corep_matrix(n, k.expect("validated")) {
            Ok(_) => Ok(true),
            Err(Error::MatchFailure { .. }) => Ok(false),
            Err(e) => Err(e),
        },
        CheckName::Coassoc => {
            let t = corep::corep_matrix(n, k.expect("validated"))?;
            corep::verify_coassociativity(&t)
        }
        CheckName::Counit => {
            let t = corep::corep_matrix(n, k.expect("validated"))?;
            corep::verify_counit(&t)
        }
        CheckName::Det => {
            let det = minors::quantum_determinant(n);
            let full = minors::IndexSet::full(n);
            let group_like = coproduct(&det)?
                .try_sub(&TensorPoly2::outer(&det, &det)?)?
                .is_zero();
            let counit_one = det.counit()? == Scalar::one();
            let row_eq_col = det == minors::minor_column_form(&full, &full, n)?;
            Ok(group_like && counit_one && row_eq_col && minors::verify_det_central(n)?)
        }
        CheckName::Minors => {
            for size in 1..n as usize {
                for rows in minors::IndexSet::all_subsets(n, size) {
                    for cols in minors::IndexSet::all_subsets(n, size) {
                        if !minors::verify_minor_coproduct(&rows, &cols, n)?
                            || !minors::verify_minor_counit(&rows, &cols, n)?
                        {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        }
        CheckName::Antipode => {
            if !minors::verify_antipode_axiom(n)? {
                return Ok(false);
            }
            if n == 2 {
                // Exactly one sign convention may satisfy the axiom.
                for convention in [
                    minors::SignConvention::IMinusJ,
                    minors::SignConvention::Signless,
                ] {
                    if minors::verify_antipode_axiom_with(n, convention)? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        CheckName::Confluence => Ok(confluence_suite(n, 200, 6, 0x5EED)),
        CheckName::Qbinom => verify_q_binomial_theorem(8),
    }
}

fn cmd_verify(args: VerifyArgs) -> i32 {
    if args.n < 2 {
        eprintln!("error: verify needs N >= 2");
        return 2;
    }
    if args.k == Some(0) {
        eprintln!("error: k must be >= 1");
        return 2;
    }

    let checks: Vec<CheckName> = match &args.checks {
        Some(list) if !list.is_empty() => {
            let mut seen = Vec::new();
            for c in list {
                if let Some(reason) = check_unavailable(*c, args.n, args.k) {
                    eprintln!("error: {reason}");
                    return 2;
                }
                if !seen.contains(c) {
                    seen.push(*c);
                }
            }
            seen
        }
        _ => CheckName::ALL
            .into_iter()
            .filter(|c| check_unavailable(*c, args.n, args.k).is_none())
            .collect(),
    };
    if checks.is_empty() {
        eprintln!("error: no checks are applicable to N = {}", args.n);
        return 2;
    }

    let mut report = String::new();
    let mut all_pass = true;
    for c in checks {
        let line = match run_check(c, args.n, args.k) {
            Ok(true) => format!("check {}: PASS\n", c.name()),
            Ok(false) => {
                all_pass = false;
                format!("check {}: FAIL\n", c.name())
            }
            Err(e) => {
                all_pass = false;
                format!("check {}: FAIL ({e})\n", c.name())
            }
        };
        report.push_str(&line);
    }
    let emit_code = emit(&report, args.output.as_deref());
    if emit_code != 0 {
        return emit_code;
    }
    if all_pass {
        0
    } else {
        1
    }
}

//! Command implementations for the `distlab` binary.
//!
//! [`run`] is the whole interface: it takes an argv, produces the rendered
//! payload and an exit code, and never touches the process itself, so the
//! tests can drive it in-process. Exit codes follow a three-way convention:
//! 0 for success, 1 when a verification sweep found a counterexample, and 2
//! for usage errors (unknown flags, malformed expressions, unreadable
//! table files).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use distlab::cube::CubeError;
use distlab::derivation::{
    compose, extend_leibniz, kappa_squared_on_generators, kristensen_kappa,
    parse_derivation_table, verify_derivation_property, verify_well_defined,
    GeneratorDerivation, PairCounterexample, RelationCounterexample,
};
use distlab::face::{
    check_restriction_commutes, check_single_restrictions, check_wedge_collapse,
    obstruction_map, FaceLabel,
};
use distlab::report::VerificationReport;
use distlab::steenrod::{admissible_basis, parse_element, ParseError};
use distlab::tikz::{render_tikz, TikzError};
use distlab::TableError;

/// Outcome of one invocation: what to print and how to exit.
///
/// Payloads for exit codes 0 and 1 belong on stdout, payloads for exit
/// code 2 on stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: u8,
    pub payload: String,
}

#[derive(Parser)]
#[command(
    name = "distlab",
    version,
    about = "Cubical distributivity and mod-2 Steenrod algebra verifier"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the obstruction table: the face label of every proper cell
    Faces {
        /// Ambient cube dimension (3^n - 1 cells)
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Sweep all faces: syntactic restriction vs recomputation, both orders
    CheckCompat {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Sweep all proper faces: the label must collapse to a*x_k at input k
    Wedge {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Normalize a Steenrod expression onto the admissible basis
    Adem {
        /// Expression in the grammar "Sq3 Sq1 + Sq4" (0 = zero, 1 = unit)
        #[arg(long)]
        expr: String,
    },
    /// Apply the Kristensen derivation (Sq^m -> Sq^{m-1})
    Kappa {
        #[arg(long)]
        expr: String,
    },
    /// Apply the square of the Kristensen derivation
    Kappa2 {
        #[arg(long)]
        expr: String,
    },
    /// Verify a generator-defined map against the Adem relations or the
    /// Leibniz rule on basis pairs
    VerifyDerivation {
        /// Built-in map to check
        #[arg(long, value_enum, conflicts_with = "table", required_unless_present = "table")]
        builtin: Option<BuiltinMap>,
        /// Derivation table file (header `rule: ...`, lines `m -> element`)
        #[arg(long)]
        table: Option<PathBuf>,
        /// Largest total degree swept
        #[arg(long)]
        upto: u32,
        #[arg(long, value_enum, default_value_t = Mode::Adem)]
        mode: Mode,
    },
    /// Print the admissible monomial basis in one degree
    Basis {
        #[arg(long)]
        degree: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tikz,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BuiltinMap {
    Kappa,
    Kappa2,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Adem,
    LeibnizPairs,
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Cube(#[from] CubeError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Tikz(#[from] TikzError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

/// Parses an argv (including the program name) and executes it.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let exit_code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            return CommandResult {
                exit_code,
                payload: err.render().to_string(),
            };
        }
    };
    match dispatch(cli.command) {
        Ok((payload, passed)) => CommandResult {
            exit_code: u8::from(!passed),
            payload,
        },
        Err(err) => CommandResult {
            exit_code: 2,
            payload: format!("error: {err}\n"),
        },
    }
}

#[derive(Serialize)]
struct TableDoc {
    n: usize,
    entries: Vec<EntryDoc>,
}

#[derive(Serialize)]
struct EntryDoc {
    code: String,
    label: FaceLabel,
}

fn dispatch(command: Command) -> Result<(String, bool), CliError> {
    match command {
        Command::Faces { n, format } => faces(n as usize, format),
        Command::CheckCompat { n } => check_compat(n as usize),
        Command::Wedge { n } => wedge(n as usize),
        Command::Adem { expr } => Ok((format!("{}\n", parse_element(&expr)?), true)),
        Command::Kappa { expr } => {
            let kappa = kristensen_kappa();
            let value = extend_leibniz(&kappa, &parse_element(&expr)?);
            Ok((format!("{value}\n"), true))
        }
        Command::Kappa2 { expr } => {
            let kappa = kristensen_kappa();
            let squared = compose(&kappa, &kappa);
            let value = squared.apply(&parse_element(&expr)?);
            Ok((format!("{value}\n"), true))
        }
        Command::VerifyDerivation {
            builtin,
            table,
            upto,
            mode,
        } => verify_derivation(builtin, table, upto, mode),
        Command::Basis { degree } => {
            let mut out = String::new();
            for m in admissible_basis(degree) {
                let _ = writeln!(out, "{m}");
            }
            Ok((out, true))
        }
    }
}

fn faces(n: usize, format: Format) -> Result<(String, bool), CliError> {
    let table = obstruction_map(n)?;
    let payload = match format {
        Format::Text => {
            let mut out = String::new();
            for (code, label) in table.entries() {
                let _ = writeln!(out, "{code}: {label}");
            }
            out
        }
        Format::Json => {
            let doc = TableDoc {
                n,
                entries: table
                    .entries()
                    .iter()
                    .map(|(code, label)| EntryDoc {
                        code: code.to_string(),
                        label: label.clone(),
                    })
                    .collect(),
            };
            let mut out = serde_json::to_string(&doc).expect("table serializes");
            out.push('\n');
            out
        }
        Format::Tikz => render_tikz(n)?,
    };
    Ok((payload, true))
}

fn check_compat(n: usize) -> Result<(String, bool), CliError> {
    let singles = check_single_restrictions(n)?;
    let pairs = check_restriction_commutes(n)?;
    let mut out = String::new();
    let _ = writeln!(out, "face compatibility sweep: n = {n}");
    let _ = writeln!(out, "single-step checks: {}", singles.checked);
    let _ = writeln!(out, "pair checks: {}", pairs.checked);
    let merged = singles.merge(pairs);
    if let Some(cx) = &merged.counterexample {
        let _ = writeln!(out, "first counterexample: {cx}");
    }
    let _ = writeln!(out, "result: {}", verdict(merged.passed));
    Ok((out, merged.passed))
}

fn wedge(n: usize) -> Result<(String, bool), CliError> {
    let report = check_wedge_collapse(n)?;
    let mut out = String::new();
    let _ = writeln!(out, "wedge collapse sweep: n = {n}");
    let _ = writeln!(out, "checks: {}", report.checked);
    if let Some(cx) = &report.counterexample {
        let _ = writeln!(out, "first counterexample: {cx}");
    }
    let _ = writeln!(out, "result: {}", verdict(report.passed));
    Ok((out, report.passed))
}

fn verify_derivation(
    builtin: Option<BuiltinMap>,
    table: Option<PathBuf>,
    upto: u32,
    mode: Mode,
) -> Result<(String, bool), CliError> {
    let (name, loaded): (String, Option<GeneratorDerivation>) = match (&builtin, &table) {
        (Some(BuiltinMap::Kappa), _) => ("kappa".to_string(), None),
        (Some(BuiltinMap::Kappa2), _) => ("kappa2".to_string(), None),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            (
                format!("table {}", path.display()),
                Some(parse_derivation_table(&text)?),
            )
        }
        (None, None) => unreachable!("clap requires one of --builtin/--table"),
    };

    match mode {
        Mode::Adem => {
            let derivation = match (&builtin, loaded) {
                (Some(BuiltinMap::Kappa), _) => kristensen_kappa(),
                (Some(BuiltinMap::Kappa2), _) => kappa_squared_on_generators(),
                (None, Some(d)) => d,
                (None, None) => unreachable!(),
            };
            let report = verify_well_defined(&derivation, upto);
            Ok(render_adem_report(&name, upto, &report))
        }
        Mode::LeibnizPairs => {
            let report = match (&builtin, loaded) {
                (Some(BuiltinMap::Kappa), _) => {
                    let kappa = kristensen_kappa();
                    verify_derivation_property(|x| extend_leibniz(&kappa, x), -1, upto)
                }
                (Some(BuiltinMap::Kappa2), _) => {
                    let kappa = kristensen_kappa();
                    let squared = compose(&kappa, &kappa);
                    verify_derivation_property(|x| squared.apply(x), squared.shift(), upto)
                }
                (None, Some(d)) => {
                    let shift = d.shift();
                    verify_derivation_property(|x| extend_leibniz(&d, x), shift, upto)
                }
                (None, None) => unreachable!(),
            };
            Ok(render_pairs_report(&name, upto, &report))
        }
    }
}

fn render_adem_report(
    name: &str,
    upto: u32,
    report: &VerificationReport<RelationCounterexample>,
) -> (String, bool) {
    let mut out = String::new();
    let _ = writeln!(out, "adem well-definedness check: {name}, degrees <= {upto}");
    let _ = writeln!(out, "relations checked: {}", report.checked);
    if let Some(cx) = &report.counterexample {
        let _ = writeln!(out, "first counterexample: (a, b) = ({}, {})", cx.a, cx.b);
        let _ = writeln!(out, "  word route:     {}", cx.word_route);
        let _ = writeln!(out, "  relation route: {}", cx.relation_route);
        let _ = writeln!(out, "  residual:       {}", cx.residual);
    }
    let _ = writeln!(out, "result: {}", verdict(report.passed));
    (out, report.passed)
}

fn render_pairs_report(
    name: &str,
    upto: u32,
    report: &VerificationReport<PairCounterexample>,
) -> (String, bool) {
    let mut out = String::new();
    let _ = writeln!(out, "derivation property check: {name}, degrees <= {upto}");
    let _ = writeln!(out, "pairs checked: {}", report.checked);
    if let Some(cx) = &report.counterexample {
        let _ = writeln!(out, "first counterexample: x = {}, y = {}", cx.x, cx.y);
        let _ = writeln!(out, "  F(xy):         {}", cx.got);
        let _ = writeln!(out, "  F(x)y + xF(y): {}", cx.expected);
    }
    let _ = writeln!(out, "result: {}", verdict(report.passed));
    (out, report.passed)
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

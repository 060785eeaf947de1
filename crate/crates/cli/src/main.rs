//! Command-line front end: validate inputs, evaluate choices, check
//! postulates, synthesize orders, run oracle sweeps, and drive the change
//! and argumentation instantiations.
//!
//! Every command reads the JSON/APX formats of the library and prints one
//! JSON document on standard output. Exit codes: 0 on success, 1 on domain
//! errors (with a machine-readable error object), 2 on usage errors.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use restricted_choice::argumentation::{parse_apx, ArgumentationError};
use restricted_choice::axioms::{general_suite, ss_suite};
use restricted_choice::change::ChangeError;
use restricted_choice::json as fmt;
use restricted_choice::oracle::{self, OracleError};
use restricted_choice::synthesis::{self, SynthesisError};
use restricted_choice::{RestrictedChoiceStructure, StructureError};

#[derive(Parser)]
#[command(
    name = "rchoice",
    version,
    about = "Restricted choice structures: evaluation, postulate checking, order synthesis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a structure file (`-` reads standard input) and report its
    /// shape
    Validate { structure: String },
    /// Evaluate the choice induced by an order file on one input set; the
    /// chain minimum is the fallback
    Eval {
        structure: PathBuf,
        order: PathBuf,
        /// Comma-separated alternative names
        #[arg(long)]
        input: String,
    },
    /// Run a postulate suite; `ss`/`sse` expect a structure and a table,
    /// `lcr` an operator file, `lca` an APX framework and a semantics config
    Axioms {
        file: PathBuf,
        second: Option<PathBuf>,
        #[arg(long, default_value = "ss")]
        suite: String,
    },
    /// Synthesize a witnessing fallback-minimal linear order from a table
    Synthesize {
        structure: PathBuf,
        table: PathBuf,
        /// Also emit every pipeline stage
        #[arg(long)]
        trace: bool,
    },
    /// Exhaustively sweep every feasible table of a structure against the
    /// postulate suite
    Oracle {
        structure: PathBuf,
        /// Restrict the sweep to one fallback (comma-separated names)
        #[arg(long)]
        k: Option<String>,
    },
    /// Apply a change operator: compute the revision of K by S
    Change {
        operator: PathBuf,
        #[arg(long)]
        k: String,
        #[arg(long)]
        s: String,
    },
    /// Query a choice-based extension semantics on a framework
    Af {
        framework: PathBuf,
        #[arg(long)]
        config: PathBuf,
        /// Comma-separated argument names
        #[arg(long)]
        query: String,
    },
}

enum Failure {
    Domain {
        kind: String,
        detail: String,
        extra: Option<Value>,
    },
    Usage(String),
}

impl Failure {
    fn domain(kind: &str, detail: impl ToString) -> Self {
        Failure::Domain {
            kind: kind.to_string(),
            detail: detail.to_string(),
            extra: None,
        }
    }
}

macro_rules! from_core_error {
    ($($ty:ty),* $(,)?) => {$(
        impl From<$ty> for Failure {
            fn from(e: $ty) -> Self {
                Failure::domain(e.kind(), e)
            }
        }
    )*};
}

from_core_error!(
    StructureError,
    fmt::FormatError,
    OracleError,
    ChangeError,
    ArgumentationError,
    SynthesisError,
);

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::domain("io", format!("{}: {e}", path.display())))
}

fn load_structure(path: &Path) -> Result<RestrictedChoiceStructure, Failure> {
    Ok(fmt::structure_from_json(&read_file(path)?)?)
}

fn run(command: Command) -> Result<Value, Failure> {
    match command {
        Command::Validate { structure } => {
            let text = if structure == "-" {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| Failure::domain("io", e))?;
                buf
            } else {
                read_file(Path::new(&structure))?
            };
            let structure = fmt::structure_from_json(&text)?;
            Ok(json!({
                "format_version": fmt::FORMAT_VERSION,
                "valid": true,
                "alternatives": structure.universe().len(),
                "domain_size": structure.domain().len(),
                "realizable_size": structure.realizable().len(),
                "union_closed": structure.is_union_closed(),
            }))
        }
        Command::Eval {
            structure,
            order,
            input,
        } => {
            let structure = load_structure(&structure)?;
            let u = structure.universe();
            let order = fmt::order_from_json(u, &read_file(&order)?)?;
            if !order
                .chain()
                .iter()
                .all(|e| structure.realizable().contains(e))
            {
                return Err(StructureError::CarrierNotRealizable.into());
            }
            let Some(&fallback) = order.chain().first() else {
                return Err(Failure::domain("empty_order", "order chain is empty"));
            };
            let input = u.parse_set(&input)?;
            let choice = order.evaluate(fallback, input);
            Ok(json!({
                "format_version": fmt::FORMAT_VERSION,
                "choice": fmt::set_to_json(u, choice),
            }))
        }
        Command::Axioms {
            file,
            second,
            suite,
        } => match suite.as_str() {
            "ss" | "sse" => {
                let second = second.ok_or_else(|| {
                    Failure::Usage(format!("--suite {suite} expects <structure> <table>"))
                })?;
                let structure = load_structure(&file)?;
                let table = fmt::table_from_json(&structure, &read_file(&second)?)?;
                let reports = if suite == "ss" {
                    ss_suite(&table)
                } else {
                    general_suite(&table)
                };
                Ok(fmt::reports_to_json(structure.universe(), &reports))
            }
            "lcr" => {
                if second.is_some() {
                    return Err(Failure::Usage(
                        "--suite lcr expects a single operator file".into(),
                    ));
                }
                let op = fmt::operator_from_json(&read_file(&file)?)?;
                Ok(fmt::reports_to_json(op.universe(), &op.lcr_certify()))
            }
            "lca" => {
                let second = second.ok_or_else(|| {
                    Failure::Usage("--suite lca expects <framework.apx> <config.json>".into())
                })?;
                let af = parse_apx(&read_file(&file)?)?;
                let sem = fmt::semantics_from_json(af.arguments(), &read_file(&second)?)?;
                let reports = sem.lca_certify(&af)?;
                Ok(fmt::reports_to_json(af.arguments(), &reports))
            }
            other => Err(Failure::Usage(format!(
                "unknown suite `{other}` (expected ss, sse, lcr or lca)"
            ))),
        },
        Command::Synthesize {
            structure,
            table,
            trace,
        } => {
            let structure = load_structure(&structure)?;
            let table = fmt::table_from_json(&structure, &read_file(&table)?)?;
            let u = structure.universe();
            match synthesis::synthesize(&table) {
                Ok(result) => {
                    let mut out = json!({
                        "format_version": fmt::FORMAT_VERSION,
                        "fallback": fmt::set_to_json(u, table.fallback()),
                        "order": fmt::order_to_json(u, &result.final_order),
                    });
                    if trace {
                        out["trace"] = fmt::trace_to_json(u, &result);
                    }
                    Ok(out)
                }
                Err(SynthesisError::AxiomViolation(report)) => Err(Failure::Domain {
                    kind: "axiom_violation".into(),
                    detail: format!("table violates {}", report.axiom),
                    extra: Some(fmt::report_to_json(u, &report)),
                }),
                Err(e) => Err(e.into()),
            }
        }
        Command::Oracle { structure, k } => {
            let structure = load_structure(&structure)?;
            let fallback = match k {
                Some(text) => Some(structure.universe().parse_set(&text)?),
                None => None,
            };
            let summary = oracle::sweep(&structure, fallback)?;
            Ok(fmt::sweep_summary_to_json(&summary))
        }
        Command::Change { operator, k, s } => {
            let op = fmt::operator_from_json(&read_file(&operator)?)?;
            let k = op.universe().parse_set(&k)?;
            let s = op.universe().parse_set(&s)?;
            let result = op.revise(k, s)?;
            Ok(json!({
                "format_version": fmt::FORMAT_VERSION,
                "result": fmt::set_to_json(op.universe(), result),
            }))
        }
        Command::Af {
            framework,
            config,
            query,
        } => {
            let af = parse_apx(&read_file(&framework)?)?;
            let sem = fmt::semantics_from_json(af.arguments(), &read_file(&config)?)?;
            let query = af.arguments().parse_set(&query)?;
            let choice = sem.pi_evaluate(&af, query)?;
            Ok(json!({
                "format_version": fmt::FORMAT_VERSION,
                "choice": fmt::set_to_json(af.arguments(), choice),
            }))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(value) => {
            println!("{value}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain {
            kind,
            detail,
            extra,
        }) => {
            let mut error = fmt::error_to_json(&kind, &detail);
            if let Some(extra) = extra {
                error["error"]["report"] = extra;
            }
            println!("{error}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("usage error: {message}");
            ExitCode::from(2)
        }
    }
}

//! Command line front end.
//!
//! Exit codes: 10 satisfiable, 20 unsatisfiable, 1 for input that cannot be
//! handled (parse error, not Horn, limits exceeded), 2 for usage errors.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use super::dimacs::{parse_dimacs, DimacsError};
use super::syntax::{parse_formula, ParseError};
use super::trace::TraceDocument;
use crate::horn::{horn_from_cnf, HornError, HornFormula};
use crate::normalform::{to_cnf_bounded, CnfError, CnfFormula, DEFAULT_CLAUSE_BUDGET};
use crate::oracle::{Oracle, OracleError, DEFAULT_MAX_SYMBOLS};
use crate::solver::{decide, extract_model, SolveOutcome, SolverConfig};

pub const EXIT_SAT: i32 = 10;
pub const EXIT_UNSAT: i32 = 20;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hornsat",
    version,
    about = "Decide Horn formulas by recursive fixpoint"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide satisfiability and print a model when there is one.
    Solve(SolveArgs),
    /// Like `solve`, followed by the full run trace.
    Trace {
        #[command(flatten)]
        solve: SolveArgs,
        /// Emit the trace as a single JSON object.
        #[arg(long)]
        json: bool,
    },
    /// Print the CNF clauses and the Horn implication form.
    Convert {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Classify by truth table: Valid, Satisfiable or Contradictory.
    Classify {
        /// Formula file, or `-` for standard input.
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_SYMBOLS)]
        max_symbols: usize,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Formula file, or `-` for standard input.
    input: PathBuf,
    /// Read DIMACS CNF instead of formula text.
    #[arg(long)]
    dimacs: bool,
    /// Give up when CNF conversion would exceed this many clauses.
    #[arg(long, default_value_t = DEFAULT_CLAUSE_BUDGET)]
    clause_budget: usize,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Keep firing after bot has been derived.
    #[arg(long)]
    no_early_stop: bool,
    /// Skip the syntactic satisfiability shortcuts.
    #[arg(long)]
    no_precheck: bool,
}

impl SolveArgs {
    fn config(&self, record_trace: bool) -> SolverConfig {
        SolverConfig {
            early_stop: !self.no_early_stop,
            precheck: !self.no_precheck,
            record_trace,
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("input is not valid UTF-8")]
    Utf8,
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("DIMACS error: {0}")]
    Dimacs(#[from] DimacsError),
    #[error(transparent)]
    Cnf(#[from] CnfError),
    #[error(transparent)]
    Horn(#[from] HornError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Loaded input: a display string for the formula and its CNF.
struct Problem {
    text: String,
    cnf: CnfFormula,
}

fn read_input(path: &PathBuf, stdin: &mut dyn Read) -> Result<String, CliError> {
    let mut bytes = Vec::new();
    let res = if path.as_os_str() == "-" {
        stdin.read_to_end(&mut bytes)
    } else {
        std::fs::File::open(path).and_then(|mut f| f.read_to_end(&mut bytes))
    };
    res.map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    String::from_utf8(bytes).map_err(|_| CliError::Utf8)
}

fn load(args: &InputArgs, stdin: &mut dyn Read) -> Result<Problem, CliError> {
    let text = read_input(&args.input, stdin)?;
    if args.dimacs {
        let cnf = parse_dimacs(&text)?;
        Ok(Problem {
            text: cnf.to_string(),
            cnf,
        })
    } else {
        let phi = parse_formula(&text)?;
        let cnf = to_cnf_bounded(&phi, args.clause_budget)?;
        Ok(Problem {
            text: phi.to_string(),
            cnf,
        })
    }
}

fn verdict_code(outcome: &SolveOutcome) -> i32 {
    if outcome.satisfiable {
        EXIT_SAT
    } else {
        EXIT_UNSAT
    }
}

fn write_verdict(
    out: &mut dyn Write,
    horn: &HornFormula,
    outcome: &SolveOutcome,
) -> std::io::Result<()> {
    match extract_model(horn, &outcome.final_set) {
        Ok(model) => writeln!(out, "SAT\n{model}"),
        Err(_) => writeln!(out, "UNSAT"),
    }
}

fn execute(command: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, CliError> {
    let io = |source| CliError::Io {
        path: "<stdout>".into(),
        source,
    };
    match command {
        Command::Solve(args) => {
            let problem = load(&args.input, stdin)?;
            let horn = horn_from_cnf(&problem.cnf)?;
            let outcome = decide(&horn, &args.config(false));
            write_verdict(out, &horn, &outcome).map_err(io)?;
            Ok(verdict_code(&outcome))
        }
        Command::Trace { solve, json } => {
            let problem = load(&solve.input, stdin)?;
            let horn = horn_from_cnf(&problem.cnf)?;
            let outcome = decide(&horn, &solve.config(true));
            let doc = TraceDocument::new(problem.text, &horn, &outcome);
            if json {
                writeln!(out, "{}", doc.to_json()).map_err(io)?;
            } else {
                write_verdict(out, &horn, &outcome).map_err(io)?;
                write!(out, "{}", doc.to_text()).map_err(io)?;
            }
            Ok(verdict_code(&outcome))
        }
        Command::Convert { input } => {
            let problem = load(&input, stdin)?;
            writeln!(out, "cnf:").map_err(io)?;
            for (i, clause) in problem.cnf.clauses().iter().enumerate() {
                writeln!(out, "  [{i}] {clause}").map_err(io)?;
            }
            out.flush().map_err(io)?;
            let horn = horn_from_cnf(&problem.cnf)?;
            writeln!(out, "horn:").map_err(io)?;
            if horn.is_trivially_true() {
                writeln!(out, "  (trivially true)").map_err(io)?;
            }
            for (i, imp) in horn.implications().iter().enumerate() {
                writeln!(out, "  [{i}] {imp}").map_err(io)?;
            }
            Ok(0)
        }
        Command::Classify { input, max_symbols } => {
            let phi = parse_formula(&read_input(&input, stdin)?)?;
            let class = Oracle::with_max_symbols(max_symbols).classify(&phi)?;
            writeln!(out, "{class}").map_err(io)?;
            Ok(0)
        }
    }
}

/// Runs the command line with explicit streams and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{rendered}");
                0
            };
        }
    };
    match execute(cli.command, stdin, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

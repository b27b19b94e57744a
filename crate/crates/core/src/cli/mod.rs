//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on usage, parse or limit errors, 2 when any
//! claim verdict is violated.

pub mod codefile;
pub mod report;
pub mod suites;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::constructions::{ConstructionKind, ConstructionSpec};
use crate::ghw::HierarchyOptions;
use crate::subsets::Limits;

pub use codefile::{parse_code_file, serialize_code};
pub use report::{analyze, AnalysisReport, AnalyzeOptions};
pub use suites::{run_suite, Suite, SuiteReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "lrc-ghw",
    version,
    about = "Generalized Hamming weights and locality of linear codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute locality, both weight hierarchies and every bound verdict for a code file.
    Analyze {
        file: PathBuf,
        /// Emit the JSON report instead of text.
        #[arg(long)]
        json: bool,
        /// Include a minimal-support subcode for every d_i.
        #[arg(long)]
        witnesses: bool,
        #[arg(long, value_name = "N")]
        limit_n: Option<usize>,
        #[arg(long, value_name = "M")]
        limit_oracle: Option<u64>,
        /// Evaluate the LRC claims for this locality instead of the computed one.
        #[arg(long, value_name = "R")]
        promised_r: Option<usize>,
    },
    /// Write a fixture code in the code-file format.
    Construct {
        /// tamo-barg, reed-solomon or random.
        kind: ConstructionKind,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Output path; stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run verification suites over random codes and certified fixtures.
    Verify {
        #[arg(value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, String> {
    let io = |e: std::io::Error| e.to_string();
    match command {
        Command::Analyze {
            file,
            json,
            witnesses,
            limit_n,
            limit_oracle,
            promised_r,
        } => {
            let text =
                std::fs::read_to_string(&file).map_err(|e| format!("{}: {e}", file.display()))?;
            let code = parse_code_file(&text).map_err(|e| format!("{}: {e}", file.display()))?;
            let defaults = Limits::default();
            let opts = AnalyzeOptions {
                hierarchy: HierarchyOptions {
                    limits: Limits {
                        max_n: limit_n.unwrap_or(defaults.max_n),
                        max_oracle: limit_oracle.unwrap_or(defaults.max_oracle),
                        time_budget: None,
                    },
                    witnesses,
                    prune: true,
                },
                promised_r,
            };
            let report = analyze(&code, &opts).map_err(|e| e.to_string())?;
            let rendered = if json {
                report.to_json() + "\n"
            } else {
                report.to_text()
            };
            out.write_all(rendered.as_bytes()).map_err(io)?;
            Ok(if report.has_violation() {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            })
        }
        Command::Construct {
            kind,
            q,
            n,
            k,
            r,
            seed,
            output,
        } => {
            let spec = ConstructionSpec {
                kind,
                q,
                n,
                k,
                r,
                seed,
            };
            let built = spec.build().map_err(|e| e.to_string())?;
            let text = serialize_code(&built.code);
            match output {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?
                }
                None => out.write_all(text.as_bytes()).map_err(io)?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { suite, seed, count } => {
            let reports = run_suite(suite, seed, count).map_err(|e| e.to_string())?;
            let mut ok = true;
            for r in &reports {
                out.write_all(r.render().as_bytes()).map_err(io)?;
                ok &= r.passed();
            }
            writeln!(
                out,
                "{}",
                if ok {
                    "all suites passed"
                } else {
                    "some suites FAILED"
                }
            )
            .map_err(io)?;
            Ok(if ok { EXIT_OK } else { EXIT_VIOLATION })
        }
    }
}

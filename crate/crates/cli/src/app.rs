//! Argument parsing and dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use bitableau_core::{Graph, OracleConfig};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::{self, CliqueMethod, IsoMethod, Outcome, EXIT_NO, EXIT_YES};
use crate::error::{CliError, EXIT_ERROR};
use crate::golden;
use crate::hunt::{self, CliqueHuntConfig, GreedyMethod, HuntMode, IsoHuntConfig};
use crate::input::{load_graph, parse_graph, Format};
use crate::report::Report;

#[derive(Debug, Parser)]
#[command(
    name = "bitableau",
    version,
    about = "Bitableau standardization of graphs, checked against exhaustive search"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input graph format.
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    pub format: Format,
    /// Treat the inputs as graph text rather than file paths.
    #[arg(long)]
    pub inline: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the standard form of one graph and the permutation reaching it.
    Canonize {
        /// File to read, `-` or nothing for stdin.
        input: Option<String>,
        #[command(flatten)]
        io: InputArgs,
        #[arg(long, value_enum, default_value_t = IsoMethod::Vab)]
        method: IsoMethod,
        /// Also print every transposition applied.
        #[arg(long)]
        trace: bool,
    },
    /// Decide whether two graphs are isomorphic (exit 0 yes, 1 no, 2 inconclusive).
    Iso {
        first: String,
        second: String,
        #[command(flatten)]
        io: InputArgs,
        #[arg(long, value_enum, default_value_t = IsoMethod::Vab)]
        method: IsoMethod,
        /// Stop as soon as the two tableaux coincide.
        #[arg(long)]
        early_exit: bool,
    },
    /// Search for a k-clique (exit 0 found, 1 not found, 2 inconclusive).
    Clique {
        input: Option<String>,
        #[command(flatten)]
        io: InputArgs,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = CliqueMethod::Restricted)]
        method: CliqueMethod,
        #[arg(long)]
        trace: bool,
    },
    /// Compare greedy standard forms with the oracle over many graphs.
    HuntIso {
        #[arg(long)]
        max_p: usize,
        #[arg(long, value_enum, default_value_t = IsoMethod::Vab)]
        method: IsoMethod,
        #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
        mode: ModeArg,
        /// Samples drawn in random mode.
        #[arg(long, default_value_t = 1000)]
        count: usize,
        /// Seed for random mode (required there).
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        max_counterexamples: Option<usize>,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare restricted clique search with the oracle on every graph.
    HuntClique {
        #[arg(long)]
        max_p: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_counterexamples: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Replay the golden cases.
    Selftest {
        #[arg(long, default_value = golden::DEFAULT_GOLDEN_DIR)]
        golden_dir: PathBuf,
    },
}

fn read_graph(source: Option<&str>, io: &InputArgs) -> Result<Graph, CliError> {
    if io.inline {
        let text = source.ok_or_else(|| CliError::Usage("--inline needs graph text".into()))?;
        parse_graph(text, io.format)
    } else {
        load_graph(source.map(Path::new), io.format)
    }
}

fn emit_report(
    json: String,
    output: Option<&Path>,
    summary: String,
    clean: bool,
) -> Result<Outcome, CliError> {
    let stdout = match output {
        Some(path) => {
            std::fs::write(path, json).map_err(|source| CliError::Io {
                path: path.to_path_buf(),
                source,
            })?;
            format!("{summary}\nreport written to {}\n", path.display())
        }
        None => json,
    };
    Ok(Outcome {
        stdout,
        exit: if clean { EXIT_YES } else { EXIT_NO },
    })
}

/// Runs one command. Hunts exit 0 when the report shows no unsound or
/// wrongly certified verdict, 1 otherwise.
pub fn execute(cli: Cli) -> Result<Outcome, CliError> {
    let oracle = OracleConfig::default();
    match cli.command {
        Command::Canonize {
            input,
            io,
            method,
            trace,
        } => {
            let g = read_graph(input.as_deref(), &io)?;
            commands::canonize(&g, method, trace, &oracle)
        }
        Command::Iso {
            first,
            second,
            io,
            method,
            early_exit,
        } => {
            if !io.inline && first == "-" && second == "-" {
                return Err(CliError::Usage("only one input can come from stdin".into()));
            }
            let g = read_graph(Some(&first), &io)?;
            let h = read_graph(Some(&second), &io)?;
            commands::iso(&g, &h, method, early_exit, &oracle)
        }
        Command::Clique {
            input,
            io,
            k,
            method,
            trace,
        } => {
            let g = read_graph(input.as_deref(), &io)?;
            commands::clique(&g, k, method, trace, &oracle)
        }
        Command::HuntIso {
            max_p,
            method,
            mode,
            count,
            seed,
            max_counterexamples,
            output,
        } => {
            let mode = match mode {
                ModeArg::Exhaustive => HuntMode::Exhaustive,
                ModeArg::Random => HuntMode::Random {
                    count,
                    seed: seed.ok_or_else(|| CliError::Usage("random mode needs --seed".into()))?,
                },
            };
            let cfg = IsoHuntConfig {
                max_p,
                method: GreedyMethod::from_iso(method)?,
                mode,
                max_counterexamples,
            };
            let body = hunt::hunt_iso(&cfg, &oracle)?;
            let t = &body.totals;
            let summary = format!(
                "{} graphs, {} pairs: {} unsound isomorphic, {} greedy stalls, {} inconclusive resolved",
                t.graphs_examined,
                t.pairs_total,
                t.unsound_isomorphic,
                t.greedy_stalls.map_or("n/a".to_string(), |s| s.to_string()),
                t.inconclusive_resolved
            );
            let clean = t.disagreements == 0;
            let seed = match mode {
                HuntMode::Random { seed, .. } => Some(seed),
                HuntMode::Exhaustive => None,
            };
            emit_report(
                Report::new(body, seed).to_json()?,
                output.as_deref(),
                summary,
                clean,
            )
        }
        Command::HuntClique {
            max_p,
            k,
            max_counterexamples,
            output,
        } => {
            let cfg = CliqueHuntConfig {
                max_p,
                k,
                max_counterexamples,
            };
            let body = hunt::hunt_clique(&cfg, &oracle)?;
            let t = &body.totals;
            let summary = format!(
                "{} graphs: {} unsound found, {} missed",
                t.graphs_examined, t.unsound_found, t.missed
            );
            let clean = t.disagreements == 0;
            emit_report(
                Report::new(body, None).to_json()?,
                output.as_deref(),
                summary,
                clean,
            )
        }
        Command::Selftest { golden_dir } => {
            let (stdout, exit) = golden::selftest(&golden_dir, &oracle)?;
            Ok(Outcome { stdout, exit })
        }
    }
}

/// Parses `args` (including the program name), runs, and writes output.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_YES };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match execute(cli) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.stdout.as_bytes());
            outcome.exit
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

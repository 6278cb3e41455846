//! Command-line front end. [`execute`] is the whole program minus process
//! exit, so it can be driven from tests.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::formats::{self, Format};
use crate::framework::SemanticsKind;
use crate::pipeline::{self, RunConfig, Task};
use crate::reductions::{cnf_to_af_admissible, cnf_to_af_stable, parse_dimacs, sigma1_to_projected};
use crate::td::DEFAULT_TD_PASSES;

#[derive(Debug, Parser)]
#[command(
    name = "afcount",
    version,
    about = "Count, decide and project extensions of argumentation frameworks",
    args_conflicts_with_subcommands = true
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Debug, Args)]
struct RunArgs {
    /// Framework file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// apx or tgf.
    #[arg(long, default_value = "apx")]
    format: Format,
    /// conflict-free, admissible, complete, preferred, semi-stable, stable or stage.
    #[arg(long)]
    semantics: Option<SemanticsKind>,
    /// count, cred-count, pcount, cred, skep or enumerate-oracle.
    #[arg(long)]
    task: Option<Task>,
    /// Argument for credulous/skeptical tasks.
    #[arg(long)]
    arg: Option<String>,
    /// Comma-separated projection arguments.
    #[arg(long, value_delimiter = ',')]
    projection: Option<Vec<String>>,
    /// Seed of the decomposition heuristic.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Heuristic passes; the narrowest decomposition wins.
    #[arg(long, default_value_t = DEFAULT_TD_PASSES)]
    td_passes: usize,
    /// Cross-check the answer by brute force on small frameworks.
    #[arg(long)]
    oracle_verify: bool,
    /// Print every table to stderr.
    #[arg(long)]
    trace: bool,
    /// Print a stats record after the answer.
    #[arg(long)]
    stats: bool,
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Translate a DIMACS CNF into a framework with a known count.
    Reduce(ReduceArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Construction {
    /// Models = stable extensions containing `t`.
    Stable,
    /// Models = admissible extensions containing `t`.
    Admissible,
    /// Projected models (over the `c ind` variables) = projected count of `t`.
    Projected,
}

#[derive(Debug, Args)]
struct ReduceArgs {
    /// DIMACS file.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "stable")]
    construction: Construction,
    /// Output format, apx or tgf.
    #[arg(long, default_value = "apx")]
    format: Format,
    /// Comma-separated projected variables; defaults to the `c ind` line.
    #[arg(long, value_delimiter = ',')]
    projected: Option<Vec<usize>>,
}

/// Parses `args` (including the program name), runs, and returns the exit code.
pub fn execute<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Some(Command::Reduce(r)) => reduce(&r, out, err),
        None => solve(cli.run, out, err),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn solve(a: RunArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let input = a.input.ok_or_else(|| Error::Usage("--input is required".into()))?;
    let semantics = a.semantics.ok_or_else(|| Error::Usage("--semantics is required".into()))?;
    let task = a.task.ok_or_else(|| Error::Usage("--task is required".into()))?;
    let mut config = RunConfig::new(input, semantics, task);
    config.format = a.format;
    config.arg = a.arg;
    config.projection = a.projection;
    config.seed = a.seed;
    config.td_passes = a.td_passes;
    config.oracle_verify = a.oracle_verify;
    config.trace = a.trace;
    config.stats = a.stats;
    config.threads = a.threads;
    let output = pipeline::run(&config)?;
    if let Some(trace) = &output.trace {
        write!(err, "{trace}")?;
    }
    writeln!(out, "{}", output.render(config.stats))?;
    Ok(())
}

fn reduce(r: &ReduceArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let dimacs = parse_dimacs(&std::fs::read_to_string(&r.input)?)?;
    let reduced = match r.construction {
        Construction::Stable => cnf_to_af_stable(&dimacs.formula),
        Construction::Admissible => cnf_to_af_admissible(&dimacs.formula),
        Construction::Projected => {
            let vars = r
                .projected
                .clone()
                .or(dimacs.projected)
                .ok_or_else(|| Error::Usage("projected construction needs --projected or a `c ind` line".into()))?;
            sigma1_to_projected(&dimacs.formula, &vars)?
        }
    };
    write!(out, "{}", formats::write(&reduced.framework, r.format))?;
    writeln!(err, "target: {}", reduced.target)?;
    if matches!(r.construction, Construction::Projected) {
        writeln!(err, "projection: {}", reduced.projection.join(","))?;
    }
    Ok(())
}

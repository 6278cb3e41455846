//! End-to-end runs: decompose, compute tables, purge, then count, decide
//! or project.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::argset::ArgSet;
use crate::dp::{self, LocalAlgorithm};
use crate::error::{Error, Result};
use crate::formats::{self, Format};
use crate::framework::{ArgumentationFramework, SemanticsKind, DEFAULT_ORACLE_CAP};
use crate::oracle::Oracle;
use crate::projection::{count_projected, ProjectionLimits};
use crate::semantics::{with_algorithm, AlgorithmVisitor};
use crate::td::{nice_decomposition, DEFAULT_TD_PASSES};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Task {
    Count,
    CredCount,
    PCount,
    Cred,
    Skep,
    EnumerateOracle,
}

impl Task {
    pub const ALL: [Task; 6] = [
        Task::Count,
        Task::CredCount,
        Task::PCount,
        Task::Cred,
        Task::Skep,
        Task::EnumerateOracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Task::Count => "count",
            Task::CredCount => "cred-count",
            Task::PCount => "pcount",
            Task::Cred => "cred",
            Task::Skep => "skep",
            Task::EnumerateOracle => "enumerate-oracle",
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Task {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Task::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown task `{s}`"))
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub input: PathBuf,
    pub format: Format,
    pub semantics: SemanticsKind,
    pub task: Task,
    pub arg: Option<String>,
    pub projection: Option<Vec<String>>,
    pub seed: u64,
    pub td_passes: usize,
    pub oracle_verify: bool,
    pub trace: bool,
    pub stats: bool,
    pub threads: usize,
    pub limits: ProjectionLimits,
}

impl RunConfig {
    pub fn new(input: impl Into<PathBuf>, semantics: SemanticsKind, task: Task) -> Self {
        RunConfig {
            input: input.into(),
            format: Format::Apx,
            semantics,
            task,
            arg: None,
            projection: None,
            seed: 0,
            td_passes: DEFAULT_TD_PASSES,
            oracle_verify: false,
            trace: false,
            stats: false,
            threads: 1,
            limits: ProjectionLimits::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let needs_arg = matches!(self.task, Task::Cred | Task::Skep | Task::CredCount);
        if needs_arg && self.arg.is_none() {
            return Err(Error::Usage(format!("task {} requires --arg", self.task)));
        }
        if self.task == Task::PCount && self.projection.is_none() {
            return Err(Error::Usage("task pcount requires --projection".into()));
        }
        if self.threads == 0 {
            return Err(Error::Usage("--threads must be at least 1".into()));
        }
        if self.td_passes == 0 {
            return Err(Error::Usage("--td-passes must be at least 1".into()));
        }
        Ok(())
    }
}

/// Width `k`, node count `g`, largest purged table `m`, phase timings and
/// the final count.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunStats {
    pub width: usize,
    pub nodes: usize,
    pub max_table: usize,
    pub count: BigUint,
    pub ms_td: u128,
    pub ms_dp: u128,
    pub ms_purge: u128,
    pub ms_proj: u128,
}

impl fmt::Display for RunStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "width={} nodes={} max_table={} count={} ms_td={} ms_dp={} ms_purge={} ms_proj={}",
            self.width,
            self.nodes,
            self.max_table,
            self.count,
            self.ms_td,
            self.ms_dp,
            self.ms_purge,
            self.ms_proj
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Answer {
    Count(BigUint),
    Decision(bool),
    Extensions(Vec<String>),
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Answer::Count(c) => write!(f, "{c}"),
            Answer::Decision(b) => f.write_str(if *b { "YES" } else { "NO" }),
            Answer::Extensions(list) => f.write_str(&list.join("\n")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunOutput {
    pub answer: Answer,
    pub stats: RunStats,
    pub trace: Option<String>,
}

impl RunOutput {
    /// The lines the command line prints: the answer, then the stats
    /// record when requested.
    pub fn render(&self, with_stats: bool) -> String {
        let mut s = self.answer.to_string();
        if with_stats {
            s.push('\n');
            s.push_str(&self.stats.to_string());
        }
        s
    }
}

/// Reads and parses the configured input, then runs it.
pub fn run(config: &RunConfig) -> Result<RunOutput> {
    config.validate()?;
    let text = std::fs::read_to_string(&config.input)?;
    let af = formats::parse(&text, config.format)?;
    run_on(&af, config)
}

/// Runs the configured task on an already parsed framework.
pub fn run_on(af: &ArgumentationFramework, config: &RunConfig) -> Result<RunOutput> {
    config.validate()?;
    let cred = match &config.arg {
        Some(name) => Some(af.index_of(name)?),
        None => None,
    };
    let projection = match &config.projection {
        Some(names) => {
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            Some(af.set_of(&refs)?)
        }
        None => None,
    };
    if config.task == Task::EnumerateOracle {
        return enumerate_oracle(af, config);
    }
    let pool = if config.threads > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(config.threads)
                .build()
                .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?,
        )
    } else {
        None
    };
    let output = with_algorithm(
        config.semantics,
        Solve {
            af,
            config,
            cred,
            projection: projection.as_ref(),
            pool: pool.as_ref(),
        },
    )?;
    if config.oracle_verify && af.len() <= DEFAULT_ORACLE_CAP {
        verify(af, config, cred, projection.as_ref(), &output.answer)?;
    }
    Ok(output)
}

fn enumerate_oracle(af: &ArgumentationFramework, config: &RunConfig) -> Result<RunOutput> {
    let start = Instant::now();
    let oracle = Oracle::new(af)?;
    let cred = config.arg.as_deref().map(|a| af.index_of(a)).transpose()?;
    let exts: Vec<ArgSet> = oracle
        .enumerate(config.semantics)
        .into_iter()
        .filter(|e| cred.is_none_or(|c| e.contains(c)))
        .collect();
    let stats = RunStats {
        count: BigUint::from(exts.len()),
        ms_dp: start.elapsed().as_millis(),
        ..RunStats::default()
    };
    let lines = exts.iter().map(|e| af.format_set(e)).collect();
    Ok(RunOutput {
        answer: Answer::Extensions(lines),
        stats,
        trace: None,
    })
}

struct Solve<'a> {
    af: &'a ArgumentationFramework,
    config: &'a RunConfig,
    cred: Option<usize>,
    projection: Option<&'a ArgSet>,
    pool: Option<&'a rayon::ThreadPool>,
}

impl AlgorithmVisitor for Solve<'_> {
    type Output = Result<RunOutput>;

    fn visit<A: LocalAlgorithm>(self, alg: &A) -> Result<RunOutput> {
        let Solve {
            af,
            config,
            cred,
            projection,
            pool,
        } = self;
        let mut stats = RunStats::default();

        let t0 = Instant::now();
        let ntd = nice_decomposition(af, config.seed, config.td_passes);
        stats.ms_td = t0.elapsed().as_millis();
        stats.width = ntd.width();
        stats.nodes = ntd.len();

        // skeptical acceptance compares the unfiltered count with the filtered one
        let dp_cred = match config.task {
            Task::Count | Task::Skep => None,
            _ => cred,
        };
        let t1 = Instant::now();
        let ttd = dp::run_dp(alg, &ntd, af, dp_cred, pool);
        stats.ms_dp = t1.elapsed().as_millis();
        let trace = config.trace.then(|| dp::trace(alg, &ttd, af));

        let t2 = Instant::now();
        let purged = dp::purge(alg, &ttd);
        stats.ms_purge = t2.elapsed().as_millis();
        stats.max_table = dp::max_table(&purged);

        let total = dp::count_extensions(alg, &purged);
        let answer = match config.task {
            Task::Count | Task::CredCount => {
                stats.count = total.clone();
                Answer::Count(total)
            }
            Task::Cred => {
                stats.count = total.clone();
                Answer::Decision(!total.is_zero())
            }
            Task::Skep => {
                let with_arg = dp::count_extensions(alg, &dp::run_dp(alg, &ntd, af, cred, pool));
                stats.count = with_arg.clone();
                Answer::Decision(with_arg == total)
            }
            Task::PCount => {
                let p = projection.expect("validated");
                let t3 = Instant::now();
                let (count, _route) = count_projected(alg, &purged, p, config.limits)?;
                stats.ms_proj = t3.elapsed().as_millis();
                stats.count = count.clone();
                Answer::Count(count)
            }
            Task::EnumerateOracle => unreachable!("handled before decomposition"),
        };
        Ok(RunOutput {
            answer,
            stats,
            trace,
        })
    }
}

fn verify(
    af: &ArgumentationFramework,
    config: &RunConfig,
    cred: Option<usize>,
    projection: Option<&ArgSet>,
    answer: &Answer,
) -> Result<()> {
    let oracle = Oracle::new(af)?;
    let sem = config.semantics;
    let expected = match config.task {
        Task::Count => Answer::Count(oracle.count(sem).into()),
        Task::CredCount => Answer::Count(oracle.count_credulous_index(sem, cred).into()),
        Task::Cred => Answer::Decision(oracle.count_credulous_index(sem, cred) > 0),
        Task::Skep => Answer::Decision(oracle.count_credulous_index(sem, cred) == oracle.count(sem)),
        Task::PCount => {
            let p = projection.expect("validated");
            Answer::Count(oracle.count_projected_index(sem, cred, p).into())
        }
        Task::EnumerateOracle => return Ok(()),
    };
    if &expected != answer {
        return Err(Error::OracleMismatch {
            task: config.task.to_string(),
            solver: answer.to_string(),
            oracle: expected.to_string(),
        });
    }
    Ok(())
}

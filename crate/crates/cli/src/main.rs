//! `dmc`: validate structures, run the verification pipeline, print Maurer-Cartan
//! coordinates. Exit status 0 when every selected check passes, 1 when a mathematical
//! check fails, 2 for bad input or configuration.

mod render;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dmc_core::fixtures;
use dmc_core::lie::{CeOptions, LInfinityStructure};
use dmc_core::pipeline::{parse_checks, run_checks_with, run_structural, Bounds, Check, CheckResult, Report, SELFTEST};
use dmc_core::Error;
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "dmc", version, about = "Exact checks for Chevalley-Eilenberg cochains against normalized Maurer-Cartan functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse structures and check the generalized Jacobi and Bianchi identities.
    Validate {
        /// JSON files, or names of shipped fixtures.
        #[arg(required = true)]
        inputs: Vec<String>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run validate, ce, mc, normalize, phi and quasi-iso (or the checks given).
    Verify {
        #[arg(required = true)]
        inputs: Vec<String>,
        #[arg(long, env = "DMC_CHECKS")]
        checks: Option<String>,
        /// Negative control: negate the binary bracket on the cochain side only.
        #[arg(long)]
        flip_binary_sign: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Structure-independent checks: Eilenberg-Zilber, the surjection pairing, kernel
    /// versus quotient normalization, simplex identities.
    Selftest {
        #[arg(long, env = "DMC_CHECKS")]
        checks: Option<String>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Coordinates, structure maps, closed-form verdicts and the classical locus.
    McLocus {
        input: String,
        #[command(flatten)]
        run: RunArgs,
    },
    /// List the shipped fixtures, or write them as JSON files into a directory.
    Fixtures {
        #[arg(long)]
        write: Option<PathBuf>,
    },
}

#[derive(Args, Clone)]
struct RunArgs {
    /// Simplicial levels / cochain degrees (default 3, or 4 for abelian structures).
    #[arg(long, env = "DMC_LEVELS")]
    levels: Option<usize>,
    /// Weights strictly below this bound are kept (default 3, or 4 for abelian structures).
    #[arg(long, env = "DMC_WEIGHT")]
    weight: Option<u32>,
    /// Cohomology is compared in degrees >= -depth (default: levels).
    #[arg(long, env = "DMC_DEPTH")]
    depth: Option<usize>,
    #[arg(long, env = "DMC_FORMAT", value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for independent inputs (default: all cores).
    #[arg(long, env = "DMC_JOBS")]
    jobs: Option<usize>,
    /// Seed for the random families used by selftests.
    #[arg(long, env = "DMC_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Resolved configuration for one run.
struct RunConfig {
    levels: Option<usize>,
    weight: Option<u32>,
    depth: Option<usize>,
    format: Format,
    seed: u64,
}

impl RunConfig {
    fn from_args(a: &RunArgs) -> Result<Self, Error> {
        if let Some(j) = a.jobs {
            if j == 0 {
                return Err(Error::Range("--jobs must be at least 1".into()));
            }
            // a global pool set twice is an error; the first setting wins
            let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
        }
        let c = Self { levels: a.levels, weight: a.weight, depth: a.depth, format: a.format, seed: a.seed };
        c.bounds(false)?;
        Ok(c)
    }

    fn bounds(&self, abelian: bool) -> Result<Bounds, Error> {
        let base = if abelian { 4 } else { 3 };
        let levels = self.levels.unwrap_or(base);
        Bounds::new(levels, self.weight.unwrap_or(base as u32), self.depth.unwrap_or(levels))
    }
}

enum Outcome {
    Pass,
    Fail,
    InputError,
}

impl Outcome {
    fn code(self) -> ExitCode {
        ExitCode::from(match self {
            Outcome::Pass => 0,
            Outcome::Fail => 1,
            Outcome::InputError => 2,
        })
    }

    fn combine(outcomes: impl IntoIterator<Item = Outcome>) -> Outcome {
        outcomes.into_iter().fold(Outcome::Pass, |acc, o| match (acc, o) {
            (Outcome::InputError, _) | (_, Outcome::InputError) => Outcome::InputError,
            (Outcome::Fail, _) | (_, Outcome::Fail) => Outcome::Fail,
            _ => Outcome::Pass,
        })
    }
}

/// A file path, or the name of a shipped fixture when no such file exists.
fn load(input: &str) -> Result<LInfinityStructure, Error> {
    let path = Path::new(input);
    if path.exists() {
        return LInfinityStructure::load(path);
    }
    match fixtures::source(input) {
        Some(text) => LInfinityStructure::from_json(text),
        None => Err(Error::Range(format!("`{input}` is neither a file nor a shipped fixture"))),
    }
}

/// Per-input result: a report, or the load error that prevented one.
enum Item {
    Report(Report),
    Error { input: String, error: Error },
}

impl Item {
    fn outcome(&self) -> Outcome {
        match self {
            Item::Report(r) if r.pass() => Outcome::Pass,
            Item::Report(_) => Outcome::Fail,
            Item::Error { error, .. } if error.is_input_error() => Outcome::InputError,
            Item::Error { .. } => Outcome::Fail,
        }
    }
}

fn run_input(input: &str, cfg: &RunConfig, checks: &[Check], opts: CeOptions) -> Item {
    let result = load(input).and_then(|l| {
        let bounds = cfg.bounds(l.truncate_positive().is_abelian())?;
        run_checks_with(&l, bounds, checks, opts)
    });
    match result {
        Ok(r) => Item::Report(r),
        Err(Error::BracketDegree { bracket, value, degree, expected }) => {
            // a degree violation is a failed check with a witness, not unreadable input
            let bounds = cfg.bounds(false).expect("validated");
            let mut r = Report::new(input, bounds);
            let witness = format!("bracket {bracket} has value `{value}` of degree {degree}, expected {expected}");
            r.checks.push(CheckResult::new("validate", false, vec![witness]));
            Item::Report(r)
        }
        Err(error) => Item::Error { input: input.to_string(), error },
    }
}

fn emit(items: &[Item], structural: &[CheckResult], format: Format) {
    let mut out = std::io::stdout().lock();
    match format {
        Format::Json => {
            let mut values: Vec<serde_json::Value> = items
                .iter()
                .map(|i| match i {
                    Item::Report(r) => serde_json::to_value(r).expect("serializable"),
                    Item::Error { input, error } => serde_json::json!({ "fixture": input, "error": error.to_string() }),
                })
                .collect();
            if !structural.is_empty() {
                values.push(serde_json::json!({ "selftest": structural }));
            }
            let doc = if values.len() == 1 { values.pop().expect("one") } else { serde_json::Value::Array(values) };
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        Format::Text => {
            for i in items {
                match i {
                    Item::Report(r) => render::report(&mut out, r),
                    Item::Error { input, error } => {
                        let _ = writeln!(out, "== {input}\nERROR {error}");
                    }
                }
            }
            if !structural.is_empty() {
                render::structural(&mut out, structural);
            }
        }
    }
}

fn structural_outcome(results: &[CheckResult]) -> Outcome {
    if results.iter().all(|c| c.status != dmc_core::pipeline::Status::Fail) {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Validate { inputs, run } => {
            let cfg = RunConfig::from_args(&run)?;
            let items: Vec<Item> = inputs.par_iter().map(|i| run_input(i, &cfg, &[Check::Validate], CeOptions::default())).collect();
            emit(&items, &[], cfg.format);
            Ok(Outcome::combine(items.iter().map(Item::outcome)))
        }
        Command::Verify { inputs, checks, flip_binary_sign, run } => {
            let cfg = RunConfig::from_args(&run)?;
            let checks = match checks {
                Some(s) => parse_checks(&s)?,
                None => Check::PIPELINE.to_vec(),
            };
            let opts = CeOptions { flip_binary_sign };
            let items: Vec<Item> = inputs.par_iter().map(|i| run_input(i, &cfg, &checks, opts)).collect();
            let structural: Vec<Check> = checks.iter().copied().filter(|c| c.is_structural()).collect();
            let extra = run_structural(cfg.bounds(false)?, &structural, cfg.seed)?;
            emit(&items, &extra, cfg.format);
            Ok(Outcome::combine(items.iter().map(Item::outcome).chain([structural_outcome(&extra)])))
        }
        Command::Selftest { checks, run } => {
            let cfg = RunConfig::from_args(&run)?;
            let checks = match checks {
                Some(s) => parse_checks(&s)?,
                None => SELFTEST.to_vec(),
            };
            if let Some(c) = checks.iter().find(|c| !SELFTEST.contains(c)) {
                return Err(Error::Range(format!("`{c}` needs an input structure; use `dmc verify`")));
            }
            let results = run_structural(cfg.bounds(false)?, &checks, cfg.seed)?;
            emit(&[], &results, cfg.format);
            Ok(structural_outcome(&results))
        }
        Command::McLocus { input, run } => {
            let cfg = RunConfig::from_args(&run)?;
            let l = load(&input)?.truncate_positive();
            let bounds = cfg.bounds(l.is_abelian())?;
            let summary = render::McSummary::build(&l, bounds.levels)?;
            let mut out = std::io::stdout().lock();
            match cfg.format {
                Format::Json => {
                    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&summary).expect("serializable"));
                }
                Format::Text => render::mc_summary(&mut out, &summary),
            }
            Ok(if summary.pass() { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Fixtures { write } => {
            let mut out = std::io::stdout().lock();
            for name in fixtures::NAMES {
                match &write {
                    Some(dir) => {
                        std::fs::create_dir_all(dir)?;
                        let path = dir.join(format!("{name}.json"));
                        std::fs::write(&path, fixtures::source(name).expect("shipped"))?;
                        let _ = writeln!(out, "{}", path.display());
                    }
                    None => {
                        let _ = writeln!(out, "{name}");
                    }
                }
            }
            Ok(Outcome::Pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(o) => o.code(),
        Err(e) => {
            eprintln!("dmc: {e}");
            if e.is_input_error() {
                Outcome::InputError.code()
            } else {
                Outcome::Fail.code()
            }
        }
    }
}

//! `kanext`: batch frontend for the engine. Parses fixture files, runs
//! validations, Kan extensions, monoidal-structure transports, regrading
//! oracles, and ring collapses, and emits a human summary plus an
//! optional canonical JSON report.
//!
//! Exit codes: 0 all checks clean, 1 a semantic check failed, 2 usage
//! or parse error, 3 a size/enumeration guard aborted the run.

mod commands;
mod fixture;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use commands::{run_command, CliFailure, RunConfig};
use fixture::{parse_fixture, FixtureSpec};
use kanext_core::limits::Limits;
use report::{Report, Verdict};

#[derive(Parser)]
#[command(name = "kanext", version, about = "finite Kan extension and regrading toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Fixture files (JSON, one fixture per file).
    files: Vec<PathBuf>,
    /// Directory of fixtures; every *.json inside is loaded.
    #[arg(long)]
    fixtures: Option<PathBuf>,
    /// Write the machine-readable report here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Abort if a comma category would exceed this many objects.
    #[arg(long, default_value_t = 10_000)]
    max_comma_objects: usize,
    /// Abort brute-force searches beyond this many candidates.
    #[arg(long, default_value_t = 1_000_000)]
    max_enumeration: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Validate each fixture's laws exhaustively.
    Validate(CommonArgs),
    /// Compute the pointwise left Kan extension of a pipeline fixture.
    KanExtend(CommonArgs),
    /// Transport the lax monoidal structure along the extension, with
    /// all certificates.
    MonoidalExtend(CommonArgs),
    /// Regrade directly and cross-check against the engine pipeline.
    Regrade(CommonArgs),
    /// Verify the extension's universal property against enumerated
    /// competitors.
    VerifyMoncat {
        #[command(flatten)]
        common: CommonArgs,
        /// Component size bound for competitor functors.
        #[arg(long, default_value_t = 2)]
        bound: usize,
    },
    /// Collapse a graded ring to its direct-sum ring.
    CollapseRing(CommonArgs),
    /// Run the full battery on every fixture in a directory.
    Corpus(CommonArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate(_) => "validate",
            Command::KanExtend(_) => "kan-extend",
            Command::MonoidalExtend(_) => "monoidal-extend",
            Command::Regrade(_) => "regrade",
            Command::VerifyMoncat { .. } => "verify-moncat",
            Command::CollapseRing(_) => "collapse-ring",
            Command::Corpus(_) => "corpus",
        }
    }

    fn common(&self) -> &CommonArgs {
        match self {
            Command::Validate(c)
            | Command::KanExtend(c)
            | Command::MonoidalExtend(c)
            | Command::Regrade(c)
            | Command::CollapseRing(c)
            | Command::Corpus(c) => c,
            Command::VerifyMoncat { common, .. } => common,
        }
    }

    fn moncat_bound(&self) -> usize {
        match self {
            Command::VerifyMoncat { bound, .. } => *bound,
            _ => 2,
        }
    }
}

fn collect_specs(command: &Command) -> Result<Vec<FixtureSpec>, CliFailure> {
    let common = command.common();
    let mut paths = common.files.clone();
    match (&common.fixtures, command) {
        (Some(dir), _) => {
            let entries = std::fs::read_dir(dir).map_err(|e| {
                CliFailure::Usage(format!("cannot read fixtures directory {}: {e}", dir.display()))
            })?;
            let mut found: Vec<PathBuf> = entries
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().map(|x| x == "json").unwrap_or(false))
                .collect();
            found.sort();
            paths.extend(found);
        }
        (None, Command::Corpus(_)) => {
            return Err(CliFailure::Usage(
                "corpus requires --fixtures DIR".to_string(),
            ));
        }
        (None, _) => {}
    }
    if paths.is_empty() {
        return Err(CliFailure::Usage("no fixture files given".to_string()));
    }
    paths
        .iter()
        .map(|p| parse_fixture(p).map_err(CliFailure::from))
        .collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let command_name = cli.command.name();
    let common = cli.command.common();
    let config = RunConfig {
        limits: Limits {
            max_comma_objects: common.max_comma_objects,
            max_enumeration: common.max_enumeration as u128,
            ..Limits::default()
        },
        moncat_bound: cli.command.moncat_bound(),
    };
    let out_path = common.out.clone();

    let outcome = collect_specs(&cli.command)
        .and_then(|specs| run_command(command_name, specs, &config));
    let (fixtures, checks) = match outcome {
        Ok(pair) => pair,
        Err(CliFailure::Usage(message)) => {
            eprintln!("error: {message}");
            return ExitCode::from(2);
        }
        Err(CliFailure::Guard(message)) => {
            eprintln!("aborted by guard: {message}");
            return ExitCode::from(3);
        }
    };

    let failed = checks.iter().filter(|c| c.verdict == Verdict::Fail).count();
    let exit_code = if failed > 0 { 1 } else { 0 };
    let report = Report {
        command: command_name.to_string(),
        fixtures,
        checks,
        exit_code,
    };

    for check in &report.checks {
        let tag = match check.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skip => "SKIP",
        };
        println!("{tag} {}", check.name);
        if let Some(cx) = &check.counterexample {
            println!("     counterexample: {cx}");
        }
    }
    println!(
        "{}: {} fixtures, {} checks, {} failed ({:.2?})",
        command_name,
        report.fixtures.len(),
        report.checks.len(),
        failed,
        started.elapsed()
    );

    if let Some(path) = out_path {
        if let Err(e) = std::fs::write(&path, report.to_canonical_json()) {
            eprintln!("error: cannot write report to {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(exit_code as u8)
}

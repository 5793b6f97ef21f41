//! `k5edge`: generators, colorers, discharging, decompositions and audits
//! from the command line.
//!
//! Exit codes: 0 success, 2 assertion failure, 3 budget exhausted,
//! 4 input error.

mod commands;
mod error;
mod manifest;
mod render;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;
use crate::manifest::{manifest_path, read_manifest, sha256_hex, InputFile, RunManifest};

#[derive(Debug, Parser)]
#[command(
    name = "k5edge",
    version,
    about = "Edge coloring and structure tools for K5-minor-free graphs"
)]
pub struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Time budget for each exact coloring search, in milliseconds.
    #[arg(long, global = true, default_value_t = 60_000)]
    pub budget_ms: u64,
    /// Write the report here (plus `<path>.manifest.json`) instead of stdout.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample a K5-minor-free graph as an edge list.
    Gen(GenArgs),
    /// Edge-color a graph with Vizing's algorithm, optionally exactly.
    Color {
        #[arg(long)]
        graph: PathBuf,
        /// Also compute the chromatic index exactly.
        #[arg(long)]
        exact: bool,
    },
    /// Test for a K5 minor and print a witness when one exists.
    Minor {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Tree-decompose an edge-maximal K5-minor-free graph.
    Decompose {
        #[arg(long)]
        graph: PathBuf,
        /// Add edges until the graph is edge-maximal first.
        #[arg(long)]
        maximalize: bool,
    },
    /// Run the discharging rules on a plane graph.
    Discharge(DischargeArgs),
    /// Check the necessary conditions for Δ-critical graphs.
    Audit {
        #[arg(long)]
        graph: PathBuf,
        /// Decide criticality exactly as well.
        #[arg(long)]
        oracle: bool,
    },
    /// Generate graphs with Δ ≥ 7 and check that each is class 1.
    Theorem1(Theorem1Args),
    /// Minor test, decomposition, coloring, audit and discharging in one report.
    Pipeline {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Re-run a manifest and compare the report digest.
    Replay { manifest: PathBuf },
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, default_value_t = 24)]
    pub n: usize,
    #[arg(long, default_value_t = 4)]
    pub parts: usize,
    #[arg(long, default_value_t = 0.25)]
    pub wagner_prob: f64,
    #[arg(long, default_value_t = 0.1)]
    pub delete: f64,
    #[arg(long, default_value_t = 0.0)]
    pub hub_bias: f64,
    /// Retry until the maximum degree reaches this value.
    #[arg(long)]
    pub min_delta: Option<usize>,
}

#[derive(Debug, Args)]
pub struct DischargeArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Rotation file; required in planar mode.
    #[arg(long)]
    pub rotation: Option<PathBuf>,
    /// Outer face id (defaults to face 0).
    #[arg(long, conflicts_with = "outer_vertices")]
    pub outer_face: Option<usize>,
    /// Pick the outer face as the face containing these vertices.
    #[arg(long, value_delimiter = ',')]
    pub outer_vertices: Option<Vec<usize>>,
    /// Comma-separated vertices of Y.
    #[arg(long = "Y", value_delimiter = ',')]
    pub y: Vec<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::PlanarLemma1)]
    pub mode: ModeArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    PlanarLemma1,
    K5Lemma3,
}

#[derive(Debug, Args)]
pub struct Theorem1Args {
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, default_value_t = 24)]
    pub n_max: usize,
    #[arg(long, default_value_t = 7)]
    pub min_delta: usize,
    /// Record per-instance times (the report is then no longer reproducible).
    #[arg(long)]
    pub timing: bool,
    /// Run instances one at a time.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Success = 0,
    AssertionFailed = 2,
    BudgetExhausted = 3,
}

/// A finished command: the rendered report and how it went.
pub struct Outcome {
    pub report: String,
    pub status: Status,
    pub inputs: Vec<PathBuf>,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Gen(_) => "gen",
            Command::Color { .. } => "color",
            Command::Minor { .. } => "minor",
            Command::Decompose { .. } => "decompose",
            Command::Discharge(_) => "discharge",
            Command::Audit { .. } => "audit",
            Command::Theorem1(_) => "theorem1",
            Command::Pipeline { .. } => "pipeline",
            Command::Replay { .. } => "replay",
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn run_and_record(cli: &Cli, args: Vec<String>) -> Result<Status, CliError> {
    if let Command::Replay { manifest } = &cli.command {
        return replay(manifest);
    }
    let outcome = commands::run(cli)?;
    match &cli.report {
        None => {
            print!("{}", outcome.report);
            std::io::stdout().flush().ok();
        }
        Some(path) => {
            write_file(path, &outcome.report)?;
            let m = RunManifest {
                command: cli.command.name().into(),
                args,
                inputs: outcome
                    .inputs
                    .iter()
                    .map(|p| InputFile::hash(p))
                    .collect::<Result<_, _>>()?,
                seed: cli.seed,
                budget_ms: cli.budget_ms,
                tool_version: env!("CARGO_PKG_VERSION").into(),
                output_digest: sha256_hex(outcome.report.as_bytes()),
            };
            let text = serde_json::to_string_pretty(&m).expect("manifest serializes") + "\n";
            write_file(&manifest_path(path), &text)?;
            println!("report {} sha256 {}", path.display(), m.output_digest);
        }
    }
    Ok(outcome.status)
}

fn replay(path: &Path) -> Result<Status, CliError> {
    let m = read_manifest(path)?;
    for input in &m.inputs {
        let now = InputFile::hash(Path::new(&input.path))?;
        if now.sha256 != input.sha256 {
            return Err(CliError::Input(format!(
                "{} changed since the manifest was written",
                input.path
            )));
        }
    }
    let argv = std::iter::once("k5edge".to_string()).chain(m.args.iter().cloned());
    let cli = Cli::try_parse_from(argv)
        .map_err(|e| CliError::Input(format!("manifest arguments: {}", e)))?;
    if matches!(cli.command, Command::Replay { .. }) {
        return Err(CliError::Input(
            "a manifest cannot replay another manifest".into(),
        ));
    }
    let outcome = commands::run(&cli)?;
    let digest = sha256_hex(outcome.report.as_bytes());
    let same = digest == m.output_digest;
    println!(
        "replay {} {} sha256 {}",
        m.command,
        if same { "identical" } else { "DIFFERS" },
        digest
    );
    Ok(if same {
        Status::Success
    } else {
        Status::AssertionFailed
    })
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 4 } else { 0 };
            e.print().ok();
            return ExitCode::from(code);
        }
    };
    match run_and_record(&cli, args) {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(4)
        }
    }
}

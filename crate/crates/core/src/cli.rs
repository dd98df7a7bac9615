//! The `eigenfactor` command line.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 power iteration did not
//! converge, 3 no citations flow between distinct journals.

use std::ffi::OsString;
use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::analysis::{robustness_harness, AnalysisError, RobustnessConfig};
use crate::graph::{load_edges, load_registry, CitationEdge, CrossCitationMatrix, GraphError, JournalRegistry};
use crate::output::{self, CitationFlowGraph, Format, GraphFormat};
use crate::ranking::{
    compute, DampingParameters, RankingError, DEFAULT_ALPHA, DEFAULT_MAX_ITERATIONS,
    DEFAULT_TOLERANCE,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NO_CONVERGENCE: i32 = 2;
pub const EXIT_NO_INTERNAL_CITATIONS: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "eigenfactor", version, about = "Eigenfactor and Article Influence scores for journal citation networks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank journals by Eigenfactor score.
    Compute(ComputeArgs),
    /// Check input files and report on the citation matrix.
    Validate(InputArgs),
    /// Re-rank random journal subsets and report rank stability.
    Robustness(RobustnessArgs),
    /// Write the citation-flow network as DOT or GraphML.
    ExportGraph(ExportArgs),
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Journals table with header `id,name,articles`.
    #[arg(long, value_name = "PATH")]
    pub journals: PathBuf,
    /// Edge list with header `citing,cited,count`.
    #[arg(long, value_name = "PATH")]
    pub edges: PathBuf,
}

/// Everything needed for a ranking run.
#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    #[command(flatten)]
    pub input: InputArgs,
    /// Damping factor, strictly between 0 and 1.
    #[arg(long, default_value_t = DEFAULT_ALPHA)]
    pub alpha: f64,
    /// L1 convergence tolerance.
    #[arg(long = "tol", default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    #[arg(long = "max-iter", default_value_t = DEFAULT_MAX_ITERATIONS)]
    pub max_iterations: usize,
    /// Output format: csv or json.
    #[arg(long, default_value = "csv")]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Census year label, carried into the output metadata.
    #[arg(long)]
    pub census_year: Option<i32>,
}

#[derive(Debug, Clone, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub run: RunConfig,
    /// Show only the N highest-ranked journals.
    #[arg(long, value_name = "N")]
    pub top: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct RobustnessArgs {
    #[command(flatten)]
    pub run: RunConfig,
    #[arg(long, default_value_t = 0.8)]
    pub keep_fraction: f64,
    #[arg(long, default_value_t = 50)]
    pub trials: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub run: RunConfig,
    #[arg(long, default_value = "dot")]
    pub graph_format: GraphFormat,
    /// Omit edges whose citation probability is below this value.
    #[arg(long, default_value_t = 0.0)]
    pub edge_threshold: f64,
}

/// Pipeline stage that failed, named in diagnostics.
#[derive(Debug, Clone, Copy)]
enum Stage {
    Arguments,
    Ingest,
    Ranking,
    Robustness,
    Output,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Arguments => "arguments",
            Stage::Ingest => "ingest",
            Stage::Ranking => "ranking",
            Stage::Robustness => "robustness",
            Stage::Output => "output",
        })
    }
}

#[derive(Debug)]
struct Failure {
    stage: Stage,
    code: i32,
    message: String,
}

impl Failure {
    fn new(stage: Stage, code: i32, message: impl ToString) -> Self {
        Failure {
            stage,
            code,
            message: message.to_string(),
        }
    }

    fn ingest(err: GraphError) -> Self {
        Failure::new(Stage::Ingest, EXIT_INPUT, err)
    }

    fn ranking(err: RankingError) -> Self {
        let code = match err {
            RankingError::NoConvergence { .. } => EXIT_NO_CONVERGENCE,
            RankingError::NoInternalCitations => EXIT_NO_INTERNAL_CITATIONS,
            _ => EXIT_INPUT,
        };
        Failure::new(Stage::Ranking, code, err)
    }

    fn analysis(err: AnalysisError) -> Self {
        match err {
            AnalysisError::Ranking(e) => Failure::ranking(e),
            AnalysisError::Graph(e) => Failure::ingest(e),
            other => Failure::new(Stage::Robustness, EXIT_INPUT, other),
        }
    }

    fn output(err: io::Error) -> Self {
        Failure::new(Stage::Output, EXIT_INPUT, err)
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = write!(stderr, "{}", err.render());
            return if err.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match execute(&cli.command, stdout) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(stderr, "error [{}]: {}", f.stage, f.message);
            f.code
        }
    }
}

fn execute(command: &Command, stdout: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Compute(args) => cmd_compute(args, stdout),
        Command::Validate(args) => cmd_validate(args, stdout),
        Command::Robustness(args) => cmd_robustness(args, stdout),
        Command::ExportGraph(args) => cmd_export_graph(args, stdout),
    }
}

fn load(input: &InputArgs) -> Result<(JournalRegistry, Vec<CitationEdge>), Failure> {
    let registry = load_registry(&input.journals).map_err(Failure::ingest)?;
    let edges = load_edges(&input.edges, &registry).map_err(Failure::ingest)?;
    Ok((registry, edges))
}

fn params(run: &RunConfig) -> Result<DampingParameters, Failure> {
    DampingParameters::new(run.alpha, run.tolerance, run.max_iterations)
        .map_err(|e| Failure::new(Stage::Arguments, EXIT_INPUT, e))
}

/// Sends `body` to `--out` if given, else to `stdout`.
fn emit(
    out: &Option<PathBuf>,
    stdout: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> Result<(), Failure> {
    match out {
        Some(path) => {
            let file = File::create(path).map_err(|e| {
                Failure::new(Stage::Output, EXIT_INPUT, format!("cannot create {}: {e}", path.display()))
            })?;
            let mut writer = BufWriter::new(file);
            body(&mut writer).map_err(Failure::output)?;
            writer.flush().map_err(Failure::output)
        }
        None => body(stdout).map_err(Failure::output),
    }
}

fn cmd_compute(args: &ComputeArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let params = params(&args.run)?;
    let (registry, edges) = load(&args.run.input)?;
    let z = CrossCitationMatrix::build(&registry, &edges).map_err(Failure::ingest)?;
    let mut result = compute(&registry, &z, &params)
        .map_err(Failure::ranking)?
        .into_result(&registry, &params);
    result.metadata.census_year = args.run.census_year;
    emit(&args.run.out, stdout, |w| {
        output::write_rankings(w, &result, args.run.format, args.top)
    })
}

fn cmd_validate(args: &InputArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let (registry, edges) = load(args)?;
    let z = CrossCitationMatrix::build(&registry, &edges).map_err(Failure::ingest)?;
    let report = output::validation_report(&registry, edges.len(), &z.validate());
    stdout.write_all(report.as_bytes()).map_err(Failure::output)
}

fn cmd_robustness(args: &RobustnessArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    if args.trials == 0 {
        return Err(Failure::new(Stage::Arguments, EXIT_INPUT, "--trials must be at least 1"));
    }
    if !(args.keep_fraction > 0.0 && args.keep_fraction <= 1.0) {
        return Err(Failure::new(
            Stage::Arguments,
            EXIT_INPUT,
            format!("--keep-fraction must lie in (0, 1], got {}", args.keep_fraction),
        ));
    }
    let params = params(&args.run)?;
    let (registry, edges) = load(&args.run.input)?;
    let config = RobustnessConfig {
        keep_fraction: args.keep_fraction,
        trials: args.trials,
        seed: args.seed,
        params,
    };
    let report = robustness_harness(&registry, &edges, &config).map_err(Failure::analysis)?;
    emit(&args.run.out, stdout, |w| {
        output::write_robustness(w, &report, args.run.format)
    })
}

fn cmd_export_graph(args: &ExportArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let params = params(&args.run)?;
    let (registry, edges) = load(&args.run.input)?;
    let z = CrossCitationMatrix::build(&registry, &edges).map_err(Failure::ingest)?;
    let run = compute(&registry, &z, &params).map_err(Failure::ranking)?;
    let graph = CitationFlowGraph::new(&registry, &run.normalized, &run.eigenfactor, args.edge_threshold);
    let text = graph.render(args.graph_format);
    emit(&args.run.out, stdout, |w| w.write_all(text.as_bytes()))
}

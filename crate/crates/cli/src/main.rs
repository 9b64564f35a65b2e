use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use edgecount::experiments::{
    artifact_stem, run_accuracy_trials, run_distinguishing_experiment, write_csv, write_json,
    ArtifactPaths, GraphSource, ParamOverrides, TrialConfig,
};
use edgecount::graph::{render_edge_list, write_edge_list, GraphSpec};
use edgecount::{full_non_adaptive_edge, Branch, EstimateReport, EstimatorParams};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(
    name = "edgecount",
    version,
    about = "Sublinear non-adaptive edge-count estimation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the estimator once and print the report.
    Estimate(EstimateArgs),
    /// Repeat the estimator over independent seeds and write CSV/JSON artifacts.
    Bench(BenchArgs),
    /// Run the two-graph distinguishing experiment.
    Lowerbound(LowerboundArgs),
    /// Generate a graph and write it as an edge list.
    Gen(GenArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// Generator spec, e.g. gnm:10000,100000 or path:10000.
    #[arg(long)]
    graph: Option<GraphSpec>,
    /// Edge-list file.
    #[arg(long)]
    file: Option<PathBuf>,
}

impl SourceArgs {
    fn source(&self) -> GraphSource {
        match (&self.graph, &self.file) {
            (Some(spec), _) => GraphSource::Generator(spec.clone()),
            (None, Some(path)) => GraphSource::File(path.clone()),
            (None, None) => unreachable!("clap enforces one source"),
        }
    }
}

#[derive(Args, Debug)]
struct ParamArgs {
    #[arg(long, default_value_t = 0.25)]
    eps: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long = "c-s")]
    c_s: Option<f64>,
    #[arg(long = "c-t")]
    c_t: Option<f64>,
    #[arg(long = "c-f")]
    c_f: Option<f64>,
    #[arg(long = "c-r")]
    c_r: Option<f64>,
    /// Split the collision sample into this many batches and take the median.
    #[arg(long)]
    collision_batches: Option<usize>,
}

impl ParamArgs {
    fn overrides(&self) -> ParamOverrides {
        ParamOverrides {
            c_s: self.c_s,
            c_t: self.c_t,
            c_f: self.c_f,
            c_r: self.c_r,
            gamma: None,
            collision_batches: self.collision_batches,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct EstimateArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Output directory.
    #[arg(long, env = "EDGECOUNT_OUT_DIR", default_value = "results")]
    out: PathBuf,
}

#[derive(Args, Debug)]
struct LowerboundArgs {
    #[arg(long, default_value_t = 10_000)]
    n: usize,
    /// Random-edge queries per graph.
    #[arg(long)]
    q: usize,
    #[arg(long, default_value_t = 500)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output directory.
    #[arg(long, env = "EDGECOUNT_OUT_DIR", default_value = "results")]
    out: PathBuf,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long)]
    graph: GraphSpec,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct EstimateOutput<'a> {
    graph: String,
    n: usize,
    #[serde(flatten)]
    report: &'a EstimateReport,
    params: &'a EstimatorParams,
}

fn cmd_estimate(args: &EstimateArgs) -> Result<ExitCode> {
    let source = args.source.source();
    let graph = source.resolve(args.params.seed)?;
    let params = args
        .params
        .overrides()
        .apply(args.params.eps)?
        .with_seed(args.params.seed);
    let report = full_non_adaptive_edge(&graph, &params)?;
    let out = EstimateOutput {
        graph: source.label(),
        n: graph.n(),
        report: &report,
        params: &params,
    };
    let mut stdout = std::io::stdout().lock();
    match args.format {
        Format::Json => writeln!(stdout, "{}", serde_json::to_string_pretty(&out)?)?,
        Format::Csv => {
            let q = &report.queries;
            writeln!(
                stdout,
                "n,m_hat,branch,r,k,d_tilde_h,p_tilde_h,deg,rand_edge,nbr,pair"
            )?;
            writeln!(
                stdout,
                "{},{},{},{},{},{},{},{},{},{},{}",
                graph.n(),
                report.m_hat.map(|m| m.to_string()).unwrap_or_default(),
                report.branch.as_str(),
                report.r,
                report.k,
                report.d_tilde_h,
                report.p_tilde_h,
                q.deg,
                q.rand_edge,
                q.nbr,
                q.pair
            )?;
        }
    }
    Ok(if report.branch == Branch::Failed {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn print_paths(paths: &ArtifactPaths) {
    println!("{}", paths.csv.display());
    println!("{}", paths.json.display());
}

fn cmd_bench(args: &BenchArgs) -> Result<ExitCode> {
    let mut config = TrialConfig::new(
        args.source.source(),
        args.params.eps,
        args.trials,
        args.params.seed,
    );
    config.overrides = args.params.overrides();
    let stats = run_accuracy_trials(&config)?;
    let stem = artifact_stem(
        "bench",
        stats.summary.n,
        &args.params.eps.to_string(),
        args.params.seed,
    );
    let paths = ArtifactPaths::new(&args.out, &stem);
    write_csv(&paths.csv, &stats.csv_rows())?;
    write_json(&paths.json, &stats.summary)?;
    print_paths(&paths);
    Ok(ExitCode::SUCCESS)
}

fn cmd_lowerbound(args: &LowerboundArgs) -> Result<ExitCode> {
    let result = run_distinguishing_experiment(args.n, args.q, args.trials, args.seed)?;
    let stem = artifact_stem("lowerbound", args.n, &format!("q{}", args.q), args.seed);
    let paths = ArtifactPaths::new(&args.out, &stem);
    write_csv(&paths.csv, &result.records)?;
    let mut summary = serde_json::to_value(&result)?;
    if let Some(obj) = summary.as_object_mut() {
        obj.remove("records");
    }
    write_json(&paths.json, &summary)?;
    print_paths(&paths);
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen(args: &GenArgs) -> Result<ExitCode> {
    let graph = args.graph.generate(args.seed)?;
    match &args.out {
        Some(path) => write_to(path, &graph)?,
        None => std::io::stdout()
            .lock()
            .write_all(render_edge_list(&graph).as_bytes())?,
    }
    Ok(ExitCode::SUCCESS)
}

fn write_to(path: &Path, graph: &edgecount::Graph) -> Result<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent)
            .with_context(|| format!("creating {}", parent.display()))?;
    }
    write_edge_list(graph, path).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Estimate(a) => cmd_estimate(a),
        Command::Bench(a) => {
            if a.trials == 0 {
                bail!("--trials must be at least 1");
            }
            cmd_bench(a)
        }
        Command::Lowerbound(a) => cmd_lowerbound(a),
        Command::Gen(a) => cmd_gen(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

//! `edcds` command-line front end.
//!
//! Exit codes: 0 on success, 1 on usage errors (bad flags, unknown algorithm,
//! out-of-range parameters), 2 when an input file cannot be read or parsed.
//! Diagnostics go to stderr.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bench::{self, Algorithm, BenchConfig, CdsInput};
use crate::cds::edc_cds;
use crate::edc::{DsAlgorithm, DsResult};
use crate::graph::{
    connected_components, generate_connected_udg, generate_udg, is_cds_per_component, is_dominating_set,
    Graph, GraphFile,
};
use crate::oracle::{check_cds_ratio, check_ds_ratio, EXACT_LIMIT};
use crate::{baselines, Error};

#[derive(Debug, Parser)]
#[command(
    name = "edcds",
    version,
    about = "Dominating sets and virtual backbones for wireless graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a random unit-disk graph and write it as graph JSON.
    Gen(GenArgs),
    /// Compute a dominating set for a graph file.
    Ds(DsArgs),
    /// Compute a connected dominating set for a graph file.
    Cds(CdsArgs),
    /// Compare algorithm sizes with exact optima on small graphs.
    Verify(VerifyArgs),
    /// Run the randomized benchmark sweep and write CSV files.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    /// Transmission radius.
    #[arg(long)]
    r: f64,
    /// Side of the square deployment area.
    #[arg(long, default_value_t = 100.0)]
    area: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DsChoice {
    EdcDs,
    EdcDsImproved,
    GreedyDs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CdsChoice {
    EdcCds,
    WuLi,
    GreedyCds,
}

#[derive(Debug, Args)]
struct DsArgs {
    #[arg(long, value_enum)]
    algo: DsChoice,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CdsArgs {
    #[arg(long, value_enum, default_value = "edc-cds")]
    algo: CdsChoice,
    /// Dominating set fed to edc-cds.
    #[arg(long, value_enum, default_value = "improved")]
    ds_input: CdsInput,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Check a single graph file instead of random samples.
    #[arg(long = "in", conflicts_with_all = ["n", "trials"])]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = 12)]
    n: usize,
    #[arg(long, default_value_t = 50)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 50.0)]
    r: f64,
    #[arg(long, default_value_t = 100.0)]
    area: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// TOML file with any of the BenchConfig keys; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    n_values: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    radii: Option<Vec<f64>>,
    #[arg(long)]
    area: Option<f64>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_delimiter = ',', value_enum)]
    algos: Option<Vec<Algorithm>>,
    #[arg(long, value_enum)]
    cds_input: Option<CdsInput>,
    /// Record per-run wall-clock time (makes the trial CSV machine-dependent).
    #[arg(long)]
    timing: bool,
    /// Trial CSV path.
    #[arg(long, default_value = "trials.csv")]
    out: PathBuf,
    /// Summary CSV path.
    #[arg(long, default_value = "summary.csv")]
    summary: PathBuf,
    /// Paired comparison CSV path.
    #[arg(long)]
    comparison: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Input(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Input(m) => m,
        }
    }
}

fn usage(e: Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure::Usage(format!("cannot write {}: {e}", path.display()))
}

/// Entry point of the binary.
pub fn run() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    dispatch(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Parses `args` (program name first) and runs the command.
pub fn dispatch<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let result = match cli.command {
        Command::Gen(a) => gen(a, stdout),
        Command::Ds(a) => ds(a, stdout),
        Command::Cds(a) => cds(a, stdout),
        Command::Verify(a) => verify(a, stdout, stderr),
        Command::Bench(a) => run_bench(a, stderr),
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message());
            f.code()
        }
    }
}

fn emit(out: Option<&Path>, stdout: &mut dyn Write, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, format!("{text}\n")).map_err(|e| io_failure(path, e)),
        None => writeln!(stdout, "{text}").map_err(|e| Failure::Usage(e.to_string())),
    }
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    let file = GraphFile::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    file.to_graph()
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn gen(a: GenArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let geo = generate_udg(a.n, a.r, a.area, a.seed).map_err(usage)?;
    emit(a.out.as_deref(), stdout, &GraphFile::from_geo(&geo).to_json())
}

#[derive(Serialize)]
struct DsOutput<'a> {
    #[serde(flatten)]
    result: &'a DsResult,
    valid: bool,
}

fn ds(a: DsArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let g = load_graph(&a.input)?;
    let text = match a.algo {
        DsChoice::EdcDs | DsChoice::EdcDsImproved => {
            let algo = match a.algo {
                DsChoice::EdcDs => DsAlgorithm::Basic,
                _ => DsAlgorithm::Improved,
            };
            let result = algo.run(&g);
            let valid = is_dominating_set(&g, &result.dominators);
            serde_json::to_string(&DsOutput {
                result: &result,
                valid,
            })
        }
        DsChoice::GreedyDs => {
            let set = baselines::greedy_ds(&g);
            serde_json::to_string(&json!({
                "algorithm": "greedy-ds",
                "valid": is_dominating_set(&g, &set),
                "dominators": set,
                "dominant_edges": [],
                "iterations": 0,
                "trace": [],
            }))
        }
    }
    .expect("results serialize");
    emit(a.out.as_deref(), stdout, &text)
}

fn cds(a: CdsArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let g = load_graph(&a.input)?;
    let components = connected_components(&g);
    let (name, set, connectors, roots) = match a.algo {
        CdsChoice::EdcCds => {
            let ds = DsAlgorithm::from(a.ds_input).run(&g);
            let r = edc_cds(&g, &ds.dominators).expect("EDC dominating sets are valid");
            ("edc-cds", r.cds, r.connectors, r.roots)
        }
        CdsChoice::WuLi | CdsChoice::GreedyCds => {
            let (name, set) = match a.algo {
                CdsChoice::WuLi => ("wu-li", baselines::wu_li_cds(&g)),
                _ => ("greedy-cds", baselines::das_cds(&g)),
            };
            // smallest member of each component's share
            let roots: Vec<_> = components
                .iter()
                .filter_map(|c| c.iter().copied().find(|v| set.binary_search(v).is_ok()))
                .collect();
            (name, set, Vec::new(), roots)
        }
    };
    let text = serde_json::to_string(&json!({
        "algorithm": name,
        "valid": is_cds_per_component(&g, &set),
        "cds": set,
        "connectors": connectors,
        "roots": roots,
        "components": components.len(),
    }))
    .expect("results serialize");
    emit(a.out.as_deref(), stdout, &text)
}

#[derive(Serialize)]
struct VerifyLine {
    n: usize,
    e: usize,
    max_degree: usize,
    algo: &'static str,
    algo_size: usize,
    opt_size: Option<usize>,
    bound: Option<f64>,
    holds: Option<bool>,
    applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
}

const VERIFY_ATTEMPTS: usize = 10_000_000;

/// DS checks for both EDC variants plus the CDS check for the EDC pipeline.
fn verify_graph(g: &Graph, seed: Option<u64>) -> Result<Vec<VerifyLine>, Error> {
    let mut lines = Vec::new();
    let base = |algo, algo_size| VerifyLine {
        n: g.node_count(),
        e: g.edge_count(),
        max_degree: g.max_degree(),
        algo,
        algo_size,
        opt_size: None,
        bound: None,
        holds: None,
        applicable: false,
        seed,
    };
    let improved = DsAlgorithm::Improved.run(g);
    for result in [DsAlgorithm::Basic.run(g), improved.clone()] {
        let size = result.dominators.len();
        let mut line = base(result.algorithm.name(), size);
        if g.max_degree() >= 1 {
            let check = check_ds_ratio(g, size)?;
            line.opt_size = Some(check.opt_size);
            line.bound = Some(check.bound);
            line.holds = Some(check.holds);
            line.applicable = true;
        }
        lines.push(line);
    }
    let cds = edc_cds(g, &improved.dominators)?.cds;
    let mut line = base("edc-cds", cds.len());
    if g.is_connected() {
        let check = check_cds_ratio(g, cds.len())?;
        line.opt_size = Some(check.opt_size);
        line.bound = check.bound;
        line.holds = check.holds;
        line.applicable = check.applicable;
    }
    lines.push(line);
    Ok(lines)
}

fn verify(a: VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), Failure> {
    let lines = match &a.input {
        Some(path) => {
            let g = load_graph(path)?;
            if g.node_count() > EXACT_LIMIT {
                return Err(Failure::Input(format!(
                    "{}: graph has {} nodes, exact search is limited to {EXACT_LIMIT}",
                    path.display(),
                    g.node_count()
                )));
            }
            verify_graph(&g, None).map_err(|e| Failure::Input(e.to_string()))?
        }
        None => {
            if a.n > EXACT_LIMIT {
                return Err(Failure::Usage(format!(
                    "--n {} exceeds the exact search limit of {EXACT_LIMIT}",
                    a.n
                )));
            }
            let mut lines = Vec::new();
            for trial in 0..a.trials {
                let seed = bench::trial_seed(a.seed, a.n, a.r, trial);
                let geo = generate_connected_udg(a.n, a.r, a.area, seed, VERIFY_ATTEMPTS).map_err(usage)?;
                lines.extend(verify_graph(geo.graph(), geo.seed()).map_err(usage)?);
            }
            lines
        }
    };
    let mut text = String::new();
    for line in &lines {
        text.push_str(&serde_json::to_string(line).expect("lines serialize"));
        text.push('\n');
    }
    match &a.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| io_failure(path, e))?,
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(e.to_string()))?,
    }
    let applicable = lines.iter().filter(|l| l.applicable).count();
    let held = lines.iter().filter(|l| l.holds == Some(true)).count();
    let _ = writeln!(stderr, "{held}/{applicable} applicable bound checks hold");
    Ok(())
}

fn run_bench(a: BenchArgs, stderr: &mut dyn Write) -> Result<(), Failure> {
    let mut config = match &a.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            BenchConfig::from_toml(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
        }
        None => BenchConfig::default(),
    };
    if let Some(v) = a.n_values {
        config.n_values = v;
    }
    if let Some(v) = a.radii {
        config.radii = v;
    }
    if let Some(v) = a.area {
        config.area_side = v;
    }
    if let Some(v) = a.trials {
        config.trials = v;
    }
    if let Some(v) = a.seed {
        config.base_seed = v;
    }
    if let Some(v) = a.algos {
        config.algorithms = v;
    }
    if let Some(v) = a.cds_input {
        config.cds_input = v;
    }
    config.timing |= a.timing;

    let records = bench::run_bench(&config).map_err(usage)?;
    let summary = bench::summarize(&records).map_err(usage)?;
    write_csv(&a.out, |w| bench::write_trial_csv(w, &records))?;
    write_csv(&a.summary, |w| bench::write_summary_csv(w, &summary))?;
    if let Some(path) = &a.comparison {
        let rows = bench::compare(&records);
        write_csv(path, |w| bench::write_comparison_csv(w, &rows))?;
    }
    let _ = writeln!(
        stderr,
        "{} records ({}); valid: {}",
        records.len(),
        a.out.display(),
        bench::validity_report(&records)
    );
    Ok(())
}

fn write_csv(path: &Path, body: impl FnOnce(&mut BufWriter<File>) -> io::Result<()>) -> Result<(), Failure> {
    let file = File::create(path).map_err(|e| io_failure(path, e))?;
    let mut w = BufWriter::new(file);
    body(&mut w)
        .and_then(|()| w.flush())
        .map_err(|e| io_failure(path, e))
}

mod report;

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;
use trispec::analysis::{Analysis, AnalysisError};
use trispec::bounds::{BoundError, TheoremId};
use trispec::families::{FamilyError, FamilySpec};
use trispec::graph::{parse_graph6, Graph, GraphError, Graph6Error};
use trispec::sweep::{self, Source, SweepConfig, SweepError, SweepReport};

/// Adjacency spectra and spectral triangle bounds for small graphs.
#[derive(Debug, Parser)]
#[command(name = "trispec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Spectrum, structure and every verdict for one graph.
    Analyze {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        json: bool,
    },
    /// Print a family member as graph6.
    Family {
        #[command(flatten)]
        spec: FamilyArgs,
        /// Also print the full analysis.
        #[arg(long)]
        analyze: bool,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate proven statements over many graphs.
    Sweep {
        #[command(flatten)]
        sweep: SweepArgs,
        /// Comma-separated theorem ids, or all / existence / conjectures.
        #[arg(long, default_value = "all")]
        theorems: String,
    },
    /// Falsification scan for the open eigenvalue conjectures.
    Conjecture {
        #[command(flatten)]
        sweep: SweepArgs,
        /// Clique bounds r for the BN conjecture.
        #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
        r: Vec<usize>,
    },
    /// Exception-family flags and forbidden induced subgraphs.
    Detect {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        json: bool,
    },
}

/// At most one of these; with none, a graph6 line is read from stdin.
#[derive(Debug, Args)]
#[group(multiple = false)]
struct GraphSource {
    /// graph6 string.
    #[arg(long, value_name = "GRAPH6")]
    g6: Option<String>,
    /// File whose first graph6 line is used.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
    /// Vertex count and edge list, e.g. `--edges 4 0-1,1-2,2-3`.
    #[arg(long, num_args = 2, value_names = ["N", "LIST"])]
    edges: Option<Vec<String>>,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long)]
    name: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    i: Option<usize>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct SweepSource {
    /// Every labeled graph on N vertices (N <= 7).
    #[arg(long)]
    n: Option<usize>,
    /// One graph6 string per line.
    #[arg(long, value_name = "PATH")]
    g6_file: Option<PathBuf>,
    /// Random graphs: n,p,count,seed.
    #[arg(long, value_name = "N,P,COUNT,SEED")]
    random: Option<String>,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    source: SweepSource,
    /// Worker threads; 0 uses every CPU.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_name = "PATH")]
    out_json: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    out_csv: Option<PathBuf>,
    /// List graphs meeting a bound with equality.
    #[arg(long)]
    record_tightness: bool,
    /// Smallest positive slacks kept per theorem.
    #[arg(long, default_value_t = 5)]
    slack_topk: usize,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Sweep(#[from] SweepError),
    #[error("writing output: {0}")]
    Output(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Analysis(AnalysisError::Spectrum(_)) => 3,
            CliError::Sweep(e) if e.is_eigensolver_failure() => 3,
            _ => 2,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(violations) => ExitCode::from(u8::from(violations)),
        // A closed pipe (`| head`) is not an error.
        Err(CliError::Output(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// `Ok(true)` when some verdict was violated.
fn run(command: Command) -> Result<bool, CliError> {
    match command {
        Command::Analyze { source, json } => {
            let g = source.load()?;
            analyze(&g, json)
        }
        Command::Family { spec, analyze: full, json } => {
            let spec = spec.spec()?;
            let g = spec.generate()?;
            if full {
                analyze(&g, json)
            } else {
                writeln!(io::stdout().lock(), "{g}")?;
                Ok(false)
            }
        }
        Command::Sweep { sweep, theorems } => {
            let theorems = TheoremId::parse_list(&theorems)?;
            let config = sweep.config()?.theorems(theorems);
            run_sweep(&config, &sweep)
        }
        Command::Conjecture { sweep, r } => {
            let config = sweep::conjecture_config(&sweep.config()?, &r)?;
            run_sweep(&config, &sweep)
        }
        Command::Detect { source, json } => {
            let g = source.load()?;
            report::detect(&mut io::stdout().lock(), &g, json)?;
            Ok(false)
        }
    }
}

fn analyze(g: &Graph, json: bool) -> Result<bool, CliError> {
    let a = Analysis::new(g)?;
    let verdicts = report::all_verdicts(&a);
    let mut out = io::stdout().lock();
    if json {
        report::analysis_json(&mut out, &a, &verdicts)?;
    } else {
        report::analysis_text(&mut out, &a, &verdicts)?;
    }
    Ok(verdicts.iter().any(|v| v.outcome == trispec::Outcome::Violated))
}

fn run_sweep(config: &SweepConfig, args: &SweepArgs) -> Result<bool, CliError> {
    let report: SweepReport = match &args.out_csv {
        Some(path) => {
            let file = File::create(path).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            sweep::run_sweep_with_csv(config, BufWriter::new(file))?
        }
        None => sweep::run_sweep(config)?,
    };
    if let Some(path) = &args.out_json {
        report.write_json(path)?;
    }
    report::sweep_summary(&mut io::stdout().lock(), &report)?;
    Ok(report.violations() > 0)
}

impl GraphSource {
    fn load(&self) -> Result<Graph, CliError> {
        if let Some(s) = &self.g6 {
            return Ok(parse_graph6(s)?);
        }
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            return first_graph6(&text);
        }
        if let Some(edges) = &self.edges {
            return parse_edges(&edges[0], &edges[1]);
        }
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(|source| CliError::Io {
            path: "<stdin>".into(),
            source,
        })?;
        first_graph6(&text)
    }
}

fn first_graph6(text: &str) -> Result<Graph, CliError> {
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && *l != ">>graph6<<")
        .ok_or_else(|| CliError::Usage("no graph6 line in input".into()))?;
    Ok(parse_graph6(line)?)
}

fn parse_edges(n: &str, list: &str) -> Result<Graph, CliError> {
    let n: usize = n
        .parse()
        .map_err(|_| CliError::Usage(format!("--edges: vertex count {n:?} is not a number")))?;
    let mut edges = Vec::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let pair = item
            .split_once('-')
            .and_then(|(u, v)| Some((u.trim().parse().ok()?, v.trim().parse().ok()?)))
            .ok_or_else(|| CliError::Usage(format!("--edges: bad edge {item:?}, expected u-v")))?;
        edges.push(pair);
    }
    Ok(Graph::from_edge_list(n, edges)?)
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec, CliError> {
        let lookup = |key: &str| match key {
            "n" => self.n,
            "k" => self.k,
            "a" => self.a,
            "b" => self.b,
            "i" => self.i,
            _ => None,
        };
        Ok(FamilySpec::from_name(&self.name, &lookup)?)
    }
}

impl SweepArgs {
    fn config(&self) -> Result<SweepConfig, CliError> {
        let src = &self.source;
        let source = if let Some(n) = src.n {
            Source::Labeled { n }
        } else if let Some(path) = &src.g6_file {
            Source::Graph6File(path.clone())
        } else if let Some(spec) = &src.random {
            parse_random(spec)?
        } else {
            return Err(CliError::Usage("one of --n, --g6-file, --random is required".into()));
        };
        Ok(SweepConfig::new(source)
            .record_tightness(self.record_tightness)
            .slack_topk(self.slack_topk)
            .jobs(self.jobs))
    }
}

fn parse_random(spec: &str) -> Result<Source, CliError> {
    let bad = || CliError::Usage(format!("--random expects n,p,count,seed, got {spec:?}"));
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    let [n, p, count, seed] = parts[..] else {
        return Err(bad());
    };
    Ok(Source::Random {
        n: n.parse().map_err(|_| bad())?,
        p: p.parse().map_err(|_| bad())?,
        count: count.parse().map_err(|_| bad())?,
        seed: seed.parse().map_err(|_| bad())?,
    })
}

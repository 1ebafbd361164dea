//! Exhaustive and randomized verification harness.
//!
//! A sweep walks a stream of graphs, evaluates the selected verdicts on each
//! and folds the results into a [`SweepReport`]. Work is cut into contiguous
//! ranges of the stream; partial reports merge associatively and every list
//! is put in a canonical order, so the report does not depend on the number
//! of workers.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::thread;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::analysis::{Analysis, AnalysisError};
use crate::bounds::{BoundVerdict, Hypothesis, Outcome, TheoremId, EQUALITY_FACTOR};
use crate::graph::{parse_graph6, to_graph6, Graph, Graph6Error, GraphError, MAX_VERTICES};
use crate::spectra::{Jacobi, RELATIVE_TOL};

/// Largest order accepted for labeled enumeration.
pub const MAX_LABELED_ORDER: usize = 7;

/// Graphs handed to one worker at a time.
const CHUNK: u64 = 1 << 15;

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("invalid sweep configuration: {0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{path}:{line}: {source}")]
    Parse {
        path: PathBuf,
        line: usize,
        #[source]
        source: Graph6Error,
    },
    #[error("graph {graph6}: {source}")]
    Analysis {
        graph6: String,
        #[source]
        source: AnalysisError,
    },
    #[error("writing per-graph CSV: {0}")]
    Csv(#[from] csv::Error),
}

impl SweepError {
    /// True when the failure came from the eigensolver rather than from
    /// the input or the environment.
    pub fn is_eigensolver_failure(&self) -> bool {
        matches!(self, SweepError::Analysis { source: AnalysisError::Spectrum(_), .. })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    /// Every labeled graph on `n` vertices, by increasing upper-triangle mask.
    Labeled { n: usize },
    /// One graph6 string per line; a `>>graph6<<` header line is skipped.
    Graph6File(PathBuf),
    /// `count` graphs `G(n, p)`; graph `i` uses stream `i` of a ChaCha8
    /// generator seeded with `seed`.
    Random { n: usize, p: f64, count: u64, seed: u64 },
    /// Graphs already in memory.
    Graphs(Vec<Graph>),
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Labeled { n } => write!(f, "labeled(n={n})"),
            Source::Graph6File(path) => write!(f, "graph6_file({})", path.display()),
            Source::Random { n, p, count, seed } => {
                write!(f, "random(n={n},p={p},count={count},seed={seed})")
            }
            Source::Graphs(gs) => write!(f, "list(count={})", gs.len()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub source: Source,
    pub theorems: Vec<TheoremId>,
    pub record_tightness: bool,
    pub slack_topk: usize,
    /// Worker threads; 0 means one per available CPU. Never affects the report.
    pub jobs: usize,
}

impl SweepConfig {
    /// All proven statements, no tightness recording, five smallest slacks.
    pub fn new(source: Source) -> Self {
        Self {
            source,
            theorems: TheoremId::PROVEN.to_vec(),
            record_tightness: false,
            slack_topk: 5,
            jobs: 1,
        }
    }

    pub fn theorems(mut self, theorems: impl Into<Vec<TheoremId>>) -> Self {
        self.theorems = theorems.into();
        self
    }

    pub fn record_tightness(mut self, on: bool) -> Self {
        self.record_tightness = on;
        self
    }

    pub fn slack_topk(mut self, k: usize) -> Self {
        self.slack_topk = k;
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    fn validate(&self) -> Result<(), SweepError> {
        let bad = |msg: String| Err(SweepError::Config(msg));
        match &self.source {
            Source::Labeled { n } if !(1..=MAX_LABELED_ORDER).contains(n) => {
                return bad(format!("labeled enumeration needs 1 <= n <= {MAX_LABELED_ORDER}, got {n}"));
            }
            Source::Random { n, p, count, .. } => {
                if !(1..=MAX_VERTICES).contains(n) {
                    return bad(format!("random graphs need 1 <= n <= {MAX_VERTICES}, got {n}"));
                }
                if !(0.0..=1.0).contains(p) {
                    return bad(format!("edge probability {p} outside [0, 1]"));
                }
                if *count == 0 {
                    return bad("random sweep needs count >= 1".into());
                }
            }
            _ => {}
        }
        if self.theorems.is_empty() {
            return bad("no theorems selected".into());
        }
        Ok(())
    }

    fn workers(&self) -> usize {
        match self.jobs {
            0 => thread::available_parallelism().map_or(1, |n| n.get()),
            j => j,
        }
    }
}

/// Verdict tallies for one statement. The four outcome counts add up to the
/// number of graphs examined.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct OutcomeCounts {
    pub holds: u64,
    pub violated: u64,
    pub boundary: u64,
    pub hypothesis_not_met: u64,
    /// Graphs that hold only because they are the exception graph.
    pub held_by_exception: u64,
}

impl OutcomeCounts {
    fn add(&mut self, v: &BoundVerdict) {
        match v.outcome {
            Outcome::Holds => {
                self.holds += 1;
                if v.exception_matched && v.slack < -EQUALITY_FACTOR * v.tol {
                    self.held_by_exception += 1;
                }
            }
            Outcome::Violated => self.violated += 1,
            Outcome::BoundaryInconclusive => self.boundary += 1,
            Outcome::HypothesisNotMet => self.hypothesis_not_met += 1,
        }
    }

    fn merge(&mut self, o: &OutcomeCounts) {
        self.holds += o.holds;
        self.violated += o.violated;
        self.boundary += o.boundary;
        self.hypothesis_not_met += o.hypothesis_not_met;
        self.held_by_exception += o.held_by_exception;
    }

    pub fn total(&self) -> u64 {
        self.holds + self.violated + self.boundary + self.hypothesis_not_met
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub theorem: TheoremId,
    pub slack: f64,
    /// Conjectures only: outcome after re-judging with a tenth of the tolerance.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outcome_at_tenth_tol: Option<Outcome>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct TightnessWitness {
    pub graph6: String,
    pub theorem: TheoremId,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlackRecord {
    pub graph6: String,
    pub slack: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub source: String,
    pub relative_tol: f64,
    pub graphs_examined: u64,
    pub per_theorem: BTreeMap<TheoremId, OutcomeCounts>,
    pub counterexamples: Vec<Counterexample>,
    pub tightness_witnesses: Vec<TightnessWitness>,
    /// Smallest slacks above the equality band among verdicts that hold
    /// with a satisfied hypothesis and no exception.
    pub min_slack: BTreeMap<TheoremId, Vec<SlackRecord>>,
}

impl SweepReport {
    fn empty(config: &SweepConfig) -> Self {
        Self {
            source: config.source.to_string(),
            relative_tol: RELATIVE_TOL,
            graphs_examined: 0,
            per_theorem: config.theorems.iter().map(|&t| (t, OutcomeCounts::default())).collect(),
            counterexamples: Vec::new(),
            tightness_witnesses: Vec::new(),
            min_slack: config.theorems.iter().map(|&t| (t, Vec::new())).collect(),
        }
    }

    /// Associative, commutative merge of two partial reports.
    pub fn merge(&mut self, other: SweepReport, slack_topk: usize) {
        self.graphs_examined += other.graphs_examined;
        for (id, counts) in &other.per_theorem {
            self.per_theorem.entry(*id).or_default().merge(counts);
        }
        self.counterexamples.extend(other.counterexamples);
        self.tightness_witnesses.extend(other.tightness_witnesses);
        for (id, records) in other.min_slack {
            let mine = self.min_slack.entry(id).or_default();
            mine.extend(records);
            sort_slacks(mine);
            mine.truncate(slack_topk);
        }
        self.canonicalize();
    }

    fn canonicalize(&mut self) {
        self.counterexamples.sort_by(|a, b| {
            (&a.graph6, a.theorem)
                .cmp(&(&b.graph6, b.theorem))
                .then(a.slack.total_cmp(&b.slack))
        });
        self.tightness_witnesses.sort();
    }

    pub fn violations(&self) -> u64 {
        self.per_theorem.values().map(|c| c.violated).sum()
    }

    pub fn counts(&self, theorem: TheoremId) -> OutcomeCounts {
        self.per_theorem.get(&theorem).copied().unwrap_or_default()
    }

    /// Pretty JSON with a fixed key order.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn write_json(&self, path: &Path) -> Result<(), SweepError> {
        std::fs::write(path, self.to_json() + "\n").map_err(|source| SweepError::Io {
            path: path.to_path_buf(),
            source,
        })
    }

    /// `"<graphs> graphs, <violations> violations"`
    pub fn summary_line(&self) -> String {
        format!("{} graphs, {} violations", self.graphs_examined, self.violations())
    }
}

fn sort_slacks(v: &mut [SlackRecord]) {
    v.sort_by(|a, b| a.slack.total_cmp(&b.slack).then_with(|| a.graph6.cmp(&b.graph6)));
}

/// Every labeled graph on `n ≤ 7` vertices, `2^C(n,2)` of them, in increasing
/// order of the graph6-ordered upper-triangle mask.
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = Graph>, SweepError> {
    if !(1..=MAX_LABELED_ORDER).contains(&n) {
        return Err(SweepError::Config(format!(
            "labeled enumeration needs 1 <= n <= {MAX_LABELED_ORDER}, got {n}"
        )));
    }
    Ok((0..labeled_count(n)).map(move |mask| Graph::from_upper_mask(n, mask)))
}

fn labeled_count(n: usize) -> u64 {
    1 << (n * (n - 1) / 2)
}

/// Graph `index` of a [`Source::Random`] stream.
pub fn random_graph(n: usize, p: f64, seed: u64, index: u64) -> Result<Graph, GraphError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, edges)
}

/// Reads a graph6 file, reporting the first malformed line.
pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>, SweepError> {
    let io_err = |source| SweepError::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = std::fs::File::open(path).map_err(io_err)?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(io_err)?;
        let line = line.trim_end();
        if line.is_empty() || (i == 0 && line == ">>graph6<<") {
            continue;
        }
        let g = parse_graph6(line).map_err(|source| SweepError::Parse {
            path: path.to_path_buf(),
            line: i + 1,
            source,
        })?;
        out.push(g);
    }
    Ok(out)
}

/// Random-access view of a source.
enum Stream {
    Labeled(usize),
    Random { n: usize, p: f64, seed: u64, count: u64 },
    Listed(Vec<Graph>),
}

impl Stream {
    fn open(source: &Source) -> Result<Self, SweepError> {
        Ok(match source {
            Source::Labeled { n } => Stream::Labeled(*n),
            Source::Random { n, p, count, seed } => Stream::Random {
                n: *n,
                p: *p,
                seed: *seed,
                count: *count,
            },
            Source::Graph6File(path) => Stream::Listed(read_graph6_file(path)?),
            Source::Graphs(gs) => Stream::Listed(gs.clone()),
        })
    }

    fn len(&self) -> u64 {
        match self {
            Stream::Labeled(n) => labeled_count(*n),
            Stream::Random { count, .. } => *count,
            Stream::Listed(gs) => gs.len() as u64,
        }
    }

    fn get(&self, i: u64) -> Graph {
        match self {
            Stream::Labeled(n) => Graph::from_upper_mask(*n, i),
            Stream::Random { n, p, seed, .. } => random_graph(*n, *p, *seed, i).expect("validated order"),
            Stream::Listed(gs) => gs[i as usize].clone(),
        }
    }
}

/// One evaluated graph.
pub struct GraphResult {
    pub analysis: Analysis,
    pub verdicts: Vec<BoundVerdict>,
}

/// Evaluates `theorems` on `g`. Conjecture violations are re-judged at a
/// tenth of the tolerance.
pub fn evaluate(solver: &mut Jacobi, g: &Graph, theorems: &[TheoremId]) -> Result<GraphResult, SweepError> {
    let analysis = Analysis::with_solver(solver, g).map_err(|source| SweepError::Analysis {
        graph6: to_graph6(g),
        source,
    })?;
    let verdicts = theorems.iter().map(|&id| analysis.verdict(id)).collect();
    Ok(GraphResult { analysis, verdicts })
}

struct Partial {
    report: SweepReport,
    rows: Vec<csv::StringRecord>,
}

fn run_range(
    config: &SweepConfig,
    stream: &Stream,
    range: std::ops::Range<u64>,
    want_rows: bool,
) -> Result<Partial, SweepError> {
    let mut solver = Jacobi::new();
    let mut report = SweepReport::empty(config);
    let mut rows = Vec::new();
    for i in range {
        let g = stream.get(i);
        let res = evaluate(&mut solver, &g, &config.theorems)?;
        report.graphs_examined += 1;
        let mut graph6 = None;
        let mut name = || graph6.get_or_insert_with(|| to_graph6(&g)).clone();
        for v in &res.verdicts {
            report.per_theorem.get_mut(&v.theorem).expect("selected theorem").add(v);
            if v.outcome == Outcome::Violated {
                let outcome_at_tenth_tol = v
                    .theorem
                    .is_conjecture()
                    .then(|| res.analysis.with_tol(v.tol / 10.0).verdict(v.theorem).outcome);
                report.counterexamples.push(Counterexample {
                    graph6: name(),
                    theorem: v.theorem,
                    slack: v.slack,
                    outcome_at_tenth_tol,
                });
            }
            if config.record_tightness && v.theorem != TheoremId::TriangleIdentity && v.is_tight() {
                report.tightness_witnesses.push(TightnessWitness {
                    graph6: name(),
                    theorem: v.theorem,
                });
            }
            if config.slack_topk > 0
                && v.outcome == Outcome::Holds
                && v.hypothesis == Hypothesis::Satisfied
                && !v.exception_matched
                && v.slack > EQUALITY_FACTOR * v.tol
            {
                let list = report.min_slack.get_mut(&v.theorem).expect("selected theorem");
                let worst = list.last().map(|r| r.slack);
                if list.len() < config.slack_topk || worst.is_some_and(|w| v.slack <= w) {
                    list.push(SlackRecord {
                        graph6: name(),
                        slack: v.slack,
                    });
                    sort_slacks(list);
                    list.truncate(config.slack_topk);
                }
            }
        }
        if want_rows {
            rows.push(csv_row(&g, &res));
        }
    }
    report.canonicalize();
    Ok(Partial { report, rows })
}

/// Runs a sweep without per-graph output.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport, SweepError> {
    run_sweep_inner(config, None::<&mut csv::Writer<io::Sink>>)
}

/// Runs a sweep and streams one CSV row per graph, in stream order.
pub fn run_sweep_with_csv<W: Write>(config: &SweepConfig, out: W) -> Result<SweepReport, SweepError> {
    run_sweep_inner(config, Some(&mut csv::Writer::from_writer(out)))
}

/// Like [`run_sweep`] restricted to the BN conjecture for each `r` and ELW.
pub fn scan_conjectures(config: &SweepConfig, r_values: &[usize]) -> Result<SweepReport, SweepError> {
    run_sweep(&conjecture_config(config, r_values)?)
}

/// `config` with its theorem list replaced by the conjecture verdicts.
pub fn conjecture_config(config: &SweepConfig, r_values: &[usize]) -> Result<SweepConfig, SweepError> {
    let mut theorems = Vec::with_capacity(r_values.len() + 1);
    for &r in r_values {
        if !(2..=u8::MAX as usize).contains(&r) {
            return Err(SweepError::Config(format!("conjecture needs r >= 2, got {r}")));
        }
        theorems.push(TheoremId::BnConjecture(r as u8));
    }
    theorems.push(TheoremId::ElwConjecture);
    theorems.sort();
    theorems.dedup();
    Ok(config.clone().theorems(theorems))
}

fn run_sweep_inner<W: Write>(
    config: &SweepConfig,
    mut csv_out: Option<&mut csv::Writer<W>>,
) -> Result<SweepReport, SweepError> {
    config.validate()?;
    let stream = Stream::open(&config.source)?;
    warm_sk2_cache(&stream, &config.theorems);
    if let Some(w) = csv_out.as_deref_mut() {
        w.write_record(csv_header(&config.theorems))?;
    }

    let workers = config.workers() as u64;
    let total = stream.len();
    let mut report = SweepReport::empty(config);
    let want_rows = csv_out.is_some();
    let mut start = 0;
    while start < total {
        let end = (start + CHUNK * workers).min(total);
        let per = (end - start).div_ceil(workers);
        let parts: Vec<Result<Partial, SweepError>> = thread::scope(|s| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let lo = (start + w * per).min(end);
                    let hi = (lo + per).min(end);
                    let stream = &stream;
                    s.spawn(move || run_range(config, stream, lo..hi, want_rows))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
        for part in parts {
            let part = part?;
            if let Some(w) = csv_out.as_deref_mut() {
                for row in &part.rows {
                    w.write_record(row)?;
                }
            }
            report.merge(part.report, config.slack_topk);
        }
        start = end;
    }
    if let Some(w) = csv_out {
        w.flush().map_err(csv::Error::from)?;
    }
    Ok(report)
}

/// Fills the comparison-value cache for every edge count the sweep can
/// meet before any worker starts.
fn warm_sk2_cache(stream: &Stream, theorems: &[TheoremId]) {
    if !theorems.contains(&TheoremId::Sk2Threshold) {
        return;
    }
    let max_m = match stream {
        Stream::Labeled(n) | Stream::Random { n, .. } => n * (n - 1) / 2,
        Stream::Listed(gs) => gs.iter().map(Graph::size).max().unwrap_or(0),
    };
    for m in (3..=max_m).step_by(2) {
        crate::bounds::sk2_spectral_radius((m - 1) / 2);
    }
}

fn csv_header(theorems: &[TheoremId]) -> Vec<String> {
    let mut h: Vec<String> = ["graph6", "n", "m", "t", "lambda1", "lambda2", "lambda_n", "omega", "n_plus"]
        .map(String::from)
        .to_vec();
    for id in theorems {
        h.push(format!("{id}_outcome"));
        h.push(format!("{id}_slack"));
    }
    h
}

fn csv_row(g: &Graph, res: &GraphResult) -> csv::StringRecord {
    let r = res.analysis.record();
    let s = &r.spectrum;
    let mut row = csv::StringRecord::new();
    row.push_field(&to_graph6(g));
    row.push_field(&r.n.to_string());
    row.push_field(&r.m.to_string());
    row.push_field(&r.t.to_string());
    row.push_field(&format_sig(s.lambda(1)));
    row.push_field(&if s.len() >= 2 { format_sig(s.lambda(2)) } else { String::new() });
    row.push_field(&format_sig(s.smallest()));
    row.push_field(&r.omega.to_string());
    row.push_field(&r.n_plus.to_string());
    for v in &res.verdicts {
        row.push_field(&v.outcome.to_string());
        row.push_field(&format_sig(v.slack));
    }
    row
}

/// `x` to 10 significant digits, without trailing zeros.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let s = format!("{:.9e}", x);
    let value: f64 = s.parse().expect("formatted float parses");
    let exp = value.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        trim_zeros(format!("{:.*}", (9 - exp).max(0) as usize, value))
    } else {
        let (mantissa, exponent) = s.split_once('e').expect("exponent form");
        format!("{}e{exponent}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(mut s: String) -> String {
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate_labeled(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled(4).unwrap().count(), 64);
        assert!(enumerate_labeled(8).is_err());
        assert!(enumerate_labeled(0).is_err());
        let first: Vec<_> = enumerate_labeled(3).unwrap().take(3).map(|g| to_graph6(&g)).collect();
        assert_eq!(first, ["B?", "B_", "BO"]);
    }

    #[test]
    fn small_labeled_sweep() {
        let report = run_sweep(&SweepConfig::new(Source::Labeled { n: 4 })).unwrap();
        assert_eq!(report.graphs_examined, 64);
        assert_eq!(report.violations(), 0);
        assert!(report.counterexamples.is_empty());
        for counts in report.per_theorem.values() {
            assert_eq!(counts.total(), 64);
        }
    }

    #[test]
    fn random_stream_is_seeded_per_index() {
        let a = random_graph(12, 0.5, 7, 3).unwrap();
        assert_eq!(a, random_graph(12, 0.5, 7, 3).unwrap());
        assert_ne!(a, random_graph(12, 0.5, 7, 4).unwrap());
        assert_eq!(random_graph(6, 0.0, 1, 0).unwrap().size(), 0);
        assert_eq!(random_graph(6, 1.0, 1, 0).unwrap().size(), 15);
    }

    #[test]
    fn config_validation() {
        let bad = [
            Source::Labeled { n: 8 },
            Source::Random { n: 5, p: 1.5, count: 1, seed: 0 },
            Source::Random { n: 5, p: 0.5, count: 0, seed: 0 },
        ];
        for source in bad {
            assert!(matches!(run_sweep(&SweepConfig::new(source)), Err(SweepError::Config(_))));
        }
    }

    #[test]
    fn significant_digits() {
        assert_eq!(format_sig(2.0), "2");
        assert_eq!(format_sig(1.0 / 3.0), "0.3333333333");
        assert_eq!(format_sig(-1.4727985071), "-1.472798507");
        assert_eq!(format_sig(123456.789), "123456.789");
        assert_eq!(format_sig(0.0), "0");
        assert_eq!(format_sig(-1e-12), "-1e-12");
        assert_eq!(format_sig(2.5e20), "2.5e20");
    }
}

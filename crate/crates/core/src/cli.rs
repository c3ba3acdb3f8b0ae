//! The `netcomm` command line.
//!
//! Subcommands: `generate`, `centrality`, `compare`, `report` and `bench`.
//! Exit status is 0 on success, 1 on input errors and 2 when an iterative
//! method fails to converge.

use std::ffi::OsString;
use std::fmt;
use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::centrality::{
    analyze, compute_scores, katz_subgraph_resolved, katz_total_resolved, rank_with, resolve_alpha,
    subgraph_centrality, total_communicability, AlphaChoice, Method, NetworkReport, ReportFunction,
    ScoreVector, TieBreak, DEFAULT_TIE_TOLERANCE, SPECTRAL_TOL,
};
use crate::compare::{compare_rankings, Cutoff, RankComparison};
use crate::error::{Error, Result};
use crate::graph::{
    generate_pref, generate_reference, generate_smallw, load_edge_list, load_edge_list_sized,
    load_matrix_market, write_canonical, Graph, ReferenceKind, RNG_ALGORITHM,
};
use crate::krylov::{dominant_eigs, KrylovConfig};

/// A graph generator request such as `pref:n=1000,d=2`.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphSpec {
    Pref {
        n: usize,
        d: usize,
    },
    Smallw {
        n: usize,
        d: usize,
        p: f64,
    },
    Reference {
        kind: ReferenceKind,
        n: usize,
        d: Option<usize>,
    },
    Empty {
        n: usize,
    },
}

impl GraphSpec {
    /// Whether the seed changes the output.
    pub fn is_random(&self) -> bool {
        matches!(self, GraphSpec::Pref { .. } | GraphSpec::Smallw { .. })
    }

    pub fn build(&self, seed: u64) -> Result<Graph> {
        match *self {
            GraphSpec::Pref { n, d } => generate_pref(n, d, seed),
            GraphSpec::Smallw { n, d, p } => generate_smallw(n, d, p, seed),
            GraphSpec::Reference { kind, n, d } => generate_reference(kind, n, d),
            GraphSpec::Empty { n } => Ok(Graph::empty(n)),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            GraphSpec::Pref { .. } => "pref",
            GraphSpec::Smallw { .. } => "smallw",
            GraphSpec::Reference { kind, .. } => match kind {
                ReferenceKind::Complete => "complete",
                ReferenceKind::Star => "star",
                ReferenceKind::Path => "path",
                ReferenceKind::Cycle => "cycle",
                ReferenceKind::RingLattice => "ring",
            },
            GraphSpec::Empty { .. } => "empty",
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Pref { n, d } => write!(f, "pref:n={n},d={d}"),
            GraphSpec::Smallw { n, d, p } => write!(f, "smallw:n={n},d={d},p={p}"),
            GraphSpec::Reference { n, d: Some(d), .. } => write!(f, "{}:n={n},d={d}", self.kind()),
            GraphSpec::Reference { n, .. } | GraphSpec::Empty { n } => {
                write!(f, "{}:n={n}", self.kind())
            }
        }
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::invalid(format!("generator spec '{s}': {msg}"));
        let (kind, rest) = s.split_once(':').unwrap_or((s, ""));
        let mut n = None;
        let mut d = None;
        let mut p = None;
        for part in rest.split(',').filter(|t| !t.trim().is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, got '{part}'")))?;
            let value = value.trim();
            match key.trim() {
                "n" => {
                    n = Some(
                        value
                            .parse::<usize>()
                            .map_err(|_| bad(format!("n = '{value}' is not a count")))?,
                    )
                }
                "d" => {
                    d = Some(
                        value
                            .parse::<usize>()
                            .map_err(|_| bad(format!("d = '{value}' is not a count")))?,
                    )
                }
                "p" => {
                    p = Some(
                        value
                            .parse::<f64>()
                            .map_err(|_| bad(format!("p = '{value}' is not a number")))?,
                    )
                }
                other => return Err(bad(format!("unknown parameter '{other}'"))),
            }
        }
        let n = n.ok_or_else(|| bad("missing n".into()))?;
        let need_d = || d.ok_or_else(|| bad("missing d".into()));
        let reference = |kind| {
            if kind != ReferenceKind::RingLattice && d.is_some() {
                return Err(bad("d only applies to ring".into()));
            }
            Ok(GraphSpec::Reference { kind, n, d })
        };
        let spec = match kind.trim() {
            "pref" => GraphSpec::Pref { n, d: need_d()? },
            "smallw" => GraphSpec::Smallw {
                n,
                d: need_d()?,
                p: p.ok_or_else(|| bad("missing p".into()))?,
            },
            "ring" => reference(ReferenceKind::RingLattice)?,
            "complete" => reference(ReferenceKind::Complete)?,
            "star" => reference(ReferenceKind::Star)?,
            "path" => reference(ReferenceKind::Path)?,
            "cycle" => reference(ReferenceKind::Cycle)?,
            "empty" => GraphSpec::Empty { n },
            other => {
                return Err(bad(format!(
                    "unknown generator '{other}' (expected pref, smallw, ring, complete, star, path, cycle or empty)"
                )))
            }
        };
        if p.is_some() && !matches!(spec, GraphSpec::Smallw { .. }) {
            return Err(bad("p only applies to smallw".into()));
        }
        Ok(spec)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "netcomm",
    version,
    about = "Communicability rankings of undirected networks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated graph as a canonical edge list plus a JSON sidecar.
    Generate(GenerateArgs),
    /// Scores and ranking of every node under one method.
    Centrality(CentralityArgs),
    /// Compare the rankings produced by two methods.
    Compare(CompareArgs),
    /// Network totals, spectral bounds and their check.
    Report(ReportArgs),
    /// Wall-clock timings per phase.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    ExpTotal,
    ExpSubgraph,
    ResTotal,
    ResSubgraph,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::ExpTotal => Method::ExpTotal,
            MethodArg::ExpSubgraph => Method::ExpSubgraph,
            MethodArg::ResTotal => Method::ResTotal,
            MethodArg::ResSubgraph => Method::ResSubgraph,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TieArg {
    LowerId,
    HigherId,
}

impl From<TieArg> for TieBreak {
    fn from(t: TieArg) -> Self {
        match t {
            TieArg::LowerId => TieBreak::LowerIdFirst,
            TieArg::HigherId => TieBreak::HigherIdFirst,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FunctionArg {
    Exp,
    Resolvent,
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Matrix Market file (`.mtx` or a `%%MatrixMarket` header) or edge list.
    #[arg(
        long,
        conflicts_with = "generate",
        required_unless_present = "generate"
    )]
    pub input: Option<PathBuf>,
    /// Generator spec, e.g. `pref:n=1000,d=2`, `smallw:n=5000,d=1,p=0.1`, `ring:n=5000`.
    #[arg(long)]
    pub generate: Option<String>,
    /// Smallest node id in an edge-list file.
    #[arg(long, default_value_t = 0)]
    pub base: usize,
    /// Declared node count of an edge-list file (isolated nodes).
    #[arg(long)]
    pub nodes: Option<usize>,
    /// Comma-separated generator seeds, one per replication.
    #[arg(long, value_delimiter = ',')]
    pub seeds: Option<Vec<u64>>,
    /// Number of generated instances (seeds 0..reps unless --seeds is given).
    #[arg(long)]
    pub reps: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct KrylovArgs {
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, default_value_t = 10)]
    pub restart: usize,
    #[arg(long, default_value_t = 50)]
    pub max_restarts: usize,
    #[arg(long, default_value_t = 5)]
    pub quad_steps: usize,
    /// Graphs with at most this many nodes get exact diagonals.
    #[arg(long, default_value_t = crate::centrality::DEFAULT_EXACT_BELOW)]
    pub exact_below: usize,
}

impl KrylovArgs {
    pub fn config(&self) -> Result<KrylovConfig> {
        let cfg = KrylovConfig {
            restart_length: self.restart,
            max_restarts: self.max_restarts,
            tolerance: self.tol,
            quadrature_steps: self.quad_steps,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Debug, Clone, Args)]
pub struct FunctionArgs {
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub beta: f64,
    /// `alpha = fraction / lambda_1`.
    #[arg(long, default_value_t = 0.85)]
    pub alpha_fraction: f64,
    /// Literal `alpha`; overrides --alpha-fraction.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
}

impl FunctionArgs {
    pub fn alpha_choice(&self) -> AlphaChoice {
        match self.alpha {
            Some(a) => AlphaChoice::Literal(a),
            None => AlphaChoice::Fraction(self.alpha_fraction),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub generate: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Edge-list destination; the sidecar goes to `<out>.json`.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct CentralityArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = MethodArg::ExpTotal)]
    pub method: MethodArg,
    #[command(flatten)]
    pub function: FunctionArgs,
    #[command(flatten)]
    pub krylov: KrylovArgs,
    #[arg(long, value_enum, default_value_t = TieArg::LowerId)]
    pub ties: TieArg,
    /// Leave the network report out of JSON output.
    #[arg(long)]
    pub no_report: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = MethodArg::ExpSubgraph)]
    pub method_a: MethodArg,
    #[arg(long, value_enum, default_value_t = MethodArg::ExpTotal)]
    pub method_b: MethodArg,
    #[command(flatten)]
    pub function: FunctionArgs,
    #[command(flatten)]
    pub krylov: KrylovArgs,
    /// Percent cutoffs for top-of-list metrics.
    #[arg(long, value_delimiter = ',', default_value = "10,1")]
    pub top_percents: Vec<f64>,
    /// Explicit top-k cutoffs, in addition to the percentages.
    #[arg(long, value_delimiter = ',')]
    pub top_k: Vec<usize>,
    #[arg(long, value_enum, default_value_t = TieArg::LowerId)]
    pub ties: TieArg,
    /// Include isim_k for every k (JSON only).
    #[arg(long)]
    pub curve: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ReportArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = FunctionArg::Exp)]
    pub function: FunctionArg,
    #[command(flatten)]
    pub params: FunctionArgs,
    #[command(flatten)]
    pub krylov: KrylovArgs,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = MethodArg::ExpTotal)]
    pub method: MethodArg,
    #[command(flatten)]
    pub function: FunctionArgs,
    #[command(flatten)]
    pub krylov: KrylovArgs,
    /// Timed repetitions.
    #[arg(long, default_value_t = 3)]
    pub repetitions: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Where graphs come from.
#[derive(Debug, Clone)]
pub enum InputSource {
    File {
        path: PathBuf,
        base: usize,
        nodes: Option<usize>,
    },
    Generated(GraphSpec),
}

/// A loaded graph with the offset that maps internal ids to printed ids.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: Graph,
    pub id_offset: usize,
    pub seed: Option<u64>,
}

impl InputSource {
    pub fn label(&self) -> String {
        match self {
            InputSource::File { path, .. } => path.display().to_string(),
            InputSource::Generated(spec) => spec.to_string(),
        }
    }

    pub fn load(&self, seed: Option<u64>) -> Result<LoadedGraph> {
        match self {
            InputSource::File { path, base, nodes } => {
                let mut text = String::new();
                BufReader::new(File::open(path)?).read_to_string(&mut text)?;
                let is_mm = text.starts_with("%%MatrixMarket")
                    || path
                        .extension()
                        .is_some_and(|e| e.eq_ignore_ascii_case("mtx"));
                if is_mm {
                    Ok(LoadedGraph {
                        graph: load_matrix_market(text.as_bytes())?,
                        id_offset: 1,
                        seed: None,
                    })
                } else {
                    let graph = match nodes {
                        Some(n) => load_edge_list_sized(text.as_bytes(), *base, *n)?,
                        None => load_edge_list(text.as_bytes(), *base)?,
                    };
                    Ok(LoadedGraph {
                        graph,
                        id_offset: *base,
                        seed: None,
                    })
                }
            }
            InputSource::Generated(spec) => {
                let seed = spec.is_random().then(|| seed.unwrap_or(0));
                Ok(LoadedGraph {
                    graph: spec.build(seed.unwrap_or(0))?,
                    id_offset: 0,
                    seed,
                })
            }
        }
    }
}

impl InputArgs {
    pub fn source(&self) -> Result<InputSource> {
        match (&self.input, &self.generate) {
            (Some(path), None) => Ok(InputSource::File {
                path: path.clone(),
                base: self.base,
                nodes: self.nodes,
            }),
            (None, Some(spec)) => Ok(InputSource::Generated(spec.parse()?)),
            _ => Err(Error::invalid(
                "exactly one of --input and --generate is required",
            )),
        }
    }

    /// Seeds of the instances to run; `[None]` for a single deterministic input.
    pub fn instances(&self, source: &InputSource) -> Result<Vec<Option<u64>>> {
        if matches!(self.reps, Some(0)) {
            return Err(Error::invalid("--reps must be at least 1"));
        }
        let random = matches!(source, InputSource::Generated(spec) if spec.is_random());
        match (&self.seeds, self.reps) {
            (Some(seeds), reps) => {
                if seeds.is_empty() {
                    return Err(Error::invalid("--seeds is empty"));
                }
                if let Some(r) = reps {
                    if r != seeds.len() {
                        return Err(Error::invalid(format!(
                            "--reps {r} does not match the {} seeds given",
                            seeds.len()
                        )));
                    }
                }
                if !random {
                    return Err(Error::invalid(
                        "--seeds only applies to random generators (pref, smallw)",
                    ));
                }
                Ok(seeds.iter().map(|&s| Some(s)).collect())
            }
            (None, Some(r)) if r > 1 => {
                if !random {
                    return Err(Error::invalid(
                        "--reps > 1 only applies to random generators (pref, smallw)",
                    ));
                }
                Ok((0..r as u64).map(Some).collect())
            }
            _ => Ok(vec![random.then_some(0)]),
        }
    }
}

/// Scientific notation with 6 significant digits, e.g. `3.69000e+04`.
pub fn format_sci(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let s = format!("{x:.5e}");
    let (mantissa, exp) = s.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.abs())
}

fn format_opt(x: Option<f64>) -> String {
    x.map(format_sci).unwrap_or_else(|| "--".to_string())
}

/// Mean and sample standard deviation (0 for a single value).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Summary {
    pub mean: f64,
    pub std: f64,
    pub count: usize,
}

impl Summary {
    pub fn of(values: &[f64]) -> Option<Summary> {
        if values.is_empty() {
            return None;
        }
        let count = values.len();
        let mean = values.iter().sum::<f64>() / count as f64;
        let std = if count > 1 {
            (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (count - 1) as f64).sqrt()
        } else {
            0.0
        };
        Some(Summary { mean, std, count })
    }
}

fn open_output<'a>(path: Option<&Path>, stdout: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(stdout),
    })
}

fn write_json<T: Serialize>(value: &T, out: &mut dyn Write) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn score_vector(
    g: &Graph,
    method: Method,
    function: &FunctionArgs,
    cfg: &KrylovConfig,
    exact_below: usize,
) -> Result<ScoreVector> {
    compute_scores(
        g,
        method,
        function.beta,
        function.alpha_choice(),
        cfg,
        exact_below,
    )
}

#[derive(Serialize)]
struct NodeRow {
    node_id: usize,
    score: f64,
    rank: usize,
}

#[derive(Serialize)]
struct CentralityOutput<'a> {
    input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    method: Method,
    params: crate::centrality::MethodParams,
    n: usize,
    m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<&'a NetworkReport>,
    nodes: Vec<NodeRow>,
}

fn report_function(method: Method, function: &FunctionArgs) -> ReportFunction {
    if method.is_resolvent() {
        ReportFunction::Resolvent {
            alpha: function.alpha_choice(),
        }
    } else {
        ReportFunction::Exp {
            beta: function.beta,
        }
    }
}

fn cmd_centrality(args: &CentralityArgs, stdout: &mut dyn Write) -> Result<()> {
    let source = args.input.source()?;
    let instances = args.input.instances(&source)?;
    if instances.len() != 1 {
        return Err(Error::invalid(
            "centrality runs on a single instance; pass one seed",
        ));
    }
    let loaded = source.load(instances[0])?;
    let g = &loaded.graph;
    let cfg = args.krylov.config()?;
    let method = Method::from(args.method);
    let want_report = args.output.format == OutputFormat::Json && !args.no_report;

    let (scores, report) = if want_report && g.num_nodes() > 0 {
        let analysis = analyze(
            g,
            report_function(method, &args.function),
            &cfg,
            args.krylov.exact_below,
        )?;
        let scores = match method {
            Method::ExpTotal | Method::ResTotal => analysis.total,
            _ => analysis.subgraph,
        };
        (scores, Some(analysis.report))
    } else {
        (
            score_vector(g, method, &args.function, &cfg, args.krylov.exact_below)?,
            None,
        )
    };
    let ranking = rank_with(&scores, args.ties.into(), DEFAULT_TIE_TOLERANCE);
    let rows: Vec<NodeRow> = ranking
        .order
        .iter()
        .enumerate()
        .map(|(r, &node)| NodeRow {
            node_id: node + loaded.id_offset,
            score: scores.scores[node],
            rank: r + 1,
        })
        .collect();

    let mut out = open_output(args.output.out.as_deref(), stdout)?;
    match args.output.format {
        OutputFormat::Csv => {
            writeln!(out, "node_id,score,rank")?;
            for row in &rows {
                writeln!(
                    out,
                    "{},{},{}",
                    row.node_id,
                    format_sci(row.score),
                    row.rank
                )?;
            }
        }
        OutputFormat::Json => write_json(
            &CentralityOutput {
                input: source.label(),
                seed: loaded.seed,
                method,
                params: scores.params,
                n: g.num_nodes(),
                m: g.num_edges(),
                report: report.as_ref(),
                nodes: rows,
            },
            &mut out,
        )?,
    }
    out.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct CompareInstance {
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    n: usize,
    m: usize,
    comparison: RankComparison,
}

#[derive(Serialize)]
struct TopSummary {
    #[serde(skip_serializing_if = "Option::is_none")]
    percent: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    /// Over the instances where the top sets agree.
    #[serde(skip_serializing_if = "Option::is_none")]
    cc: Option<Summary>,
    undefined_cc: usize,
    isim: Summary,
}

#[derive(Serialize)]
struct CompareSummary {
    cc_full: Summary,
    isim_full: Summary,
    m: Summary,
    top: Vec<TopSummary>,
}

#[derive(Serialize)]
struct CompareOutput {
    input: String,
    method_a: Method,
    method_b: Method,
    ties: TieBreak,
    instances: Vec<CompareInstance>,
    summary: CompareSummary,
}

fn cmd_compare(args: &CompareArgs, stdout: &mut dyn Write) -> Result<()> {
    let source = args.input.source()?;
    let seeds = args.input.instances(&source)?;
    let cfg = args.krylov.config()?;
    let (ma, mb) = (Method::from(args.method_a), Method::from(args.method_b));
    let mut cutoffs: Vec<Cutoff> = Vec::new();
    for &p in &args.top_percents {
        cutoffs.push(Cutoff::Percent(p));
    }
    for &k in &args.top_k {
        cutoffs.push(Cutoff::Count(k));
    }
    let ties: TieBreak = args.ties.into();

    let instances: Vec<CompareInstance> = seeds
        .par_iter()
        .map(|&seed| -> Result<CompareInstance> {
            let loaded = source.load(seed)?;
            let g = &loaded.graph;
            let a = score_vector(g, ma, &args.function, &cfg, args.krylov.exact_below)?;
            let b = score_vector(g, mb, &args.function, &cfg, args.krylov.exact_below)?;
            let comparison = compare_rankings(
                &rank_with(&a, ties, DEFAULT_TIE_TOLERANCE),
                &rank_with(&b, ties, DEFAULT_TIE_TOLERANCE),
                &cutoffs,
                args.curve,
            )?;
            Ok(CompareInstance {
                seed: loaded.seed,
                n: g.num_nodes(),
                m: g.num_edges(),
                comparison,
            })
        })
        .collect::<Result<_>>()?;

    let pick = |f: &dyn Fn(&CompareInstance) -> f64| -> Summary {
        Summary::of(&instances.iter().map(f).collect::<Vec<_>>()).expect("at least one instance")
    };
    let top = (0..cutoffs.len())
        .map(|t| {
            let ccs: Vec<f64> = instances
                .iter()
                .filter_map(|i| i.comparison.top[t].cc)
                .collect();
            let first = &instances[0].comparison.top[t];
            TopSummary {
                percent: first.percent,
                k: first.percent.is_none().then_some(first.k),
                cc: Summary::of(&ccs),
                undefined_cc: instances.len() - ccs.len(),
                isim: pick(&|i| i.comparison.top[t].isim),
            }
        })
        .collect();
    let summary = CompareSummary {
        cc_full: pick(&|i| i.comparison.cc_full),
        isim_full: pick(&|i| i.comparison.isim_full),
        m: pick(&|i| i.m as f64),
        top,
    };

    let mut out = open_output(args.output.out.as_deref(), stdout)?;
    match args.output.format {
        OutputFormat::Csv => {
            let mut header = vec![
                "instance".to_string(),
                "m".into(),
                "cc_full".into(),
                "isim_full".into(),
            ];
            for c in &cutoffs {
                let tag = match c {
                    Cutoff::Percent(p) => format!("{p}pct"),
                    Cutoff::Count(k) => format!("k{k}"),
                };
                header.push(format!("cc_{tag}"));
                header.push(format!("isim_{tag}"));
            }
            writeln!(out, "{}", header.join(","))?;
            for inst in &instances {
                let mut row = vec![
                    inst.seed
                        .map(|s| format!("seed={s}"))
                        .unwrap_or_else(|| "input".into()),
                    inst.m.to_string(),
                    format_sci(inst.comparison.cc_full),
                    format_sci(inst.comparison.isim_full),
                ];
                for t in &inst.comparison.top {
                    row.push(format_opt(t.cc));
                    row.push(format_sci(t.isim));
                }
                writeln!(out, "{}", row.join(","))?;
            }
            if instances.len() > 1 {
                for (label, get) in [
                    ("mean", (|s: &Summary| s.mean) as fn(&Summary) -> f64),
                    ("std", |s: &Summary| s.std),
                ] {
                    let mut row = vec![
                        label.to_string(),
                        format_sci(get(&summary.m)),
                        format_sci(get(&summary.cc_full)),
                        format_sci(get(&summary.isim_full)),
                    ];
                    for t in &summary.top {
                        row.push(format_opt(t.cc.as_ref().map(get)));
                        row.push(format_sci(get(&t.isim)));
                    }
                    writeln!(out, "{}", row.join(","))?;
                }
            }
        }
        OutputFormat::Json => write_json(
            &CompareOutput {
                input: source.label(),
                method_a: ma,
                method_b: mb,
                ties,
                instances,
                summary,
            },
            &mut out,
        )?,
    }
    out.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct ReportInstance {
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    report: NetworkReport,
}

#[derive(Serialize)]
struct ReportSummary {
    m: Summary,
    lambda1: Summary,
    c_over_n: Summary,
    ee_over_n: Summary,
    upper_bound_over_n: Summary,
    all_bounds_ok: bool,
}

#[derive(Serialize)]
struct ReportOutput {
    input: String,
    instances: Vec<ReportInstance>,
    summary: ReportSummary,
}

fn cmd_report(args: &ReportArgs, stdout: &mut dyn Write) -> Result<()> {
    let source = args.input.source()?;
    let seeds = args.input.instances(&source)?;
    let cfg = args.krylov.config()?;
    let function = match args.function {
        FunctionArg::Exp => ReportFunction::Exp {
            beta: args.params.beta,
        },
        FunctionArg::Resolvent => ReportFunction::Resolvent {
            alpha: args.params.alpha_choice(),
        },
    };
    let instances: Vec<ReportInstance> = seeds
        .par_iter()
        .map(|&seed| -> Result<ReportInstance> {
            let loaded = source.load(seed)?;
            Ok(ReportInstance {
                seed: loaded.seed,
                report: analyze(&loaded.graph, function, &cfg, args.krylov.exact_below)?.report,
            })
        })
        .collect::<Result<_>>()?;
    let pick = |f: fn(&NetworkReport) -> f64| {
        Summary::of(&instances.iter().map(|i| f(&i.report)).collect::<Vec<_>>())
            .expect("at least one instance")
    };
    let summary = ReportSummary {
        m: pick(|r| r.m as f64),
        lambda1: pick(|r| r.lambda1),
        c_over_n: pick(|r| r.c_over_n),
        ee_over_n: pick(|r| r.ee_over_n),
        upper_bound_over_n: pick(|r| r.upper_bound_over_n),
        all_bounds_ok: instances.iter().all(|i| i.report.bounds_ok),
    };

    let mut out = open_output(args.out.as_deref(), stdout)?;
    match args.format {
        OutputFormat::Csv => {
            writeln!(
                out,
                "instance,n,m,lambda1,lambda2,ee_over_n,c_over_n,upper_bound_over_n,bounds_ok"
            )?;
            for inst in &instances {
                let r = &inst.report;
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{}",
                    inst.seed
                        .map(|s| format!("seed={s}"))
                        .unwrap_or_else(|| "input".into()),
                    r.n,
                    r.m,
                    format_sci(r.lambda1),
                    format_opt(r.lambda2),
                    format_sci(r.ee_over_n),
                    format_sci(r.c_over_n),
                    format_sci(r.upper_bound_over_n),
                    r.bounds_ok
                )?;
            }
            if instances.len() > 1 {
                for (label, get) in [
                    ("mean", (|s: &Summary| s.mean) as fn(&Summary) -> f64),
                    ("std", |s: &Summary| s.std),
                ] {
                    writeln!(
                        out,
                        "{label},,{},{},,{},{},{},{}",
                        format_sci(get(&summary.m)),
                        format_sci(get(&summary.lambda1)),
                        format_sci(get(&summary.ee_over_n)),
                        format_sci(get(&summary.c_over_n)),
                        format_sci(get(&summary.upper_bound_over_n)),
                        summary.all_bounds_ok
                    )?;
                }
            }
        }
        OutputFormat::Json => write_json(
            &ReportOutput {
                input: source.label(),
                instances,
                summary,
            },
            &mut out,
        )?,
    }
    out.flush()?;
    Ok(())
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct PhaseTimings {
    pub load: f64,
    pub lambda1: f64,
    pub kernel: f64,
    pub total: f64,
}

#[derive(Serialize)]
struct BenchOutput {
    input: String,
    method: Method,
    n: usize,
    m: usize,
    threads: usize,
    repetitions: Vec<PhaseTimings>,
    kernel: Summary,
    total: Summary,
}

/// Times one run of every phase.
fn timed_run(
    source: &InputSource,
    seed: Option<u64>,
    args: &BenchArgs,
    cfg: &KrylovConfig,
) -> Result<(PhaseTimings, Graph)> {
    let method = Method::from(args.method);
    let start = Instant::now();
    let g = source.load(seed)?.graph;
    let load = start.elapsed().as_secs_f64();

    let t = Instant::now();
    let lambda1 = if g.num_nodes() == 0 {
        0.0
    } else {
        dominant_eigs(&g, SPECTRAL_TOL)?.lambda1
    };
    let resolved = if method.is_resolvent() {
        Some(resolve_alpha(args.function.alpha_choice(), lambda1)?)
    } else {
        None
    };
    let lambda1 = t.elapsed().as_secs_f64();

    let t = Instant::now();
    let exact = args.krylov.exact_below;
    match (method, resolved) {
        (Method::ExpTotal, _) => total_communicability(&g, args.function.beta, cfg)?,
        (Method::ExpSubgraph, _) => subgraph_centrality(&g, args.function.beta, cfg, exact)?,
        (Method::ResTotal, Some(a)) => katz_total_resolved(&g, a, cfg)?,
        (Method::ResSubgraph, Some(a)) => katz_subgraph_resolved(&g, a, cfg, exact)?,
        _ => unreachable!("bench methods come from MethodArg"),
    };
    let kernel = t.elapsed().as_secs_f64();
    Ok((
        PhaseTimings {
            load,
            lambda1,
            kernel,
            total: start.elapsed().as_secs_f64(),
        },
        g,
    ))
}

fn cmd_bench(args: &BenchArgs, stdout: &mut dyn Write) -> Result<()> {
    if args.repetitions == 0 {
        return Err(Error::invalid("--repetitions must be at least 1"));
    }
    let source = args.input.source()?;
    let seeds = args.input.instances(&source)?;
    if seeds.len() != 1 {
        return Err(Error::invalid(
            "bench runs on a single instance; pass one seed",
        ));
    }
    let cfg = args.krylov.config()?;
    let mut reps = Vec::with_capacity(args.repetitions);
    let mut shape = (0, 0);
    for _ in 0..args.repetitions {
        let (timing, g) = timed_run(&source, seeds[0], args, &cfg)?;
        shape = (g.num_nodes(), g.num_edges());
        reps.push(timing);
    }
    let output = BenchOutput {
        input: source.label(),
        method: args.method.into(),
        n: shape.0,
        m: shape.1,
        threads: rayon::current_num_threads(),
        kernel: Summary::of(&reps.iter().map(|r| r.kernel).collect::<Vec<_>>()).expect("non-empty"),
        total: Summary::of(&reps.iter().map(|r| r.total).collect::<Vec<_>>()).expect("non-empty"),
        repetitions: reps,
    };
    let mut out = open_output(args.out.as_deref(), stdout)?;
    write_json(&output, &mut out)?;
    out.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct GenerateSidecar {
    spec: String,
    generator: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    rng: &'static str,
    n: usize,
    m: usize,
    min_degree: usize,
    max_degree: usize,
    connected: bool,
    edge_list: String,
    base: usize,
}

fn cmd_generate(args: &GenerateArgs) -> Result<()> {
    let spec: GraphSpec = args.generate.parse()?;
    let g = spec.build(args.seed)?;
    let mut edges = BufWriter::new(File::create(&args.out)?);
    write_canonical(&g, &mut edges)?;
    edges.flush()?;

    let degrees = g.degrees();
    let sidecar = GenerateSidecar {
        spec: spec.to_string(),
        generator: spec.kind(),
        seed: spec.is_random().then_some(args.seed),
        rng: RNG_ALGORITHM,
        n: g.num_nodes(),
        m: g.num_edges(),
        min_degree: degrees.min(),
        max_degree: degrees.max(),
        connected: g.is_connected(),
        edge_list: args
            .out
            .file_name()
            .map(|f| f.to_string_lossy().into_owned())
            .unwrap_or_default(),
        base: 0,
    };
    let mut path = args.out.clone().into_os_string();
    path.push(".json");
    let mut side = BufWriter::new(File::create(PathBuf::from(path))?);
    write_json(&sidecar, &mut side)?;
    side.flush()?;
    Ok(())
}

/// Runs a parsed command, writing results to `stdout` unless `--out` is set.
pub fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Generate(a) => cmd_generate(a),
        Command::Centrality(a) => cmd_centrality(a, stdout),
        Command::Compare(a) => cmd_compare(a, stdout),
        Command::Report(a) => cmd_report(a, stdout),
        Command::Bench(a) => cmd_bench(a, stdout),
    }
}

/// Exit status for an error: 2 for non-convergence, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_non_convergence() {
        2
    } else {
        1
    }
}

/// Full entry point: parses `args`, runs, reports errors to `stderr` and
/// returns the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return 1;
            }
            let _ = write!(stdout, "{}", e.render());
            return 0;
        }
    };
    match execute(&cli, stdout) {
        Ok(()) => 0,
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

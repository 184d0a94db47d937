//! Verification campaigns over generated corpora.
//!
//! A [`CampaignSpec`] names a family, a corpus, how `m` is chosen and which
//! solver runs. [`run_conjecture_check`] decides every corpus graph and
//! collects a [`VerificationReport`]; [`run_bound_validation`] checks the
//! density formulas. Reports carry no timings unless asked for, so the same
//! spec always produces the same bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize};
use sha2::{Digest, Sha256};

use crate::bounds::{delta_cap, density_bound};
use crate::constructive::{solve_equitable_with, BaseCase, ConstructiveConfig, Mechanism};
use crate::error::{Error, Result};
use crate::exact::{decide_equitable, SolveBudget, Verdict};
use crate::family::FamilySpec;
use crate::gen::{enumerate_levels, is_exception, random_family_graphs, GenConfig, GenMode};
use crate::graph::Graph;
use crate::io::{read_edge_list, write_edge_list};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
/// Environment variable holding the worker count.
pub const THREADS_ENV: &str = "EQUICOLOR_THREADS";

pub const EXIT_CLEAN: i32 = 0;
pub const EXIT_EXHAUSTED: i32 = 2;
pub const EXIT_CRITICAL: i32 = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CorpusSpec {
    /// Every family member with `n_min <= n <= n_max`, up to isomorphism.
    Exhaustive {
        #[serde(default = "one")]
        n_min: usize,
        n_max: usize,
        #[serde(default)]
        connected: bool,
        #[serde(default)]
        max_edges: Option<usize>,
    },
    /// `count` random members per order. The seed for order `n` is `seed + n`.
    Random {
        n_min: usize,
        n_max: usize,
        count: usize,
        seed: u64,
        #[serde(default)]
        connected: bool,
        #[serde(default)]
        target_edges: Option<usize>,
    },
    /// Edge-list files; each must be in the family.
    Files { paths: Vec<PathBuf> },
}

fn one() -> usize {
    1
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderPolicy {
    #[default]
    All,
    /// Keep only graphs whose order is a multiple of `m`.
    MultiplesOfM,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "policy", rename_all = "kebab-case")]
pub enum ColorPolicy {
    /// `m = Δ(G)`.
    #[default]
    MaxDegree,
    /// `m = Δ(G) + 1`.
    MaxDegreePlusOne,
    Fixed { m: usize },
}

impl ColorPolicy {
    pub fn colors(self, g: &Graph) -> usize {
        match self {
            ColorPolicy::MaxDegree => g.max_degree(),
            ColorPolicy::MaxDegreePlusOne => g.max_degree() + 1,
            ColorPolicy::Fixed { m } => m,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolverChoice {
    #[default]
    Exact,
    Constructive,
    /// Run both and cross-check the verdicts.
    Both,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExceptionPolicy {
    #[default]
    Skip,
    /// Exceptions must come out not colorable.
    AssertNotColorable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetSpec {
    pub node_limit: u64,
    pub time_limit_ms: u64,
}

impl Default for BudgetSpec {
    fn default() -> Self {
        let b = SolveBudget::default();
        BudgetSpec { node_limit: b.node_limit, time_limit_ms: b.time_limit.as_millis() as u64 }
    }
}

impl BudgetSpec {
    pub fn budget(&self) -> Result<SolveBudget> {
        SolveBudget::new(self.node_limit, Duration::from_millis(self.time_limit_ms))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignSpec {
    #[serde(default)]
    pub name: String,
    /// A preset string such as `"triangle-free"` or a full table.
    #[serde(deserialize_with = "family_de")]
    pub family: FamilySpec,
    pub corpus: CorpusSpec,
    #[serde(default)]
    pub orders: OrderPolicy,
    #[serde(default)]
    pub colors: ColorPolicy,
    /// Keep only graphs with `delta_min <= Δ(G) <= delta_max`.
    #[serde(default)]
    pub delta_min: Option<usize>,
    #[serde(default)]
    pub delta_max: Option<usize>,
    #[serde(default)]
    pub solver: SolverChoice,
    #[serde(default)]
    pub base_case: BaseCase,
    #[serde(default)]
    pub budget: BudgetSpec,
    #[serde(default)]
    pub exceptions: ExceptionPolicy,
    #[serde(default)]
    pub record_timings: bool,
}

fn family_de<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<FamilySpec, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Preset(String),
        Spec(FamilySpec),
    }
    match Repr::deserialize(d)? {
        Repr::Preset(s) => s.parse().map_err(serde::de::Error::custom),
        Repr::Spec(f) => Ok(f.normalized()),
    }
}

impl CampaignSpec {
    pub fn new(family: FamilySpec, corpus: CorpusSpec) -> Self {
        CampaignSpec {
            name: String::new(),
            family: family.normalized(),
            corpus,
            orders: OrderPolicy::All,
            colors: ColorPolicy::MaxDegree,
            delta_min: None,
            delta_max: None,
            solver: SolverChoice::Exact,
            base_case: BaseCase::Edgeless,
            budget: BudgetSpec::default(),
            exceptions: ExceptionPolicy::Skip,
            record_timings: false,
        }
    }

    pub fn from_toml_str(text: &str) -> Result<Self> {
        let spec: CampaignSpec = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let mut spec = Self::from_toml_str(&std::fs::read_to_string(path)?)?;
        // File corpora are relative to the config file.
        if let (CorpusSpec::Files { paths }, Some(dir)) = (&mut spec.corpus, path.parent()) {
            for p in paths.iter_mut().filter(|p| p.is_relative()) {
                *p = dir.join(&*p);
            }
        }
        Ok(spec)
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn validate(&self) -> Result<()> {
        if let ColorPolicy::Fixed { m: 0 } = self.colors {
            return Err(Error::ZeroColors);
        }
        self.budget.budget()?;
        match &self.corpus {
            CorpusSpec::Exhaustive { n_min, n_max, .. } | CorpusSpec::Random { n_min, n_max, .. } if n_min > n_max => {
                Err(Error::Config(format!("empty order range {n_min}..={n_max}")))
            }
            _ => Ok(()),
        }
    }

    fn keeps(&self, g: &Graph) -> bool {
        let d = g.max_degree();
        let m = self.colors.colors(g);
        m >= 1
            && self.delta_min.is_none_or(|lo| d >= lo)
            && self.delta_max.is_none_or(|hi| d <= hi)
            && (self.orders == OrderPolicy::All || g.order().is_multiple_of(m))
    }
}

/// Generates the raw corpus of a spec, before the degree and order filters.
pub fn build_corpus(family: &FamilySpec, corpus: &CorpusSpec) -> Result<Vec<Graph>> {
    match corpus {
        CorpusSpec::Exhaustive { n_min, n_max, connected, max_edges } => {
            let levels = enumerate_levels(family, *n_max, *connected, *max_edges)?;
            Ok(levels.into_iter().skip(*n_min).flatten().collect())
        }
        CorpusSpec::Random { n_min, n_max, count, seed, connected, target_edges } => {
            let mut out = Vec::new();
            for n in *n_min..=*n_max {
                let c = GenConfig {
                    n,
                    family: family.clone().normalized(),
                    mode: GenMode::Random { count: *count, seed: seed.wrapping_add(n as u64), target_edges: *target_edges },
                    connected: *connected,
                    max_edges: None,
                };
                out.extend(random_family_graphs(&c)?);
            }
            Ok(out)
        }
        CorpusSpec::Files { paths } => paths
            .iter()
            .map(|p| {
                let g = read_edge_list(p)?;
                family
                    .check(&g)
                    .map_err(|v| Error::Config(format!("{} is not in family {family}: {v}", p.display())))?;
                Ok(g)
            })
            .collect(),
    }
}

/// Hex SHA-256 of the graph's edge-list text.
pub fn graph_hash(g: &Graph) -> String {
    let digest = Sha256::digest(write_edge_list(g).as_bytes());
    digest.iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Yes,
    No,
    Exhausted,
    ExceptionSkipped,
    ExceptionConfirmed,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub index: usize,
    pub hash: String,
    pub n: usize,
    pub e: usize,
    pub delta: usize,
    pub m: usize,
    pub outcome: Outcome,
    pub exception: Option<String>,
    pub exact: Option<String>,
    pub constructive: Option<String>,
    pub mechanisms: BTreeMap<Mechanism, usize>,
    pub nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub duration_ms: Option<f64>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub corpus: usize,
    pub yes: usize,
    pub no: usize,
    pub exhausted: usize,
    pub exceptions_skipped: usize,
    pub exceptions_confirmed: usize,
}

impl Counts {
    fn add(&mut self, o: Outcome) {
        self.corpus += 1;
        match o {
            Outcome::Yes => self.yes += 1,
            Outcome::No => self.no += 1,
            Outcome::Exhausted => self.exhausted += 1,
            Outcome::ExceptionSkipped => self.exceptions_skipped += 1,
            Outcome::ExceptionConfirmed => self.exceptions_confirmed += 1,
        }
    }

    pub fn is_consistent(&self) -> bool {
        self.yes + self.no + self.exhausted + self.exceptions_skipped + self.exceptions_confirmed == self.corpus
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CriticalKind {
    /// A graph outside the exception list is not colorable.
    NonExceptionNo,
    /// An exception graph turned out colorable.
    ExceptionColorable,
    SolverDisagreement,
    DensityViolation,
    DeltaCapViolation,
}

/// A finding that would falsify a claim or a component; `witness` is the
/// graph as an edge-list file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalEntry {
    pub kind: CriticalKind,
    pub hash: String,
    pub n: usize,
    pub detail: String,
    pub witness: String,
}

impl CriticalEntry {
    fn new(kind: CriticalKind, g: &Graph, detail: String) -> Self {
        CriticalEntry { kind, hash: graph_hash(g), n: g.order(), detail, witness: write_edge_list(g) }
    }

    pub fn file_name(&self) -> String {
        format!("{}-{}.dimacs", serde_json::to_value(self.kind).unwrap().as_str().unwrap(), &self.hash[..16])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundViolation {
    pub hash: String,
    pub n: usize,
    pub e: usize,
    pub bound: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub tool_version: String,
    pub config: CampaignSpec,
    /// Graphs produced before the degree and order filters.
    pub generated: usize,
    pub counts: Counts,
    pub mechanisms: BTreeMap<Mechanism, usize>,
    pub exhausted: Vec<String>,
    pub bound_violations: Vec<BoundViolation>,
    pub critical: Vec<CriticalEntry>,
    pub records: Vec<GraphRecord>,
}

impl VerificationReport {
    pub fn exit_code(&self) -> i32 {
        if !self.critical.is_empty() {
            EXIT_CRITICAL
        } else if !self.exhausted.is_empty() {
            EXIT_EXHAUSTED
        } else {
            EXIT_CLEAN
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    /// One row per graph.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,hash,n,e,delta,m,outcome,exception,exact,constructive,nodes");
        for m in Mechanism::ALL {
            let _ = write!(out, ",{}", m.label());
        }
        if self.config.record_timings {
            out.push_str(",duration_ms");
        }
        out.push('\n');
        let label = |o: Outcome| serde_json::to_value(o).unwrap().as_str().unwrap().to_string();
        for r in &self.records {
            let _ = write!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{}",
                r.index,
                r.hash,
                r.n,
                r.e,
                r.delta,
                r.m,
                label(r.outcome),
                r.exception.as_deref().unwrap_or(""),
                r.exact.as_deref().unwrap_or(""),
                r.constructive.as_deref().unwrap_or(""),
                r.nodes
            );
            for m in Mechanism::ALL {
                let _ = write!(out, ",{}", r.mechanisms.get(&m).copied().unwrap_or(0));
            }
            if let Some(d) = r.duration_ms.filter(|_| self.config.record_timings) {
                let _ = write!(out, ",{d:.3}");
            }
            out.push('\n');
        }
        out
    }

    /// Writes `report.json`, `report.csv` and one witness file per CRITICAL
    /// entry under `dir/witnesses/`.
    pub fn write_to(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("report.json"), self.to_json()?)?;
        std::fs::write(dir.join("report.csv"), self.to_csv())?;
        write_witnesses(&self.critical, dir)
    }
}

fn write_witnesses(critical: &[CriticalEntry], dir: &Path) -> Result<()> {
    if critical.is_empty() {
        return Ok(());
    }
    let wdir = dir.join("witnesses");
    std::fs::create_dir_all(&wdir)?;
    for c in critical {
        std::fs::write(wdir.join(c.file_name()), &c.witness)?;
    }
    Ok(())
}

/// Worker count from [`THREADS_ENV`], if set.
pub fn threads_from_env() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Error::Config(format!("{THREADS_ENV} must be a positive integer, got '{s}'"))),
        },
        Err(_) => Ok(None),
    }
}

fn with_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        b = b.num_threads(n);
    }
    let pool = b.build().map_err(|e| Error::Config(e.to_string()))?;
    Ok(pool.install(f))
}

/// Builds the corpus and runs the campaign with the worker count from the
/// environment.
pub fn run_conjecture_check(spec: &CampaignSpec) -> Result<VerificationReport> {
    spec.validate()?;
    let corpus = build_corpus(&spec.family, &spec.corpus)?;
    run_on_corpus(spec, &corpus, threads_from_env()?)
}

/// Runs the campaign over an explicit corpus.
pub fn run_on_corpus(spec: &CampaignSpec, corpus: &[Graph], threads: Option<usize>) -> Result<VerificationReport> {
    spec.validate()?;
    let budget = spec.budget.budget()?;
    let kept: Vec<&Graph> = corpus.iter().filter(|g| spec.keeps(g)).collect();
    let results: Vec<Result<Checked>> = with_pool(threads, || {
        kept.par_iter().enumerate().map(|(i, g)| check_graph(spec, budget, i, g)).collect()
    })?;
    let mut report = VerificationReport {
        schema: SCHEMA_VERSION,
        tool_version: TOOL_VERSION.to_string(),
        config: spec.clone(),
        generated: corpus.len(),
        counts: Counts::default(),
        mechanisms: BTreeMap::new(),
        exhausted: vec![],
        bound_violations: vec![],
        critical: vec![],
        records: Vec::with_capacity(kept.len()),
    };
    for res in results {
        let (rec, crit, bound) = res?;
        report.counts.add(rec.outcome);
        if rec.outcome == Outcome::Exhausted {
            report.exhausted.push(rec.hash.clone());
        }
        for (&k, &v) in &rec.mechanisms {
            *report.mechanisms.entry(k).or_default() += v;
        }
        report.critical.extend(crit);
        report.bound_violations.extend(bound);
        report.records.push(rec);
    }
    debug_assert!(report.counts.is_consistent());
    Ok(report)
}

type Checked = (GraphRecord, Vec<CriticalEntry>, Option<BoundViolation>);

fn check_graph(
    spec: &CampaignSpec,
    budget: SolveBudget,
    index: usize,
    g: &Graph,
) -> Result<Checked> {
    let start = Instant::now();
    let m = spec.colors.colors(g);
    let mut critical = Vec::new();
    let mut bound_violation = None;
    if g.order() >= 3 {
        if let Some(bound) = density_bound(&spec.family, g.order())? {
            if g.size() > bound {
                critical.push(CriticalEntry::new(
                    CriticalKind::DensityViolation,
                    g,
                    format!("{} edges exceed the bound {bound}", g.size()),
                ));
                bound_violation = Some(BoundViolation { hash: graph_hash(g), n: g.order(), e: g.size(), bound });
            }
        }
    }
    let mut rec = GraphRecord {
        index,
        hash: graph_hash(g),
        n: g.order(),
        e: g.size(),
        delta: g.max_degree(),
        m,
        outcome: Outcome::Exhausted,
        exception: None,
        exact: None,
        constructive: None,
        mechanisms: BTreeMap::new(),
        nodes: 0,
        duration_ms: None,
    };
    let exception = is_exception(g, m);
    rec.exception = exception.map(|k| k.to_string());
    if exception.is_some() && spec.exceptions == ExceptionPolicy::Skip {
        rec.outcome = Outcome::ExceptionSkipped;
        return Ok(finish(spec, rec, critical, bound_violation, start));
    }

    let mut verdicts = Vec::new();
    if matches!(spec.solver, SolverChoice::Exact | SolverChoice::Both) {
        let out = decide_equitable(g, m, budget)?;
        rec.nodes += out.stats.nodes;
        rec.exact = Some(out.verdict.label().to_string());
        verdicts.push(out.verdict);
    }
    if matches!(spec.solver, SolverChoice::Constructive | SolverChoice::Both) {
        let cfg = ConstructiveConfig { budget, base: spec.base_case };
        let out = solve_equitable_with(g, m, &cfg)?;
        rec.nodes += out.outcome.stats.nodes;
        rec.constructive = Some(out.outcome.verdict.label().to_string());
        rec.mechanisms = out.trace.counts;
        verdicts.push(out.outcome.verdict);
    }
    let any_yes = verdicts.iter().any(Verdict::is_yes);
    let any_no = verdicts.iter().any(Verdict::is_no);
    if any_yes && any_no {
        critical.push(CriticalEntry::new(
            CriticalKind::SolverDisagreement,
            g,
            format!("m={m}: exact {:?}, constructive {:?}", rec.exact, rec.constructive),
        ));
    }
    rec.outcome = match (exception, any_yes, any_no) {
        (_, true, true) => Outcome::Yes,
        (Some(kind), true, false) => {
            critical.push(CriticalEntry::new(
                CriticalKind::ExceptionColorable,
                g,
                format!("exception '{kind}' is equitably {m}-colorable"),
            ));
            Outcome::Yes
        }
        (Some(_), false, true) => Outcome::ExceptionConfirmed,
        (None, true, false) => Outcome::Yes,
        (None, false, true) => {
            critical.push(CriticalEntry::new(
                CriticalKind::NonExceptionNo,
                g,
                format!("not equitably {m}-colorable and not an exception"),
            ));
            Outcome::No
        }
        (_, false, false) => Outcome::Exhausted,
    };
    Ok(finish(spec, rec, critical, bound_violation, start))
}

fn finish(
    spec: &CampaignSpec,
    mut rec: GraphRecord,
    critical: Vec<CriticalEntry>,
    bound: Option<BoundViolation>,
    start: Instant,
) -> Checked {
    if spec.record_timings {
        rec.duration_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    (rec, critical, bound)
}

/// Density summary for one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderDensity {
    pub n: usize,
    pub graphs: usize,
    pub max_edges: usize,
    pub bound: Option<usize>,
    pub attained: bool,
    pub max_min_degree: usize,
    pub delta_cap: Option<usize>,
    /// An edge-maximal member, as an edge-list file.
    pub extremal: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub schema: u32,
    pub tool_version: String,
    pub family: FamilySpec,
    pub corpus: CorpusSpec,
    pub orders: Vec<OrderDensity>,
    pub critical: Vec<CriticalEntry>,
}

impl BoundReport {
    pub fn exit_code(&self) -> i32 {
        if self.critical.is_empty() {
            EXIT_CLEAN
        } else {
            EXIT_CRITICAL
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn order(&self, n: usize) -> Option<&OrderDensity> {
        self.orders.iter().find(|o| o.n == n)
    }

    pub fn write_to(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("bounds.json"), self.to_json()?)?;
        write_witnesses(&self.critical, dir)
    }
}

/// Checks `e(G) <= density_bound` and `δ(G) <= delta_cap` on every corpus
/// member of order at least 3.
pub fn run_bound_validation(family: &FamilySpec, corpus: &CorpusSpec) -> Result<BoundReport> {
    let family = family.clone().normalized();
    let graphs = build_corpus(&family, corpus)?;
    let mut by_order: BTreeMap<usize, Vec<&Graph>> = BTreeMap::new();
    for g in graphs.iter().filter(|g| g.order() >= 3) {
        by_order.entry(g.order()).or_default().push(g);
    }
    let mut report = BoundReport {
        schema: SCHEMA_VERSION,
        tool_version: TOOL_VERSION.to_string(),
        family: family.clone(),
        corpus: corpus.clone(),
        orders: vec![],
        critical: vec![],
    };
    for (n, gs) in by_order {
        let bound = density_bound(&family, n)?;
        let cap = delta_cap(&family, n)?;
        let extremal = gs.iter().max_by_key(|g| g.size()).copied();
        let max_edges = extremal.map_or(0, Graph::size);
        for g in &gs {
            if let Some(b) = bound.filter(|&b| g.size() > b) {
                report.critical.push(CriticalEntry::new(
                    CriticalKind::DensityViolation,
                    g,
                    format!("{} edges exceed the bound {b}", g.size()),
                ));
            }
            if let Some(c) = cap.filter(|&c| g.min_degree() > c) {
                report.critical.push(CriticalEntry::new(
                    CriticalKind::DeltaCapViolation,
                    g,
                    format!("minimum degree {} exceeds {c}", g.min_degree()),
                ));
            }
        }
        report.orders.push(OrderDensity {
            n,
            graphs: gs.len(),
            max_edges,
            bound,
            attained: bound == Some(max_edges),
            max_min_degree: gs.iter().map(|g| g.min_degree()).max().unwrap_or(0),
            delta_cap: cap,
            extremal: extremal.map(write_edge_list),
        });
    }
    Ok(report)
}

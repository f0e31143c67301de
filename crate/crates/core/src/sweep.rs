//! Decider-versus-oracle sweeps over exhaustive and sampled graphs.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::certificate::Certificate;
use crate::decide::{decide, DecideError};
use crate::enumerate::{graph_count, graph_from_index, DEFAULT_BOUND};
use crate::format;
use crate::graph::{GraphError, OrientedGraph};
use crate::oracle::{self, OracleError, SearchProblem, DEFAULT_NODE_BUDGET};
use crate::random::{sample_graph, sample_rng};
use crate::target::Target;
use crate::verify::verify_with_budget;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    /// Exhaustive range of vertex counts; empty when `min > max`.
    pub min_exhaustive_n: usize,
    pub max_exhaustive_n: usize,
    pub samples: u64,
    pub sample_n: (usize, usize),
    pub seed: u64,
    pub targets: Vec<Target>,
    pub budget: u64,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            min_exhaustive_n: 2,
            max_exhaustive_n: DEFAULT_BOUND,
            samples: 0,
            sample_n: (6, 12),
            seed: 0,
            targets: Target::SUPPORTED.to_vec(),
            budget: DEFAULT_NODE_BUDGET,
            workers: None,
        }
    }
}

/// Where a swept graph came from; also the report's sort key.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GraphSource {
    Exhaustive { n: usize, index: u64 },
    Sample { index: u64 },
}

impl GraphSource {
    pub fn graph(self, config: &SweepConfig) -> OrientedGraph {
        match self {
            GraphSource::Exhaustive { n, index } => graph_from_index(n, index),
            GraphSource::Sample { index } => {
                let mut rng = sample_rng(config.seed, index);
                let (lo, hi) = config.sample_n;
                let n = rng.gen_range(lo..=hi);
                sample_graph(&mut rng, n)
            }
        }
    }
}

impl std::fmt::Display for GraphSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GraphSource::Exhaustive { n, index } => write!(f, "exhaustive n={n} index={index}"),
            GraphSource::Sample { index } => write!(f, "sample index={index}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    Mismatch,
    CertificateRejected,
    DeciderError,
    OracleExhausted,
    VerifierError,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Failure {
    pub source: GraphSource,
    pub target: Target,
    pub kind: FailureKind,
    pub detail: String,
    /// The offending graph in text format.
    pub graph: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetStats {
    pub checked: u64,
    pub yes: u64,
    pub no: u64,
    pub failures: u64,
    pub with_diagnostics: u64,
    /// Obstruction family label counts on NO.
    pub families: BTreeMap<String, u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub graphs: u64,
    /// In configuration order.
    pub targets: Vec<(Target, TargetStats)>,
    /// Sorted by source, then target.
    pub failures: Vec<Failure>,
}

impl SweepReport {
    pub fn mismatches(&self) -> usize {
        self.failures.len()
    }

    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graphs {}", self.graphs).unwrap();
        for (target, s) in &self.targets {
            let families: Vec<String> =
                s.families.iter().map(|(k, v)| format!("{k}={v}")).collect();
            writeln!(
                out,
                "{target} checked={} yes={} no={} failures={} diagnostics={} families[{}]",
                s.checked,
                s.yes,
                s.no,
                s.failures,
                s.with_diagnostics,
                families.join(" ")
            )
            .unwrap();
        }
        writeln!(out, "failures {}", self.failures.len()).unwrap();
        for f in &self.failures {
            writeln!(
                out,
                "FAIL {} {} {:?}: {}",
                f.target, f.source, f.kind, f.detail
            )
            .unwrap();
            out.push_str(&f.graph);
        }
        out
    }
}

pub type Decider = dyn Fn(Target, &OrientedGraph) -> Result<Certificate, DecideError> + Sync;

struct Outcome {
    target: Target,
    certificate: Option<Certificate>,
    failure: Option<(FailureKind, String)>,
}

fn evaluate(decider: &Decider, config: &SweepConfig, g: &OrientedGraph, target: Target) -> Outcome {
    let mut outcome = Outcome {
        target,
        certificate: None,
        failure: None,
    };
    let cert = match decider(target, g) {
        Ok(c) => c,
        Err(e) => {
            outcome.failure = Some((FailureKind::DeciderError, e.to_string()));
            return outcome;
        }
    };
    let h = target.graph();
    let problem = SearchProblem::new(g, &h, target.mode).with_budget(config.budget);
    match oracle::exists(&problem) {
        Err(OracleError::Exhausted { budget }) => {
            outcome.failure = Some((FailureKind::OracleExhausted, format!("budget {budget}")));
        }
        Err(e) => outcome.failure = Some((FailureKind::VerifierError, e.to_string())),
        Ok(exists) if exists != cert.is_yes() => {
            outcome.failure = Some((
                FailureKind::Mismatch,
                format!(
                    "decider={} oracle={}",
                    if cert.is_yes() { "yes" } else { "no" },
                    if exists { "yes" } else { "no" }
                ),
            ));
        }
        Ok(_) => match verify_with_budget(g, target, &cert, config.budget) {
            Ok(r) if r.passed() => {}
            Ok(r) => {
                outcome.failure = Some((
                    FailureKind::CertificateRejected,
                    format!("clause_a={} clause_b={:?}", r.clause_a, r.clause_b),
                ))
            }
            Err(e) => outcome.failure = Some((FailureKind::VerifierError, e.to_string())),
        },
    }
    outcome.certificate = Some(cert);
    outcome
}

pub fn sources(config: &SweepConfig) -> Result<Vec<GraphSource>, GraphError> {
    if config.max_exhaustive_n > DEFAULT_BOUND && config.min_exhaustive_n <= config.max_exhaustive_n
    {
        return Err(GraphError::BoundExceeded {
            n: config.max_exhaustive_n,
            bound: DEFAULT_BOUND,
        });
    }
    let mut out = Vec::new();
    for n in config.min_exhaustive_n..=config.max_exhaustive_n {
        out.extend((0..graph_count(n)).map(|index| GraphSource::Exhaustive { n, index }));
    }
    out.extend((0..config.samples).map(|index| GraphSource::Sample { index }));
    Ok(out)
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport, GraphError> {
    run_sweep_with(config, &decide)
}

pub fn run_sweep_with(config: &SweepConfig, decider: &Decider) -> Result<SweepReport, GraphError> {
    let sources = sources(config)?;
    let work = || {
        sources
            .par_iter()
            .map(|&source| {
                let g = source.graph(config);
                let outcomes: Vec<Outcome> = config
                    .targets
                    .iter()
                    .map(|&t| evaluate(decider, config, &g, t))
                    .collect();
                (source, g, outcomes)
            })
            .collect::<Vec<_>>()
    };
    let results = match config.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .expect("thread pool")
            .install(work),
        None => work(),
    };

    let mut stats_by_target: BTreeMap<Target, TargetStats> = BTreeMap::new();
    let mut report = SweepReport {
        graphs: results.len() as u64,
        targets: Vec::new(),
        failures: Vec::new(),
    };
    for (source, g, outcomes) in results {
        for o in outcomes {
            let stats = stats_by_target.entry(o.target).or_default();
            stats.checked += 1;
            if let Some(cert) = &o.certificate {
                if cert.is_yes() {
                    stats.yes += 1;
                } else {
                    stats.no += 1;
                    let family = cert.family().unwrap_or("?").to_string();
                    *stats.families.entry(family).or_default() += 1;
                }
                if !cert.diagnostics.is_empty() {
                    stats.with_diagnostics += 1;
                }
            }
            if let Some((kind, detail)) = o.failure {
                stats.failures += 1;
                report.failures.push(Failure {
                    source,
                    target: o.target,
                    kind,
                    detail,
                    graph: format::serialize(&g),
                });
            }
        }
    }
    report.failures.sort();
    report.targets = config
        .targets
        .iter()
        .map(|&t| (t, stats_by_target.remove(&t).unwrap_or_default()))
        .collect();
    Ok(report)
}

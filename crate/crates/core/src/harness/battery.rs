//! Runs a set of statements over a stream of graphs in batches. Bundles are
//! written as soon as their batch finishes, so a run that is interrupted
//! later keeps everything found so far. Theorem violations and conjecture
//! counterexamples go to separate sinks.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::harness::graph6;
use crate::par::Executor;
use crate::verify::{self, Applicability, BundleKind, Outcome, StatementId, TheoremVerdict};

pub const DEFAULT_BATCH: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatteryConfig {
    pub echo: RunEcho,
    pub statements: Vec<StatementId>,
    pub budget: Duration,
    pub batch: usize,
    /// Keep every verdict in the report, not only the totals.
    pub keep_verdicts: bool,
}

impl Default for BatteryConfig {
    fn default() -> Self {
        BatteryConfig {
            echo: RunEcho::default(),
            statements: StatementId::ALL.to_vec(),
            budget: verify::budget_from_env(),
            batch: DEFAULT_BATCH,
            keep_verdicts: false,
        }
    }
}

/// Describes where the input came from; copied into the report verbatim.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunEcho {
    pub source: String,
    pub n_range: Option<(usize, usize)>,
    pub ell: Option<usize>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatementTotals {
    pub evaluated: usize,
    pub hypotheses_met: usize,
    pub not_met: usize,
    pub timeouts: usize,
    pub confirmed: usize,
    pub exceptions: usize,
    pub violations: usize,
    pub conjecture_counterexamples: usize,
}

impl StatementTotals {
    fn add(&mut self, v: &TheoremVerdict) {
        self.evaluated += 1;
        match v.applicability {
            Applicability::HypothesesMet => self.hypotheses_met += 1,
            Applicability::HypothesesNotMet { .. } => self.not_met += 1,
            Applicability::TimedOut => self.timeouts += 1,
        }
        match v.outcome {
            Some(Outcome::Confirmed) => self.confirmed += 1,
            Some(Outcome::ConfirmedByException { .. }) => self.exceptions += 1,
            Some(Outcome::Violation(_)) => self.violations += 1,
            Some(Outcome::ConjectureCounterexample(_)) => self.conjecture_counterexamples += 1,
            None => {}
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphVerdicts {
    pub index: usize,
    pub graph6: String,
    pub verdicts: Vec<TheoremVerdict>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub echo: RunEcho,
    pub graphs: usize,
    pub workers: usize,
    pub statements: Vec<StatementId>,
    pub totals: BTreeMap<StatementId, StatementTotals>,
    /// Ordered by input index; empty unless `keep_verdicts` was set.
    pub verdicts: Vec<GraphVerdicts>,
}

impl RunReport {
    pub fn violations(&self) -> usize {
        self.totals.values().map(|t| t.violations).sum()
    }

    pub fn conjecture_counterexamples(&self) -> usize {
        self.totals.values().map(|t| t.conjecture_counterexamples).sum()
    }

    pub fn timeouts(&self) -> usize {
        self.totals.values().map(|t| t.timeouts).sum()
    }
}

pub struct Sinks<'a> {
    pub violations: &'a mut dyn Write,
    pub conjectures: &'a mut dyn Write,
}

/// Checks every statement of `config` on every input graph.
///
/// An input error stops the run and is returned with the index of the
/// offending graph. Bundles are written one JSON line each, in input order.
pub fn run_battery<I>(input: I, config: &BatteryConfig, exec: &Executor, sinks: &mut Sinks<'_>) -> Result<RunReport>
where
    I: IntoIterator<Item = Result<Graph>>,
{
    let mut report = RunReport {
        echo: config.echo.clone(),
        graphs: 0,
        workers: exec.workers(),
        statements: config.statements.clone(),
        totals: config
            .statements
            .iter()
            .map(|&s| (s, StatementTotals::default()))
            .collect(),
        verdicts: Vec::new(),
    };
    let batch_size = config.batch.max(1);
    let mut input = input.into_iter().enumerate();
    loop {
        let mut batch = Vec::with_capacity(batch_size);
        let mut pending_error = None;
        for (index, item) in input.by_ref().take(batch_size) {
            match item {
                Ok(g) => batch.push((index, g)),
                Err(e) => {
                    pending_error = Some(Error::Input {
                        index,
                        reason: Box::new(e),
                    });
                    break;
                }
            }
        }
        if batch.is_empty() && pending_error.is_none() {
            break;
        }
        let results = exec.map(&batch, |_, (_, g)| {
            verify::verify_statements(g, &config.statements, config.budget)
        });
        for ((index, g), verdicts) in batch.iter().zip(results) {
            let verdicts = verdicts?;
            report.graphs += 1;
            for v in &verdicts {
                report.totals.entry(v.statement).or_default().add(v);
                if let Some(b) = v.bundle() {
                    let sink: &mut dyn Write = match b.kind {
                        BundleKind::Violation => &mut *sinks.violations,
                        BundleKind::ConjectureCounterexample => &mut *sinks.conjectures,
                    };
                    writeln!(sink, "{}", b.to_json_line()).map_err(|e| Error::Io {
                        index: *index,
                        message: e.to_string(),
                    })?;
                }
            }
            if config.keep_verdicts {
                report.verdicts.push(GraphVerdicts {
                    index: *index,
                    graph6: graph6::encode(g),
                    verdicts,
                });
            }
        }
        for sink in [&mut *sinks.violations, &mut *sinks.conjectures] {
            sink.flush().map_err(|e| Error::Io {
                index: report.graphs,
                message: e.to_string(),
            })?;
        }
        if let Some(e) = pending_error {
            return Err(e);
        }
    }
    Ok(report)
}

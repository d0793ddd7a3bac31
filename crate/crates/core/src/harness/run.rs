use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::machine::{Label, Machine, Progress, StepOutcome};
use crate::tokens::SpaceFootprint;

pub const DEFAULT_FUEL: u64 = 10_000_000;

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    /// Maximum number of transitions.
    pub fuel: u64,
    /// Check the machine's state invariants after every transition.
    pub check: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { fuel: DEFAULT_FUEL, check: cfg!(debug_assertions) }
    }
}

impl RunOptions {
    pub fn with_fuel(fuel: u64) -> Self {
        RunOptions { fuel, ..Default::default() }
    }

    pub fn checked(fuel: u64) -> Self {
        RunOptions { fuel, check: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Outcome {
    Final,
    FuelExhausted,
    Stuck { step: u64, reason: String },
    InvariantViolation { step: u64, reason: String },
}

/// The state with the most markers, first occurrence.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MarkerPeak {
    pub step: u64,
    pub footprint: SpaceFootprint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RunReport {
    pub machine: String,
    pub term: String,
    pub term_size: usize,
    pub outcome: Outcome,
    pub length: u64,
    pub per_label_counts: BTreeMap<String, u64>,
    pub var_count: u64,
    pub var_cost_sum: u64,
    /// `|π|_¬var + |π|_var·|t|`.
    pub ram_cost_bound: u64,
    pub beta_count: Option<u64>,
    pub up_length: Option<u64>,
    /// Maxima over all states, taken separately for each component.
    pub peak_footprint: SpaceFootprint,
    pub marker_peak: MarkerPeak,
}

impl RunReport {
    pub fn count(&self, label: Label) -> u64 {
        self.per_label_counts.get(label.name()).copied().unwrap_or(0)
    }

    pub fn is_final(&self) -> bool {
        self.outcome == Outcome::Final
    }
}

/// A state reached by a run: step 0 is the initial state.
pub struct Visit<'a, S> {
    pub step: u64,
    pub label: Option<Label>,
    pub cost: u64,
    pub state: &'a S,
}

pub fn run<M: Machine>(m: &M, opts: &RunOptions) -> RunReport {
    run_with(m, opts, |_| {})
}

/// Runs from the initial state, calling `visit` on every state.
pub fn run_with<M: Machine>(m: &M, opts: &RunOptions, mut visit: impl FnMut(Visit<'_, M::State>)) -> RunReport {
    let mut counts: BTreeMap<Label, u64> = BTreeMap::new();
    let mut progress = Progress::default();
    let mut var_cost_sum = 0;
    let mut state = m.initial();
    let mut peak = m.footprint(&state, false);
    let mut marker_peak = (0, state.clone());
    visit(Visit { step: 0, label: None, cost: 0, state: &state });
    let outcome = loop {
        if opts.check {
            if let Err(reason) = m.check(&state, &progress) {
                break Outcome::InvariantViolation { step: progress.steps, reason };
            }
        }
        match m.step(&state) {
            StepOutcome::Final => break Outcome::Final,
            StepOutcome::Stuck(reason) => break Outcome::Stuck { step: progress.steps, reason },
            StepOutcome::Next { .. } if progress.steps == opts.fuel => break Outcome::FuelExhausted,
            StepOutcome::Next { label, cost, state: next } => {
                progress.steps += 1;
                if label.is_var() {
                    progress.var_steps += 1;
                    var_cost_sum += cost;
                }
                *counts.entry(label).or_default() += 1;
                state = next;
                let f = m.footprint(&state, false);
                if f.marker_count > peak.marker_count {
                    marker_peak = (progress.steps, state.clone());
                }
                peak.lp_count = peak.lp_count.max(f.lp_count);
                peak.marker_count = peak.marker_count.max(f.marker_count);
                visit(Visit { step: progress.steps, label: Some(label), cost, state: &state });
            }
        }
    };
    let code = m.code();
    let count = |l: Label| counts.get(&l).copied().unwrap_or(0);
    let vars = progress.var_steps;
    let length = progress.steps;
    let name = m.name();
    let peak_state = m.footprint(&marker_peak.1, true);
    peak.deep_cells = peak_state.deep_cells;
    RunReport {
        machine: name.to_string(),
        term: code.to_string(),
        term_size: code.size(),
        outcome,
        length,
        per_label_counts: counts.iter().map(|(l, n)| (l.name().to_string(), *n)).collect(),
        var_count: vars,
        var_cost_sum,
        ram_cost_bound: length - vars + vars * code.size() as u64,
        beta_count: matches!(name, "kam" | "ham-k").then(|| count(Label::Abs)),
        up_length: matches!(name, "jam" | "ham-j")
            .then(|| counts.iter().filter(|(l, _)| l.is_up()).map(|(_, n)| n).sum()),
        peak_footprint: peak,
        marker_peak: MarkerPeak { step: marker_peak.0, footprint: peak_state },
    }
}

use serde::{Deserialize, Serialize};

use super::run::{Outcome, RunOptions, RunReport};
use super::select::{run_kind, MachineKind};
use crate::multitypes::infer_star_derivation;
use crate::syntax::Code;

/// One machine's figures on one term; the flat shape doubles as a CSV record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MachineSummary {
    pub term: String,
    pub machine: String,
    /// `final`, `fuel` or `error`.
    pub outcome: String,
    pub length: u64,
    pub var_count: u64,
    pub ram_cost_bound: u64,
    pub beta_count: Option<u64>,
    pub up_length: Option<u64>,
    pub peak_lp: usize,
    pub peak_markers: usize,
}

impl MachineSummary {
    fn new(r: &RunReport) -> Self {
        MachineSummary {
            term: r.term.clone(),
            machine: r.machine.clone(),
            outcome: match r.outcome {
                Outcome::Final => "final",
                Outcome::FuelExhausted => "fuel",
                _ => "error",
            }
            .into(),
            length: r.length,
            var_count: r.var_count,
            ram_cost_bound: r.ram_cost_bound,
            beta_count: r.beta_count,
            up_length: r.up_length,
            peak_lp: r.peak_footprint.lp_count,
            peak_markers: r.peak_footprint.marker_count,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ComparisonRow {
    pub term: String,
    pub size: usize,
    pub machines: Vec<MachineSummary>,
    /// Predictions of the KAM and λIAM lengths, absent without a derivation.
    pub weight_kam: Option<u64>,
    pub weight_iam: Option<u64>,
}

impl ComparisonRow {
    pub fn get(&self, machine: &str) -> Option<&MachineSummary> {
        self.machines.iter().find(|m| m.machine == machine)
    }
}

pub const DEFAULT_MACHINES: [MachineKind; 4] =
    [MachineKind::Iam, MachineKind::Jam, MachineKind::Pam, MachineKind::Kam];

/// Runs each machine on `code`; a machine out of fuel is recorded, not fatal.
pub fn compare(code: &Code, machines: &[MachineKind], fuel: u64) -> ComparisonRow {
    let opts = RunOptions { fuel, check: false };
    let summaries = machines
        .iter()
        .map(|&k| match run_kind(k, code, &opts) {
            Ok(r) => MachineSummary::new(&r),
            Err(_) => MachineSummary {
                term: code.to_string(),
                machine: k.name().into(),
                outcome: "fuel".into(),
                length: 0,
                var_count: 0,
                ram_cost_bound: 0,
                beta_count: None,
                up_length: None,
                peak_lp: 0,
                peak_markers: 0,
            },
        })
        .collect();
    let d = infer_star_derivation(code, fuel).ok();
    ComparisonRow {
        term: code.to_string(),
        size: code.size(),
        machines: summaries,
        weight_kam: d.as_ref().map(|d| d.weight_kam()),
        weight_iam: d.as_ref().map(|d| d.weight_iam()),
    }
}

pub fn to_csv(rows: &[MachineSummary]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("summaries serialize");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
}

pub fn from_csv(text: &str) -> Result<Vec<MachineSummary>, csv::Error> {
    csv::Reader::from_reader(text.as_bytes()).deserialize().collect()
}

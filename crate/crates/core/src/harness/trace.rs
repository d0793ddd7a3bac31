use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::run::{run_with, RunOptions, RunReport};
use crate::machine::Machine;
use crate::tokens::SpaceFootprint;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Column {
    pub name: String,
    pub text: String,
}

/// One reached state. Step 0 is the initial state, labelled `init`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TraceEvent {
    pub step: u64,
    pub machine: String,
    pub label: String,
    pub dir: String,
    pub subterm_path: String,
    pub subterm_pretty: String,
    pub context_pretty: String,
    pub backtracking: bool,
    pub columns: Vec<Column>,
    pub token_snapshot: Value,
    pub cost_this_step: u64,
    pub footprint: SpaceFootprint,
}

pub const INIT_LABEL: &str = "init";

pub fn trace<M: Machine>(m: &M, opts: &RunOptions) -> (RunReport, Vec<TraceEvent>) {
    let code = m.code();
    let mut events = Vec::new();
    let report = run_with(m, opts, |v| {
        let snap = m.snapshot(v.state);
        events.push(TraceEvent {
            step: v.step,
            machine: m.name().to_string(),
            label: v.label.map_or(INIT_LABEL, |l| l.name()).to_string(),
            dir: snap.dir,
            subterm_path: code.path(snap.focus).to_string(),
            subterm_pretty: code.pretty(snap.focus),
            context_pretty: snap.context,
            backtracking: snap.backtracking,
            columns: snap
                .columns
                .into_iter()
                .map(|(name, text)| Column { name: name.to_string(), text })
                .collect(),
            token_snapshot: snap.token,
            cost_this_step: v.cost,
            footprint: m.footprint(v.state, true),
        });
    });
    (report, events)
}

pub fn to_jsonl(events: &[TraceEvent]) -> String {
    let mut out = String::new();
    for e in events {
        out.push_str(&serde_json::to_string(e).expect("trace events serialize"));
        out.push('\n');
    }
    out
}

pub fn from_jsonl(text: &str) -> Result<Vec<TraceEvent>, serde_json::Error> {
    text.lines().filter(|l| !l.trim().is_empty()).map(serde_json::from_str).collect()
}

/// Column-aligned table, one row per state.
pub fn to_table(events: &[TraceEvent]) -> String {
    let Some(first) = events.first() else {
        return String::new();
    };
    let mut header: Vec<String> = ["step", "label", "", "subterm", "context"].map(String::from).to_vec();
    header.extend(first.columns.iter().map(|c| c.name.clone()));
    header.push("dir".into());
    let rows: Vec<Vec<String>> = events
        .iter()
        .map(|e| {
            let mut row = vec![
                e.step.to_string(),
                e.label.clone(),
                if e.backtracking { "BT".into() } else { String::new() },
                e.subterm_pretty.clone(),
                e.context_pretty.clone(),
            ];
            row.extend(e.columns.iter().map(|c| c.text.clone()));
            row.push(e.dir.clone());
            row
        })
        .collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|i| {
            std::iter::once(&header)
                .chain(&rows)
                .map(|r| r[i].chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |r: &[String]| {
        let cells: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        cells.join(" | ").trim_end().to_string()
    };
    let mut out = line(&header);
    out.push('\n');
    out.push_str(&widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("-+-"));
    out.push('\n');
    for r in &rows {
        out.push_str(&line(r));
        out.push('\n');
    }
    out
}

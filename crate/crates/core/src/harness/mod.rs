//! Running machines: reports, traces, benchmark families, corpora, comparisons.

mod compare;
mod corpus;
mod families;
mod run;
mod select;
mod trace;

pub use run::{run, run_with, MarkerPeak, Outcome, RunOptions, RunReport, Visit, DEFAULT_FUEL};
pub use trace::{from_jsonl, to_jsonl, to_table, trace, Column, TraceEvent, INIT_LABEL};
pub use corpus::{gen_corpus, PROBE_FUEL};
pub use families::{family_rkh, family_tn, FamilyError};
pub use compare::{compare, from_csv, to_csv, ComparisonRow, MachineSummary, DEFAULT_MACHINES};
pub use select::{run_kind, trace_kind, MachineKind};

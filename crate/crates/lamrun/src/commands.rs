use std::time::Instant;

use lamrun_core::equivalence::{checker, summarize, CheckReport, Status};
use lamrun_core::harness::{
    compare, family_rkh, family_tn, gen_corpus, run_kind, to_csv, to_jsonl, to_table, trace_kind,
    MachineKind, Outcome, RunOptions, RunReport,
};
use lamrun_core::multitypes::{infer_star_derivation, TypeError};
use lamrun_core::syntax::{Code, ReduceError};
use serde::Serialize;

use crate::input::{load_code, load_term, InputError};
use crate::table::{self, opt};
use crate::{BenchFormat, Command, Family, Format, TraceFormat};
use crate::{CHECK_FAILURE, FUEL_EXHAUSTED, PASS};

type Exit = Result<u8, InputError>;

pub fn execute(cmd: Command) -> Exit {
    match cmd {
        Command::Parse { input } => {
            let term = load_term(&input.term, input.defs.as_deref())?;
            println!("{term}");
            println!("size: {}", term.size());
            println!("closed: {}", term.is_closed());
            Ok(PASS)
        }
        Command::Run { machine, input, fuel, trace, out } => {
            let code = load_code(&input.term, input.defs.as_deref())?;
            run_cmd(machine, &code, fuel.fuel, trace, out.as_deref())
        }
        Command::Compare { input, machines, fuel, format } => {
            let code = load_code(&input.term, input.defs.as_deref())?;
            compare_cmd(&code, &machines, fuel.fuel, format)
        }
        Command::Types { input, print_derivation, weights, fuel } => {
            let code = load_code(&input.term, input.defs.as_deref())?;
            types_cmd(&code, print_derivation, weights, fuel.fuel)
        }
        Command::Check { name, term, corpus, defs, fuel } => {
            let check = checker(&name).ok_or_else(|| InputError(format!("unknown check `{name}`")))?;
            match (term, corpus) {
                (Some(t), _) => {
                    let code = load_code(&t, defs.as_deref())?;
                    let report = check(&code, fuel.fuel);
                    println!("{}", serde_json::to_string_pretty(&report)?);
                    Ok(verdict(std::slice::from_ref(&report)))
                }
                (None, Some((seed, count, max))) => {
                    let mut reports = Vec::new();
                    for t in gen_corpus(seed, count, max) {
                        reports.push(check(&Code::new(t)?, fuel.fuel));
                    }
                    println!("{}", serde_json::to_string_pretty(&summarize(&name, &reports))?);
                    Ok(verdict(&reports))
                }
                (None, None) => Err(InputError("a term or --corpus is required".into())),
            }
        }
        Command::Bench { family, range, format, fuel } => bench_cmd(family, range, format, fuel.fuel),
    }
}

fn verdict(reports: &[CheckReport]) -> u8 {
    if reports.iter().any(|r| r.status == Status::Failed) {
        CHECK_FAILURE
    } else if reports.iter().any(|r| r.status == Status::Inconclusive) {
        FUEL_EXHAUSTED
    } else {
        PASS
    }
}

fn outcome_status(o: &Outcome) -> u8 {
    match o {
        Outcome::Final => PASS,
        Outcome::FuelExhausted => FUEL_EXHAUSTED,
        Outcome::Stuck { .. } | Outcome::InvariantViolation { .. } => CHECK_FAILURE,
    }
}

/// Type inference failures: divergence is a fuel problem, anything else a bug.
fn type_error_status(e: &TypeError) -> Exit {
    eprintln!("lamrun: {e}");
    match e {
        TypeError::Reduce(ReduceError::Diverged(_)) => Ok(FUEL_EXHAUSTED),
        TypeError::Reduce(ReduceError::NotClosed) => Err(InputError(e.to_string())),
        _ => Ok(CHECK_FAILURE),
    }
}

fn summary_lines(r: &RunReport) -> String {
    let counts: Vec<String> = r.per_label_counts.iter().map(|(l, n)| format!("{l}={n}")).collect();
    format!(
        "machine: {}\noutcome: {}\nlength: {}\nlabels: {}\nram cost bound: {}\npeak: {} lp, {} markers\n",
        r.machine,
        serde_json::to_value(&r.outcome).map(|v| v["kind"].as_str().unwrap_or("").to_string()).unwrap_or_default(),
        r.length,
        counts.join(" "),
        r.ram_cost_bound,
        r.peak_footprint.lp_count,
        r.peak_footprint.marker_count,
    )
}

fn run_cmd(
    kind: MachineKind,
    code: &Code,
    fuel: u64,
    format: TraceFormat,
    out: Option<&std::path::Path>,
) -> Exit {
    let opts = RunOptions::with_fuel(fuel);
    let result = match format {
        TraceFormat::None => run_kind(kind, code, &opts).map(|r| (r, None)),
        TraceFormat::Table => trace_kind(kind, code, &opts).map(|(r, ev)| (r, Some(to_table(&ev)))),
        TraceFormat::Jsonl => trace_kind(kind, code, &opts).map(|(r, ev)| (r, Some(to_jsonl(&ev)))),
    };
    let (report, text) = match result {
        Ok(x) => x,
        Err(e) => return type_error_status(&e),
    };
    match (text, out) {
        (Some(text), Some(path)) => {
            std::fs::write(path, text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
        (Some(text), None) => {
            print!("{text}");
            match format {
                TraceFormat::Jsonl => eprint!("{}", summary_lines(&report)),
                _ => print!("\n{}", summary_lines(&report)),
            }
        }
        (None, _) => println!("{}", serde_json::to_string_pretty(&report)?),
    }
    Ok(outcome_status(&report.outcome))
}

fn compare_cmd(code: &Code, machines: &[MachineKind], fuel: u64, format: Format) -> Exit {
    let row = compare(code, machines, fuel);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&row)?),
        Format::Csv => print!("{}", to_csv(&row.machines)),
        Format::Table => {
            let rows: Vec<Vec<String>> = row
                .machines
                .iter()
                .map(|m| {
                    vec![
                        m.machine.clone(),
                        m.outcome.clone(),
                        m.length.to_string(),
                        m.var_count.to_string(),
                        m.ram_cost_bound.to_string(),
                        opt(m.beta_count),
                        opt(m.up_length),
                        m.peak_lp.to_string(),
                        m.peak_markers.to_string(),
                    ]
                })
                .collect();
            println!("term: {} (size {})", row.term, row.size);
            print!(
                "{}",
                table::render(
                    &["machine", "outcome", "length", "var", "ram cost", "β", "↑", "peak lp", "peak 𝗉"],
                    &rows
                )
            );
            println!("W_KAM: {}  W_IAM: {}", opt(row.weight_kam), opt(row.weight_iam));
        }
    }
    Ok(match () {
        _ if row.machines.iter().any(|m| m.outcome == "error") => CHECK_FAILURE,
        _ if row.machines.iter().any(|m| m.outcome == "fuel") => FUEL_EXHAUSTED,
        _ => PASS,
    })
}

fn types_cmd(code: &Code, print_derivation: bool, weights: bool, fuel: u64) -> Exit {
    let d = match infer_star_derivation(code, fuel) {
        Ok(d) => d,
        Err(e) => return type_error_status(&e),
    };
    if let Err(e) = d.check(code) {
        eprintln!("lamrun: ill-formed derivation: {e}");
        return Ok(CHECK_FAILURE);
    }
    println!("⊢ {code} : ★");
    println!("rules: {}  stars: {}", d.len(), d.star_count());
    if print_derivation {
        print!("{}", d.render(code));
    }
    if !weights {
        return Ok(PASS);
    }
    let opts = RunOptions { fuel, check: false };
    let mut status = PASS;
    for (name, kind, w) in [("W_KAM", MachineKind::Kam, d.weight_kam()), ("W_IAM", MachineKind::Iam, d.weight_iam())] {
        let r = run_kind(kind, code, &opts).expect("plain machines need no derivation");
        let verdict = match r.outcome {
            Outcome::Final if r.length == w => "=",
            Outcome::Final => {
                status = CHECK_FAILURE;
                "≠"
            }
            _ => {
                status = status.max(FUEL_EXHAUSTED);
                "?"
            }
        };
        println!("{name}: {w} {verdict} |{kind}| {}", r.length);
    }
    Ok(status)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct BenchRow {
    family: &'static str,
    n: Option<usize>,
    k: Option<usize>,
    h: Option<usize>,
    size: usize,
    machine: String,
    outcome: String,
    length: u64,
    var_count: u64,
    ram_cost_bound: u64,
    peak_lp: usize,
    peak_markers: usize,
    /// Wall-clock time; informative only.
    micros: u128,
}

fn bench_cmd(family: Family, (a, b): (usize, usize), format: BenchFormat, fuel: u64) -> Exit {
    let instances: Vec<(Option<usize>, Option<usize>, Option<usize>)> = match family {
        Family::Tn => (a..=b).map(|n| (Some(n), None, None)).collect(),
        Family::Rkh => (a..=b).flat_map(|k| (a..=b).map(move |h| (None, Some(k), Some(h)))).collect(),
    };
    let opts = RunOptions { fuel, check: false };
    let mut rows = Vec::new();
    for (n, k, h) in instances {
        let term = match (n, k, h) {
            (Some(n), _, _) => family_tn(n)?,
            (_, Some(k), Some(h)) => family_rkh(k, h)?,
            _ => unreachable!(),
        };
        let code = Code::new(term)?;
        for kind in lamrun_core::harness::DEFAULT_MACHINES {
            let start = Instant::now();
            let r = run_kind(kind, &code, &opts).expect("plain machines need no derivation");
            rows.push(BenchRow {
                family: match family {
                    Family::Tn => "tn",
                    Family::Rkh => "rkh",
                },
                n,
                k,
                h,
                size: code.size(),
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
                peak_lp: r.peak_footprint.lp_count,
                peak_markers: r.peak_footprint.marker_count,
                micros: start.elapsed().as_micros(),
            });
        }
    }
    match format {
        BenchFormat::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            for r in &rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        BenchFormat::Table => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        opt(r.n),
                        opt(r.k),
                        opt(r.h),
                        r.size.to_string(),
                        r.machine.clone(),
                        r.outcome.clone(),
                        r.length.to_string(),
                        r.var_count.to_string(),
                        r.peak_lp.to_string(),
                        r.peak_markers.to_string(),
                        r.micros.to_string(),
                    ]
                })
                .collect();
            print!(
                "{}",
                table::render(
                    &["n", "k", "h", "size", "machine", "outcome", "length", "var", "peak lp", "peak 𝗉", "µs"],
                    &cells
                )
            );
        }
    }
    Ok(match () {
        _ if rows.iter().any(|r| r.outcome == "error") => CHECK_FAILURE,
        _ if rows.iter().any(|r| r.outcome == "fuel") => FUEL_EXHAUSTED,
        _ => PASS,
    })
}

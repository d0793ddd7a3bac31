//! Reference data shared by the test targets: frozen traces, in rows of
//! `label | BT | subterm | context | machine columns | dir`, and SIAM visit
//! orders as (typed subterm path, type path) in annotation order.
#![allow(dead_code)]

use lamrun_core::harness::{trace, RunOptions, TraceEvent};
use lamrun_core::machine::Machine;
use lamrun_core::syntax::{parse_closed, Code};

pub const THREE: &str = "(λy.λx.x y) (λw.w) (λz.z)";
pub const DELTA: &str = "(λx.x x) (λy.y)";

pub fn code(src: &str) -> Code {
    Code::new(parse_closed(src).unwrap()).unwrap()
}

pub fn row(e: &TraceEvent) -> String {
    let mut parts = vec![
        e.label.clone(),
        if e.backtracking { "BT".into() } else { String::new() },
        e.subterm_pretty.clone(),
        e.context_pretty.clone(),
    ];
    parts.extend(e.columns.iter().map(|c| c.text.clone()));
    parts.push(e.dir.clone());
    parts.join(" | ")
}

/// Trace rows of a complete run, or `None` if the run does not finish.
pub fn rows<M: Machine>(m: &M) -> Option<Vec<String>> {
    let (report, events) = trace(m, &RunOptions::checked(10_000));
    report.is_final().then(|| events.iter().map(row).collect())
}

pub const SIAM_THREE: &[(&str, &str)] = &[
        ("", "ε"),
        ("Fun", "T"),
        ("Fun/Fun", "T·T"),
        ("Fun/Fun/Body", "T"),
        ("Fun/Fun/Body/Body", "ε"),
        ("Fun/Fun/Body/Body/Fun", "T"),
        ("Fun/Fun/Body", "E1·T"),
        ("Fun/Fun", "T·E1·T"),
        ("Fun", "E1·T"),
        ("Arg", "T"),
        ("Arg/Body", "ε"),
        ("Arg", "E1"),
        ("Fun", "E1·E1"),
        ("Fun/Fun", "T·E1·E1"),
        ("Fun/Fun/Body", "E1·E1"),
        ("Fun/Fun/Body/Body/Fun", "E1"),
        ("Fun/Fun/Body/Body/Arg", "ε"),
        ("Fun/Fun", "E1"),
        ("Fun/Arg", "ε"),
    ];

pub const SIAM_DELTA: &[(&str, &str)] = &[
        ("", "ε"),
        ("Fun", "T"),
        ("Fun/Body", "ε"),
        ("Fun/Body/Fun", "T"),
        ("Fun", "E1·T"),
        ("Arg", "T"),
        ("Arg/Body", "ε"),
        ("Arg", "E1"),
        ("Fun", "E1·E1"),
        ("Fun/Body/Fun", "E1"),
        ("Fun/Body/Arg", "ε"),
        ("Fun", "E2"),
        ("Arg", "ε"),
    ];

pub const IAM_THREE: &[&str] = &[
        "init |  | (λy.λx.x y) (λw.w) (λz.z) | ⟨·⟩ | ε | ε | ↓",
        "p1 |  | (λy.λx.x y) (λw.w) | ⟨·⟩ (λz.z) | p | ε | ↓",
        "p1 |  | λy.λx.x y | ⟨·⟩ (λw.w) (λz.z) | p·p | ε | ↓",
        "p2 |  | λx.x y | (λy.⟨·⟩) (λw.w) (λz.z) | p | ε | ↓",
        "p2 |  | x y | (λy.λx.⟨·⟩) (λw.w) (λz.z) | ε | ε | ↓",
        "p1 |  | x | (λy.λx.⟨·⟩ y) (λw.w) (λz.z) | p | ε | ↓",
        "var |  | λx.x y | (λy.⟨·⟩) (λw.w) (λz.z) | (x, λx.⟨·⟩ y, ε)·p | ε | ↑",
        "p4 |  | λy.λx.x y | ⟨·⟩ (λw.w) (λz.z) | p·(x, λx.⟨·⟩ y, ε)·p | ε | ↑",
        "p3 |  | (λy.λx.x y) (λw.w) | ⟨·⟩ (λz.z) | (x, λx.⟨·⟩ y, ε)·p | ε | ↑",
        "arg |  | λz.z | (λy.λx.x y) (λw.w) ⟨·⟩ | p | (x, λx.⟨·⟩ y, ε) | ↓",
        "p2 |  | z | (λy.λx.x y) (λw.w) (λz.⟨·⟩) | ε | (x, λx.⟨·⟩ y, ε) | ↓",
        "var |  | λz.z | (λy.λx.x y) (λw.w) ⟨·⟩ | (z, λz.⟨·⟩, ε) | (x, λx.⟨·⟩ y, ε) | ↑",
        "bt1 | BT | (λy.λx.x y) (λw.w) | ⟨·⟩ (λz.z) | (x, λx.⟨·⟩ y, ε)·(z, λz.⟨·⟩, ε) | ε | ↓",
        "p1 | BT | λy.λx.x y | ⟨·⟩ (λw.w) (λz.z) | p·(x, λx.⟨·⟩ y, ε)·(z, λz.⟨·⟩, ε) | ε | ↓",
        "p2 | BT | λx.x y | (λy.⟨·⟩) (λw.w) (λz.z) | (x, λx.⟨·⟩ y, ε)·(z, λz.⟨·⟩, ε) | ε | ↓",
        "bt2 |  | x | (λy.λx.⟨·⟩ y) (λw.w) (λz.z) | (z, λz.⟨·⟩, ε) | ε | ↑",
        "arg |  | y | (λy.λx.x ⟨·⟩) (λw.w) (λz.z) | ε | (z, λz.⟨·⟩, ε) | ↓",
        "var |  | λy.λx.x y | ⟨·⟩ (λw.w) (λz.z) | (y, λy.λx.x ⟨·⟩, (z, λz.⟨·⟩, ε)) | ε | ↑",
        "arg |  | λw.w | (λy.λx.x y) ⟨·⟩ (λz.z) | ε | (y, λy.λx.x ⟨·⟩, (z, λz.⟨·⟩, ε)) | ↓",
    ];

pub const JAM_THREE: &[&str] = &[
        "init |  | (λy.λx.x y) (λw.w) (λz.z) | ⟨·⟩ | ε | ε | ↓",
        "p1 |  | (λy.λx.x y) (λw.w) | ⟨·⟩ (λz.z) | p | ε | ↓",
        "p1 |  | λy.λx.x y | ⟨·⟩ (λw.w) (λz.z) | p·p | ε | ↓",
        "p2 |  | λx.x y | (λy.⟨·⟩) (λw.w) (λz.z) | p | ε | ↓",
        "p2 |  | x y | (λy.λx.⟨·⟩) (λw.w) (λz.z) | ε | ε | ↓",
        "p1 |  | x | (λy.λx.⟨·⟩ y) (λw.w) (λz.z) | p | ε | ↓",
        "var |  | λx.x y | (λy.⟨·⟩) (λw.w) (λz.z) | (x, (λy.λx.⟨·⟩ y) (λw.w) (λz.z), ε)·p | ε | ↑",
        "p4 |  | λy.λx.x y | ⟨·⟩ (λw.w) (λz.z) | p·(x, (λy.λx.⟨·⟩ y) (λw.w) (λz.z), ε)·p | ε | ↑",
        "p3 |  | (λy.λx.x y) (λw.w) | ⟨·⟩ (λz.z) | (x, (λy.λx.⟨·⟩ y) (λw.w) (λz.z), ε)·p | ε | ↑",
        "arg |  | λz.z | (λy.λx.x y) (λw.w) ⟨·⟩ | p | (x, (λy.λx.⟨·⟩ y) (λw.w) (λz.z), ε) | ↓",
        "p2 |  | z | (λy.λx.x y) (λw.w) (λz.⟨·⟩) | ε | (x, (λy.λx.⟨·⟩ y) (λw.w) (λz.z), ε) | ↓",
        "var |  | λz.z | (λy.λx.x y) (λw.w) ⟨·⟩ | (z, (λy.λx.x y) (λw.w) (λz.⟨·⟩), (x, (λy.λx.⟨·⟩ y) (λw.w) (λz.z), ε)) | (x, (λy.λx.⟨·⟩ y) (λw.w) (λz.z), ε) | ↑",
        "jmp |  | x | (λy.λx.⟨·⟩ y) (λw.w) (λz.z) | (z, (λy.λx.x y) (λw.w) (λz.⟨·⟩), (x, (λy.λx.⟨·⟩ y) (λw.w) (λz.z), ε)) | ε | ↑",
        "arg |  | y | (λy.λx.x ⟨·⟩) (λw.w) (λz.z) | ε | (z, (λy.λx.x y) (λw.w) (λz.⟨·⟩), (x, (λy.λx.⟨·⟩ y) (λw.w) (λz.z), ε)) | ↓",
        "var |  | λy.λx.x y | ⟨·⟩ (λw.w) (λz.z) | (y, (λy.λx.x ⟨·⟩) (λw.w) (λz.z), (z, (λy.λx.x y) (λw.w) (λz.⟨·⟩), (x, (λy.λx.⟨·⟩ y) (λw.w) (λz.z), ε))) | ε | ↑",
        "arg |  | λw.w | (λy.λx.x y) ⟨·⟩ (λz.z) | ε | (y, (λy.λx.x ⟨·⟩) (λw.w) (λz.z), (z, (λy.λx.x y) (λw.w) (λz.⟨·⟩), (x, (λy.λx.⟨·⟩ y) (λw.w) (λz.z), ε))) | ↓",
    ];

pub const KAM_THREE: &[&str] = &[
        "init |  | (λy.λx.x y) (λw.w) (λz.z) | ⟨·⟩ | ε | ε | -",
        "app |  | (λy.λx.x y) (λw.w) | ⟨·⟩ (λz.z) | (λz.z, (λy.λx.x y) (λw.w) ⟨·⟩, ε) | ε | -",
        "app |  | λy.λx.x y | ⟨·⟩ (λw.w) (λz.z) | (λw.w, (λy.λx.x y) ⟨·⟩ (λz.z), ε)·(λz.z, (λy.λx.x y) (λw.w) ⟨·⟩, ε) | ε | -",
        "abs |  | λx.x y | (λy.⟨·⟩) (λw.w) (λz.z) | (λz.z, (λy.λx.x y) (λw.w) ⟨·⟩, ε) | [y←(λw.w, (λy.λx.x y) ⟨·⟩ (λz.z), ε)] | -",
        "abs |  | x y | (λy.λx.⟨·⟩) (λw.w) (λz.z) | ε | [x←(λz.z, (λy.λx.x y) (λw.w) ⟨·⟩, ε)]·[y←(λw.w, (λy.λx.x y) ⟨·⟩ (λz.z), ε)] | -",
        "app |  | x | (λy.λx.⟨·⟩ y) (λw.w) (λz.z) | (y, (λy.λx.x ⟨·⟩) (λw.w) (λz.z), [x←(λz.z, (λy.λx.x y) (λw.w) ⟨·⟩, ε)]·[y←(λw.w, (λy.λx.x y) ⟨·⟩ (λz.z), ε)]) | [x←(λz.z, (λy.λx.x y) (λw.w) ⟨·⟩, ε)]·[y←(λw.w, (λy.λx.x y) ⟨·⟩ (λz.z), ε)] | -",
        "var |  | λz.z | (λy.λx.x y) (λw.w) ⟨·⟩ | (y, (λy.λx.x ⟨·⟩) (λw.w) (λz.z), [x←(λz.z, (λy.λx.x y) (λw.w) ⟨·⟩, ε)]·[y←(λw.w, (λy.λx.x y) ⟨·⟩ (λz.z), ε)]) | ε | -",
        "abs |  | z | (λy.λx.x y) (λw.w) (λz.⟨·⟩) | ε | [z←(y, (λy.λx.x ⟨·⟩) (λw.w) (λz.z), [x←(λz.z, (λy.λx.x y) (λw.w) ⟨·⟩, ε)]·[y←(λw.w, (λy.λx.x y) ⟨·⟩ (λz.z), ε)])] | -",
        "var |  | y | (λy.λx.x ⟨·⟩) (λw.w) (λz.z) | ε | [x←(λz.z, (λy.λx.x y) (λw.w) ⟨·⟩, ε)]·[y←(λw.w, (λy.λx.x y) ⟨·⟩ (λz.z), ε)] | -",
        "var |  | λw.w | (λy.λx.x y) ⟨·⟩ (λz.z) | ε | ε | -",
    ];

pub const PAM_THREE: &[&str] = &[
        "init |  | (λy.λx.x y) (λw.w) (λz.z) | ⟨·⟩ | ε | 0 | ε | ↓",
        "p1 |  | (λy.λx.x y) (λw.w) | ⟨·⟩ (λz.z) | ε | 0 | p | ↓",
        "p1 |  | λy.λx.x y | ⟨·⟩ (λw.w) (λz.z) | ε | 0 | p·p | ↓",
        "p2 |  | λx.x y | (λy.⟨·⟩) (λw.w) (λz.z) | ε | 0 | p | ↓",
        "p2 |  | x y | (λy.λx.⟨·⟩) (λw.w) (λz.z) | ε | 0 | ε | ↓",
        "p1 |  | x | (λy.λx.⟨·⟩ y) (λw.w) (λz.z) | ε | 0 | p | ↓",
        "var |  | λx.x y | (λy.⟨·⟩) (λw.w) (λz.z) | ε | 0 | (x, (λy.λx.⟨·⟩ y) (λw.w) (λz.z))·p | ↑",
        "p4 |  | λy.λx.x y | ⟨·⟩ (λw.w) (λz.z) | ε | 0 | p·(x, (λy.λx.⟨·⟩ y) (λw.w) (λz.z))·p | ↑",
        "p3 |  | (λy.λx.x y) (λw.w) | ⟨·⟩ (λz.z) | ε | 0 | (x, (λy.λx.⟨·⟩ y) (λw.w) (λz.z))·p | ↑",
        "arg |  | λz.z | (λy.λx.x y) (λw.w) ⟨·⟩ | ((x, (λy.λx.⟨·⟩ y) (λw.w) (λz.z)), 0) | 1 | p | ↓",
        "p2 |  | z | (λy.λx.x y) (λw.w) (λz.⟨·⟩) | ((x, (λy.λx.⟨·⟩ y) (λw.w) (λz.z)), 0) | 1 | ε | ↓",
        "var |  | λz.z | (λy.λx.x y) (λw.w) ⟨·⟩ | ((x, (λy.λx.⟨·⟩ y) (λw.w) (λz.z)), 0) | 1 | (z, (λy.λx.x y) (λw.w) (λz.⟨·⟩)) | ↑",
        "jmp |  | x | (λy.λx.⟨·⟩ y) (λw.w) (λz.z) | ((x, (λy.λx.⟨·⟩ y) (λw.w) (λz.z)), 0) | 0 | (z, (λy.λx.x y) (λw.w) (λz.⟨·⟩)) | ↑",
        "arg |  | y | (λy.λx.x ⟨·⟩) (λw.w) (λz.z) | ((z, (λy.λx.x y) (λw.w) (λz.⟨·⟩)), 0)·((x, (λy.λx.⟨·⟩ y) (λw.w) (λz.z)), 0) | 2 | ε | ↓",
        "var |  | λy.λx.x y | ⟨·⟩ (λw.w) (λz.z) | ((z, (λy.λx.x y) (λw.w) (λz.⟨·⟩)), 0)·((x, (λy.λx.⟨·⟩ y) (λw.w) (λz.z)), 0) | 0 | (y, (λy.λx.x ⟨·⟩) (λw.w) (λz.z)) | ↑",
        "arg |  | λw.w | (λy.λx.x y) ⟨·⟩ (λz.z) | ((y, (λy.λx.x ⟨·⟩) (λw.w) (λz.z)), 0)·((z, (λy.λx.x y) (λw.w) (λz.⟨·⟩)), 0)·((x, (λy.λx.⟨·⟩ y) (λw.w) (λz.z)), 0) | 3 | ε | ↓",
    ];

pub const IAM_DELTA: &[&str] = &[
        "init |  | (λx.x x) (λy.y) | ⟨·⟩ | ε | ε | ↓",
        "p1 |  | λx.x x | ⟨·⟩ (λy.y) | p | ε | ↓",
        "p2 |  | x x | (λx.⟨·⟩) (λy.y) | ε | ε | ↓",
        "p1 |  | x | (λx.⟨·⟩ x) (λy.y) | p | ε | ↓",
        "var |  | λx.x x | ⟨·⟩ (λy.y) | (x, λx.⟨·⟩ x, ε)·p | ε | ↑",
        "arg |  | λy.y | (λx.x x) ⟨·⟩ | p | (x, λx.⟨·⟩ x, ε) | ↓",
        "p2 |  | y | (λx.x x) (λy.⟨·⟩) | ε | (x, λx.⟨·⟩ x, ε) | ↓",
        "var |  | λy.y | (λx.x x) ⟨·⟩ | (y, λy.⟨·⟩, ε) | (x, λx.⟨·⟩ x, ε) | ↑",
        "bt1 | BT | λx.x x | ⟨·⟩ (λy.y) | (x, λx.⟨·⟩ x, ε)·(y, λy.⟨·⟩, ε) | ε | ↓",
        "bt2 |  | x | (λx.⟨·⟩ x) (λy.y) | (y, λy.⟨·⟩, ε) | ε | ↑",
        "arg |  | x | (λx.x ⟨·⟩) (λy.y) | ε | (y, λy.⟨·⟩, ε) | ↓",
        "var |  | λx.x x | ⟨·⟩ (λy.y) | (x, λx.x ⟨·⟩, (y, λy.⟨·⟩, ε)) | ε | ↑",
        "arg |  | λy.y | (λx.x x) ⟨·⟩ | ε | (x, λx.x ⟨·⟩, (y, λy.⟨·⟩, ε)) | ↓",
    ];

pub const JAM_DELTA: &[&str] = &[
        "init |  | (λx.x x) (λy.y) | ⟨·⟩ | ε | ε | ↓",
        "p1 |  | λx.x x | ⟨·⟩ (λy.y) | p | ε | ↓",
        "p2 |  | x x | (λx.⟨·⟩) (λy.y) | ε | ε | ↓",
        "p1 |  | x | (λx.⟨·⟩ x) (λy.y) | p | ε | ↓",
        "var |  | λx.x x | ⟨·⟩ (λy.y) | (x, (λx.⟨·⟩ x) (λy.y), ε)·p | ε | ↑",
        "arg |  | λy.y | (λx.x x) ⟨·⟩ | p | (x, (λx.⟨·⟩ x) (λy.y), ε) | ↓",
        "p2 |  | y | (λx.x x) (λy.⟨·⟩) | ε | (x, (λx.⟨·⟩ x) (λy.y), ε) | ↓",
        "var |  | λy.y | (λx.x x) ⟨·⟩ | (y, (λx.x x) (λy.⟨·⟩), (x, (λx.⟨·⟩ x) (λy.y), ε)) | (x, (λx.⟨·⟩ x) (λy.y), ε) | ↑",
        "jmp |  | x | (λx.⟨·⟩ x) (λy.y) | (y, (λx.x x) (λy.⟨·⟩), (x, (λx.⟨·⟩ x) (λy.y), ε)) | ε | ↑",
        "arg |  | x | (λx.x ⟨·⟩) (λy.y) | ε | (y, (λx.x x) (λy.⟨·⟩), (x, (λx.⟨·⟩ x) (λy.y), ε)) | ↓",
        "var |  | λx.x x | ⟨·⟩ (λy.y) | (x, (λx.x ⟨·⟩) (λy.y), (y, (λx.x x) (λy.⟨·⟩), (x, (λx.⟨·⟩ x) (λy.y), ε))) | ε | ↑",
        "arg |  | λy.y | (λx.x x) ⟨·⟩ | ε | (x, (λx.x ⟨·⟩) (λy.y), (y, (λx.x x) (λy.⟨·⟩), (x, (λx.⟨·⟩ x) (λy.y), ε))) | ↓",
    ];

pub const KAM_DELTA: &[&str] = &[
        "init |  | (λx.x x) (λy.y) | ⟨·⟩ | ε | ε | -",
        "app |  | λx.x x | ⟨·⟩ (λy.y) | (λy.y, (λx.x x) ⟨·⟩, ε) | ε | -",
        "abs |  | x x | (λx.⟨·⟩) (λy.y) | ε | [x←(λy.y, (λx.x x) ⟨·⟩, ε)] | -",
        "app |  | x | (λx.⟨·⟩ x) (λy.y) | (x, (λx.x ⟨·⟩) (λy.y), [x←(λy.y, (λx.x x) ⟨·⟩, ε)]) | [x←(λy.y, (λx.x x) ⟨·⟩, ε)] | -",
        "var |  | λy.y | (λx.x x) ⟨·⟩ | (x, (λx.x ⟨·⟩) (λy.y), [x←(λy.y, (λx.x x) ⟨·⟩, ε)]) | ε | -",
        "abs |  | y | (λx.x x) (λy.⟨·⟩) | ε | [y←(x, (λx.x ⟨·⟩) (λy.y), [x←(λy.y, (λx.x x) ⟨·⟩, ε)])] | -",
        "var |  | x | (λx.x ⟨·⟩) (λy.y) | ε | [x←(λy.y, (λx.x x) ⟨·⟩, ε)] | -",
        "var |  | λy.y | (λx.x x) ⟨·⟩ | ε | ε | -",
    ];

pub const PAM_DELTA: &[&str] = &[
        "init |  | (λx.x x) (λy.y) | ⟨·⟩ | ε | 0 | ε | ↓",
        "p1 |  | λx.x x | ⟨·⟩ (λy.y) | ε | 0 | p | ↓",
        "p2 |  | x x | (λx.⟨·⟩) (λy.y) | ε | 0 | ε | ↓",
        "p1 |  | x | (λx.⟨·⟩ x) (λy.y) | ε | 0 | p | ↓",
        "var |  | λx.x x | ⟨·⟩ (λy.y) | ε | 0 | (x, (λx.⟨·⟩ x) (λy.y))·p | ↑",
        "arg |  | λy.y | (λx.x x) ⟨·⟩ | ((x, (λx.⟨·⟩ x) (λy.y)), 0) | 1 | p | ↓",
        "p2 |  | y | (λx.x x) (λy.⟨·⟩) | ((x, (λx.⟨·⟩ x) (λy.y)), 0) | 1 | ε | ↓",
        "var |  | λy.y | (λx.x x) ⟨·⟩ | ((x, (λx.⟨·⟩ x) (λy.y)), 0) | 1 | (y, (λx.x x) (λy.⟨·⟩)) | ↑",
        "jmp |  | x | (λx.⟨·⟩ x) (λy.y) | ((x, (λx.⟨·⟩ x) (λy.y)), 0) | 0 | (y, (λx.x x) (λy.⟨·⟩)) | ↑",
        "arg |  | x | (λx.x ⟨·⟩) (λy.y) | ((y, (λx.x x) (λy.⟨·⟩)), 0)·((x, (λx.⟨·⟩ x) (λy.y)), 0) | 2 | ε | ↓",
        "var |  | λx.x x | ⟨·⟩ (λy.y) | ((y, (λx.x x) (λy.⟨·⟩)), 0)·((x, (λx.⟨·⟩ x) (λy.y)), 0) | 0 | (x, (λx.x ⟨·⟩) (λy.y)) | ↑",
        "arg |  | λy.y | (λx.x x) ⟨·⟩ | ((x, (λx.x ⟨·⟩) (λy.y)), 0)·((y, (λx.x x) (λy.⟨·⟩)), 0)·((x, (λx.⟨·⟩ x) (λy.y)), 0) | 3 | ε | ↓",
    ];

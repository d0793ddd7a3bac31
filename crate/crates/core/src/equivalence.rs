//! Executable relationships between machine runs: simulations, bisimulations,
//! length identities, weight predictions, and run invariants.
//!
//! Every checker is a pure function of the program and the fuel. Relations
//! between shared token structures are decided by memoizing on pairs of cell
//! addresses; memo tables hold clones of the cells they mention so that
//! addresses stay unique for the lifetime of a check.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use crate::ham::{ClosedPosition, Ham, HamItem, HamState, LoggedClosure, Mode};
use crate::harness::{run_with, Outcome, RunOptions, RunReport};
use crate::kam::{Closure, Kam, KamState};
use crate::liam::{Iam, IamState};
use crate::ljam::{Jam, JamState};
use crate::lpam::{History, Pam, PamItem, PamState};
use crate::machine::{Dir, Label, Machine, StepOutcome};
use crate::multitypes::infer_star_derivation;
use crate::plist::List;
use crate::siam::{run_coverage, Siam};
use crate::syntax::{whnf_trace, Code, Shape};
use crate::tokens::{Flavor, Log, LoggedPosition, Lp, Tape, TapeItem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Passed,
    Failed,
    /// A run did not complete within the fuel, so the relation says nothing.
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckReport {
    pub name: String,
    pub term: String,
    pub status: Status,
    pub passed: bool,
    /// Step index of the first divergence, when it has one.
    pub step: Option<u64>,
    pub message: Option<String>,
    pub details: BTreeMap<String, Value>,
}

impl CheckReport {
    fn new(name: &str, code: &Code) -> Self {
        CheckReport {
            name: name.into(),
            term: code.to_string(),
            status: Status::Passed,
            passed: true,
            step: None,
            message: None,
            details: BTreeMap::new(),
        }
    }

    fn detail(&mut self, key: &str, v: impl Serialize) {
        self.details.insert(key.into(), json!(v));
    }

    fn fail(mut self, step: Option<u64>, msg: impl Into<String>) -> Self {
        self.status = Status::Failed;
        self.passed = false;
        self.step = step;
        self.message = Some(msg.into());
        self
    }

    fn inconclusive(mut self, msg: impl Into<String>) -> Self {
        self.status = Status::Inconclusive;
        self.passed = false;
        self.message = Some(msg.into());
        self
    }

    /// `Ok` when every run completed. Otherwise the report fails on a stuck
    /// run or a broken invariant, and is inconclusive on exhausted fuel.
    fn settle(self, reports: &[&RunReport]) -> Result<Self, Self> {
        for r in reports {
            match &r.outcome {
                Outcome::Stuck { step, reason } | Outcome::InvariantViolation { step, reason } => {
                    return Err(self.fail(Some(*step), format!("{}: {reason}", r.machine)));
                }
                _ => {}
            }
        }
        let unfinished: Vec<&str> = reports.iter().filter(|r| !r.is_final()).map(|r| r.machine.as_str()).collect();
        if unfinished.is_empty() {
            Ok(self)
        } else {
            Err(self.inconclusive(format!("fuel exhausted: {}", unfinished.join(", "))))
        }
    }
}

type Trace<S> = Vec<(Option<Label>, S)>;

fn collect<M: Machine>(m: &M, fuel: u64) -> (RunReport, Trace<M::State>) {
    let mut trace = Vec::new();
    let opts = RunOptions { fuel, check: false };
    let report = run_with(m, &opts, |v| trace.push((v.label, v.state.clone())));
    (report, trace)
}

fn unchecked(fuel: u64) -> RunOptions {
    RunOptions { fuel, check: false }
}

/// Pairs of cells already related, kept alive alongside their addresses.
struct Memo<A, B> {
    seen: HashSet<(usize, usize)>,
    keep: Vec<(Arc<A>, Arc<B>)>,
}

impl<A, B> Memo<A, B> {
    fn new() -> Self {
        Memo { seen: HashSet::new(), keep: Vec::new() }
    }

    fn known(&self, a: &Arc<A>, b: &Arc<B>) -> bool {
        self.seen.contains(&(Arc::as_ptr(a) as *const () as usize, Arc::as_ptr(b) as *const () as usize))
    }

    fn record(&mut self, a: &Arc<A>, b: &Arc<B>) {
        self.seen.insert((Arc::as_ptr(a) as *const () as usize, Arc::as_ptr(b) as *const () as usize));
        self.keep.push((a.clone(), b.clone()));
    }
}

fn pairwise<A, B>(a: &List<A>, b: &List<B>, mut rel: impl FnMut(&A, &B) -> bool) -> bool {
    a.len() == b.len() && a.iter().zip(b.iter()).all(|(x, y)| rel(x, y))
}

/// The λJAM-to-λIAM projection `↧`, as a relation: a global logged position
/// projects onto a local one with the context cut at the binder and the log
/// cut to the inner level.
struct Projection<'c> {
    code: &'c Code,
    memo: Memo<LoggedPosition, LoggedPosition>,
}

impl Projection<'_> {
    fn lp(&mut self, global: &Lp, local: &Lp) -> bool {
        if self.memo.known(global, local) {
            return true;
        }
        let Shape::Var { binder, inner_level, .. } = self.code.shape(global.var) else {
            return false;
        };
        let ok = global.flavor == Flavor::Global
            && local.flavor == Flavor::Local
            && global.var == local.var
            && local.scope == binder
            && local.log.len() == inner_level
            && global.log.len() >= inner_level
            && global.log.iter().zip(local.log.iter()).all(|(g, l)| self.lp(g, l));
        if ok {
            self.memo.record(global, local);
        }
        ok
    }

    fn log(&mut self, global: &Log, local: &Log) -> bool {
        pairwise(global, local, |g, l| self.lp(g, l))
    }

    fn tape(&mut self, global: &Tape, local: &Tape) -> bool {
        pairwise(global, local, |g, l| match (g, l) {
            (TapeItem::Marker, TapeItem::Marker) => true,
            (TapeItem::Lp(g), TapeItem::Lp(l)) => self.lp(g, l),
            _ => false,
        })
    }

    fn state(&mut self, j: &JamState, i: &IamState) -> bool {
        j.pos == i.pos && j.dir == i.dir && self.log(&j.log, &i.log) && self.tape(&j.tape, &i.tape)
    }
}

/// λJAM against λIAM: both complete together, the λJAM is no longer and makes
/// no more var steps, and the λIAM run is the λJAM run with every jump
/// expanded into a backtracking phase `bt1 … bt2`, projecting state by state.
pub fn check_iam_jam(code: &Code, fuel: u64) -> CheckReport {
    let report = CheckReport::new("iam-jam", code);
    let (ri, ti) = collect(&Iam::new(code), fuel);
    let (rj, tj) = collect(&Jam::new(code), fuel);
    let mut report = match report.settle(&[&ri, &rj]) {
        Ok(r) => r,
        Err(r) => return r,
    };
    report.detail("iamLength", ri.length);
    report.detail("jamLength", rj.length);
    report.detail("iamVar", ri.var_count);
    report.detail("jamVar", rj.var_count);
    if rj.length > ri.length || rj.var_count > ri.var_count {
        return report.fail(None, "the λJAM run is longer or makes more var steps");
    }
    let mut proj = Projection { code, memo: Memo::new() };
    let mut i = 0;
    if !proj.state(&tj[0].1, &ti[0].1) {
        return report.fail(Some(0), "initial states differ");
    }
    for (j, (label, jam_state)) in tj.iter().enumerate().skip(1) {
        let label = label.expect("non-initial");
        if label == Label::Jmp {
            match bracket_end(&ti, i + 1) {
                Ok(end) => i = end,
                Err((at, msg)) => return report.fail(Some(at as u64), format!("λIAM step {at}: {msg}")),
            }
        } else {
            i += 1;
            if ti.get(i).and_then(|t| t.0) != Some(label) {
                return report.fail(Some(j as u64), format!("λJAM {label} against λIAM step {i}"));
            }
        }
        if !proj.state(jam_state, &ti[i].1) {
            return report.fail(Some(j as u64), format!("λJAM state {j} does not project onto λIAM state {i}"));
        }
    }
    if i + 1 != ti.len() {
        return report.fail(Some(i as u64), "the λIAM run continues after the λJAM one ends");
    }
    report.detail("jumps", rj.count(Label::Jmp));
    report
}

/// Index of the `bt2` closing the backtracking phase opened by the `bt1` at
/// `start`: the one consuming the logged position that `bt1` put on the tape.
/// The phase may contain other transitions, but never pops that position.
fn bracket_end(trace: &Trace<IamState>, start: usize) -> Result<usize, (usize, String)> {
    if trace.get(start).and_then(|t| t.0) != Some(Label::Bt1) {
        return Err((start, "a jump is not matched by bt1".into()));
    }
    let tape = &trace[start].1.tape;
    let (m, Some(TapeItem::Lp(token))) = (tape.len(), tape.head()) else {
        return Err((start, "bt1 did not push a logged position".into()));
    };
    for k in start + 1..trace.len() {
        let (label, s) = &trace[k];
        let before = &trace[k - 1].1.tape;
        let pops_token = before.len() == m && matches!(before.head(), Some(TapeItem::Lp(q)) if Arc::ptr_eq(q, token));
        if *label == Some(Label::Bt2) && pops_token {
            return Ok(k);
        }
        if s.tape.len() < m {
            return Err((k, format!("{} removed the backtracking token", label.expect("non-initial"))));
        }
    }
    Err((trace.len(), "unterminated backtracking phase".into()))
}

/// Well-bracketing of the λIAM backtracking phases: every bt1 opens a phase
/// closed by its own bt2, distinct phases close at distinct bt2, and every
/// backtracking state lies inside a phase.
fn check_brackets(trace: &Trace<IamState>) -> Result<(), (usize, String)> {
    let mut inside = vec![false; trace.len()];
    let mut closers = HashSet::new();
    for k in 1..trace.len() {
        if trace[k].0 == Some(Label::Bt1) {
            let end = bracket_end(trace, k)?;
            if !closers.insert(end) {
                return Err((end, "bt2 closes two phases".into()));
            }
            inside[k..end].iter_mut().for_each(|b| *b = true);
        }
    }
    let bt2 = trace.iter().filter(|t| t.0 == Some(Label::Bt2)).count();
    if bt2 != closers.len() {
        return Err((0, "bt2 without bt1".into()));
    }
    match (0..trace.len()).find(|&k| trace[k].1.is_backtracking() && !inside[k]) {
        Some(k) => Err((k, "backtracking state outside a phase".into())),
        None => Ok(()),
    }
}

/// The log/history relation `L ≃ (H, i)`. The history only grows, so entry
/// `k` and `φ(k)` never change once written, and a pair (log cell, index)
/// established once stays established for the whole run.
struct LogHistory {
    seen: HashSet<(usize, usize)>,
    keep: Vec<Log>,
}

impl LogHistory {
    fn new() -> Self {
        LogHistory { seen: HashSet::new(), keep: Vec::new() }
    }

    fn related(&mut self, log: &Log, h: &History, i: usize) -> bool {
        let mut todo = vec![(log.clone(), i)];
        while let Some((log, i)) = todo.pop() {
            let Some(cell) = log.cell_id() else {
                if i != 0 {
                    return false;
                }
                continue;
            };
            if !self.seen.insert((cell, i)) {
                continue;
            }
            self.keep.push(log.clone());
            let (p, rest) = log.uncons().expect("non-empty");
            match h.entry(i) {
                Some((x, phi)) if x == p.var => {
                    todo.push((rest.clone(), phi));
                    todo.push((p.log.clone(), i - 1));
                }
                _ => return false,
            }
        }
        true
    }
}

fn tapes_related(j: &Tape, p: &List<PamItem>) -> bool {
    pairwise(j, p, |a, b| match (a, b) {
        (TapeItem::Marker, PamItem::Marker) => true,
        (TapeItem::Lp(lp), PamItem::Pos(x)) => lp.var == *x,
        _ => false,
    })
}

/// Steps two machines side by side while `relate` holds on every pair of
/// states reached with the same label.
fn lockstep<A: Machine, B: Machine>(
    report: CheckReport,
    a: &A,
    b: &B,
    fuel: u64,
    label_a: impl Fn(Label) -> Label,
    label_b: impl Fn(Label) -> Label,
    mut relate: impl FnMut(&A::State, &B::State) -> Result<(), String>,
) -> CheckReport {
    let mut sa = a.initial();
    let mut sb = b.initial();
    let mut step = 0;
    loop {
        if let Err(msg) = relate(&sa, &sb) {
            return report.fail(Some(step), msg);
        }
        match (a.step(&sa), b.step(&sb)) {
            (StepOutcome::Final, StepOutcome::Final) => {
                let mut report = report;
                report.detail("length", step);
                return report;
            }
            (StepOutcome::Next { label: la, state: na, .. }, StepOutcome::Next { label: lb, state: nb, .. }) => {
                if label_a(la) != label_b(lb) {
                    return report.fail(Some(step + 1), format!("{} {la} against {} {lb}", a.name(), b.name()));
                }
                if step == fuel {
                    return report.inconclusive("fuel exhausted");
                }
                step += 1;
                sa = na;
                sb = nb;
            }
            (oa, ob) => {
                let (da, db) = (describe(&oa), describe(&ob));
                return report.fail(Some(step), format!("{} {da}, {} {db}", a.name(), b.name()));
            }
        }
    }
}

fn describe<S>(o: &StepOutcome<S>) -> String {
    match o {
        StepOutcome::Final => "final".into(),
        StepOutcome::Stuck(r) => format!("stuck ({r})"),
        StepOutcome::Next { label, .. } => format!("continues with {label}"),
    }
}

/// λJAM against λPAM: the same transitions, tapes related by forgetting logs,
/// and logs related to the history and index. On ↑ states the log of the
/// logged position on the tape is related to the whole history.
pub fn check_jam_pam(code: &Code, fuel: u64) -> CheckReport {
    let report = CheckReport::new("jam-pam", code);
    let mut lh = LogHistory::new();
    lockstep(report, &Jam::new(code), &Pam::new(code), fuel, |l| l, |l| l, |j: &JamState, p: &PamState| {
        if j.pos != p.pos || j.dir != p.dir {
            return Err("positions or directions differ".into());
        }
        if !tapes_related(&j.tape, &p.tape) {
            return Err("tapes are not related".into());
        }
        if !lh.related(&j.log, &p.history, p.index) {
            return Err("log is not related to the history and index".into());
        }
        if j.dir == Dir::Up {
            let top = j.tape.iter().find_map(TapeItem::as_lp).ok_or("↑ state without a logged position")?;
            if !lh.related(&top.log, &p.history, p.history.len()) {
                return Err("logged position on the tape is not related to the whole history".into());
            }
        }
        Ok(())
    })
}

/// HAM tokens with environments erased, as λJAM tokens.
struct EraseEnv {
    memo: Memo<ClosedPosition, LoggedPosition>,
}

impl EraseEnv {
    fn cp(&mut self, c: &Arc<ClosedPosition>, p: &Lp) -> bool {
        if self.memo.known(c, p) {
            return true;
        }
        let ok = c.pos == p.var && p.flavor == Flavor::Global && pairwise(&c.log, &p.log, |a, b| self.cp(a, b));
        if ok {
            self.memo.record(c, p);
        }
        ok
    }
}

/// HAM closures with logs erased, as KAM closures.
struct EraseLog {
    memo: Memo<LoggedClosure, Closure>,
}

impl EraseLog {
    fn closure(&mut self, lc: &Arc<LoggedClosure>, c: &Arc<Closure>) -> bool {
        if self.memo.known(lc, c) {
            return true;
        }
        let ok = lc.pos == c.pos && pairwise(&lc.env, &c.env, |a, b| self.closure(a, b));
        if ok {
            self.memo.record(lc, c);
        }
        ok
    }
}

fn unify_var(l: Label) -> Label {
    if l.is_var() {
        Label::Var
    } else {
        l
    }
}

/// HAM in both modes: J mode is the λJAM once environments are erased and
/// logged closures become markers, K mode is the KAM once logs are erased.
/// Also `|π_J| = |π_K| + |π_J|↑` and `|π_J|var = |π_K|var`.
pub fn check_ham_jk(code: &Code, fuel: u64) -> CheckReport {
    let report = CheckReport::new("ham-jk", code);
    let opts = unchecked(fuel);
    let hj = run_with(&Ham::new(code, Mode::J), &opts, |_| {});
    let hk = run_with(&Ham::new(code, Mode::K), &opts, |_| {});
    let jam = run_with(&Jam::new(code), &opts, |_| {});
    let kam = run_with(&Kam::new(code), &opts, |_| {});
    let mut report = match report.settle(&[&hj, &hk, &jam, &kam]) {
        Ok(r) => r,
        Err(r) => return r,
    };
    let up = hj.up_length.unwrap_or(0);
    report.detail("hamJLength", hj.length);
    report.detail("hamKLength", hk.length);
    report.detail("hamJUp", up);
    report.detail("hamJVar", hj.var_count);
    report.detail("hamKVar", hk.var_count);
    if hj.length != hk.length + up {
        return report.fail(None, format!("|π_J| = {} but |π_K| + |π_J|↑ = {}", hj.length, hk.length + up));
    }
    if hj.var_count != hk.var_count {
        return report.fail(None, "J and K modes make different numbers of var steps");
    }
    if (hj.length, hj.var_count, up) != (jam.length, jam.var_count, jam.up_length.unwrap_or(0)) {
        return report.fail(None, "J mode and the λJAM have different lengths");
    }
    if (hk.length, hk.var_count) != (kam.length, kam.var_count) {
        return report.fail(None, "K mode and the KAM have different lengths");
    }

    let mut erase = EraseEnv { memo: Memo::new() };
    let r = lockstep(report, &Ham::new(code, Mode::J), &Jam::new(code), fuel, unify_var, |l| l, |h: &HamState, j: &JamState| {
        let tape_ok = pairwise(&h.tape, &j.tape, |a, b| match (a, b) {
            (HamItem::Lc(_), TapeItem::Marker) => true,
            (HamItem::Cp(c), TapeItem::Lp(p)) => erase.cp(c, p),
            _ => false,
        });
        if h.pos != j.pos || h.dir != j.dir || !tape_ok || !pairwise(&h.log, &j.log, |a, b| erase.cp(a, b)) {
            return Err("J mode state does not erase to the λJAM state".into());
        }
        Ok(())
    });
    if r.status != Status::Passed {
        return r;
    }
    let mut erase = EraseLog { memo: Memo::new() };
    let mut r = lockstep(r, &Ham::new(code, Mode::K), &Kam::new(code), fuel, unify_var, |l| l, |h: &HamState, k: &KamState| {
        let tape_ok = pairwise(&h.tape, &k.stack, |a, c| match a {
            HamItem::Lc(lc) => erase.closure(lc, c),
            HamItem::Cp(_) => false,
        });
        if h.pos != k.pos || !tape_ok || !pairwise(&h.env, &k.env, |a, c| erase.closure(a, c)) {
            return Err("K mode state does not erase to the KAM state".into());
        }
        Ok(())
    });
    r.details.remove("length");
    r
}

/// Weights of the constructed derivation against the KAM and λIAM run
/// lengths, plus full SIAM coverage and `W_IAM = ★count − 1`.
pub fn check_weights(code: &Code, fuel: u64) -> CheckReport {
    let report = CheckReport::new("weights", code);
    let d = match infer_star_derivation(code, fuel) {
        Ok(d) => d,
        Err(e) => return report.inconclusive(e.to_string()),
    };
    if let Err(e) = d.check(code) {
        return report.fail(None, format!("derivation is not locally correct: {e}"));
    }
    let opts = unchecked(fuel);
    let kam = run_with(&Kam::new(code), &opts, |_| {});
    let iam = run_with(&Iam::new(code), &opts, |_| {});
    let siam = Siam::new(code, &d).expect("⊢ t : ★");
    let (sr, coverage, _) = run_coverage(&siam, &opts);
    let mut report = match report.settle(&[&kam, &iam, &sr]) {
        Ok(r) => r,
        Err(r) => return r,
    };
    let (wk, wi, stars) = (d.weight_kam(), d.weight_iam(), d.star_count() as u64);
    report.detail("weightKam", wk);
    report.detail("kamLength", kam.length);
    report.detail("weightIam", wi);
    report.detail("iamLength", iam.length);
    report.detail("starCount", stars);
    report.detail("siamLength", sr.length);
    report.detail("derivationSize", d.len());
    if wk != kam.length {
        return report.fail(None, format!("W_KAM = {wk} but the KAM takes {} steps", kam.length));
    }
    if wi != iam.length {
        return report.fail(None, format!("W_IAM = {wi} but the λIAM takes {} steps", iam.length));
    }
    if !coverage.complete() {
        return report.fail(coverage.first_repeat, format!("incomplete SIAM coverage: {coverage:?}"));
    }
    if wi + 1 != stars {
        return report.fail(None, format!("W_IAM = {wi} but the derivation has {stars} ★"));
    }
    report
}

/// `|π_K| ≤ |π_J| ≤ |π_K| + |π_J|var²·|t|`.
pub fn check_quadratic_bound(code: &Code, fuel: u64) -> CheckReport {
    let report = CheckReport::new("quadratic", code);
    let opts = unchecked(fuel);
    let kam = run_with(&Kam::new(code), &opts, |_| {});
    let jam = run_with(&Jam::new(code), &opts, |_| {});
    let mut report = match report.settle(&[&kam, &jam]) {
        Ok(r) => r,
        Err(r) => return r,
    };
    let bound = kam.length + jam.var_count * jam.var_count * code.size() as u64;
    report.detail("kamLength", kam.length);
    report.detail("jamLength", jam.length);
    report.detail("bound", bound);
    if kam.length > jam.length || jam.length > bound {
        return report.fail(None, format!("{} ≤ {} ≤ {bound} fails", kam.length, jam.length));
    }
    report
}

/// Per-step state invariants of every machine, KAM length identities, λIAM
/// bi-determinism and bracketing, SIAM bi-determinism and coverage, and the
/// quadratic bound.
pub fn check_invariants(code: &Code, fuel: u64) -> CheckReport {
    let mut report = CheckReport::new("invariants", code);
    let opts = RunOptions::checked(fuel);
    let mut iam_trace = Vec::new();
    let iam = Iam::new(code);
    let ri = run_with(&iam, &opts, |v| iam_trace.push((v.label, v.state.clone())));
    let others = [
        run_with(&Jam::new(code), &opts, |_| {}),
        run_with(&Pam::new(code), &opts, |_| {}),
        run_with(&Kam::new(code), &opts, |_| {}),
        run_with(&Ham::new(code, Mode::J), &opts, |_| {}),
        run_with(&Ham::new(code, Mode::K), &opts, |_| {}),
    ];
    let mut all: Vec<&RunReport> = vec![&ri];
    all.extend(others.iter());
    report = match report.settle(&all) {
        Ok(r) => r,
        Err(r) => return r,
    };
    for r in &all {
        report.detail(&format!("{}Length", r.machine), r.length);
    }

    let kam = &others[2];
    let abs = kam.count(Label::Abs);
    if kam.length != kam.var_count + 2 * abs {
        return report.fail(None, "KAM length is not |π|var + 2|π|abs");
    }
    match whnf_trace(code.term(), fuel) {
        Ok(steps) if steps.len() as u64 == abs => {}
        Ok(steps) => return report.fail(None, format!("{abs} abs steps but {} β steps", steps.len())),
        Err(e) => return report.inconclusive(e.to_string()),
    }

    if iam.step_back(&iam_trace[0].1).is_some() {
        return report.fail(Some(0), "the initial λIAM state has a predecessor");
    }
    for (k, w) in iam_trace.windows(2).enumerate() {
        if iam.step_back(&w[1].1) != Some((w[1].0.expect("non-initial"), w[0].1.clone())) {
            return report.fail(Some(k as u64 + 1), "λIAM backward step does not invert the forward one");
        }
    }
    if let Err((k, msg)) = check_brackets(&iam_trace) {
        return report.fail(Some(k as u64), msg);
    }

    let d = match infer_star_derivation(code, fuel) {
        Ok(d) => d,
        Err(e) => return report.inconclusive(e.to_string()),
    };
    let siam = Siam::new(code, &d).expect("⊢ t : ★");
    let (sr, coverage, _) = run_coverage(&siam, &opts);
    let mut siam_trace = Vec::new();
    let mut observables = Vec::new();
    run_with(&siam, &opts, |v| {
        siam_trace.push((v.label, v.state.clone()));
        observables.push((siam.observable(v.state), v.label));
    });
    if !sr.is_final() || !coverage.complete() {
        return report.fail(coverage.first_repeat, format!("SIAM coverage {coverage:?}, outcome {:?}", sr.outcome));
    }
    if siam.step_back(&siam_trace[0].1).is_some() {
        return report.fail(Some(0), "the initial SIAM state has a predecessor");
    }
    for (k, w) in siam_trace.windows(2).enumerate() {
        if siam.step_back(&w[1].1) != Some((w[1].0.expect("non-initial"), w[0].1.clone())) {
            return report.fail(Some(k as u64 + 1), "SIAM backward step does not invert the forward one");
        }
    }
    let iam_obs: Vec<_> = iam_trace.iter().map(|(l, s)| ((code.path(s.pos), s.dir), *l)).collect();
    if let Some(k) = (0..observables.len().max(iam_obs.len())).find(|&k| observables.get(k) != iam_obs.get(k)) {
        return report.fail(Some(k as u64), "SIAM and λIAM observables differ");
    }

    let q = check_quadratic_bound(code, fuel);
    if q.status != Status::Passed {
        return report.fail(q.step, q.message.unwrap_or_default());
    }
    report
}

pub type Checker = fn(&Code, u64) -> CheckReport;

pub fn checker(name: &str) -> Option<Checker> {
    Some(match name {
        "iam-jam" => check_iam_jam,
        "jam-pam" => check_jam_pam,
        "ham-jk" => check_ham_jk,
        "weights" => check_weights,
        "quadratic" => check_quadratic_bound,
        "invariants" => check_invariants,
        _ => return None,
    })
}

pub const CHECKS: [&str; 6] = ["iam-jam", "jam-pam", "ham-jk", "weights", "quadratic", "invariants"];

/// Corpus-level verdict: failed if any term failed, otherwise passed if any
/// term passed.
pub fn summarize(name: &str, reports: &[CheckReport]) -> Value {
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    json!({
        "name": name,
        "terms": reports.len(),
        "passed": count(Status::Passed),
        "failed": count(Status::Failed),
        "inconclusive": count(Status::Inconclusive),
        "firstFailure": reports.iter().find(|r| r.status == Status::Failed),
    })
}

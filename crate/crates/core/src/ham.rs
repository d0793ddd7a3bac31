//! The HAM: λJAM tokens and KAM closures carried side by side. In J mode it
//! behaves as the λJAM, in K mode as the KAM.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::machine::{Dir, Label, Machine, Progress, Snapshot, StepOutcome};
use crate::plist::List;
use crate::syntax::{Code, Pos, Shape, Step};
use crate::tokens::{join, SpaceFootprint};

/// An argument with the environment closing it and the log of its application.
#[derive(Debug, PartialEq, Eq)]
pub struct LoggedClosure {
    pub pos: Pos,
    pub env: HamEnv,
    pub log: HamLog,
}

/// A variable occurrence with the log and environment it was reached with.
#[derive(Debug, PartialEq, Eq)]
pub struct ClosedPosition {
    pub pos: Pos,
    pub log: HamLog,
    pub env: HamEnv,
}

pub type HamEnv = List<Arc<LoggedClosure>>;
pub type HamLog = List<Arc<ClosedPosition>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HamItem {
    Lc(Arc<LoggedClosure>),
    Cp(Arc<ClosedPosition>),
}

pub type HamTape = List<HamItem>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamState {
    pub pos: Pos,
    pub log: HamLog,
    pub env: HamEnv,
    pub tape: HamTape,
    pub dir: Dir,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    /// Always `var_J`: the λJAM.
    J,
    /// Always `var_K`: the KAM.
    K,
}

pub struct Ham<'c> {
    code: &'c Code,
    mode: Mode,
}

impl<'c> Ham<'c> {
    pub fn new(code: &'c Code, mode: Mode) -> Self {
        Ham { code, mode }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    fn labels(&self) -> (Label, Label) {
        match self.mode {
            Mode::J => (Label::P1, Label::P2),
            Mode::K => (Label::App, Label::Abs),
        }
    }

    fn render_lc(&self, c: &LoggedClosure) -> String {
        format!(
            "({}, {}, {})^{}",
            self.code.pretty(c.pos),
            self.code.pretty_in_root(c.pos),
            self.render_env(c.pos, &c.env),
            self.render_log(&c.log)
        )
    }

    fn render_cp(&self, p: &ClosedPosition) -> String {
        format!(
            "({}, {}, {})^{}",
            self.code.name(p.pos),
            self.code.pretty_in_root(p.pos),
            self.render_log(&p.log),
            self.render_env(p.pos, &p.env)
        )
    }

    fn render_env(&self, pos: Pos, env: &HamEnv) -> String {
        join(self.code.enclosing_binders(pos).zip(env.iter()).map(|(b, c)| {
            format!("[{}←{}]", self.code.name(b), self.render_lc(c))
        }))
    }

    fn render_log(&self, log: &HamLog) -> String {
        join(log.iter().map(|p| self.render_cp(p)))
    }

    fn lc_json(&self, c: &LoggedClosure) -> Value {
        json!({
            "pos": self.code.path(c.pos).to_string(),
            "env": Value::Array(c.env.iter().map(|c| self.lc_json(c)).collect()),
            "log": self.log_json(&c.log),
        })
    }

    fn cp_json(&self, p: &ClosedPosition) -> Value {
        json!({
            "var": self.code.path(p.pos).to_string(),
            "log": self.log_json(&p.log),
            "env": Value::Array(p.env.iter().map(|c| self.lc_json(c)).collect()),
        })
    }

    fn log_json(&self, log: &HamLog) -> Value {
        Value::Array(log.iter().map(|p| self.cp_json(p)).collect())
    }
}

fn next(label: Label, cost: u64, pos: Pos, log: HamLog, env: HamEnv, tape: HamTape, dir: Dir) -> StepOutcome<HamState> {
    StepOutcome::Next { label, cost, state: HamState { pos, log, env, tape, dir } }
}

impl Machine for Ham<'_> {
    type State = HamState;

    fn name(&self) -> &'static str {
        match self.mode {
            Mode::J => "ham-j",
            Mode::K => "ham-k",
        }
    }

    fn code(&self) -> &Code {
        self.code
    }

    fn initial(&self) -> HamState {
        HamState { pos: self.code.root(), log: HamLog::new(), env: HamEnv::new(), tape: HamTape::new(), dir: Dir::Down }
    }

    fn step(&self, s: &HamState) -> StepOutcome<HamState> {
        let code = self.code;
        let (app, abs) = self.labels();
        match s.dir {
            Dir::Down => match code.shape(s.pos) {
                Shape::App { fun, arg } => {
                    let c = Arc::new(LoggedClosure { pos: arg, env: s.env.clone(), log: s.log.clone() });
                    next(app, 1, fun, s.log.clone(), s.env.clone(), s.tape.cons(HamItem::Lc(c)), Dir::Down)
                }
                Shape::Lam { body } => match s.tape.uncons() {
                    None => StepOutcome::Final,
                    Some((HamItem::Lc(c), rest)) => {
                        next(abs, 1, body, s.log.clone(), s.env.cons(c.clone()), rest.clone(), Dir::Down)
                    }
                    Some(_) => StepOutcome::Stuck("closed position on the tape of a ↓ state".into()),
                },
                Shape::Var { index, binder, inner_level } => {
                    let here = Arc::new(ClosedPosition { pos: s.pos, log: s.log.clone(), env: s.env.clone() });
                    match self.mode {
                        Mode::J => {
                            let (Some(log), Some(env)) = (s.log.drop_front(inner_level), s.env.drop_front(index + 1)) else {
                                return StepOutcome::Stuck("log or environment too short".into());
                            };
                            let tape = s.tape.cons(HamItem::Cp(here));
                            next(Label::VarJ, inner_level as u64, binder, log.clone(), env.clone(), tape, Dir::Up)
                        }
                        Mode::K => match s.env.get(index) {
                            Some(c) => {
                                let log = c.log.cons(here);
                                next(Label::VarK, index as u64 + 1, c.pos, log, c.env.clone(), s.tape.clone(), Dir::Down)
                            }
                            None => StepOutcome::Stuck(format!("unbound index {index}")),
                        },
                    }
                }
            },
            Dir::Up => match code.parent(s.pos) {
                None => StepOutcome::Stuck("↑ state at the root".into()),
                Some((parent, Step::Fun)) => {
                    let Shape::App { arg, .. } = code.shape(parent) else { unreachable!() };
                    match s.tape.uncons() {
                        Some((HamItem::Lc(_), rest)) => {
                            next(Label::P3, 1, parent, s.log.clone(), s.env.clone(), rest.clone(), Dir::Up)
                        }
                        Some((HamItem::Cp(p), rest)) => {
                            next(Label::Arg, 1, arg, s.log.cons(p.clone()), s.env.clone(), rest.clone(), Dir::Down)
                        }
                        None => StepOutcome::Stuck("↑ state with an empty tape".into()),
                    }
                }
                Some((parent, Step::Body)) => match s.env.uncons() {
                    Some((c, rest)) => {
                        let tape = s.tape.cons(HamItem::Lc(c.clone()));
                        next(Label::P4, 1, parent, s.log.clone(), rest.clone(), tape, Dir::Up)
                    }
                    None => StepOutcome::Stuck("leaving an abstraction with an empty environment".into()),
                },
                Some((_, Step::Arg)) => match s.log.head() {
                    Some(p) => next(Label::Jmp, 1, p.pos, p.log.clone(), p.env.clone(), s.tape.clone(), Dir::Up),
                    None => StepOutcome::Stuck("argument position with an empty log".into()),
                },
            },
        }
    }

    /// Closed positions count as logged positions and logged closures as markers.
    fn footprint(&self, s: &HamState, _deep: bool) -> SpaceFootprint {
        let cps = s.tape.iter().filter(|i| matches!(i, HamItem::Cp(_))).count();
        SpaceFootprint {
            lp_count: s.log.len() + cps,
            marker_count: s.tape.len() - cps,
            deep_cells: 0,
        }
    }

    fn snapshot(&self, s: &HamState) -> Snapshot {
        let tape = join(s.tape.iter().map(|i| match i {
            HamItem::Lc(c) => self.render_lc(c),
            HamItem::Cp(p) => self.render_cp(p),
        }));
        let tape_json: Vec<Value> = s
            .tape
            .iter()
            .map(|i| match i {
                HamItem::Lc(c) => json!({ "closure": self.lc_json(c) }),
                HamItem::Cp(p) => json!({ "position": self.cp_json(p) }),
            })
            .collect();
        Snapshot {
            focus: s.pos,
            context: self.code.pretty_in_root(s.pos),
            dir: s.dir.arrow().into(),
            backtracking: false,
            columns: vec![
                ("log", self.render_log(&s.log)),
                ("env", self.render_env(s.pos, &s.env)),
                ("tape", tape),
            ],
            token: json!({
                "mode": self.mode,
                "log": self.log_json(&s.log),
                "env": Value::Array(s.env.iter().map(|c| self.lc_json(c)).collect()),
                "tape": tape_json,
            }),
        }
    }

    fn check(&self, s: &HamState, _progress: &Progress) -> Result<(), String> {
        let code = self.code;
        if s.log.len() != code.level(s.pos) {
            return Err(format!("log length {} at level {}", s.log.len(), code.level(s.pos)));
        }
        if s.env.len() != code.binder_depth(s.pos) {
            return Err("environment does not match the enclosing binders".into());
        }
        let cps = s.tape.iter().filter(|i| matches!(i, HamItem::Cp(_))).count();
        let expected = match s.dir {
            Dir::Down => 0,
            Dir::Up => 1,
        };
        if cps != expected {
            return Err(format!("{cps} closed positions on the tape in direction {:?}", s.dir));
        }
        if self.mode == Mode::K && s.dir == Dir::Up {
            return Err("↑ state in K mode".into());
        }
        for c in s.env.iter().chain(s.tape.iter().filter_map(|i| match i {
            HamItem::Lc(c) => Some(c),
            HamItem::Cp(_) => None,
        })) {
            if code.level(c.pos) != c.log.len() + 1 || c.env.len() != code.binder_depth(c.pos) {
                return Err("malformed logged closure".into());
            }
        }
        for p in s.log.iter() {
            if code.level(p.pos) != p.log.len() || p.env.len() != code.binder_depth(p.pos) {
                return Err("malformed closed position".into());
            }
        }
        Ok(())
    }
}

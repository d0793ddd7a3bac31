//! The λIAM: a bi-deterministic token machine that backtracks to recover the
//! variable occurrence an argument was virtually substituted for.

use serde_json::json;

use crate::machine::{Dir, Label, Machine, Progress, Snapshot, StepOutcome};
use crate::syntax::{Code, Pos, Shape, Step};
use crate::tokens::{
    footprint, log_json, render_log, render_tape, tape_json, tape_lp_count, Flavor, Log,
    LoggedPosition, SpaceFootprint, Tape, TapeItem,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IamState {
    pub pos: Pos,
    pub tape: Tape,
    pub log: Log,
    pub dir: Dir,
}

impl IamState {
    /// A ↓ state carrying logged positions on its tape is backtracking.
    pub fn is_backtracking(&self) -> bool {
        self.dir == Dir::Down && self.tape.iter().any(|i| i.as_lp().is_some())
    }
}

pub struct Iam<'c> {
    code: &'c Code,
}

impl<'c> Iam<'c> {
    pub fn new(code: &'c Code) -> Self {
        Iam { code }
    }

    fn next(label: Label, cost: u64, pos: Pos, tape: Tape, log: Log, dir: Dir) -> StepOutcome<IamState> {
        StepOutcome::Next { label, cost, state: IamState { pos, tape, log, dir } }
    }

    /// The unique transition leading to `s`, if `s` is not initial.
    pub fn step_back(&self, s: &IamState) -> Option<(Label, IamState)> {
        let code = self.code;
        let state = |pos, tape, log, dir| IamState { pos, tape, log, dir };
        match s.dir {
            Dir::Down => {
                let (parent, step) = code.parent(s.pos)?;
                match (step, s.tape.uncons()) {
                    (Step::Fun, Some((TapeItem::Marker, rest))) => {
                        Some((Label::P1, state(parent, rest.clone(), s.log.clone(), Dir::Down)))
                    }
                    (Step::Fun, Some((TapeItem::Lp(p), rest))) => {
                        let Shape::App { arg, .. } = code.shape(parent) else { unreachable!() };
                        let log = s.log.cons(p.clone());
                        Some((Label::Bt1, state(arg, rest.clone(), log, Dir::Up)))
                    }
                    (Step::Fun, None) => None,
                    (Step::Body, _) => {
                        let tape = s.tape.cons(TapeItem::Marker);
                        Some((Label::P2, state(parent, tape, s.log.clone(), Dir::Down)))
                    }
                    (Step::Arg, _) => {
                        let (p, rest) = s.log.uncons()?;
                        let Shape::App { fun, .. } = code.shape(parent) else { unreachable!() };
                        let tape = s.tape.cons(TapeItem::Lp(p.clone()));
                        Some((Label::Arg, state(fun, tape, rest.clone(), Dir::Up)))
                    }
                }
            }
            Dir::Up => match code.shape(s.pos) {
                Shape::App { fun, .. } => {
                    let tape = s.tape.cons(TapeItem::Marker);
                    Some((Label::P3, state(fun, tape, s.log.clone(), Dir::Up)))
                }
                Shape::Lam { body } => match s.tape.uncons()? {
                    (TapeItem::Marker, rest) => {
                        Some((Label::P4, state(body, rest.clone(), s.log.clone(), Dir::Up)))
                    }
                    (TapeItem::Lp(p), rest) if p.scope == s.pos => {
                        let log = p.log.append(&s.log);
                        Some((Label::Var, state(p.var, rest.clone(), log, Dir::Down)))
                    }
                    _ => None,
                },
                Shape::Var { binder, inner_level, .. } => {
                    let (front, rest) = s.log.split_at(inner_level)?;
                    let p = LoggedPosition::new(s.pos, binder, Flavor::Local, front);
                    let tape = s.tape.cons(TapeItem::Lp(p));
                    Some((Label::Bt2, state(binder, tape, rest, Dir::Down)))
                }
            },
        }
    }
}

impl Machine for Iam<'_> {
    type State = IamState;

    fn name(&self) -> &'static str {
        "iam"
    }

    fn code(&self) -> &Code {
        self.code
    }

    fn initial(&self) -> IamState {
        IamState { pos: self.code.root(), tape: Tape::new(), log: Log::new(), dir: Dir::Down }
    }

    fn step(&self, s: &IamState) -> StepOutcome<IamState> {
        let code = self.code;
        match s.dir {
            Dir::Down => match code.shape(s.pos) {
                Shape::App { fun, .. } => {
                    Self::next(Label::P1, 1, fun, s.tape.cons(TapeItem::Marker), s.log.clone(), Dir::Down)
                }
                Shape::Lam { body } => match s.tape.uncons() {
                    None => StepOutcome::Final,
                    Some((TapeItem::Marker, rest)) => {
                        Self::next(Label::P2, 1, body, rest.clone(), s.log.clone(), Dir::Down)
                    }
                    Some((TapeItem::Lp(p), rest)) if p.scope == s.pos => {
                        Self::next(Label::Bt2, 1, p.var, rest.clone(), p.log.append(&s.log), Dir::Up)
                    }
                    Some(_) => StepOutcome::Stuck(
                        "backtracking token does not belong to the focused abstraction".into(),
                    ),
                },
                Shape::Var { binder, inner_level, .. } => {
                    let Some((front, rest)) = s.log.split_at(inner_level) else {
                        return StepOutcome::Stuck("log shorter than the variable's inner level".into());
                    };
                    let p = LoggedPosition::new(s.pos, binder, Flavor::Local, front);
                    Self::next(Label::Var, inner_level as u64, binder, s.tape.cons(TapeItem::Lp(p)), rest, Dir::Up)
                }
            },
            Dir::Up => match code.parent(s.pos) {
                None => StepOutcome::Stuck("↑ state at the root".into()),
                Some((parent, Step::Fun)) => {
                    let Shape::App { arg, .. } = code.shape(parent) else { unreachable!() };
                    match s.tape.uncons() {
                        Some((TapeItem::Marker, rest)) => {
                            Self::next(Label::P3, 1, parent, rest.clone(), s.log.clone(), Dir::Up)
                        }
                        Some((TapeItem::Lp(p), rest)) => {
                            Self::next(Label::Arg, 1, arg, rest.clone(), s.log.cons(p.clone()), Dir::Down)
                        }
                        None => StepOutcome::Stuck("↑ state with an empty tape".into()),
                    }
                }
                Some((parent, Step::Body)) => {
                    Self::next(Label::P4, 1, parent, s.tape.cons(TapeItem::Marker), s.log.clone(), Dir::Up)
                }
                Some((parent, Step::Arg)) => {
                    let Shape::App { fun, .. } = code.shape(parent) else { unreachable!() };
                    match s.log.uncons() {
                        Some((p, rest)) => {
                            Self::next(Label::Bt1, 1, fun, s.tape.cons(TapeItem::Lp(p.clone())), rest.clone(), Dir::Down)
                        }
                        None => StepOutcome::Stuck("argument position with an empty log".into()),
                    }
                }
            },
        }
    }

    fn footprint(&self, s: &IamState, deep: bool) -> SpaceFootprint {
        footprint(&s.log, &s.tape, deep)
    }

    fn snapshot(&self, s: &IamState) -> Snapshot {
        let code = self.code;
        Snapshot {
            focus: s.pos,
            context: code.pretty_in_root(s.pos),
            dir: s.dir.arrow().into(),
            backtracking: s.is_backtracking(),
            columns: vec![("tape", render_tape(code, &s.tape)), ("log", render_log(code, &s.log))],
            token: json!({ "tape": tape_json(code, &s.tape), "log": log_json(code, &s.log) }),
        }
    }

    fn check(&self, s: &IamState, _progress: &Progress) -> Result<(), String> {
        let level = self.code.level(s.pos);
        if s.log.len() != level {
            return Err(format!("log length {} at level {level}", s.log.len()));
        }
        let lps = tape_lp_count(&s.tape);
        if (s.dir == Dir::Down) != lps.is_multiple_of(2) {
            return Err(format!("{lps} logged positions on the tape in direction {:?}", s.dir));
        }
        let tops = s.log.iter().chain(s.tape.iter().filter_map(TapeItem::as_lp));
        for p in tops {
            if p.flavor != Flavor::Local {
                return Err("global logged position in a λIAM state".into());
            }
            let Shape::Var { binder, inner_level, .. } = self.code.shape(p.var) else {
                return Err("logged position not at a variable".into());
            };
            if binder != p.scope || p.log.len() != inner_level {
                return Err("logged position with a wrong scope or log length".into());
            }
        }
        Ok(())
    }
}

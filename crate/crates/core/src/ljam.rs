//! The λJAM: the λIAM with global logged positions, where a single jump
//! replaces each backtracking phase.

use serde_json::json;

use crate::machine::{Dir, Label, Machine, Progress, Snapshot, StepOutcome};
use crate::syntax::{Code, Pos, Shape, Step};
use crate::tokens::{
    footprint, log_depth, log_json, render_log, render_tape, tape_depth, tape_json, tape_lp_count,
    Flavor, Log, LoggedPosition, SpaceFootprint, Tape, TapeItem,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JamState {
    pub pos: Pos,
    pub tape: Tape,
    pub log: Log,
    pub dir: Dir,
}

/// Depth of the token: the tape's for ↑ states, the log's for ↓ states.
pub fn depth(s: &JamState) -> usize {
    match s.dir {
        Dir::Up => tape_depth(&s.tape),
        Dir::Down => log_depth(&s.log),
    }
}

pub struct Jam<'c> {
    code: &'c Code,
}

impl<'c> Jam<'c> {
    pub fn new(code: &'c Code) -> Self {
        Jam { code }
    }

    fn next(label: Label, cost: u64, pos: Pos, tape: Tape, log: Log, dir: Dir) -> StepOutcome<JamState> {
        StepOutcome::Next { label, cost, state: JamState { pos, tape, log, dir } }
    }
}

impl Machine for Jam<'_> {
    type State = JamState;

    fn name(&self) -> &'static str {
        "jam"
    }

    fn code(&self) -> &Code {
        self.code
    }

    fn initial(&self) -> JamState {
        JamState { pos: self.code.root(), tape: Tape::new(), log: Log::new(), dir: Dir::Down }
    }

    fn step(&self, s: &JamState) -> StepOutcome<JamState> {
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
                    Some(_) => StepOutcome::Stuck("logged position on the tape of a ↓ state".into()),
                },
                Shape::Var { binder, inner_level, .. } => {
                    let Some(rest) = s.log.drop_front(inner_level) else {
                        return StepOutcome::Stuck("log shorter than the variable's inner level".into());
                    };
                    let p = LoggedPosition::new(s.pos, code.root(), Flavor::Global, s.log.clone());
                    Self::next(Label::Var, inner_level as u64, binder, s.tape.cons(TapeItem::Lp(p)), rest.clone(), Dir::Up)
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
                Some((_, Step::Arg)) => match s.log.head() {
                    Some(p) => Self::next(Label::Jmp, 1, p.var, s.tape.clone(), p.log.clone(), Dir::Up),
                    None => StepOutcome::Stuck("argument position with an empty log".into()),
                },
            },
        }
    }

    fn footprint(&self, s: &JamState, deep: bool) -> SpaceFootprint {
        footprint(&s.log, &s.tape, deep)
    }

    fn snapshot(&self, s: &JamState) -> Snapshot {
        let code = self.code;
        Snapshot {
            focus: s.pos,
            context: code.pretty_in_root(s.pos),
            dir: s.dir.arrow().into(),
            backtracking: false,
            columns: vec![("tape", render_tape(code, &s.tape)), ("log", render_log(code, &s.log))],
            token: json!({
                "tape": tape_json(code, &s.tape),
                "log": log_json(code, &s.log),
                "depth": depth(s),
            }),
        }
    }

    fn check(&self, s: &JamState, progress: &Progress) -> Result<(), String> {
        let level = self.code.level(s.pos);
        if s.log.len() != level {
            return Err(format!("log length {} at level {level}", s.log.len()));
        }
        let lps = tape_lp_count(&s.tape);
        let expected = if s.dir == Dir::Down { 0 } else { 1 };
        if lps != expected {
            return Err(format!("{lps} logged positions on the tape in direction {:?}", s.dir));
        }
        let d = depth(s);
        if d as u64 != progress.var_steps {
            return Err(format!("depth {d} after {} var transitions", progress.var_steps));
        }
        let tops = s.log.iter().chain(s.tape.iter().filter_map(TapeItem::as_lp));
        for p in tops {
            if p.flavor != Flavor::Global || p.log.len() != self.code.level(p.var) {
                return Err("logged position with a wrong flavor or log length".into());
            }
            if p.depth() > d {
                return Err(format!("logged position of depth {} in a state of depth {d}", p.depth()));
            }
        }
        Ok(())
    }
}

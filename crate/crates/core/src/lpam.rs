//! The λPAM: the λJAM with its distributed logs replaced by one append-only
//! history of indexed positions.

use serde_json::{json, Value};

use crate::machine::{Dir, Label, Machine, Progress, Snapshot, StepOutcome};
use crate::plist::List;
use crate::syntax::{Code, Pos, Shape, Step};
use crate::tokens::{join, SpaceFootprint};

/// Entries `(p_k, i_k)` addressed from 1; the list head is entry `len()`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct History(List<(Pos, usize)>);

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("φ lookup at index 0 with {remaining} iterations left")]
pub struct UndefinedLookup {
    pub remaining: usize,
}

impl History {
    pub fn new() -> Self {
        History(List::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry `k`, for `1 ≤ k ≤ len()`.
    pub fn entry(&self, k: usize) -> Option<(Pos, usize)> {
        if k == 0 || k > self.len() {
            return None;
        }
        self.0.get(self.len() - k).copied()
    }

    pub fn push(&self, pos: Pos, idx: usize) -> History {
        History(self.0.cons((pos, idx)))
    }

    /// Entries in insertion order, entry 1 first.
    pub fn entries(&self) -> Vec<(Pos, usize)> {
        let mut v: Vec<_> = self.0.iter().copied().collect();
        v.reverse();
        v
    }

    /// Address of the newest cell; versions of one run differ exactly in it.
    pub fn cell_id(&self) -> Option<usize> {
        self.0.cell_id()
    }

    /// φ_H(k) = i_k.
    pub fn phi(&self, k: usize) -> Option<usize> {
        self.entry(k).map(|(_, i)| i)
    }

    /// `n` iterations of φ_H from `i`.
    pub fn phi_pow(&self, i: usize, n: usize) -> Result<usize, UndefinedLookup> {
        (0..n).try_fold(i, |k, m| self.phi(k).ok_or(UndefinedLookup { remaining: n - m }))
    }

    /// Whether φ_H^m(i) > 0 for every m < n.
    pub fn has_depth(&self, i: usize, n: usize) -> bool {
        let mut k = i;
        for _ in 0..n {
            match self.phi(k) {
                Some(j) if k > 0 => k = j,
                _ => return false,
            }
        }
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PamItem {
    Marker,
    Pos(Pos),
}

pub type PamTape = List<PamItem>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PamState {
    pub pos: Pos,
    pub history: History,
    pub index: usize,
    pub tape: PamTape,
    pub dir: Dir,
}

pub struct Pam<'c> {
    code: &'c Code,
}

impl<'c> Pam<'c> {
    pub fn new(code: &'c Code) -> Self {
        Pam { code }
    }

    fn render_pos(&self, p: Pos) -> String {
        format!("({}, {})", self.code.name(p), self.code.pretty_in_root(p))
    }

    pub fn render_history(&self, h: &History) -> String {
        let mut entries = h.entries();
        entries.reverse();
        join(entries.into_iter().map(|(p, i)| format!("({}, {i})", self.render_pos(p))))
    }

    fn history_json(&self, h: &History) -> Value {
        Value::Array(
            h.entries()
                .into_iter()
                .map(|(p, i)| json!({ "pos": self.code.path(p).to_string(), "idx": i }))
                .collect(),
        )
    }
}

fn next(label: Label, cost: u64, pos: Pos, history: History, index: usize, tape: PamTape, dir: Dir) -> StepOutcome<PamState> {
    StepOutcome::Next { label, cost, state: PamState { pos, history, index, tape, dir } }
}

impl Machine for Pam<'_> {
    type State = PamState;

    fn name(&self) -> &'static str {
        "pam"
    }

    fn code(&self) -> &Code {
        self.code
    }

    fn initial(&self) -> PamState {
        PamState { pos: self.code.root(), history: History::new(), index: 0, tape: PamTape::new(), dir: Dir::Down }
    }

    fn step(&self, s: &PamState) -> StepOutcome<PamState> {
        let code = self.code;
        let h = s.history.clone();
        match s.dir {
            Dir::Down => match code.shape(s.pos) {
                Shape::App { fun, .. } => next(Label::P1, 1, fun, h, s.index, s.tape.cons(PamItem::Marker), Dir::Down),
                Shape::Lam { body } => match s.tape.uncons() {
                    None => StepOutcome::Final,
                    Some((PamItem::Marker, rest)) => next(Label::P2, 1, body, h, s.index, rest.clone(), Dir::Down),
                    Some(_) => StepOutcome::Stuck("position on the tape of a ↓ state".into()),
                },
                Shape::Var { binder, inner_level, .. } => match s.history.phi_pow(s.index, inner_level) {
                    Ok(index) => {
                        let tape = s.tape.cons(PamItem::Pos(s.pos));
                        next(Label::Var, inner_level as u64, binder, h, index, tape, Dir::Up)
                    }
                    Err(e) => StepOutcome::Stuck(e.to_string()),
                },
            },
            Dir::Up => match code.parent(s.pos) {
                None => StepOutcome::Stuck("↑ state at the root".into()),
                Some((parent, Step::Fun)) => {
                    let Shape::App { arg, .. } = code.shape(parent) else { unreachable!() };
                    match s.tape.uncons() {
                        Some((PamItem::Marker, rest)) => next(Label::P3, 1, parent, h, s.index, rest.clone(), Dir::Up),
                        Some((PamItem::Pos(p), rest)) => {
                            let h = h.push(*p, s.index);
                            let index = h.len();
                            next(Label::Arg, 1, arg, h, index, rest.clone(), Dir::Down)
                        }
                        None => StepOutcome::Stuck("↑ state with an empty tape".into()),
                    }
                }
                Some((parent, Step::Body)) => {
                    next(Label::P4, 1, parent, h, s.index, s.tape.cons(PamItem::Marker), Dir::Up)
                }
                Some((_, Step::Arg)) => match s.history.entry(s.index) {
                    Some((x, _)) => next(Label::Jmp, 1, x, h, s.index - 1, s.tape.clone(), Dir::Up),
                    None => StepOutcome::Stuck("jump from index 0".into()),
                },
            },
        }
    }

    /// Positions on the tape count as logged positions; the history size is
    /// reported as the cell count.
    fn footprint(&self, s: &PamState, _deep: bool) -> SpaceFootprint {
        let positions = s.tape.iter().filter(|i| matches!(i, PamItem::Pos(_))).count();
        SpaceFootprint {
            lp_count: positions,
            marker_count: s.tape.len() - positions,
            deep_cells: s.history.len(),
        }
    }

    fn snapshot(&self, s: &PamState) -> Snapshot {
        let code = self.code;
        let tape_text = join(s.tape.iter().map(|i| match i {
            PamItem::Marker => "p".to_string(),
            PamItem::Pos(p) => self.render_pos(*p),
        }));
        let tape_json: Vec<Value> = s
            .tape
            .iter()
            .map(|i| match i {
                PamItem::Marker => Value::from("p"),
                PamItem::Pos(p) => Value::from(code.path(*p).to_string()),
            })
            .collect();
        Snapshot {
            focus: s.pos,
            context: code.pretty_in_root(s.pos),
            dir: s.dir.arrow().into(),
            backtracking: false,
            columns: vec![
                ("history", self.render_history(&s.history)),
                ("index", s.index.to_string()),
                ("tape", tape_text),
            ],
            token: json!({
                "history": self.history_json(&s.history),
                "index": s.index,
                "tape": tape_json,
            }),
        }
    }

    fn check(&self, s: &PamState, _progress: &Progress) -> Result<(), String> {
        let h = &s.history;
        let level = self.code.level(s.pos);
        if !h.has_depth(s.index, level) {
            return Err(format!("history lacks depth {level} at index {}", s.index));
        }
        // A new entry can only have been added by the last transition.
        if let Some((p, j)) = h.entry(h.len()) {
            if j >= h.len() {
                return Err(format!("entry {} points forward to {j}", h.len()));
            }
            if !h.has_depth(h.len() - 1, self.code.level(p)) {
                return Err(format!("history lacks the depth of entry {}", h.len()));
            }
        }
        let positions = s.tape.iter().filter(|i| matches!(i, PamItem::Pos(_))).count();
        match s.dir {
            Dir::Down if s.index != h.len() || positions != 0 => {
                Err(format!("↓ state with index {} of {} and {positions} positions", s.index, h.len()))
            }
            Dir::Up if positions != 1 => Err(format!("↑ state with {positions} positions on the tape")),
            _ => Ok(()),
        }
    }
}

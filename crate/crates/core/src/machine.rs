//! Vocabulary shared by every machine: directions, labels, step outcomes.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::syntax::{Code, Pos};
use crate::tokens::SpaceFootprint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dir {
    /// Looking for the head variable (↓).
    Down,
    /// Looking for an argument (↑).
    Up,
}

impl Dir {
    pub fn arrow(self) -> &'static str {
        match self {
            Dir::Down => "↓",
            Dir::Up => "↑",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    P1,
    P2,
    P3,
    P4,
    Var,
    Arg,
    Bt1,
    Bt2,
    Jmp,
    App,
    Abs,
    VarJ,
    VarK,
}

impl Label {
    pub const ALL: [Label; 13] = [
        Label::P1,
        Label::P2,
        Label::P3,
        Label::P4,
        Label::Var,
        Label::Arg,
        Label::Bt1,
        Label::Bt2,
        Label::Jmp,
        Label::App,
        Label::Abs,
        Label::VarJ,
        Label::VarK,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Label::P1 => "p1",
            Label::P2 => "p2",
            Label::P3 => "p3",
            Label::P4 => "p4",
            Label::Var => "var",
            Label::Arg => "arg",
            Label::Bt1 => "bt1",
            Label::Bt2 => "bt2",
            Label::Jmp => "jmp",
            Label::App => "app",
            Label::Abs => "abs",
            Label::VarJ => "varJ",
            Label::VarK => "varK",
        }
    }

    pub fn from_name(s: &str) -> Option<Label> {
        Label::ALL.into_iter().find(|l| l.name() == s)
    }

    /// The transitions of an ↑ phase of the jumping machines.
    pub fn is_up(self) -> bool {
        matches!(self, Label::P3 | Label::P4 | Label::Arg | Label::Jmp)
    }

    pub fn is_var(self) -> bool {
        matches!(self, Label::Var | Label::VarJ | Label::VarK)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub enum StepOutcome<S> {
    /// A transition; `cost` is its RAM cost annotation.
    Next { label: Label, cost: u64, state: S },
    Final,
    Stuck(String),
}

/// Presentation of one state: the focused occurrence and the token columns.
#[derive(Clone, Debug)]
pub struct Snapshot {
    pub focus: Pos,
    /// The whole program with the focus replaced by the hole.
    pub context: String,
    pub dir: String,
    /// Marks a λIAM backtracking state.
    pub backtracking: bool,
    /// Named columns in display order, e.g. tape and log.
    pub columns: Vec<(&'static str, String)>,
    pub token: Value,
}

/// Progress of a run so far, for invariants that refer to the past.
#[derive(Clone, Debug, Default)]
pub struct Progress {
    pub steps: u64,
    pub var_steps: u64,
}

pub trait Machine {
    type State: Clone;

    fn name(&self) -> &'static str;

    fn code(&self) -> &Code;

    fn initial(&self) -> Self::State;

    fn step(&self, s: &Self::State) -> StepOutcome<Self::State>;

    /// Top-level token size; `deep` also counts shared cells, which costs a traversal.
    fn footprint(&self, s: &Self::State, deep: bool) -> SpaceFootprint;

    fn snapshot(&self, s: &Self::State) -> Snapshot;

    /// Checks the machine's state invariants.
    fn check(&self, _s: &Self::State, _progress: &Progress) -> Result<(), String> {
        Ok(())
    }
}

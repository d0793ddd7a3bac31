//! The Krivine abstract machine over positions, with de Bruijn environments.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::machine::{Label, Machine, Progress, Snapshot, StepOutcome};
use crate::plist::List;
use crate::syntax::{Code, Pos, Shape};
use crate::tokens::{join, SpaceFootprint};

/// A code position closed by an environment.
#[derive(Debug, PartialEq, Eq)]
pub struct Closure {
    pub pos: Pos,
    pub env: Env,
}

/// Entry `i` closes de Bruijn index `i`.
pub type Env = List<Arc<Closure>>;
pub type Stack = List<Arc<Closure>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KamState {
    pub pos: Pos,
    pub env: Env,
    pub stack: Stack,
}

pub struct Kam<'c> {
    code: &'c Code,
}

impl<'c> Kam<'c> {
    pub fn new(code: &'c Code) -> Self {
        Kam { code }
    }
}

pub fn render_closure(code: &Code, c: &Closure) -> String {
    format!("({}, {}, {})", code.pretty(c.pos), code.pretty_in_root(c.pos), render_env(code, c.pos, &c.env))
}

/// `[x←c]·…` with names taken from the binders enclosing `pos`.
pub fn render_env(code: &Code, pos: Pos, env: &Env) -> String {
    join(code.enclosing_binders(pos).zip(env.iter()).map(|(b, c)| {
        format!("[{}←{}]", code.name(b), render_closure(code, c))
    }))
}

pub fn closure_json(code: &Code, c: &Closure) -> Value {
    json!({ "pos": code.path(c.pos).to_string(), "env": closures_json(code, &c.env) })
}

pub fn closures_json(code: &Code, l: &List<Arc<Closure>>) -> Value {
    Value::Array(l.iter().map(|c| closure_json(code, c)).collect())
}

fn count_cells(roots: &[&List<Arc<Closure>>]) -> usize {
    let mut seen = std::collections::HashSet::new();
    let mut todo: Vec<List<Arc<Closure>>> = roots.iter().map(|l| (*l).clone()).collect();
    while let Some(mut l) = todo.pop() {
        while let Some(id) = l.cell_id() {
            if !seen.insert(id) {
                break;
            }
            let (c, rest) = l.uncons().expect("non-empty");
            todo.push(c.env.clone());
            l = rest.clone();
        }
    }
    seen.len()
}

impl Machine for Kam<'_> {
    type State = KamState;

    fn name(&self) -> &'static str {
        "kam"
    }

    fn code(&self) -> &Code {
        self.code
    }

    fn initial(&self) -> KamState {
        KamState { pos: self.code.root(), env: Env::new(), stack: Stack::new() }
    }

    fn step(&self, s: &KamState) -> StepOutcome<KamState> {
        match self.code.shape(s.pos) {
            Shape::App { fun, arg } => {
                let c = Arc::new(Closure { pos: arg, env: s.env.clone() });
                let state = KamState { pos: fun, env: s.env.clone(), stack: s.stack.cons(c) };
                StepOutcome::Next { label: Label::App, cost: 1, state }
            }
            Shape::Lam { body } => match s.stack.uncons() {
                None => StepOutcome::Final,
                Some((c, rest)) => {
                    let state = KamState { pos: body, env: s.env.cons(c.clone()), stack: rest.clone() };
                    StepOutcome::Next { label: Label::Abs, cost: 1, state }
                }
            },
            Shape::Var { index, .. } => match s.env.get(index) {
                Some(c) => {
                    let state = KamState { pos: c.pos, env: c.env.clone(), stack: s.stack.clone() };
                    StepOutcome::Next { label: Label::Var, cost: index as u64 + 1, state }
                }
                None => StepOutcome::Stuck(format!("unbound index {index}")),
            },
        }
    }

    /// Stack closures play the role of markers; there are no logged positions.
    fn footprint(&self, s: &KamState, deep: bool) -> SpaceFootprint {
        SpaceFootprint {
            lp_count: 0,
            marker_count: s.stack.len(),
            deep_cells: if deep { count_cells(&[&s.env, &s.stack]) } else { 0 },
        }
    }

    fn snapshot(&self, s: &KamState) -> Snapshot {
        let code = self.code;
        Snapshot {
            focus: s.pos,
            context: code.pretty_in_root(s.pos),
            dir: "-".into(),
            backtracking: false,
            columns: vec![
                ("stack", join(s.stack.iter().map(|c| render_closure(code, c)))),
                ("env", render_env(code, s.pos, &s.env)),
            ],
            token: json!({ "stack": closures_json(code, &s.stack), "env": closures_json(code, &s.env) }),
        }
    }

    fn check(&self, s: &KamState, _progress: &Progress) -> Result<(), String> {
        let closed = |pos: Pos, env: &Env| env.len() == self.code.binder_depth(pos);
        if !closed(s.pos, &s.env) {
            return Err("environment does not match the enclosing binders".into());
        }
        if !s.stack.iter().all(|c| closed(c.pos, &c.env)) {
            return Err("stack closure not closed by its environment".into());
        }
        Ok(())
    }
}

use serde::Serialize;

use super::{Path, Step, Term};

/// One weak head step `(λy.t) u r1 … rh →wh t{y←u} r1 … rh`.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionStep {
    #[serde(serialize_with = "as_text")]
    pub before: Term,
    #[serde(serialize_with = "as_text")]
    pub after: Term,
    /// Address of the contracted redex, `Fun^h` below the spine of arguments.
    pub redex_path: Path,
    /// Where copies of the argument sit in `after`, in left-to-right order.
    pub substituted_occurrences: Vec<Path>,
}

fn as_text<S: serde::Serializer>(t: &Term, ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_str(t)
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ReduceError {
    #[error("no weak head normal form within {0} steps")]
    Diverged(u64),
    #[error("the term is not closed")]
    NotClosed,
}

/// The maximal weak head reduction sequence of a closed term, bounded by `fuel` steps.
pub fn whnf_trace(t: &Term, fuel: u64) -> Result<Vec<ReductionStep>, ReduceError> {
    if !t.is_closed() {
        return Err(ReduceError::NotClosed);
    }
    let mut steps = Vec::new();
    let mut cur = t.clone();
    while let Some(step) = contract_head(&cur) {
        if steps.len() as u64 == fuel {
            return Err(ReduceError::Diverged(fuel));
        }
        cur = step.after.clone();
        steps.push(step);
    }
    Ok(steps)
}

/// The weak head normal form and the number of steps taken.
pub fn whnf(t: &Term, fuel: u64) -> Result<(Term, u64), ReduceError> {
    let steps = whnf_trace(t, fuel)?;
    let n = steps.len() as u64;
    Ok((steps.last().map_or_else(|| t.clone(), |s| s.after.clone()), n))
}

fn contract_head(t: &Term) -> Option<ReductionStep> {
    let mut args = Vec::new();
    let mut head = t;
    while let Term::App(f, a) = head {
        args.push(&**a);
        head = f;
    }
    // args[last] is the innermost argument, the one consumed by the head λ.
    let (Term::Lam { body, .. }, Some(arg)) = (head, args.pop()) else {
        return None;
    };
    let h = args.len();
    let mut spine = vec![Step::Fun; h];
    let mut occurrences = Vec::new();
    let contracted = substitute(body, 0, arg, &mut spine, &mut occurrences);
    let after = Term::apps(contracted, args.into_iter().rev().cloned());
    Some(ReductionStep {
        before: t.clone(),
        after,
        redex_path: Path(vec![Step::Fun; h]),
        substituted_occurrences: occurrences,
    })
}

/// `body{0←arg}` for a closed `arg`; records the paths of the inserted copies.
fn substitute(
    body: &Term,
    depth: usize,
    arg: &Term,
    at: &mut Vec<Step>,
    occurrences: &mut Vec<Path>,
) -> Term {
    match body {
        Term::Var { index, .. } if *index == depth => {
            occurrences.push(Path(at.clone()));
            arg.clone()
        }
        Term::Var { index, name } if *index > depth => Term::var(index - 1, name.clone()),
        Term::Var { .. } => body.clone(),
        Term::Lam { name, body } => {
            at.push(Step::Body);
            let b = substitute(body, depth + 1, arg, at, occurrences);
            at.pop();
            Term::lam(name.clone(), b)
        }
        Term::App(f, a) => {
            at.push(Step::Fun);
            let f = substitute(f, depth, arg, at, occurrences);
            at.pop();
            at.push(Step::Arg);
            let a = substitute(a, depth, arg, at, occurrences);
            at.pop();
            Term::app(f, a)
        }
    }
}

//! The sequence-type IAM: a token walking the `★` occurrences of a fixed
//! derivation of `⊢ t : ★`. Derivations are upside down with respect to terms,
//! so moving up (red) towards the leaves corresponds to the λIAM going ↓.

use std::collections::HashSet;

use serde::Serialize;
use serde_json::json;

use crate::harness::{run_with, RunOptions, RunReport};
use crate::machine::{Dir, Label, Machine, Progress, Snapshot, StepOutcome};
use crate::multitypes::{render_tpath, Derivation, NodeId, Premise, Rule, TStep};
use crate::plist::List;
use crate::syntax::{Code, Path};
use crate::tokens::SpaceFootprint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SiamDir {
    /// Towards the leaves.
    UpRed,
    /// Towards the conclusion.
    DownBlue,
}

pub type TypePath = List<TStep>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiamState {
    pub node: NodeId,
    pub tpath: TypePath,
    pub dir: SiamDir,
}

impl SiamState {
    /// Hashable identity of the state.
    pub fn key(&self) -> (NodeId, Vec<TStep>, SiamDir) {
        (self.node, self.tpath.iter().copied().collect(), self.dir)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("the derivation does not conclude with type ★")]
pub struct NotStarDerivation;

pub struct Siam<'a> {
    code: &'a Code,
    deriv: &'a Derivation,
}

impl<'a> Siam<'a> {
    pub fn new(code: &'a Code, deriv: &'a Derivation) -> Result<Self, NotStarDerivation> {
        if !deriv.node(deriv.root()).ty.is_star() {
            return Err(NotStarDerivation);
        }
        Ok(Siam { code, deriv })
    }

    pub fn derivation(&self) -> &Derivation {
        self.deriv
    }

    fn left_of(&self, app: NodeId) -> NodeId {
        match &self.deriv.node(app).rule {
            Rule::App { left, .. } => *left,
            _ => unreachable!("premise links point to T-@ nodes"),
        }
    }

    fn right_of(&self, app: NodeId, i: usize) -> Option<NodeId> {
        match &self.deriv.node(app).rule {
            Rule::App { rights, .. } => rights.get(i.checked_sub(1)?).copied(),
            _ => None,
        }
    }

    /// The λIAM-level view of a state: the typed subterm and the λIAM direction.
    pub fn observable(&self, s: &SiamState) -> (Path, Dir) {
        let dir = match s.dir {
            SiamDir::UpRed => Dir::Down,
            SiamDir::DownBlue => Dir::Up,
        };
        (self.code.path(self.deriv.node(s.node).term_pos), dir)
    }

    /// The unique transition leading to `s`, if `s` is not initial.
    pub fn step_back(&self, s: &SiamState) -> Option<(Label, SiamState)> {
        let d = self.deriv;
        let n = d.node(s.node);
        let st = |node, tpath, dir| SiamState { node, tpath, dir };
        match s.dir {
            SiamDir::UpRed => match n.parent? {
                (p, Premise::Left) => match s.tpath.uncons()? {
                    (TStep::Target, rest) => Some((Label::P1, st(p, rest.clone(), SiamDir::UpRed))),
                    (TStep::Elem(i), rest) => {
                        Some((Label::Bt1, st(self.right_of(p, *i)?, rest.clone(), SiamDir::DownBlue)))
                    }
                },
                (p, Premise::Body) => {
                    Some((Label::P2, st(p, s.tpath.cons(TStep::Target), SiamDir::UpRed)))
                }
                (p, Premise::Right(i)) => {
                    Some((Label::Arg, st(self.left_of(p), s.tpath.cons(TStep::Elem(i)), SiamDir::DownBlue)))
                }
            },
            SiamDir::DownBlue => match &n.rule {
                Rule::Var { binder, ordinal, .. } => {
                    Some((Label::Bt2, st(*binder, s.tpath.cons(TStep::Elem(*ordinal)), SiamDir::UpRed)))
                }
                Rule::Lam { body, axioms } => match s.tpath.uncons()? {
                    (TStep::Target, rest) => Some((Label::P4, st(*body, rest.clone(), SiamDir::DownBlue))),
                    (TStep::Elem(i), rest) => {
                        let axiom = *axioms.get(i.checked_sub(1)?)?;
                        Some((Label::Var, st(axiom, rest.clone(), SiamDir::UpRed)))
                    }
                },
                Rule::App { left, .. } => {
                    Some((Label::P3, st(*left, s.tpath.cons(TStep::Target), SiamDir::DownBlue)))
                }
                Rule::LamStar => None,
            },
        }
    }
}

impl Machine for Siam<'_> {
    type State = SiamState;

    fn name(&self) -> &'static str {
        "siam"
    }

    fn code(&self) -> &Code {
        self.code
    }

    fn initial(&self) -> SiamState {
        SiamState { node: self.deriv.root(), tpath: List::new(), dir: SiamDir::UpRed }
    }

    fn step(&self, s: &SiamState) -> StepOutcome<SiamState> {
        let d = self.deriv;
        let n = d.node(s.node);
        let next = |label, node, tpath, dir| StepOutcome::Next {
            label,
            cost: 1,
            state: SiamState { node, tpath, dir },
        };
        match s.dir {
            SiamDir::UpRed => match &n.rule {
                Rule::App { left, .. } => next(Label::P1, *left, s.tpath.cons(TStep::Target), SiamDir::UpRed),
                Rule::Lam { body, axioms } => match s.tpath.uncons() {
                    Some((TStep::Target, rest)) => next(Label::P2, *body, rest.clone(), SiamDir::UpRed),
                    Some((TStep::Elem(i), rest)) => match axioms.get(i - 1) {
                        Some(&axiom) => next(Label::Bt2, axiom, rest.clone(), SiamDir::DownBlue),
                        None => StepOutcome::Stuck(format!("no axiom {i}")),
                    },
                    None => StepOutcome::Stuck("empty type path at an arrow".into()),
                },
                Rule::Var { binder, ordinal, .. } => {
                    next(Label::Var, *binder, s.tpath.cons(TStep::Elem(*ordinal)), SiamDir::DownBlue)
                }
                Rule::LamStar => StepOutcome::Final,
            },
            SiamDir::DownBlue => match n.parent {
                Some((p, Premise::Body)) => next(Label::P4, p, s.tpath.cons(TStep::Target), SiamDir::DownBlue),
                Some((p, Premise::Left)) => match s.tpath.uncons() {
                    Some((TStep::Target, rest)) => next(Label::P3, p, rest.clone(), SiamDir::DownBlue),
                    Some((TStep::Elem(i), rest)) => match self.right_of(p, *i) {
                        Some(r) => next(Label::Arg, r, rest.clone(), SiamDir::UpRed),
                        None => StepOutcome::Stuck(format!("no right premise {i}")),
                    },
                    None => StepOutcome::Stuck("empty type path at a left premise".into()),
                },
                Some((p, Premise::Right(i))) => {
                    next(Label::Bt1, self.left_of(p), s.tpath.cons(TStep::Elem(i)), SiamDir::UpRed)
                }
                None => StepOutcome::Stuck("reached the conclusion going down".into()),
            },
        }
    }

    fn footprint(&self, s: &SiamState, _deep: bool) -> SpaceFootprint {
        SpaceFootprint { lp_count: 0, marker_count: s.tpath.len(), deep_cells: 0 }
    }

    fn snapshot(&self, s: &SiamState) -> Snapshot {
        let n = self.deriv.node(s.node);
        let focus: Vec<TStep> = s.tpath.iter().copied().collect();
        let judgement = n.ty.render_with(&mut |p| (p == focus.as_slice()).then(|| "◂".to_string()));
        Snapshot {
            focus: n.term_pos,
            context: self.code.pretty_in_root(n.term_pos),
            dir: match s.dir {
                SiamDir::UpRed => "↑".into(),
                SiamDir::DownBlue => "↓".into(),
            },
            backtracking: false,
            columns: vec![
                ("node", format!("{} {}", s.node, n.rule.name())),
                ("type", judgement),
                ("tpath", render_tpath(&focus)),
            ],
            token: json!({
                "node": s.node,
                "rule": n.rule.name(),
                "tpath": render_tpath(&focus),
                "type": n.ty.to_string(),
            }),
        }
    }

    fn check(&self, s: &SiamState, _progress: &Progress) -> Result<(), String> {
        let n = self.deriv.node(s.node);
        match n.ty.at(s.tpath.iter()) {
            Some(t) if t.is_star() => Ok(()),
            _ => Err(format!("type path {} does not reach a ★", render_tpath(s.tpath.iter()))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CoverageReport {
    pub star_count: usize,
    pub visited: usize,
    /// First step revisiting an earlier state.
    pub first_repeat: Option<u64>,
    pub length: u64,
}

impl CoverageReport {
    /// Every `★` visited exactly once, in `★count − 1` transitions.
    pub fn complete(&self) -> bool {
        self.first_repeat.is_none()
            && self.visited == self.star_count
            && self.length + 1 == self.star_count as u64
    }
}

/// Runs the SIAM, recording the visited `★` occurrences in order.
pub fn run_coverage(
    m: &Siam<'_>,
    opts: &RunOptions,
) -> (RunReport, CoverageReport, Vec<(NodeId, Vec<TStep>)>) {
    let mut seen = HashSet::new();
    let mut order = Vec::new();
    let mut first_repeat = None;
    let report = run_with(m, opts, |v| {
        let (node, tpath, _) = v.state.key();
        if !seen.insert((node, tpath.clone())) && first_repeat.is_none() {
            first_repeat = Some(v.step);
        }
        order.push((node, tpath));
    });
    let coverage = CoverageReport {
        star_count: m.deriv.star_count(),
        visited: seen.len(),
        first_repeat,
        length: report.length,
    };
    (report, coverage, order)
}

/// The derivation with each `★` subscripted by its visit rank (from 1).
pub fn render_visit_order(code: &Code, d: &Derivation, order: &[(NodeId, Vec<TStep>)]) -> String {
    let rank: std::collections::HashMap<(NodeId, &[TStep]), usize> =
        order.iter().enumerate().map(|(i, (n, p))| ((*n, p.as_slice()), i + 1)).collect();
    d.render_with(code, &mut |id, p| rank.get(&(id, p)).map(|r| subscript(*r)))
}

fn subscript(n: usize) -> String {
    n.to_string().chars().map(|c| char::from_u32(0x2080 + c.to_digit(10).unwrap_or(0)).unwrap_or(c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multitypes::infer_star_derivation;
    use crate::syntax::parse_closed;

    fn setup(src: &str) -> (Code, Derivation) {
        let code = Code::new(parse_closed(src).unwrap()).unwrap();
        let d = infer_star_derivation(&code, 1000).unwrap();
        (code, d)
    }

    #[test]
    fn identity_is_final_at_once() {
        let (code, d) = setup("λx.x");
        let m = Siam::new(&code, &d).unwrap();
        let (r, cov, _) = run_coverage(&m, &RunOptions::checked(10));
        assert!(r.is_final());
        assert_eq!((cov.length, cov.visited, cov.star_count), (0, 1, 1));
    }

    #[test]
    fn ii_covers_all_stars() {
        let (code, d) = setup("(λx.x) (λy.y)");
        let m = Siam::new(&code, &d).unwrap();
        let (r, cov, _) = run_coverage(&m, &RunOptions::checked(100));
        assert!(r.is_final() && cov.complete(), "{cov:?}");
        assert_eq!(r.length, 4);
    }

    #[test]
    fn subscripts() {
        assert_eq!(subscript(19), "₁₉");
    }
}

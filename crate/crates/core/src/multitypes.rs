//! Sequence types (non-idempotent, order-sensitive intersection types),
//! derivations of `⊢ t : ★` built by subject expansion along the weak head
//! trace, and the two weight assignments predicting KAM and λIAM run lengths.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::syntax::{whnf_trace, Code, Path, Pos, ReduceError, ReductionStep, Shape, Step, Term};

#[derive(Clone, Debug)]
pub enum LinearType {
    Star,
    Arrow(Arc<Arrow>),
}

#[derive(Debug)]
pub struct Arrow {
    pub domain: Vec<LinearType>,
    pub target: LinearType,
    stars: usize,
}

pub type SequenceType = Vec<LinearType>;

impl LinearType {
    pub fn arrow(domain: SequenceType, target: LinearType) -> LinearType {
        let stars = seq_star_norm(&domain) + target.star_norm();
        LinearType::Arrow(Arc::new(Arrow { domain, target, stars }))
    }

    /// Number of `★` occurrences, `|τ|★`.
    pub fn star_norm(&self) -> usize {
        match self {
            LinearType::Star => 1,
            LinearType::Arrow(a) => a.stars,
        }
    }

    pub fn is_star(&self) -> bool {
        matches!(self, LinearType::Star)
    }

    pub fn as_arrow(&self) -> Option<&Arrow> {
        match self {
            LinearType::Star => None,
            LinearType::Arrow(a) => Some(a),
        }
    }

    /// The subtype reached by `path`.
    pub fn at<'a>(&self, path: impl IntoIterator<Item = &'a TStep>) -> Option<&LinearType> {
        let mut cur = self;
        for step in path {
            let a = cur.as_arrow()?;
            cur = match *step {
                TStep::Target => &a.target,
                TStep::Elem(i) => a.domain.get(i.checked_sub(1)?)?,
            };
        }
        Some(cur)
    }

    /// Every `★` occurrence, as type paths in left-to-right order.
    pub fn star_paths(&self) -> Vec<Vec<TStep>> {
        let mut out = Vec::new();
        self.collect_stars(&mut Vec::new(), &mut out);
        out
    }

    fn collect_stars(&self, prefix: &mut Vec<TStep>, out: &mut Vec<Vec<TStep>>) {
        match self {
            LinearType::Star => out.push(prefix.clone()),
            LinearType::Arrow(a) => {
                for (i, d) in a.domain.iter().enumerate() {
                    prefix.push(TStep::Elem(i + 1));
                    d.collect_stars(prefix, out);
                    prefix.pop();
                }
                prefix.push(TStep::Target);
                a.target.collect_stars(prefix, out);
                prefix.pop();
            }
        }
    }

    fn write(
        &self,
        prefix: &mut Vec<TStep>,
        annotate: &mut dyn FnMut(&[TStep]) -> Option<String>,
        out: &mut String,
    ) {
        match self {
            LinearType::Star => {
                out.push('★');
                if let Some(a) = annotate(prefix) {
                    out.push_str(&a);
                }
            }
            LinearType::Arrow(a) => {
                out.push('[');
                for (i, d) in a.domain.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    prefix.push(TStep::Elem(i + 1));
                    d.write(prefix, annotate, out);
                    prefix.pop();
                }
                out.push_str("]→");
                prefix.push(TStep::Target);
                a.target.write(prefix, annotate, out);
                prefix.pop();
            }
        }
    }

    /// Renders the type, appending `annotate(path)` after each `★`.
    pub fn render_with(&self, annotate: &mut dyn FnMut(&[TStep]) -> Option<String>) -> String {
        let mut out = String::new();
        self.write(&mut Vec::new(), annotate, &mut out);
        out
    }
}

impl PartialEq for LinearType {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (LinearType::Star, LinearType::Star) => true,
            (LinearType::Arrow(a), LinearType::Arrow(b)) => {
                Arc::ptr_eq(a, b)
                    || (a.stars == b.stars && a.target == b.target && a.domain == b.domain)
            }
            _ => false,
        }
    }
}

impl Eq for LinearType {}

impl fmt::Display for LinearType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(&mut |_| None))
    }
}

pub fn seq_star_norm(a: &[LinearType]) -> usize {
    a.iter().map(LinearType::star_norm).sum()
}

pub fn render_seq(a: &[LinearType]) -> String {
    let items: Vec<String> = a.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

/// One step of a path into a linear type: the target of an arrow, or the
/// `i`-th (1-based) element of its domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TStep {
    Target,
    Elem(usize),
}

impl fmt::Display for TStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TStep::Target => f.write_str("T"),
            TStep::Elem(i) => write!(f, "E{i}"),
        }
    }
}

pub fn render_tpath<'a>(path: impl IntoIterator<Item = &'a TStep>) -> String {
    let parts: Vec<String> = path.into_iter().map(ToString::to_string).collect();
    if parts.is_empty() {
        "ε".into()
    } else {
        parts.join("·")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TypeError {
    #[error(transparent)]
    Reduce(#[from] ReduceError),
    #[error("subject expansion lost track of the term at step {step}, path `{path}`")]
    ExpansionMismatch { step: usize, path: Path },
    #[error("derivation does not match the term at `{0}`")]
    Mismatch(Path),
}

/// Derivation trees as produced during expansion, before they are indexed.
#[derive(Clone, Debug)]
enum Tree {
    Var(LinearType),
    LamStar,
    Lam { ty: LinearType, body: Box<Tree> },
    App { ty: LinearType, left: Box<Tree>, rights: Vec<Tree> },
}

impl Tree {
    fn ty(&self) -> LinearType {
        match self {
            Tree::Var(ty) | Tree::Lam { ty, .. } | Tree::App { ty, .. } => ty.clone(),
            Tree::LamStar => LinearType::Star,
        }
    }
}

/// Derivation rule at a node, with links to premises.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rule {
    /// `ordinal` is the 1-based rank of this axiom among those of its binder.
    Var { index: usize, binder: NodeId, ordinal: usize },
    LamStar,
    /// `axioms` lists the axioms of the bound variable in left-to-right order.
    Lam { body: NodeId, axioms: Vec<NodeId> },
    App { left: NodeId, rights: Vec<NodeId> },
}

impl Rule {
    pub fn name(&self) -> &'static str {
        match self {
            Rule::Var { .. } => "T-var",
            Rule::LamStar => "T-λ★",
            Rule::Lam { .. } => "T-λ",
            Rule::App { .. } => "T-@",
        }
    }
}

pub type NodeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Premise {
    Body,
    Left,
    /// 1-based.
    Right(usize),
}

/// Type environment keyed by de Bruijn index.
pub type Env = BTreeMap<usize, SequenceType>;

#[derive(Clone, Debug)]
pub struct DNode {
    pub rule: Rule,
    pub term_pos: Pos,
    pub ty: LinearType,
    pub env: Env,
    pub parent: Option<(NodeId, Premise)>,
}

/// A derivation of `⊢ t : ★` for a closed program, stored in pre-order (root is 0).
#[derive(Clone, Debug)]
pub struct Derivation {
    nodes: Vec<DNode>,
}

impl Derivation {
    pub fn root(&self) -> NodeId {
        0
    }

    pub fn node(&self, id: NodeId) -> &DNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[DNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Total number of `★` occurrences in right-hand types.
    pub fn star_count(&self) -> usize {
        self.nodes.iter().map(|n| n.ty.star_norm()).sum()
    }

    fn from_tree(code: &Code, tree: &Tree) -> Result<Derivation, TypeError> {
        let mut b = Builder { code, nodes: Vec::new(), axioms: Vec::new() };
        b.build(tree, code.root(), None, &mut Vec::new())?;
        let Builder { mut nodes, axioms, .. } = b;
        for (id, ax) in axioms.into_iter().enumerate() {
            if let Rule::Lam { axioms, .. } = &mut nodes[id].rule {
                *axioms = ax;
            }
        }
        let mut d = Derivation { nodes };
        d.fill_envs(0);
        Ok(d)
    }

    fn fill_envs(&mut self, id: NodeId) -> Env {
        let env = match self.nodes[id].rule.clone() {
            Rule::Var { index, .. } => Env::from([(index, vec![self.nodes[id].ty.clone()])]),
            Rule::LamStar => Env::new(),
            Rule::Lam { body, .. } => {
                let inner = self.fill_envs(body);
                inner.into_iter().filter(|&(k, _)| k > 0).map(|(k, v)| (k - 1, v)).collect()
            }
            Rule::App { left, rights } => {
                let mut env = self.fill_envs(left);
                for r in rights {
                    merge_env(&mut env, self.fill_envs(r));
                }
                env
            }
        };
        self.nodes[id].env = env.clone();
        env
    }

    /// KAM weight: axioms count 1, abstractions and applications add 1.
    pub fn weight_kam(&self) -> u64 {
        self.weigh(self.root(), &|n| match n.rule {
            Rule::LamStar => 0,
            _ => 1,
        })
    }

    /// λIAM weight: every node but `T-λ★` contributes the `★` count of its type.
    pub fn weight_iam(&self) -> u64 {
        self.weigh(self.root(), &|n| match n.rule {
            Rule::LamStar => 0,
            _ => n.ty.star_norm() as u64,
        })
    }

    fn weigh(&self, id: NodeId, w: &dyn Fn(&DNode) -> u64) -> u64 {
        let n = &self.nodes[id];
        w(n) + self.premises(id).into_iter().map(|p| self.weigh(p, w)).sum::<u64>()
    }

    pub fn premises(&self, id: NodeId) -> Vec<NodeId> {
        match &self.nodes[id].rule {
            Rule::Var { .. } | Rule::LamStar => Vec::new(),
            Rule::Lam { body, .. } => vec![*body],
            Rule::App { left, rights } => std::iter::once(*left).chain(rights.iter().copied()).collect(),
        }
    }

    /// Local correctness of every rule instance, environments, axiom ordering
    /// and relevance. Returns the first violation.
    pub fn check(&self, code: &Code) -> Result<(), String> {
        if !self.nodes[0].ty.is_star() {
            return Err("conclusion type is not ★".into());
        }
        if !self.nodes[0].env.is_empty() {
            return Err("conclusion environment is not empty".into());
        }
        for (id, n) in self.nodes.iter().enumerate() {
            self.check_node(code, id, n).map_err(|e| format!("node {id} at `{}`: {e}", code.path(n.term_pos)))?;
        }
        Ok(())
    }

    fn check_node(&self, code: &Code, id: NodeId, n: &DNode) -> Result<(), String> {
        for (i, p) in self.premises(id).into_iter().enumerate() {
            let expect = match (&n.rule, i) {
                (Rule::Lam { .. }, _) => Premise::Body,
                (_, 0) => Premise::Left,
                (_, i) => Premise::Right(i),
            };
            if self.nodes[p].parent != Some((id, expect)) {
                return Err(format!("premise {i} has a wrong parent link"));
            }
        }
        match (&n.rule, code.shape(n.term_pos)) {
            (Rule::Var { index, binder, ordinal }, Shape::Var { index: ti, .. }) => {
                if *index != ti {
                    return Err("axiom index differs from the term".into());
                }
                let Rule::Lam { axioms, .. } = &self.nodes[*binder].rule else {
                    return Err("axiom binder is not a T-λ".into());
                };
                if axioms.get(ordinal - 1) != Some(&id) {
                    return Err("axiom is not registered at its ordinal".into());
                }
                if n.env != Env::from([(*index, vec![n.ty.clone()])]) {
                    return Err("axiom environment".into());
                }
            }
            (Rule::LamStar, Shape::Lam { .. }) => {
                if !n.ty.is_star() || !n.env.is_empty() {
                    return Err("T-λ★ must have type ★ and an empty environment".into());
                }
            }
            (Rule::Lam { body, axioms }, Shape::Lam { body: tb }) => {
                let b = &self.nodes[*body];
                if b.term_pos != tb {
                    return Err("body premise types another subterm".into());
                }
                let Some(a) = n.ty.as_arrow() else {
                    return Err("T-λ type is not an arrow".into());
                };
                if a.target != b.ty {
                    return Err("T-λ target differs from the body type".into());
                }
                let bound = b.env.get(&0).cloned().unwrap_or_default();
                if bound != a.domain {
                    return Err("T-λ domain differs from the body environment".into());
                }
                let axiom_types: Vec<LinearType> = axioms.iter().map(|&x| self.nodes[x].ty.clone()).collect();
                if axiom_types != a.domain {
                    return Err("axiom ordering violated".into());
                }
                let shifted: Env = b.env.iter().filter(|(k, _)| **k > 0).map(|(k, v)| (k - 1, v.clone())).collect();
                if shifted != n.env {
                    return Err("T-λ environment".into());
                }
            }
            (Rule::App { left, rights }, Shape::App { fun, arg }) => {
                let l = &self.nodes[*left];
                if l.term_pos != fun || rights.iter().any(|&r| self.nodes[r].term_pos != arg) {
                    return Err("premises type other subterms".into());
                }
                let Some(a) = l.ty.as_arrow() else {
                    return Err("left premise type is not an arrow".into());
                };
                if a.target != n.ty {
                    return Err("T-@ type differs from the left target".into());
                }
                let right_types: Vec<LinearType> = rights.iter().map(|&r| self.nodes[r].ty.clone()).collect();
                if right_types != a.domain {
                    return Err("right premises do not match the domain".into());
                }
                let mut env = l.env.clone();
                for &r in rights {
                    merge_env(&mut env, self.nodes[r].env.clone());
                }
                if env != n.env {
                    return Err("T-@ environment".into());
                }
            }
            _ => return Err(format!("{} does not fit the term shape", n.rule.name())),
        }
        if let Some(k) = n.env.keys().find(|&&k| k >= code.binder_depth(n.term_pos)) {
            return Err(format!("environment mentions index {k}, which is not free"));
        }
        Ok(())
    }

    /// Indented tree, conclusion first. `annotate` may decorate each `★`.
    pub fn render_with(
        &self,
        code: &Code,
        annotate: &mut dyn FnMut(NodeId, &[TStep]) -> Option<String>,
    ) -> String {
        let mut out = String::new();
        let mut stack = vec![(self.root(), 0usize)];
        while let Some((id, depth)) = stack.pop() {
            let n = &self.nodes[id];
            let ty = n.ty.render_with(&mut |p| annotate(id, p));
            let binders: Vec<Pos> = code.enclosing_binders(n.term_pos).collect();
            let env: Vec<String> = n
                .env
                .iter()
                .rev()
                .map(|(k, v)| format!("{}:{}", code.name(binders[*k]), render_seq(v)))
                .collect();
            out.push_str(&format!(
                "{:indent$}{}  {}⊢ {} : {}\n",
                "",
                n.rule.name(),
                if env.is_empty() { String::new() } else { env.join(", ") + " " },
                code.pretty(n.term_pos),
                ty,
                indent = 2 * depth
            ));
            for p in self.premises(id).into_iter().rev() {
                stack.push((p, depth + 1));
            }
        }
        out
    }

    pub fn render(&self, code: &Code) -> String {
        self.render_with(code, &mut |_, _| None)
    }

    pub fn to_json(&self, code: &Code) -> Value {
        self.node_json(code, self.root())
    }

    fn node_json(&self, code: &Code, id: NodeId) -> Value {
        let n = &self.nodes[id];
        let env: serde_json::Map<String, Value> =
            n.env.iter().map(|(k, v)| (k.to_string(), Value::String(render_seq(v)))).collect();
        let premises: Vec<Value> = self.premises(id).into_iter().map(|p| self.node_json(code, p)).collect();
        let mut v = json!({
            "id": id,
            "rule": n.rule.name(),
            "termPos": code.path(n.term_pos).to_string(),
            "subterm": code.pretty(n.term_pos),
            "type": n.ty.to_string(),
            "env": env,
            "premises": premises,
        });
        if let Rule::Var { ordinal, .. } = n.rule {
            v["axiomOrdinal"] = json!(ordinal);
        }
        v
    }
}

fn merge_env(into: &mut Env, from: Env) {
    for (k, v) in from {
        into.entry(k).or_default().extend(v);
    }
}

struct Builder<'c> {
    code: &'c Code,
    nodes: Vec<DNode>,
    /// Per node, the axioms collected so far if it is a `T-λ`.
    axioms: Vec<Vec<NodeId>>,
}

impl Builder<'_> {
    fn build(
        &mut self,
        tree: &Tree,
        pos: Pos,
        parent: Option<(NodeId, Premise)>,
        binders: &mut Vec<NodeId>,
    ) -> Result<NodeId, TypeError> {
        let id = self.nodes.len();
        let mismatch = || TypeError::Mismatch(self.code.path(pos));
        let rule = match (tree, self.code.shape(pos)) {
            (Tree::Var(_), Shape::Var { index, .. }) => {
                let binder = *binders.iter().rev().nth(index).ok_or_else(mismatch)?;
                self.axioms[binder].push(id);
                Rule::Var { index, binder, ordinal: self.axioms[binder].len() }
            }
            (Tree::LamStar, Shape::Lam { .. }) => Rule::LamStar,
            (Tree::Lam { .. }, Shape::Lam { .. }) => Rule::Lam { body: 0, axioms: Vec::new() },
            (Tree::App { .. }, Shape::App { .. }) => Rule::App { left: 0, rights: Vec::new() },
            _ => return Err(mismatch()),
        };
        self.nodes.push(DNode { rule, term_pos: pos, ty: tree.ty(), env: Env::new(), parent });
        self.axioms.push(Vec::new());
        match (tree, self.code.shape(pos)) {
            (Tree::Lam { body, .. }, Shape::Lam { body: tb }) => {
                binders.push(id);
                let b = self.build(body, tb, Some((id, Premise::Body)), binders)?;
                binders.pop();
                self.nodes[id].rule = Rule::Lam { body: b, axioms: Vec::new() };
            }
            (Tree::App { left, rights, .. }, Shape::App { fun, arg }) => {
                let l = self.build(left, fun, Some((id, Premise::Left)), binders)?;
                let mut rs = Vec::with_capacity(rights.len());
                for (i, r) in rights.iter().enumerate() {
                    rs.push(self.build(r, arg, Some((id, Premise::Right(i + 1))), binders)?);
                }
                self.nodes[id].rule = Rule::App { left: l, rights: rs };
            }
            _ => {}
        }
        Ok(id)
    }
}

/// A derivation of `⊢ t : ★`, built by typing the weak head normal form with
/// `T-λ★` and expanding backwards along the reduction sequence.
pub fn infer_star_derivation(code: &Code, fuel: u64) -> Result<Derivation, TypeError> {
    let steps = whnf_trace(code.term(), fuel)?;
    let mut tree = Tree::LamStar;
    for (j, step) in steps.iter().enumerate().rev() {
        tree = expand(tree, step).map_err(|path| TypeError::ExpansionMismatch { step: j, path })?;
    }
    Derivation::from_tree(code, &tree)
}

/// Turns a derivation of `after` into one of `before`.
fn expand(tree: Tree, step: &ReductionStep) -> Result<Tree, Path> {
    let mut head_term = &step.before;
    let mut h = 0;
    while let Term::App(f, _) = head_term {
        if let Term::App(..) = **f {
            head_term = f;
            h += 1;
        } else {
            break;
        }
    }
    let Term::App(redex_fun, arg) = head_term else {
        return Err(Path::root());
    };
    let Term::Lam { body: u, .. } = &**redex_fun else {
        return Err(Path::root());
    };
    debug_assert!(arg.is_closed());

    let mut tree = tree;
    let mut slot = &mut tree;
    for _ in 0..h {
        match slot {
            Tree::App { left, .. } => slot = left,
            _ => return Err(Path(vec![Step::Fun; h])),
        }
    }
    let head = std::mem::replace(slot, Tree::LamStar);
    let mut at = vec![Step::Fun; h];
    let mut cuts = Vec::new();
    let body = cut(head, u, 0, &mut at, &mut cuts)?;

    let allowed: HashSet<&Path> = step.substituted_occurrences.iter().collect();
    if let Some((p, _)) = cuts.iter().find(|(p, _)| !allowed.contains(p)) {
        return Err(p.clone());
    }
    let domain: SequenceType = cuts.iter().map(|(_, d)| d.ty()).collect();
    let body_ty = body.ty();
    *slot = Tree::App {
        ty: body_ty.clone(),
        left: Box::new(Tree::Lam { ty: LinearType::arrow(domain, body_ty), body: Box::new(body) }),
        rights: cuts.into_iter().map(|(_, d)| d).collect(),
    };
    Ok(tree)
}

/// Walks `u` against a derivation of `u{x←w}`, replacing each typed copy of
/// `w` by an axiom and collecting the copies in left-to-right leaf order.
fn cut(d: Tree, u: &Term, depth: usize, at: &mut Vec<Step>, cuts: &mut Vec<(Path, Tree)>) -> Result<Tree, Path> {
    match (u, d) {
        (Term::Var { index, .. }, d) if *index == depth => {
            let ty = d.ty();
            cuts.push((Path(at.clone()), d));
            Ok(Tree::Var(ty))
        }
        (Term::Var { .. }, d @ Tree::Var(_)) => Ok(d),
        (Term::Lam { .. }, Tree::LamStar) => Ok(Tree::LamStar),
        (Term::Lam { body, .. }, Tree::Lam { ty, body: b }) => {
            at.push(Step::Body);
            let b = cut(*b, body, depth + 1, at, cuts)?;
            at.pop();
            Ok(Tree::Lam { ty, body: Box::new(b) })
        }
        (Term::App(f, a), Tree::App { ty, left, rights }) => {
            at.push(Step::Fun);
            let left = cut(*left, f, depth, at, cuts)?;
            at.pop();
            at.push(Step::Arg);
            let rights = rights
                .into_iter()
                .map(|r| cut(r, a, depth, at, cuts))
                .collect::<Result<Vec<_>, _>>()?;
            at.pop();
            Ok(Tree::App { ty, left: Box::new(left), rights })
        }
        _ => Err(Path(at.clone())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_closed;

    fn derive(src: &str) -> (Code, Derivation) {
        let code = Code::new(parse_closed(src).unwrap()).unwrap();
        let d = infer_star_derivation(&code, 1000).unwrap();
        d.check(&code).unwrap();
        (code, d)
    }

    #[test]
    fn star_norms() {
        let s = LinearType::Star;
        assert_eq!(s.star_norm(), 1);
        assert_eq!(LinearType::arrow(vec![], s.clone()).star_norm(), 1);
        let a = LinearType::arrow(vec![s.clone()], s.clone());
        assert_eq!(a.star_norm(), 2);
        assert_eq!(a.to_string(), "[★]→★");
        assert_eq!(LinearType::arrow(vec![a.clone(), s.clone()], s).to_string(), "[[★]→★, ★]→★");
    }

    #[test]
    fn identity_is_a_single_lam_star() {
        let (_, d) = derive("λx.x");
        assert_eq!(d.len(), 1);
        assert_eq!(d.node(0).rule, Rule::LamStar);
        assert_eq!((d.weight_kam(), d.weight_iam()), (0, 0));
    }

    #[test]
    fn ii() {
        let (code, d) = derive("(λx.x) (λy.y)");
        assert_eq!(d.len(), 4);
        assert_eq!((d.weight_kam(), d.weight_iam()), (3, 4));
        assert_eq!(d.star_count(), 5);
        let text = d.render(&code);
        assert!(text.starts_with("T-@  ⊢ (λx.x) (λy.y) : ★\n  T-λ  ⊢ λx.x : [★]→★\n"), "{text}");
    }

    #[test]
    fn occurrences_under_lam_star_are_untyped() {
        let (_, d) = derive("(λx.λy.x) (λz.z)");
        let Rule::App { left, rights } = &d.node(0).rule else { panic!() };
        assert!(rights.is_empty());
        assert_eq!(d.node(*left).ty.to_string(), "[]→★");
    }

    #[test]
    fn duplication_domain_follows_axiom_order() {
        let (_, d) = derive("(λx.x x) (λy.y)");
        let Rule::App { left, .. } = &d.node(0).rule else { panic!() };
        assert_eq!(d.node(*left).ty.to_string(), "[[★]→★, ★]→★");
        assert_eq!(d.star_count(), 13);
    }

    #[test]
    fn diverging_terms_are_untypable() {
        let code = Code::new(parse_closed("(λx.x x) (λx.x x)").unwrap()).unwrap();
        assert!(matches!(infer_star_derivation(&code, 100), Err(TypeError::Reduce(ReduceError::Diverged(100)))));
    }

    #[test]
    fn type_paths_resolve_to_stars() {
        let (_, d) = derive("(λy.λx.x y) (λw.w) (λz.z)");
        assert_eq!(d.star_count(), 19);
        for n in d.nodes() {
            let paths = n.ty.star_paths();
            assert_eq!(paths.len(), n.ty.star_norm());
            for p in paths {
                assert!(n.ty.at(&p).unwrap().is_star());
            }
        }
    }
}

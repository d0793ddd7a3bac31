use std::fmt;

use super::print::{render, View};
use super::{Path, Step, SyntaxError, Term};

/// A subterm occurrence of a [`Code`]. Equivalent to its root-relative [`Path`],
/// which [`Code::path`] recovers; stored as an index so moves are O(1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pos(u32);

impl Pos {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// `inner_level` counts the Arg steps between the binder and this occurrence.
    Var { index: usize, binder: Pos, inner_level: usize },
    Lam { body: Pos },
    App { fun: Pos, arg: Pos },
}

#[derive(Clone, Debug)]
struct Node {
    shape: Shape,
    parent: Option<(Pos, Step)>,
    level: usize,
    name: String,
}

/// An immutable closed program, flattened so that machines can move over it.
#[derive(Clone, Debug)]
pub struct Code {
    term: Term,
    nodes: Vec<Node>,
}

impl Code {
    pub fn new(term: Term) -> Result<Code, SyntaxError> {
        if !term.is_closed() {
            return Err(SyntaxError::NotClosed);
        }
        let mut code = Code { nodes: Vec::with_capacity(term.size()), term: Term::var(0, "") };
        let mut binders = Vec::new();
        code.push(&term, None, 0, &mut binders);
        code.term = term;
        Ok(code)
    }

    fn push(
        &mut self,
        t: &Term,
        parent: Option<(Pos, Step)>,
        level: usize,
        binders: &mut Vec<(Pos, usize)>,
    ) -> Pos {
        let id = Pos(self.nodes.len() as u32);
        let (shape, name) = match t {
            Term::Var { index, name } => {
                let (binder, binder_level) = binders[binders.len() - 1 - index];
                let inner_level = level - binder_level;
                (Shape::Var { index: *index, binder, inner_level }, name.clone())
            }
            // placeholders, patched once the children exist
            Term::Lam { name, .. } => (Shape::Lam { body: id }, name.clone()),
            Term::App(..) => (Shape::App { fun: id, arg: id }, String::new()),
        };
        self.nodes.push(Node { shape, parent, level, name });
        match t {
            Term::Var { .. } => {}
            Term::Lam { body, .. } => {
                binders.push((id, level));
                let b = self.push(body, Some((id, Step::Body)), level, binders);
                binders.pop();
                self.nodes[id.index()].shape = Shape::Lam { body: b };
            }
            Term::App(f, a) => {
                let f = self.push(f, Some((id, Step::Fun)), level, binders);
                let a = self.push(a, Some((id, Step::Arg)), level + 1, binders);
                self.nodes[id.index()].shape = Shape::App { fun: f, arg: a };
            }
        }
        id
    }

    pub fn term(&self) -> &Term {
        &self.term
    }

    pub fn root(&self) -> Pos {
        Pos(0)
    }

    /// Number of constructors of the program, `|t|`.
    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    pub fn positions(&self) -> impl Iterator<Item = Pos> {
        (0..self.nodes.len() as u32).map(Pos)
    }

    pub fn shape(&self, p: Pos) -> Shape {
        self.nodes[p.index()].shape
    }

    pub fn parent(&self, p: Pos) -> Option<(Pos, Step)> {
        self.nodes[p.index()].parent
    }

    pub fn level(&self, p: Pos) -> usize {
        self.nodes[p.index()].level
    }

    /// Number of abstractions enclosing `p`.
    pub fn binder_depth(&self, p: Pos) -> usize {
        self.enclosing_binders(p).count()
    }

    /// Abstractions enclosing `p`, innermost first; entry `i` binds de Bruijn index `i`.
    pub fn enclosing_binders(&self, p: Pos) -> impl Iterator<Item = Pos> + '_ {
        std::iter::successors(self.parent(p), |&(up, _)| self.parent(up))
            .filter(|&(_, step)| step == Step::Body)
            .map(|(up, _)| up)
    }

    /// Display name of a variable or binder.
    pub fn name(&self, p: Pos) -> &str {
        &self.nodes[p.index()].name
    }

    pub fn is_lam(&self, p: Pos) -> bool {
        matches!(self.shape(p), Shape::Lam { .. })
    }

    pub fn path(&self, p: Pos) -> Path {
        let mut steps = Vec::new();
        let mut cur = p;
        while let Some((up, step)) = self.parent(cur) {
            steps.push(step);
            cur = up;
        }
        steps.reverse();
        Path(steps)
    }

    pub fn pos_of(&self, path: &Path) -> Result<Pos, SyntaxError> {
        let mut p = self.root();
        for step in path.steps() {
            p = match (self.shape(p), step) {
                (Shape::App { fun, .. }, Step::Fun) => fun,
                (Shape::App { arg, .. }, Step::Arg) => arg,
                (Shape::Lam { body }, Step::Body) => body,
                _ => return Err(SyntaxError::InvalidPath(path.to_string())),
            };
        }
        Ok(p)
    }

    /// The subterm rooted at `p`.
    pub fn subterm(&self, p: Pos) -> Term {
        match self.shape(p) {
            Shape::Var { index, .. } => Term::var(index, self.name(p)),
            Shape::Lam { body } => Term::lam(self.name(p), self.subterm(body)),
            Shape::App { fun, arg } => Term::app(self.subterm(fun), self.subterm(arg)),
        }
    }

    /// Size of the subterm rooted at `p`.
    pub fn subterm_size(&self, p: Pos) -> usize {
        match self.shape(p) {
            Shape::Var { .. } => 1,
            Shape::Lam { body } => 1 + self.subterm_size(body),
            Shape::App { fun, arg } => 1 + self.subterm_size(fun) + self.subterm_size(arg),
        }
    }

    pub fn pretty(&self, p: Pos) -> String {
        self.render(p, None)
    }

    /// The subterm at `within` with the occurrence `hole` replaced by `⟨·⟩`.
    pub fn pretty_context(&self, within: Pos, hole: Pos) -> String {
        self.render(within, Some(hole))
    }

    /// The whole program with `hole` replaced by `⟨·⟩`.
    pub fn pretty_in_root(&self, hole: Pos) -> String {
        self.render(self.root(), Some(hole))
    }

    fn render(&self, root: Pos, hole: Option<Pos>) -> String {
        render(root, &|p: Pos| {
            if Some(p) == hole {
                return View::Hole;
            }
            match self.shape(p) {
                Shape::Var { .. } => View::Var(self.name(p)),
                Shape::Lam { body } => View::Lam(self.name(p), body),
                Shape::App { fun, arg } => View::App(fun, arg),
            }
        })
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty(self.root()))
    }
}

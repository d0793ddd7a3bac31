use std::fmt;

/// A λ-term with de Bruijn indices. Display names ride along for printing only.
#[derive(Clone, Debug)]
pub enum Term {
    Var { index: usize, name: String },
    Lam { name: String, body: Box<Term> },
    App(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(index: usize, name: impl Into<String>) -> Term {
        Term::Var { index, name: name.into() }
    }

    pub fn lam(name: impl Into<String>, body: Term) -> Term {
        Term::Lam { name: name.into(), body: Box::new(body) }
    }

    pub fn app(fun: Term, arg: Term) -> Term {
        Term::App(Box::new(fun), Box::new(arg))
    }

    /// `head a1 ... an`, left-nested.
    pub fn apps(head: Term, args: impl IntoIterator<Item = Term>) -> Term {
        args.into_iter().fold(head, Term::app)
    }

    pub fn identity(name: &str) -> Term {
        Term::lam(name, Term::var(0, name))
    }

    /// Number of constructors.
    pub fn size(&self) -> usize {
        match self {
            Term::Var { .. } => 1,
            Term::Lam { body, .. } => 1 + body.size(),
            Term::App(f, a) => 1 + f.size() + a.size(),
        }
    }

    pub fn is_lam(&self) -> bool {
        matches!(self, Term::Lam { .. })
    }

    /// True when every index points at an enclosing binder.
    pub fn is_closed(&self) -> bool {
        self.closed_under(0)
    }

    fn closed_under(&self, depth: usize) -> bool {
        match self {
            Term::Var { index, .. } => *index < depth,
            Term::Lam { body, .. } => body.closed_under(depth + 1),
            Term::App(f, a) => f.closed_under(depth) && a.closed_under(depth),
        }
    }
}

/// Equality of de Bruijn skeletons; display names are ignored.
impl PartialEq for Term {
    fn eq(&self, other: &Term) -> bool {
        match (self, other) {
            (Term::Var { index: i, .. }, Term::Var { index: j, .. }) => i == j,
            (Term::Lam { body: b, .. }, Term::Lam { body: c, .. }) => b == c,
            (Term::App(f, a), Term::App(g, b)) => f == g && a == b,
            _ => false,
        }
    }
}

impl Eq for Term {}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::print::pretty(self))
    }
}

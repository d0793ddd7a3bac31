use super::Term;

pub const HOLE: &str = "⟨·⟩";

/// One node of a printable tree: a term, or a term with one occurrence replaced by the hole.
pub(crate) enum View<'a, N> {
    Var(&'a str),
    Lam(&'a str, N),
    App(N, N),
    Hole,
}

/// Prints with `λx.` binders, left-nested application and minimal parentheses.
pub(crate) fn render<'a, N: Copy>(root: N, view: &impl Fn(N) -> View<'a, N>) -> String {
    let mut out = String::new();
    go(root, view, &mut out);
    out
}

fn go<'a, N: Copy>(n: N, view: &impl Fn(N) -> View<'a, N>, out: &mut String) {
    match view(n) {
        View::Var(x) => out.push_str(x),
        View::Hole => out.push_str(HOLE),
        View::Lam(x, body) => {
            out.push('λ');
            out.push_str(x);
            out.push('.');
            go(body, view, out);
        }
        View::App(f, a) => {
            let paren_f = matches!(view(f), View::Lam(..));
            let paren_a = matches!(view(a), View::Lam(..) | View::App(..));
            wrap(f, paren_f, view, out);
            out.push(' ');
            wrap(a, paren_a, view, out);
        }
    }
}

fn wrap<'a, N: Copy>(n: N, paren: bool, view: &impl Fn(N) -> View<'a, N>, out: &mut String) {
    if paren {
        out.push('(');
    }
    go(n, view, out);
    if paren {
        out.push(')');
    }
}

pub fn pretty(t: &Term) -> String {
    render(t, &|t: &Term| match t {
        Term::Var { name, .. } => View::Var(name),
        Term::Lam { name, body } => View::Lam(name, &**body),
        Term::App(f, a) => View::App(&**f, &**a),
    })
}

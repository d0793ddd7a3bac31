use std::collections::{BTreeMap, HashMap};

use super::{SyntaxError, Term};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Lambda,
    Dot,
    Open,
    Close,
    Ident(String),
    Eof,
}

#[derive(Clone, Copy, Debug)]
struct Loc {
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<(Tok, Loc)>, SyntaxError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1, 1);
    while let Some(&c) = chars.peek() {
        let loc = Loc { line, col };
        let tok = match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
                continue;
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
                continue;
            }
            '\\' | 'λ' => Tok::Lambda,
            '.' => Tok::Dot,
            '(' => Tok::Open,
            ')' => Tok::Close,
            c if c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' || c == '\'' {
                        name.push(c);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                out.push((Tok::Ident(name), loc));
                continue;
            }
            other => {
                return Err(SyntaxError::Syntax {
                    line,
                    col,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        chars.next();
        col += 1;
        out.push((tok, loc));
    }
    out.push((Tok::Eof, Loc { line, col }));
    Ok(out)
}

/// Named syntax tree, before binder resolution.
#[derive(Debug)]
enum Surface {
    Ident(String),
    Lam(String, Box<Surface>),
    App(Box<Surface>, Box<Surface>),
}

struct Parser {
    toks: Vec<(Tok, Loc)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn error(&self, msg: impl Into<String>) -> SyntaxError {
        let loc = self.toks[self.at].1;
        SyntaxError::Syntax { line: loc.line, col: loc.col, msg: msg.into() }
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), SyntaxError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn term(&mut self) -> Result<Surface, SyntaxError> {
        if *self.peek() == Tok::Lambda {
            return self.lam();
        }
        let mut acc = self.atom()?;
        loop {
            match self.peek() {
                Tok::Ident(_) | Tok::Open => {
                    let arg = self.atom()?;
                    acc = Surface::App(Box::new(acc), Box::new(arg));
                }
                // a trailing abstraction extends to the right as far as possible
                Tok::Lambda => {
                    let arg = self.lam()?;
                    return Ok(Surface::App(Box::new(acc), Box::new(arg)));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn lam(&mut self) -> Result<Surface, SyntaxError> {
        self.expect(Tok::Lambda, "`\\` or `λ`")?;
        let mut names = Vec::new();
        while let Tok::Ident(name) = self.peek() {
            names.push(name.clone());
            self.bump();
        }
        if names.is_empty() {
            return Err(self.error("expected a binder name"));
        }
        self.expect(Tok::Dot, "`.`")?;
        let body = self.term()?;
        Ok(names
            .into_iter()
            .rev()
            .fold(body, |b, n| Surface::Lam(n, Box::new(b))))
    }

    fn atom(&mut self) -> Result<Surface, SyntaxError> {
        match self.bump() {
            Tok::Ident(name) => Ok(Surface::Ident(name)),
            Tok::Open => {
                let t = self.term()?;
                self.expect(Tok::Close, "`)`")?;
                Ok(t)
            }
            _ => {
                self.at = self.at.saturating_sub(1);
                Err(self.error("expected a variable, `(` or an abstraction"))
            }
        }
    }
}

fn parse_surface(text: &str) -> Result<Surface, SyntaxError> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let t = p.term()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error("unexpected input after term"));
    }
    Ok(t)
}

/// Expands definitions on demand, each into a closed term, detecting cycles.
struct Definitions<'a> {
    source: &'a BTreeMap<String, String>,
    done: HashMap<String, Term>,
    active: Vec<String>,
}

impl Definitions<'_> {
    fn get(&mut self, name: &str) -> Result<Option<Term>, SyntaxError> {
        if let Some(t) = self.done.get(name) {
            return Ok(Some(t.clone()));
        }
        let Some(text) = self.source.get(name) else {
            return Ok(None);
        };
        if self.active.iter().any(|n| n == name) {
            return Err(SyntaxError::DefinitionCycle(name.to_string()));
        }
        self.active.push(name.to_string());
        let surface = parse_surface(text)?;
        let t = self.convert(&surface, &mut Vec::new())?;
        self.active.pop();
        self.done.insert(name.to_string(), t.clone());
        Ok(Some(t))
    }

    fn convert(&mut self, s: &Surface, scope: &mut Vec<String>) -> Result<Term, SyntaxError> {
        match s {
            Surface::Ident(name) => {
                if let Some(pos) = scope.iter().rev().position(|n| n == name) {
                    return Ok(Term::var(pos, name.clone()));
                }
                self.get(name)?
                    .ok_or_else(|| SyntaxError::UnboundIdentifier(name.clone()))
            }
            Surface::Lam(name, body) => {
                scope.push(name.clone());
                let body = self.convert(body, scope);
                scope.pop();
                Ok(Term::lam(name.clone(), body?))
            }
            Surface::App(f, a) => Ok(Term::app(self.convert(f, scope)?, self.convert(a, scope)?)),
        }
    }
}

/// Parses a closed term. Identifiers not bound by an enclosing λ are looked up
/// in `definitions`, whose bodies must themselves be closed up to other definitions.
pub fn parse(text: &str, definitions: &BTreeMap<String, String>) -> Result<Term, SyntaxError> {
    let surface = parse_surface(text)?;
    let mut defs = Definitions { source: definitions, done: HashMap::new(), active: Vec::new() };
    defs.convert(&surface, &mut Vec::new())
}

/// Parses a term with no definitions in scope.
pub fn parse_closed(text: &str) -> Result<Term, SyntaxError> {
    parse(text, &BTreeMap::new())
}

/// Reads a definitions file: statements `name = term;`, with `#` line comments.
pub fn parse_definitions(text: &str) -> Result<BTreeMap<String, String>, SyntaxError> {
    let stripped: String = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("\n");
    let mut defs = BTreeMap::new();
    for stmt in stripped.split(';') {
        if stmt.trim().is_empty() {
            continue;
        }
        let (name, body) = stmt
            .split_once('=')
            .ok_or_else(|| SyntaxError::BadDefinition(stmt.trim().to_string()))?;
        let name = name.trim();
        let valid = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'');
        if !valid {
            return Err(SyntaxError::BadDefinition(stmt.trim().to_string()));
        }
        defs.insert(name.to_string(), body.trim().to_string());
    }
    Ok(defs)
}

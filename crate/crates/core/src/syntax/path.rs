use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{SyntaxError, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Fun,
    Arg,
    Body,
}

impl Step {
    pub fn as_str(self) -> &'static str {
        match self {
            Step::Fun => "Fun",
            Step::Arg => "Arg",
            Step::Body => "Body",
        }
    }
}

/// Root-relative address of a subterm occurrence.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path(pub Vec<Step>);

impl Path {
    pub fn root() -> Path {
        Path(Vec::new())
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of arguments the addressed occurrence lies in.
    pub fn level(&self) -> usize {
        self.0.iter().filter(|s| **s == Step::Arg).count()
    }

    pub fn child(&self, step: Step) -> Path {
        let mut steps = self.0.clone();
        steps.push(step);
        Path(steps)
    }

    pub fn is_prefix_of(&self, other: &Path) -> bool {
        other.0.starts_with(&self.0)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            f.write_str(s.as_str())?;
        }
        Ok(())
    }
}

impl FromStr for Path {
    type Err = SyntaxError;

    fn from_str(s: &str) -> Result<Path, SyntaxError> {
        let s = s.trim();
        if s.is_empty() || s == "ε" {
            return Ok(Path::root());
        }
        s.split('/')
            .map(|part| match part.trim() {
                "Fun" => Ok(Step::Fun),
                "Arg" => Ok(Step::Arg),
                "Body" => Ok(Step::Body),
                other => Err(SyntaxError::BadPath(other.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Path)
    }
}

impl Serialize for Path {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Path {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Path, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The occurrence addressed by `path` and its level.
pub fn resolve<'t>(root: &'t Term, path: &Path) -> Result<(&'t Term, usize), SyntaxError> {
    let mut t = root;
    for (i, step) in path.0.iter().enumerate() {
        t = match (t, step) {
            (Term::App(f, _), Step::Fun) => f,
            (Term::App(_, a), Step::Arg) => a,
            (Term::Lam { body, .. }, Step::Body) => body,
            _ => return Err(SyntaxError::InvalidPath(Path(path.0[..=i].to_vec()).to_string())),
        };
    }
    Ok((t, path.level()))
}

/// Path of the abstraction binding the variable at `var_path`, together with the
/// number of Arg steps strictly between the binder and the occurrence.
pub fn binder_of(root: &Term, var_path: &Path) -> Result<(Path, usize), SyntaxError> {
    let index = match resolve(root, var_path)?.0 {
        Term::Var { index, .. } => *index,
        _ => return Err(SyntaxError::NotAVariable(var_path.to_string())),
    };
    let mut seen = 0;
    let mut inner = 0;
    for (i, step) in var_path.0.iter().enumerate().rev() {
        match step {
            Step::Arg => inner += 1,
            Step::Body if seen == index => return Ok((Path(var_path.0[..i].to_vec()), inner)),
            Step::Body => seen += 1,
            Step::Fun => {}
        }
    }
    Err(SyntaxError::NotClosed)
}

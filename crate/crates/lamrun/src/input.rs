use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use lamrun_core::syntax::{parse, parse_definitions, Code, Term};

/// A problem with what the user supplied; maps to the input-error exit status.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<E: std::error::Error> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

/// `@path` reads the term from a file; anything else is the term itself.
pub fn load_term(arg: &str, defs: Option<&Path>) -> Result<Term, InputError> {
    let text = match arg.strip_prefix('@') {
        Some(path) => read(Path::new(path))?,
        None => arg.to_string(),
    };
    let definitions = match defs {
        Some(p) => parse_definitions(&read(p)?)?,
        None => BTreeMap::new(),
    };
    Ok(parse(&text, &definitions)?)
}

pub fn load_code(arg: &str, defs: Option<&Path>) -> Result<Code, InputError> {
    Ok(Code::new(load_term(arg, defs)?)?)
}

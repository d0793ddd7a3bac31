//! Terms, paths, parsing and printing, and the weak head reduction oracle.

mod code;
mod parse;
mod path;
mod print;
mod reduce;
mod term;

pub use code::{Code, Pos, Shape};
pub use parse::{parse, parse_closed, parse_definitions};
pub use path::{binder_of, resolve, Path, Step};
pub use print::{pretty, HOLE};
pub use reduce::{whnf, whnf_trace, ReduceError, ReductionStep};
pub use term::Term;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SyntaxError {
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("unbound identifier `{0}`")]
    UnboundIdentifier(String),
    #[error("definition cycle through `{0}`")]
    DefinitionCycle(String),
    #[error("malformed definition `{0}`")]
    BadDefinition(String),
    #[error("invalid path `{0}`")]
    InvalidPath(String),
    #[error("malformed path step `{0}`")]
    BadPath(String),
    #[error("no variable at `{0}`")]
    NotAVariable(String),
    #[error("the term is not closed")]
    NotClosed,
}

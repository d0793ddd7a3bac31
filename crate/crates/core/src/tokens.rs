//! Logged positions, logs and tapes shared by the token machines.

use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::plist::List;
use crate::syntax::{Code, Pos};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    /// Position relative to the binder, as in the λIAM.
    Local,
    /// Position in the whole program, as in the λJAM.
    Global,
}

/// A variable occurrence together with the log that led to it.
///
/// `scope` is the binder for [`Flavor::Local`] and the program root for
/// [`Flavor::Global`]. A local log holds the entries between binder and
/// occurrence; a global log holds one entry per argument the occurrence lies in.
#[derive(Debug, PartialEq, Eq)]
pub struct LoggedPosition {
    pub var: Pos,
    pub scope: Pos,
    pub flavor: Flavor,
    pub log: Log,
    depth: usize,
}

pub type Lp = Arc<LoggedPosition>;
pub type Log = List<Lp>;
pub type Tape = List<TapeItem>;

impl LoggedPosition {
    pub fn new(var: Pos, scope: Pos, flavor: Flavor, log: Log) -> Lp {
        let depth = 1 + log_depth(&log);
        Arc::new(LoggedPosition { var, scope, flavor, log, depth })
    }

    /// `1 + depth(log)`, cached at construction.
    pub fn depth(&self) -> usize {
        self.depth
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TapeItem {
    Marker,
    Lp(Lp),
}

impl TapeItem {
    pub fn as_lp(&self) -> Option<&Lp> {
        match self {
            TapeItem::Lp(p) => Some(p),
            TapeItem::Marker => None,
        }
    }
}

/// Depth of the first logged position of a log, 0 when empty.
pub fn log_depth(log: &Log) -> usize {
    log.head().map_or(0, |p| p.depth())
}

/// Depth of a tape: markers are transparent, the first logged position decides.
pub fn tape_depth(tape: &Tape) -> usize {
    tape.iter().find_map(TapeItem::as_lp).map_or(0, |p| p.depth())
}

pub fn tape_lp_count(tape: &Tape) -> usize {
    tape.iter().filter(|i| i.as_lp().is_some()).count()
}

/// Top-level size of a state's token, plus the number of distinct list cells behind it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SpaceFootprint {
    pub lp_count: usize,
    pub marker_count: usize,
    pub deep_cells: usize,
}

/// Top-level counts of a log and tape; `deep` also fills in [`deep_cells`].
pub fn footprint(log: &Log, tape: &Tape, deep: bool) -> SpaceFootprint {
    let lp_on_tape = tape_lp_count(tape);
    SpaceFootprint {
        lp_count: log.len() + lp_on_tape,
        marker_count: tape.len() - lp_on_tape,
        deep_cells: if deep { deep_cells(log, tape) } else { 0 },
    }
}

/// Counts list cells reachable from the log and tape, each shared cell once.
pub fn deep_cells(log: &Log, tape: &Tape) -> usize {
    let mut seen = HashSet::new();
    let mut logs: Vec<Log> = vec![log.clone()];
    let mut cur = tape.clone();
    while let Some(id) = cur.cell_id() {
        if !seen.insert(id) {
            break;
        }
        let (item, rest) = cur.uncons().expect("non-empty");
        if let TapeItem::Lp(p) = item {
            logs.push(p.log.clone());
        }
        cur = rest.clone();
    }
    while let Some(mut l) = logs.pop() {
        while let Some(id) = l.cell_id() {
            if !seen.insert(id) {
                break;
            }
            let (p, rest) = l.uncons().expect("non-empty");
            logs.push(p.log.clone());
            l = rest.clone();
        }
    }
    seen.len()
}

pub fn render_lp(code: &Code, p: &LoggedPosition) -> String {
    let ctx = match p.flavor {
        Flavor::Local => code.pretty_context(p.scope, p.var),
        Flavor::Global => code.pretty_in_root(p.var),
    };
    format!("({}, {}, {})", code.name(p.var), ctx, render_log(code, &p.log))
}

pub fn render_log(code: &Code, log: &Log) -> String {
    join(log.iter().map(|p| render_lp(code, p)))
}

pub fn render_tape(code: &Code, tape: &Tape) -> String {
    join(tape.iter().map(|i| match i {
        TapeItem::Marker => "p".to_string(),
        TapeItem::Lp(p) => render_lp(code, p),
    }))
}

/// Joins entries with `·`, printing `ε` for none.
pub fn join(items: impl Iterator<Item = String>) -> String {
    let v: Vec<String> = items.collect();
    if v.is_empty() {
        "ε".to_string()
    } else {
        v.join("·")
    }
}

pub fn lp_json(code: &Code, p: &LoggedPosition) -> Value {
    json!({
        "var": code.path(p.var).to_string(),
        "scope": code.path(p.scope).to_string(),
        "flavor": p.flavor,
        "log": log_json(code, &p.log),
    })
}

pub fn log_json(code: &Code, log: &Log) -> Value {
    Value::Array(log.iter().map(|p| lp_json(code, p)).collect())
}

pub fn tape_json(code: &Code, tape: &Tape) -> Value {
    Value::Array(
        tape.iter()
            .map(|i| match i {
                TapeItem::Marker => Value::from("p"),
                TapeItem::Lp(p) => lp_json(code, p),
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_closed;

    fn code() -> Code {
        Code::new(parse_closed(r"\x.x").unwrap()).unwrap()
    }

    #[test]
    fn empty_token_has_empty_footprint() {
        assert_eq!(footprint(&Log::new(), &Tape::new(), true), SpaceFootprint::default());
    }

    #[test]
    fn footprint_counts_top_level_entries() {
        let c = code();
        let var = c.pos_of(&"Body".parse().unwrap()).unwrap();
        let p = LoggedPosition::new(var, c.root(), Flavor::Local, Log::new());
        let q = LoggedPosition::new(var, c.root(), Flavor::Local, Log::new().cons(p.clone()));
        let (h, k) = (4, 2);
        let mut tape = Tape::new();
        for _ in 0..h {
            tape = tape.cons(TapeItem::Marker);
        }
        tape = tape.cons(TapeItem::Lp(q)).cons(TapeItem::Lp(p.clone()));
        for _ in 0..k {
            tape = tape.cons(TapeItem::Marker);
        }
        let f = footprint(&Log::new(), &tape, true);
        assert_eq!((f.lp_count, f.marker_count), (2, h + k));

        let f = footprint(&Log::new().cons(p), &Tape::new().cons(TapeItem::Marker), true);
        assert_eq!((f.lp_count, f.marker_count), (1, 1));
    }

    #[test]
    fn depth_follows_first_entries() {
        let c = code();
        let var = c.pos_of(&"Body".parse().unwrap()).unwrap();
        let inner = LoggedPosition::new(var, c.root(), Flavor::Global, Log::new());
        let outer = LoggedPosition::new(var, c.root(), Flavor::Global, Log::new().cons(inner));
        assert_eq!(log_depth(&Log::new().cons(outer.clone())), 2);
        let tape = Tape::new().cons(TapeItem::Lp(outer)).cons(TapeItem::Marker);
        assert_eq!(tape_depth(&tape), 2);
        assert_eq!(tape_depth(&Tape::new()), 0);
    }

    #[test]
    fn shared_cells_count_once() {
        let c = code();
        let var = c.pos_of(&"Body".parse().unwrap()).unwrap();
        let base = Log::new().cons(LoggedPosition::new(var, c.root(), Flavor::Global, Log::new()));
        let p = LoggedPosition::new(var, c.root(), Flavor::Global, base.clone());
        // the machine log and the stored log share their single cell
        let tape = Tape::new().cons(TapeItem::Lp(p));
        assert_eq!(deep_cells(&base, &tape), 2);
    }
}

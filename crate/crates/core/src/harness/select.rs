use std::fmt;
use std::str::FromStr;

use super::run::{run, RunOptions, RunReport};
use super::trace::{trace, TraceEvent};
use crate::ham::{Ham, Mode};
use crate::kam::Kam;
use crate::liam::Iam;
use crate::ljam::Jam;
use crate::lpam::Pam;
use crate::multitypes::{infer_star_derivation, TypeError};
use crate::siam::Siam;
use crate::syntax::Code;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MachineKind {
    Iam,
    Jam,
    Pam,
    Kam,
    HamJ,
    HamK,
    Siam,
}

impl MachineKind {
    pub const ALL: [MachineKind; 7] = [
        MachineKind::Iam,
        MachineKind::Jam,
        MachineKind::Pam,
        MachineKind::Kam,
        MachineKind::HamJ,
        MachineKind::HamK,
        MachineKind::Siam,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MachineKind::Iam => "iam",
            MachineKind::Jam => "jam",
            MachineKind::Pam => "pam",
            MachineKind::Kam => "kam",
            MachineKind::HamJ => "ham-j",
            MachineKind::HamK => "ham-k",
            MachineKind::Siam => "siam",
        }
    }
}

impl fmt::Display for MachineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MachineKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        MachineKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown machine `{s}`"))
    }
}

macro_rules! dispatch {
    ($kind:expr, $code:expr, $fuel:expr, |$m:ident| $body:expr) => {
        match $kind {
            MachineKind::Iam => { let $m = Iam::new($code); Ok($body) }
            MachineKind::Jam => { let $m = Jam::new($code); Ok($body) }
            MachineKind::Pam => { let $m = Pam::new($code); Ok($body) }
            MachineKind::Kam => { let $m = Kam::new($code); Ok($body) }
            MachineKind::HamJ => { let $m = Ham::new($code, Mode::J); Ok($body) }
            MachineKind::HamK => { let $m = Ham::new($code, Mode::K); Ok($body) }
            MachineKind::Siam => {
                let d = infer_star_derivation($code, $fuel)?;
                let $m = Siam::new($code, &d).expect("derivations conclude with ★");
                Ok($body)
            }
        }
    };
}

/// Runs a machine chosen by name. The SIAM first needs a derivation, which
/// fails for terms without a weak head normal form within the fuel.
pub fn run_kind(kind: MachineKind, code: &Code, opts: &RunOptions) -> Result<RunReport, TypeError> {
    dispatch!(kind, code, opts.fuel, |m| run(&m, opts))
}

pub fn trace_kind(
    kind: MachineKind,
    code: &Code,
    opts: &RunOptions,
) -> Result<(RunReport, Vec<TraceEvent>), TypeError> {
    dispatch!(kind, code, opts.fuel, |m| trace(&m, opts))
}

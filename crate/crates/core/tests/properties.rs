use proptest::prelude::*;

use lamrun_core::equivalence::{checker, Status, CHECKS};
use lamrun_core::harness::{
    from_csv, from_jsonl, gen_corpus, run, to_csv, to_jsonl, trace, compare, RunOptions, DEFAULT_MACHINES,
};
use lamrun_core::liam::Iam;
use lamrun_core::machine::{Machine, StepOutcome};
use lamrun_core::multitypes::infer_star_derivation;
use lamrun_core::siam::{run_coverage, Siam};
use lamrun_core::syntax::{parse_closed, Code, Term};

const FUEL: u64 = 20_000;

#[derive(Clone, Debug)]
enum Raw {
    Var(u8),
    Lam(Box<Raw>),
    App(Box<Raw>, Box<Raw>),
}

fn raw() -> impl Strategy<Value = Raw> {
    let leaf = any::<u8>().prop_map(Raw::Var);
    leaf.prop_recursive(6, 40, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|b| Raw::Lam(Box::new(b))),
            (inner.clone(), inner).prop_map(|(f, a)| Raw::App(Box::new(f), Box::new(a))),
        ]
    })
}

/// Closes a raw tree: indices wrap around the binders in scope and variables
/// with no binder in scope become identities.
fn close(r: &Raw, depth: usize) -> Term {
    match r {
        Raw::Var(_) if depth == 0 => Term::identity("x0"),
        Raw::Var(i) => {
            let index = *i as usize % depth;
            Term::var(index, format!("x{}", depth - 1 - index))
        }
        Raw::Lam(b) => Term::lam(format!("x{depth}"), close(b, depth + 1)),
        Raw::App(f, a) => Term::app(close(f, depth), close(a, depth)),
    }
}

fn closed_term() -> impl Strategy<Value = Term> {
    raw().prop_map(|r| close(&r, 0))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, ..ProptestConfig::default() })]

    #[test]
    fn print_then_parse_is_identity(t in closed_term()) {
        let printed = t.to_string();
        let back = parse_closed(&printed).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(back.to_string(), printed);
        prop_assert_eq!(back.size(), t.size());
    }

    #[test]
    fn paths_address_positions(t in closed_term()) {
        let code = Code::new(t).unwrap();
        for p in code.positions() {
            prop_assert_eq!(code.pos_of(&code.path(p)).unwrap(), p);
            prop_assert_eq!(code.path(p).to_string().parse::<lamrun_core::syntax::Path>().unwrap(), code.path(p));
        }
    }

    #[test]
    fn iam_steps_are_invertible(t in closed_term()) {
        let code = Code::new(t).unwrap();
        let m = Iam::new(&code);
        let mut s = m.initial();
        prop_assert!(m.step_back(&s).is_none());
        for _ in 0..FUEL {
            match m.step(&s) {
                StepOutcome::Next { label, state, .. } => {
                    prop_assert_eq!(m.step_back(&state), Some((label, s.clone())));
                    s = state;
                }
                StepOutcome::Final => break,
                StepOutcome::Stuck(reason) => prop_assert!(false, "stuck: {}", reason),
            }
        }
    }

    #[test]
    fn siam_is_bideterministic_and_covers_every_star(t in closed_term()) {
        let code = Code::new(t).unwrap();
        let Ok(d) = infer_star_derivation(&code, 2_000) else { return Ok(()) };
        prop_assert!(d.check(&code).is_ok());
        let m = Siam::new(&code, &d).unwrap();
        let (report, coverage, _) = run_coverage(&m, &RunOptions::checked(FUEL));
        prop_assert!(report.is_final());
        prop_assert!(coverage.complete(), "{:?}", coverage);
        let mut s = m.initial();
        while let StepOutcome::Next { label, state, .. } = m.step(&s) {
            prop_assert_eq!(m.step_back(&state), Some((label, s.clone())));
            s = state;
        }
    }

    #[test]
    fn no_check_ever_fails(t in closed_term()) {
        let code = Code::new(t).unwrap();
        for name in CHECKS {
            let report = checker(name).unwrap()(&code, FUEL);
            prop_assert_ne!(report.status, Status::Failed, "{}: {:?}", name, report.message);
        }
    }

    #[test]
    fn traces_round_trip_through_jsonl(t in closed_term()) {
        let code = Code::new(t).unwrap();
        let (_, events) = trace(&Iam::new(&code), &RunOptions::with_fuel(500));
        prop_assert_eq!(from_jsonl(&to_jsonl(&events)).unwrap(), events);
    }

    #[test]
    fn summaries_round_trip_through_csv(t in closed_term()) {
        let code = Code::new(t).unwrap();
        let row = compare(&code, &DEFAULT_MACHINES, 2_000);
        prop_assert_eq!(from_csv(&to_csv(&row.machines)).unwrap(), row.machines);
    }

    #[test]
    fn runs_are_deterministic(t in closed_term()) {
        let code = Code::new(t).unwrap();
        let opts = RunOptions::with_fuel(2_000);
        prop_assert_eq!(run(&Iam::new(&code), &opts), run(&Iam::new(&code), &opts));
    }

    #[test]
    fn corpus_is_reproducible_closed_and_bounded(seed in any::<u64>(), count in 0usize..12, max in 2usize..25) {
        let corpus = gen_corpus(seed, count, max);
        prop_assert!(corpus.len() <= count);
        for t in &corpus {
            prop_assert!(t.is_closed());
            prop_assert!(t.size() <= max);
        }
        let again = gen_corpus(seed, count, max);
        prop_assert_eq!(
            corpus.iter().map(Term::to_string).collect::<Vec<_>>(),
            again.iter().map(Term::to_string).collect::<Vec<_>>()
        );
    }
}

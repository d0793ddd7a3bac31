mod common;

use common::{DELTA, SIAM_DELTA, SIAM_THREE, THREE};
use lamrun_core::harness::{run_with, RunOptions};
use lamrun_core::liam::Iam;
use lamrun_core::machine::{Label, Machine};
use lamrun_core::multitypes::{infer_star_derivation, render_tpath, Derivation};
use lamrun_core::siam::{run_coverage, Siam};
use lamrun_core::syntax::{parse_closed, Code};

fn setup(src: &str) -> (Code, Derivation) {
    let code = Code::new(parse_closed(src).unwrap()).unwrap();
    let d = infer_star_derivation(&code, 1000).unwrap();
    d.check(&code).unwrap();
    (code, d)
}

/// Visited `★` occurrences as (typed subterm path, type path).
fn visits(src: &str) -> Vec<(String, String)> {
    let (code, d) = setup(src);
    let m = Siam::new(&code, &d).unwrap();
    let (report, coverage, order) = run_coverage(&m, &RunOptions::checked(1000));
    assert!(report.is_final(), "{:?}", report.outcome);
    assert!(coverage.complete(), "{coverage:?}");
    order
        .into_iter()
        .map(|(n, p)| (code.path(d.node(n).term_pos).to_string(), render_tpath(&p)))
        .collect()
}

fn expect(rows: &[(&str, &str)]) -> Vec<(String, String)> {
    rows.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

#[test]
fn running_example_visits_stars_in_annotation_order() {
    assert_eq!(visits(THREE), expect(SIAM_THREE));
}

#[test]
fn duplication_visits_stars_in_annotation_order() {
    assert_eq!(visits(DELTA), expect(SIAM_DELTA));
}

#[test]
fn observables_match_the_iam_and_steps_invert() {
    for src in ["(λy.λx.x y) (λw.w) (λz.z)", "(λx.x x) (λy.y)", "(λx.λy.x) (λz.z) (λw.w w)"] {
        let (code, d) = setup(src);
        let siam = Siam::new(&code, &d).unwrap();
        let mut sobs = Vec::new();
        let mut states: Vec<(Option<Label>, _)> = Vec::new();
        run_with(&siam, &RunOptions::checked(1000), |v| {
            sobs.push((siam.observable(v.state), v.label));
            states.push((v.label, v.state.clone()));
        });
        let iam = Iam::new(&code);
        let mut iobs = Vec::new();
        run_with(&iam, &RunOptions::checked(1000), |v| {
            let s = v.state;
            iobs.push(((code.path(s.pos), s.dir), v.label));
        });
        assert_eq!(sobs, iobs, "{src}");
        assert_eq!(siam.step_back(&siam.initial()), None);
        for w in states.windows(2) {
            let (label, prev) = siam.step_back(&w[1].1).unwrap();
            assert_eq!((Some(label), prev), (w[1].0, w[0].1.clone()));
        }
    }
}

#[test]
fn derivation_printout_with_visit_ranks() {
    let (code, d) = setup("(λx.x x) (λy.y)");
    let m = Siam::new(&code, &d).unwrap();
    let (_, _, order) = run_coverage(&m, &RunOptions::checked(100));
    let text = lamrun_core::siam::render_visit_order(&code, &d, &order);
    let first: Vec<&str> = text.lines().take(2).collect();
    assert_eq!(first, ["T-@  ⊢ (λx.x x) (λy.y) : ★₁", "  T-λ  ⊢ λx.x x : [[★₉]→★₅, ★₁₂]→★₂"]);
}

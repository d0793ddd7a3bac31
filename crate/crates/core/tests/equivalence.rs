use lamrun_core::equivalence::{checker, Status, CHECKS};
use lamrun_core::syntax::{parse_closed, Code};

fn code(src: &str) -> Code {
    Code::new(parse_closed(src).unwrap()).unwrap()
}

fn tn(n: usize) -> String {
    let mut s = "(λx.x)".to_string();
    for _ in 1..n {
        s = format!("({s}) (λx.x)");
    }
    s
}

#[test]
fn every_check_passes_on_small_terms() {
    let mut terms: Vec<String> = [
        "λx.x",
        "(λx.x) (λy.y)",
        "(λy.λx.x y) (λw.w) (λz.z)",
        "(λx.x x) (λy.y)",
        "(λx.λy.x) (λz.z) (λw.w w)",
        "(λx.x (λy.y) x) (λz.z)",
        "(λf.λx.f (f x)) (λy.y) (λz.z)",
        "(λx1.λy.y (λz1.λz.z)) (λa.a) (λw.w (λb.b))",
    ]
    .map(String::from)
    .to_vec();
    terms.extend((1..=6).map(tn));
    for t in &terms {
        let c = code(t);
        for name in CHECKS {
            let r = checker(name).unwrap()(&c, 100_000);
            assert_eq!(r.status, Status::Passed, "{name} on {t}: {r:?}");
        }
    }
}

#[test]
fn running_example_details() {
    let c = code("(λy.λx.x y) (λw.w) (λz.z)");
    let r = checker("weights").unwrap()(&c, 1000);
    assert_eq!(r.details["weightIam"], 18);
    assert_eq!(r.details["weightKam"], 9);
    assert_eq!(r.details["starCount"], 19);
    let r = checker("iam-jam").unwrap()(&c, 1000);
    assert_eq!((r.details["iamLength"].as_u64(), r.details["jamLength"].as_u64()), (Some(18), Some(15)));
}

#[test]
fn diverging_terms_are_inconclusive() {
    let c = code("(λx.x x) (λx.x x)");
    for name in CHECKS {
        let r = checker(name).unwrap()(&c, 500);
        assert_eq!(r.status, Status::Inconclusive, "{name}: {r:?}");
    }
}

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::run::{run, Outcome, RunOptions};
use crate::liam::Iam;
use crate::syntax::{Code, Term};

/// λIAM transitions allowed to a candidate; the λIAM is the slowest machine,
/// so every other machine completes too.
pub const PROBE_FUEL: u64 = 200_000;

/// `count` seeded random closed terms of at most `max_size` constructors,
/// keeping those that reach a weak head normal form within [`PROBE_FUEL`].
pub fn gen_corpus(seed: u64, count: usize, max_size: usize) -> Vec<Term> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_size = max_size.max(2);
    (0..count)
        .map(|_| {
            let size = rng.gen_range(2..=max_size);
            gen_closed(&mut rng, size, 0, size >= 5)
        })
        .filter(normalizes)
        .collect()
}

fn normalizes(t: &Term) -> bool {
    let code = Code::new(t.clone()).expect("generated terms are closed");
    let opts = RunOptions { fuel: PROBE_FUEL, check: false };
    run(&Iam::new(&code), &opts).outcome == Outcome::Final
}

fn min_size(depth: usize) -> usize {
    if depth > 0 {
        1
    } else {
        2
    }
}

/// A term of exactly `size` constructors under `depth` binders named `x0…`.
fn gen_closed(rng: &mut ChaCha8Rng, size: usize, depth: usize, want_app: bool) -> Term {
    let app_fits = size > 2 * min_size(depth);
    if size == 1 {
        let i = rng.gen_range(0..depth);
        return Term::var(i, format!("x{}", depth - 1 - i));
    }
    if app_fits && (want_app || rng.gen_bool(0.7)) {
        let lo = min_size(depth);
        let left = rng.gen_range(lo..=size - 1 - lo);
        let f = gen_closed(rng, left, depth, false);
        let a = gen_closed(rng, size - 1 - left, depth, false);
        Term::app(f, a)
    } else {
        Term::lam(format!("x{depth}"), gen_closed(rng, size - 1, depth + 1, false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_deterministic() {
        assert!(gen_corpus(1, 0, 40).is_empty());
        assert_eq!(gen_corpus(7, 30, 20), gen_corpus(7, 30, 20));
    }

    #[test]
    fn sizes_are_bounded() {
        for t in gen_corpus(3, 50, 12) {
            assert!(t.size() <= 12 && t.is_closed());
        }
    }
}

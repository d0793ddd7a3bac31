use crate::syntax::Term;

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("family parameters start at 1")]
    ZeroParameter,
}

fn identity() -> Term {
    Term::identity("x")
}

/// `t₁ = I`, `t_{n+1} = t_n I`: left-nested applications of `n` identities.
pub fn family_tn(n: usize) -> Result<Term, FamilyError> {
    if n == 0 {
        return Err(FamilyError::ZeroParameter);
    }
    Ok((1..n).fold(identity(), |t, _| Term::app(t, identity())))
}

/// `(λx₁…λx_k.λy. y (λz₁…λz_h.λz.z)) I…I (λw. w I…I)` with `k` and `h` identities.
pub fn family_rkh(k: usize, h: usize) -> Result<Term, FamilyError> {
    if k == 0 || h == 0 {
        return Err(FamilyError::ZeroParameter);
    }
    let inner = (1..=h).rev().fold(Term::identity("z"), |t, j| Term::lam(format!("z{j}"), t));
    let body = Term::lam("y", Term::app(Term::var(0, "y"), inner));
    let head = (1..=k).rev().fold(body, |t, i| Term::lam(format!("x{i}"), t));
    let consumer = Term::lam("w", Term::apps(Term::var(0, "w"), (0..h).map(|_| identity())));
    Ok(Term::app(Term::apps(head, (0..k).map(|_| identity())), consumer))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tn_unfolds() {
        assert_eq!(family_tn(1).unwrap().to_string(), "λx.x");
        assert_eq!(family_tn(3).unwrap().to_string(), "(λx.x) (λx.x) (λx.x)");
        assert_eq!(family_tn(0), Err(FamilyError::ZeroParameter));
        let sizes: Vec<usize> = (1..6).map(|n| family_tn(n).unwrap().size()).collect();
        assert!(sizes.windows(2).all(|w| w[1] - w[0] == 3));
    }

    #[test]
    fn rkh_unfolds() {
        let t = family_rkh(1, 1).unwrap();
        assert_eq!(t.to_string(), "(λx1.λy.y (λz1.λz.z)) (λx.x) (λw.w (λx.x))");
        for k in 1..4 {
            for h in 1..4 {
                assert!(family_rkh(k, h).unwrap().is_closed());
            }
        }
    }
}

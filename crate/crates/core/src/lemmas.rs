//! Exhaustive checks of the structural facts about the braid mutation that
//! the bijection relies on.

use crate::linalg::{q, Matrix, Q};
use crate::rep::{ModuleId, RepEngine};
use crate::report::Report;
use crate::wide::{classify_case, gamma, gamma_inverse, WideSubcat};
use num_traits::{Signed, Zero};

fn perp_pairs(e: &RepEngine) -> Vec<(ModuleId, ModuleId)> {
    let mut out = Vec::new();
    for t in e.modules() {
        for x in e.modules() {
            if e.is_exceptional_pair(x, t) {
                out.push((x, t));
            }
        }
    }
    out
}

/// `γ^{-1} γ = id` on `E(T^⊥)` and `γ γ^{-1} = id` on `E(^⊥T)`.
pub fn check_gamma_roundtrip(e: &RepEngine) -> Report {
    let mut r = Report::new("gamma round trip");
    for (x, t) in perp_pairs(e) {
        if let Some(y) = r.absorb(gamma(e, x, t)) {
            if let Some(back) = r.absorb(gamma_inverse(e, y, t)) {
                r.check(back == x, || {
                    format!(
                        "gamma inverse of gamma({}) at {} is {}",
                        e.dim(x),
                        e.dim(t),
                        e.dim(back)
                    )
                });
            }
        }
    }
    for t in e.modules() {
        for y in e.modules().filter(|&y| e.is_exceptional_pair(t, y)) {
            if let Some(x) = r.absorb(gamma_inverse(e, y, t)) {
                if let Some(back) = r.absorb(gamma(e, x, t)) {
                    r.check(back == y, || {
                        format!(
                            "gamma of gamma inverse({}) at {} is {}",
                            e.dim(y),
                            e.dim(t),
                            e.dim(back)
                        )
                    });
                }
            }
        }
    }
    r
}

/// For `X` outside the mono case, `γ(X)` is projective iff `X` is
/// projective in `T^⊥`.
pub fn check_rel_proj_transfer(e: &RepEngine) -> Report {
    let mut r = Report::new("relative projectivity transfer");
    let whole = WideSubcat::whole(e);
    for (x, t) in perp_pairs(e) {
        let Some(case) = r.absorb(classify_case(e, x, t)) else {
            continue;
        };
        if case.is_a() {
            continue;
        }
        let Some(y) = r.absorb(gamma(e, x, t)) else { continue };
        let Some(y_proj) = r.absorb(e.is_projective(y)) else {
            continue;
        };
        let x_rel = WideSubcat::perp(e, &[t], &whole).is_rel_projective(e, x);
        r.check(y_proj == x_rel, || {
            format!(
                "T = {}, X = {} ({case:?}): X relatively projective {x_rel}, gamma(X) = {} projective {y_proj}",
                e.dim(t),
                e.dim(x),
                e.dim(y)
            )
        });
    }
    r
}

/// For `X, X'` in `T^⊥`: `(X, X')`, `(X, γX')`, `(γX, γX')` are all
/// exceptional pairs or none is.
pub fn check_triple_pairs(e: &RepEngine) -> Report {
    let mut r = Report::new("three exceptional pairs");
    let whole = WideSubcat::whole(e);
    for t in e.modules() {
        let perp = WideSubcat::perp(e, &[t], &whole);
        for &x in perp.objects() {
            for &x2 in perp.objects() {
                let (Some(y), Some(y2)) = (r.absorb(gamma(e, x, t)), r.absorb(gamma(e, x2, t))) else {
                    continue;
                };
                let flags = [
                    e.is_exceptional_pair(x, x2),
                    e.is_exceptional_pair(x, y2),
                    e.is_exceptional_pair(y, y2),
                ];
                r.check(flags.iter().all(|&f| f == flags[0]), || {
                    format!(
                        "T = {}, X = {}, X' = {}: pairs exceptional {flags:?}",
                        e.dim(t),
                        e.dim(x),
                        e.dim(x2)
                    )
                });
            }
        }
    }
    r
}

/// Coefficients `(a, b)` with `u + a v + b w = 0`, if `u` is in the span.
fn relation(u: &[i64], v: &[i64], w: &[i64]) -> Option<(Q, Q)> {
    let a = Matrix::from_columns(u.len(), &[v, w]);
    let rhs: Vec<Q> = u.iter().map(|&x| q(-x)).collect();
    let sol = a.solve_unique(&rhs)?;
    Some((sol[0].clone(), sol[1].clone()))
}

/// The linear relation between `X, X', X''` and `Y, Y', Y''` with its
/// sign rules, for every exceptional pair `(X, X')` in `T^⊥`.
pub fn check_linear_relation(e: &RepEngine) -> Report {
    let mut r = Report::new("linear relation");
    let whole = WideSubcat::whole(e);
    for t in e.modules() {
        let perp = WideSubcat::perp(e, &[t], &whole);
        for &x in perp.objects() {
            for &x2 in perp.objects() {
                if !e.is_exceptional_pair(x, x2) {
                    continue;
                }
                let ctx = || format!("T = {}, X = {}, X' = {}", e.dim(t), e.dim(x), e.dim(x2));
                // (X, X', T) ~ (X', X'', T) ~ (X', T, Y'') ~ (T, Y', Y'')
                let Some(x3) = r.absorb(gamma(e, x, x2)) else { continue };
                let (Some(y), Some(y2), Some(y3)) = (
                    r.absorb(gamma(e, x, t)),
                    r.absorb(gamma(e, x2, t)),
                    r.absorb(gamma(e, x3, t)),
                ) else {
                    continue;
                };
                let d = |m: ModuleId| e.dim(m).entries().to_vec();
                let Some((a, b)) = relation(&d(x), &d(x2), &d(x3)) else {
                    r.fail(format!("{}: dim X not in the span of dim X', dim X''", ctx()));
                    continue;
                };
                let found: Vec<(i64, i64)> = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
                    .into_iter()
                    .filter(|&(s, s2)| {
                        (0..e.rank()).all(|i| {
                            let v = q(d(y)[i]) + &a * q(s * d(y2)[i]) + &b * q(s2 * d(y3)[i]);
                            v.is_zero()
                        })
                    })
                    .collect();
                // When a or b vanishes the corresponding sign is free.
                let Some(&(eps, _)) = found.first() else {
                    r.fail(format!("{}: no signs relate the Y vectors", ctx()));
                    continue;
                };
                let same_side =
                    classify_case(e, x, t).map(|c| c.is_a()).ok() == classify_case(e, x2, t).map(|c| c.is_a()).ok();
                if !a.is_zero() {
                    r.check(found.iter().all(|f| f.0 == eps), || {
                        format!("{}: epsilon not unique", ctx())
                    });
                    r.check((eps == 1) == same_side, || {
                        format!("{}: epsilon = {eps}, same side {same_side}", ctx())
                    });
                }
                r.check((e.ext_dim(x, x2) > 0) == a.is_positive(), || {
                    format!("{}: Ext(X, X') = {}, a = {a}", ctx(), e.ext_dim(x, x2))
                });
                let ea = &a * q(eps);
                r.check((e.ext_dim(y, y2) > 0) == ea.is_positive(), || {
                    format!("{}: Ext(Y, Y') = {}, epsilon a = {ea}", ctx(), e.ext_dim(y, y2))
                });
            }
        }
    }
    r
}

pub fn check_all(e: &RepEngine) -> Report {
    let mut r = Report::new(format!("lemma suites {}", e.quiver().diagram().type_tag()));
    r.merge(check_gamma_roundtrip(e));
    r.merge(check_rel_proj_transfer(e));
    r.merge(check_triple_pairs(e));
    r.merge(check_linear_relation(e));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_lemmas() {
        let e = RepEngine::parse("A2").unwrap();
        let r = check_all(&e);
        assert!(r.passed(), "{r}");
        assert!(r.checks > 0);
    }

    #[test]
    fn relation_solver() {
        let (a, b) = relation(&[1, 1], &[1, 0], &[0, 1]).unwrap();
        assert_eq!((a, b), (q(-1), q(-1)));
        assert!(relation(&[1, 1, 1], &[1, 0, 0], &[0, 1, 0]).is_none());
    }
}

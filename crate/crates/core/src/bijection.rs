//! The bijection between ordered compatible tuples and m-exceptional
//! sequences.
//!
//! `σ_{T[k]}` maps objects of `C^m(W ∩ T^⊥)` to objects of `C^m(W)`
//! compatible with `T[k]`. It is evaluated twice, once from the case chart
//! and once from the congruence of dimension vectors modulo `dim T`, and the
//! two answers must agree. `θ` peels off the last term and recurses into
//! the perpendicular category.

use std::collections::HashSet;

use crate::error::{consistency_err, input_err, Result};
use crate::rep::{MapKind, RepEngine};
use crate::report::Report;
use crate::shift::{compatible, in_domain, objects_of, ordered_tuples, pairwise_compatible, show_list, ShiftedObject};
use crate::wide::{
    braid_relation, classify_case, enumerate_exc_sequences, gamma, gamma_inverse, CaseLabel, WideSubcat,
};

pub struct Sigma<'a> {
    e: &'a RepEngine,
    m: u32,
    ambient: WideSubcat,
    perp: WideSubcat,
    t: ShiftedObject,
}

impl<'a> Sigma<'a> {
    pub fn new(e: &'a RepEngine, m: u32, ambient: WideSubcat, t: ShiftedObject) -> Result<Self> {
        if !in_domain(e, &ambient, m, t) {
            return Err(input_err!("{} is not an object of the ambient category", t.display(e)));
        }
        let perp = WideSubcat::perp(e, &[t.module], &ambient);
        Ok(Sigma { e, m, ambient, perp, t })
    }

    pub fn perp(&self) -> &WideSubcat {
        &self.perp
    }

    pub fn domain(&self) -> Vec<ShiftedObject> {
        objects_of(self.e, &self.perp, self.m)
    }

    pub fn codomain(&self) -> Vec<ShiftedObject> {
        objects_of(self.e, &self.ambient, self.m)
            .into_iter()
            .filter(|&y| compatible(self.e, y, self.t))
            .collect()
    }

    fn in_codomain(&self, y: ShiftedObject) -> bool {
        in_domain(self.e, &self.ambient, self.m, y) && compatible(self.e, y, self.t)
    }

    pub fn apply(&self, x: ShiftedObject) -> Result<ShiftedObject> {
        if !in_domain(self.e, &self.perp, self.m, x) {
            return Err(input_err!(
                "{} is not in the domain of sigma at {}",
                x.display(self.e),
                self.t.display(self.e)
            ));
        }
        let by_chart = self.chart(x)?;
        let by_congruence = self.congruence(x)?;
        if by_chart != by_congruence {
            return Err(consistency_err!(
                "sigma at {} of {}: chart gives {}, congruence gives {}",
                self.t.display(self.e),
                x.display(self.e),
                by_chart.display(self.e),
                by_congruence.display(self.e)
            ));
        }
        if !self.in_codomain(by_chart) {
            return Err(consistency_err!(
                "sigma at {} sends {} outside its codomain to {}",
                self.t.display(self.e),
                x.display(self.e),
                by_chart.display(self.e)
            ));
        }
        Ok(by_chart)
    }

    fn chart(&self, x: ShiftedObject) -> Result<ShiftedObject> {
        let (e, t, k) = (self.e, self.t.module, self.t.level);
        let (xm, j) = (x.module, x.level);
        if j < k {
            return Ok(x);
        }
        let case = classify_case(e, xm, t)?;
        if j == k {
            if k == self.m && case == CaseLabel::Bc {
                return Err(consistency_err!(
                    "epi onto a relatively projective {} at the top level",
                    e.dim(t)
                ));
            }
            return Ok(match case {
                CaseLabel::Bb => ShiftedObject::new(gamma(e, xm, t)?, k),
                _ => x,
            });
        }
        let y = gamma(e, xm, t)?;
        Ok(match case {
            CaseLabel::A => ShiftedObject::new(y, j - 1),
            _ => ShiftedObject::new(y, j),
        })
    }

    fn congruence(&self, x: ShiftedObject) -> Result<ShiftedObject> {
        if self.in_codomain(x) {
            return Ok(x);
        }
        let (e, t) = (self.e, self.t.module);
        let y = gamma(e, x.module, t)?;
        let (delta, _) = braid_relation(e, y, x.module, t)
            .ok_or_else(|| consistency_err!("no braid relation between {} and {}", e.dim(y), e.dim(x.module)))?;
        if delta == 1 {
            Ok(ShiftedObject::new(y, x.level))
        } else if x.level > 0 {
            Ok(ShiftedObject::new(y, x.level - 1))
        } else {
            Err(consistency_err!("level drop below zero for {}", x.display(e)))
        }
    }

    pub fn apply_inverse(&self, y: ShiftedObject) -> Result<ShiftedObject> {
        if !self.in_codomain(y) {
            return Err(input_err!(
                "{} is not compatible with {}",
                y.display(self.e),
                self.t.display(self.e)
            ));
        }
        let (e, t, k) = (self.e, self.t.module, self.t.level);
        let (ym, j) = (y.module, y.level);
        let x = if j < k {
            y
        } else if e.hom_dim(t, ym) > 0 && e.right_approximation(t, ym)?.kind == MapKind::Epi {
            ShiftedObject::new(gamma_inverse(e, ym, t)?, j + 1)
        } else if j == k && e.hom_dim(t, ym) == 0 {
            y
        } else {
            ShiftedObject::new(gamma_inverse(e, ym, t)?, j)
        };
        if !in_domain(e, &self.perp, self.m, x) {
            return Err(consistency_err!(
                "inverse sigma at {} sends {} outside its domain to {}",
                self.t.display(e),
                y.display(e),
                x.display(e)
            ));
        }
        Ok(x)
    }
}

/// `θ` on an ordered compatible tuple of objects of `C^m(W)`.
pub fn theta_in(e: &RepEngine, m: u32, w: &WideSubcat, tuple: &[ShiftedObject]) -> Result<Vec<ShiftedObject>> {
    let Some((&t, rest)) = tuple.split_last() else {
        return Ok(Vec::new());
    };
    if !in_domain(e, w, m, t) {
        return Err(input_err!("{} is not an object of the category", t.display(e)));
    }
    if rest.is_empty() {
        return Ok(vec![t]);
    }
    if !pairwise_compatible(e, tuple) {
        return Err(input_err!("{} is not pairwise compatible", show_list(e, tuple)));
    }
    let sigma = Sigma::new(e, m, w.clone(), t)?;
    let xs = rest
        .iter()
        .map(|&y| sigma.apply_inverse(y))
        .collect::<Result<Vec<_>>>()?;
    let mut out = theta_in(e, m, sigma.perp(), &xs)?;
    out.push(t);
    Ok(out)
}

pub fn theta(e: &RepEngine, m: u32, tuple: &[ShiftedObject]) -> Result<Vec<ShiftedObject>> {
    theta_in(e, m, &WideSubcat::whole(e), tuple)
}

/// Inverse of [`theta_in`] on m-exceptional sequences of `W`.
pub fn theta_inverse_in(e: &RepEngine, m: u32, w: &WideSubcat, seq: &[ShiftedObject]) -> Result<Vec<ShiftedObject>> {
    let Some((&t, rest)) = seq.split_last() else {
        return Ok(Vec::new());
    };
    let sigma = Sigma::new(e, m, w.clone(), t)?;
    let inner = theta_inverse_in(e, m, sigma.perp(), rest)?;
    let mut out = inner.into_iter().map(|x| sigma.apply(x)).collect::<Result<Vec<_>>>()?;
    out.push(t);
    Ok(out)
}

pub fn theta_inverse(e: &RepEngine, m: u32, seq: &[ShiftedObject]) -> Result<Vec<ShiftedObject>> {
    if !is_m_exc_sequence(e, m, seq) {
        return Err(input_err!("{} is not an m-exceptional sequence", show_list(e, seq)));
    }
    theta_inverse_in(e, m, &WideSubcat::whole(e), seq)
}

/// Levels in `0..=m`, each term in the perpendicular category of the later
/// terms, and level `m` only on terms projective there.
pub fn is_m_exc_sequence(e: &RepEngine, m: u32, terms: &[ShiftedObject]) -> bool {
    let whole = WideSubcat::whole(e);
    (0..terms.len()).all(|j| {
        let later: Vec<_> = terms[j + 1..].iter().map(|o| o.module).collect();
        in_domain(e, &WideSubcat::perp(e, &later, &whole), m, terms[j])
    })
}

/// All m-exceptional sequences of the given length, sorted.
pub fn enumerate_m_exc_sequences(e: &RepEngine, m: u32, length: usize) -> Vec<Vec<ShiftedObject>> {
    let mut out = Vec::new();
    for s in enumerate_exc_sequences(e, &WideSubcat::whole(e), length) {
        let choices: Vec<Vec<u32>> = s
            .rel_proj
            .iter()
            .map(|&p| (0..if p { m + 1 } else { m }).collect())
            .collect();
        let mut levels = vec![0u32; length];
        lift(&s.terms, &choices, 0, &mut levels, &mut out);
    }
    out.sort();
    out
}

fn lift(
    terms: &[crate::ModuleId],
    choices: &[Vec<u32>],
    i: usize,
    levels: &mut Vec<u32>,
    out: &mut Vec<Vec<ShiftedObject>>,
) {
    if i == terms.len() {
        out.push(
            terms
                .iter()
                .zip(levels.iter())
                .map(|(&t, &l)| ShiftedObject::new(t, l))
                .collect(),
        );
        return;
    }
    for &l in &choices[i] {
        levels[i] = l;
        lift(terms, choices, i + 1, levels, out);
    }
}

/// Which of the four configurations of levels a compatible pair falls into,
/// after ordering so that `i <= i'`: 1 = both levels strictly increase,
/// 2 = only the source levels differ, 3 = only the image levels differ,
/// 4 = both equal. 0 flags a pair whose levels cross.
pub fn compatibility_case(x: ShiftedObject, x2: ShiftedObject, y: ShiftedObject, y2: ShiftedObject) -> u8 {
    let forward = x.level < x2.level || (x.level == x2.level && y.level <= y2.level);
    let (i, i2, j, j2) = if forward {
        (x.level, x2.level, y.level, y2.level)
    } else {
        (x2.level, x.level, y2.level, y.level)
    };
    match (i < i2, j.cmp(&j2)) {
        (_, std::cmp::Ordering::Greater) => 0,
        (true, std::cmp::Ordering::Less) => 1,
        (true, std::cmp::Ordering::Equal) => 2,
        (false, std::cmp::Ordering::Less) => 3,
        (false, std::cmp::Ordering::Equal) => 4,
    }
}

/// Bijectivity of `σ_{T[k]}` onto the objects compatible with `T[k]`, and
/// preservation and reflection of compatibility on every pair.
pub fn verify_key_lemma(e: &RepEngine, m: u32, t: ShiftedObject) -> Report {
    let mut r = Report::new(format!("key lemma at {}", t.display(e)));
    let Some(sigma) = r.absorb(Sigma::new(e, m, WideSubcat::whole(e), t)) else {
        return r;
    };
    let domain = sigma.domain();
    let codomain = sigma.codomain();
    r.check(domain.len() == codomain.len(), || {
        format!("domain has {} objects, codomain {}", domain.len(), codomain.len())
    });
    let mut images = Vec::with_capacity(domain.len());
    for &x in &domain {
        let Some(y) = r.absorb(sigma.apply(x)) else {
            return r;
        };
        if let Some(back) = r.absorb(sigma.apply_inverse(y)) {
            r.check(back == x, || {
                format!("inverse of {} is {}", x.display(e), back.display(e))
            });
        }
        images.push(y);
    }
    let distinct: HashSet<_> = images.iter().copied().collect();
    r.check(distinct.len() == images.len(), || "sigma is not injective".to_string());
    let mut sorted = images.clone();
    sorted.sort();
    r.check(sorted == codomain, || "image differs from the codomain".to_string());
    for a in 0..domain.len() {
        for b in a + 1..domain.len() {
            let (x, x2, y, y2) = (domain[a], domain[b], images[a], images[b]);
            let case = compatibility_case(x, x2, y, y2);
            let before = compatible(e, x, x2);
            let after = compatible(e, y, y2);
            r.check(case != 0 && before == after, || {
                format!(
                    "case {case}: {} ~ {} is {before} but {} ~ {} is {after}",
                    x.display(e),
                    x2.display(e),
                    y.display(e),
                    y2.display(e)
                )
            });
        }
    }
    r
}

/// Key lemma for every object `T[k]` of `C^m(Λ)`.
pub fn verify_key_lemma_all(e: &RepEngine, m: u32) -> Report {
    let mut r = Report::new(format!("key lemma sweep m={m}"));
    for t in objects_of(e, &WideSubcat::whole(e), m) {
        r.merge(verify_key_lemma(e, m, t));
    }
    r
}

/// `θ` is a bijection from ordered compatible `k`-tuples onto
/// m-exceptional sequences of length `k`, for every `k <= n`, with
/// `θ^{-1} θ = id` and compatibility with deleting the first term.
pub fn verify_main_theorem(e: &RepEngine, m: u32) -> Report {
    let mut r = Report::new(format!("bijection sweep m={m}"));
    let whole = WideSubcat::whole(e);
    for k in 1..=e.rank() {
        let tuples = ordered_tuples(e, &whole, m, k);
        let mut seqs = enumerate_m_exc_sequences(e, m, k);
        let mut images = Vec::with_capacity(tuples.len());
        for tuple in &tuples {
            let Some(s) = r.absorb(theta(e, m, tuple)) else {
                continue;
            };
            r.check(is_m_exc_sequence(e, m, &s), || {
                format!(
                    "theta{} = {} is not m-exceptional",
                    show_list(e, tuple),
                    show_list(e, &s)
                )
            });
            if let Some(back) = r.absorb(theta_inverse(e, m, &s)) {
                r.check(&back == tuple, || {
                    format!("theta inverse does not return {}", show_list(e, tuple))
                });
            }
            if k > 1 {
                if let Some(tail) = r.absorb(theta(e, m, &tuple[1..])) {
                    r.check(tail == s[1..], || {
                        format!(
                            "deleting the first term of {} does not commute with theta",
                            show_list(e, tuple)
                        )
                    });
                }
            }
            images.push(s);
        }
        images.sort();
        seqs.sort();
        let n_images = images.len();
        images.dedup();
        r.check(images.len() == n_images, || {
            format!("theta is not injective on {k}-tuples")
        });
        r.check(images == seqs, || {
            format!(
                "{} images of {k}-tuples versus {} m-exceptional sequences",
                images.len(),
                seqs.len()
            )
        });
    }
    r
}

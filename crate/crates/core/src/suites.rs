//! Verification suites grouping the checks of each module, shared by the
//! command-line tool and the integration tests.

use crate::bijection::{enumerate_m_exc_sequences, verify_key_lemma_all, verify_main_theorem};
use crate::config::{mutation_graph, verify_duality, verify_mutations};
use crate::counting::{
    e_closed_form, e_count, f_poly_recursive, fr_product, g_matches_fr_product, g_poly, real_root_check,
};
use crate::lemmas;
use crate::linalg::q;
use crate::rep::RepEngine;
use crate::report::Report;
use crate::root::DynkinDiagram;
use crate::shift::{enumerate_m_clusters, ordered_tuples};
use crate::wide::{f_poly_enumerated, WideSubcat};

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// Pure counting identities for any diagram, plus enumeration cross-checks
/// when the diagram is simply laced and small.
pub fn counting(d: &DynkinDiagram, m: u32) -> Report {
    let tag = d.type_tag();
    let n = d.rank();
    let mut r = Report::new(format!("counting {tag}"));
    if let (Some(a), Some(b)) = (r.absorb(e_count(d)), r.absorb(e_closed_form(d))) {
        r.check(a == b, || format!("recursion gives {a}, closed form {b}"));
    }
    if let Some(f) = r.absorb(f_poly_recursive(d)) {
        r.check(f.coeff(0) == q(0), || "f(0) != 0".to_string());
        r.check(f.degree() == n && f.leading() == q(factorial(n)), || {
            format!("f = {f} does not lead with n!")
        });
    }
    if let Some(ok) = r.absorb(g_matches_fr_product(d)) {
        r.check(ok, || "g(m) differs from n! prod (hm + d_i)/d_i".to_string());
    }
    if let Some(g) = r.absorb(g_poly(d)) {
        r.check(g.eval(&q(0)) == q(factorial(n)), || "g(0) != n!".to_string());
        r.check(g.eval(&q(-1)) == q(0), || "g(-1) != 0".to_string());
        r.check(real_root_check(&g), || {
            format!("g = {g} has a real root outside [-1, 0)")
        });
    }
    if !d.is_simply_laced() || n > 5 {
        return r;
    }
    let Some(e) = r.absorb(RepEngine::new(
        crate::root::Quiver::new(d.clone()).expect("simply laced"),
    )) else {
        return r;
    };
    if let Some(f) = r.absorb(f_poly_recursive(d)) {
        let fe = f_poly_enumerated(&e);
        r.check(fe == f, || format!("enumerated f = {fe}, recursive f = {f}"));
    }
    if n > 4 {
        return r;
    }
    let Some(g) = r.absorb(g_poly(d)) else { return r };
    for mm in 0..=m.min(3) {
        let expected = crate::linalg::rational_to_i64(&g.eval(&q(i64::from(mm)))).unwrap_or(-1);
        let lifts = enumerate_m_exc_sequences(&e, mm, n).len() as i64;
        r.check(lifts == expected, || {
            format!("m={mm}: {lifts} m-exceptional sequences, g(m) = {expected}")
        });
        let whole = WideSubcat::whole(&e);
        if let Some(clusters) = r.absorb(enumerate_m_clusters(&e, &whole, mm)) {
            let count = clusters.len() as i64;
            let p = fr_product(d, mm).unwrap_or(-1);
            r.check(count == p, || {
                format!("m={mm}: {count} m-clusters, product formula {p}")
            });
            r.check(count * factorial(n) == expected, || {
                format!("m={mm}: n! * {count} != g(m) = {expected}")
            });
        }
        let ordered = ordered_tuples(&e, &whole, mm, n).len() as i64;
        r.check(ordered == expected, || {
            format!("m={mm}: {ordered} ordered complete tuples, g(m) = {expected}")
        });
    }
    r
}

/// Main theorem and key lemma sweeps, the `m = 0` degeneration, and the
/// braid-move lemma suites.
pub fn bijection(e: &RepEngine, m: u32) -> Report {
    let n = e.rank();
    let mut r = Report::new(format!("bijection {} m={m}", e.quiver().diagram().type_tag()));
    r.merge(verify_main_theorem(e, m));
    r.merge(verify_key_lemma_all(e, m));
    let zero = enumerate_m_exc_sequences(e, 0, n);
    r.check(zero.len() as i64 == factorial(n), || {
        format!("{} complete 0-exceptional sequences", zero.len())
    });
    let whole = WideSubcat::whole(e);
    for s in &zero {
        let rel_proj = (0..n).all(|j| {
            let later: Vec<_> = s[j + 1..].iter().map(|o| o.module).collect();
            WideSubcat::perp(e, &later, &whole).is_rel_projective(e, s[j].module)
        });
        r.check(rel_proj, || {
            "a 0-exceptional sequence has a term that is not relatively projective".to_string()
        });
    }
    if n <= 4 {
        r.merge(lemmas::check_all(e));
    }
    r
}

pub fn duality(e: &RepEngine, m: u32) -> Report {
    let mut r = Report::new(format!("duality {} m={m}", e.quiver().diagram().type_tag()));
    r.merge(verify_duality(e, m));
    r
}

pub fn mutation(e: &RepEngine, m: u32) -> Report {
    let mut r = Report::new(format!("mutation {} m={m}", e.quiver().diagram().type_tag()));
    r.merge(verify_mutations(e, m));
    if let Some(g) = r.absorb(mutation_graph(e, m)) {
        let expected = fr_product(e.quiver().diagram(), m).unwrap_or(-1);
        r.check(g.nodes.len() as i64 == expected, || {
            format!("graph has {} nodes, expected {expected}", g.nodes.len())
        });
    }
    r
}

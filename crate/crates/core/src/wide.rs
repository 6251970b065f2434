//! Perpendicular categories, exceptional sequences and the braid mutation
//! `(X, T) <-> (T, Y)`.
//!
//! A wide subcategory is kept as the explicit list of exceptional modules it
//! contains. Exceptional sequences "in W" are sequences of modules of the
//! ambient category whose terms all lie in W; a sequence is complete in W
//! when its length is `rank(W)`.

use crate::counting::Poly;
use crate::error::{consistency_err, input_err, Result};
use crate::linalg::integer_rank;
use crate::rep::{MapKind, ModuleId, RepEngine};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WideSubcat {
    generators: Vec<ModuleId>,
    objects: Vec<ModuleId>,
    rank: usize,
}

impl WideSubcat {
    pub fn whole(e: &RepEngine) -> Self {
        WideSubcat {
            generators: Vec::new(),
            objects: e.modules().collect(),
            rank: e.rank(),
        }
    }

    fn from_objects(e: &RepEngine, generators: Vec<ModuleId>, objects: Vec<ModuleId>) -> Self {
        let dims: Vec<&[i64]> = objects.iter().map(|&m| e.dim(m).entries()).collect();
        let rank = integer_rank(&dims, e.rank());
        WideSubcat {
            generators,
            objects,
            rank,
        }
    }

    /// Right perpendicular category of `gens` inside `within`: all `X` with
    /// `Hom(M, X) = 0 = Ext^1(M, X)` for every generator `M`.
    pub fn perp(e: &RepEngine, gens: &[ModuleId], within: &WideSubcat) -> Self {
        let objects = within
            .objects
            .iter()
            .copied()
            .filter(|&x| gens.iter().all(|&g| e.hom_ext_vanish(g, x)))
            .collect();
        Self::from_objects(e, Self::joined(&within.generators, gens), objects)
    }

    /// Left perpendicular category: all `X` with `Hom(X, M) = 0 = Ext^1(X, M)`.
    pub fn left_perp(e: &RepEngine, gens: &[ModuleId], within: &WideSubcat) -> Self {
        let objects = within
            .objects
            .iter()
            .copied()
            .filter(|&x| gens.iter().all(|&g| e.hom_ext_vanish(x, g)))
            .collect();
        Self::from_objects(e, Self::joined(&within.generators, gens), objects)
    }

    /// The smallest wide subcategory containing `mods`, as `^⊥(mods^⊥)`.
    pub fn generated_by(e: &RepEngine, mods: &[ModuleId]) -> Self {
        let whole = Self::whole(e);
        let right = Self::perp(e, mods, &whole);
        let mut w = Self::left_perp(e, &right.objects, &whole);
        w.generators = mods.to_vec();
        w
    }

    pub fn intersection(e: &RepEngine, a: &WideSubcat, b: &WideSubcat) -> Self {
        let objects = a.objects.iter().copied().filter(|x| b.contains(*x)).collect();
        Self::from_objects(e, Self::joined(&a.generators, &b.generators), objects)
    }

    fn joined(a: &[ModuleId], b: &[ModuleId]) -> Vec<ModuleId> {
        let mut g = a.to_vec();
        g.extend_from_slice(b);
        g
    }

    pub fn generators(&self) -> &[ModuleId] {
        &self.generators
    }

    pub fn objects(&self) -> &[ModuleId] {
        &self.objects
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn contains(&self, m: ModuleId) -> bool {
        self.objects.binary_search(&m).is_ok()
    }

    pub fn same_objects(&self, other: &WideSubcat) -> bool {
        self.objects == other.objects
    }

    /// `x` is projective in this subcategory: `Ext^1(x, Z) = 0` for all `Z` in it.
    pub fn is_rel_projective(&self, e: &RepEngine, x: ModuleId) -> bool {
        self.contains(x) && self.objects.iter().all(|&z| e.ext_dim(x, z) == 0)
    }

    pub fn rel_projectives(&self, e: &RepEngine) -> Vec<ModuleId> {
        self.objects
            .iter()
            .copied()
            .filter(|&x| self.is_rel_projective(e, x))
            .collect()
    }
}

/// An exceptional sequence with its relatively projective terms flagged.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExcSequence {
    pub terms: Vec<ModuleId>,
    pub rel_proj: Vec<bool>,
}

impl ExcSequence {
    pub fn projective_count(&self) -> usize {
        self.rel_proj.iter().filter(|&&p| p).count()
    }
}

/// `Hom(E_j, E_i) = 0 = Ext^1(E_j, E_i)` for all `i < j`.
pub fn is_exceptional_sequence(e: &RepEngine, terms: &[ModuleId]) -> bool {
    terms
        .iter()
        .enumerate()
        .all(|(j, &ej)| terms[..j].iter().all(|&ei| e.is_exceptional_pair(ei, ej)))
}

/// Flags `E_j` when it is projective in `(E_{j+1} ⊕ ... ⊕ E_l)^⊥`.
pub fn mark_relative_projectives(e: &RepEngine, terms: &[ModuleId]) -> Result<ExcSequence> {
    if !is_exceptional_sequence(e, terms) {
        return Err(input_err!("not an exceptional sequence: {terms:?}"));
    }
    let whole = WideSubcat::whole(e);
    let rel_proj: Vec<bool> = (0..terms.len())
        .map(|j| WideSubcat::perp(e, &terms[j + 1..], &whole).is_rel_projective(e, terms[j]))
        .collect();
    if terms.len() == e.rank() && !rel_proj.first().copied().unwrap_or(true) {
        return Err(consistency_err!(
            "first term of a complete sequence is not relatively projective"
        ));
    }
    Ok(ExcSequence {
        terms: terms.to_vec(),
        rel_proj,
    })
}

/// All exceptional sequences of the given length with terms in `w`, each
/// term flagged relative to the later terms inside `w`. Sorted by terms.
pub fn enumerate_exc_sequences(e: &RepEngine, w: &WideSubcat, length: usize) -> Vec<ExcSequence> {
    let mut out = Vec::new();
    let mut suffix: Vec<(ModuleId, bool)> = Vec::new();
    extend_left(e, w, length, &mut suffix, &mut out);
    out.sort();
    out
}

/// Complete exceptional sequences in `w`, built by choosing the last term
/// `M` and recursing into `M^⊥ ∩ w`.
pub fn enumerate_complete_exc_sequences(e: &RepEngine, w: &WideSubcat) -> Vec<ExcSequence> {
    enumerate_exc_sequences(e, w, w.rank())
}

fn extend_left(
    e: &RepEngine,
    w: &WideSubcat,
    remaining: usize,
    suffix: &mut Vec<(ModuleId, bool)>,
    out: &mut Vec<ExcSequence>,
) {
    if remaining == 0 {
        let (terms, rel_proj) = suffix.iter().rev().copied().unzip();
        out.push(ExcSequence { terms, rel_proj });
        return;
    }
    for &m in w.objects() {
        let flag = w.is_rel_projective(e, m);
        let inner = WideSubcat::perp(e, &[m], w);
        suffix.push((m, flag));
        extend_left(e, &inner, remaining - 1, suffix, out);
        suffix.pop();
    }
}

/// `f(x) = sum_k e_k x^k`, `e_k` = number of complete sequences with `k`
/// relatively projective terms.
pub fn f_poly_enumerated(e: &RepEngine) -> Poly {
    let mut counts = vec![0i64; e.rank() + 1];
    for s in enumerate_complete_exc_sequences(e, &WideSubcat::whole(e)) {
        counts[s.projective_count()] += 1;
    }
    Poly::from_integers(&counts)
}

/// The four cases of the braid mutation of an exceptional pair `(X, T)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    /// The left approximation `X -> T^s` is a mono.
    A,
    /// `X` and `T` are hom-ext orthogonal.
    Ba,
    /// `Ext^1(X, T) != 0`.
    Bb,
    /// The left approximation `X -> T^s` is an epi.
    Bc,
}

impl CaseLabel {
    pub fn is_a(self) -> bool {
        self == CaseLabel::A
    }
}

pub fn classify_case(e: &RepEngine, x: ModuleId, t: ModuleId) -> Result<CaseLabel> {
    if !e.is_exceptional_pair(x, t) {
        return Err(input_err!("({}, {}) is not an exceptional pair", e.dim(x), e.dim(t)));
    }
    if e.ext_dim(x, t) > 0 {
        return Ok(CaseLabel::Bb);
    }
    if e.hom_dim(x, t) > 0 {
        return Ok(match e.left_approximation(x, t)?.kind {
            MapKind::Mono => CaseLabel::A,
            MapKind::Epi => CaseLabel::Bc,
        });
    }
    Ok(CaseLabel::Ba)
}

/// Writes `dim y = delta * dim x + s * dim t`; returns `(delta, s)`.
pub fn braid_relation(e: &RepEngine, y: ModuleId, x: ModuleId, t: ModuleId) -> Option<(i64, i64)> {
    let (dy, dx, dt) = (e.dim(y), e.dim(x), e.dim(t));
    [1, -1].into_iter().find_map(|delta| {
        let rest = dy.minus(&dx.scaled(delta));
        rest.integer_multiple_of(dt).map(|s| (delta, s))
    })
}

/// `gamma(X) = Y` where `(X, T) ~ (T, Y)`: the unique exceptional `Y` in
/// `^⊥T` spanning the same rank two wide subcategory with `T` as `X` does.
pub fn gamma(e: &RepEngine, x: ModuleId, t: ModuleId) -> Result<ModuleId> {
    if !e.is_exceptional_pair(x, t) {
        return Err(input_err!(
            "gamma needs X in T^⊥, got X = {}, T = {}",
            e.dim(x),
            e.dim(t)
        ));
    }
    let whole = WideSubcat::whole(e);
    let target = WideSubcat::perp(e, &[x, t], &whole);
    let found: Vec<ModuleId> = e
        .modules()
        .filter(|&y| e.is_exceptional_pair(t, y))
        .filter(|&y| braid_relation(e, y, x, t).is_some())
        .filter(|&y| WideSubcat::perp(e, &[y, t], &whole).same_objects(&target))
        .collect();
    match found.as_slice() {
        [y] => Ok(*y),
        _ => Err(consistency_err!(
            "gamma({}, T = {}) has {} candidates",
            e.dim(x),
            e.dim(t),
            found.len()
        )),
    }
}

/// Inverse of [`gamma`]: `(T, Y) ~ (X, T)` with `X` in `T^⊥`.
pub fn gamma_inverse(e: &RepEngine, y: ModuleId, t: ModuleId) -> Result<ModuleId> {
    if !e.is_exceptional_pair(t, y) {
        return Err(input_err!(
            "gamma inverse needs Y in ^⊥T, got Y = {}, T = {}",
            e.dim(y),
            e.dim(t)
        ));
    }
    let whole = WideSubcat::whole(e);
    let target = WideSubcat::perp(e, &[y, t], &whole);
    let found: Vec<ModuleId> = e
        .modules()
        .filter(|&x| e.is_exceptional_pair(x, t))
        .filter(|&x| braid_relation(e, x, y, t).is_some())
        .filter(|&x| WideSubcat::perp(e, &[x, t], &whole).same_objects(&target))
        .collect();
    match found.as_slice() {
        [x] => Ok(*x),
        _ => Err(consistency_err!(
            "gamma inverse({}, T = {}) has {} candidates",
            e.dim(y),
            e.dim(t),
            found.len()
        )),
    }
}

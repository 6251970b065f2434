//! m-configurations dual to ordered m-clusters, the duality `V^t E C = D`,
//! horizontal subcategories, and mutation computed on t̃-c-vectors.
//!
//! Throughout, `f_j = dim End(T_j) = 1`, so `D` is the identity.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::bijection::theta;
use crate::error::{consistency_err, input_err, Result};
use crate::linalg::{integer_coordinates, integer_rank, q, Matrix, Q};
use crate::rep::{ModuleId, RepEngine};
use crate::report::Report;
use crate::root::DimVector;
use crate::shift::{compatible, enumerate_m_clusters, in_domain, show_list, ShiftedObject};
use crate::wide::{braid_relation, gamma_inverse, WideSubcat};

/// Orders `items` so that `before(a, b)` fails only when `b` comes first.
/// Among available items the one with the smallest key is taken next.
fn topo_order<K: Ord>(
    items: &[ShiftedObject],
    allowed_before: impl Fn(ShiftedObject, ShiftedObject) -> bool,
    key: impl Fn(ShiftedObject) -> K,
) -> Option<Vec<ShiftedObject>> {
    let n = items.len();
    // forced[a][b]: a must come before b
    let forced: Vec<Vec<bool>> = (0..n)
        .map(|a| (0..n).map(|b| a != b && !allowed_before(items[b], items[a])).collect())
        .collect();
    let mut placed = vec![false; n];
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let next = (0..n)
            .filter(|&b| !placed[b] && (0..n).all(|a| placed[a] || !forced[a][b]))
            .min_by_key(|&b| key(items[b]))?;
        placed[next] = true;
        out.push(items[next]);
    }
    let ok = (0..n).all(|i| (i + 1..n).all(|j| allowed_before(out[i], out[j])));
    ok.then_some(out)
}

/// `T_j` may precede `T_i` when `Hom(T_j, T_i) = 0 = Ext^1(T_j, T_i)`, so
/// that the reversed tuple is an exceptional sequence.
pub fn is_t_ordered(e: &RepEngine, tuple: &[ShiftedObject]) -> bool {
    (0..tuple.len()).all(|i| (i + 1..tuple.len()).all(|j| e.hom_ext_vanish(tuple[i].module, tuple[j].module)))
}

/// Canonical order of an m-cluster whose reverse is a complete exceptional
/// sequence: higher levels first, then smaller dimension vectors.
pub fn order_cluster(e: &RepEngine, cluster: &[ShiftedObject]) -> Result<Vec<ShiftedObject>> {
    topo_order(
        cluster,
        |a, b| e.hom_ext_vanish(a.module, b.module),
        |o| (std::cmp::Reverse(o.level), o.module),
    )
    .ok_or_else(|| {
        consistency_err!(
            "no ordering of {} reverses to an exceptional sequence",
            show_list(e, cluster)
        )
    })
}

/// Every ordering of `cluster` whose reverse is exceptional.
pub fn all_t_orders(e: &RepEngine, cluster: &[ShiftedObject]) -> Vec<Vec<ShiftedObject>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut used = vec![false; cluster.len()];
    permute(e, cluster, &mut used, &mut cur, &mut out);
    out
}

fn permute(
    e: &RepEngine,
    items: &[ShiftedObject],
    used: &mut [bool],
    cur: &mut Vec<ShiftedObject>,
    out: &mut Vec<Vec<ShiftedObject>>,
) {
    if cur.len() == items.len() {
        out.push(cur.clone());
        return;
    }
    for i in 0..items.len() {
        if used[i] || !cur.iter().all(|c| e.hom_ext_vanish(c.module, items[i].module)) {
            continue;
        }
        used[i] = true;
        cur.push(items[i]);
        permute(e, items, used, cur, out);
        cur.pop();
        used[i] = false;
    }
}

/// A `t̃`-c-vector `root · t^slope`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TildeCVector {
    pub root: DimVector,
    pub slope: u32,
}

impl TildeCVector {
    /// Evaluation at `t = -1`.
    pub fn c_vector(&self) -> DimVector {
        self.root.scaled(if self.slope % 2 == 0 { 1 } else { -1 })
    }
}

/// Components `M_j[ℓ_j]`; component `j` is paired with entry `j` of the
/// ordered cluster it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MConfiguration {
    pub m: u32,
    pub components: Vec<ShiftedObject>,
}

impl MConfiguration {
    pub fn tilde_c(&self, e: &RepEngine) -> Vec<TildeCVector> {
        self.components
            .iter()
            .map(|o| TildeCVector {
                root: e.dim(o.module).clone(),
                slope: o.slope(self.m),
            })
            .collect()
    }

    pub fn c_vectors(&self, e: &RepEngine) -> Vec<DimVector> {
        self.tilde_c(e).iter().map(TildeCVector::c_vector).collect()
    }

    pub fn from_tilde_c(e: &RepEngine, m: u32, tc: &[TildeCVector]) -> Result<Self> {
        let components = tc
            .iter()
            .map(|t| {
                let module = e
                    .module_of(&t.root)
                    .ok_or_else(|| input_err!("{} is not a positive root", t.root))?;
                if t.slope > m {
                    return Err(input_err!("slope {} exceeds m = {m}", t.slope));
                }
                Ok(ShiftedObject::new(module, m - t.slope))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MConfiguration { m, components })
    }

    pub fn component_set(&self) -> BTreeSet<ShiftedObject> {
        self.components.iter().copied().collect()
    }

    /// Levels in range, `Hom(M_i, M_j) = 0` for `k_j >= k_i`,
    /// `Ext^1(M_i, M_j) = 0` for `k_j >= k_i + 1`, and the modules
    /// reorder into a complete exceptional sequence.
    pub fn validate(&self, e: &RepEngine) -> Result<()> {
        let c = &self.components;
        if c.len() != e.rank() {
            return Err(consistency_err!(
                "configuration has {} components, rank is {}",
                c.len(),
                e.rank()
            ));
        }
        for (i, a) in c.iter().enumerate() {
            if a.level > self.m {
                return Err(consistency_err!("level {} above m = {}", a.level, self.m));
            }
            for (j, b) in c.iter().enumerate() {
                if i == j {
                    continue;
                }
                let hom_bad = b.level >= a.level && e.hom_dim(a.module, b.module) != 0;
                let ext_bad = b.level > a.level && e.ext_dim(a.module, b.module) != 0;
                if hom_bad || ext_bad {
                    return Err(consistency_err!(
                        "components {} and {} violate the orthogonality conditions",
                        a.display(e),
                        b.display(e)
                    ));
                }
            }
        }
        // (N_1, ..., N_n) exceptional: N_a may precede N_b when Hom/Ext from N_b to N_a vanish.
        topo_order(c, |a, b| e.hom_ext_vanish(b.module, a.module), |o| o.module)
            .map(|_| ())
            .ok_or_else(|| consistency_err!("modules of {} are not a complete exceptional sequence", show_list(e, c)))
    }
}

fn garside_in(e: &RepEngine, m: u32, w: &WideSubcat, ordered: &[ShiftedObject]) -> Result<Vec<ShiftedObject>> {
    let Some((&t, rest)) = ordered.split_last() else {
        return Ok(Vec::new());
    };
    let mut moved = Vec::with_capacity(rest.len());
    for &tj in rest {
        let x = gamma_inverse(e, tj.module, t.module)?;
        let (delta, _) = braid_relation(e, tj.module, x, t.module)
            .ok_or_else(|| consistency_err!("no braid relation for {} over {}", e.dim(tj.module), e.dim(t.module)))?;
        let level = if delta == -1 { tj.level + 1 } else { tj.level };
        if level > m {
            return Err(consistency_err!(
                "moving {} over {} leaves the fundamental domain",
                tj.display(e),
                t.display(e)
            ));
        }
        moved.push(ShiftedObject::new(x, level));
    }
    let perp = WideSubcat::perp(e, &[t.module], w);
    let mut out = garside_in(e, m, &perp, &moved)?;
    out.push(t);
    Ok(out)
}

/// Moves each entry of the ordered cluster over the later entries by
/// braid moves. The result must coincide with `θ`, satisfy the
/// configuration conditions, and have each slope equal to or one less
/// than the paired entry's slope.
pub fn garside_configuration(e: &RepEngine, m: u32, ordered: &[ShiftedObject]) -> Result<MConfiguration> {
    if !is_t_ordered(e, ordered) {
        return Err(input_err!(
            "{} does not reverse to an exceptional sequence",
            show_list(e, ordered)
        ));
    }
    let comps = garside_in(e, m, &WideSubcat::whole(e), ordered)?;
    let th = theta(e, m, ordered)?;
    if comps != th {
        return Err(consistency_err!(
            "braid moves give {} but theta gives {}",
            show_list(e, &comps),
            show_list(e, &th)
        ));
    }
    for (t, c) in ordered.iter().zip(&comps) {
        if c.level != t.level && c.level != t.level + 1 {
            return Err(consistency_err!(
                "slope of {} is not paired with {}",
                c.display(e),
                t.display(e)
            ));
        }
    }
    let config = MConfiguration { m, components: comps };
    config.validate(e)?;
    Ok(config)
}

/// Column data for the pairing `V^t E C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityFrame {
    /// `(-1)^{m-k_i} dim T_i`.
    pub v: Vec<DimVector>,
    /// `c_j`.
    pub c: Vec<DimVector>,
    /// `V^t E C`, row `i`, column `j` = `<v_i, c_j>`.
    pub product: Vec<Vec<i64>>,
}

impl DualityFrame {
    pub fn is_identity(&self) -> bool {
        self.product
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)))
    }
}

pub fn signed_dim(e: &RepEngine, m: u32, o: ShiftedObject) -> DimVector {
    e.dim(o.module).scaled(if (m - o.level) % 2 == 0 { 1 } else { -1 })
}

pub fn duality_frame(e: &RepEngine, ordered: &[ShiftedObject], config: &MConfiguration) -> DualityFrame {
    let v: Vec<DimVector> = ordered.iter().map(|&o| signed_dim(e, config.m, o)).collect();
    let c = config.c_vectors(e);
    let product = v
        .iter()
        .map(|vi| c.iter().map(|cj| e.euler().form(vi.entries(), cj.entries())).collect())
        .collect();
    DualityFrame { v, c, product }
}

/// Rows of `E^{-1}` are the projective dimension vectors, and
/// `G^t = V^t E` satisfies `G^t C = D`.
pub fn g_vector_check(e: &RepEngine, frame: &DualityFrame) -> Result<bool> {
    let mut rows: Vec<DimVector> = e.euler().inverse_rows().into_iter().map(DimVector).collect();
    rows.sort();
    let mut projs: Vec<DimVector> = e.projectives()?.into_iter().map(|p| e.dim(p).clone()).collect();
    projs.sort();
    if rows != projs {
        return Ok(false);
    }
    let n = e.rank();
    let vt = Matrix::from_rows(&frame.v.iter().map(|x| x.entries().to_vec()).collect::<Vec<_>>());
    let gt = vt.mul(&e.euler().to_matrix());
    let c = Matrix::from_columns(n, &frame.c.iter().map(|x| x.entries().to_vec()).collect::<Vec<_>>());
    Ok(gt.mul(&c) == Matrix::identity(n))
}

/// The wide subcategory `A_s` generated by components of slope `s` or
/// `s + 1`, with the signed vectors `c_i(s)`.
#[derive(Debug, Clone)]
pub struct HorizontalSubcat {
    pub s: i64,
    pub selected: Vec<usize>,
    pub subcat: WideSubcat,
    pub c_s: Vec<DimVector>,
}

pub fn horizontal_subcat(e: &RepEngine, config: &MConfiguration, s: i64) -> HorizontalSubcat {
    let mut selected = Vec::new();
    let mut c_s = Vec::new();
    for (i, o) in config.components.iter().enumerate() {
        let slope = i64::from(o.slope(config.m));
        if slope == s || slope == s + 1 {
            selected.push(i);
            let d = e.dim(o.module);
            c_s.push(if slope == s { d.clone() } else { d.neg() });
        }
    }
    let mods: Vec<ModuleId> = selected.iter().map(|&i| config.components[i].module).collect();
    let subcat = WideSubcat::generated_by(e, &mods);
    HorizontalSubcat {
        s,
        selected,
        subcat,
        c_s,
    }
}

/// Checks for each `0 <= s < m`: rank `h_s`, the description as an
/// intersection of perpendicular categories, lattice membership in `Z(s)`,
/// and `A_s ∩ A_t = 0` when `|t - s| >= 2`.
pub fn check_horizontal(e: &RepEngine, config: &MConfiguration) -> Report {
    let mut r = Report::new("horizontal subcategories");
    let m = i64::from(config.m);
    let whole = WideSubcat::whole(e);
    let a = |t: i64| horizontal_subcat(e, config, t);
    for s in 0..m {
        let h = a(s);
        let hs = h.selected.len();
        r.check(h.subcat.rank() == hs, || {
            format!("A_{s} has rank {}, expected {hs}", h.subcat.rank())
        });
        let cs: Vec<Vec<i64>> = h.c_s.iter().map(|v| v.entries().to_vec()).collect();
        r.check(integer_rank(&cs, e.rank()) == hs, || {
            format!("Z({s}) has rank below {hs}")
        });
        let mut rhs = whole.clone();
        for t in s + 2..=m {
            rhs = WideSubcat::perp(e, a(t).subcat.objects(), &rhs);
        }
        for t in -1..=s - 2 {
            rhs = WideSubcat::left_perp(e, a(t).subcat.objects(), &rhs);
        }
        r.check(rhs.same_objects(&h.subcat), || {
            format!("A_{s} differs from the intersection of perpendicular categories")
        });
        for x in e.modules() {
            let in_lattice = integer_coordinates(&cs, e.dim(x).entries()).is_some();
            r.check(in_lattice == h.subcat.contains(x), || {
                format!(
                    "{} in Z({s}) is {in_lattice}, in A_{s} is {}",
                    e.dim(x),
                    h.subcat.contains(x)
                )
            });
        }
        for t in s + 2..m {
            let other = a(t);
            let meet = WideSubcat::intersection(e, &h.subcat, &other.subcat);
            r.check(meet.is_empty(), || format!("A_{s} and A_{t} intersect"));
        }
    }
    r
}

/// `b_{kj} = <c_j, c_k> - <c_k, c_j>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeData {
    pub b: Vec<Vec<i64>>,
}

pub fn exchange_data(e: &RepEngine, config: &MConfiguration) -> ExchangeData {
    let c = config.c_vectors(e);
    let form = |x: &DimVector, y: &DimVector| e.euler().form(x.entries(), y.entries());
    let b = (0..c.len())
        .map(|k| (0..c.len()).map(|j| form(&c[j], &c[k]) - form(&c[k], &c[j])).collect())
        .collect();
    ExchangeData { b }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Plus,
    Minus,
}

impl Direction {
    pub fn opposite(self) -> Self {
        match self {
            Direction::Plus => Direction::Minus,
            Direction::Minus => Direction::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Direction::Plus => '+',
            Direction::Minus => '-',
        }
    }
}

impl std::str::FromStr for Direction {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(Direction::Plus),
            "-" | "minus" => Ok(Direction::Minus),
            _ => Err(input_err!("direction must be + or -, got {s:?}")),
        }
    }
}

/// Slope window `s` for mutating component `k`, or an input error when the
/// move would leave slopes `0..=m`.
pub fn mutation_window(config: &MConfiguration, k: usize, dir: Direction) -> Result<u32> {
    let comp = config
        .components
        .get(k)
        .ok_or_else(|| input_err!("component index {k} out of range"))?;
    let slope = comp.slope(config.m);
    match dir {
        Direction::Plus if slope < config.m => Ok(slope),
        Direction::Minus if slope > 0 => Ok(slope - 1),
        _ => Err(input_err!(
            "mutation {}{} is blocked: component has slope {} with m = {}",
            k + 1,
            dir.symbol(),
            slope,
            config.m
        )),
    }
}

/// Mutation of the configuration on t̃-c-vectors.
pub fn mutate_tilde_c(e: &RepEngine, config: &MConfiguration, k: usize, dir: Direction) -> Result<MConfiguration> {
    let s = mutation_window(config, k, dir)?;
    let tc = config.tilde_c(e);
    let c = config.c_vectors(e);
    let b = exchange_data(e, config).b;
    let mut out = tc.clone();
    out[k].slope = match dir {
        Direction::Plus => tc[k].slope + 1,
        Direction::Minus => tc[k].slope - 1,
    };
    for j in 0..tc.len() {
        if j == k || (tc[j].slope != s && tc[j].slope != s + 1) {
            continue;
        }
        let bkj = b[k][j];
        let coupled = match dir {
            Direction::Plus => bkj > 0,
            Direction::Minus => bkj < 0,
        };
        if !coupled {
            continue;
        }
        let cj = c[j].plus(&c[k].scaled(bkj.abs()));
        let v = if s % 2 == 0 { cj.clone() } else { cj.neg() };
        out[j] = if e.module_of(&v).is_some() {
            TildeCVector { root: v, slope: s }
        } else if e.module_of(&v.neg()).is_some() {
            TildeCVector {
                root: v.neg(),
                slope: s + 1,
            }
        } else {
            return Err(consistency_err!("mutated c-vector {cj} is not a real root up to sign"));
        };
    }
    let mutated = MConfiguration::from_tilde_c(e, config.m, &out)?;
    mutated.validate(e)?;
    Ok(mutated)
}

/// Recovers the mutated cluster from the tropical equations: the new
/// entry `k` is the unique object whose signed dimension vector `v`
/// satisfies `<v, c'_j> = δ_{jk}`, compatible with the other entries and
/// with slope equal to or one more than that of `c'_k`.
pub fn mutated_cluster(
    e: &RepEngine,
    ordered: &[ShiftedObject],
    mutated: &MConfiguration,
    k: usize,
) -> Result<Vec<ShiftedObject>> {
    let n = e.rank();
    let m = mutated.m;
    let c = mutated.c_vectors(e);
    let cm = Matrix::from_columns(n, &c.iter().map(|x| x.entries().to_vec()).collect::<Vec<_>>());
    // v^t E C' = e_k^t  <=>  (E C')^t v = e_k
    let sys = e.euler().to_matrix().mul(&cm).transpose();
    let rhs: Vec<Q> = (0..n).map(|i| q(i64::from(i == k))).collect();
    let v = sys
        .solve_unique(&rhs)
        .ok_or_else(|| consistency_err!("tropical equations are singular"))?;
    let v: Vec<i64> = v
        .iter()
        .map(crate::linalg::rational_to_i64)
        .collect::<Option<_>>()
        .ok_or_else(|| consistency_err!("tropical solution is not integral"))?;
    let v = DimVector(v);
    let (root, odd) = if v.is_nonnegative() {
        (v.clone(), false)
    } else {
        (v.neg(), true)
    };
    let module = e
        .module_of(&root)
        .ok_or_else(|| consistency_err!("tropical solution {v} is not a signed root"))?;
    let whole = WideSubcat::whole(e);
    let target_slope = mutated.components[k].slope(m);
    let candidates: Vec<ShiftedObject> = (0..=m)
        .map(|level| ShiftedObject::new(module, level))
        .filter(|o| ((m - o.level) % 2 == 1) == odd)
        .filter(|&o| in_domain(e, &whole, m, o))
        .filter(|o| o.slope(m) == target_slope || o.slope(m) == target_slope + 1)
        .filter(|&o| ordered.iter().enumerate().all(|(i, &t)| i == k || compatible(e, o, t)))
        .collect();
    let [new] = candidates.as_slice() else {
        return Err(consistency_err!(
            "{} candidates for the mutated entry {v}",
            candidates.len()
        ));
    };
    let mut out = ordered.to_vec();
    out[k] = *new;
    let frame = duality_frame(e, &out, mutated);
    if !frame.is_identity() {
        return Err(consistency_err!(
            "mutated frame is not the identity: {:?}",
            frame.product
        ));
    }
    Ok(out)
}

fn pair_set(ordered: &[ShiftedObject], config: &MConfiguration) -> BTreeSet<(ShiftedObject, ShiftedObject)> {
    ordered.iter().copied().zip(config.components.iter().copied()).collect()
}

/// Duality checks on every m-cluster: Garside equals `θ`, `V^t E C = D`
/// with positive diagonal, the slope rule, the g-vector restatement,
/// horizontal subcategories, and (rank at most 4) independence of the
/// chosen order.
pub fn verify_duality(e: &RepEngine, m: u32) -> Report {
    let mut r = Report::new(format!("duality sweep m={m}"));
    let Some(clusters) = r.absorb(enumerate_m_clusters(e, &WideSubcat::whole(e), m)) else {
        return r;
    };
    for cluster in clusters {
        let Some(ordered) = r.absorb(order_cluster(e, &cluster)) else {
            continue;
        };
        let Some(config) = r.absorb(garside_configuration(e, m, &ordered)) else {
            continue;
        };
        let frame = duality_frame(e, &ordered, &config);
        r.check(frame.is_identity(), || {
            format!("{}: V^t E C = {:?}", show_list(e, &ordered), frame.product)
        });
        if let Some(g) = r.absorb(g_vector_check(e, &frame)) {
            r.check(g, || format!("{}: g-vector restatement fails", show_list(e, &ordered)));
        }
        let h = check_horizontal(e, &config);
        r.merge(h);
        if e.rank() <= 4 {
            let reference = config.component_set();
            for other in all_t_orders(e, &cluster) {
                if let Some(c2) = r.absorb(garside_configuration(e, m, &other)) {
                    r.check(c2.component_set() == reference, || {
                        format!("orders of {} give different configurations", show_list(e, &cluster))
                    });
                }
            }
        }
    }
    r
}

/// For every m-cluster and every unblocked `(k, dir)`: the mutated
/// configuration is the Garside configuration of the recovered cluster,
/// the recovered cluster is an m-cluster, and mutating back restores the
/// configuration.
pub fn verify_mutations(e: &RepEngine, m: u32) -> Report {
    let mut r = Report::new(format!("mutation sweep m={m}"));
    let Some(clusters) = r.absorb(enumerate_m_clusters(e, &WideSubcat::whole(e), m)) else {
        return r;
    };
    for cluster in &clusters {
        let Some(ordered) = r.absorb(order_cluster(e, cluster)) else {
            continue;
        };
        let Some(config) = r.absorb(garside_configuration(e, m, &ordered)) else {
            continue;
        };
        for k in 0..ordered.len() {
            for dir in [Direction::Plus, Direction::Minus] {
                if mutation_window(&config, k, dir).is_err() {
                    continue;
                }
                let ctx = || format!("{} at {}{}", show_list(e, &ordered), k + 1, dir.symbol());
                let Some(mutated) = r.absorb(mutate_tilde_c(e, &config, k, dir)) else {
                    continue;
                };
                if let Some(back) = r.absorb(mutate_tilde_c(e, &mutated, k, dir.opposite())) {
                    r.check(back == config, || {
                        format!("{}: round trip changes the configuration", ctx())
                    });
                }
                let Some(new) = r.absorb(mutated_cluster(e, &ordered, &mutated, k)) else {
                    continue;
                };
                let mut sorted = new.clone();
                sorted.sort();
                r.check(clusters.binary_search(&sorted).is_ok(), || {
                    format!("{}: result is not an m-cluster", ctx())
                });
                let Some(reordered) = r.absorb(order_cluster(e, &new)) else {
                    continue;
                };
                if let Some(g) = r.absorb(garside_configuration(e, m, &reordered)) {
                    r.check(pair_set(&reordered, &g) == pair_set(&new, &mutated), || {
                        format!("{}: Garside configuration of the mutated cluster differs", ctx())
                    });
                }
            }
        }
    }
    r
}

/// Clusters as nodes (indices into the sorted cluster list) and
/// mutations as directed edges `(from, to, k, dir)` with `k` 1-based in
/// the canonical order of the source cluster.
#[derive(Debug, Clone)]
pub struct MutationGraph {
    pub nodes: Vec<Vec<ShiftedObject>>,
    pub edges: Vec<(usize, usize, usize, Direction)>,
}

pub fn mutation_graph(e: &RepEngine, m: u32) -> Result<MutationGraph> {
    let nodes = enumerate_m_clusters(e, &WideSubcat::whole(e), m)?;
    let mut edges = Vec::new();
    for (i, cluster) in nodes.iter().enumerate() {
        let ordered = order_cluster(e, cluster)?;
        let config = garside_configuration(e, m, &ordered)?;
        for k in 0..ordered.len() {
            for dir in [Direction::Plus, Direction::Minus] {
                if mutation_window(&config, k, dir).is_err() {
                    continue;
                }
                let mutated = mutate_tilde_c(e, &config, k, dir)?;
                let mut new = mutated_cluster(e, &ordered, &mutated, k)?;
                new.sort();
                let j = nodes
                    .binary_search(&new)
                    .map_err(|_| consistency_err!("mutation leaves the set of m-clusters"))?;
                edges.push((i, j, k + 1, dir));
            }
        }
    }
    Ok(MutationGraph { nodes, edges })
}

impl MutationGraph {
    pub fn to_dot(&self, e: &RepEngine) -> String {
        let mut s = String::from("digraph mutations {\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let label: Vec<String> = n.iter().map(|o| o.display(e).to_string()).collect();
            let _ = writeln!(s, "  {i} [label=\"{}\"];", label.join(" "));
        }
        for &(a, b, k, dir) in &self.edges {
            let _ = writeln!(s, "  {a} -> {b} [label=\"μ{k}{}\"];", dir.symbol());
        }
        s.push_str("}\n");
        s
    }
}

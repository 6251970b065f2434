//! The fundamental domain of the m-cluster category: shifted objects `M[j]`
//! with `0 <= j <= m`, compatibility, and m-cluster enumeration.

use std::fmt;

use crate::error::{consistency_err, Result};
use crate::rep::{ModuleId, RepEngine};
use crate::wide::WideSubcat;

/// `M[level]`. Ordered by module (hence by root) and then level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiftedObject {
    pub module: ModuleId,
    pub level: u32,
}

impl ShiftedObject {
    pub fn new(module: ModuleId, level: u32) -> Self {
        ShiftedObject { module, level }
    }

    /// `m - level`.
    pub fn slope(self, m: u32) -> u32 {
        m - self.level
    }

    pub fn display(self, e: &RepEngine) -> Shown<'_> {
        Shown(e, self)
    }
}

pub struct Shown<'a>(&'a RepEngine, ShiftedObject);

impl fmt::Display for Shown<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.0.dim(self.1.module), self.1.level)
    }
}

pub fn show_list(e: &RepEngine, objs: &[ShiftedObject]) -> String {
    let parts: Vec<String> = objs.iter().map(|o| o.display(e).to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Objects of `C^m(W)`: every module of `W` at levels `0..m`, plus the
/// relative projectives of `W` at level `m`. Sorted.
pub fn objects_of(e: &RepEngine, w: &WideSubcat, m: u32) -> Vec<ShiftedObject> {
    let mut out = Vec::new();
    for &x in w.objects() {
        for level in 0..m {
            out.push(ShiftedObject::new(x, level));
        }
        if w.is_rel_projective(e, x) {
            out.push(ShiftedObject::new(x, m));
        }
    }
    out.sort();
    out
}

pub fn in_domain(e: &RepEngine, w: &WideSubcat, m: u32, o: ShiftedObject) -> bool {
    w.contains(o.module) && (o.level < m || (o.level == m && w.is_rel_projective(e, o.module)))
}

/// Compatibility of `X[j]` and `Y[k]`.
pub fn compatible(e: &RepEngine, a: ShiftedObject, b: ShiftedObject) -> bool {
    let (x, y) = (a.module, b.module);
    match a.level.cmp(&b.level) {
        std::cmp::Ordering::Less => e.hom_ext_vanish(y, x),
        std::cmp::Ordering::Equal => x != y && e.ext_dim(x, y) == 0 && e.ext_dim(y, x) == 0,
        std::cmp::Ordering::Greater => e.hom_ext_vanish(x, y),
    }
}

pub fn pairwise_compatible(e: &RepEngine, objs: &[ShiftedObject]) -> bool {
    objs.iter()
        .enumerate()
        .all(|(i, &a)| objs[i + 1..].iter().all(|&b| compatible(e, a, b)))
}

/// Compatibility graph on a fixed object list, as adjacency bitsets.
struct Graph {
    adj: Vec<Vec<bool>>,
}

impl Graph {
    fn new(e: &RepEngine, objs: &[ShiftedObject]) -> Self {
        let n = objs.len();
        let mut adj = vec![vec![false; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let c = compatible(e, objs[i], objs[j]);
                adj[i][j] = c;
                adj[j][i] = c;
            }
        }
        Graph { adj }
    }

    /// Bron-Kerbosch with pivoting; cliques reported as sorted index lists.
    fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let all: Vec<usize> = (0..self.adj.len()).collect();
        self.bk(&mut Vec::new(), all, Vec::new(), &mut out);
        out
    }

    fn bk(&self, r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() && x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| self.adj[u][v]).count())
            .expect("p or x nonempty");
        let (mut p, mut x) = (p, x);
        let candidates: Vec<usize> = p.iter().copied().filter(|&v| !self.adj[pivot][v]).collect();
        for v in candidates {
            r.push(v);
            let np = p.iter().copied().filter(|&u| self.adj[v][u]).collect();
            let nx = x.iter().copied().filter(|&u| self.adj[v][u]).collect();
            self.bk(r, np, nx, out);
            r.pop();
            p.retain(|&u| u != v);
            x.push(v);
        }
    }
}

/// All m-clusters of `w`, each sorted, the list sorted. Every maximal
/// compatible set is checked to have `rank(w)` elements.
pub fn enumerate_m_clusters(e: &RepEngine, w: &WideSubcat, m: u32) -> Result<Vec<Vec<ShiftedObject>>> {
    let objs = objects_of(e, w, m);
    let g = Graph::new(e, &objs);
    let mut out = Vec::new();
    for clique in g.maximal_cliques() {
        let cluster: Vec<ShiftedObject> = clique.iter().map(|&i| objs[i]).collect();
        if cluster.len() != w.rank() {
            return Err(consistency_err!(
                "maximal compatible set {} has {} elements, expected {}",
                show_list(e, &cluster),
                cluster.len(),
                w.rank()
            ));
        }
        out.push(cluster);
    }
    out.sort();
    Ok(out)
}

/// Ordered `k`-tuples of pairwise compatible objects of `w`, in
/// lexicographic order of object positions.
pub fn ordered_tuples(e: &RepEngine, w: &WideSubcat, m: u32, k: usize) -> Vec<Vec<ShiftedObject>> {
    let objs = objects_of(e, w, m);
    let g = Graph::new(e, &objs);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    extend(&g, k, &mut cur, &mut out);
    out.into_iter()
        .map(|t: Vec<usize>| t.into_iter().map(|i| objs[i]).collect())
        .collect()
}

fn extend(g: &Graph, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for v in 0..g.adj.len() {
        if cur.iter().all(|&u| g.adj[u][v]) {
            cur.push(v);
            extend(g, k, cur, out);
            cur.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root::DimVector;

    fn obj(e: &RepEngine, d: &[i64], level: u32) -> ShiftedObject {
        ShiftedObject::new(e.module_of(&DimVector(d.to_vec())).unwrap(), level)
    }

    #[test]
    fn object_counts() {
        let e = RepEngine::parse("A2").unwrap();
        let w = WideSubcat::whole(&e);
        assert_eq!(objects_of(&e, &w, 1).len(), 5);
        assert_eq!(objects_of(&e, &w, 2).len(), 8);
        let zero = objects_of(&e, &w, 0);
        assert_eq!(zero, vec![obj(&e, &[0, 1], 0), obj(&e, &[1, 1], 0)]);
    }

    #[test]
    fn compatibility_examples() {
        let e = RepEngine::parse("A2").unwrap();
        assert!(compatible(&e, obj(&e, &[1, 0], 0), obj(&e, &[0, 1], 1)));
        assert!(!compatible(&e, obj(&e, &[0, 1], 1), obj(&e, &[1, 1], 0)));
        let x = obj(&e, &[1, 1], 0);
        assert!(!compatible(&e, x, x));
    }

    #[test]
    fn compatibility_is_symmetric() {
        let e = RepEngine::parse("A3").unwrap();
        let objs = objects_of(&e, &WideSubcat::whole(&e), 2);
        for &a in &objs {
            for &b in &objs {
                assert_eq!(compatible(&e, a, b), compatible(&e, b, a));
            }
        }
    }

    #[test]
    fn a2_clusters_m1() {
        let e = RepEngine::parse("A2").unwrap();
        let got = enumerate_m_clusters(&e, &WideSubcat::whole(&e), 1).unwrap();
        let s1 = |l| obj(&e, &[1, 0], l);
        let s2 = |l| obj(&e, &[0, 1], l);
        let p1 = |l| obj(&e, &[1, 1], l);
        let mut want = vec![
            vec![s1(0), p1(0)],
            vec![p1(0), s2(0)],
            vec![s1(0), s2(1)],
            vec![s2(0), p1(1)],
            vec![p1(1), s2(1)],
        ];
        for c in &mut want {
            c.sort();
        }
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn cluster_counts() {
        for (tag, m, n) in [("A3", 1, 14), ("A3", 2, 55), ("A2", 0, 1), ("A3", 0, 1)] {
            let e = RepEngine::parse(tag).unwrap();
            assert_eq!(
                enumerate_m_clusters(&e, &WideSubcat::whole(&e), m).unwrap().len(),
                n,
                "{tag} m={m}"
            );
        }
    }

    #[test]
    fn ordered_complete_tuples_are_permuted_clusters() {
        let e = RepEngine::parse("A2").unwrap();
        let w = WideSubcat::whole(&e);
        // g(1) = 10 = 2! * 5
        assert_eq!(ordered_tuples(&e, &w, 1, 2).len(), 10);
        assert_eq!(ordered_tuples(&e, &w, 1, 1).len(), 5);
    }
}

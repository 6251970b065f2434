//! Dynkin diagrams, quivers, Euler forms and positive roots.
//!
//! Canonical vertex numbering (0-based):
//! * `A_n`, `B_n`, `C_n`, `F4`, `G2`: a path `0 - 1 - ... - (n-1)`. The valued
//!   edge is the last one for `B_n`/`C_n`, the middle one `1 - 2` for `F4`.
//! * `D_n`: the path `0 - ... - (n-2)` with vertex `n-1` attached to `n-3`.
//! * `E_n`: the path `0 - ... - (n-2)` with vertex `n-1` attached to `2`.
//!
//! Disjoint unions (`"A2xA1"`) number the components consecutively in the
//! order they are written.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{input_err, Error, Result};
use crate::linalg::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DynkinType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl DynkinType {
    pub fn new(letter: char, rank: usize) -> Result<Self> {
        let t = match letter.to_ascii_uppercase() {
            'A' if rank >= 1 => DynkinType::A(rank),
            'B' if rank >= 2 => DynkinType::B(rank),
            'C' if rank >= 2 => DynkinType::C(rank),
            'D' if rank >= 4 => DynkinType::D(rank),
            'E' if (6..=8).contains(&rank) => DynkinType::E(rank),
            'F' if rank == 4 => DynkinType::F4,
            'G' if rank == 2 => DynkinType::G2,
            _ => return Err(input_err!("no Dynkin diagram of type {letter}{rank}")),
        };
        Ok(t)
    }

    pub fn rank(self) -> usize {
        match self {
            DynkinType::A(n) | DynkinType::B(n) | DynkinType::C(n) | DynkinType::D(n) | DynkinType::E(n) => n,
            DynkinType::F4 => 4,
            DynkinType::G2 => 2,
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self, DynkinType::A(_) | DynkinType::D(_) | DynkinType::E(_))
    }

    /// Coxeter number and degrees of the Weyl group.
    pub fn coxeter_data(self) -> CoxeterData {
        let (h, mut degrees): (u64, Vec<u64>) = match self {
            DynkinType::A(n) => (n as u64 + 1, (2..=n as u64 + 1).collect()),
            DynkinType::B(n) | DynkinType::C(n) => (2 * n as u64, (1..=n as u64).map(|i| 2 * i).collect()),
            DynkinType::D(n) => {
                let n = n as u64;
                let mut d: Vec<u64> = (1..n).map(|i| 2 * i).collect();
                d.push(n);
                (2 * n - 2, d)
            }
            DynkinType::E(6) => (12, vec![2, 5, 6, 8, 9, 12]),
            DynkinType::E(7) => (18, vec![2, 6, 8, 10, 12, 14, 18]),
            DynkinType::E(8) => (30, vec![2, 8, 12, 14, 18, 20, 24, 30]),
            DynkinType::E(n) => unreachable!("E{n} is rejected at construction"),
            DynkinType::F4 => (12, vec![2, 6, 8, 12]),
            DynkinType::G2 => (6, vec![2, 6]),
        };
        degrees.sort_unstable();
        CoxeterData { h, degrees }
    }

    fn letter(self) -> char {
        match self {
            DynkinType::A(_) => 'A',
            DynkinType::B(_) => 'B',
            DynkinType::C(_) => 'C',
            DynkinType::D(_) => 'D',
            DynkinType::E(_) => 'E',
            DynkinType::F4 => 'F',
            DynkinType::G2 => 'G',
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter(), self.rank())
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| input_err!("empty component in type tag"))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| input_err!("bad rank in type tag {s:?}"))?;
        DynkinType::new(letter, rank)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterData {
    pub h: u64,
    pub degrees: Vec<u64>,
}

/// Valuation `(a, b)` of an edge `u - v`: the Cartan entries are
/// `c[u][v] = -a` and `c[v][u] = -b`. Simply-laced edges carry `(1, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Valuation(pub u8, pub u8);

impl Valuation {
    pub const PLAIN: Valuation = Valuation(1, 1);

    pub fn is_plain(self) -> bool {
        self == Self::PLAIN
    }

    fn swapped(self) -> Valuation {
        Valuation(self.1, self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub valuation: Valuation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    n: usize,
    edges: Vec<Edge>,
    types: Vec<DynkinType>,
    components: Vec<Vec<usize>>,
}

impl DynkinDiagram {
    /// Parses a tag such as `"A3"`, `"E6"` or `"A2xA1"`.
    pub fn parse(tag: &str) -> Result<Self> {
        if tag.trim().is_empty() {
            return Err(input_err!("empty type tag"));
        }
        let types = tag
            .split(['x', 'X', '×'])
            .map(str::parse)
            .collect::<Result<Vec<DynkinType>>>()?;
        Ok(Self::from_types(&types))
    }

    pub fn from_type(t: DynkinType) -> Self {
        Self::from_types(&[t])
    }

    pub fn from_types(types: &[DynkinType]) -> Self {
        let mut edges = Vec::new();
        let mut components = Vec::new();
        let mut offset = 0;
        for &t in types {
            let r = t.rank();
            for e in canonical_edges(t) {
                edges.push(Edge {
                    u: e.u + offset,
                    v: e.v + offset,
                    ..e
                });
            }
            components.push((offset..offset + r).collect());
            offset += r;
        }
        DynkinDiagram {
            n: offset,
            edges,
            types: types.to_vec(),
            components,
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn types(&self) -> &[DynkinType] {
        &self.types
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    pub fn is_simply_laced(&self) -> bool {
        self.edges.iter().all(|e| e.valuation.is_plain())
    }

    pub fn type_tag(&self) -> String {
        self.types.iter().map(ToString::to_string).collect::<Vec<_>>().join("x")
    }

    /// Component types sorted, used as a memoization key.
    pub fn canonical_key(&self) -> Vec<DynkinType> {
        let mut k = self.types.clone();
        k.sort();
        k
    }

    pub fn coxeter_data(&self) -> Result<CoxeterData> {
        match self.types.as_slice() {
            [t] => Ok(t.coxeter_data()),
            _ => Err(input_err!(
                "Coxeter data needs a connected diagram, got {}",
                self.type_tag()
            )),
        }
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |e| {
            if e.u == i {
                Some(e.v)
            } else if e.v == i {
                Some(e.u)
            } else {
                None
            }
        })
    }

    /// Cartan matrix entry `c[i][j]`.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        if i == j {
            return 2;
        }
        self.edges
            .iter()
            .find_map(|e| {
                if (e.u, e.v) == (i, j) {
                    Some(-(e.valuation.0 as i64))
                } else if (e.u, e.v) == (j, i) {
                    Some(-(e.valuation.1 as i64))
                } else {
                    None
                }
            })
            .unwrap_or(0)
    }

    /// Connected components of the diagram with vertex `i` removed, each
    /// returned as a canonically numbered diagram of its type.
    pub fn delete_vertex(&self, i: usize) -> Result<Vec<DynkinDiagram>> {
        if i >= self.n {
            return Err(input_err!("vertex {i} not in {}", self.type_tag()));
        }
        let keep: BTreeSet<usize> = self.vertices().filter(|&v| v != i).collect();
        Ok(self
            .split_components(&keep)
            .into_iter()
            .map(|comp| DynkinDiagram::from_type(self.classify(&comp)))
            .collect())
    }

    fn split_components(&self, keep: &BTreeSet<usize>) -> Vec<Vec<usize>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for &start in keep {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if keep.contains(&y) && seen.insert(y) {
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Identifies the Dynkin type of a connected induced subdiagram.
    fn classify(&self, verts: &[usize]) -> DynkinType {
        let inside: HashSet<usize> = verts.iter().copied().collect();
        let n = verts.len();
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| inside.contains(&e.u) && inside.contains(&e.v))
            .copied()
            .collect();
        let degree = |v: usize| edges.iter().filter(|e| e.u == v || e.v == v).count();
        if n == 1 {
            return DynkinType::A(1);
        }
        if let Some(&branch) = verts.iter().find(|&&v| degree(v) == 3) {
            let mut arms: Vec<usize> = edges
                .iter()
                .filter_map(|e| match (e.u == branch, e.v == branch) {
                    (true, _) => Some(e.v),
                    (_, true) => Some(e.u),
                    _ => None,
                })
                .map(|first| arm_length(&edges, branch, first))
                .collect();
            arms.sort_unstable();
            return match arms.as_slice() {
                [1, 1, k] => DynkinType::D(k + 3),
                [1, 2, k @ 2..=4] => DynkinType::E(k + 4),
                other => unreachable!("subdiagram of a Dynkin diagram with arms {other:?}"),
            };
        }
        // A path: walk it from an endpoint, orienting edge valuations along the walk.
        let start = *verts.iter().find(|&&v| degree(v) <= 1).expect("path has an endpoint");
        let mut walk = Vec::with_capacity(n - 1);
        let (mut prev, mut cur) = (usize::MAX, start);
        while let Some(e) = edges
            .iter()
            .find(|e| (e.u == cur && e.v != prev) || (e.v == cur && e.u != prev))
        {
            let (next, val) = if e.u == cur {
                (e.v, e.valuation)
            } else {
                (e.u, e.valuation.swapped())
            };
            walk.push(val);
            prev = cur;
            cur = next;
        }
        let valued: Vec<usize> = (0..walk.len()).filter(|&p| !walk[p].is_plain()).collect();
        match valued.as_slice() {
            [] => DynkinType::A(n),
            [p] => {
                let val = walk[*p];
                if val.0.max(val.1) == 3 {
                    DynkinType::G2
                } else if n == 4 && *p == 1 {
                    DynkinType::F4
                } else {
                    // Orient so that the valued edge comes last.
                    let val = if *p == 0 && n > 2 { val.swapped() } else { val };
                    if val == Valuation(1, 2) {
                        DynkinType::B(n)
                    } else {
                        DynkinType::C(n)
                    }
                }
            }
            _ => unreachable!("Dynkin path with several valued edges"),
        }
    }

    /// Positive roots of a simply-laced diagram, sorted lexicographically.
    ///
    /// Computed as the closure of the simple roots under the simple
    /// reflections `s_i(v) = v - (sum_j c[i][j] v_j) e_i`, keeping only
    /// nonnegative vectors.
    pub fn positive_roots(&self) -> Result<Vec<DimVector>> {
        if !self.is_simply_laced() {
            return Err(Error::Unsupported(format!(
                "root enumeration is implemented for simply-laced diagrams only, got {}",
                self.type_tag()
            )));
        }
        let n = self.n;
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(v) = queue.pop_front() {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| self.cartan(i, j) * v[j]).sum();
                if pairing == 0 {
                    continue;
                }
                let mut w = v.clone();
                w[i] -= pairing;
                if w.iter().all(|&x| x >= 0) && w.iter().any(|&x| x > 0) && seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        Ok(seen.into_iter().map(DimVector).collect())
    }
}

fn arm_length(edges: &[Edge], branch: usize, first: usize) -> usize {
    let (mut prev, mut cur, mut len) = (branch, first, 1);
    while let Some(e) = edges
        .iter()
        .find(|e| (e.u == cur && e.v != prev) || (e.v == cur && e.u != prev))
    {
        let next = if e.u == cur { e.v } else { e.u };
        prev = cur;
        cur = next;
        len += 1;
    }
    len
}

fn canonical_edges(t: DynkinType) -> Vec<Edge> {
    let plain = |u, v| Edge {
        u,
        v,
        valuation: Valuation::PLAIN,
    };
    let path = |n: usize| (0..n.saturating_sub(1)).map(|i| plain(i, i + 1)).collect::<Vec<_>>();
    match t {
        DynkinType::A(n) => path(n),
        DynkinType::B(n) | DynkinType::C(n) => {
            let mut e = path(n);
            let last = e.last_mut().expect("rank >= 2");
            last.valuation = if matches!(t, DynkinType::B(_)) {
                Valuation(1, 2)
            } else {
                Valuation(2, 1)
            };
            e
        }
        DynkinType::D(n) => {
            let mut e = path(n - 1);
            e.push(plain(n - 3, n - 1));
            e
        }
        DynkinType::E(n) => {
            let mut e = path(n - 1);
            e.push(plain(2, n - 1));
            e
        }
        DynkinType::F4 => {
            let mut e = path(4);
            e[1].valuation = Valuation(1, 2);
            e
        }
        DynkinType::G2 => vec![Edge {
            u: 0,
            v: 1,
            valuation: Valuation(1, 3),
        }],
    }
}

/// Integer vector indexed by the vertices; ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(pub Vec<i64>);

impl DimVector {
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        DimVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn scaled(&self, k: i64) -> DimVector {
        DimVector(self.0.iter().map(|x| k * x).collect())
    }

    pub fn plus(&self, other: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn minus(&self, other: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> DimVector {
        self.scaled(-1)
    }

    /// `Some(s)` when `self == s * other` for an integer `s`.
    pub fn integer_multiple_of(&self, other: &DimVector) -> Option<i64> {
        let (pos, &base) = other.0.iter().enumerate().find(|(_, &x)| x != 0)?;
        if self.0[pos] % base != 0 {
            return None;
        }
        let s = self.0[pos] / base;
        (*self == other.scaled(s)).then_some(s)
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// An orientation of a simply-laced Dynkin diagram. `arrows[e]` orients
/// `diagram.edges()[e]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    diagram: DynkinDiagram,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    /// Canonical orientation: every edge points from the smaller vertex to
    /// the larger one, so the vertex order is topological.
    pub fn new(diagram: DynkinDiagram) -> Result<Self> {
        let arrows = diagram.edges().iter().map(|e| (e.u.min(e.v), e.u.max(e.v))).collect();
        Self::with_arrows(diagram, arrows)
    }

    pub fn with_arrows(diagram: DynkinDiagram, arrows: Vec<(usize, usize)>) -> Result<Self> {
        if !diagram.is_simply_laced() {
            return Err(Error::Unsupported(format!(
                "representations of valued diagram {} are not supported",
                diagram.type_tag()
            )));
        }
        if arrows.len() != diagram.edges().len() {
            return Err(input_err!("need exactly one arrow per edge"));
        }
        for (a, e) in arrows.iter().zip(diagram.edges()) {
            if *a != (e.u, e.v) && *a != (e.v, e.u) {
                return Err(input_err!("arrow {a:?} does not orient edge {}-{}", e.u, e.v));
            }
        }
        Ok(Quiver { diagram, arrows })
    }

    pub fn parse(tag: &str) -> Result<Self> {
        Self::new(DynkinDiagram::parse(tag)?)
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn is_sink(&self, k: usize) -> bool {
        self.arrows.iter().all(|&(s, _)| s != k)
    }

    pub fn is_source(&self, k: usize) -> bool {
        self.arrows.iter().all(|&(_, t)| t != k)
    }

    /// Reverses every arrow incident to `k`.
    pub fn reflect(&self, k: usize) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|&(s, t)| if s == k || t == k { (t, s) } else { (s, t) })
            .collect();
        Quiver {
            diagram: self.diagram.clone(),
            arrows,
        }
    }

    pub fn euler_matrix(&self) -> EulerMatrix {
        let n = self.rank();
        let mut e = vec![vec![0i64; n]; n];
        for (i, row) in e.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(s, t) in &self.arrows {
            e[s][t] -= 1;
        }
        EulerMatrix(e)
    }
}

/// `e[i][j] = dim Hom(S_i, S_j) - dim Ext^1(S_i, S_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerMatrix(pub Vec<Vec<i64>>);

impl EulerMatrix {
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// The bilinear form `<x, y> = x^t E y`.
    pub fn form(&self, x: &[i64], y: &[i64]) -> i64 {
        self.0
            .iter()
            .zip(x)
            .map(|(row, xi)| xi * row.iter().zip(y).map(|(e, yj)| e * yj).sum::<i64>())
            .sum()
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(&self.0)
    }

    /// Rows of `E^{-1}`; these are the dimension vectors of the
    /// indecomposable projectives.
    pub fn inverse_rows(&self) -> Vec<Vec<i64>> {
        self.to_matrix()
            .inverse()
            .and_then(|m| m.to_integers())
            .expect("Euler matrix is unimodular")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_diagrams() {
        let a2 = DynkinDiagram::parse("A2").unwrap();
        assert_eq!(a2.rank(), 2);
        assert_eq!(
            a2.edges(),
            &[Edge {
                u: 0,
                v: 1,
                valuation: Valuation::PLAIN
            }]
        );

        let d4 = DynkinDiagram::parse("D4").unwrap();
        assert_eq!(d4.rank(), 4);
        let center_degree = d4.neighbors(1).count();
        assert_eq!(center_degree, 3);
        assert!(d4.vertices().filter(|&v| v != 1).all(|v| d4.neighbors(v).count() == 1));

        let b2 = DynkinDiagram::parse("B2").unwrap();
        assert_eq!(b2.edges()[0].valuation, Valuation(1, 2));
    }

    #[test]
    fn bad_tags_are_rejected() {
        for tag in ["D3", "E9", "F5", "G3", "B1", "A0", "Z2", "", "A2x"] {
            assert!(matches!(DynkinDiagram::parse(tag), Err(Error::Input(_))), "{tag}");
        }
    }

    #[test]
    fn union_tag() {
        let d = DynkinDiagram::parse("A2xA1").unwrap();
        assert_eq!(d.rank(), 3);
        assert_eq!(d.components(), &[vec![0, 1], vec![2]]);
        assert_eq!(d.type_tag(), "A2xA1");
        assert!(d.coxeter_data().is_err());
    }

    #[test]
    fn coxeter_tables() {
        let a2 = DynkinType::A(2).coxeter_data();
        assert_eq!((a2.h, a2.degrees), (3, vec![2, 3]));
        let d4 = DynkinType::D(4).coxeter_data();
        assert_eq!((d4.h, d4.degrees), (6, vec![2, 4, 4, 6]));
        let g2 = DynkinType::G2.coxeter_data();
        assert_eq!((g2.h, g2.degrees), (6, vec![2, 6]));
    }

    #[test]
    fn vertex_deletion() {
        let types = |tag: &str, i| {
            DynkinDiagram::parse(tag)
                .unwrap()
                .delete_vertex(i)
                .unwrap()
                .iter()
                .map(DynkinDiagram::type_tag)
                .collect::<Vec<_>>()
        };
        assert_eq!(types("A3", 1), ["A1", "A1"]);
        assert_eq!(types("A2", 0), ["A1"]);
        assert_eq!(types("D4", 1), ["A1", "A1", "A1"]);
        assert_eq!(types("D5", 0), ["D4"]);
        assert_eq!(types("D5", 4), ["A4"]);
        assert_eq!(types("E6", 0), ["D5"]);
        assert_eq!(types("E7", 6), ["A6"]);
        assert_eq!(types("E8", 0), ["D7"]);
        assert_eq!(types("E8", 6), ["E7"]);
        assert_eq!(types("B3", 0), ["B2"]);
        assert_eq!(types("B3", 2), ["A2"]);
        assert_eq!(types("C4", 0), ["C3"]);
        assert_eq!(types("F4", 0), ["C3"]);
        assert_eq!(types("F4", 3), ["B3"]);
        assert_eq!(types("F4", 1), ["A1", "A2"]);
        assert_eq!(types("G2", 1), ["A1"]);
        assert!(types("A1", 0).is_empty());
        assert!(DynkinDiagram::parse("A2").unwrap().delete_vertex(5).is_err());
    }

    #[test]
    fn root_counts() {
        let a2 = DynkinDiagram::parse("A2").unwrap().positive_roots().unwrap();
        let got: Vec<Vec<i64>> = a2.into_iter().map(|d| d.0).collect();
        assert_eq!(got, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        for (tag, n) in [("A3", 6), ("D4", 12), ("E6", 36), ("E7", 63), ("E8", 120), ("A2xA1", 4)] {
            assert_eq!(
                DynkinDiagram::parse(tag).unwrap().positive_roots().unwrap().len(),
                n,
                "{tag}"
            );
        }
        assert!(matches!(
            DynkinDiagram::parse("B2").unwrap().positive_roots(),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn euler_matrix_a2() {
        let q = Quiver::parse("A2").unwrap();
        let e = q.euler_matrix();
        assert_eq!(e.0, vec![vec![1, -1], vec![0, 1]]);
        assert_eq!(e.form(&[1, 0], &[0, 1]), -1);
        for r in q.diagram().positive_roots().unwrap() {
            assert_eq!(e.form(r.entries(), r.entries()), 1);
        }
        assert_eq!(e.inverse_rows(), vec![vec![1, 1], vec![0, 1]]);
    }

    #[test]
    fn valued_quiver_is_unsupported() {
        assert!(matches!(Quiver::parse("G2"), Err(Error::Unsupported(_))));
    }

    #[test]
    fn integer_multiple() {
        let t = DimVector(vec![1, 1, 0]);
        assert_eq!(DimVector(vec![-2, -2, 0]).integer_multiple_of(&t), Some(-2));
        assert_eq!(DimVector(vec![1, 0, 0]).integer_multiple_of(&t), None);
    }
}

//! Counting complete exceptional sequences for any Dynkin diagram, valued
//! ones included: the vertex-deletion recursion, the closed form
//! `n! h^n / prod d_i`, the polynomials `f(x)` and `g(m)`, and the
//! Fomin-Reading product.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{consistency_err, Result};
use crate::linalg::{q, rational_to_i64, Q};
use crate::root::{DynkinDiagram, DynkinType};

/// Univariate polynomial with exact rational coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    coeffs: Vec<Q>,
}

impl Poly {
    pub fn from_rationals(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_integers(c: &[i64]) -> Self {
        Self::from_rationals(c.iter().map(|&v| q(v)).collect())
    }

    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Q) -> Self {
        Self::from_rationals(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    /// `x + c`.
    pub fn linear(c: Q) -> Self {
        Self::from_rationals(vec![c, Q::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn leading(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_rationals((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&q(-1)))
    }

    pub fn scale(&self, c: &Q) -> Poly {
        Self::from_rationals(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_rationals(out)
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        Self::from_rationals(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * q(k as i64))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let dl = d.leading();
        let dd = d.degree();
        let mut quot = vec![Q::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / &dl;
            for (j, b) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * b;
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Self::from_rationals(quot), Self::from_rationals(rem))
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.leading().recip())
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn integer_coefficients(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(rational_to_i64).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let show_coeff = k == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{a}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

fn binomial(n: usize, k: usize) -> Q {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Q::from_integer(acc)
}

fn factorial(n: usize) -> Q {
    Q::from_integer((1..=n).map(BigInt::from).product())
}

fn to_count(v: &Q) -> Result<i64> {
    rational_to_i64(v).ok_or_else(|| consistency_err!("count {v} is not an integer"))
}

/// Memo table for `f` of connected types; `e = f(1)` is read off it.
#[derive(Default)]
struct Memo {
    f: HashMap<DynkinType, Poly>,
}

impl Memo {
    fn f_connected(&mut self, t: DynkinType) -> Poly {
        if let Some(p) = self.f.get(&t) {
            return p.clone();
        }
        let d = DynkinDiagram::from_type(t);
        let h = t.coxeter_data().h as i64;
        let mut sum = Poly::zero();
        for i in d.vertices() {
            let parts = d.delete_vertex(i).expect("vertex in range");
            let types: Vec<DynkinType> = parts.iter().flat_map(|p| p.types().to_vec()).collect();
            sum = sum.add(&self.f_union(&types));
        }
        // (x + h/2 - 1) * sum
        let shift = Q::new(BigInt::from(h - 2), BigInt::from(2));
        let p = Poly::linear(shift).mul(&sum);
        self.f.insert(t, p.clone());
        p
    }

    /// Shuffling product: `f_{A x B} = C(n_A + n_B, n_A) f_A f_B`.
    fn f_union(&mut self, types: &[DynkinType]) -> Poly {
        let mut acc = Poly::one();
        let mut n = 0;
        for &t in types {
            let r = t.rank();
            acc = acc.mul(&self.f_connected(t)).scale(&binomial(n + r, r));
            n += r;
        }
        acc
    }
}

/// `f(x) = sum_k e_k x^k` from the vertex-deletion recursion.
pub fn f_poly_recursive(d: &DynkinDiagram) -> Result<Poly> {
    let f = Memo::default().f_union(d.types());
    if !f.is_integral() {
        return Err(consistency_err!(
            "f for {} has non-integral coefficients: {f}",
            d.type_tag()
        ));
    }
    Ok(f)
}

/// Number of complete exceptional sequences via the recursion
/// `e = sum_i (h/2) e(Q minus i)` and the shuffling product.
pub fn e_count(d: &DynkinDiagram) -> Result<i64> {
    let f = f_poly_recursive(d)?;
    to_count(&f.eval(&Q::one()))
}

/// `n! h^n / prod d_i`, multiplied by the shuffle coefficient over components.
pub fn e_closed_form(d: &DynkinDiagram) -> Result<i64> {
    let mut acc = Q::one();
    let mut n = 0;
    for &t in d.types() {
        let r = t.rank();
        let cd = t.coxeter_data();
        let mut e = factorial(r) * Q::from_integer(BigInt::from(cd.h).pow(r as u32));
        for &di in &cd.degrees {
            e /= q(di as i64);
        }
        acc = acc * e * binomial(n + r, r);
        n += r;
    }
    to_count(&acc)
}

/// `g(m) = sum_k e_k (m+1)^k m^{n-k} = m^n f((m+1)/m)`.
pub fn g_from_f(f: &Poly, n: usize) -> Poly {
    let m = Poly::from_integers(&[0, 1]);
    let m1 = Poly::from_integers(&[1, 1]);
    (0..=n).fold(Poly::zero(), |acc, k| {
        acc.add(&m1.pow(k).mul(&m.pow(n - k)).scale(&f.coeff(k)))
    })
}

pub fn g_poly(d: &DynkinDiagram) -> Result<Poly> {
    Ok(g_from_f(&f_poly_recursive(d)?, d.rank()))
}

/// `prod_i (h m + d_i) / d_i` over all components, as a polynomial in `m`.
pub fn fr_product_poly(d: &DynkinDiagram) -> Poly {
    let mut acc = Poly::one();
    for &t in d.types() {
        let cd = t.coxeter_data();
        for &di in &cd.degrees {
            let factor = Poly::from_integers(&[di as i64, cd.h as i64]).scale(&q(di as i64).recip());
            acc = acc.mul(&factor);
        }
    }
    acc
}

/// The Fomin-Reading number of m-clusters.
pub fn fr_product(d: &DynkinDiagram, m: u32) -> Result<i64> {
    to_count(&fr_product_poly(d).eval(&q(m as i64)))
}

/// `g(m) = n! prod (h m + d_i)/d_i` coefficient-wise.
pub fn g_matches_fr_product(d: &DynkinDiagram) -> Result<bool> {
    Ok(g_poly(d)? == fr_product_poly(d).scale(&factorial(d.rank())))
}

fn sign_changes(values: &[Q]) -> usize {
    let signs: Vec<bool> = values
        .iter()
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

struct Sturm(Vec<Poly>);

impl Sturm {
    fn new(p: &Poly) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        while !chain.last().unwrap().is_zero() {
            let k = chain.len();
            let r = chain[k - 2].div_rem(&chain[k - 1]).1;
            chain.push(r.scale(&q(-1)));
        }
        chain.pop();
        Sturm(chain)
    }

    fn at(&self, x: &Q) -> usize {
        sign_changes(&self.0.iter().map(|p| p.eval(x)).collect::<Vec<_>>())
    }

    /// `plus`: `+infinity` if true, `-infinity` otherwise.
    fn at_infinity(&self, plus: bool) -> usize {
        let vals: Vec<Q> = self
            .0
            .iter()
            .map(|p| {
                let l = p.leading();
                if !plus && p.degree() % 2 == 1 {
                    -l
                } else {
                    l
                }
            })
            .collect();
        sign_changes(&vals)
    }
}

/// All real roots of `g` lie in `[-1, 0)`.
pub fn real_root_check(g: &Poly) -> bool {
    if g.is_zero() {
        return false;
    }
    let zero = Q::zero();
    let minus_one = q(-1);
    // Cheap sign samples first.
    let n = g.degree();
    let parity = if n % 2 == 0 { q(1) } else { q(-1) };
    for t in 0..4 {
        if !g.eval(&q(t)).is_positive() {
            return false;
        }
        if !(g.eval(&q(-2 - t)) * &parity).is_positive() {
            return false;
        }
    }
    let mut sf = g.div_rem(&g.gcd(&g.derivative())).0;
    if sf.eval(&minus_one).is_zero() {
        sf = sf.div_rem(&Poly::linear(q(1))).0;
    }
    if sf.degree() == 0 {
        return true;
    }
    if sf.eval(&zero).is_zero() {
        return false;
    }
    let s = Sturm::new(&sf);
    // Sturm counts distinct roots in (a, b] for a, b not roots.
    let below = s.at_infinity(false) - s.at(&minus_one);
    let above = s.at(&zero) - s.at_infinity(true);
    below == 0 && above == 0
}

/// `e_k` rendered as plain integers (for reports and the CLI).
pub fn coefficients_i64(p: &Poly) -> Result<Vec<i64>> {
    p.integer_coefficients()
        .ok_or_else(|| consistency_err!("polynomial {p} has non-integral coefficients"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(tag: &str) -> DynkinDiagram {
        DynkinDiagram::parse(tag).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(e_count(&diag("A2")).unwrap(), 3);
        assert_eq!(e_count(&diag("B2")).unwrap(), 4);
        assert_eq!(e_count(&diag("G2")).unwrap(), 6);
        assert_eq!(e_count(&diag("A3")).unwrap(), 16);
        assert_eq!(e_count(&diag("E6")).unwrap(), 41472);
        assert_eq!(e_count(&diag("A2xA1")).unwrap(), 9);
    }

    #[test]
    fn closed_form_by_hand() {
        // 720 * 12^6 / (2*5*6*8*9*12)
        assert_eq!(e_closed_form(&diag("E6")).unwrap(), 41472);
        assert_eq!(e_closed_form(&diag("D4")).unwrap(), 162);
        assert_eq!(e_closed_form(&diag("A2xA1")).unwrap(), 9);
    }

    #[test]
    fn f_polys() {
        assert_eq!(f_poly_recursive(&diag("A1")).unwrap(), Poly::from_integers(&[0, 1]));
        assert_eq!(f_poly_recursive(&diag("A2")).unwrap(), Poly::from_integers(&[0, 1, 2]));
        assert_eq!(f_poly_recursive(&diag("A3")).unwrap().eval(&Q::one()), q(16));
    }

    #[test]
    fn g_a2() {
        let g = g_poly(&diag("A2")).unwrap();
        // (m+1)(3m+2)
        assert_eq!(g, Poly::from_integers(&[2, 5, 3]));
        assert_eq!(g.eval(&q(1)), q(10));
        assert_eq!(g.eval(&q(0)), q(2));
        assert!(g.eval(&q(-1)).is_zero());
        assert_eq!(fr_product(&diag("A2"), 1).unwrap(), 5);
        assert_eq!(fr_product(&diag("A3"), 1).unwrap(), 14);
        assert_eq!(fr_product(&diag("A3"), 2).unwrap(), 55);
        assert_eq!(fr_product(&diag("D4"), 1).unwrap(), 50);
    }

    #[test]
    fn real_roots() {
        assert!(real_root_check(&Poly::from_integers(&[1, 1])));
        assert!(real_root_check(&Poly::from_integers(&[2, 5, 3])));
        // (m+1)(m-1) has a positive root.
        assert!(!real_root_check(&Poly::from_integers(&[-1, 0, 1])));
        // (m+3)(m+1) has a root below -1.
        assert!(!real_root_check(&Poly::from_integers(&[3, 4, 1])));
        // m(m+1) has a root at 0.
        assert!(!real_root_check(&Poly::from_integers(&[0, 1, 1])));
        // (m+1)^2 (2m+1): repeated root at -1 is fine.
        assert!(real_root_check(
            &Poly::from_integers(&[1, 1]).pow(2).mul(&Poly::from_integers(&[1, 2]))
        ));
        for tag in ["B3", "D5", "E7", "F4", "G2"] {
            assert!(real_root_check(&g_poly(&diag(tag)).unwrap()), "{tag}");
        }
    }

    #[test]
    fn division_and_gcd() {
        let a = Poly::from_integers(&[1, 1]).pow(3);
        let b = Poly::from_integers(&[1, 1]).mul(&Poly::from_integers(&[2, 1]));
        let (quot, rem) = a.div_rem(&b);
        assert_eq!(quot.mul(&b).add(&rem), a);
        assert!(rem.degree() < b.degree());
        assert_eq!(a.gcd(&b), Poly::from_integers(&[1, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_integers(&[0, 1, 2]).to_string(), "2x^2 + x");
        assert_eq!(Poly::from_integers(&[-3, 0, 1]).to_string(), "x^2 - 3");
    }
}

use exseq::bijection::{theta, theta_inverse};
use exseq::counting::{g_poly, Poly};
use exseq::linalg::q;
use exseq::shift::{compatible, enumerate_m_clusters, objects_of};
use exseq::wide::{gamma, gamma_inverse, WideSubcat};
use exseq::{DynkinDiagram, RepEngine};
use proptest::prelude::*;

const TYPES: [&str; 4] = ["A2", "A3", "A2xA1", "D4"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn compatibility_is_symmetric(t in 0usize..4, i in 0usize..400, j in 0usize..400, m in 0u32..3) {
        let e = RepEngine::parse(TYPES[t]).unwrap();
        let objs = objects_of(&e, &WideSubcat::whole(&e), m);
        let (a, b) = (objs[i % objs.len()], objs[j % objs.len()]);
        prop_assert_eq!(compatible(&e, a, b), compatible(&e, b, a));
    }

    #[test]
    fn hom_and_ext_never_both_nonzero(t in 0usize..4, i in 0usize..400, j in 0usize..400) {
        let e = RepEngine::parse(TYPES[t]).unwrap();
        let mods: Vec<_> = e.modules().collect();
        let (x, y) = (mods[i % mods.len()], mods[j % mods.len()]);
        prop_assert!(e.hom_dim(x, y) == 0 || e.ext_dim(x, y) == 0);
        prop_assert_eq!(e.hom_dim(x, x), 1);
        prop_assert_eq!(e.ext_dim(x, x), 0);
    }

    #[test]
    fn gamma_inverts(t in 0usize..4, i in 0usize..400, j in 0usize..400) {
        let e = RepEngine::parse(TYPES[t]).unwrap();
        let mods: Vec<_> = e.modules().collect();
        let (x, tt) = (mods[i % mods.len()], mods[j % mods.len()]);
        prop_assume!(e.is_exceptional_pair(x, tt));
        let y = gamma(&e, x, tt).unwrap();
        prop_assert!(e.is_exceptional_pair(tt, y));
        prop_assert_eq!(gamma_inverse(&e, y, tt).unwrap(), x);
    }

    #[test]
    fn theta_round_trips_on_clusters(t in 0usize..3, pick in 0usize..1000, m in 0u32..3, rot in 0usize..4) {
        let e = RepEngine::parse(TYPES[t]).unwrap();
        let clusters = enumerate_m_clusters(&e, &WideSubcat::whole(&e), m).unwrap();
        let mut c = clusters[pick % clusters.len()].clone();
        let r = rot % c.len();
        c.rotate_left(r);
        let s = theta(&e, m, &c).unwrap();
        prop_assert_eq!(theta_inverse(&e, m, &s).unwrap(), c);
    }

    #[test]
    fn poly_division_identity(a in proptest::collection::vec(-9i64..10, 0..6), b in proptest::collection::vec(-9i64..10, 1..4)) {
        let (pa, pb) = (Poly::from_integers(&a), Poly::from_integers(&b));
        prop_assume!(pb != Poly::zero());
        let (quot, rem) = pa.div_rem(&pb);
        prop_assert_eq!(quot.mul(&pb).add(&rem), pa);
        prop_assert!(rem == Poly::zero() || rem.degree() < pb.degree());
    }
}

#[test]
fn g_vanishes_at_minus_one_for_products() {
    for tag in ["A2xA1", "A3xB2", "G2xA1xA1"] {
        let g = g_poly(&DynkinDiagram::parse(tag).unwrap()).unwrap();
        assert_eq!(g.eval(&q(-1)), q(0), "{tag}");
    }
}

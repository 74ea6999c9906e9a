mod common;

use common::{weyl, weyl_integer};
use num_rational::Ratio;
use proptest::prelude::*;
use toda2_core::weyl::{Gen, Lattice, WeylOp};
use toda2_core::Scalar;

fn lat() -> Lattice {
    Lattice::periodic(3)
}

fn letter() -> impl Strategy<Value = (i64, Gen, i32)> {
    (
        1i64..=3,
        prop::bool::ANY,
        prop::sample::select(vec![-3, -2, -1, 1, 2, 3]),
    )
        .prop_map(|(n, u, p)| (n, if u { Gen::U } else { Gen::V }, p))
}

/// q-exponent picked up when moving every V left of every U on the same
/// site, computed with rational exponents.
fn reorder_q_exponent(word: &[(i64, Gen, i32)]) -> Ratio<i64> {
    let mut q = Ratio::from_integer(0);
    for (i, &(n, g, p)) in word.iter().enumerate() {
        if g != Gen::U {
            continue;
        }
        for &(m, h, r) in &word[i + 1..] {
            if h == Gen::V && m == n {
                // U^b V^c = q^(2bc) V^c U^b
                q += Ratio::new(2 * p as i64 * r as i64, 4);
            }
        }
    }
    q
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_associative_and_distributive(a in weyl(lat()), b in weyl(lat()), c in weyl(lat())) {
        let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
        let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert!(ab_c.sub(&a_bc).unwrap().is_zero());
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert!(lhs.sub(&rhs).unwrap().is_zero());
    }

    #[test]
    fn normal_order_is_idempotent(word in prop::collection::vec(letter(), 0..8)) {
        let once = WeylOp::normal_order(&word, Scalar::one(), lat()).unwrap();
        prop_assert!(once.len() <= 1);
        for (mono, c) in once.terms() {
            let mut w = Vec::new();
            for (site, v2, u2) in mono.factors() {
                w.push((site as i64, Gen::V, v2));
                w.push((site as i64, Gen::U, u2));
            }
            let twice = WeylOp::normal_order(&w, c.clone(), lat()).unwrap();
            prop_assert!(twice.sub(&once).unwrap().is_zero());
        }
    }

    #[test]
    fn half_integer_words_give_integer_powers_of_s(word in prop::collection::vec(letter(), 0..8)) {
        let op = WeylOp::normal_order(&word, Scalar::one(), lat()).unwrap();
        let q = reorder_q_exponent(&word);
        let s = q * 2;
        prop_assert!(s.is_integer(), "s exponent {} is fractional", s);
        for (_, c) in op.terms() {
            prop_assert_eq!(c, &Scalar::s_pow(*s.numer() as i32));
        }
    }

    #[test]
    fn disjoint_support_commutes(a in weyl(Lattice::periodic(1)), b in weyl(Lattice::periodic(1))) {
        let big = Lattice::periodic(3);
        let a = a.map_sites(big, |_| 1).unwrap();
        let b = b.map_sites(big, |_| 3).unwrap();
        prop_assert!(a.commutator(&b).unwrap().is_zero());
    }

    #[test]
    fn conjugation_is_an_automorphism(a in weyl_integer(lat()), b in weyl_integer(lat())) {
        let conj = |x: &WeylOp| x.conjugate_v("d2").unwrap();
        let lhs = conj(&a.mul(&b).unwrap());
        let rhs = conj(&a).mul(&conj(&b)).unwrap();
        prop_assert!(lhs.sub(&rhs).unwrap().is_zero());
    }
}

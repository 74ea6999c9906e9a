mod common;

use common::scalar;
use proptest::prelude::*;
use toda2_core::stoch::{fock_act, qosc, weyl_act, FockOp, FockVector};
use toda2_core::weyl::Lattice;
use toda2_core::Scalar;

const K: u32 = 6;
const SITES: u32 = 2;

/// Combination of basis states strictly below the truncation level.
fn state() -> impl Strategy<Value = FockVector> {
    prop::collection::vec((0..K as i64, 0..K as i64, scalar()), 1..4).prop_map(|ts| {
        ts.into_iter()
            .fold(FockVector::zero(SITES, K), |acc, (a, b, c)| {
                acc.add(&FockVector::basis(vec![a, b], K).scale(&c))
            })
    })
}

fn op() -> impl Strategy<Value = FockOp> {
    prop::sample::select(vec![FockOp::A, FockOp::AStar, FockOp::QD])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn left_actions_are_linear(o in op(), site in 1u32..=SITES, x in state(), y in state(), c in scalar()) {
        let lhs = fock_act(o, site, &x.add(&y.scale(&c))).unwrap();
        let rhs = fock_act(o, site, &x).unwrap().add(&fock_act(o, site, &y).unwrap().scale(&c));
        prop_assert!(lhs.sub(&rhs).is_zero());
    }

    #[test]
    fn fock_and_weyl_realizations_agree(o in op(), site in 1u32..=SITES, x in state()) {
        let (a, astar, qd) = qosc(Lattice::periodic(SITES), site as i64).unwrap();
        let w = match o {
            FockOp::A => a,
            FockOp::AStar => astar,
            FockOp::QD => qd,
        };
        let diff = fock_act(o, site, &x).unwrap().sub(&weyl_act(&w, &x).unwrap());
        prop_assert!(diff.is_zero());
    }

    #[test]
    fn weyl_action_is_linear_in_the_operator(site in 1u32..=SITES, x in state(), c in scalar()) {
        let (a, astar, _) = qosc(Lattice::periodic(SITES), site as i64).unwrap();
        let sum = a.add(&astar.scale(&c)).unwrap();
        let lhs = weyl_act(&sum, &x).unwrap();
        let rhs = weyl_act(&a, &x).unwrap().add(&weyl_act(&astar, &x).unwrap().scale(&c));
        prop_assert!(lhs.sub(&rhs).is_zero());
        prop_assert!(weyl_act(&a.scale(&Scalar::zero()), &x).unwrap().is_zero());
    }
}

#![allow(dead_code)]

use proptest::prelude::*;
use toda2_core::weyl::{Lattice, WeylOp};
use toda2_core::Scalar;

pub fn scalar() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-3i64..=3, -2i32..=2, -2i32..=2, -2i32..=2), 0..5).prop_map(|ts| {
        ts.into_iter().fold(Scalar::zero(), |acc, (c, a, b, d)| {
            acc + Scalar::monomial(c, &[("x", a), ("y", b), ("z", d)])
        })
    })
}

/// Nonzero single-term scalar in `y`, `z`.
pub fn monomial_image() -> impl Strategy<Value = Scalar> {
    (
        prop::sample::select(vec![-2i64, -1, 1, 3]),
        -2i32..=2,
        -2i32..=2,
    )
        .prop_map(|(c, a, b)| Scalar::monomial(c, &[("y", a), ("z", b)]))
}

pub fn weyl(lat: Lattice) -> impl Strategy<Value = WeylOp> {
    let n = lat.sites as i64;
    prop::collection::vec((1..=n, -2i32..=2, -2i32..=2, -2i64..=2, -1i32..=1), 0..4).prop_map(
        move |ts| {
            let mut acc = WeylOp::zero(lat);
            for (site, v2, u2, c, e) in ts {
                let t =
                    WeylOp::site_mono(lat, site, v2, u2, Scalar::monomial(c, &[("x", e)])).unwrap();
                acc = acc.add(&t).unwrap();
            }
            acc
        },
    )
}

/// Same as [`weyl`] with integer exponents only.
pub fn weyl_integer(lat: Lattice) -> impl Strategy<Value = WeylOp> {
    let n = lat.sites as i64;
    prop::collection::vec((1..=n, -1i32..=1, -1i32..=1, -2i64..=2), 0..4).prop_map(move |ts| {
        let mut acc = WeylOp::zero(lat);
        for (site, v, u, c) in ts {
            let t = WeylOp::site_mono(lat, site, 2 * v, 2 * u, Scalar::int(c)).unwrap();
            acc = acc.add(&t).unwrap();
        }
        acc
    })
}

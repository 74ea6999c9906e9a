use proptest::prelude::*;
use toda2_core::poisson::{poisson_bracket, Chart, ChartKind};
use toda2_core::{Scalar, ScalarFraction};

fn chart(k: u8) -> Chart {
    match k {
        0 => Chart::new(ChartKind::Exlat, 3, false),
        1 => Chart::new(ChartKind::Qp, 3, true),
        _ => Chart::new(ChartKind::Darboux, 3, false),
    }
    .unwrap()
}

/// Random Laurent polynomial in the chart generators plus a parameter.
fn element(k: u8) -> impl Strategy<Value = Scalar> {
    let gens = chart(k).generators();
    let n = gens.len();
    prop::collection::vec((0..n, 0..n, -1i32..=2, 0i32..=2, -2i64..=2, 0i32..=1), 1..4).prop_map(
        move |ts| {
            ts.into_iter()
                .fold(Scalar::zero(), |acc, (i, j, e, f, c, m)| {
                    let t = gens[i].pow(e).unwrap()
                        * gens[j].pow(f).unwrap()
                        * Scalar::var_pow("mu", m);
                    acc + t * Scalar::int(c)
                })
        },
    )
}

fn triple() -> impl Strategy<Value = (u8, Scalar, Scalar, Scalar)> {
    (0u8..3).prop_flat_map(|k| (Just(k), element(k), element(k), element(k)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn antisymmetry((k, f, g, _) in triple()) {
        let c = chart(k);
        let fg = c.bracket_poly(&f, &g).unwrap();
        let gf = c.bracket_poly(&g, &f).unwrap();
        prop_assert!((fg + gf).is_zero());
    }

    #[test]
    fn leibniz((k, f, g, h) in triple()) {
        let c = chart(k);
        let lhs = c.bracket_poly(&(&f * &g), &h).unwrap();
        let rhs = &f * &c.bracket_poly(&g, &h).unwrap() + &c.bracket_poly(&f, &h).unwrap() * &g;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jacobi_on_random_elements((k, f, g, h) in triple()) {
        let c = chart(k);
        let br = |a: &Scalar, b: &Scalar| c.bracket_poly(a, b).unwrap();
        let j = br(&f, &br(&g, &h)) + br(&g, &br(&h, &f)) + br(&h, &br(&f, &g));
        prop_assert!(j.is_zero());
    }

    #[test]
    fn quotient_bracket_is_antisymmetric((k, f, g, h) in triple()) {
        let c = chart(k);
        let den = h + Scalar::var("lam");
        let a = ScalarFraction::new(f, den.clone()).unwrap();
        let b = ScalarFraction::new(g, den).unwrap();
        let ab = poisson_bracket(&a, &b, &c).unwrap();
        let ba = poisson_bracket(&b, &a, &c).unwrap();
        prop_assert!(ab.add(&ba).is_zero());
    }
}

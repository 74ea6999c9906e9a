mod common;

use common::{monomial_image, scalar};
use proptest::prelude::*;
use toda2_core::{Bindings, Scalar, ScalarFraction};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
    }

    #[test]
    fn substitution_is_a_homomorphism(a in scalar(), b in scalar(), img in monomial_image()) {
        let bind = Bindings::new().bind("x", img);
        let sub = |s: &Scalar| s.substitute(&bind).unwrap();
        prop_assert_eq!(sub(&(&a * &b)), sub(&a) * sub(&b));
        prop_assert_eq!(sub(&(&a + &b)), sub(&a) + sub(&b));
    }

    #[test]
    fn canonical_text_round_trips(a in scalar()) {
        let back: Scalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn fraction_sum_matches_cross_multiplication(a in scalar(), b in scalar(), img in monomial_image()) {
        let den = &img + &Scalar::var("w");
        let f = ScalarFraction::new(a.clone(), den.clone()).unwrap();
        let g = ScalarFraction::new(b.clone(), Scalar::var("w")).unwrap();
        let expect = ScalarFraction::new(&a * &Scalar::var("w") + &b * &den, &den * &Scalar::var("w")).unwrap();
        prop_assert_eq!(f.add(&g), expect);
    }
}

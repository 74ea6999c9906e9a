//! Weyl-algebra realization of the quantum exchange-algebra vectors.

use crate::error::{AlgebraError, Result};
use crate::ring::Scalar;
use crate::weyl::{Gen, Lattice, WeylOp};

/// Doubled exponent of the `V_b^(1/2)` factors right of `U_a` in the second
/// component.
pub(crate) const XI2_TAIL: i32 = -1;

pub(crate) fn xi2_with_tail(lat: Lattice, n: i64, tail: i32) -> Result<WeylOp> {
    let mut acc = WeylOp::zero(lat);
    for a in 1..=n {
        let mut w = vec![(n, Gen::U, -1)];
        w.extend((a..=n).map(|b| (b, Gen::V, 1)));
        w.push((a, Gen::U, 2));
        w.extend((1..a).map(|b| (b, Gen::V, tail)));
        acc = acc.add(&WeylOp::normal_order(&w, Scalar::one(), lat)?)?;
    }
    Ok(acc)
}

/// Component 1 or 2 of the vector at site `n` of an open lattice.
pub fn build_xi_quantum(component: u8, n: i64, lat: Lattice) -> Result<WeylOp> {
    lat.site(n)?;
    match component {
        1 => {
            let mut w = vec![(n, Gen::U, -1)];
            w.extend((1..=n).map(|a| (a, Gen::V, 1)));
            WeylOp::normal_order(&w, Scalar::one(), lat)
        }
        2 => xi2_with_tail(lat, n, XI2_TAIL),
        c => Err(AlgebraError::Shape(format!(
            "component {c} not in {{1, 2}}"
        ))),
    }
}

/// `W_n^(p) = q xi1_n xi2_{n+p} - xi2_n xi1_{n+p}`.
pub fn w_hat(p: i64, n: i64, lat: Lattice) -> Result<WeylOp> {
    let a = build_xi_quantum(1, n, lat)?.mul(&build_xi_quantum(2, n + p, lat)?)?;
    let b = build_xi_quantum(2, n, lat)?.mul(&build_xi_quantum(1, n + p, lat)?)?;
    a.scale(&Scalar::s_pow(2)).sub(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xi2_has_n_summands() {
        let lat = Lattice::open(6);
        assert_eq!(build_xi_quantum(2, 2, lat).unwrap().len(), 2);
        assert_eq!(build_xi_quantum(1, 4, lat).unwrap().len(), 1);
    }

    #[test]
    fn open_lattice_rejects_outside_sites() {
        let lat = Lattice::open(3);
        assert!(build_xi_quantum(1, 4, lat).is_err());
        assert!(build_xi_quantum(3, 1, lat).is_err());
    }
}

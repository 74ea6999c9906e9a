//! Scalar auxiliary-space matrices.

use crate::error::{AlgebraError, Result};
use crate::matops::ScalarMatrix;
use crate::ring::{q_pow, Scalar, ScalarFraction};

use super::ModelParams;

/// q-deformed step function: 0, `1/(q^1/2 + q^-1/2)`, 1.
pub fn theta_q(n: i64) -> ScalarFraction {
    match n.signum() {
        -1 => ScalarFraction::zero(),
        1 => ScalarFraction::one(),
        _ => ScalarFraction::new(Scalar::one(), &Scalar::s_pow(1) + &Scalar::s_pow(-1))
            .expect("nonzero denominator"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuxKind {
    A,
    B,
    C,
    D,
    RPlus,
    RMinus,
    RTwisted,
}

fn sp(k: i32) -> Scalar {
    Scalar::s_pow(k)
}

fn z() -> Scalar {
    Scalar::zero()
}

fn one() -> Scalar {
    Scalar::one()
}

fn r_plus(s_sign: i32) -> ScalarMatrix {
    // R+(q); with s_sign = -1 this is R+(q^-1)
    let p = |k: i32| sp(s_sign * k);
    ScalarMatrix::from_scalars(vec![
        vec![p(1), z(), z(), z()],
        vec![z(), p(-1), &p(1) - &p(-3), z()],
        vec![z(), z(), p(-1), z()],
        vec![z(), z(), z(), p(1)],
    ])
    .unwrap()
}

/// 4x4 structure matrices on `C^2 (x) C^2`, basis `(11, 12, 21, 22)`.
/// `A`, `D` and the twisted R-matrix carry the denominator `l2 q^2 - l1`.
pub fn build_aux(kind: AuxKind, l1: &Scalar, l2: &Scalar) -> ScalarMatrix {
    let q2 = q_pow(2);
    let q2m1 = &q2 - &one();
    let diff = l2 - l1;
    let den = &(l2 * &q2) - l1;
    let rows = match kind {
        AuxKind::A | AuxKind::RTwisted => vec![
            vec![den.clone(), z(), z(), z()],
            vec![z(), diff.clone(), l1 * &q2m1, z()],
            vec![z(), l2 * &q2m1, &diff * &q2, z()],
            vec![z(), z(), z(), den.clone()],
        ],
        AuxKind::D => vec![
            vec![den.clone(), z(), z(), z()],
            vec![z(), &diff * &q2, l2 * &q2m1, z()],
            vec![z(), l1 * &q2m1, diff.clone(), z()],
            vec![
                z(),
                &(l1 * &diff) * &q2m1,
                -(&(l2 * &diff) * &q2m1),
                den.clone(),
            ],
        ],
        AuxKind::C => vec![
            vec![one(), z(), z(), z()],
            vec![z(), one(), -(&sp(3) - &sp(-1)), z()],
            vec![z(), z(), q2.clone(), z()],
            vec![z(), z(), l2 * &q2m1, one()],
        ],
        AuxKind::B => vec![
            vec![one(), z(), z(), z()],
            vec![z(), q2.clone(), z(), z()],
            vec![z(), -(&sp(3) - &sp(-1)), one(), z()],
            vec![z(), l1 * &q2m1, z(), one()],
        ],
        AuxKind::RPlus => return r_plus(1),
        AuxKind::RMinus => return r_plus(-1).flip(2).unwrap(),
    };
    let m = ScalarMatrix::from_scalars(rows).unwrap();
    match kind {
        AuxKind::A | AuxKind::D | AuxKind::RTwisted => m.with_den(den).unwrap(),
        _ => m,
    }
}

/// 2x2 scalar matrices closing the monodromy and the trace.
#[derive(Clone, Debug, PartialEq)]
pub enum ScalarAux {
    M0 {
        alpha: Scalar,
        beta: Scalar,
        gamma: Scalar,
        delta: Scalar,
    },
    Mtilde0 {
        alpha: Scalar,
        beta: Scalar,
        gamma: Scalar,
        delta: Scalar,
    },
    G0,
    Gtilde0,
}

impl ScalarAux {
    /// `M0` with formal `alpha, beta, gamma, delta`.
    pub fn m0_formal() -> Self {
        ScalarAux::M0 {
            alpha: Scalar::var("alpha"),
            beta: Scalar::var("beta"),
            gamma: Scalar::var("gamma"),
            delta: Scalar::var("delta"),
        }
    }

    pub fn mtilde0_formal() -> Self {
        ScalarAux::Mtilde0 {
            alpha: Scalar::var("alpha_t"),
            beta: Scalar::var("beta_t"),
            gamma: Scalar::var("gamma_t"),
            delta: Scalar::var("delta_t"),
        }
    }

    /// Parameters reproducing `G0`.
    pub fn m0_for_g0(p: &ModelParams) -> Self {
        ScalarAux::M0 {
            alpha: one(),
            beta: &(&sp(7) * &p.d2) * &p.d3,
            gamma: &one() - &q_pow(2),
            delta: &sp(5) * &p.d1,
        }
    }

    /// Parameters reproducing `Gtilde0 q^-sigma_z`.
    pub fn mtilde0_for_gtilde0(p: &ModelParams) -> Self {
        ScalarAux::Mtilde0 {
            alpha: q_pow(-1),
            beta: &(&sp(3) * &p.d2) * &p.d3,
            gamma: &one() - &q_pow(2),
            delta: &sp(5) * &p.d1,
        }
    }
}

fn two_by_two(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> ScalarMatrix {
    ScalarMatrix::from_scalars(vec![vec![a, b], vec![c, d]]).unwrap()
}

/// Builds the 2x2 scalar matrix at spectral parameter `lam`.
pub fn build_scalar_aux(kind: &ScalarAux, lam: &Scalar, p: &ModelParams) -> Result<ScalarMatrix> {
    let lam2 = lam * lam;
    Ok(match kind {
        ScalarAux::M0 {
            alpha,
            beta,
            gamma,
            delta,
        } => {
            if (gamma - &one()).is_zero() {
                return Err(AlgebraError::GammaOne);
            }
            two_by_two(
                one(),
                beta * lam,
                gamma * lam,
                &(&sp(-1) + &(delta * lam)) + &(beta * &lam2),
            )
            .scale(alpha)
        }
        ScalarAux::Mtilde0 {
            alpha,
            beta,
            gamma,
            delta,
        } => two_by_two(
            one(),
            beta * lam,
            gamma * lam,
            &(&sp(3) + &(delta * lam)) + &(beta * &lam2),
        )
        .scale(alpha),
        ScalarAux::G0 => {
            let b = &(&sp(7) * &p.d2) * &p.d3;
            two_by_two(
                one(),
                &b * lam,
                &(&one() - &q_pow(2)) * lam,
                &(&sp(-1) + &(&(&sp(5) * &p.d1) * lam)) + &(&b * &lam2),
            )
        }
        ScalarAux::Gtilde0 => {
            let b = &(&sp(-1) * &p.d2) * &p.d3;
            two_by_two(
                one(),
                &b * lam,
                &(&one() - &q_pow(2)) * lam,
                &(&sp(-1) + &(&(&sp(1) * &p.d1) * lam)) + &(&b * &lam2),
            )
        }
    })
}

/// `q^-sigma_z = diag(q^-1, q)`.
pub fn q_minus_sigma_z() -> ScalarMatrix {
    two_by_two(q_pow(-1), z(), z(), q_pow(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Bindings;

    fn lam(n: &str) -> Scalar {
        Scalar::var(n)
    }

    #[test]
    fn theta_values() {
        assert_eq!(theta_q(3), ScalarFraction::one());
        assert!(theta_q(-1).is_zero());
        let t0 = theta_q(0);
        assert_eq!(t0.num(), &Scalar::one());
        assert_eq!(t0.den(), &(&Scalar::s_pow(1) + &Scalar::s_pow(-1)));
    }

    #[test]
    fn displayed_entries() {
        let (l1, l2) = (lam("lam1"), lam("lam2"));
        let a = build_aux(AuxKind::A, &l1, &l2);
        assert_eq!(a.get(1, 1), &(&l2 - &l1));
        assert_eq!(a.den().unwrap(), &(&(&l2 * &q_pow(2)) - &l1));
        let b = build_aux(AuxKind::B, &l1, &l2);
        assert_eq!(b.get(2, 1), &-(&Scalar::s_pow(3) - &Scalar::s_pow(-1)));
    }

    #[test]
    fn classical_limit_is_identity() {
        let (l1, l2) = (lam("lam1"), lam("lam2"));
        let at_one = Bindings::new().bind(crate::ring::S, Scalar::one());
        for k in [AuxKind::A, AuxKind::B, AuxKind::C, AuxKind::D] {
            let m = build_aux(k, &l1, &l2).substitute(&at_one).unwrap();
            assert!(m.residual(&ScalarMatrix::identity(4)).unwrap().1, "{k:?}");
        }
    }

    #[test]
    fn r_minus_is_flipped_inverse_q() {
        let rm = build_aux(AuxKind::RMinus, &lam("lam1"), &lam("lam2"));
        assert_eq!(rm.get(0, 0), &Scalar::s_pow(-1));
        assert_eq!(rm.get(2, 1), &(&Scalar::s_pow(-1) - &Scalar::s_pow(3)));
    }

    #[test]
    fn scalar_aux_entries() {
        let p = ModelParams::generic(3);
        let l = lam("lam");
        let m0 = build_scalar_aux(&ScalarAux::m0_formal(), &l, &p).unwrap();
        let expect22 = &(&(&Scalar::s_pow(-1) + &(&lam("delta") * &l))
            + &(&lam("beta") * &(&l * &l)))
            * &lam("alpha");
        assert_eq!(m0.get(1, 1), &expect22);
        let g0 = build_scalar_aux(&ScalarAux::G0, &l, &p).unwrap();
        assert_eq!(g0.get(1, 0), &(&(&Scalar::one() - &q_pow(2)) * &l));
        let at0 = build_scalar_aux(&ScalarAux::m0_formal(), &Scalar::zero(), &p).unwrap();
        assert_eq!(at0.get(1, 1), &(&Scalar::s_pow(-1) * &lam("alpha")));
        assert!(at0.get(0, 1).is_zero());
    }

    #[test]
    fn specializations_reproduce_g_matrices() {
        let p = ModelParams::generic(3);
        let l = lam("lam");
        let m0 = build_scalar_aux(&ScalarAux::m0_for_g0(&p), &l, &p).unwrap();
        assert_eq!(m0, build_scalar_aux(&ScalarAux::G0, &l, &p).unwrap());
        let mt = build_scalar_aux(&ScalarAux::mtilde0_for_gtilde0(&p), &l, &p).unwrap();
        let gt = build_scalar_aux(&ScalarAux::Gtilde0, &l, &p)
            .unwrap()
            .mul(&q_minus_sigma_z())
            .unwrap();
        assert_eq!(mt, gt);
    }

    #[test]
    fn gamma_one_is_rejected() {
        let k = ScalarAux::M0 {
            alpha: one(),
            beta: one(),
            gamma: one(),
            delta: one(),
        };
        assert_eq!(
            build_scalar_aux(&k, &lam("lam"), &ModelParams::generic(2)).unwrap_err(),
            AlgebraError::GammaOne
        );
    }
}

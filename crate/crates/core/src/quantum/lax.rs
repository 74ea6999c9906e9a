//! Lax matrices with q-Weyl entries, gauge matrices, transfer matrices and
//! the Hamiltonians read off from them.

use crate::error::{AlgebraError, Result};
use crate::matops::{ScalarMatrix, WeylMatrix};
use crate::ring::{q_pow, Scalar};
use crate::weyl::{Gen, Lattice, WeylOp};

use super::aux::{build_scalar_aux, q_minus_sigma_z, ScalarAux};
use super::{ModelParams, LAM};

fn sp(k: i32) -> Scalar {
    Scalar::s_pow(k)
}

/// `c * word`, normal ordered.
fn word(lat: Lattice, letters: &[(i64, Gen, i32)], c: Scalar) -> Result<WeylOp> {
    WeylOp::normal_order(letters, c, lat)
}

/// `P_n = V_n^-1 + U_n U_{n+1}^-1`.
pub fn p_hat(lat: Lattice, n: i64) -> Result<WeylOp> {
    WeylOp::v(lat, n, -2)?.add(&word(
        lat,
        &[(n, Gen::U, 2), (n + 1, Gen::U, -2)],
        Scalar::one(),
    )?)
}

/// `Q_n^2 = q^1/2 V_{n+1}^-1 U_n U_{n+1}^-1`.
pub fn q2_hat(lat: Lattice, n: i64) -> Result<WeylOp> {
    word(
        lat,
        &[(n + 1, Gen::V, -2), (n, Gen::U, 2), (n + 1, Gen::U, -2)],
        sp(1),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LaxKind {
    /// Non-ultralocal Lax matrix on sites `n, n+1`.
    L,
    /// `l * G0`, computed as a product.
    LHat,
    /// Closed form of `l * G0` as displayed with the `G0` parameters.
    LHatDisplay,
    /// Gauge transform `N_{n+1}^-1 l N_n`, closed form.
    GaugedL,
    /// `N_n^-1 G0 N_n`, closed form.
    G0n,
    /// Gauge-transformed `lhat`, closed form.
    ScriptL,
    /// `ScriptL` with `d1 -> q^-2 d1`.
    ScriptLTilde,
    /// Ultralocal Lax matrix.
    LLoc,
    /// q-oscillator form of `LLoc` at the q-oscillator point.
    LQOsc,
    GaugeN,
    GaugeNInv,
}

fn mat(rows: Vec<Vec<WeylOp>>) -> WeylMatrix {
    WeylMatrix::from_rows(rows).expect("2x2")
}

/// Builds the 2x2 Lax-type matrix of `kind` at site `n`.
pub fn build_lax(kind: LaxKind, n: i64, lam: &Scalar, p: &ModelParams) -> Result<WeylMatrix> {
    let lat = p.lattice();
    let c = |x: Scalar| WeylOp::scalar(lat, x);
    let one = WeylOp::one(lat);
    let zero = WeylOp::zero(lat);
    let vinv = WeylOp::v(lat, n, -2)?;
    let vinv2 = WeylOp::v(lat, n, -4)?;
    let v = WeylOp::v(lat, n, 2)?;
    let u = WeylOp::u(lat, n, 2)?;
    let uinv = WeylOp::u(lat, n, -2)?;
    let d23 = &p.d2 * &p.d3;
    Ok(match kind {
        LaxKind::L => mat(vec![
            vec![c(lam.clone()).sub(&p_hat(lat, n)?)?, c(Scalar::int(-1))],
            vec![q2_hat(lat, n)?, zero],
        ]),
        LaxKind::LHat => {
            let g0 = build_scalar_aux(&ScalarAux::G0, lam, p)?.lift(&one);
            build_lax(LaxKind::L, n, lam, p)?.mul(&g0)?
        }
        LaxKind::LHatDisplay => {
            // alpha [[(1-gamma) lam - P, -q^-1/2 - delta lam - lam beta P], [Q^2, lam beta Q^2]]
            let beta = &sp(7) * &d23;
            let delta = &sp(5) * &p.d1;
            let ph = p_hat(lat, n)?;
            let q2 = q2_hat(lat, n)?;
            mat(vec![
                vec![
                    c(&q_pow(2) * lam).sub(&ph)?,
                    c(-(&sp(-1) + &(&delta * lam))).sub(&ph.scale(&(lam * &beta)))?,
                ],
                vec![q2.clone(), q2.scale(&(lam * &beta))],
            ])
        }
        LaxKind::GaugedL => mat(vec![
            vec![c(lam.clone()).sub(&vinv)?, {
                let inner = c(-(&sp(-1) * lam)).add(&vinv.scale(&(&sp(-1) - &Scalar::one())))?;
                inner.mul(&uinv)?
            }],
            vec![u.scale(&sp(1)), c(Scalar::int(-1))],
        ]),
        LaxKind::G0n => {
            let q2m = &Scalar::one() - &q_pow(2);
            let e11 = one.add(&v.scale(&(&(&sp(-1) - &sp(3)) * lam)))?;
            let e12 = c(&(&(&q_pow(-1) + &(&(&q_pow(2) * &p.d1) * lam))
                + &(&(&q_pow(3) * &d23) * &(lam * lam)))
                - &sp(-1))
            .add(&vinv.scale(&(&(&sp(7) * &d23) * lam)))?
            .sub(&v.scale(&(&(&q_pow(-1) - &q_pow(1)) * lam)))?
            .mul(&uinv)?;
            let e21 = u.mul(&v)?.scale(&(&q2m * lam));
            let e22 =
                c(&(&sp(-1) + &(&(&sp(5) * &p.d1) * lam)) + &(&(&sp(7) * &d23) * &(lam * lam)))
                    .sub(&v.scale(&(lam * &(&sp(3) - &sp(7)))))?;
            mat(vec![vec![e11, e12], vec![e21, e22]])
        }
        LaxKind::ScriptL | LaxKind::ScriptLTilde => {
            let d1 = if kind == LaxKind::ScriptLTilde {
                &q_pow(-2) * &p.d1
            } else {
                p.d1.clone()
            };
            let bracket = one
                .add(&vinv.scale(&(&q_pow(1) * &d1)))?
                .add(&vinv2.scale(&(&q_pow(2) * &d23)))?;
            mat(vec![
                vec![
                    c(&q_pow(2) * lam).sub(&vinv)?,
                    bracket.mul(&uinv)?.scale(&-(&sp(3) * lam)),
                ],
                vec![
                    u.scale(&sp(1)),
                    c(Scalar::int(-1)).add(&vinv.scale(&(&(&q_pow(2) * lam) * &d23)))?,
                ],
            ])
        }
        LaxKind::LLoc => {
            let bracket = c(p.d2.clone())
                .add(&vinv.scale(&(&q_pow(1) * &p.d1)))?
                .add(&vinv2.scale(&(&q_pow(2) * &p.d3)))?;
            mat(vec![
                vec![
                    c(lam.clone()).sub(&vinv)?,
                    bracket.mul(&uinv)?.scale(&(&q_pow(2) * lam)),
                ],
                vec![
                    u.scale(&-q_pow(-2)),
                    c(-p.d2.clone()).add(&vinv.scale(&(lam * &p.d3)))?,
                ],
            ])
        }
        LaxKind::LQOsc => {
            let a = one.sub(&vinv)?.mul(&uinv)?;
            let astar = u.clone();
            let q2d = vinv.clone();
            mat(vec![
                vec![c(lam.clone()).sub(&q2d)?, a.scale(&(&q_pow(2) * lam))],
                vec![astar.scale(&-q_pow(-2)), c(Scalar::int(-1))],
            ])
        }
        LaxKind::GaugeN => mat(vec![
            vec![one.clone(), uinv.scale(&-sp(-1))],
            vec![zero, vinv.mul(&uinv)?],
        ]),
        LaxKind::GaugeNInv => mat(vec![
            vec![one.clone(), v.scale(&sp(-1))],
            vec![zero, u.mul(&v)?],
        ]),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransferKind {
    /// Non-ultralocal generating function closed with `Gtilde0 q^-sigma_z`.
    Tau,
    /// Trace of the ultralocal monodromy.
    TLoc,
}

/// Ordered product `M_N ... M_1` of per-site matrices.
pub fn monodromy(
    p: &ModelParams,
    mut site: impl FnMut(i64) -> Result<WeylMatrix>,
) -> Result<WeylMatrix> {
    let n = p.sites as i64;
    let mut acc = site(n)?;
    for k in (1..n).rev() {
        acc = acc.mul(&site(k)?)?;
    }
    Ok(acc)
}

pub fn transfer_trace(kind: TransferKind, lam: &Scalar, p: &ModelParams) -> Result<WeylOp> {
    if p.sites == 0 {
        return Err(AlgebraError::ChainTooShort { size: 0, need: 1 });
    }
    let one = WeylOp::one(p.lattice());
    let m = match kind {
        TransferKind::Tau => {
            let t = monodromy(p, |k| {
                if k == 1 {
                    build_lax(LaxKind::L, k, lam, p)
                } else {
                    build_lax(LaxKind::LHat, k, lam, p)
                }
            })?;
            let close: ScalarMatrix =
                build_scalar_aux(&ScalarAux::Gtilde0, lam, p)?.mul(&q_minus_sigma_z())?;
            t.mul(&close.lift(&one))?
        }
        TransferKind::TLoc => monodromy(p, |k| build_lax(LaxKind::LLoc, k, lam, p))?,
    };
    Ok(m.trace()?.0)
}

/// `H_0 .. H_N` from `t_loc(lam) = sum_j (-1)^j lam^(N-j) H_j`.
pub fn hamiltonians(p: &ModelParams) -> Result<Vec<WeylOp>> {
    let t = transfer_trace(TransferKind::TLoc, &Scalar::var(LAM), p)?;
    let n = p.sites as i32;
    Ok((0..=n)
        .map(|j| {
            let h = t.coeff_of(LAM, n - j);
            if j % 2 == 0 {
                h
            } else {
                h.neg()
            }
        })
        .collect())
}

/// `sum_n P_n` for power 1, `sum_n (P_n^2 + (q^3/2 + q^-1/2) Q_n^2)` for power 2.
pub fn trq(power: u32, sites: u32) -> Result<WeylOp> {
    let lat = Lattice::periodic(sites);
    let mut acc = WeylOp::zero(lat);
    for n in 1..=sites as i64 {
        let ph = p_hat(lat, n)?;
        let term = match power {
            1 => ph,
            2 => ph
                .mul(&ph)?
                .add(&q2_hat(lat, n)?.scale(&(&sp(3) + &sp(-1))))?,
            _ => {
                return Err(AlgebraError::Shape(format!(
                    "trq power {power} not defined"
                )))
            }
        };
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam() -> Scalar {
        Scalar::var(LAM)
    }

    #[test]
    fn displayed_lax_entries() {
        let p = ModelParams::generic(3);
        let lloc = build_lax(LaxKind::LLoc, 2, &lam(), &p).unwrap();
        assert_eq!(
            lloc.get(1, 0),
            &WeylOp::u(p.lattice(), 2, 2).unwrap().scale(&-q_pow(-2))
        );
        let l = build_lax(LaxKind::L, 2, &lam(), &p).unwrap();
        assert_eq!(l.get(0, 1), &WeylOp::scalar(p.lattice(), Scalar::int(-1)));
        assert!(l.get(1, 1).is_zero());
    }

    #[test]
    fn q_hat_squared_closed_form() {
        let lat = Lattice::periodic(3);
        let q2 = q2_hat(lat, 1).unwrap();
        assert_eq!(q2.len(), 1);
        let (m, c) = q2.terms().next().unwrap();
        assert_eq!(c, &Scalar::s_pow(1));
        assert_eq!(m.exponents_at(1), (0, 2));
        assert_eq!(m.exponents_at(2), (-2, -2));
    }

    #[test]
    fn lhat_product_matches_display() {
        let p = ModelParams::generic(3);
        let a = build_lax(LaxKind::LHat, 2, &lam(), &p).unwrap();
        let b = build_lax(LaxKind::LHatDisplay, 2, &lam(), &p).unwrap();
        assert!(a.residual(&b).unwrap().1);
    }

    #[test]
    fn gauge_matrices_are_inverse() {
        let p = ModelParams::generic(3);
        let n = build_lax(LaxKind::GaugeN, 2, &lam(), &p).unwrap();
        let ninv = build_lax(LaxKind::GaugeNInv, 2, &lam(), &p).unwrap();
        let id = WeylMatrix::identity_like(2, &WeylOp::one(p.lattice()));
        assert!(n.mul(&ninv).unwrap().residual(&id).unwrap().1);
        assert!(ninv.mul(&n).unwrap().residual(&id).unwrap().1);
    }

    #[test]
    fn single_site_tloc() {
        let p = ModelParams::generic(1);
        let lat = p.lattice();
        let t = transfer_trace(TransferKind::TLoc, &lam(), &p).unwrap();
        let vinv = WeylOp::v(lat, 1, -2).unwrap();
        let expect = WeylOp::scalar(lat, &lam() - &Scalar::var("d2"))
            .sub(&vinv)
            .unwrap()
            .add(&vinv.scale(&(&lam() * &Scalar::var("d3"))))
            .unwrap();
        assert_eq!(t, expect);
    }

    #[test]
    fn tloc_leading_coefficient() {
        for n in 1..=3 {
            let p = ModelParams {
                d3: Scalar::zero(),
                ..ModelParams::generic(n)
            };
            let t = transfer_trace(TransferKind::TLoc, &lam(), &p).unwrap();
            assert_eq!(t.degree_range(LAM).unwrap().1, n as i32);
            assert_eq!(t.coeff_of(LAM, n as i32), WeylOp::one(p.lattice()));
        }
    }
}

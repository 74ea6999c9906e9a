//! Deliberately corrupted inputs, one or more per suite. Every report here is
//! expected to fail with a witness; a pass means the residual logic is blind.

use crate::classical::{build_model, ClassicalModel};
use crate::error::Result;
use crate::matops::WeylMatrix;
use crate::poisson::{jacobi_residual, Chart, ChartKind};
use crate::quantum::checks::{dgcg_residual_with, h1_toda2_display, rll_residual};
use crate::quantum::{
    build_lax, build_scalar_aux, hamiltonians, monodromy, LaxKind, ModelParams, Preset, ScalarAux,
};
use crate::report::{CheckReport, ReportBuilder, Residual};
use crate::ring::Scalar;
use crate::stoch::{build_state, stochastic_h1, weyl_act, FockVector, StateKind};
use crate::weyl::{Lattice, WeylOp};

fn report(id: &str, anchor: &str, f: impl FnOnce() -> Result<Residual>) -> CheckReport {
    let b = ReportBuilder::new(id, anchor);
    match f() {
        Ok(r) => b.finish(r),
        Err(e) => b.error(&e),
    }
}

fn lam(name: &str) -> Scalar {
    Scalar::var(name)
}

pub fn fm_g0_sign_flip() -> CheckReport {
    report(
        "mutant.fm.g0_sign_flip",
        "compatibility with the (1,2) entry of G0 negated",
        || {
            let p = ModelParams::generic(2);
            let m = dgcg_residual_with(|l| {
                let mut g = build_scalar_aux(&ScalarAux::G0, l, &p)?;
                g.set(0, 1, -g.get(0, 1).clone());
                Ok(g)
            })?;
            let mut r = Residual::new();
            r.matrix("DGCG", &m);
            Ok(r)
        },
    )
}

pub fn ybe_zeroed_lax_entry() -> CheckReport {
    report(
        "mutant.ybe.zeroed_lloc_entry",
        "RLL with the (2,1) entry of the ultralocal Lax matrix zeroed",
        || {
            let p = ModelParams::generic(1);
            let m = rll_residual(&p, |l| {
                let mut x = build_lax(LaxKind::LLoc, 1, l, &p)?;
                x.set(1, 0, WeylOp::zero(p.lattice()));
                Ok(x)
            })?;
            let mut r = Residual::new();
            r.matrix("RLL", &m);
            Ok(r)
        },
    )
}

pub fn ultra_wrong_gauge_site() -> CheckReport {
    report(
        "mutant.ultra.wrong_gauge_site",
        "gauge transform with N_n in place of N_(n+1) on the left",
        || {
            let p = ModelParams::generic(2);
            let l = lam("lam");
            let mut r = Residual::new();
            for n in 1..=2 {
                let lhs = WeylMatrix::product(&[
                    &build_lax(LaxKind::GaugeNInv, n, &l, &p)?,
                    &build_lax(LaxKind::L, n, &l, &p)?,
                    &build_lax(LaxKind::GaugeN, n, &l, &p)?,
                ])?;
                let rhs = build_lax(LaxKind::GaugedL, n, &l, &p)?;
                r.matrix(&format!("n={n}"), &lhs.residual(&rhs)?.0);
            }
            Ok(r)
        },
    )
}

pub fn commute_zeroed_entry() -> CheckReport {
    report(
        "mutant.commute.zeroed_lloc_entry",
        "transfer matrices with the (2,2) entry of the first-site Lax matrix zeroed",
        || {
            let p = ModelParams::generic(3);
            let t = |l: &Scalar| -> Result<WeylOp> {
                let m = monodromy(&p, |k| {
                    let mut x = build_lax(LaxKind::LLoc, k, l, &p)?;
                    if k == 1 {
                        x.set(1, 1, WeylOp::zero(p.lattice()));
                    }
                    Ok(x)
                })?;
                Ok(m.trace()?.0)
            };
            let mut r = Residual::new();
            r.op(
                "[t(lam1), t(lam2)]",
                &t(&lam("lam1"))?.commutator(&t(&lam("lam2"))?)?,
            );
            Ok(r)
        },
    )
}

pub fn rep_displayed_tail() -> CheckReport {
    report(
        "mutant.rep.tail_sign",
        "exchange algebra with V^(+1/2) factors right of U_a",
        || crate::quantum::checks::exchange_xi_residual(Lattice::open(4), 1),
    )
}

pub fn ham_wrong_preset() -> CheckReport {
    report(
        "mutant.ham.wrong_preset",
        "Toda2 display compared against the q-Toda expansion",
        || {
            let p = ModelParams::preset(Preset::QToda, 3);
            let disp = h1_toda2_display(&ModelParams::preset(Preset::Toda2, 3))?;
            let mut r = Residual::new();
            r.op("H_1", &hamiltonians(&p)?[1].sub(&disp)?);
            Ok(r)
        },
    )
}

pub fn classical_bracket_dropped() -> CheckReport {
    report(
        "mutant.classical.dropped_pp_entry",
        "Jacobi identity on a qp chart missing {P_1, P_2}",
        || {
            let mut c = Chart::new(ChartKind::Qp, 3, true)?;
            c.set_bracket(&Scalar::var("P1"), &Scalar::var("P2"), Scalar::zero())?;
            jacobi_residual(&c)
        },
    )
}

pub fn classical_involution_corrupted() -> CheckReport {
    report(
        "mutant.classical.corrupted_qp_entry",
        "trace involution with {Q_1, P_1} negated",
        || {
            let ClassicalModel { mut chart, l, .. } = build_model(3)?;
            let (q1, p1) = (Scalar::var("Q1"), Scalar::var("P1"));
            let v = chart.bracket_poly(&q1, &p1)?;
            chart.set_bracket(&q1, &p1, -v.clone())?;
            chart.set_bracket(&p1, &q1, v)?;
            let tr = |k: u32, mu: &str| -> Result<Scalar> {
                let m = l.substitute(&crate::ring::Bindings::new().bind("mu", Scalar::var(mu)))?;
                let mut acc = m.clone();
                for _ in 1..k {
                    acc = acc.mul(&m)?;
                }
                Ok(acc.trace()?.0)
            };
            let mut r = Residual::new();
            r.scalar(
                "(1,2)",
                &chart.bracket_poly(&tr(1, "mu1")?, &tr(2, "mu2")?)?,
            );
            Ok(r)
        },
    )
}

pub fn stoch_corrupted_omega() -> CheckReport {
    report(
        "mutant.stoch.corrupted_omega",
        "Omega H_1 = N Omega with one interior component of Omega shifted",
        || {
            let (trunc, sites) = (6, 2);
            let big = build_state(StateKind::OmegaN(trunc, sites))?
                .add(&FockVector::basis(vec![1, 0], trunc));
            let diff =
                weyl_act(&stochastic_h1(sites)?, &big)?.sub(&big.scale(&Scalar::int(sites as i64)));
            let mut r = Residual::new();
            for (k, c) in diff.split_at(trunc as i64).0 {
                r.fraction(&format!("{k:?}"), c);
            }
            Ok(r)
        },
    )
}

/// Every mutant, sorted by id.
pub fn all() -> Vec<CheckReport> {
    let mut v = vec![
        fm_g0_sign_flip(),
        ybe_zeroed_lax_entry(),
        ultra_wrong_gauge_site(),
        commute_zeroed_entry(),
        rep_displayed_tail(),
        ham_wrong_preset(),
        classical_bracket_dropped(),
        classical_involution_corrupted(),
        stoch_corrupted_omega(),
    ];
    v.sort_by(|a, b| a.id.cmp(&b.id));
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn every_mutant_is_caught() {
        for rep in all() {
            assert_eq!(rep.status, Status::Fail, "{}", rep.id);
            assert!(
                rep.residual_terms > 0 && rep.witness.is_some(),
                "{}",
                rep.id
            );
            assert!(
                !rep.witness.as_deref().unwrap().starts_with("error"),
                "{rep:?}"
            );
        }
    }
}

//! Classical periodic chain: the N x N Lax matrix, its r-matrix bracket,
//! involution of traces and the two spectral curves.

use crate::error::{AlgebraError, Result};
use crate::matops::ScalarMatrix;
use crate::poisson::{Chart, ChartKind};
use crate::report::{CheckReport, ReportBuilder, Residual};
use crate::ring::{Bindings, Scalar};

const LAM: &str = "lam";

#[derive(Clone, Debug)]
pub struct ClassicalModel {
    pub n: u32,
    pub chart: Chart,
    /// `L(mu)` in the variable `mu`.
    pub l: ScalarMatrix,
    /// `T_N(lam) = l_N ... l_1`.
    pub t: ScalarMatrix,
}

fn q(n: i64) -> Scalar {
    Scalar::var(&format!("Q{n}"))
}

fn p(n: i64) -> Scalar {
    Scalar::var(&format!("P{n}"))
}

/// `l_n(lam) = [[lam - P_n, -1], [Q_n^2, 0]]`.
pub fn lax_2x2(n: i64) -> Result<ScalarMatrix> {
    ScalarMatrix::from_scalars(vec![
        vec![&Scalar::var(LAM) - &p(n), Scalar::int(-1)],
        vec![&q(n) * &q(n), Scalar::zero()],
    ])
}

pub fn build_model(n: u32) -> Result<ClassicalModel> {
    if n < 2 {
        return Err(AlgebraError::ChainTooShort {
            size: n as usize,
            need: 2,
        });
    }
    let chart = Chart::new(ChartKind::Qp, n, true)?;
    let size = n as usize;
    let mut l = ScalarMatrix::from_fn(size, size, |i, j| {
        if i == j {
            -p(i as i64 + 1)
        } else {
            Scalar::zero()
        }
    });
    let bump = |l: &mut ScalarMatrix, i: usize, j: usize, v: Scalar| {
        let cur = l.get(i, j).clone();
        l.set(i, j, &cur + &v);
    };
    for k in 0..size - 1 {
        bump(&mut l, k, k + 1, q(k as i64 + 1));
        bump(&mut l, k + 1, k, q(k as i64 + 1));
    }
    let qn = q(n as i64);
    bump(&mut l, 0, size - 1, &Scalar::var_pow("mu", -1) * &qn);
    bump(&mut l, size - 1, 0, &Scalar::var("mu") * &qn);
    let sites: Vec<ScalarMatrix> = (1..=n as i64).rev().map(lax_2x2).collect::<Result<_>>()?;
    let t = ScalarMatrix::product(&sites.iter().collect::<Vec<_>>())?;
    Ok(ClassicalModel { n, chart, l, t })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureKind {
    R12,
    A12,
    D12,
    D21,
}

fn mu_sub(m: &ScalarMatrix, to: &str) -> Result<ScalarMatrix> {
    m.substitute(&Bindings::new().bind("mu", Scalar::var(to)))
}

fn swap_mu(m: &ScalarMatrix) -> Result<ScalarMatrix> {
    let b = Bindings::new()
        .bind("mu1", Scalar::var("mu2"))
        .bind("mu2", Scalar::var("mu1"));
    m.substitute(&b)
}

/// `E_ij (x) E_kl` as an `N^2 x N^2` index pair.
fn ee(n: usize, i: usize, j: usize, k: usize, l: usize) -> (usize, usize) {
    (i * n + k, j * n + l)
}

/// Placement of `L(mu1)` and `L(mu2)` in `C^N (x) C^N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LegConvention {
    /// `L_1(mu1) = L(mu1) (x) id`, `L_2(mu2) = id (x) L(mu2)`.
    Standard,
    /// `L_1(mu1) = id (x) L(mu1)`, `L_2(mu2) = L(mu2) (x) id`.
    Swapped,
}

fn legs(model: &ClassicalModel, conv: LegConvention) -> Result<(ScalarMatrix, ScalarMatrix)> {
    let d = model.n as usize;
    let (f1, f2) = match conv {
        LegConvention::Standard => (0, 1),
        LegConvention::Swapped => (1, 0),
    };
    let l1 = mu_sub(&model.l, "mu1")?.embed(d, &[f1], 2)?;
    let l2 = mu_sub(&model.l, "mu2")?.embed(d, &[f2], 2)?;
    Ok((l1, l2))
}

pub fn build_structure(kind: StructureKind, model: &ClassicalModel) -> Result<ScalarMatrix> {
    let n = model.n as usize;
    let (m1, m2) = (Scalar::var("mu1"), Scalar::var("mu2"));
    let den = &m1 - &m2;
    let mut m = ScalarMatrix::from_fn(n * n, n * n, |_, _| Scalar::zero());
    let put = |m: &mut ScalarMatrix, (r, c): (usize, usize), v: &Scalar| {
        let cur = m.get(r, c).clone();
        m.set(r, c, &cur + v);
    };
    match kind {
        StructureKind::R12 => {
            for i in 0..n {
                for j in i + 1..n {
                    put(&mut m, ee(n, i, j, j, i), &(&m2 * &Scalar::int(2)));
                    put(&mut m, ee(n, j, i, i, j), &(&m1 * &Scalar::int(2)));
                }
                put(&mut m, ee(n, i, i, i, i), &(&m1 + &m2));
            }
            m.with_den(den)
        }
        StructureKind::A12 => {
            let half = Scalar::ratio(1, 2);
            for i in 0..n {
                for j in i + 1..n {
                    put(&mut m, ee(n, i, i, j, j), &half);
                    put(&mut m, ee(n, j, j, i, i), &-&half);
                }
            }
            Ok(m)
        }
        StructureKind::D12 => {
            let r = build_structure(StructureKind::R12, model)?;
            let a = build_structure(StructureKind::A12, model)?;
            let (_, l2) = legs(model, LegConvention::Standard)?;
            r.sub(&a)?.mul(&l2)?.neg().sub(&l2.mul(&r.add(&a)?)?)
        }
        StructureKind::D21 => swap_mu(&build_structure(StructureKind::D12, model)?.flip(n)?),
    }
}

/// `{L_1(mu1) (x) L_2(mu2)} = sum {L(mu1)_ij, L(mu2)_kl} E_ij (x) E_kl`.
pub fn bracket_matrix(model: &ClassicalModel) -> Result<ScalarMatrix> {
    let n = model.n as usize;
    let (a, b) = (mu_sub(&model.l, "mu1")?, mu_sub(&model.l, "mu2")?);
    let mut out = ScalarMatrix::from_fn(n * n, n * n, |_, _| Scalar::zero());
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let v = model.chart.bracket_poly(a.get(i, j), b.get(k, l))?;
                    let (r, c) = ee(n, i, j, k, l);
                    out.set(r, c, v);
                }
            }
        }
    }
    Ok(out)
}

/// Five-term right-hand side of the bracket.
pub fn explicit_rhs(model: &ClassicalModel, conv: LegConvention) -> Result<ScalarMatrix> {
    let r = build_structure(StructureKind::R12, model)?;
    let a = build_structure(StructureKind::A12, model)?;
    let (l1, l2) = legs(model, conv)?;
    let l12 = l1.mul(&l2)?;
    let two = Scalar::int(2);
    r.scale(&Scalar::int(-2))
        .commutator(&l12)?
        .add(&a.scale(&two).mul(&l12)?)?
        .add(&l12.mul(&a.scale(&two))?)?
        .sub(&l1.mul(&a)?.mul(&l2)?.scale(&two))?
        .sub(&l2.mul(&a)?.mul(&l1)?.scale(&two))
}

/// `[d12, L_1] - [d21, L_2]`.
pub fn dform_rhs(model: &ClassicalModel) -> Result<ScalarMatrix> {
    let (l1, l2) = legs(model, LegConvention::Standard)?;
    let d12 = build_structure(StructureKind::D12, model)?;
    let d21 = build_structure(StructureKind::D21, model)?;
    d12.commutator(&l1)?.sub(&d21.commutator(&l2)?)
}

fn power_trace(m: &ScalarMatrix, k: u32) -> Result<Scalar> {
    let mut acc = m.clone();
    for _ in 1..k {
        acc = acc.mul(m)?;
    }
    Ok(acc.trace()?.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalId {
    PoissonLExplicit,
    PoissonLDform,
    Involution,
    CurveNxN,
    Curve2x2,
    PnEqualsTrT,
}

impl ClassicalId {
    pub fn name(self) -> &'static str {
        match self {
            ClassicalId::PoissonLExplicit => "classical.poissonL_explicit",
            ClassicalId::PoissonLDform => "classical.poissonL_dform",
            ClassicalId::Involution => "classical.involution",
            ClassicalId::CurveNxN => "classical.curve_NxN",
            ClassicalId::Curve2x2 => "classical.curve_2x2",
            ClassicalId::PnEqualsTrT => "classical.pN_equals_trT",
        }
    }

    pub fn anchor(self) -> &'static str {
        match self {
            ClassicalId::PoissonLExplicit => "five-term r-matrix bracket of the N x N Lax matrix",
            ClassicalId::PoissonLDform => "bracket of the N x N Lax matrix in commutator form",
            ClassicalId::Involution => "traces of powers of the N x N Lax matrix are in involution",
            ClassicalId::CurveNxN => "spectral curve of the N x N Lax matrix",
            ClassicalId::Curve2x2 => "spectral curve of the 2 x 2 monodromy matrix",
            ClassicalId::PnEqualsTrT => "identification of the two spectral curves",
        }
    }
}

/// Terms of `x` carrying a nonzero power of `mu`.
fn mu_dependent(x: &Scalar) -> Scalar {
    x - &x.coeff_of("mu", 0)
}

fn prod_q(n: u32, pow: i32) -> Result<Scalar> {
    (1..=n as i64).try_fold(Scalar::one(), |acc, a| Ok(&acc * &q(a).pow(pow)?))
}

fn classical_residual(
    id: ClassicalId,
    model: &ClassicalModel,
) -> Result<(Residual, Option<String>)> {
    let mut r = Residual::new();
    let mut note = None;
    let n = model.n;
    match id {
        ClassicalId::PoissonLExplicit | ClassicalId::PoissonLDform => {
            let lhs = bracket_matrix(model)?;
            let explicit = explicit_rhs(model, LegConvention::Standard)?;
            let dform = dform_rhs(model)?;
            let main = if id == ClassicalId::PoissonLExplicit {
                &explicit
            } else {
                &dform
            };
            r.matrix("bracket", &lhs.residual(main)?.0);
            r.matrix("explicit vs d-form", &explicit.residual(&dform)?.0);
            // antisymmetry under leg and spectral swap
            let swapped = swap_mu(&lhs.flip(n as usize)?)?;
            r.matrix("antisymmetry", &lhs.add(&swapped)?);
            if id == ClassicalId::PoissonLExplicit {
                let alt = lhs
                    .flip(n as usize)?
                    .residual(&explicit_rhs(model, LegConvention::Swapped)?)?
                    .0;
                note = Some(format!(
                    "legs L_1 = L(mu1) (x) id, L_2 = id (x) L(mu2); the swapped placement leaves {} terms",
                    alt.term_count()
                ));
            }
        }
        ClassicalId::Involution => {
            let l1 = mu_sub(&model.l, "mu1")?;
            let l2 = mu_sub(&model.l, "mu2")?;
            for a in 1..=3 {
                let ta = power_trace(&l1, a)?;
                for b in 1..=3 {
                    let tb = power_trace(&l2, b)?;
                    r.scalar(
                        &format!("(n,m)=({a},{b})"),
                        &model.chart.bracket_poly(&ta, &tb)?,
                    );
                }
            }
        }
        ClassicalId::CurveNxN => {
            let shifted = model
                .l
                .add(&ScalarMatrix::identity(n as usize).scale(&Scalar::var(LAM)))?;
            let det = shifted.det_comm()?;
            let sign = if n % 2 == 1 { 1 } else { -1 };
            let mu_sum = &Scalar::var("mu") + &Scalar::var_pow("mu", -1);
            let rem = &det - &(&(&prod_q(n, 1)? * &mu_sum) * &Scalar::int(sign));
            r.scalar("mu-dependence", &mu_dependent(&rem));
        }
        ClassicalId::Curve2x2 => {
            let mu = Scalar::var("mu");
            let shifted = model.t.sub(&ScalarMatrix::identity(2).scale(&mu))?;
            let lhs = &shifted.det_comm()? * &Scalar::var_pow("mu", -1);
            let tr = model.t.trace()?.0;
            let rhs = &(&mu + &(&prod_q(n, 2)? * &Scalar::var_pow("mu", -1))) - &tr;
            r.scalar("curve", &(&lhs - &rhs));
        }
        ClassicalId::PnEqualsTrT => {
            let shifted = model
                .l
                .add(&ScalarMatrix::identity(n as usize).scale(&Scalar::var(LAM)))?;
            let pn = shifted.det_comm()?.coeff_of("mu", 0);
            r.scalar("p_N - tr T", &(&pn - &model.t.trace()?.0));
        }
    }
    Ok((r, note))
}

pub fn check_classical(id: ClassicalId, n: u32) -> CheckReport {
    let bracket_based = matches!(
        id,
        ClassicalId::PoissonLExplicit | ClassicalId::PoissonLDform | ClassicalId::Involution
    );
    let b = ReportBuilder::new(id.name(), id.anchor())
        .param("N", n)
        .degenerate(bracket_based && n == 2);
    let mut notes = Vec::new();
    if bracket_based && n == 2 {
        notes.push("N = 2: periodic deltas coincide mod 2".to_string());
    }
    match build_model(n).and_then(|m| classical_residual(id, &m)) {
        Ok((r, note)) => {
            notes.extend(note);
            if notes.is_empty() {
                b.finish(r)
            } else {
                b.note(notes.join("; ")).finish(r)
            }
        }
        Err(e) => b.error(&e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lax_corners() {
        let m = build_model(3).unwrap();
        assert_eq!(m.l.get(0, 2), &(&Scalar::var_pow("mu", -1) * &q(3)));
        assert_eq!(m.l.get(2, 0), &(&Scalar::var("mu") * &q(3)));
        assert_eq!(m.l.get(1, 1), &-p(2));
        let m2 = build_model(2).unwrap();
        assert_eq!(
            m2.l.get(0, 1),
            &(&q(1) + &(&Scalar::var_pow("mu", -1) * &q(2)))
        );
        assert!(build_model(1).is_err());
    }

    #[test]
    fn structure_entries() {
        let m = build_model(3).unwrap();
        let r = build_structure(StructureKind::R12, &m).unwrap();
        assert_eq!(r.get(0, 0), &(&Scalar::var("mu1") + &Scalar::var("mu2")));
        assert_eq!(
            r.den().unwrap(),
            &(&Scalar::var("mu1") - &Scalar::var("mu2"))
        );
        let a = build_structure(StructureKind::A12, &m).unwrap();
        assert_eq!(a.get(1, 1), &Scalar::ratio(1, 2));
        assert_eq!(a.get(3, 3), &Scalar::ratio(-1, 2));
    }

    #[test]
    fn det_t_is_product_of_q_squares() {
        for n in [2, 3] {
            let m = build_model(n).unwrap();
            assert_eq!(m.t.det_comm().unwrap(), prod_q(n, 2).unwrap());
        }
    }

    #[test]
    fn bracket_identities_at_three_sites() {
        for id in [
            ClassicalId::PoissonLExplicit,
            ClassicalId::PoissonLDform,
            ClassicalId::Involution,
        ] {
            let rep = check_classical(id, 3);
            assert!(rep.passed(), "{rep:?}");
        }
        let rep = check_classical(ClassicalId::PoissonLExplicit, 3);
        assert!(rep.note.unwrap().contains("leaves 144 terms"));
    }

    #[test]
    fn two_sites_are_degenerate() {
        let rep = check_classical(ClassicalId::Involution, 2);
        assert_eq!(rep.status, crate::report::Status::Degenerate);
        assert!(check_classical(ClassicalId::PnEqualsTrT, 2).passed());
    }

    #[test]
    fn prod_q_is_conserved() {
        let m = build_model(3).unwrap();
        let c = prod_q(3, 1).unwrap();
        for k in 1..=3 {
            let t = power_trace(&m.l, k).unwrap();
            assert!(m.chart.bracket_poly(&c, &t).unwrap().is_zero(), "k={k}");
        }
    }
}

//! q-oscillator point of the ultralocal chain: left Fock states, the
//! eigenstates of the annihilator and the stochastic Hamiltonian.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};
use crate::quantum::{build_lax, LaxKind, ModelParams, Preset};
use crate::report::{CheckReport, ReportBuilder, Residual};
use crate::ring::{q_pow, Scalar, ScalarFraction, S};
use crate::weyl::{Lattice, WeylOp};

/// Levels of each site, site 1 first.
pub type Levels = Vec<i64>;

/// Finite left Fock vector over `sites` sites truncated at level `trunc`.
/// Components leaving `0..=trunc` are kept in `overflow`.
#[derive(Clone, Debug)]
pub struct FockVector {
    pub sites: u32,
    pub trunc: u32,
    coeffs: BTreeMap<Levels, ScalarFraction>,
    overflow: BTreeMap<Levels, ScalarFraction>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FockOp {
    A,
    AStar,
    QD,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StateKind {
    /// `v^(k)` on one site.
    Vk(u32),
    /// `omega` truncated at the given level.
    Omega(u32),
    /// `Omega = omega (x) ... (x) omega` on the given number of sites.
    OmegaN(u32, u32),
}

fn add_to(map: &mut BTreeMap<Levels, ScalarFraction>, key: Levels, c: ScalarFraction) {
    if c.is_zero() {
        return;
    }
    let next = match map.remove(&key) {
        Some(old) => old.add(&c),
        None => c,
    };
    if !next.is_zero() {
        map.insert(key, next);
    }
}

impl FockVector {
    pub fn zero(sites: u32, trunc: u32) -> Self {
        FockVector {
            sites,
            trunc,
            coeffs: BTreeMap::new(),
            overflow: BTreeMap::new(),
        }
    }

    pub fn basis(levels: Levels, trunc: u32) -> Self {
        let mut v = FockVector::zero(levels.len() as u32, trunc);
        v.push(levels, ScalarFraction::one());
        v
    }

    fn in_range(&self, levels: &[i64]) -> bool {
        levels.iter().all(|&k| (0..=self.trunc as i64).contains(&k))
    }

    fn push(&mut self, levels: Levels, c: ScalarFraction) {
        if self.in_range(&levels) {
            add_to(&mut self.coeffs, levels, c);
        } else {
            add_to(&mut self.overflow, levels, c);
        }
    }

    pub fn coeff(&self, levels: &[i64]) -> ScalarFraction {
        self.coeffs
            .get(levels)
            .or_else(|| self.overflow.get(levels))
            .cloned()
            .unwrap_or_else(ScalarFraction::zero)
    }

    pub fn components(&self) -> impl Iterator<Item = (&Levels, &ScalarFraction)> {
        self.coeffs.iter()
    }

    pub fn overflow(&self) -> impl Iterator<Item = (&Levels, &ScalarFraction)> {
        self.overflow.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty() && self.overflow.is_empty()
    }

    pub fn add(&self, o: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (k, c) in o.coeffs.iter().chain(o.overflow.iter()) {
            out.push(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> FockVector {
        let mut out = FockVector::zero(self.sites, self.trunc);
        for (k, c) in self.coeffs.iter().chain(self.overflow.iter()) {
            out.push(k.clone(), c.mul_scalar(s));
        }
        out
    }

    pub fn sub(&self, o: &FockVector) -> FockVector {
        self.add(&o.scale(&Scalar::int(-1)))
    }

    /// Sum of all coefficients, the pairing with `Omega` under
    /// `(omega, v^(k)) = 1`.
    pub fn omega_pairing(&self) -> ScalarFraction {
        self.coeffs
            .values()
            .chain(self.overflow.values())
            .fold(ScalarFraction::zero(), |acc, c| acc.add(c))
    }

    /// Nonzero components with every level below `bound`, and the rest.
    pub fn split_at(&self, bound: i64) -> (Vec<(&Levels, &ScalarFraction)>, usize) {
        let mut inner = Vec::new();
        let mut edge = 0;
        for (k, c) in self.coeffs.iter() {
            if k.iter().all(|&l| l < bound) {
                inner.push((k, c));
            } else {
                edge += 1;
            }
        }
        (inner, edge + self.overflow.len())
    }
}

/// Left action of `a`, `a*` or `q^(2D)` at `site`, applied to the in-range
/// part; existing overflow is carried unchanged.
pub fn fock_act(op: FockOp, site: u32, v: &FockVector) -> Result<FockVector> {
    if site == 0 || site > v.sites {
        return Err(AlgebraError::InvalidSite {
            site: site as i64,
            sites: v.sites,
        });
    }
    let i = site as usize - 1;
    let mut out = FockVector::zero(v.sites, v.trunc);
    out.overflow = v.overflow.clone();
    for (levels, c) in &v.coeffs {
        let k = levels[i];
        let mut next = levels.clone();
        match op {
            FockOp::A => {
                if k == 0 {
                    continue;
                }
                next[i] = k - 1;
                let f = &Scalar::one() - &q_pow(-2 * k as i32);
                out.push(next, c.mul_scalar(&f));
            }
            FockOp::AStar => {
                next[i] = k + 1;
                out.push(next, c.clone());
            }
            FockOp::QD => out.push(next, c.mul_scalar(&q_pow(-2 * k as i32))),
        }
    }
    Ok(out)
}

/// Left action of a Weyl-algebra element through `v^(k) = v^(0) U^k` with
/// `v^(0) V = v^(0)`, so `v^(k) V^a U^b = q^(2ka) v^(k+b)`.
pub fn weyl_act(op: &WeylOp, v: &FockVector) -> Result<FockVector> {
    let mut out = FockVector::zero(v.sites, v.trunc);
    out.overflow = v.overflow.clone();
    for (mono, coef) in op.terms() {
        for (levels, c) in &v.coeffs {
            let mut next = levels.clone();
            let mut s_exp = 0i64;
            for (site, v2, u2) in mono.factors() {
                if site == 0 || site > v.sites {
                    return Err(AlgebraError::InvalidSite {
                        site: site as i64,
                        sites: v.sites,
                    });
                }
                if u2 % 2 != 0 {
                    return Err(AlgebraError::NotHalfInteger(format!(
                        "U^({u2}/2) on a Fock state"
                    )));
                }
                let i = site as usize - 1;
                s_exp += 2 * levels[i] * v2 as i64;
                next[i] += (u2 / 2) as i64;
            }
            let f = &Scalar::s_pow(s_exp as i32) * coef;
            out.push(next, c.mul_scalar(&f));
        }
    }
    Ok(out)
}

/// `q^(-2k) / ((1 - q^-2) ... (1 - q^-2k))`, written over the common
/// denominator of all levels up to `trunc`.
pub fn omega_coeff(k: u32, trunc: u32) -> Result<ScalarFraction> {
    let factor = |j: u32| &Scalar::one() - &q_pow(-2 * j as i32);
    let mut num = q_pow(-2 * k as i32);
    let mut den = Scalar::one();
    for j in 1..=trunc.max(k) {
        den = &den * &factor(j);
        if j > k {
            num = &num * &factor(j);
        }
    }
    ScalarFraction::new(num, den)
}

pub fn build_state(kind: StateKind) -> Result<FockVector> {
    match kind {
        StateKind::Vk(k) => Ok(FockVector::basis(vec![k as i64], k.max(1))),
        StateKind::Omega(trunc) => {
            let mut v = FockVector::zero(1, trunc);
            for k in 0..=trunc {
                v.push(vec![k as i64], omega_coeff(k, trunc)?);
            }
            Ok(v)
        }
        StateKind::OmegaN(trunc, sites) => {
            if sites == 0 {
                return Err(AlgebraError::ChainTooShort { size: 0, need: 1 });
            }
            let coeffs: Vec<ScalarFraction> = (0..=trunc)
                .map(|k| omega_coeff(k, trunc))
                .collect::<Result<_>>()?;
            let mut v = FockVector::zero(sites, trunc);
            let mut levels = vec![0i64; sites as usize];
            loop {
                let c = levels.iter().fold(ScalarFraction::one(), |acc, &k| {
                    acc.mul(&coeffs[k as usize])
                });
                v.push(levels.clone(), c);
                // odometer over 0..=trunc per site
                let mut i = 0;
                loop {
                    if i == levels.len() {
                        return Ok(v);
                    }
                    levels[i] += 1;
                    if levels[i] <= trunc as i64 {
                        break;
                    }
                    levels[i] = 0;
                    i += 1;
                }
            }
        }
    }
}

/// `H_1 = sum_n (a_n a*_{n+1} + q^(2D_n))` on a periodic lattice.
pub fn stochastic_h1(sites: u32) -> Result<WeylOp> {
    hopping_h1(sites, 1)
}

/// `sum_n (a_n a*_{n+step} + q^(2D_n))`.
pub fn hopping_h1(sites: u32, step: i64) -> Result<WeylOp> {
    let lat = Lattice::periodic(sites);
    let mut h = WeylOp::zero(lat);
    for n in 1..=sites as i64 {
        let a = qosc(lat, n)?.0;
        let astar = qosc(lat, n + step)?.1;
        h = h.add(&a.mul(&astar)?)?.add(&qosc(lat, n)?.2)?;
    }
    Ok(h)
}

/// `(a_n, a*_n, q^(2D_n)) = ((1 - V^-1) U^-1, U, V^-1)`.
pub fn qosc(lat: Lattice, n: i64) -> Result<(WeylOp, WeylOp, WeylOp)> {
    let vinv = WeylOp::v(lat, n, -2)?;
    let a = WeylOp::one(lat).sub(&vinv)?.mul(&WeylOp::u(lat, n, -2)?)?;
    Ok((a, WeylOp::u(lat, n, 2)?, vinv))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StochId {
    QoscAlgebra,
    LqoscMatch,
    ColumnEigen,
    OmegaIdentity,
    OmegaH1,
    ZeroColumnSum,
}

impl StochId {
    pub fn name(self) -> &'static str {
        match self {
            StochId::QoscAlgebra => "stoch.qosc_algebra",
            StochId::LqoscMatch => "stoch.Lqosc_match",
            StochId::ColumnEigen => "stoch.column_eigen",
            StochId::OmegaIdentity => "stoch.omega_identity",
            StochId::OmegaH1 => "stoch.Omega_H1",
            StochId::ZeroColumnSum => "stoch.zero_column_sum",
        }
    }

    pub fn anchor(self) -> &'static str {
        match self {
            StochId::QoscAlgebra => "q-oscillator algebra in the Weyl realization",
            StochId::LqoscMatch => "q-oscillator form of the ultralocal Lax matrix",
            StochId::ColumnEigen => {
                "omega is an eigenstate of each column sum with eigenvalue lam - 1"
            }
            StochId::OmegaIdentity => "omega a* identity",
            StochId::OmegaH1 => "Omega is a left eigenstate of H_1 with eigenvalue N",
            StochId::ZeroColumnSum => "H_1 - N has vanishing column sums under the omega pairing",
        }
    }
}

fn record_interior(r: &mut Residual, label: &str, diff: &FockVector, bound: i64) -> usize {
    let (inner, edge) = diff.split_at(bound);
    for (k, c) in inner {
        r.fraction(&format!("{label} {k:?}"), c);
    }
    edge
}

/// Value at `q = 1/2` of a scalar in `s` alone with even `s` powers.
fn at_half(x: &Scalar) -> Option<BigRational> {
    let half = BigRational::new(1.into(), 2.into());
    let mut acc = BigRational::zero();
    for (named, _, c) in x.canonical_terms() {
        let mut t = c.clone();
        for (name, e) in named {
            if name != S || e % 2 != 0 {
                return None;
            }
            let q = e / 2;
            let base = if q >= 0 {
                half.clone()
            } else {
                BigRational::one() / &half
            };
            for _ in 0..q.abs() {
                t *= &base;
            }
        }
        acc += t;
    }
    Some(acc)
}

fn stoch_residual(id: StochId, trunc: u32, sites: u32) -> Result<(Residual, Option<String>)> {
    if trunc < 3 {
        return Err(AlgebraError::TruncationTooSmall { k: trunc, need: 3 });
    }
    let mut r = Residual::new();
    let mut note = None;
    let k = trunc as i64;
    let lam = Scalar::var("lam");
    match id {
        StochId::QoscAlgebra => {
            let lat = Lattice::open(sites);
            for n in 1..=sites as i64 {
                let (a, astar, q2d) = qosc(lat, n)?;
                let one = WeylOp::one(lat);
                r.op(
                    &format!("a a* n={n}"),
                    &a.mul(&astar)?.sub(&one.sub(&q2d)?)?,
                );
                let shifted = q2d.scale(&q_pow(-2));
                r.op(
                    &format!("a* a n={n}"),
                    &astar.mul(&a)?.sub(&one.sub(&shifted)?)?,
                );
                r.op(
                    &format!("a q2D n={n}"),
                    &a.mul(&q2d)?.sub(&q2d.scale(&q_pow(2)).mul(&a)?)?,
                );
                r.op(
                    &format!("a* q2D n={n}"),
                    &astar.mul(&q2d)?.sub(&shifted.mul(&astar)?)?,
                );
            }
            // the Weyl realization reproduces the displayed left action
            let lat1 = Lattice::open(1);
            let (a, astar, q2d) = qosc(lat1, 1)?;
            for (name, op, w) in [
                ("a", FockOp::A, &a),
                ("a*", FockOp::AStar, &astar),
                ("q2D", FockOp::QD, &q2d),
            ] {
                for level in 0..k {
                    let v = FockVector::basis(vec![level], trunc);
                    let diff = fock_act(op, 1, &v)?.sub(&weyl_act(w, &v)?);
                    for (lv, c) in diff.components().chain(diff.overflow()) {
                        r.fraction(&format!("{name} on v^({level}) at {lv:?}"), c);
                    }
                }
            }
        }
        StochId::LqoscMatch => {
            let p = ModelParams::preset(Preset::QOsc, sites);
            for n in 1..=sites as i64 {
                let osc = build_lax(LaxKind::LQOsc, n, &lam, &p)?;
                let loc = build_lax(LaxKind::LLoc, n, &lam, &p)?;
                r.matrix(&format!("n={n}"), &osc.residual(&loc)?.0);
            }
        }
        StochId::ColumnEigen => {
            let p = ModelParams::preset(Preset::QOsc, 1);
            let l = build_lax(LaxKind::LQOsc, 1, &lam, &p)?;
            let omega = build_state(StateKind::Omega(trunc))?;
            let target = omega.scale(&(&lam - &Scalar::one()));
            let mut edge = 0;
            for col in 0..2 {
                let sum = l.get(0, col).add(l.get(1, col))?;
                let diff = weyl_act(&sum, &omega)?.sub(&target);
                edge += record_interior(&mut r, &format!("column {}", col + 1), &diff, k);
            }
            // same statement through the displayed Fock action
            let act = |op, v: &FockVector| fock_act(op, 1, v);
            let col1 = omega
                .scale(&lam)
                .sub(&act(FockOp::QD, &omega)?)
                .sub(&act(FockOp::AStar, &omega)?.scale(&q_pow(-2)));
            let col2 = act(FockOp::A, &omega)?
                .scale(&(&q_pow(2) * &lam))
                .sub(&omega);
            for (label, v) in [("fock column 1", col1), ("fock column 2", col2)] {
                edge += record_interior(&mut r, label, &v.sub(&target), k);
            }
            note = Some(format!("{edge} boundary components at level >= {trunc}"));
        }
        StochId::OmegaIdentity => {
            let omega = build_state(StateKind::Omega(trunc))?;
            let lhs = fock_act(FockOp::AStar, 1, &omega)?.scale(&-q_pow(-2));
            let rhs = fock_act(FockOp::QD, 1, &omega)?.sub(&omega);
            let diff = lhs.sub(&rhs);
            let edge = record_interior(&mut r, "level", &diff, k + 1);
            let ann = fock_act(FockOp::A, 1, &omega)?.sub(&omega.scale(&q_pow(-2)));
            let edge2 = record_interior(&mut r, "omega a", &ann, k);
            note = Some(format!(
                "{edge} components beyond level {trunc}; omega a - q^-2 omega has {edge2} at level {trunc}"
            ));
        }
        StochId::OmegaH1 => {
            if sites < 2 {
                return Err(AlgebraError::ChainTooShort {
                    size: sites as usize,
                    need: 2,
                });
            }
            let big = build_state(StateKind::OmegaN(trunc, sites))?;
            let h = stochastic_h1(sites)?;
            let diff = weyl_act(&h, &big)?.sub(&big.scale(&Scalar::int(sites as i64)));
            let edge = record_interior(&mut r, "levels", &diff, k);
            // the expanded local transfer matrix hops the other way
            let p = ModelParams::preset(Preset::QOsc, sites);
            let hs = crate::quantum::hamiltonians(&p)?;
            let mirrored = hopping_h1(sites, -1)?;
            r.op("transfer H_1 vs mirrored hopping", &hs[1].sub(&mirrored)?);
            let diff2 = weyl_act(&mirrored, &big)?.sub(&big.scale(&Scalar::int(sites as i64)));
            record_interior(&mut r, "mirrored levels", &diff2, k);
            let direct = hs[1].sub(&h)?.term_count();
            note = Some(format!(
                "{edge} boundary components with a level >= {trunc}; transfer H_1 is sum a_n a*_(n-1) + q^(2D_n), differing from the displayed orientation by {direct} terms"
            ));
        }
        StochId::ZeroColumnSum => {
            if sites < 2 {
                return Err(AlgebraError::ChainTooShort {
                    size: sites as usize,
                    need: 2,
                });
            }
            let h = stochastic_h1(sites)?;
            let shift = Scalar::int(sites as i64);
            let (mut neg, mut pos) = (0usize, 0usize);
            let mut levels = vec![0i64; sites as usize];
            'outer: loop {
                let v = FockVector::basis(levels.clone(), trunc);
                let image = weyl_act(&h, &v)?;
                let gen = image.sub(&v.scale(&shift));
                r.fraction(&format!("{levels:?}"), &gen.omega_pairing());
                for (lv, c) in image.components() {
                    if *lv == levels {
                        continue;
                    }
                    let val = c.as_scalar().and_then(at_half);
                    match val {
                        Some(x) if x.is_negative() => neg += 1,
                        Some(x) if x.is_positive() => pos += 1,
                        _ => {}
                    }
                }
                let mut i = 0;
                loop {
                    if i == levels.len() {
                        break 'outer;
                    }
                    levels[i] += 1;
                    if levels[i] < k {
                        break;
                    }
                    levels[i] = 0;
                    i += 1;
                }
            }
            note = Some(format!(
                "states with levels < {trunc}; off-diagonal entries at q = 1/2: {neg} negative, {pos} positive"
            ));
        }
    }
    Ok((r, note))
}

pub fn check_stoch(id: StochId, trunc: u32, sites: u32) -> CheckReport {
    let b = ReportBuilder::new(id.name(), id.anchor())
        .param("K", trunc)
        .param("N", sites);
    match stoch_residual(id, trunc, sites) {
        Ok((r, Some(n))) => b.note(n).finish(r),
        Ok((r, None)) => b.finish(r),
        Err(e) => b.error(&e),
    }
}

//! Stable check ids, their defaults, and a parallel runner.

use rayon::prelude::*;

use crate::classical::{check_classical, ClassicalId};
use crate::poisson::{check_bracket_identity, default_size, BracketId};
use crate::quantum::checks::{
    check_fm, check_hamiltonians, check_representation, check_transfer_commute,
    check_ultralocalisation, check_ybe, CommuteId, FmId, HamId, RepId, UltraStep, YbeId,
};
use crate::quantum::ModelParams;
use crate::report::CheckReport;
use crate::sample::{check_sample, SampleId};
use crate::stoch::{check_stoch, StochId};

/// Sites used by the open-chain representation suite.
pub const REP_SITES: u32 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Fm(FmId),
    Ybe(YbeId),
    Ultra(UltraStep),
    Commute(CommuteId),
    Rep(RepId),
    Ham(HamId),
    Bracket(BracketId),
    Classical(ClassicalId),
    Stoch(StochId),
    Sample(SampleId),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunParams {
    pub sites: u32,
    pub trunc: u32,
    pub seed: u64,
}

impl Default for RunParams {
    fn default() -> Self {
        RunParams {
            sites: 3,
            trunc: 6,
            seed: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckEntry {
    pub id: &'static str,
    pub module: &'static str,
    pub anchor: &'static str,
    kind: Kind,
}

impl CheckEntry {
    fn new(module: &'static str, info: (&'static str, &'static str), kind: Kind) -> Self {
        CheckEntry {
            id: info.0,
            module,
            anchor: info.1,
            kind,
        }
    }

    /// Chain length actually used for a requested `N`.
    pub fn sites_for(&self, n: u32) -> u32 {
        match self.kind {
            Kind::Fm(FmId::DistantCommute) => n.max(4),
            Kind::Ham(HamId::H2Toda2 | HamId::TrqMatch2) => n.max(2),
            Kind::Classical(_) | Kind::Stoch(_) => n.max(2),
            Kind::Rep(_) => REP_SITES,
            Kind::Bracket(b) => default_size(b),
            _ => n,
        }
    }

    /// Human-readable default parameters.
    pub fn defaults(&self) -> String {
        let d = RunParams::default();
        match self.kind {
            Kind::Rep(_) => format!("sites={REP_SITES} open"),
            Kind::Bracket(b) => format!("sites={}", default_size(b)),
            Kind::Stoch(_) => format!("N={} K={}", self.sites_for(d.sites), d.trunc),
            Kind::Sample(_) => format!("seed={}", d.seed),
            Kind::Fm(FmId::DgcgGeneral | FmId::DualGeneral) | Kind::Ybe(YbeId::YbeTwisted) => {
                "-".into()
            }
            _ => format!("N={}", self.sites_for(d.sites)),
        }
    }

    pub fn run(&self, p: &RunParams) -> CheckReport {
        let n = self.sites_for(p.sites);
        let model = || ModelParams::generic(n);
        match self.kind {
            Kind::Fm(id) => check_fm(id, &model()),
            Kind::Ybe(id) => check_ybe(id, &model()),
            Kind::Ultra(id) => check_ultralocalisation(id, &model()),
            Kind::Commute(id) => check_transfer_commute(id, &model()),
            Kind::Rep(id) => check_representation(id, n),
            Kind::Ham(id) => check_hamiltonians(id, n),
            Kind::Bracket(id) => check_bracket_identity(id, n),
            Kind::Classical(id) => check_classical(id, n),
            Kind::Stoch(id) => check_stoch(id, p.trunc, n),
            Kind::Sample(id) => check_sample(id, p.seed),
        }
    }
}

/// Every check, sorted by id.
pub fn registry() -> Vec<CheckEntry> {
    use FmId::*;
    let mut v = Vec::new();
    for id in [Ad, B, C, DgcgGeneral, DualGeneral, AttTtd, DistantCommute] {
        v.push(CheckEntry::new("quantum", id.info(), Kind::Fm(id)));
    }
    for id in [YbeId::YbeTwisted, YbeId::RllUltralocal] {
        v.push(CheckEntry::new("quantum", id.info(), Kind::Ybe(id)));
    }
    for id in [
        UltraStep::GaugeL,
        UltraStep::GaugeG,
        UltraStep::ScriptLAssembly,
        UltraStep::TraceIdentity,
        UltraStep::TraceIdentityGauged,
        UltraStep::EntrywiseConjugation,
        UltraStep::Taut,
    ] {
        v.push(CheckEntry::new("quantum", id.info(), Kind::Ultra(id)));
    }
    for id in [CommuteId::Tau, CommuteId::TLoc] {
        v.push(CheckEntry::new("quantum", id.info(), Kind::Commute(id)));
    }
    for id in [
        RepId::ExchangeXi,
        RepId::WAlgebraQ,
        RepId::QpRelations,
        RepId::W1Monomial,
        RepId::QpMatch,
    ] {
        v.push(CheckEntry::new("quantum", id.info(), Kind::Rep(id)));
    }
    for id in [
        HamId::Commute,
        HamId::H1QToda,
        HamId::H1Toda2,
        HamId::H2Toda2,
        HamId::TrqCommute,
        HamId::TrqMatch1,
        HamId::TrqMatch2,
    ] {
        v.push(CheckEntry::new("quantum", id.info(), Kind::Ham(id)));
    }
    for id in [
        BracketId::W1W1,
        BracketId::W1W2,
        BracketId::W2W2,
        BracketId::Virlat,
        BracketId::Qq,
        BracketId::Qp,
        BracketId::Pp,
        BracketId::ExlatFromDarboux,
        BracketId::QpFromRep,
        BracketId::Jacobi,
    ] {
        v.push(CheckEntry::new("poisson", id.info(), Kind::Bracket(id)));
    }
    for id in [
        ClassicalId::PoissonLExplicit,
        ClassicalId::PoissonLDform,
        ClassicalId::Involution,
        ClassicalId::CurveNxN,
        ClassicalId::Curve2x2,
        ClassicalId::PnEqualsTrT,
    ] {
        v.push(CheckEntry::new(
            "classical",
            (id.name(), id.anchor()),
            Kind::Classical(id),
        ));
    }
    for id in [
        StochId::QoscAlgebra,
        StochId::LqoscMatch,
        StochId::ColumnEigen,
        StochId::OmegaIdentity,
        StochId::OmegaH1,
        StochId::ZeroColumnSum,
    ] {
        v.push(CheckEntry::new(
            "stoch",
            (id.name(), id.anchor()),
            Kind::Stoch(id),
        ));
    }
    for id in [
        SampleId::RingAxioms,
        SampleId::WeylAssociativity,
        SampleId::TraceCyclicity,
    ] {
        v.push(CheckEntry::new("sample", id.info(), Kind::Sample(id)));
    }
    v.sort_by_key(|e| e.id);
    v
}

pub fn find(id: &str) -> Option<CheckEntry> {
    registry().into_iter().find(|e| e.id == id)
}

/// Resolves `all`, a suite prefix such as `fm`, or exact ids. Unknown names
/// are returned as the error.
pub fn select(names: &[String]) -> std::result::Result<Vec<CheckEntry>, Vec<String>> {
    let reg = registry();
    let mut out = Vec::new();
    let mut unknown = Vec::new();
    for name in names {
        let hits: Vec<_> = if name == "all" {
            reg.clone()
        } else {
            reg.iter()
                .filter(|e| e.id == name || e.id.split('.').next() == Some(name.as_str()))
                .copied()
                .collect()
        };
        if hits.is_empty() {
            unknown.push(name.clone());
        }
        out.extend(hits);
    }
    if !unknown.is_empty() {
        return Err(unknown);
    }
    out.sort_by_key(|e| e.id);
    out.dedup_by_key(|e| e.id);
    Ok(out)
}

/// Runs the entries in parallel; the result is sorted by id.
pub fn run_checks(entries: &[CheckEntry], p: &RunParams) -> Vec<CheckReport> {
    let mut out: Vec<CheckReport> = entries.par_iter().map(|e| e.run(p)).collect();
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

//! Verification outcomes and residual accumulation.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::matops::{Entry, OpMatrix};
use crate::ring::{Scalar, ScalarFraction};
use crate::weyl::WeylOp;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Measured but not asserted, for example where periodic wrap-around
    /// makes neighbour relations overlap.
    Degenerate,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Degenerate => "degenerate",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub residual_terms: usize,
    pub witness: Option<String>,
    pub anchor: String,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Copy with `elapsed_ms` zeroed, for byte-stable output.
    pub fn without_timing(&self) -> CheckReport {
        CheckReport {
            elapsed_ms: 0,
            ..self.clone()
        }
    }
}

/// Accumulates nonzero residual terms across several comparisons and keeps
/// the first nonzero one as a witness.
#[derive(Clone, Debug, Default)]
pub struct Residual {
    pub terms: usize,
    pub witness: Option<String>,
    pub failing: Vec<String>,
}

impl Residual {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms == 0
    }

    fn record(&mut self, label: &str, terms: usize, witness: Option<String>) {
        if terms == 0 {
            return;
        }
        self.terms += terms;
        self.failing.push(label.to_string());
        if self.witness.is_none() {
            self.witness = witness.map(|w| format!("{label}: {w}"));
        }
    }

    pub fn op(&mut self, label: &str, r: &WeylOp) {
        self.record(label, r.term_count(), r.witness());
    }

    pub fn scalar(&mut self, label: &str, r: &Scalar) {
        self.record(label, r.len(), r.witness());
    }

    pub fn fraction(&mut self, label: &str, r: &ScalarFraction) {
        self.record(label, r.num().len(), r.num().witness());
    }

    pub fn matrix<E: Entry>(&mut self, label: &str, r: &OpMatrix<E>) {
        self.record(label, r.term_count(), r.witness());
    }

    /// Merges another accumulator, prefixing its labels.
    pub fn absorb(&mut self, prefix: &str, other: Residual) {
        if other.terms == 0 {
            return;
        }
        self.terms += other.terms;
        self.failing
            .extend(other.failing.into_iter().map(|l| format!("{prefix}{l}")));
        if self.witness.is_none() {
            self.witness = other.witness.map(|w| format!("{prefix}{w}"));
        }
    }
}

/// Collects parameters and timing for one check.
pub struct ReportBuilder {
    id: String,
    anchor: String,
    params: BTreeMap<String, String>,
    start: Instant,
    degenerate: bool,
    note: Option<String>,
}

impl ReportBuilder {
    pub fn new(id: &str, anchor: &str) -> Self {
        ReportBuilder {
            id: id.to_string(),
            anchor: anchor.to_string(),
            params: BTreeMap::new(),
            start: Instant::now(),
            degenerate: false,
            note: None,
        }
    }

    pub fn param(mut self, k: &str, v: impl fmt::Display) -> Self {
        self.params.insert(k.to_string(), v.to_string());
        self
    }

    /// Marks the outcome as measured rather than asserted.
    pub fn degenerate(mut self, yes: bool) -> Self {
        self.degenerate = yes;
        self
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.note = Some(n.into());
        self
    }

    pub fn finish(self, r: Residual) -> CheckReport {
        let status = if self.degenerate {
            Status::Degenerate
        } else if r.is_zero() {
            Status::Pass
        } else {
            Status::Fail
        };
        let mut note = self.note;
        if !r.failing.is_empty() {
            let shown: Vec<_> = r.failing.iter().take(8).cloned().collect();
            let more = r.failing.len().saturating_sub(shown.len());
            let mut s = format!("nonzero at {}", shown.join(", "));
            if more > 0 {
                s.push_str(&format!(" (+{more} more)"));
            }
            note = Some(match note {
                Some(n) => format!("{n}; {s}"),
                None => s,
            });
        }
        CheckReport {
            id: self.id,
            params: self.params,
            status,
            residual_terms: r.terms,
            witness: r.witness,
            anchor: self.anchor,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
            note,
        }
    }

    /// Report for a check that could not be evaluated.
    pub fn error(self, e: &crate::error::AlgebraError) -> CheckReport {
        CheckReport {
            id: self.id,
            params: self.params,
            status: Status::Fail,
            residual_terms: 1,
            witness: Some(format!("error: {e}")),
            anchor: self.anchor,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
            note: self.note,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::Lattice;

    #[test]
    fn zero_residual_passes() {
        let rep = ReportBuilder::new("x", "anchor")
            .param("N", 3)
            .finish(Residual::new());
        assert!(rep.passed());
        assert_eq!(rep.residual_terms, 0);
        assert_eq!(rep.params["N"], "3");
    }

    #[test]
    fn first_witness_kept() {
        let lat = Lattice::periodic(2);
        let mut r = Residual::new();
        r.op("a", &WeylOp::zero(lat));
        r.op("b", &WeylOp::u(lat, 1, 2).unwrap());
        r.op("c", &WeylOp::v(lat, 1, 2).unwrap());
        let rep = ReportBuilder::new("x", "anchor").finish(r);
        assert_eq!(rep.status, Status::Fail);
        assert_eq!(rep.residual_terms, 2);
        assert!(rep.witness.unwrap().starts_with("b: "));
    }
}

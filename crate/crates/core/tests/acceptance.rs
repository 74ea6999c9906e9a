//! Acceptance run: one pass/fail line per criterion.

use std::time::{Duration, Instant};

use toda2_core::mutants;
use toda2_core::registry::{find, registry, run_checks, RunParams};
use toda2_core::report::{CheckReport, Status};

/// Criteria known to fail, with the reason.
const EXPECTED_FAILURES: &[(u32, &str)] = &[(
    4,
    "ultra.trace_identity: the stated first-site shift d1 -> q^-2 d1 misses the d2 d3 terms \
     (the gauge relation also needs d3 -> q^-4 d3); see ultra.trace_identity_gauged",
)];

struct Outcome {
    n: u32,
    title: &'static str,
    failures: Vec<String>,
    elapsed: Duration,
    limit: Duration,
}

fn run(id: &str, sites: u32) -> CheckReport {
    let entry = find(id).unwrap_or_else(|| panic!("unknown check {id}"));
    let rep = entry.run(&RunParams {
        sites,
        ..Default::default()
    });
    assert_eq!(rep.id, id);
    rep
}

fn expect(failures: &mut Vec<String>, rep: &CheckReport, want: Status) {
    if rep.status != want {
        let wit = rep.witness.clone().unwrap_or_default();
        let wit: String = wit.chars().take(120).collect();
        failures.push(format!(
            "{} {:?}: {} (want {}) {} terms {}",
            rep.id, rep.params, rep.status, want, rep.residual_terms, wit
        ));
    }
}

fn criterion(
    n: u32,
    title: &'static str,
    limit_s: u64,
    body: impl FnOnce(&mut Vec<String>),
) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    body(&mut failures);
    Outcome {
        n,
        title,
        failures,
        elapsed: start.elapsed(),
        limit: Duration::from_secs(limit_s),
    }
}

fn pass_all(f: &mut Vec<String>, ids: &[&str], sites: u32) {
    for id in ids {
        expect(f, &run(id, sites), Status::Pass);
    }
}

fn main() {
    let outcomes = vec![
        criterion(1, "FM structure suite", 10, |f| {
            pass_all(
                f,
                &[
                    "fm.AD",
                    "fm.B",
                    "fm.C",
                    "fm.DGCG_general",
                    "fm.dual_general",
                ],
                3,
            );
        }),
        criterion(2, "ATT=TTD at N=3", 60, |f| {
            let rep = run("fm.ATT_TTD", 3);
            expect(f, &rep, Status::Pass);
            if rep.residual_terms != 0 {
                f.push("nonzero residual entries".into());
            }
        }),
        criterion(3, "YBE and RLL", 10, |f| {
            pass_all(f, &["ybe.YBE_twisted", "ybe.RLL_ultralocal"], 3);
        }),
        criterion(4, "ultralocalisation chain", 120, |f| {
            pass_all(
                f,
                &[
                    "ultra.gauge_l",
                    "ultra.gauge_G",
                    "ultra.scriptL_assembly",
                    "ultra.trace_identity",
                    "ultra.entrywise_conjugation",
                ],
                3,
            );
            for n in 1..=3 {
                pass_all(f, &["ultra.taut"], n);
            }
        }),
        criterion(
            5,
            "commuting transfer matrices and Hamiltonians",
            300,
            |f| {
                for n in [2, 3] {
                    pass_all(f, &["commute.tau", "commute.tloc"], n);
                }
                pass_all(f, &["ham.commute"], 3);
            },
        ),
        criterion(6, "Hamiltonian formulas", 60, |f| {
            pass_all(
                f,
                &[
                    "ham.H1_qToda",
                    "ham.H1_Toda2",
                    "ham.H2_Toda2",
                    "ham.trq_match1",
                    "ham.trq_match2",
                ],
                3,
            );
        }),
        criterion(
            7,
            "quantum representation on a 6-site open chain",
            60,
            |f| {
                for id in [
                    "rep.exchange_xi",
                    "rep.W_algebra_q",
                    "rep.QP_relations",
                    "rep.W1_monomial",
                ] {
                    let rep = run(id, 3);
                    expect(f, &rep, Status::Pass);
                    if rep.params.get("sites").map(String::as_str) != Some("6") {
                        f.push(format!("{id} ran on {:?}", rep.params));
                    }
                }
            },
        ),
        criterion(8, "classical bracket suite", 60, |f| {
            let ids = [
                "classical.w1w1",
                "classical.w1w2",
                "classical.w2w2",
                "classical.virlat",
                "classical.qq",
                "classical.qp",
                "classical.pp",
                "classical.exlat_from_darboux",
                "classical.qp_from_rep",
                "classical.jacobi",
            ];
            pass_all(f, &ids, 3);
            for id in &ids[..4] {
                if run(id, 3).params.get("sites").map(String::as_str) != Some("8") {
                    f.push(format!("{id} not on an 8-site chain"));
                }
            }
        }),
        criterion(9, "classical integrability", 60, |f| {
            pass_all(
                f,
                &[
                    "classical.poissonL_explicit",
                    "classical.poissonL_dform",
                    "classical.involution",
                ],
                3,
            );
            for id in ["classical.poissonL_explicit", "classical.poissonL_dform"] {
                expect(f, &run(id, 2), Status::Degenerate);
            }
            for n in [2, 3, 4] {
                pass_all(f, &["classical.pN_equals_trT"], n);
            }
        }),
        criterion(10, "stochastic suite at N=2, K=6", 60, |f| {
            for id in [
                "stoch.qosc_algebra",
                "stoch.Lqosc_match",
                "stoch.column_eigen",
                "stoch.Omega_H1",
            ] {
                let rep = run(id, 2);
                expect(f, &rep, Status::Pass);
                if rep.params.get("K").map(String::as_str) != Some("6") {
                    f.push(format!("{id} ran with {:?}", rep.params));
                }
            }
        }),
        criterion(11, "mutation sensitivity", 60, |f| {
            let all = mutants::all();
            for rep in &all {
                let witnessed = rep
                    .witness
                    .as_deref()
                    .is_some_and(|w| !w.starts_with("error"));
                if rep.status != Status::Fail || rep.residual_terms == 0 || !witnessed {
                    f.push(format!("{} not caught: {:?}", rep.id, rep.status));
                }
            }
            for suite in [
                "fm",
                "ybe",
                "ultra",
                "commute",
                "rep",
                "ham",
                "classical",
                "stoch",
            ] {
                if !all
                    .iter()
                    .any(|r| r.id.starts_with(&format!("mutant.{suite}.")))
                {
                    f.push(format!("no mutant for {suite}"));
                }
            }
        }),
        criterion(12, "deterministic reports", 60, |f| {
            let render = || {
                let reps: Vec<CheckReport> = run_checks(&registry(), &RunParams::default())
                    .iter()
                    .map(CheckReport::without_timing)
                    .collect();
                serde_json::to_string_pretty(&reps).unwrap()
            };
            if render() != render() {
                f.push("two full runs differ".into());
            }
        }),
    ];

    let mut failed = Vec::new();
    for o in &outcomes {
        let slow = o.elapsed > o.limit;
        let ok = o.failures.is_empty() && !slow;
        println!(
            "criterion {:>2}: {} {} ({:.2?}, limit {:?})",
            o.n,
            if ok { "PASS" } else { "FAIL" },
            o.title,
            o.elapsed,
            o.limit
        );
        for line in &o.failures {
            println!("    {line}");
        }
        if slow {
            println!("    over the time limit");
        }
        if !ok {
            failed.push(o.n);
        }
    }
    for (n, why) in EXPECTED_FAILURES {
        println!("known failure, criterion {n}: {why}");
    }
    let expected: Vec<u32> = EXPECTED_FAILURES.iter().map(|e| e.0).collect();
    if failed != expected {
        eprintln!("failing criteria {failed:?} differ from the known set {expected:?}");
        std::process::exit(1);
    }
}

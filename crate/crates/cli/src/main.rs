use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use toda2_core::registry::{registry, run_checks, select, RunParams};
use toda2_core::report::{CheckReport, Status};

#[derive(Parser)]
#[command(
    name = "toda2",
    version,
    about = "Exact verification of Toda2 chain identities"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run checks by id, by suite prefix (e.g. `fm`), or `all`.
    Verify {
        #[arg(required = true)]
        ids: Vec<String>,
        /// Chain length N.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        sites: u32,
        /// Fock truncation level K.
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        trunc: u32,
        /// Cap on stored terms in a single Weyl product.
        #[arg(long, default_value_t = 1_000_000)]
        max_terms: usize,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Seed for the randomized spot checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Keep wall-clock timings in the JSON report.
        #[arg(long)]
        timings: bool,
    },
    /// List every check with its module, anchor and defaults.
    List,
}

fn print_table(reports: &[CheckReport]) {
    let w = reports.iter().map(|r| r.id.len()).max().unwrap_or(2);
    println!(
        "{:w$}  {:10}  {:>8}  {:>8}",
        "id", "status", "residual", "ms"
    );
    for r in reports {
        println!(
            "{:w$}  {:10}  {:>8}  {:>8}",
            r.id,
            r.status.to_string(),
            r.residual_terms,
            r.elapsed_ms
        );
        if let Some(wit) = r.witness.as_deref().filter(|_| r.status == Status::Fail) {
            let short: String = wit.chars().take(160).collect();
            println!("{:w$}    witness: {short}", "");
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::List => {
            let mut out = std::io::stdout().lock();
            for e in registry() {
                if writeln!(
                    out,
                    "{}\t{}\t{}\t{}",
                    e.id,
                    e.module,
                    e.anchor,
                    e.defaults()
                )
                .is_err()
                {
                    break;
                }
            }
            ExitCode::SUCCESS
        }
        Cmd::Verify {
            ids,
            sites,
            trunc,
            max_terms,
            json,
            seed,
            timings,
        } => {
            let entries = match select(&ids) {
                Ok(e) => e,
                Err(unknown) => {
                    eprintln!("error: unknown check id(s): {}", unknown.join(", "));
                    eprintln!("run `toda2 list` for the available ids");
                    return ExitCode::from(2);
                }
            };
            toda2_core::weyl::set_term_cap(max_terms);
            let reports = run_checks(&entries, &RunParams { sites, trunc, seed });
            print_table(&reports);
            let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
            let degenerate = reports
                .iter()
                .filter(|r| r.status == Status::Degenerate)
                .count();
            println!(
                "{} checks: {} pass, {failed} fail, {degenerate} degenerate",
                reports.len(),
                reports.len() - failed - degenerate
            );
            if let Some(path) = json {
                let out: Vec<CheckReport> = if timings {
                    reports.clone()
                } else {
                    reports.iter().map(CheckReport::without_timing).collect()
                };
                let text = serde_json::to_string_pretty(&out).expect("reports serialize") + "\n";
                if let Err(e) = std::fs::write(&path, text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if failed > 0 {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
    }
}

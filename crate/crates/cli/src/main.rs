use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use bei::campaign::{fixture_jsonl, run_campaign, Check};
use bei::census::{index_path, run_census, CensusOptions};
use bei::error::{HarnessError, HarnessResult, EXIT_OK, EXIT_VIOLATION};
use bei::record::analyze;
use bei::report::Table;
use bei::verify::run_verification;
use bei::workers::{pool, resolve_workers};
use bei_core::graph6;
use bei_core::invariants::InvariantOptions;

#[derive(Parser)]
#[command(name = "bei", version, about = "Regularity, Cohen-Macaulayness and licci verdicts for binomial edge ideals")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the full pipeline on one graph.
    Analyze {
        /// Edge list "n;a-b,c-d,..." with 1-based labels.
        #[arg(long, required_unless_present = "graph6", conflicts_with = "graph6")]
        edges: Option<String>,
        #[arg(long)]
        graph6: Option<String>,
        #[arg(long)]
        json: bool,
        /// Allow components with 8 vertices.
        #[arg(long)]
        best_effort: bool,
    },
    /// Write one JSONL record per connected class with 2..=max_n vertices.
    Census {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        out: PathBuf,
        /// Worker threads (BEI_JOBS takes precedence).
        #[arg(long)]
        jobs: Option<usize>,
        /// Allow max_n = 8.
        #[arg(long)]
        best_effort: bool,
    },
    /// Scan every relevant class for counterexamples to a theorem.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Symbolic cross-check over all connected labeled graphs.
    Oracle {
        #[arg(long, value_parser = parse_check)]
        check: Check,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        jobs: Option<usize>,
        /// Write `{graph6, labeling, check, ok}` JSONL fixtures here.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

fn parse_check(s: &str) -> Result<Check, String> {
    s.parse().map_err(|e: HarnessError| e.to_string())
}

fn run(cli: Cli) -> HarnessResult<i32> {
    match cli.cmd {
        Cmd::Analyze { edges, graph6: g6, json, best_effort } => {
            let g = match (edges, g6) {
                (Some(e), _) => graph6::parse_edge_list(&e)?,
                (None, Some(s)) => graph6::decode(s.trim().as_bytes())?,
                (None, None) => unreachable!("clap requires one input"),
            };
            let a = analyze(&g, InvariantOptions { best_effort, parallel: true })?;
            if json {
                println!("{}", serde_json::to_string_pretty(&a).expect("analysis serializes"));
            } else {
                print!("{}", a.to_text());
            }
            Ok(EXIT_OK)
        }
        Cmd::Census { max_n, out, jobs, best_effort } => {
            let workers = resolve_workers(jobs)?;
            let start = Instant::now();
            let s = run_census(CensusOptions { max_n, workers, best_effort }, &out)?;
            let mut t = Table::new(["n", "records"]);
            for (n, k) in &s.per_n {
                t.row([n.to_string(), k.to_string()]);
            }
            print!("{}", t.render());
            println!(
                "{} records ({} computed, {} reused) with {} workers in {:.2}s -> {} (index {})",
                s.records,
                s.computed,
                s.reused,
                workers,
                start.elapsed().as_secs_f64(),
                out.display(),
                index_path(&out).display()
            );
            Ok(EXIT_OK)
        }
        Cmd::Verify { theorem, max_n, jobs, json } => {
            let report = run_verification(&theorem, max_n, resolve_workers(jobs)?)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print!("{}", report.to_text());
            }
            Ok(if report.passed() { EXIT_OK } else { EXIT_VIOLATION })
        }
        Cmd::Oracle { check, max_n, jobs, fixtures, json } => {
            let workers = resolve_workers(jobs)?;
            let start = Instant::now();
            let records = pool(workers).install(|| run_campaign(check, max_n))?;
            if let Some(path) = &fixtures {
                std::fs::write(path, fixture_jsonl(&records)).map_err(HarnessError::io(path))?;
            }
            let failed: Vec<_> = records.iter().filter(|r| !r.ok).collect();
            if json {
                let summary = serde_json::json!({
                    "check": check,
                    "tier": max_n,
                    "instances": records.len(),
                    "failures": failed,
                    "wall_time_s": start.elapsed().as_secs_f64(),
                });
                println!("{}", serde_json::to_string_pretty(&summary).expect("summary serializes"));
            } else {
                println!("check       {check}");
                println!("tier        n <= {max_n}");
                println!("instances   {}", records.len());
                println!("failures    {}", failed.len());
                println!("wall time   {:.3}s", start.elapsed().as_secs_f64());
                if !failed.is_empty() {
                    let mut t = Table::new(["graph6", "labeling", "at"]);
                    for r in &failed {
                        t.row([r.graph6.clone(), r.labeling.clone(), r.at.clone().unwrap_or_default()]);
                    }
                    print!("\n{}", t.render());
                }
            }
            Ok(if failed.is_empty() { EXIT_OK } else { EXIT_VIOLATION })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("bei: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

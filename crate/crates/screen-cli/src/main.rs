//! `supercohom`: exact cohomology and weight-screening runs from the
//! command line. Batch-oriented: every subcommand writes JSON records (and
//! a flat TSV summary for the verification suites) and communicates through
//! exit codes: 0 ok, 1 mismatch, 2 budget-skip, 3 usage error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};
use screen_cli::*;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "supercohom", version, about = "exact Lie-superalgebra cohomology runs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Prints structural data of an algebra as JSON.
    Algebra {
        /// Algebra descriptor, e.g. sl:3:2 or gl:2:1.
        desc: String,
        /// The action to perform (only `info`).
        action: String,
    },
    /// Computes one cohomology group and writes a JSON report.
    Cohomology {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        module: String,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value = "invariant")]
        method: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        no_modular_prepass: bool,
    },
    /// Runs the weight-screening pipeline and writes a JSON report.
    Screen {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 12)]
        window: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Runs a verification suite and prints a TSV summary.
    VerifyPaper {
        #[arg(long, default_value = "core")]
        suite: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        budget_minutes: Option<u64>,
        #[arg(long)]
        no_modular_prepass: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct AlgebraInfo {
    descriptor: String,
    dim: usize,
    m: usize,
    n: usize,
    basis: Vec<String>,
    parity: Vec<u8>,
    z_degree: Vec<i64>,
    sigma: Vec<i64>,
    cartan_indices: Vec<usize>,
    positive_root_indices: Vec<usize>,
    negative_root_indices: Vec<usize>,
    supertrace: Vec<String>,
    grading_element: Option<Vec<(usize, String)>>,
}

fn write_json<T: Serialize>(out: Option<&PathBuf>, value: &T) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| e.to_string()),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run() -> Result<i32, String> {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            eprint!("{e}");
            return Ok(3);
        }
    };
    match cli.command {
        Command::Algebra { desc, action } => {
            if action != "info" {
                eprintln!("unknown action {action:?} (expected `info`)");
                return Ok(3);
            }
            let alg = match parse_algebra(&desc) {
                Ok(a) => a,
                Err(e) => {
                    eprintln!("{e}");
                    return Ok(3);
                }
            };
            let info = AlgebraInfo {
                descriptor: alg.descriptor().into(),
                dim: alg.dim(),
                m: alg.m(),
                n: alg.n(),
                basis: (0..alg.dim()).map(|i| alg.basis_label(i).to_string()).collect(),
                parity: (0..alg.dim()).map(|i| alg.parity(i).bit()).collect(),
                z_degree: (0..alg.dim()).map(|i| alg.z_degree(i)).collect(),
                sigma: alg.sigma().to_vec(),
                cartan_indices: alg.cartan_indices().to_vec(),
                positive_root_indices: alg.positive_root_indices(superalg_core::AlgebraPart::Full),
                negative_root_indices: alg.negative_root_indices(superalg_core::AlgebraPart::Full),
                supertrace: alg.supertrace_vector().iter().map(|x| x.to_string()).collect(),
                grading_element: alg
                    .d_vector()
                    .map(|d| d.iter().map(|(i, c)| (*i, c.to_string())).collect()),
            };
            write_json(None, &info)?;
            Ok(0)
        }
        Command::Cohomology { algebra, module, degree, method, out, no_modular_prepass } => {
            let alg = match parse_algebra(&algebra) {
                Ok(a) => a,
                Err(e) => {
                    eprintln!("{e}");
                    return Ok(3);
                }
            };
            let method: ce_cohomology::Method = match method.parse() {
                Ok(m) => m,
                Err(e) => {
                    eprintln!("{e}");
                    return Ok(3);
                }
            };
            let module = match cache::load_or_build(&alg, &module) {
                Ok(m) => m,
                Err(e) => {
                    eprintln!("{e}");
                    return Ok(3);
                }
            };
            let complex = ce_cohomology::CochainComplex::new(module);
            let opts = ce_cohomology::CohomologyOptions {
                method,
                modular_prepass: !no_modular_prepass,
                ..Default::default()
            };
            match ce_cohomology::cohomology(&complex, degree, &opts) {
                Ok(report) => {
                    println!(
                        "H^{}\t{}\t{}\tdim {}\t{} ms",
                        report.degree, report.algebra, report.module, report.h_dim,
                        report.elapsed_ms
                    );
                    write_json(out.as_ref(), &report)?;
                    Ok(0)
                }
                Err(ce_cohomology::CohomologyError::Budget(what)) => {
                    eprintln!("budget exceeded: {what}");
                    Ok(2)
                }
                Err(e) => {
                    eprintln!("{e}");
                    Ok(1)
                }
            }
        }
        Command::Screen { algebra, window, out } => {
            let alg = match parse_algebra(&algebra) {
                Ok(a) => a,
                Err(e) => {
                    eprintln!("{e}");
                    return Ok(3);
                }
            };
            match run_screen(&alg, window) {
                Ok(report) => {
                    println!(
                        "screen\t{}\twindow {}\tkac-level {}\trefined {}\torbits {}",
                        report.algebra,
                        report.window,
                        report.kac_level.len(),
                        report.refined.len(),
                        report.tau_orbit_count
                    );
                    write_json(out.as_ref(), &report)?;
                    Ok(0)
                }
                Err(ScreenError::WindowTooSmall(n)) => {
                    eprintln!("window too small (need at least {n})");
                    Ok(3)
                }
                Err(e) => {
                    eprintln!("{e}");
                    Ok(1)
                }
            }
        }
        Command::VerifyPaper { suite, jobs, budget_minutes, no_modular_prepass, out } => {
            let suite: Suite = match suite.parse() {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("{e}");
                    return Ok(3);
                }
            };
            let opts = VerifyOptions {
                jobs,
                budget: budget_minutes.map(|m| Duration::from_secs(m * 60)),
                modular_prepass: !no_modular_prepass,
            };
            let bundle = run_suite(suite, &opts);
            print!("{}", bundle.tsv());
            write_json(out.as_ref(), &bundle)?;
            Ok(bundle.exit_code())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(3)
        }
    }
}

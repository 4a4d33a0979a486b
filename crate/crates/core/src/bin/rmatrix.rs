use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use rmatrix::suite::{dump, exit_code, render, run_suite, DumpTarget, OutputFormat, Suite, SuiteConfig};
use rmatrix::Limits;

/// Exact verification of the arithmetic universal R-matrix on direct sums of
/// matrix algebras.
///
/// Exit status: 0 when every check passes, 1 when some identity fails,
/// 2 on usage errors or exceeded resource caps.
#[derive(Debug, Parser)]
#[command(name = "rmatrix", version)]
struct Args {
    /// Upper bound for the first index (default 12 for pair-indexed suites,
    /// 6 for triple-indexed suites, 5 for braid)
    #[arg(long, value_name = "N")]
    max_n: Option<usize>,

    /// Upper bound for the second index
    #[arg(long, value_name = "M")]
    max_m: Option<usize>,

    /// Upper bound for the third index
    #[arg(long, value_name = "L")]
    max_l: Option<usize>,

    /// Suite to run; repeat for several. One of wcs, bialgebra, intertwiner,
    /// hexagons, triangular, ybe, counit, braid, or all
    #[arg(long = "suite", value_name = "NAME")]
    suites: Vec<String>,

    /// Emit one JSON object per report per line
    #[arg(long)]
    json: bool,

    /// Worker threads (default: available parallelism)
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,

    /// Print a structural object instead of running suites: chi:N,M,
    /// rmatrix:N,M, delta:N,I,J, P:N,M,L or Q:N,M,L
    #[arg(long, value_name = "TARGET")]
    dump: Option<String>,

    /// Include elapsed time per report
    #[arg(long)]
    timings: bool,

    /// Replace R by the identity family (exercises failure reporting)
    #[arg(long, hide = true)]
    inject_identity_r: bool,
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("rmatrix: {msg}");
    ExitCode::from(2)
}

fn parse_suites(names: &[String]) -> rmatrix::Result<Vec<Suite>> {
    let mut out = Vec::new();
    for name in names {
        if name == "all" {
            out.extend(Suite::ALL);
        } else {
            out.push(name.parse()?);
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let limits = match Limits::from_env() {
        Ok(l) => l,
        Err(e) => return usage_error(e),
    };

    if let Some(target) = &args.dump {
        let text = match target.parse::<DumpTarget>().and_then(|t| dump(t, &limits)) {
            Ok(t) => t,
            Err(e) => return usage_error(e),
        };
        println!("{text}");
        return ExitCode::SUCCESS;
    }

    let suites = match parse_suites(&args.suites) {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    let config = SuiteConfig {
        max_n: args.max_n,
        max_m: args.max_m,
        max_l: args.max_l,
        suites,
        output: if args.json { OutputFormat::Json } else { OutputFormat::Text },
        parallelism: args.jobs,
        timings: args.timings,
        inject_identity_r: args.inject_identity_r,
    };
    let reports = match run_suite(&config, &limits) {
        Ok(r) => r,
        Err(e) => return usage_error(e),
    };
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(render(&reports, &config).as_bytes()).is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(exit_code(&reports) as u8)
}

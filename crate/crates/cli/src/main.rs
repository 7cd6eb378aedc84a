//! `tropdiff`: membership checks, solution search, tropicalization and the
//! randomized verification suites from the command line.
//!
//! Exit codes: 0 yes/success, 1 no, 2 unknown, 3 usage error, 4 engine error.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{Failure, Report, EXIT_ENGINE, EXIT_USAGE};
use config::{Output, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "tropdiff", version, about = "Tropical differential algebra engine")]
struct Cli {
    /// Tropical pair: B (boolean series over T) or T2 (rank-2).
    #[arg(long, global = true)]
    pair: Option<String>,
    /// Prime for the p-adic norm.
    #[arg(long, global = true)]
    prime: Option<u64>,
    /// Truncation degree for series given without an O(t^k) term.
    #[arg(long, global = true)]
    deg: Option<u32>,
    /// json or text.
    #[arg(long, global = true)]
    output: Option<String>,
    /// sequential or parallel.
    #[arg(long, global = true)]
    strategy: Option<String>,
    /// File of key = value lines (pair, prime, deg, output, strategy).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Decide whether a point solves a system of equations.
    Check {
        #[arg(long = "eq", required = true)]
        eqs: Vec<String>,
        /// One series per variable, in order.
        #[arg(long = "sol", required = true)]
        sols: Vec<String>,
    },
    /// List the boolean supports in {0..max-deg} solving an equation.
    Enumerate {
        #[arg(long)]
        eq: String,
        #[arg(long, default_value_t = 5)]
        max_deg: u32,
    },
    /// Solve for the leading coefficient of x = base + c t^slot + ….
    SolveCoeff {
        #[arg(long)]
        eq: String,
        #[arg(long)]
        slot: u32,
        /// Fixed lower-order part (default 1).
        #[arg(long)]
        base: Option<String>,
    },
    /// Run the coefficient solver for slots 1..=max-slot in turn.
    Scan {
        #[arg(long)]
        eq: Option<String>,
        #[arg(long, default_value_t = 5)]
        max_slot: u32,
        /// Replay the worked rank-2 example.
        #[arg(long)]
        paper_demo: bool,
    },
    /// Tropicalize a classical equation, optionally with classical points.
    Tropicalize {
        #[arg(long)]
        eq: String,
        #[arg(long = "sol")]
        sols: Vec<String>,
    },
    /// Solve a linear ODE as a power series and check its tropicalization.
    ClassicalSolve {
        #[arg(long)]
        eq: String,
        /// Comma-separated initial coefficients x_0, …, x_{m-1}.
        #[arg(long, default_value = "")]
        init: String,
    },
    /// Run the seeded verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 500)]
        cases: usize,
        #[arg(long, default_value_t = 0x7d1f_2024)]
        seed: u64,
    },
}

fn config(cli: &Cli) -> Result<RunConfig, String> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &cli.config {
        cfg.load(path)?;
    }
    let flags = [
        ("pair", cli.pair.clone()),
        ("prime", cli.prime.map(|p| p.to_string())),
        ("deg", cli.deg.map(|d| d.to_string())),
        ("output", cli.output.clone()),
        ("strategy", cli.strategy.clone()),
    ];
    for (k, v) in flags {
        if let Some(v) = v {
            cfg.set(k, &v)?;
        }
    }
    cfg.validate()?;
    Ok(cfg)
}

fn run(cli: &Cli, cfg: &RunConfig) -> Result<Report, Failure> {
    match &cli.verb {
        Verb::Check { eqs, sols } => commands::check(cfg, eqs, sols),
        Verb::Enumerate { eq, max_deg } => commands::enumerate(cfg, eq, *max_deg),
        Verb::SolveCoeff { eq, slot, base } => commands::solve_coeff(cfg, eq, *slot, base.as_deref()),
        Verb::Scan { eq, max_slot, paper_demo } => commands::scan(cfg, eq.as_deref(), *max_slot, *paper_demo),
        Verb::Tropicalize { eq, sols } => commands::tropicalize(cfg, eq, sols),
        Verb::ClassicalSolve { eq, init } => commands::classical_solve(cfg, eq, init),
        Verb::Verify { suite, cases, seed } => commands::verify(cfg, suite, *cases, *seed),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let cfg = match config(&cli) {
        Ok(cfg) => cfg,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(&cli, &cfg) {
        Ok(report) => {
            match cfg.output {
                Output::Json => println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable")),
                Output::Text => print!("{}", report.text),
            }
            ExitCode::from(report.exit)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Engine(msg)) => {
            eprintln!("engine error: {msg}");
            ExitCode::from(EXIT_ENGINE)
        }
    }
}

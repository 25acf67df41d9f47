use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use simgreedy::verify::write_csv;
use simgreedy_cli::commands::{bruteforce, hardness, verify};
use simgreedy_cli::{run_experiment, write_report, ExperimentConfig};

#[derive(Parser)]
#[command(
    name = "simgreedy",
    version,
    about = "Greedy submodular maximization experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the experiment described by a JSON config and write the CSV report.
    Run {
        config: PathBuf,
        /// Overrides the config's output path; `-` for stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check algorithm values against their guarantees on random instances.
    Verify {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Suite to run; repeatable. All suites when omitted.
        #[arg(long)]
        suite: Vec<String>,
        /// Per-instance CSV; stdout when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Largest independent sets of the hardness systems M(k,h,m) and M'.
    Hardness {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        h: usize,
        #[arg(long)]
        m: usize,
    },
    /// Exact optimum of a small config by enumeration.
    Bruteforce { config: PathBuf },
}

fn sink(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) if p.as_os_str() != "-" => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        _ => Box::new(io::stdout().lock()),
    })
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Run { config, output } => {
            let cfg = ExperimentConfig::load(&config)?;
            let rows = run_experiment(&cfg)?;
            write_report(&rows, sink(output.as_ref().or(cfg.output.as_ref()))?)?;
        }
        Command::Verify {
            trials,
            seed,
            suite,
            output,
        } => {
            let results = verify(&suite, trials, seed)?;
            let mut failed = 0;
            for (name, rows) in &results {
                let bad = rows.iter().filter(|r| !r.pass).count();
                eprintln!("{name}: {}/{} pass", rows.len() - bad, rows.len());
                failed += bad;
            }
            let all: Vec<_> = results.into_iter().flat_map(|(_, rows)| rows).collect();
            write_csv(&all, sink(output.as_ref())?)?;
            if failed > 0 {
                eprintln!("{failed} row(s) below their bound");
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Hardness { k, h, m } => {
            let s = hardness(k, h, m)?;
            println!(
                "M({k},{h},{m}): n={} max independent size {} (formula {})",
                s.n, s.m_size, s.formula
            );
            println!("M'({m}): max independent size {}", s.m_prime_size);
        }
        Command::Bruteforce { config } => {
            let cfg = ExperimentConfig::load(&config)?;
            bruteforce(&cfg, io::stdout().lock())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

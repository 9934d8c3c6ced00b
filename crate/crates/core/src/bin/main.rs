use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use phenylene_wiener::hyper::pair_csv;
use phenylene_wiener::report::{compute_report, ComputeOptions, DEFAULT_ORACLE_EDGE_BOUND};
use phenylene_wiener::squeeze::{generate_linear_spec, parse_squeeze_spec};
use phenylene_wiener::verify::{bench_linear, verify, BenchConfig, BenchRow, VerifyConfig};
use phenylene_wiener::Error;

const EXIT_INPUT: u8 = 2;
const EXIT_OVERFLOW: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(version, about = "Edge-Wiener indices of phenylenes by the cut method")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a squeeze spec for a standard family.
    Generate {
        #[arg(value_enum)]
        family: Family,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Compute indices for a squeeze spec (stdin when no path is given).
    Compute {
        path: Option<PathBuf>,
        #[arg(long = "input", conflicts_with = "path")]
        input: Option<PathBuf>,
        /// Also run the brute-force oracles (only up to the edge bound).
        #[arg(long)]
        with_oracle: bool,
        #[arg(long, default_value_t = DEFAULT_ORACLE_EDGE_BOUND)]
        oracle_edge_bound: usize,
        /// Write per-pair counts as CSV.
        #[arg(long)]
        dump_pairs: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check the cut method against the oracles.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        random: usize,
        #[arg(long)]
        json: bool,
    },
    /// Time the methods on linear chains; prints CSV.
    Bench {
        #[arg(required = true, value_parser = clap::value_parser!(u64).range(1..))]
        n: Vec<u64>,
        #[arg(long, default_value_t = 200)]
        oracle_edge_bound: usize,
        #[arg(long, default_value_t = 20_000)]
        hyper_edge_bound: usize,
        #[arg(long, default_value_t = 3)]
        repetitions: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Linear,
}

fn fail(err: &Error) -> ExitCode {
    eprintln!("error: {err}");
    match err {
        Error::Overflow(_) => ExitCode::from(EXIT_OVERFLOW),
        _ => ExitCode::from(EXIT_INPUT),
    }
}

fn read_input(path: Option<PathBuf>) -> Result<String, String> {
    match path {
        Some(p) => fs::read_to_string(&p).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| format!("stdin: {e}"))?;
            Ok(text)
        }
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Generate {
            family: Family::Linear,
            n,
        } => {
            print!("{}", generate_linear_spec(n as usize));
            ExitCode::SUCCESS
        }
        Command::Compute {
            path,
            input,
            with_oracle,
            oracle_edge_bound,
            dump_pairs,
            json,
        } => {
            let text = match read_input(path.or(input)) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_INPUT);
                }
            };
            let spec = match parse_squeeze_spec(&text) {
                Ok(s) => s,
                Err(e) => return fail(&e.into()),
            };
            let options = ComputeOptions {
                with_oracle,
                oracle_edge_bound,
                collect_pairs: dump_pairs.is_some(),
            };
            let (report, counts) = match compute_report(&spec, &options) {
                Ok(r) => r,
                Err(e) => return fail(&e),
            };
            if let (Some(path), Some(counts)) = (dump_pairs, counts) {
                let csv = format!("i,j,m00,m01,m10,m11,f\n{}", pair_csv(&counts));
                if let Err(e) = fs::write(&path, csv) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(EXIT_INPUT);
                }
            }
            if json {
                println!("{}", report.to_json());
            } else {
                let i = &report.indices;
                println!(
                    "hexagons {}  vertices {}  edges {}",
                    report.input.hexagons, report.input.vertices, report.input.edges
                );
                println!("We^  {}", i.w_e_hat);
                println!("We   {}", i.w_e);
                println!("WWe* {}", i.wwe_star);
                println!("WWe  {}", i.ww_e);
                if let Some(o) = &report.oracle {
                    println!("oracle agrees: {}", o.agrees);
                }
                if let Some(f) = &report.formula {
                    println!("closed form agrees: {}", f.agrees);
                }
            }
            if report.oracle.is_some_and(|o| !o.agrees) {
                return ExitCode::from(EXIT_VERIFY);
            }
            ExitCode::SUCCESS
        }
        Command::Verify {
            max_n,
            seed,
            random,
            json,
        } => {
            let summary = verify(&VerifyConfig {
                max_n,
                seed,
                random_count: random,
            });
            if json {
                let value = serde_json::json!({
                    "summary": summary,
                    "passed": summary.passed(),
                });
                println!("{}", serde_json::to_string_pretty(&value).expect("json"));
            } else {
                println!(
                    "checked {} linear and {} random phenylenes",
                    summary.linear_checked, summary.random_checked
                );
            }
            match summary.failure {
                None => ExitCode::SUCCESS,
                Some(m) => {
                    eprintln!("mismatch: {}", m.reason);
                    eprintln!("counterexample:\n{}", m.spec);
                    ExitCode::from(EXIT_VERIFY)
                }
            }
        }
        Command::Bench {
            n,
            oracle_edge_bound,
            hyper_edge_bound,
            repetitions,
        } => {
            let config = BenchConfig {
                oracle_edge_bound,
                hyper_edge_bound,
                repetitions,
            };
            println!("{}", BenchRow::CSV_HEADER);
            for n in n {
                match bench_linear(n as usize, &config) {
                    Ok(row) => println!("{}", row.csv_line()),
                    Err(e) => return fail(&e),
                }
            }
            ExitCode::SUCCESS
        }
    }
}

//! Thin command-line front end; all logic lives in the library. The
//! examples/ directory shows the same capabilities as library calls.

use std::io::{BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cyclefactor::table::{
    bench, build_table, count_by_method, count_general, with_thread_count, write_csv, write_jsonl,
    CountRecord, Method,
};
use cyclefactor::verify::verify;
use cyclefactor::{Error, Partition, Result};

#[derive(Parser)]
#[command(
    name = "cyclefactor",
    version,
    about = "Counts ordered factorizations of a full cycle by the cycle types of the factors"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count factorizations for one pair of cycle types
    Count {
        /// Symmetric-group degree; must equal the weight of the partitions
        #[arg(long)]
        n: u32,
        /// Cycle type of the left factor, comma-separated (e.g. 3,1,1)
        #[arg(long)]
        lambda: String,
        /// Cycle type of the right factor
        #[arg(long)]
        mu: String,
        /// Target cycle type; defaults to the full n-cycle. Any other
        /// target requires --method frobenius or brute.
        #[arg(long)]
        nu: Option<String>,
        /// positive | hook | frobenius | brute
        #[arg(long, default_value = "positive")]
        method: String,
        /// plain | json
        #[arg(long, default_value = "plain")]
        format: String,
        /// Enumeration budget for the brute method (overrides the
        /// CYCLEFACTOR_BRUTE_BUDGET environment variable)
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Emit the full table of counts for all pairs of cycle types
    Table {
        /// Symmetric-group degree
        #[arg(long)]
        n: u32,
        /// positive | hook | frobenius | brute
        #[arg(long, default_value = "positive")]
        method: String,
        /// csv | jsonl
        #[arg(long, default_value = "csv")]
        format: String,
        /// Worker thread count; default uses all cores. Output is
        /// byte-identical regardless.
        #[arg(long)]
        parallel: Option<usize>,
        /// Enumeration budget for the brute method
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Cross-check all methods against each other on full tables
    Verify {
        /// Check every n from 1 up to this bound
        #[arg(long = "n-max", default_value_t = 7)]
        n_max: u32,
        /// Comma-separated subset of positive,hook,frobenius,brute
        #[arg(long, default_value = "positive,hook,brute")]
        methods: String,
        /// Enumeration budget for the brute method
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Time full-table builds and checksum the result
    Bench {
        /// Symmetric-group degree
        #[arg(long)]
        n: u32,
        /// positive | hook | frobenius | brute
        #[arg(long, default_value = "positive")]
        method: String,
        /// Worker thread count; default uses all cores
        #[arg(long)]
        parallel: Option<usize>,
        /// Number of timed builds
        #[arg(long, default_value_t = 3)]
        repeat: u32,
        /// Enumeration budget for the brute method
        #[arg(long)]
        budget: Option<u64>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Count { n, lambda, mu, nu, method, format, budget } => {
            let method: Method = method.parse()?;
            let lambda = parse_partition_for("lambda", &lambda, n)?;
            let mu = parse_partition_for("mu", &mu, n)?;
            let nu = nu.map(|s| parse_partition_for("nu", &s, n)).transpose()?;
            let count = match &nu {
                Some(target) if target.parts() != [n] => {
                    count_general(method, target, &lambda, &mu, budget)?
                }
                _ => count_by_method(method, &lambda, &mu, budget)?,
            };
            match format.as_str() {
                "plain" => println!("{count}"),
                "json" => {
                    let record = CountRecord::new(&lambda, &mu, nu.as_ref(), &count, method);
                    let line = serde_json::to_string(&record)
                        .map_err(|e| Error::Internal(format!("serialization failed: {e}")))?;
                    println!("{line}");
                }
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "unknown format \"{other}\" (expected plain or json)"
                    )))
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Table { n, method, format, parallel, budget } => {
            let method: Method = method.parse()?;
            let csv = match format.as_str() {
                "csv" => true,
                "jsonl" => false,
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "unknown format \"{other}\" (expected csv or jsonl)"
                    )))
                }
            };
            let counts = with_thread_count(parallel, || build_table(n, method, budget))?;
            let stdout = std::io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            if csv {
                write_csv(&mut out, n, &counts)?;
            } else {
                write_jsonl(&mut out, n, &counts, method)?;
            }
            out.flush()?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { n_max, methods, budget } => {
            let methods = parse_methods(&methods)?;
            let report = verify(n_max, &methods, budget)?;
            print!("{}", report.render());
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::Bench { n, method, parallel, repeat, budget } => {
            let method: Method = method.parse()?;
            let report = with_thread_count(parallel, || bench(n, method, repeat, budget))?;
            println!("{report}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_partition_for(name: &str, text: &str, n: u32) -> Result<Partition> {
    let partition: Partition = text.parse()?;
    if partition.n() != n {
        return Err(Error::WeightMismatch(format!(
            "--{name} {text} has weight {}, but --n is {n}",
            partition.n()
        )));
    }
    Ok(partition)
}

fn parse_methods(text: &str) -> Result<Vec<Method>> {
    let methods: Vec<Method> = text
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect::<Result<_>>()?;
    if methods.is_empty() {
        return Err(Error::InvalidArgument("--methods must name at least one method".into()));
    }
    Ok(methods)
}

//! `toricount`: validate problem files, count components, run oracles.

mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use toricount::eqls::validate;
use toricount::khovanskii::{defect_table, k_torus};
use toricount::oracle::{run_bernstein_suite, run_defect_suite, run_mixed_volume_suite};
use toricount::problem::{KhovanskiiFile, Problem, ProblemFile};
use toricount::{count_components, Error, FanOptions};

const THREADS_VAR: &str = "TORICOUNT_THREADS";

#[derive(Parser)]
#[command(
    name = "toricount",
    version,
    about = "Component counts for equivariant linear systems on toric varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Mixedvol,
    Bernstein,
    Defect,
}

#[derive(Subcommand)]
enum Command {
    /// Check the fan axioms, Cartier data and every system datum.
    Validate {
        path: PathBuf,
        #[arg(long)]
        skip_fan_validation: bool,
    },
    /// Count irreducible components of the intersection of general members.
    Count {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Per-cone breakdown.
        #[arg(long)]
        explain: bool,
        #[arg(long)]
        skip_fan_validation: bool,
    },
    /// Torus-only count for a list of supports.
    Khovanskii {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Print the defect of every subset.
        #[arg(long)]
        explain: bool,
    },
    /// Run a seeded oracle suite.
    Oracle {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

enum Failure {
    /// Domain error, optionally tagged with the offending system.
    Domain(Error, Option<usize>),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e, None)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load_problem(path: &Path, skip_fan_validation: bool) -> Result<Problem, Failure> {
    let file = ProblemFile::from_json(&read(path)?)
        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    let options = FanOptions {
        validate: !skip_fan_validation,
    };
    let problem = file.to_problem(options)?;
    for (i, d) in problem.data.iter().enumerate() {
        validate(d, &problem.fan).map_err(|e| Failure::Domain(e, Some(i)))?;
    }
    Ok(problem)
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().ok().filter(|&n| n >= 1).ok_or_else(|| {
        Failure::Io(format!(
            "{THREADS_VAR} must be an integer >= 1, got {raw:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Io(e.to_string()))
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    configure_threads()?;
    match cli.command {
        Command::Validate {
            path,
            skip_fan_validation,
        } => {
            let p = load_problem(&path, skip_fan_validation)?;
            println!(
                "ok: rank {}, {} rays, {} cones, {} systems",
                p.fan.rank(),
                p.fan.rays().len(),
                p.fan.cones().len(),
                p.data.len()
            );
        }
        Command::Count {
            path,
            format,
            explain,
            skip_fan_validation,
        } => {
            let p = load_problem(&path, skip_fan_validation)?;
            let report = count_components(&p.fan, &p.data)?;
            match format {
                Format::Json => println!("{}", render::count_json(&p.fan, &report, explain)),
                Format::Table => print!("{}", render::count_table(&p.fan, &report, explain)),
            }
        }
        Command::Khovanskii {
            path,
            format,
            explain,
        } => {
            let file = KhovanskiiFile::from_json(&read(&path)?)
                .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            let sets = file.to_point_sets()?;
            let k = k_torus(&sets)?;
            let table = if explain {
                Some(defect_table(&sets)?)
            } else {
                None
            };
            match format {
                Format::Json => println!("{}", render::khovanskii_json(&k, table.as_deref())),
                Format::Table => print!("{}", render::khovanskii_table(&k, table.as_deref())),
            }
        }
        Command::Oracle {
            suite,
            seed,
            cases,
            format,
        } => {
            let summary = match suite {
                Suite::Mixedvol => run_mixed_volume_suite(seed, cases),
                Suite::Bernstein => run_bernstein_suite(seed, cases),
                Suite::Defect => run_defect_suite(seed, cases),
            };
            match format {
                Format::Json => println!("{}", render::suite_json(&summary)),
                Format::Table => print!("{}", render::suite_table(&summary)),
            }
            if !summary.all_passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Domain(e, system)) => {
            match system {
                Some(i) => eprintln!("error: {} in system {i}: {e}", e.kind()),
                None => eprintln!("error: {}: {e}", e.kind()),
            }
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

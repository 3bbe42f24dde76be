mod cache;
mod suites;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fplrs::fpl::{asm_count_formula, refined_counts, vertex_type_self_test};
use fplrs::groundstate::stationary_vector;
use fplrs::gyration::{orbit_report_csv, SquareGyration};
use fplrs::lattice::Sign;

use cache::{write_atomic, Cache};
use suites::Suite;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Core(#[from] fplrs::Error),
    #[error("{0}")]
    Usage(String),
    #[error("n = {n} exceeds the default cap {cap}; pass --allow-large to run it")]
    Limit { n: usize, cap: usize },
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Limit { .. } => 3,
            _ => 1,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "fplrs", version, about = "Fully-packed loops, link patterns and the loop-model ground state")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "FPLRS_THREADS")]
    threads: Option<usize>,
    /// Result cache directory; caching is off when unset.
    #[arg(long, global = true, env = "FPLRS_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Refined FPL counts of the n x n square, by link pattern.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        sign: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        allow_large: bool,
    },
    /// Exact stationary vector of the loop-model Hamiltonian.
    Groundstate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        allow_large: bool,
    },
    /// Runs a verification suite for n = 1..=n-max.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        allow_large: bool,
    },
    /// Gyration orbits of the square with their plaquette sums, as CSV.
    OrbitReport {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        allow_large: bool,
    },
}

const ENUMERATE_CAP: usize = 7;
const GROUNDSTATE_CAP: usize = 7;
const ORBIT_CAP: usize = 6;

fn check_cap(n: usize, cap: usize, allow_large: bool) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    if n > cap && !allow_large {
        return Err(CliError::Limit { n, cap });
    }
    Ok(())
}

fn emit(out: &Option<PathBuf>, data: &[u8]) -> Result<(), CliError> {
    match out {
        Some(p) => write_atomic(p, data),
        None => {
            std::io::stdout().write_all(data)?;
            Ok(())
        }
    }
}

fn cached(
    cache: &Option<Cache>,
    command: &str,
    params: &str,
    compute: impl FnOnce() -> Result<Vec<u8>, CliError>,
) -> Result<(Vec<u8>, bool), CliError> {
    match cache {
        Some(c) => c.get_or_compute(&Cache::key(command, params), compute),
        None => Ok((compute()?, false)),
    }
}

fn hit_note(hit: bool) -> &'static str {
    if hit {
        " (cached)"
    } else {
        ""
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(k) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    vertex_type_self_test()?;
    let cache = cli.cache_dir.as_ref().map(Cache::new).transpose()?;
    match cli.command {
        Command::Enumerate { n, sign, out, allow_large } => {
            check_cap(n, ENUMERATE_CAP, allow_large)?;
            let sign: Sign = sign.parse().map_err(|e: fplrs::Error| CliError::Usage(e.to_string()))?;
            let (data, hit) = cached(&cache, "enumerate", &format!("n={n} sign={sign}"), || {
                Ok((refined_counts(n, sign, None).to_json() + "\n").into_bytes())
            })?;
            let table = fplrs::fpl::PsiTable::from_json(std::str::from_utf8(&data).map_err(|e| CliError::Failed(e.to_string()))?)?;
            emit(&out, &data)?;
            let total = table.total();
            let want = asm_count_formula(n);
            eprintln!(
                "n = {n}, sign {sign}: {} link patterns, total {total}, A_n = {want}{}",
                table.counts.len(),
                hit_note(hit)
            );
            if total != want {
                return Err(CliError::Failed(format!("total {total} differs from A_{n} = {want}")));
            }
        }
        Command::Groundstate { n, out, allow_large } => {
            check_cap(n, GROUNDSTATE_CAP, allow_large)?;
            let (data, hit) = cached(&cache, "groundstate", &format!("n={n}"), || {
                Ok((stationary_vector(n)?.to_json() + "\n").into_bytes())
            })?;
            let v = fplrs::LpVector::from_json(std::str::from_utf8(&data).map_err(|e| CliError::Failed(e.to_string()))?)?;
            emit(&out, &data)?;
            let sum = v.sum_entries();
            let max = v.iter().max_by(|a, b| a.1.cmp(b.1)).map(|(p, c)| format!("{c} at {p}")).unwrap_or_default();
            let want = asm_count_formula(n);
            eprintln!("n = {n}: sum {sum}, A_n = {want}, largest component {max}{}", hit_note(hit));
            if sum.to_string() != want.to_string() {
                return Err(CliError::Failed(format!("sum {sum} differs from A_{n} = {want}")));
            }
        }
        Command::Verify { suite, n_max, format, out, allow_large } => {
            check_cap(n_max, suite.cap(), allow_large)?;
            let checks = suites::run(suite, n_max);
            let report = match format {
                Format::Text => suites::to_text(&checks),
                Format::Csv => suites::to_csv(&checks),
                Format::Json => serde_json::to_string_pretty(&checks)? + "\n",
            };
            emit(&out, report.as_bytes())?;
            let failed = checks.iter().filter(|c| c.status != "pass").count();
            eprintln!("{}: {} checks, {failed} failed", suite.name(), checks.len());
            if failed > 0 {
                return Err(CliError::Failed(format!("{failed} checks failed")));
            }
        }
        Command::OrbitReport { n, format, out, allow_large } => {
            check_cap(n, ORBIT_CAP, allow_large)?;
            if format != Format::Csv {
                return Err(CliError::Usage("orbit-report writes CSV only".into()));
            }
            let (data, hit) = cached(&cache, "orbit-report", &format!("n={n}"), || {
                let ctx = SquareGyration::new(n)?;
                Ok(orbit_report_csv(&ctx)?.into_bytes())
            })?;
            emit(&out, &data)?;
            let rows = data.iter().filter(|&&b| b == b'\n').count().saturating_sub(1);
            eprintln!("n = {n}: {rows} rows{}", hit_note(hit));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

//! Command-line surface for the covering-hypergraph toolkit.
//!
//! Results go to standard output as JSON (or `.hg` text for `gen`);
//! diagnostics go to standard error. Exit codes: 0 on success, 1 when an
//! internal invariant is violated (a bug, not an input problem), 2 for
//! input and precondition errors.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use bergecov_core::berge::{BergeCycle, BergePath};
use bergecov_core::error::Error;
use bergecov_core::generate::random_covering3;
use bergecov_core::hypergraph::Hypergraph;
use bergecov_core::lagrangian::{self, BoundMode};
use bergecov_core::oracle::{self, SearchMode};
use bergecov_core::rainbow;
use bergecov_core::{cyclefinder, io as hio, pathfinder, verify_cycle, verify_path};

#[derive(Parser)]
#[command(
    name = "bergecov",
    about = "Berge paths, cycles, and Lagrangian bounds in covering hypergraphs",
    version
)]
struct Cli {
    /// Worker threads for parallel subcommands (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a hypergraph file and print basic facts
    Validate {
        file: PathBuf,
        /// Allowed edge sizes, e.g. --sizes 2,3 (default: sizes present)
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
    },
    /// Print the 2-shadow (all covered pairs)
    Shadow { file: PathBuf },
    /// Report whether the hypergraph is covering and its minimum codegree
    Covering { file: PathBuf },
    /// Find a Hamiltonian Berge path (covering [3]-graph, n >= 4)
    FindPath { file: PathBuf },
    /// Find a Berge cycle of one length (-s) or of all lengths (--all)
    FindCycle {
        file: PathBuf,
        #[arg(short = 's', long)]
        length: Option<usize>,
        /// Emit certificates for every length 3..=n as a JSON array
        #[arg(long, conflicts_with = "length")]
        all: bool,
        /// On an internal invariant violation, fall back to the exhaustive
        /// oracle instead of failing (research aid; the violation is still
        /// reported on standard error)
        #[arg(long)]
        fallback_oracle: bool,
    },
    /// Find a Berge triangle (covering [3]-graph, n >= 4)
    FindTriangle { file: PathBuf },
    /// Check a certificate produced by the finders against a hypergraph
    Verify {
        file: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
        #[arg(long, value_enum, default_value_t = CertKind::Auto)]
        kind: CertKind,
    },
    /// Exhaustive existence checks (ground truth at small scale)
    Oracle {
        #[command(subcommand)]
        what: OracleCommand,
    },
    /// Census of covering {2,3}-graphs on 3..=nmax vertices with m >= 3
    /// edges: which miss a Berge cycle of some length 3..=min(m,n)?
    Remark5 {
        #[arg(long, default_value_t = 5)]
        nmax: u32,
    },
    /// Probe covering k-graphs (k >= 4) for missing short Berge cycles
    Conjecture {
        #[arg(short = 'k', long)]
        uniformity: usize,
        #[arg(short = 'n', long)]
        vertices: u32,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Maximize the edge-monomial polynomial over the simplex
    Lagrangian {
        file: PathBuf,
        #[arg(long, default_value_t = lagrangian::DEFAULT_RESTARTS)]
        restarts: usize,
        /// Require the exact Motzkin-Straus route (2-graphs only)
        #[arg(long)]
        exact_2graph: bool,
        /// Also reduce the witness to a minimal support
        #[arg(long)]
        minimal_support: bool,
    },
    /// Check the Lagrangian bound for a Berge-cycle/path-free hypergraph
    VerifyBound {
        file: PathBuf,
        #[arg(short = 't', long)]
        forbidden: usize,
        #[arg(long, value_enum)]
        mode: BoundKind,
        #[arg(long, default_value_t = lagrangian::DEFAULT_RESTARTS)]
        restarts: usize,
    },
    /// Export the covering hypergraph as a bounded edge coloring of K_n
    RainbowExport { file: PathBuf },
    /// Generate a seeded random covering [3]-graph in .hg format
    Gen {
        #[arg(short = 'n', long)]
        vertices: u32,
        #[arg(long)]
        seed: u64,
        /// Extra random edges beyond the covering construction
        #[arg(long, default_value_t = 0)]
        extra: usize,
        /// Allow 2-uniform edges among the extras
        #[arg(long)]
        pairs: bool,
        /// Emit the JSON mirror instead of .hg text
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Does any Berge cycle of length -s exist?
    Cycle {
        file: PathBuf,
        #[arg(short = 's', long)]
        length: usize,
    },
    /// Does any Berge path on -t base vertices exist?
    Path {
        file: PathBuf,
        #[arg(short = 't', long)]
        length: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CertKind {
    Auto,
    Path,
    Cycle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundKind {
    Cycle,
    Path,
}

enum CliError {
    Core(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type CliResult = Result<(), CliError>;

fn read_to_string(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn load(path: &Path, sizes: Option<&BTreeSet<usize>>) -> Result<Hypergraph, CliError> {
    Ok(hio::load_auto(&read_to_string(path)?, sizes)?)
}

fn emit(value: serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(&value).expect("json"));
}

fn cycle_json(c: &BergeCycle) -> serde_json::Value {
    json!({"base": c.base, "edges": c.edges})
}

fn path_json(p: &BergePath) -> serde_json::Value {
    json!({"base": p.base, "edges": p.edges})
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .ok();
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Core(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::InternalInvariantViolation(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Validate { file, sizes } => {
            let sizes = sizes.map(|s| s.into_iter().collect::<BTreeSet<usize>>());
            let h = load(&file, sizes.as_ref())?;
            emit(json!({
                "n": h.n(),
                "m": h.num_edges(),
                "sizes": h.sizes().iter().copied().collect::<Vec<_>>(),
                "covering": h.is_covering(),
            }));
            Ok(())
        }
        Command::Shadow { file } => {
            let h = load(&file, None)?;
            let shadow = h.shadow();
            emit(json!({
                "n": shadow.n,
                "pairs": shadow.pairs.iter().map(|&(u, v)| vec![u, v]).collect::<Vec<_>>(),
            }));
            Ok(())
        }
        Command::Covering { file } => {
            let h = load(&file, None)?;
            emit(json!({
                "covering": h.is_covering(),
                "min_codegree": h.min_codegree(),
                "first_uncovered_pair": h.first_uncovered_pair().map(|(u, v)| vec![u, v]),
            }));
            Ok(())
        }
        Command::FindPath { file } => {
            let h = load(&file, None)?;
            let p = pathfinder::find_hamiltonian_path(&h)?;
            emit(path_json(&p));
            Ok(())
        }
        Command::FindCycle {
            file,
            length,
            all,
            fallback_oracle,
        } => {
            let h = load(&file, None)?;
            let find = |s: usize| -> Result<BergeCycle, Error> {
                match cyclefinder::find_cycle_of_length(&h, s) {
                    Err(Error::InternalInvariantViolation(msg)) if fallback_oracle => {
                        eprintln!(
                            "warning: invariant violation at length {s}, using the oracle: {msg}"
                        );
                        oracle::exists_cycle(&h, s)?.ok_or_else(|| {
                            Error::InternalInvariantViolation(format!(
                                "oracle found no cycle of length {s} either"
                            ))
                        })
                    }
                    other => other,
                }
            };
            if all {
                let mut certs = Vec::new();
                for s in 3..=h.n() as usize {
                    certs.push(cycle_json(&find(s)?));
                }
                emit(serde_json::Value::Array(certs));
            } else {
                let s = length.ok_or_else(|| {
                    CliError::Core(Error::InvalidParameters(
                        "pass --length <s> or --all".into(),
                    ))
                })?;
                emit(cycle_json(&find(s)?));
            }
            Ok(())
        }
        Command::FindTriangle { file } => {
            let h = load(&file, None)?;
            let c = cyclefinder::find_triangle(&h)?;
            emit(cycle_json(&c));
            Ok(())
        }
        Command::Verify {
            file,
            certificate,
            kind,
        } => {
            let h = load(&file, None)?;
            let text = read_to_string(&certificate)?;
            let raw: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| CliError::Core(Error::Parse(e.to_string())))?;
            let base: Vec<u32> = serde_json::from_value(raw["base"].clone())
                .map_err(|e| CliError::Core(Error::Parse(format!("base: {e}"))))?;
            let edges: Vec<usize> = serde_json::from_value(raw["edges"].clone())
                .map_err(|e| CliError::Core(Error::Parse(format!("edges: {e}"))))?;
            let is_cycle = match kind {
                CertKind::Cycle => true,
                CertKind::Path => false,
                CertKind::Auto => edges.len() == base.len(),
            };
            let valid = if is_cycle {
                verify_cycle(&h, &BergeCycle { base, edges })?
            } else {
                verify_path(&h, &BergePath { base, edges })?
            };
            emit(json!({"valid": valid, "kind": if is_cycle { "cycle" } else { "path" }}));
            if valid {
                Ok(())
            } else {
                Err(CliError::Core(Error::InvalidCertificate(
                    "certificate does not verify".into(),
                )))
            }
        }
        Command::Oracle { what } => {
            match what {
                OracleCommand::Cycle { file, length } => {
                    let h = load(&file, None)?;
                    let found = oracle::exists_cycle(&h, length)?;
                    emit(json!({
                        "exists": found.is_some(),
                        "certificate": found.map(|c| cycle_json(&c)),
                    }));
                }
                OracleCommand::Path { file, length } => {
                    let h = load(&file, None)?;
                    let found = oracle::exists_path(&h, length)?;
                    emit(json!({
                        "exists": found.is_some(),
                        "certificate": found.map(|p| path_json(&p)),
                    }));
                }
            }
            Ok(())
        }
        Command::Remark5 { nmax } => {
            let report = oracle::remark5_range(3, nmax, true)?;
            emit(serde_json::to_value(&report).expect("json"));
            Ok(())
        }
        Command::Conjecture {
            uniformity,
            vertices,
            mode,
            budget,
            seed,
        } => {
            let mode = match mode {
                Mode::Exhaustive => SearchMode::Exhaustive,
                Mode::Random => SearchMode::Random { budget, seed },
            };
            let report = oracle::conjecture_search(uniformity, vertices, mode)?;
            emit(serde_json::to_value(&report).expect("json"));
            Ok(())
        }
        Command::Lagrangian {
            file,
            restarts,
            exact_2graph,
            minimal_support,
        } => {
            let h = load(&file, None)?;
            let mut result = if exact_2graph {
                lagrangian::motzkin_straus(&h)?
            } else {
                lagrangian::maximize(&h, restarts, lagrangian::DEFAULT_TOL)?
            };
            if minimal_support {
                result = lagrangian::minimal_support(&h, &result, 1e-7)?;
            }
            emit(serde_json::to_value(&result).expect("json"));
            Ok(())
        }
        Command::VerifyBound {
            file,
            forbidden,
            mode,
            restarts,
        } => {
            let h = load(&file, None)?;
            let mode = match mode {
                BoundKind::Cycle => BoundMode::Cycle,
                BoundKind::Path => BoundMode::Path,
            };
            let report =
                lagrangian::verify_bound(&h, forbidden, mode, restarts, lagrangian::DEFAULT_TOL)?;
            emit(serde_json::to_value(&report).expect("json"));
            Ok(())
        }
        Command::RainbowExport { file } => {
            let h = load(&file, None)?;
            let coloring = rainbow::to_coloring(&h)?;
            emit(json!({
                "n": coloring.n,
                "boundedness": rainbow::boundedness(&coloring),
                "pairs": coloring.colors.iter().map(|p| json!({
                    "u": p.u, "v": p.v, "color": p.color,
                })).collect::<Vec<_>>(),
            }));
            Ok(())
        }
        Command::Gen {
            vertices,
            seed,
            extra,
            pairs,
            json,
        } => {
            use rand_chacha::rand_core::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let h = random_covering3(vertices, &mut rng, extra, pairs)?;
            if json {
                println!("{}", hio::to_json_string(&h));
            } else {
                print!("{}", hio::to_hg_string(&h));
            }
            Ok(())
        }
    }
}

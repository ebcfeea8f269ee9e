//! `hyperspec`: spectral invariants of k-uniform hypergraphs from the
//! command line.
//!
//! Reads HGF hypergraph files (header `k n m`, one 1-based edge per
//! line) and TNS tensor files (header `k n`, one nonzero entry per
//! line). Every command emits a CommandReport, as key/value lines or as
//! JSON with `--json`. Exit codes: 0 ok, 2 precondition/parse/budget,
//! 3 numerical non-convergence.

mod commands;
mod matspec;
mod report;

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

use report::{CliError, CommandReport};

#[derive(Parser)]
#[command(name = "hyperspec", version, about = "spectral invariants of k-uniform hypergraphs")]
pub struct Cli {
    /// Emit the report as JSON
    #[arg(long, global = true)]
    pub json: bool,
    /// Convergence tolerance for iterative solvers
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol: f64,
    /// Iteration cap for power iteration and root finding
    #[arg(long, global = true, default_value_t = 100_000)]
    pub max_iter: usize,
    /// Seed for the randomized self-checks
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TensorArg {
    Adj,
    Lap,
    Slap,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Shape summary: k, n, m, degrees, connectivity, core vertices
    Info { file: PathBuf },
    /// Exact generalized trace of one hypergraph tensor
    Trace {
        file: PathBuf,
        #[arg(long, value_enum)]
        tensor: TensorArg,
        /// Trace order
        #[arg(long)]
        d: usize,
        /// Also evaluate the closed form and report EQUAL/DIFFER
        #[arg(long)]
        formula: bool,
    },
    /// Characteristic-polynomial coefficients from traces, or the full
    /// dimension-2 polynomial
    Charpoly {
        /// HGF hypergraph or .tns tensor file
        file: PathBuf,
        /// Compute codegree coefficients p_1..p_T
        #[arg(long)]
        t: Option<usize>,
        /// Exact resultant polynomial (dimension-2 rational tensors)
        #[arg(long)]
        n2: bool,
        /// Cross-check the regular closed form when the input is regular
        #[arg(long)]
        regular: bool,
    },
    /// Spectral radius by shifted power iteration
    Rho {
        file: PathBuf,
        #[arg(long, value_enum)]
        tensor: TensorArg,
    },
    /// Odd bipartition search (exact, over GF(2))
    Oddbip {
        file: PathBuf,
        /// Also build and verify the signless-Laplacian null vector
        #[arg(long)]
        witness: bool,
    },
    /// Half-sum labeling search (exact, over Z_k)
    Labeling {
        file: PathBuf,
        /// Also build the phase null vector and the -rho eigenpair
        #[arg(long)]
        witness: bool,
    },
    /// Power hypergraph of a 2-uniform graph, as HGF
    Power {
        file: PathBuf,
        /// Target edge cardinality
        #[arg(long)]
        k: usize,
        /// Write the HGF here instead of the report payload
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lift the full base-graph spectrum to a power hypergraph
    Lift {
        file: PathBuf,
        /// Target edge cardinality
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        tensor: TensorArg,
    },
    /// Probe the parity-condition implications, on one file or on an
    /// exhaustive isomorph-free corpus
    Conjecture {
        file: Option<PathBuf>,
        /// Corpus edge cardinality (corpus mode, <= 6)
        #[arg(long)]
        k: Option<usize>,
        /// Corpus vertex bound (corpus mode, <= 9)
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Run the internal invariant battery (plus file checks if given)
    Check { file: Option<PathBuf> },
}

fn run(cli: &Cli) -> Result<CommandReport, CliError> {
    match &cli.cmd {
        Cmd::Info { file } => commands::cmd_info(file),
        Cmd::Trace {
            file,
            tensor,
            d,
            formula,
        } => commands::cmd_trace(file, *tensor, *d, *formula),
        Cmd::Charpoly {
            file,
            t,
            n2,
            regular,
        } => commands::cmd_charpoly(file, *t, *n2, *regular, cli.max_iter, cli.tol),
        Cmd::Rho { file, tensor } => commands::cmd_rho(file, *tensor, cli.tol, cli.max_iter),
        Cmd::Oddbip { file, witness } => commands::cmd_oddbip(file, *witness),
        Cmd::Labeling { file, witness } => {
            commands::cmd_labeling(file, *witness, cli.max_iter)
        }
        Cmd::Power { file, k, out } => commands::cmd_power(file, *k, out.as_deref()),
        Cmd::Lift { file, k, tensor } => {
            commands::cmd_lift(file, *k, *tensor, cli.max_iter)
        }
        Cmd::Conjecture { file, k, nmax } => {
            commands::cmd_conjecture(file.as_deref(), *k, *nmax, cli.max_iter)
        }
        Cmd::Check { file } => commands::cmd_check(file.as_deref(), cli.seed),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(rep) => {
            print!("{}", rep.render(cli.json));
            std::process::exit(rep.exit_code);
        }
        Err(e) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({ "error": e.message, "exit_code": e.code })
                );
            } else {
                eprintln!("error: {}", e.message);
            }
            std::process::exit(e.code);
        }
    }
}

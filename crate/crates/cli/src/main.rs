//! `pgmm`: command-line front end for aliasing enumeration, cover
//! optimization, exponent bounds and the wreath constructions.
//!
//! Exit codes: 0 success or affirmative verdict, 1 negative verdict,
//! 2 input error, 3 work budget or node limit exhausted.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pgmm::indexing::{DEFAULT_PAIR_BUDGET, DEFAULT_TPP_BUDGET};

#[derive(Parser, Debug)]
#[command(
    name = "pgmm",
    version,
    about = "Group-theoretic partial matrix multiplication"
)]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

/// Work budgets, output format and reproducibility knobs shared by all commands.
#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Maximum (left entry, right entry) pairs examined by aliasing enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_PAIR_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_pairs: u64,
    /// Maximum group multiplications in the sextuple triple-product check.
    #[arg(long, global = true, default_value_t = DEFAULT_TPP_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_tpp: u64,
    /// Branch-and-bound node limit (unlimited when omitted).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub node_limit: Option<u64>,
    /// Seed for random matrices.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for branch and bound; more than one gives up the
    /// deterministic choice among equally good covers.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: u64,
    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide the triple product property for a subsets file.
    TppCheck { subsets: PathBuf },
    /// List the aliasing triples of a subsets file (1-based).
    Aliasing {
        subsets: PathBuf,
        /// Emit the cover instance (left/right pairs) instead of the triples.
        #[arg(long)]
        instance: bool,
    },
    /// Maximize f over covers of an instance or aliasing-set file.
    Cover {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = CoverMethod::Exact)]
        method: CoverMethod,
        /// Shorthand for --method exact.
        #[arg(long, conflicts_with_all = ["method", "heuristic"])]
        exact: bool,
        /// Shorthand for --method heuristic.
        #[arg(long, conflicts_with = "method")]
        heuristic: bool,
    },
    /// Solve the exponent bound for a degree spectrum and f.
    OmegaBound(OmegaArgs),
    /// Print the wreath-construction table for n = 2, 3, 17.
    Reproduce,
    /// Run the group-algebra multiplication on random matrices.
    MultiplyDemo {
        subsets: PathBuf,
        /// Zero the entries of this cover file's I and J before multiplying.
        #[arg(long)]
        cover: Option<PathBuf>,
    },
    /// Reduce an INDEPENDENT-SET graph to a cover instance.
    ReduceIndependentSet { graph: PathBuf },
    /// Check a PARTIAL-TENSOR-ONES certificate (one of L, R, B per pair).
    VerifyCertificate {
        instance: PathBuf,
        #[arg(long)]
        certificate: String,
        #[arg(long)]
        k: u64,
    },
    /// Build the wreath-product constructions.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
}

#[derive(Subcommand, Debug)]
enum ConstructKind {
    /// Sets S_i = {(a,b)z^j : a in H_i \ e, b in H_(i+1)} in (C_n)^3 wr S2.
    Wreath {
        #[arg(long)]
        n: u32,
        /// Append the identity to each set.
        #[arg(long)]
        relaxed: bool,
        /// Report f values and exponent bounds instead of the sets.
        #[arg(long)]
        bounds: bool,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CoverMethod {
    Exact,
    Heuristic,
    BruteForce,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Cyclic,
    Dihedral,
    WreathS2,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstructionKind {
    Original,
    Relaxed,
}

#[derive(Args, Debug)]
pub struct OmegaArgs {
    /// Spectrum file {"order": N, "degrees": [[d, c], ...], "classes": k?}.
    #[arg(long, conflicts_with = "family")]
    pub spectrum: Option<PathBuf>,
    /// Closed-form family: C_n, D_2n, or (C_n)^3 wr S2. Without --spectrum or
    /// --family the wreath family is used.
    #[arg(long, value_enum, requires = "n")]
    pub family: Option<Family>,
    #[arg(long)]
    pub n: Option<u32>,
    /// Value of f.
    #[arg(
        long,
        conflicts_with = "construction",
        required_unless_present = "construction"
    )]
    pub f: Option<u64>,
    /// Use the closed-form f of the wreath construction with this --n.
    #[arg(long, value_enum, requires = "n")]
    pub construction: Option<ConstructionKind>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.config, cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

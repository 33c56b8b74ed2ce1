use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "skewcell", version, about = "Exact computations with graded skew cellular algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct Instance {
    /// Generator spec: toy:M, matrix:N:d1,..,dN:w1,..,wN or a fixture id.
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    pub gen: Option<String>,
    /// An algebra file in the skewcell/1 format.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// rational | cyclotomic:p | fp:c | fpc:p,c. Required with --gen.
    #[arg(long)]
    pub field: Option<String>,
}

#[derive(Args, Debug)]
pub struct Output {
    /// Directory for file artifacts.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct Hecke {
    #[arg(long)]
    pub e: i64,
    #[arg(long)]
    pub p: i64,
    #[arg(long)]
    pub n: usize,
    /// The d-charge, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub rho: Vec<i64>,
    /// Require the strict gap condition on ρ.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the algebra, the datum, the shift and the form properties.
    Verify {
        #[command(flatten)]
        inst: Instance,
        #[command(flatten)]
        out: Output,
    },
    /// Graded decomposition matrix.
    Decomp {
        #[command(flatten)]
        inst: Instance,
        #[command(flatten)]
        out: Output,
    },
    /// The fixed-point subalgebra with its shifted datum.
    Fixedpoint {
        #[command(flatten)]
        inst: Instance,
        #[command(flatten)]
        out: Output,
    },
    /// Clifford-theory checks between A and its fixed-point subalgebra.
    Clifford {
        #[command(flatten)]
        inst: Instance,
        #[command(flatten)]
        out: Output,
    },
    /// D_Q, D_F and the adjustment matrix A_F with D_F = D_Q A_F.
    Adjust {
        #[command(flatten)]
        inst: Instance,
        #[command(flatten)]
        out: Output,
        /// The characteristic of the reduction.
        #[arg(long = "char")]
        char_c: u64,
    },
    /// Uglov ℓ-partitions of size n.
    Uglov {
        #[command(flatten)]
        hecke: Hecke,
        #[command(flatten)]
        out: Output,
    },
    /// The dominance order on ℓ-partitions of size n.
    Dominance {
        #[command(flatten)]
        hecke: Hecke,
        #[command(flatten)]
        out: Output,
    },
    /// Standard tableaux of a shape with degrees and residues.
    Tableaux {
        #[command(flatten)]
        hecke: Hecke,
        /// The shape, for example "(1|1)".
        #[arg(long)]
        shape: String,
        #[command(flatten)]
        out: Output,
    },
    /// The combinatorial skeleton of the shifted datum.
    Skeleton {
        #[command(flatten)]
        hecke: Hecke,
        #[command(flatten)]
        out: Output,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(msg) = commands::init_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    ExitCode::from(commands::run(cli.command))
}

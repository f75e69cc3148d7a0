//! `ssi`: Hilbert polynomials, Borel sets and saturated strongly stable ideals
//! from the command line.

mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{CliError, Context};

#[derive(Debug, Parser)]
#[command(name = "ssi", version, about = "Strongly stable ideals with a given Hilbert polynomial")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Display names of the variables, smallest first (e.g. w,z,y,x).
    #[arg(long, global = true, value_delimiter = ',')]
    names: Option<Vec<String>>,

    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SegmentType {
    Hilb,
    Reg,
    Gen,
}

#[derive(Debug, Args)]
pub struct PolyArg {
    /// Polynomial in t, e.g. "4*t", "t+6", "t^2/2+3t/2+1".
    #[arg(allow_hyphen_values = true)]
    pub poly: String,
}

#[derive(Debug, Args)]
pub struct IdealArgs {
    /// Comma-separated monomial generators, e.g. "x2^2, x2*x1, x1^4".
    #[arg(long, allow_hyphen_values = true)]
    pub ideal: String,

    /// Number of variables of the ring.
    #[arg(long)]
    pub vars: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test whether a polynomial is a Hilbert polynomial.
    IsHp(PolyArg),
    /// Gotzmann decomposition and Gotzmann number.
    Gotzmann(PolyArg),
    /// Macaulay decomposition.
    Macaulay(PolyArg),
    /// Growth vector of a polynomial in a given degree.
    GrowthVector {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        degree: u32,
    },
    /// Saturated lexicographic ideal.
    LexIdeal {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long)]
        vars: usize,
    },
    /// All saturated strongly stable ideals with the given Hilbert polynomial.
    Enumerate {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        max_regularity: Option<u32>,
    },
    /// Hilbert polynomial of a strongly stable ideal.
    HilbertPoly(IdealArgs),
    /// Largest degree of a minimal generator.
    Regularity(IdealArgs),
    /// Test whether the generators span a strongly stable ideal.
    IsBorel(IdealArgs),
    /// hilb-, reg- or gen-segment test with a weight-vector certificate.
    Segment {
        #[arg(long = "type", value_enum)]
        kind: SegmentType,
        #[command(flatten)]
        ideal: IdealArgs,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let ctx = Context { format: cli.format, names: cli.names };
    let result = match cli.threads {
        None => commands::run(&ctx, &cli.command),
        Some(0) => Err(CliError::Invalid("--threads must be positive".into())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| commands::run(&ctx, &cli.command)),
            Err(e) => Err(CliError::Internal(e.to_string())),
        },
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(2)
        }
    }
}

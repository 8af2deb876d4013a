use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod output;

use scatseq::Error;

#[derive(Parser, Debug)]
#[command(
    name = "scatseq",
    version,
    about = "Exhaustive checks for a family of scattered subspaces of V(4, q^n)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Run every property check on one parameter set.
    Verify,
    /// Scan all pairs (c, γ) with α = c, β = 1 for fixed I, J.
    Search,
    /// Count root-free triples (α, β, γ).
    Count,
    /// Closed-form dual and the equivalent family parameters.
    Dual,
    /// Equivalence verdict between two parameter sets.
    Equiv,
    /// Distance, generalized rank weights and minimality of the family code.
    Weights,
    /// Cross-check the independent routes against each other.
    Oracle,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Criterion {
    Exhaustive,
    Companion,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// Size of the base field F_q (a prime power).
    #[arg(long, global = true, default_value_t = 2)]
    pub q: u64,
    /// Degree of F_q over its prime field; inferred from q when omitted.
    #[arg(long, global = true)]
    pub h: Option<u32>,
    #[arg(long, global = true, default_value_t = 4)]
    pub n: u32,
    /// Modulus of F_{q^n} over F_p as a base-p integer in hex (e.g. 13 for X^4+X+1).
    #[arg(long, global = true)]
    pub modulus: Option<String>,
    #[arg(long = "I", global = true, default_value_t = 1)]
    pub i: u32,
    #[arg(long = "J", global = true, default_value_t = 2)]
    pub j: u32,
    /// Field elements are written gK (power of the generator) or in hex.
    #[arg(long, global = true, default_value = "1")]
    pub alpha: String,
    #[arg(long, global = true, default_value = "1")]
    pub beta: String,
    #[arg(long, global = true, default_value = "1")]
    pub gamma: String,
    /// Second parameter set for `equiv`; each defaults to the first.
    #[arg(long = "I2", global = true)]
    pub i2: Option<u32>,
    #[arg(long = "J2", global = true)]
    pub j2: Option<u32>,
    #[arg(long, global = true)]
    pub alpha2: Option<String>,
    #[arg(long, global = true)]
    pub beta2: Option<String>,
    #[arg(long, global = true)]
    pub gamma2: Option<String>,
    /// Also check scatteredness over F_{q^{nℓ}}.
    #[arg(long, global = true)]
    pub ell: Option<u32>,
    /// Pair indices START..END (γ-major order) scanned by `search`.
    #[arg(long, global = true)]
    pub pairs: Option<String>,
    /// Largest exhaustive enumeration allowed.
    #[arg(long, global = true, default_value_t = scatseq::Budget::DEFAULT.0)]
    pub budget: u128,
    /// Worker threads; 0 picks the number of cores.
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Root test used by `search`.
    #[arg(long, global = true, value_enum, default_value_t = Criterion::Exhaustive)]
    pub criterion: Criterion,
    /// Add wall-clock timings to the output (makes it nondeterministic).
    #[arg(long, global = true)]
    pub timings: bool,
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::TooLargeToExhaust { .. }) => 2,
        Some(Error::InternalInconsistency(_)) => 4,
        _ => 1,
    }
}

fn run(cli: &Cli) -> anyhow::Result<bool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.opts.threads)
        .build_global()?;
    let outcome = commands::run(cli.command, &cli.opts)?;
    let text = output::render(&outcome, cli.opts.format)?;
    match &cli.opts.out {
        Some(path) => File::create(path)?.write_all(text.as_bytes())?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(outcome.contradiction)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => {
            eprintln!("scatseq: a property check was contradicted; see the report");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("scatseq: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

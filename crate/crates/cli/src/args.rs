use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use schreyer_core::MonomialOrder;

/// Seed used when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Parser)]
#[command(name = "schreyer", version, about = "Groebner bases, free resolutions and random space curves")]
pub struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Also write the JSON output to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Groebner basis of the ideal in a polynomial file.
    Gb {
        file: PathBuf,
        #[command(flatten)]
        ring: RingArgs,
        /// Only run the criterion on the generators as given.
        #[arg(long)]
        check_only: bool,
    },
    /// Divide every polynomial of a file by the polynomials of another.
    Divide {
        file: PathBuf,
        #[arg(long)]
        by: PathBuf,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Free resolution of the quotient by the ideal in a polynomial file.
    Resolve {
        file: PathBuf,
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        minimal: bool,
        /// Print the graded Betti table.
        #[arg(long)]
        betti: bool,
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// Hilbert series of the quotient by the ideal in a polynomial file.
    Hilbert {
        file: PathBuf,
        #[command(flatten)]
        ring: RingArgs,
        /// Hilbert function values on a range such as `0..6`.
        #[arg(long, value_parser = parse_range)]
        function: Option<RangeInclusive<i32>>,
        /// Print the Hilbert polynomial.
        #[arg(long)]
        polynomial: bool,
    },
    /// Construct a random space curve of given degree and genus.
    Curve {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        g: i64,
        #[arg(long, default_value_t = schreyer_curves::DEFAULT_PRIME)]
        p: u32,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        attempts: usize,
    },
    /// Count cubic generators of random apolar ideals.
    Gorenstein {
        #[arg(long)]
        g: usize,
        #[arg(long, default_value_t = schreyer_curves::DEFAULT_PRIME)]
        p: u32,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Replay the bundled examples and compare with the expected output.
    Examples {
        #[arg(long, default_value = "all")]
        id: String,
    },
}

#[derive(Debug, Args)]
pub struct RingArgs {
    /// `lex`, `deglex` or `degrevlex`.
    #[arg(long, default_value = "degrevlex")]
    pub order: MonomialOrder,
    /// `q` or `fp:<p>`.
    #[arg(long, default_value = "q")]
    pub field: FieldChoice,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldChoice {
    Rationals,
    Prime(u32),
}

impl FromStr for FieldChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "q" | "qq" => Ok(Self::Rationals),
            other => other
                .strip_prefix("fp:")
                .and_then(|p| p.parse::<u32>().ok())
                .map(Self::Prime)
                .ok_or_else(|| format!("unknown field {s:?}, expected q or fp:<p>")),
        }
    }
}

pub fn parse_range(s: &str) -> Result<RangeInclusive<i32>, String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected n..m, got {s:?}"))?;
    let a: i32 = a.trim().parse().map_err(|e| format!("{e}"))?;
    let b: i32 = b.trim().trim_start_matches('=').parse().map_err(|e| format!("{e}"))?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok(a..=b)
}

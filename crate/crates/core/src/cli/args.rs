use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::affine::Sector;

/// Inclusive integer interval written `A..B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub fn new(lo: i64, hi: i64) -> Self {
        Self { lo, hi }
    }

    pub fn iter(self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }

    pub fn contains(self, x: i64) -> bool {
        self.iter().contains(&x)
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s.split_once("..").ok_or_else(|| format!("expected A..B, got {s:?}"))?;
        let lo = a.trim().parse::<i64>().map_err(|e| format!("{a:?}: {e}"))?;
        let hi = b.trim().parse::<i64>().map_err(|e| format!("{b:?}: {e}"))?;
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(Self { lo, hi })
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

fn parse_sector(s: &str) -> Result<Sector, String> {
    s.parse::<u8>()
        .ok()
        .and_then(Sector::from_index)
        .ok_or_else(|| format!("sector must be 0 or 1, got {s:?}"))
}

fn parse_nonneg(s: &str) -> Result<i64, String> {
    match s.parse::<i64>() {
        Ok(n) if n >= 0 => Ok(n),
        Ok(n) => Err(format!("expected a nonnegative bound, got {n}")),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(name = "fockspace", version, about = "Exact checks on the fermionic Fock space and the level-one affine sl2 modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the bracket relations on every elementary vector of the window.
    VerifyRelations(RelationsArgs),
    /// Rank, triangularity, spanning and kernel checks for the monomial bases.
    VerifyBasis(BasisArgs),
    /// Print a truncated character.
    Characters(CharactersArgs),
    /// Expand a monomial in the modes `e_i` applied to an extremal vector.
    Apply(ApplyArgs),
    /// Check the Gaussian binomial form of the gap-two partition generating function.
    QbinomIdentity(QbinomArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
pub enum Family {
    #[value(name = "e")]
    #[serde(rename = "e")]
    Raise,
    #[value(name = "f")]
    #[serde(rename = "f")]
    Lower,
    #[value(name = "h")]
    #[serde(rename = "h")]
    Cartan,
    #[value(name = "lambda")]
    #[serde(rename = "lambda")]
    Lambda,
    #[value(name = "K")]
    #[serde(rename = "K")]
    Central,
    /// Matrix units `E(i,j)`, bracketed only among themselves.
    #[value(name = "E")]
    #[serde(rename = "E")]
    Unit,
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct RelationsArgs {
    /// Mode indices of the generators.
    #[arg(long, default_value = "-4..4", allow_hyphen_values = true)]
    pub modes: IntRange,
    /// Charges of the test vectors.
    #[arg(long, default_value = "-2..2", allow_hyphen_values = true)]
    pub charges: IntRange,
    #[arg(long, default_value_t = 10, value_parser = parse_nonneg)]
    pub max_energy: i64,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "e,f,h,lambda,K")]
    pub symbols: Vec<Family>,
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct BasisArgs {
    #[arg(long, default_value = "0", value_parser = parse_sector)]
    pub sector: Sector,
    /// Energy bound for the semi-infinite sweep.
    #[arg(long, default_value_t = 10, value_parser = parse_nonneg)]
    pub max_energy: i64,
    /// `deg_q` bound for the Fibonacci cells.
    #[arg(long, default_value_t = 10, value_parser = parse_nonneg)]
    pub q_max: i64,
    /// Level `j` of the extremal vector for the Fibonacci cells.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub level: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Series {
    /// `L_(0,1)`.
    L01,
    /// `L_(1,1)`.
    L11,
    /// Basic subspace `W_j`, `j` given by `--level`.
    W,
    /// The whole wedge space.
    F,
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct CharactersArgs {
    #[arg(long, value_enum, default_value_t = Series::L01)]
    pub series: Series,
    #[arg(long, default_value_t = -2, allow_hyphen_values = true)]
    pub z_min: i64,
    #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
    pub z_max: i64,
    #[arg(long, default_value_t = 4, value_parser = parse_nonneg)]
    pub q_max: i64,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub level: i64,
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct ApplyArgs {
    /// Comma separated mode indices, e.g. `-5,-3,-1`; empty for the extremal
    /// vector itself.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub monomial: String,
    #[arg(long, default_value = "0", value_parser = parse_sector)]
    pub sector: Sector,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub level: i64,
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct QbinomArgs {
    #[arg(long = "N", default_value_t = 6)]
    #[serde(rename = "N")]
    pub n: u32,
    /// Truncation of the identity check; every reachable degree by default.
    #[arg(long, value_parser = parse_nonneg)]
    pub q_max: Option<i64>,
    /// Largest `m` in the stabilization table.
    #[arg(long, default_value_t = 5)]
    pub max_m: u32,
    /// `q`-degree bound of the stabilization table.
    #[arg(long, default_value_t = 10)]
    pub q_degree: usize,
}

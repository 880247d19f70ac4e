use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclotomy::dihedral::Variant;
use cyclotomy::linalg::ComputeMode;

#[derive(Parser, Debug)]
#[command(name = "cyclotomy", version, about = "Exact dihedral/modular computations over Q")]
pub struct Cli {
    /// fast: ranks modulo random primes with unanimity; exact: rational
    /// elimination (deterministic output). Default from CYCLOTOMY_MODE.
    #[arg(long, global = true, value_enum)]
    pub mode: Option<Mode>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,

    /// Bound on worker threads for job-level parallelism.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Fast,
    Exact,
}

impl Mode {
    pub fn compute(self) -> ComputeMode {
        match self {
            Mode::Fast => ComputeMode::Fast,
            Mode::Exact => ComputeMode::Exact,
        }
    }

    pub fn resolve(cli: Option<Mode>) -> Mode {
        if let Some(m) = cli {
            return m;
        }
        match std::env::var("CYCLOTOMY_MODE").ok().as_deref() {
            Some("exact") => Mode::Exact,
            _ => Mode::Fast,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::Fast => "fast",
            Mode::Exact => "exact",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    D,
    Dhat,
    Dtilde,
    Dprime,
    Dun,
}

impl VariantArg {
    pub fn variant(self) -> Variant {
        match self {
            VariantArg::D => Variant::D,
            VariantArg::Dhat => Variant::DHat,
            VariantArg::Dtilde => Variant::DTilde,
            VariantArg::Dprime => Variant::DPrime,
            VariantArg::Dun => Variant::DUnramified,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension tables of the dihedral spaces and modular complexes.
    Dims(DimsArgs),
    /// Named theorem suites; nonzero exit iff a check fails.
    Verify(VerifyArgs),
    /// Homology tables of the depth-graded cochain complexes.
    Cohomology(CohomologyArgs),
    /// Generating-series and closed-form oracle tables.
    Series(SeriesArgs),
    /// Three-way diff: brute force vs closed form vs series.
    Compare(CompareArgs),
}

#[derive(Args, Debug)]
pub struct DimsArgs {
    #[arg(long, value_enum, default_value_t = VariantArg::D)]
    pub variant: VariantArg,
    /// Depths, comma separated (e.g. 1,2,3).
    #[arg(long = "m", value_delimiter = ',', default_values_t = vec![1u32, 2])]
    pub depths: Vec<u32>,
    /// Weight range like 1..12, or a comma list.
    #[arg(long = "w", default_value = "1..12")]
    pub weights: String,
    /// Levels N, comma separated.
    #[arg(long = "N", value_delimiter = ',', default_values_t = vec![1u32])]
    pub levels: Vec<u32>,
    /// Diagonal mode: primes p (weight = depth, level p); overrides --w/--N.
    #[arg(long = "p", value_delimiter = ',')]
    pub primes: Option<Vec<u32>>,
    /// Also tabulate the modular coinvariant complex dimensions.
    #[arg(long)]
    pub modular: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// shuffle-implies-dihedral | cojacobi | d-squared-zero | acyclicity |
    /// level-iso | distribution
    #[arg(long)]
    pub suite: String,
    #[arg(long = "w-max")]
    pub w_max: Option<u32>,
    #[arg(long = "m-max")]
    pub m_max: Option<u32>,
    #[arg(long = "N", value_delimiter = ',')]
    pub levels: Option<Vec<u32>>,
    #[arg(long = "p", value_delimiter = ',')]
    pub primes: Option<Vec<u32>>,
}

#[derive(Args, Debug)]
pub struct CohomologyArgs {
    #[arg(long, value_enum, default_value_t = VariantArg::D)]
    pub variant: VariantArg,
    #[arg(long = "m", value_delimiter = ',', default_values_t = vec![2u32])]
    pub depths: Vec<u32>,
    #[arg(long = "w", default_value = "4..12")]
    pub weights: String,
    #[arg(long = "N", default_value_t = 1)]
    pub level: u32,
    /// Use the modular coinvariant complexes instead of the dihedral side.
    #[arg(long)]
    pub modular: bool,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    /// Truncation order for the expansions.
    #[arg(long, default_value_t = 40)]
    pub order: usize,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    /// Compare the diagonal level dims dim D_m(mu_p).
    #[arg(long)]
    pub diagonal: bool,
    #[arg(long = "p", value_delimiter = ',')]
    pub primes: Option<Vec<u32>>,
    #[arg(long = "m", value_delimiter = ',')]
    pub depths: Option<Vec<u32>>,
    /// Non-diagonal mode: depth over mu_1.
    #[arg(long)]
    pub depth: Option<u32>,
    #[arg(long = "w")]
    pub weights: Option<String>,
}

/// Parse "a..b" (inclusive), "a", or "a,b,c".
pub fn parse_range(s: &str) -> Result<Vec<u32>, String> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once("..") {
        let a: u32 = a.trim().parse().map_err(|_| format!("bad range start in {s:?}"))?;
        let b: u32 = b.trim().parse().map_err(|_| format!("bad range end in {s:?}"))?;
        if a > b {
            return Err(format!("empty range {s:?}"));
        }
        Ok((a..=b).collect())
    } else if s.contains(',') {
        s.split(',')
            .map(|x| x.trim().parse().map_err(|_| format!("bad entry {x:?}")))
            .collect()
    } else {
        Ok(vec![s.parse().map_err(|_| format!("bad number {s:?}"))?])
    }
}

use clap::{Args, Parser, Subcommand, ValueEnum};

use plethy_core::{Basis, Partition, Rational, SymmetricFunction};

pub const DEFAULT_MAX_MEM: u64 = 2 * 1024 * 1024 * 1024;

#[derive(Debug, Parser)]
#[command(
    name = "plethy",
    version,
    about = "Restriction coefficients of polynomial GL_n representations to S_n"
)]
pub struct Cli {
    #[command(flatten)]
    pub caps: Caps,

    #[command(subcommand)]
    pub command: Command,
}

/// Resource limits checked before any table is built.
#[derive(Debug, Clone, Args)]
pub struct Caps {
    /// Largest degree accepted
    #[arg(long, global = true, default_value_t = 12)]
    pub degree_cap: usize,

    /// Largest number of variables accepted
    #[arg(long, global = true, default_value_t = 8)]
    pub n_cap: usize,

    /// Table memory limit, e.g. 512MiB or 2GiB
    #[arg(long, global = true, env = "PLETHY_MAX_MEM", value_parser = parse_memory)]
    pub max_mem: Option<u64>,
}

impl Caps {
    pub fn memory(&self) -> u64 {
        self.max_mem.unwrap_or(DEFAULT_MAX_MEM)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Restriction coefficients r(λ, μ) for λ with at most n parts and μ ⊢ n
    Restrict(RestrictArgs),
    /// Vector partition counts p_k(x) and q_k(x)
    Vecpart(VecpartArgs),
    /// Degree-d slice of f[H] in n variables
    Plethysm(PlethysmArgs),
    /// Characters of induced polynomial representations
    ChInd(ChIndArgs),
    /// Exhaustive identity checks over bounded ranges
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteChoice {
    Littlewood,
    Corollary,
    Brute,
    All,
}

#[derive(Debug, Args)]
pub struct RestrictArgs {
    #[arg(long)]
    pub n: usize,

    /// Degree; inferred from --lambda when omitted
    #[arg(long)]
    pub d: Option<usize>,

    #[arg(long, value_enum, default_value_t = RouteChoice::Littlewood)]
    pub route: RouteChoice,

    /// Restrict to one λ, e.g. 2,1
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Option<Partition>,

    /// Restrict to one μ, e.g. 2,1
    #[arg(long, value_parser = parse_partition)]
    pub mu: Option<Partition>,

    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantChoice {
    P,
    Q,
}

#[derive(Debug, Args)]
pub struct VecpartArgs {
    /// Integer vector, e.g. 2,1 or 3,-1
    #[arg(long, allow_hyphen_values = true, value_parser = parse_vector)]
    pub x: IntVector,

    #[arg(long)]
    pub k: usize,

    #[arg(long, value_enum, default_value_t = VariantChoice::P)]
    pub variant: VariantChoice,

    /// List every counted partition
    #[arg(long)]
    pub enumerate: bool,
}

#[derive(Debug, Args)]
pub struct PlethysmArgs {
    /// Symmetric function as a sum of terms like s:2,1 or 3*h:2+e:1,1
    #[arg(long, value_parser = parse_symmetric_function)]
    pub f: SymmetricFunction,

    #[arg(long)]
    pub n: usize,

    #[arg(long)]
    pub d: usize,

    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Trivial,
    Sign,
    Permutation(Partition),
    Irreducible(Partition),
    Regular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InductionRoute {
    Formula,
    Orbit,
}

#[derive(Debug, Args)]
pub struct ChIndArgs {
    /// trivial, sign, regular, perm:2,1 or irrep:2,1
    #[arg(long, value_parser = parse_source)]
    pub source: Source,

    /// Number of variables; implied by perm: and irrep: sources
    #[arg(long)]
    pub n: Option<usize>,

    #[arg(long)]
    pub d: usize,

    #[arg(long, value_enum, default_value_t = InductionRoute::Formula)]
    pub route: InductionRoute,

    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteChoice {
    #[value(name = "ehH")]
    CompleteElementary,
    Orbit,
    Littlewood,
    Unimodality,
    Adjunction,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: SuiteChoice,

    /// Largest number of variables
    #[arg(long, default_value_t = 3)]
    pub n: usize,

    /// Largest degree
    #[arg(long, default_value_t = 4)]
    pub d: usize,

    /// Largest part count for the ehH suite
    #[arg(long, default_value_t = 4)]
    pub k: usize,

    /// Largest x1 + x2 for the unimodality suite
    #[arg(long, default_value_t = 8)]
    pub max_sum: usize,

    /// Largest n for the unimodality suite
    #[arg(long, default_value_t = 5)]
    pub max_n: usize,
}

fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| p.trim().parse::<T>().map_err(|_| format!("invalid entry `{p}`")))
        .collect()
}

pub fn parse_partition(s: &str) -> Result<Partition, String> {
    let parts = parse_list::<usize>(s)?;
    Partition::new(parts).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntVector(pub Vec<i64>);

pub fn parse_vector(s: &str) -> Result<IntVector, String> {
    let v = parse_list::<i64>(s)?;
    if v.is_empty() {
        return Err("vector needs at least one coordinate".into());
    }
    Ok(IntVector(v))
}

pub fn parse_source(s: &str) -> Result<Source, String> {
    match s {
        "trivial" => Ok(Source::Trivial),
        "sign" => Ok(Source::Sign),
        "regular" => Ok(Source::Regular),
        _ => match s.split_once(':') {
            Some(("perm", mu)) => Ok(Source::Permutation(parse_partition(mu)?)),
            Some(("irrep", mu)) => Ok(Source::Irreducible(parse_partition(mu)?)),
            _ => Err(format!("unknown source `{s}`")),
        },
    }
}

/// `[c*]b:parts` terms joined by `+`, all in one basis.
pub fn parse_symmetric_function(s: &str) -> Result<SymmetricFunction, String> {
    let mut basis = None;
    let mut terms = Vec::new();
    for term in s.split('+') {
        let term = term.trim();
        let (coefficient, rest) = match term.split_once('*') {
            Some((c, rest)) => (
                c.trim().parse::<i64>().map_err(|_| format!("invalid coefficient `{c}`"))?,
                rest,
            ),
            None => (1, term),
        };
        let (letter, parts) = rest
            .split_once(':')
            .ok_or_else(|| format!("expected basis:parts, got `{rest}`"))?;
        let b: Basis = letter.trim().parse()?;
        if basis.is_some_and(|prev| prev != b) {
            return Err("all terms must use the same basis".into());
        }
        basis = Some(b);
        terms.push((parse_partition(parts)?, Rational::from_integer(coefficient.into())));
    }
    let basis = basis.ok_or("empty symmetric function")?;
    Ok(SymmetricFunction::from_terms(basis, terms))
}

/// Plain bytes or a number with a K/M/G/T suffix (decimal) or KiB/MiB/GiB/TiB.
pub fn parse_memory(s: &str) -> Result<u64, String> {
    let s = s.trim();
    let split = s.find(|c: char| !c.is_ascii_digit()).unwrap_or(s.len());
    let (digits, unit) = s.split_at(split);
    let value: u64 = digits.parse().map_err(|_| format!("invalid memory size `{s}`"))?;
    let scale: u64 = match unit.trim().to_ascii_lowercase().as_str() {
        "" | "b" => 1,
        "k" | "kb" => 1_000,
        "m" | "mb" => 1_000_000,
        "g" | "gb" => 1_000_000_000,
        "t" | "tb" => 1_000_000_000_000,
        "kib" => 1 << 10,
        "mib" => 1 << 20,
        "gib" => 1 << 30,
        "tib" => 1 << 40,
        other => return Err(format!("unknown memory unit `{other}`")),
    };
    value
        .checked_mul(scale)
        .ok_or_else(|| format!("memory size `{s}` overflows"))
}

use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "sombor",
    version,
    about = "Sombor-type degree indices and exhaustive bound verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Read graph6 lines and print SO, SO_red, SO‡ and M₁ for each.
    Compute {
        /// graph6 input file, `-` for stdin.
        #[arg(long, default_value = "-")]
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Build a named family member, e.g. `construct h_graph 5 2`.
    Construct {
        /// path, cycle, star, complete, empty, h_graph, star_plus_isolated.
        family: String,
        params: Vec<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Exhaustively confirm that H_{n,ν} is the unique maximizer.
    VerifyExtremal {
        /// Orders to check, `A` or `A..B` (inclusive).
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        /// Cyclomatic numbers, `A` or `A..B`; defaults to 0..n-2 per order.
        #[arg(long, value_parser = parse_range)]
        nu: Option<RangeInclusive<usize>>,
        #[arg(long, value_enum, default_value_t = ExtremalIndex::So)]
        index: ExtremalIndex,
        #[command(flatten)]
        common: Common,
    },
    /// Check bounds over a generated universe or a graph6 file.
    VerifyBounds {
        #[command(flatten)]
        source: Source,
        /// Comma-separated bound ids, or `all`.
        #[arg(long, default_value = "all")]
        bounds: String,
        #[command(flatten)]
        common: Common,
    },
    /// List one representative per isomorphism class.
    Enumerate {
        #[command(flatten)]
        universe: UniverseArgs,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output file, `-` for stdout.
    #[arg(long, default_value = "-")]
    pub output: String,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Worker threads; output does not depend on this.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub workers: Option<u32>,
}

#[derive(Debug, Args)]
pub struct UniverseArgs {
    #[arg(long, value_enum, default_value_t = Universe::All)]
    pub universe: Universe,
    /// Orders, `A` or `A..B`.
    #[arg(long, value_parser = parse_range)]
    pub n: RangeInclusive<usize>,
    /// Edge counts, `A` or `A..B`; defaults to every size.
    #[arg(long, value_parser = parse_range)]
    pub m: Option<RangeInclusive<usize>>,
}

#[derive(Debug, Args)]
pub struct Source {
    #[arg(long, value_enum, default_value_t = Universe::All, conflicts_with = "input")]
    pub universe: Universe,
    #[arg(long, value_parser = parse_range, required_unless_present = "input", conflicts_with = "input")]
    pub n: Option<RangeInclusive<usize>>,
    #[arg(long, value_parser = parse_range, conflicts_with = "input")]
    pub m: Option<RangeInclusive<usize>>,
    /// graph6 file instead of a generated universe, `-` for stdin.
    #[arg(long)]
    pub input: Option<String>,
}

impl Source {
    pub fn universe(&self) -> Option<UniverseArgs> {
        self.n.clone().map(|n| UniverseArgs {
            universe: self.universe,
            n,
            m: self.m.clone(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Universe {
    Connected,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExtremalIndex {
    So,
    Sored,
}

impl Common {
    pub fn output_path(&self) -> Option<PathBuf> {
        (self.output != "-").then(|| PathBuf::from(&self.output))
    }
}

/// `A`, `A..B` or `A..=B`, both ends inclusive.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad number `{t}` in range `{s}`"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok(lo..=hi)
}

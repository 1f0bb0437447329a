use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

/// Exact Diophantine approximation on the Eisenstein circle.
#[derive(Clone, Debug, Parser)]
#[command(name = "eislag", version, about)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write to this file (atomically) instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads for scans; `EL_THREADS` takes precedence.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Working precision for decimal renderings.
    #[arg(long, global = true, default_value_t = 64, value_parser = clap::value_parser!(u32).range(64..))]
    pub precision_bits: u32,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Primitive Eisenstein triples sorted by (c, a).
    Triples {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_c: u64,
    },
    /// Both digit expansions of a rational point, e.g. `expand 5/7 3/7`.
    Expand { x: String, y: String },
    /// Run the built-in checks.
    Verify {
        /// Add the brute-force boundary-optimality scan.
        #[arg(long)]
        deep: bool,
    },
    /// SVG of the Eisenstein pairs and a ray, with a CSV twin.
    Plot {
        #[arg(long, default_value = "3inf")]
        target: String,
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
        max_norm: u64,
        #[arg(long)]
        svg: PathBuf,
    },
    /// `δ(P; Z)` for a target stream and a triple `a,b,c`.
    Delta { target: String, z: String },
    /// Best approximants of a target up to a height bound.
    Scan {
        target: String,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_c: u64,
        /// Number of records to print.
        #[arg(long, default_value_t = 10)]
        top: usize,
    },
    /// Lagrange number of a doubly infinite word, e.g. `(223)inf` or `2inf.3.2inf`.
    Lagrange { word: String },
    /// The first K values of the closed-form spectrum.
    Spectrum {
        #[arg(long = "k", value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
    },
    /// Periodic words with L ≤ 4/√3 up to a period bound.
    Necklaces {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=12))]
        max_period: u64,
        /// List every necklace, not only those at or below the threshold.
        #[arg(long)]
        all: bool,
    },
}

impl RunConfig {
    /// Thread count after applying `EL_THREADS`.
    pub fn effective_threads(&self) -> anyhow::Result<Option<usize>> {
        match std::env::var("EL_THREADS") {
            Ok(v) if !v.trim().is_empty() => {
                let n: usize = v.trim().parse().map_err(|_| anyhow::anyhow!("EL_THREADS={v:?} is not a count"))?;
                anyhow::ensure!(n > 0, "EL_THREADS must be positive");
                Ok(Some(n))
            }
            _ => {
                if self.threads == Some(0) {
                    anyhow::bail!("--threads must be positive");
                }
                Ok(self.threads)
            }
        }
    }

    /// Decimal places that `precision_bits` supports.
    pub fn places(&self) -> usize {
        (self.precision_bits as f64 * std::f64::consts::LOG10_2) as usize - 2
    }
}

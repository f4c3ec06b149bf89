//! Command-line surface.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

/// Construct, verify and enumerate complementary sequence sets.
#[derive(Debug, Parser)]
#[command(name = "mocs-forge", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a set or family and write it as a family file.
    Construct {
        /// Alphabet size (even).
        #[arg(long)]
        q: u32,
        /// Number of binary variables.
        #[arg(long)]
        m: u32,
        /// Shift parameter t (sequence length becomes 2^(m-1) + 2^t).
        #[arg(long)]
        t: u32,
        /// Ordered partition of 1..m-1: parts separated by `;`, elements in
        /// bijection order separated by `,` (e.g. `1,2;3,4,5`).
        #[arg(long)]
        parts: String,
        /// Linear coefficients g_0,..,g_m (comma-separated); all zero when
        /// omitted.
        #[arg(long)]
        g: Option<String>,
        /// Which construction to run.
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Write the family file here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a family file against the correlation definitions.
    Verify {
        /// Path to a family file.
        path: PathBuf,
        /// Zero-test mode; defaults to MOCS_FORGE_MODE or `exact`.
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// Magnitude tolerance for float mode.
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
    },
    /// Enumerate achievable (M, N, L) cells at small m, verifying one
    /// witness per cell.
    Enumerate {
        /// Alphabet size (even).
        #[arg(long)]
        q: u32,
        /// Largest m to sweep (capped at 8).
        #[arg(long, default_value_t = 6)]
        max_m: u32,
        /// Ignore cells with length beyond this.
        #[arg(long, default_value_t = 64)]
        max_length: u64,
        /// Diff the achieved cells against an embedded published table
        /// (1: set sizes by length, 2: (M,N) pairs by even length).
        #[arg(long)]
        check_table: Option<u32>,
        /// Emit machine-readable lines instead of the aligned table.
        #[arg(long)]
        machine: bool,
    },
}

/// Construction selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    /// One Golay complementary set.
    Gcs,
    /// Orthogonal family via tail-variable masks.
    Mocs,
    /// Orthogonal family including the hybrid mask (set size N/2).
    MocsCor,
}

/// Zero-test selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    /// Cyclotomic reduction (exact integer arithmetic).
    Exact,
    /// Complex magnitude below the tolerance.
    Float,
}

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "fischer-lab",
    version,
    about = "3-transposition groups, Matsuo algebras and Virasoro fusion"
)]
pub struct Cli {
    /// Worker threads for parallel stages (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Supported group families.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Build a group, its Fischer graph and its Matsuo algebra, and check them.
    Analyze(AnalyzeArgs),
    /// Unitary-series weights, fusion products and sign maps.
    Fusion(FusionArgs),
    /// Dihedral subalgebra types generated by two Ising vectors.
    Sakuma(SakumaArgs),
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// List the families and their descriptor syntax.
    List {
        #[arg(long)]
        json: bool,
        /// Also list every concrete descriptor.
        #[arg(long)]
        all: bool,
    },
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// e.g. `symmetric:n=5`, `orthogonal-f3:dim=5`, `weyl:type=E,rank=6`.
    pub descriptor: String,
    #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
    pub beta: String,
    /// Write the Fischer graph in DOT format.
    #[arg(long, value_name = "FILE")]
    pub dot: Option<PathBuf>,
    /// Write the Gram matrix (CSV, or JSON for a `.json` path).
    #[arg(long, value_name = "FILE")]
    pub gram: Option<PathBuf>,
    /// Write the structure constants (CSV, or JSON for a `.json` path).
    #[arg(long, value_name = "FILE")]
    pub structure: Option<PathBuf>,
    /// Emit the report as JSON, to FILE or to stdout when no FILE is given.
    #[arg(long, value_name = "FILE", num_args = 0..=1, default_missing_value = "-")]
    pub json: Option<PathBuf>,
    #[arg(long, default_value_t = fischer_lab::groups::DEFAULT_MAX_ORDER)]
    pub max_order: usize,
    #[arg(long, default_value_t = fischer_lab::matsuo::DEFAULT_MAX_AXES)]
    pub max_axes: usize,
    /// Print stage timings to stderr.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct FusionArgs {
    /// Series index.
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    /// Left factor as `r,s`.
    #[arg(long, value_name = "R,S")]
    pub left: Option<String>,
    /// Right factor as `r,s`.
    #[arg(long, value_name = "R,S")]
    pub right: Option<String>,
    /// All irreducible modules with weights and signs.
    #[arg(long)]
    pub grid: bool,
    /// The sector P_m on which sigma is defined.
    #[arg(long)]
    pub sector: bool,
    /// Check whether a rational is a highest weight.
    #[arg(long, value_name = "P/Q")]
    pub weight: Option<String>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SakumaArgs {
    /// Type tag such as `3A`; omit to print the whole table.
    pub tag: Option<String>,
    /// Look up by `(e|f)` instead, e.g. `13/1024`.
    #[arg(long, value_name = "P/Q", conflicts_with = "tag")]
    pub inner: Option<String>,
    #[arg(long)]
    pub json: bool,
}

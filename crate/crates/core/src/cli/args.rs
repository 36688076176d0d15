use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

/// Arity of first-order theories of finite structures.
#[derive(Debug, Parser)]
#[command(name = "aritylab", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Largest universe accepted by the automorphism search.
    #[arg(long, global = true, default_value_t = crate::limits::DEFAULT_MAX_SIZE)]
    pub max_size: usize,
    /// Worker threads for per-m sweeps (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Include wall-clock timings (makes reports run-dependent).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and classify a structure file.
    Validate {
        /// Structure file, or `corpus:<name>` for a bundled one.
        file: String,
    },
    /// Theory arity report.
    Arity {
        /// Structure file, or `corpus:<name>` for a bundled one.
        file: String,
        #[command(flatten)]
        bounds: Bounds,
        /// Cross-check with the brute-force oracle when within its caps.
        #[arg(long)]
        oracle: bool,
    },
    /// Arity of a single relation.
    #[command(group(ArgGroup::new("source").required(true).args(["graph_of", "relation"])))]
    RelArity {
        /// Structure file, or `corpus:<name>` for a bundled one.
        file: String,
        /// Use the graph of this function.
        #[arg(long)]
        graph_of: Option<String>,
        /// With --graph-of on a binary function: graph of y = x1·…·xn.
        #[arg(long, requires = "graph_of")]
        power: Option<usize>,
        /// Use this relation symbol of the structure.
        #[arg(long)]
        relation: Option<String>,
        /// Also check the finitely-many-solutions / cofinite-projection hypotheses.
        #[arg(long)]
        check_hypotheses: bool,
        #[arg(long, default_value_t = 1)]
        sol_bound: usize,
        #[arg(long, default_value_t = 0)]
        cofinite_slack: usize,
        /// Cross-check with the brute-force oracle when within its caps.
        #[arg(long)]
        oracle: bool,
    },
    /// Build an expansion and verify its arity.
    Expand {
        /// Structure file, or `corpus:<name>` for a bundled one.
        file: String,
        #[arg(long, value_enum)]
        mode: ExpandMode,
        /// Finite-range mode: let D predicates include identity rows.
        #[arg(long)]
        include_identity: bool,
        /// Write the expanded structure file here.
        #[arg(long)]
        emit: Option<PathBuf>,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Generate a family, run the arity engine on each member, tabulate.
    Family {
        #[arg(value_enum)]
        kind: FamilyKind,
        /// Extra parameters: `r` for finite-range, `b` for direct-product.
        #[arg(long, value_delimiter = ',')]
        params: Vec<usize>,
        /// Inclusive range `a..b` for the swept parameter.
        #[arg(long)]
        sweep: String,
    },
}

#[derive(Debug, Args, Clone, Copy)]
pub struct Bounds {
    /// Longest tuple length checked (default: universe size, which is exact).
    #[arg(long)]
    pub max_m: Option<usize>,
    /// Largest signature level tried (default: max-m).
    #[arg(long)]
    pub max_n: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExpandMode {
    Singletons,
    FiniteRange,
    General,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Cyclic,
    DirectProduct,
    FlatMonoid,
    FiniteRange,
}

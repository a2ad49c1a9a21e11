use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use listheap::workloads::Order;
use listheap::HeapKind;

#[derive(Debug, Parser)]
#[command(name = "listheap-bench", version, about = "List Heap experiments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Insert n keys, then drain with delete_min.
    Sort(SortArgs),
    /// Single-source shortest paths on a generated or DIMACS graph.
    Dijkstra(DijkstraArgs),
    /// Report runs, SUS and Enc of a sequence.
    Measure(MeasureArgs),
    /// Print the lists after every operation on a small heap.
    Trace(TraceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HeapChoice {
    Ra,
    Ea,
    Binary,
    All,
}

impl HeapChoice {
    pub fn kinds(self) -> Vec<HeapKind> {
        match self {
            HeapChoice::Ra => vec![HeapKind::Ra],
            HeapChoice::Ea => vec![HeapKind::Ea],
            HeapChoice::Binary => vec![HeapKind::Binary],
            HeapChoice::All => HeapKind::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SortArgs {
    #[arg(long, value_enum, default_value_t = HeapChoice::All)]
    pub heap: HeapChoice,
    #[arg(long, default_value_t = 100_000)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// random, increasing, decreasing, runs:<r> or sus:<s>; repeat for
    /// several workloads. Defaults to random.
    #[arg(long, conflicts_with = "seq_file")]
    pub order: Vec<Order>,
    /// Sort the keys of a sequence file instead of generating them.
    #[arg(long)]
    pub seq_file: Option<PathBuf>,
    /// Run each (heap, workload) cell on its own thread.
    #[arg(long)]
    pub parallel: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
#[command(group(ArgGroup::new("graph").required(true).args(["graph_file", "generate"])))]
pub struct DijkstraArgs {
    #[arg(long, value_enum, default_value_t = HeapChoice::All)]
    pub heap: HeapChoice,
    /// DIMACS shortest-path file.
    #[arg(long)]
    pub graph_file: Option<PathBuf>,
    /// Generate a random strongly connected graph with N vertices and M arcs.
    #[arg(long = "gen", num_args = 2, value_names = ["N", "M"])]
    pub generate: Option<Vec<usize>>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Source vertex, 1-based as in DIMACS files.
    #[arg(long, default_value_t = 1)]
    pub source: usize,
    /// Also print the distance vector.
    #[arg(long)]
    pub dist: bool,
    #[arg(long)]
    pub parallel: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct MeasureArgs {
    #[arg(long)]
    pub seq_file: Option<PathBuf>,
    #[arg(long, default_value_t = 1_000)]
    pub n: usize,
    #[arg(long, default_value_t = Order::Random, conflicts_with = "seq_file")]
    pub order: Order,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Print the run, SUS and encroaching partitions as well.
    #[arg(long)]
    pub partitions: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct TraceArgs {
    /// ra, ea or all (both list heaps).
    #[arg(long, value_enum, default_value_t = HeapChoice::All)]
    pub heap: HeapChoice,
    /// Comma-separated keys to insert, e.g. `3,15,14`.
    #[arg(long, conflicts_with_all = ["seq_file", "ops"])]
    pub keys: Option<String>,
    #[arg(long, conflicts_with = "ops")]
    pub seq_file: Option<PathBuf>,
    /// Generate this many keys with --order and --seed.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = Order::Random)]
    pub order: Order,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Operation script: `i:<key>` inserts, `d` deletes the minimum,
    /// `k:<old>:<new>` decreases a key. Separated by spaces or commas.
    #[arg(long)]
    pub ops: Option<String>,
    /// Drain the heap with delete_min after the inserts.
    #[arg(long)]
    pub drain: bool,
    /// Refuse traces with more inserts than this.
    #[arg(long, default_value_t = 64)]
    pub limit: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

//! Experiment driver for the List Heap crate: sorting and Dijkstra runs
//! over the three heaps, disorder measurements, and step-by-step traces.

pub mod cli;
pub mod commands;
pub mod report;

pub use cli::{Cli, Command};
pub use commands::{run_dijkstra, run_measure, run_sort, run_trace, DijkstraOutcome};
pub use report::{render, Report, ReportTable, RunRecord};

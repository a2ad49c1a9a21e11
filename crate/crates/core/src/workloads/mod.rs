//! Inputs for the experiments: key sequences with controlled disorder,
//! random strongly connected graphs, DIMACS shortest-path files and a
//! Dijkstra driver that runs on any of the heaps.

mod dijkstra;
mod dimacs;
mod graph;
mod sequence;

pub use dijkstra::{bellman_ford, dijkstra, dijkstra_with, DijkstraStats, ShortestPathResult};
pub use dimacs::{parse_dimacs, read_dimacs, to_dimacs, write_dimacs};
pub use graph::{gen_graph, Graph};
pub use sequence::{
    gen_sequence, parse_sequence, read_sequence, to_sequence_file, write_sequence, Order,
    SequenceSpec,
};

use thiserror::Error;

use crate::disorder::DisorderError;
use crate::key::HeapError;

#[derive(Debug, Error)]
pub enum WorkloadError {
    #[error("infeasible workload: {0}")]
    Infeasible(String),
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("declared {declared} {what} but found {found}")]
    SizeMismatch {
        what: &'static str,
        declared: usize,
        found: usize,
    },
    #[error("line {line}: vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { line: usize, vertex: u64, n: usize },
    #[error("source vertex {vertex} outside 0..{n}")]
    InvalidSource { vertex: usize, n: usize },
    #[error("distance key overflows i64")]
    KeyOverflow,
    #[error("generated sequence failed its disorder check: {0}")]
    Unverified(String),
    #[error(transparent)]
    Disorder(#[from] DisorderError),
    #[error(transparent)]
    Heap(#[from] HeapError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::WorkloadError;

pub const MAX_WEIGHT: u64 = 10_000;

/// Directed graph with non-negative integer weights, vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<(u32, u64)>>,
    m: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Adds edge `u -> v`. Panics on out-of-range vertices.
    pub fn add_edge(&mut self, u: usize, v: usize, weight: u64) {
        assert!(v < self.n(), "vertex {v} out of range");
        self.adjacency[u].push((v as u32, weight));
        self.m += 1;
    }

    pub fn neighbors(&self, u: usize) -> &[(u32, u64)] {
        &self.adjacency[u]
    }

    /// All edges as `(u, v, weight)` in adjacency order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, adj)| adj.iter().map(move |&(v, w)| (u, v as usize, w)))
    }

    /// Vertices reachable from `source` by breadth-first search.
    pub fn reachable_from(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n()];
        let mut queue = std::collections::VecDeque::from([source]);
        seen[source] = true;
        while let Some(u) = queue.pop_front() {
            for &(v, _) in self.neighbors(u) {
                if !std::mem::replace(&mut seen[v as usize], true) {
                    queue.push_back(v as usize);
                }
            }
        }
        seen
    }
}

/// Random strongly connected graph with exactly `m` distinct edges.
///
/// A random Hamiltonian cycle guarantees strong connectivity; the remaining
/// `m - n` edges are uniform over ordered pairs without self-loops or
/// repeats. Weights are uniform in `1..=10_000`.
pub fn gen_graph(n: usize, m: usize, seed: u64) -> Result<Graph, WorkloadError> {
    if n < 2 {
        return Err(WorkloadError::Infeasible(format!(
            "a strongly connected graph without self-loops needs n >= 2, got {n}"
        )));
    }
    if m < n {
        return Err(WorkloadError::Infeasible(format!("m = {m} < n = {n}")));
    }
    let max_edges = n.saturating_mul(n - 1);
    if m > max_edges {
        return Err(WorkloadError::Infeasible(format!(
            "m = {m} exceeds the {max_edges} possible edges"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut graph = Graph::new(n);
    let mut present: HashSet<(u32, u32)> = HashSet::with_capacity(m);

    let mut cycle: Vec<usize> = (0..n).collect();
    cycle.shuffle(&mut rng);
    for i in 0..n {
        let (u, v) = (cycle[i], cycle[(i + 1) % n]);
        present.insert((u as u32, v as u32));
        graph.add_edge(u, v, rng.gen_range(1..=MAX_WEIGHT));
    }
    while graph.m() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && present.insert((u as u32, v as u32)) {
            graph.add_edge(u, v, rng.gen_range(1..=MAX_WEIGHT));
        }
    }
    Ok(graph)
}

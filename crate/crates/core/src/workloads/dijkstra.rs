use super::{Graph, WorkloadError};
use crate::key::NodeHandle;
use crate::{BinaryHeap, EaListHeap, HeapKind, PriorityQueue, RaListHeap};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortestPathResult {
    pub source: usize,
    /// `None` for unreachable vertices.
    pub dist: Vec<Option<u64>>,
    pub settled_order: Vec<usize>,
}

impl ShortestPathResult {
    /// `dist[v] <= dist[u] + w` for every edge with a reachable tail.
    pub fn satisfies_relaxation(&self, graph: &Graph) -> bool {
        graph
            .edges()
            .all(|(u, v, w)| match (self.dist[u], self.dist[v]) {
                (Some(du), Some(dv)) => dv <= du + w,
                (Some(_), None) => false,
                (None, _) => true,
            })
    }
}

/// Heap work performed by one Dijkstra run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DijkstraStats {
    pub comparisons: u64,
    pub inserts: usize,
    pub decrease_keys: usize,
    pub delete_mins: usize,
    pub delete_min_comparisons: u64,
    pub max_delete_min_comparisons: u64,
    /// Largest list count seen, for list heaps.
    pub max_list_count: Option<usize>,
}

impl DijkstraStats {
    pub fn mean_delete_min_comparisons(&self) -> f64 {
        if self.delete_mins == 0 {
            0.0
        } else {
            self.delete_min_comparisons as f64 / self.delete_mins as f64
        }
    }
}

/// Dijkstra on a heap of the given kind.
pub fn dijkstra(
    graph: &Graph,
    source: usize,
    kind: HeapKind,
) -> Result<(ShortestPathResult, DijkstraStats), WorkloadError> {
    match kind {
        HeapKind::Ra => dijkstra_with(graph, source, &mut RaListHeap::new()),
        HeapKind::Ea => dijkstra_with(graph, source, &mut EaListHeap::new()),
        HeapKind::Binary => dijkstra_with(graph, source, &mut BinaryHeap::new()),
    }
}

/// Dijkstra with lazy discovery: a vertex is inserted when first reached
/// and its key decreased on every later improvement.
///
/// Heap keys are `dist * n + vertex`, which keeps them unique and orders
/// equal distances by vertex id, so every heap settles vertices in the same
/// order.
pub fn dijkstra_with<H: PriorityQueue<i64>>(
    graph: &Graph,
    source: usize,
    heap: &mut H,
) -> Result<(ShortestPathResult, DijkstraStats), WorkloadError> {
    let n = graph.n();
    if source >= n {
        return Err(WorkloadError::InvalidSource { vertex: source, n });
    }
    let encode = |d: u64, v: usize| -> Result<i64, WorkloadError> {
        d.checked_mul(n as u64)
            .and_then(|x| x.checked_add(v as u64))
            .and_then(|x| i64::try_from(x).ok())
            .ok_or(WorkloadError::KeyOverflow)
    };

    let start = heap.comparisons();
    let mut stats = DijkstraStats::default();
    let mut dist: Vec<Option<u64>> = vec![None; n];
    let mut handles: Vec<Option<NodeHandle>> = vec![None; n];
    let mut settled = vec![false; n];
    let mut order = Vec::with_capacity(n);

    dist[source] = Some(0);
    handles[source] = Some(heap.insert(encode(0, source)?)?);
    stats.inserts += 1;

    while !heap.is_empty() {
        if let Some(k) = heap.num_lists() {
            stats.max_list_count = Some(stats.max_list_count.unwrap_or(0).max(k));
        }
        let before = heap.comparisons();
        let (key, _) = heap.delete_min()?;
        let spent = heap.comparisons() - before;
        stats.delete_mins += 1;
        stats.delete_min_comparisons += spent;
        stats.max_delete_min_comparisons = stats.max_delete_min_comparisons.max(spent);

        let u = (key as u64 % n as u64) as usize;
        let du = key as u64 / n as u64;
        settled[u] = true;
        handles[u] = None;
        order.push(u);

        for &(v, w) in graph.neighbors(u) {
            let v = v as usize;
            if settled[v] {
                continue;
            }
            let candidate = du.checked_add(w).ok_or(WorkloadError::KeyOverflow)?;
            match dist[v] {
                None => {
                    dist[v] = Some(candidate);
                    handles[v] = Some(heap.insert(encode(candidate, v)?)?);
                    stats.inserts += 1;
                }
                Some(dv) if candidate < dv => {
                    dist[v] = Some(candidate);
                    let handle = handles[v].expect("discovered, unsettled vertices are queued");
                    heap.decrease_key(handle, encode(candidate, v)?)?;
                    stats.decrease_keys += 1;
                }
                Some(_) => {}
            }
        }
    }
    stats.comparisons = heap.comparisons() - start;
    Ok((
        ShortestPathResult {
            source,
            dist,
            settled_order: order,
        },
        stats,
    ))
}

/// Bellman-Ford distances, used as an independent check.
pub fn bellman_ford(graph: &Graph, source: usize) -> Vec<Option<u64>> {
    let mut dist: Vec<Option<u64>> = vec![None; graph.n()];
    dist[source] = Some(0);
    for _ in 1..graph.n().max(1) {
        let mut changed = false;
        for (u, v, w) in graph.edges() {
            if let Some(du) = dist[u] {
                if dist[v].is_none_or(|dv| du + w < dv) {
                    dist[v] = Some(du + w);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    dist
}

use std::fmt::Write as _;
use std::path::Path;
use std::thread;
use std::time::Instant;

use anyhow::{anyhow, bail, ensure, Context, Result};
use listheap::disorder::{enc_build, runs_partition, sus_partition};
use listheap::workloads::{
    dijkstra, gen_graph, gen_sequence, read_dimacs, read_sequence, DijkstraStats, Graph, Order,
    SequenceSpec,
};
use listheap::{EncAdaptive, HeapKind, InsertStrategy, ListHeap, RunsAdaptive};
use serde::Serialize;

use crate::cli::{DijkstraArgs, Format, MeasureArgs, SortArgs, TraceArgs};
use crate::report::{Report, RunRecord};

fn file_label(path: &Path) -> String {
    path.file_name().map_or_else(
        || path.display().to_string(),
        |f| f.to_string_lossy().into_owned(),
    )
}

/// Runs `work` over every cell, on one thread per cell when `parallel`.
fn run_cells<C: Sync, T: Send>(
    cells: &[C],
    parallel: bool,
    work: impl Fn(&C) -> Result<T> + Sync,
) -> Result<Vec<T>> {
    if !parallel {
        return cells.iter().map(&work).collect();
    }
    thread::scope(|s| {
        let handles: Vec<_> = cells.iter().map(|c| s.spawn(|| work(c))).collect();
        handles
            .into_iter()
            .map(|h| h.join().map_err(|_| anyhow!("worker panicked"))?)
            .collect()
    })
}

struct SortRun {
    total_cmps: u64,
    max_delmin_cmps: u64,
    final_k: Option<usize>,
    wall_ns: u64,
    output: Vec<i64>,
}

fn sort_once(kind: HeapKind, keys: &[i64]) -> Result<SortRun> {
    let mut heap = kind.new_heap::<i64>();
    let mut output = Vec::with_capacity(keys.len());
    let mut max_delmin_cmps = 0;
    let start = Instant::now();
    for &k in keys {
        heap.insert(k)?;
    }
    let final_k = heap.num_lists();
    while !heap.is_empty() {
        let before = heap.comparisons();
        let (k, _) = heap.delete_min()?;
        max_delmin_cmps = max_delmin_cmps.max(heap.comparisons() - before);
        output.push(k);
    }
    let wall_ns = start.elapsed().as_nanos() as u64;
    Ok(SortRun {
        total_cmps: heap.comparisons(),
        max_delmin_cmps,
        final_k,
        wall_ns,
        output,
    })
}

/// Inserts every key of each workload, drains the heap and checks the
/// output is sorted.
pub fn run_sort(args: &SortArgs) -> Result<Report> {
    let mut workloads: Vec<(String, Vec<i64>)> = Vec::new();
    if let Some(path) = &args.seq_file {
        let keys =
            read_sequence::<i64>(path).with_context(|| format!("reading {}", path.display()))?;
        workloads.push((format!("file:{}", file_label(path)), keys));
    } else {
        let orders = if args.order.is_empty() {
            vec![Order::Random]
        } else {
            args.order.clone()
        };
        for order in orders {
            let keys = gen_sequence(SequenceSpec {
                n: args.n,
                order,
                seed: args.seed,
            })?;
            workloads.push((format!("sort:{order}"), keys));
        }
    }

    let cells: Vec<(usize, HeapKind)> = (0..workloads.len())
        .flat_map(|w| args.heap.kinds().into_iter().map(move |k| (w, k)))
        .collect();
    let runs = run_cells(&cells, args.parallel, |&(w, kind)| {
        sort_once(kind, &workloads[w].1)
    })?;

    let mut report = Report::default();
    for (&(w, kind), run) in cells.iter().zip(runs) {
        let (label, keys) = &workloads[w];
        let mut expected = keys.clone();
        expected.sort_unstable();
        ensure!(
            run.output == expected,
            "{kind} produced unsorted output on {label}"
        );
        report.records.push(RunRecord {
            heap: kind.to_string(),
            workload: label.clone(),
            n: keys.len(),
            m: None,
            seed: args.seed,
            total_cmps: run.total_cmps,
            max_delmin_cmps: run.max_delmin_cmps,
            final_k: run.final_k,
            wall_ns: run.wall_ns,
        });
    }
    Ok(report)
}

pub struct DijkstraOutcome {
    pub report: Report,
    pub stats: Vec<(HeapKind, DijkstraStats)>,
    /// Distances from the source, identical for every heap.
    pub dist: Vec<Option<u64>>,
}

/// Runs every selected heap on the same graph and source and checks that
/// the distance vectors agree.
pub fn run_dijkstra(args: &DijkstraArgs) -> Result<DijkstraOutcome> {
    let (graph, label): (Graph, String) = match (&args.graph_file, &args.generate) {
        (Some(path), _) => (
            read_dimacs(path).with_context(|| format!("reading {}", path.display()))?,
            format!("dijkstra:{}", file_label(path)),
        ),
        (None, Some(nm)) => (
            gen_graph(nm[0], nm[1], args.seed)?,
            "dijkstra:gen".to_string(),
        ),
        (None, None) => bail!("one of --graph-file or --gen is required"),
    };
    ensure!(
        (1..=graph.n()).contains(&args.source),
        "--source {} outside 1..={}",
        args.source,
        graph.n()
    );
    let source = args.source - 1;

    let kinds = args.heap.kinds();
    let runs = run_cells(&kinds, args.parallel, |&kind| {
        let start = Instant::now();
        let (result, stats) = dijkstra(&graph, source, kind)?;
        Ok((result, stats, start.elapsed().as_nanos() as u64))
    })?;

    let mut outcome = DijkstraOutcome {
        report: Report::default(),
        stats: Vec::new(),
        dist: Vec::new(),
    };
    for (&kind, (result, stats, wall_ns)) in kinds.iter().zip(runs) {
        if outcome.stats.is_empty() {
            outcome.dist = result.dist;
        } else {
            ensure!(
                outcome.dist == result.dist,
                "{kind} distances differ from {}",
                kinds[0]
            );
        }
        outcome.report.records.push(RunRecord {
            heap: kind.to_string(),
            workload: label.clone(),
            n: graph.n(),
            m: Some(graph.m()),
            seed: args.seed,
            total_cmps: stats.comparisons,
            max_delmin_cmps: stats.max_delete_min_comparisons,
            final_k: stats.max_list_count,
            wall_ns,
        });
        outcome.report.notes.push(format!(
            "{kind}: {} inserts, {} decrease_keys, {} delete_mins, {:.2} comparisons per delete_min",
            stats.inserts,
            stats.decrease_keys,
            stats.delete_mins,
            stats.mean_delete_min_comparisons()
        ));
        outcome.stats.push((kind, stats));
    }
    let reached = outcome.dist.iter().filter(|d| d.is_some()).count();
    outcome.report.notes.push(format!(
        "distances identical across heaps; {reached} of {} vertices reachable from {}",
        graph.n(),
        args.source
    ));
    if args.dist {
        let rendered: Vec<String> = outcome
            .dist
            .iter()
            .map(|d| d.map_or("inf".to_string(), |d| d.to_string()))
            .collect();
        outcome
            .report
            .notes
            .push(format!("dist [{}]", rendered.join(",")));
    }
    Ok(outcome)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Measurement {
    pub input: String,
    pub n: usize,
    pub runs: usize,
    pub sus: usize,
    pub enc: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partitions: Option<Partitions>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partitions {
    pub runs: Vec<Vec<i64>>,
    pub sus: Vec<Vec<i64>>,
    pub enc: Vec<Vec<i64>>,
}

pub fn measure(args: &MeasureArgs) -> Result<Measurement> {
    let (input, keys) = match &args.seq_file {
        Some(path) => (
            file_label(path),
            read_sequence::<i64>(path).with_context(|| format!("reading {}", path.display()))?,
        ),
        None => (
            format!("{}", args.order),
            gen_sequence(SequenceSpec {
                n: args.n,
                order: args.order,
                seed: args.seed,
            })?,
        ),
    };
    let runs = runs_partition(&keys)?.keys();
    let sus = sus_partition(&keys)?.keys();
    let enc = enc_build(&keys)?.sequences;
    Ok(Measurement {
        input,
        n: keys.len(),
        runs: runs.len(),
        sus: sus.len(),
        enc: enc.len(),
        partitions: args.partitions.then_some(Partitions { runs, sus, enc }),
    })
}

fn bracketed<K: std::fmt::Display>(lists: &[Vec<K>]) -> String {
    lists
        .iter()
        .map(|l| {
            format!(
                "[{}]",
                l.iter().map(K::to_string).collect::<Vec<_>>().join(" ")
            )
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Disorder measures of a sequence file or a generated sequence.
pub fn run_measure(args: &MeasureArgs) -> Result<String> {
    let m = measure(args)?;
    Ok(match args.output.format {
        Format::Json => serde_json::to_string_pretty(&m)? + "\n",
        Format::Csv => format!(
            "input,n,runs,sus,enc\n{},{},{},{},{}\n",
            m.input, m.n, m.runs, m.sus, m.enc
        ),
        Format::Table => {
            let mut out = format!(
                "{}: n={} runs={} SUS={} Enc={}\n",
                m.input, m.n, m.runs, m.sus, m.enc
            );
            if let Some(p) = &m.partitions {
                writeln!(out, "runs: {}", bracketed(&p.runs))?;
                writeln!(out, "SUS:  {}", bracketed(&p.sus))?;
                writeln!(out, "Enc:  {}", bracketed(&p.enc))?;
            }
            out
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TraceOp {
    Insert(f64),
    DeleteMin,
    Decrease(f64, f64),
}

/// Parses `i:<key>`, `d` and `k:<old>:<new>` tokens separated by spaces or
/// commas.
pub fn parse_ops(script: &str) -> Result<Vec<TraceOp>> {
    let key = |s: &str| s.parse::<f64>().map_err(|_| anyhow!("`{s}` is not a key"));
    script
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|token| {
            let parts: Vec<&str> = token.split(':').collect();
            match parts.as_slice() {
                ["i", k] => Ok(TraceOp::Insert(key(k)?)),
                ["d"] => Ok(TraceOp::DeleteMin),
                ["k", old, new] => Ok(TraceOp::Decrease(key(old)?, key(new)?)),
                _ => bail!("bad trace operation `{token}`"),
            }
        })
        .collect()
}

fn trace_ops(args: &TraceArgs) -> Result<Vec<TraceOp>> {
    if let Some(script) = &args.ops {
        return parse_ops(script);
    }
    let keys: Vec<f64> = if let Some(list) = &args.keys {
        list.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<f64>().map_err(|_| anyhow!("`{s}` is not a key")))
            .collect::<Result<_>>()?
    } else if let Some(path) = &args.seq_file {
        read_sequence::<f64>(path).with_context(|| format!("reading {}", path.display()))?
    } else if let Some(n) = args.n {
        ensure!(
            n <= args.limit,
            "trace of {n} keys exceeds --limit {}",
            args.limit
        );
        gen_sequence(SequenceSpec {
            n,
            order: args.order,
            seed: args.seed,
        })?
        .into_iter()
        .map(|k| k as f64)
        .collect()
    } else {
        Vec::new()
    };
    let mut ops: Vec<TraceOp> = keys.iter().map(|&k| TraceOp::Insert(k)).collect();
    if args.drain {
        ops.extend(std::iter::repeat_n(TraceOp::DeleteMin, keys.len()));
    }
    Ok(ops)
}

fn trace_heap<S: InsertStrategy>(
    label: &str,
    ops: &[TraceOp],
    log: &mut Vec<String>,
) -> Result<()> {
    let mut heap: ListHeap<f64, S> = ListHeap::new();
    for (step, &op) in ops.iter().enumerate() {
        let action = match op {
            TraceOp::Insert(k) => {
                heap.insert(k)
                    .with_context(|| format!("step {}: insert {k}", step + 1))?;
                format!("insert {k}")
            }
            TraceOp::DeleteMin => {
                let (k, _) = heap
                    .delete_min()
                    .with_context(|| format!("step {}: delete_min", step + 1))?;
                format!("delete_min -> {k}")
            }
            TraceOp::Decrease(old, new) => {
                let h = heap
                    .find_handle(old)
                    .ok_or_else(|| anyhow!("step {}: key {old} not in heap", step + 1))?;
                heap.decrease_key(h, new)
                    .with_context(|| format!("step {}: decrease {old} to {new}", step + 1))?;
                format!("decrease {old} -> {new}")
            }
        };
        let line = format!(
            "{label} {:>3} {action:<22} k={:<3} {}",
            step + 1,
            heap.list_count(),
            bracketed(&heap.lists())
        );
        log.push(line.trim_end().to_string());
    }
    Ok(())
}

/// One line per operation with the lists in array order.
pub fn run_trace(args: &TraceArgs) -> Result<Vec<String>> {
    let ops = trace_ops(args)?;
    let inserts = ops
        .iter()
        .filter(|op| matches!(op, TraceOp::Insert(_)))
        .count();
    ensure!(
        inserts <= args.limit,
        "trace of {inserts} keys exceeds --limit {}",
        args.limit
    );
    let mut log = Vec::new();
    for kind in args.heap.kinds() {
        match kind {
            HeapKind::Ra => trace_heap::<RunsAdaptive>("ra", &ops, &mut log)?,
            HeapKind::Ea => trace_heap::<EncAdaptive>("ea", &ops, &mut log)?,
            HeapKind::Binary if args.heap.kinds().len() == 1 => {
                bail!("trace needs a list heap (ra or ea)")
            }
            HeapKind::Binary => {}
        }
    }
    Ok(log)
}

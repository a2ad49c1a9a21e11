use std::fmt::Write as _;

use anyhow::Result;
use serde::{Deserialize, Serialize};

use crate::cli::Format;

/// One (heap, workload) measurement. Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub heap: String,
    pub workload: String,
    pub n: usize,
    pub m: Option<usize>,
    pub seed: u64,
    pub total_cmps: u64,
    pub max_delmin_cmps: u64,
    /// List count after the inserts for sorting runs, peak list count for
    /// Dijkstra runs; absent for the binary heap.
    pub final_k: Option<usize>,
    pub wall_ns: u64,
}

/// Records plus free-form lines that only the human table shows.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub records: Vec<RunRecord>,
    pub notes: Vec<String>,
}

/// Heaps as rows, workloads as columns, each cell divided by its column
/// minimum.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportTable {
    pub title: String,
    pub heaps: Vec<String>,
    pub workloads: Vec<String>,
    pub cells: Vec<Vec<Option<f64>>>,
}

impl ReportTable {
    pub fn from_records(title: &str, records: &[RunRecord], metric: fn(&RunRecord) -> u64) -> Self {
        let mut heaps: Vec<String> = Vec::new();
        let mut workloads: Vec<String> = Vec::new();
        for r in records {
            if !heaps.contains(&r.heap) {
                heaps.push(r.heap.clone());
            }
            if !workloads.contains(&r.workload) {
                workloads.push(r.workload.clone());
            }
        }
        let mut cells = vec![vec![None; workloads.len()]; heaps.len()];
        for (col, w) in workloads.iter().enumerate() {
            let column: Vec<&RunRecord> = records.iter().filter(|r| &r.workload == w).collect();
            let min = column.iter().map(|r| metric(r)).min().unwrap_or(0);
            for r in column {
                let row = heaps
                    .iter()
                    .position(|h| *h == r.heap)
                    .expect("collected above");
                let v = metric(r);
                cells[row][col] = Some(match (v, min) {
                    (0, 0) => 1.0,
                    (_, 0) => f64::INFINITY,
                    _ => v as f64 / min as f64,
                });
            }
        }
        ReportTable {
            title: title.to_string(),
            heaps,
            workloads,
            cells,
        }
    }

    pub fn render(&self) -> String {
        let mut header = vec![String::new()];
        header.extend(self.workloads.iter().cloned());
        let mut rows = vec![header];
        for (heap, cells) in self.heaps.iter().zip(&self.cells) {
            let mut row = vec![heap.clone()];
            row.extend(cells.iter().map(|c| match c {
                Some(v) if v.is_finite() => format!("{v:.2}"),
                Some(_) => "inf".to_string(),
                None => "-".to_string(),
            }));
            rows.push(row);
        }
        format!("{}\n{}", self.title, align(&rows))
    }
}

fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, cell)| {
                if c == 0 {
                    format!("{cell:<w$}", w = widths[c])
                } else {
                    format!("{cell:>w$}", w = widths[c])
                }
            })
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn raw_table(records: &[RunRecord]) -> String {
    let mut rows = vec![[
        "heap",
        "workload",
        "n",
        "m",
        "total_cmps",
        "max_delmin",
        "k",
        "wall_ms",
    ]
    .map(String::from)
    .to_vec()];
    for r in records {
        rows.push(vec![
            r.heap.clone(),
            r.workload.clone(),
            r.n.to_string(),
            r.m.map_or("-".into(), |m| m.to_string()),
            r.total_cmps.to_string(),
            r.max_delmin_cmps.to_string(),
            r.final_k.map_or("-".into(), |k| k.to_string()),
            format!("{:.3}", r.wall_ns as f64 / 1e6),
        ]);
    }
    align(&rows)
}

pub fn to_csv(records: &[RunRecord]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for r in records {
        writer.serialize(r)?;
    }
    Ok(String::from_utf8(writer.into_inner()?)?)
}

/// Renders a report in the requested format. Every format is produced from
/// the same records.
pub fn render(report: &Report, format: Format) -> Result<String> {
    Ok(match format {
        Format::Csv => to_csv(&report.records)?,
        Format::Json => serde_json::to_string_pretty(&report.records)? + "\n",
        Format::Table => {
            let mut out = raw_table(&report.records);
            let wall =
                ReportTable::from_records("wallclock / column minimum", &report.records, |r| {
                    r.wall_ns
                });
            let cmps =
                ReportTable::from_records("comparisons / column minimum", &report.records, |r| {
                    r.total_cmps
                });
            write!(out, "\n{}\n{}", wall.render(), cmps.render())?;
            if !report.notes.is_empty() {
                out.push('\n');
                for note in &report.notes {
                    writeln!(out, "{note}")?;
                }
            }
            out
        }
    })
}

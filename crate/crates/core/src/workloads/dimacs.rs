//! DIMACS shortest-path text format.
//!
//! ```text
//! c comment
//! p sp <n> <m>
//! a <u> <v> <w>      1-based vertices, one line per directed edge
//! ```

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::{Graph, WorkloadError};

pub fn parse_dimacs(text: &str) -> Result<Graph, WorkloadError> {
    let mut graph: Option<Graph> = None;
    let mut declared_m = 0usize;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let malformed = |message: String| WorkloadError::Malformed { line, message };
        let mut fields = raw.split_whitespace();
        match fields.next() {
            None | Some("c") => continue,
            Some("p") => {
                if graph.is_some() {
                    return Err(malformed("second problem line".into()));
                }
                let rest: Vec<&str> = fields.collect();
                let [kind, n, m] = rest[..] else {
                    return Err(malformed(format!("expected `p sp <n> <m>`, found `{raw}`")));
                };
                if kind != "sp" {
                    return Err(malformed(format!("unsupported problem type `{kind}`")));
                }
                let n = n
                    .parse()
                    .map_err(|_| malformed(format!("bad vertex count `{n}`")))?;
                declared_m = m
                    .parse()
                    .map_err(|_| malformed(format!("bad edge count `{m}`")))?;
                graph = Some(Graph::new(n));
            }
            Some("a") => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| malformed("arc before problem line".into()))?;
                let rest: Vec<&str> = fields.collect();
                let [u, v, w] = rest[..] else {
                    return Err(malformed(format!(
                        "expected `a <u> <v> <w>`, found `{raw}`"
                    )));
                };
                let vertex = |s: &str| -> Result<usize, WorkloadError> {
                    let id: u64 = s.parse().map_err(|_| WorkloadError::Malformed {
                        line,
                        message: format!("bad vertex `{s}`"),
                    })?;
                    if id == 0 || id > g.n() as u64 {
                        return Err(WorkloadError::VertexOutOfRange {
                            line,
                            vertex: id,
                            n: g.n(),
                        });
                    }
                    Ok(id as usize - 1)
                };
                let (u, v) = (vertex(u)?, vertex(v)?);
                let w: u64 = w
                    .parse()
                    .map_err(|_| malformed(format!("bad weight `{w}`")))?;
                if u == v {
                    return Err(malformed(format!("self-loop at vertex {}", u + 1)));
                }
                g.add_edge(u, v, w);
            }
            Some(other) => return Err(malformed(format!("unknown line type `{other}`"))),
        }
    }

    let graph = graph.ok_or(WorkloadError::Malformed {
        line: text.lines().count().max(1),
        message: "missing problem line".into(),
    })?;
    if graph.m() != declared_m {
        return Err(WorkloadError::SizeMismatch {
            what: "arcs",
            declared: declared_m,
            found: graph.m(),
        });
    }
    Ok(graph)
}

pub fn to_dimacs(graph: &Graph) -> String {
    let mut out = String::with_capacity(16 * (graph.m() + 1));
    let _ = writeln!(out, "p sp {} {}", graph.n(), graph.m());
    for (u, v, w) in graph.edges() {
        let _ = writeln!(out, "a {} {} {}", u + 1, v + 1, w);
    }
    out
}

pub fn read_dimacs(path: impl AsRef<Path>) -> Result<Graph, WorkloadError> {
    parse_dimacs(&fs::read_to_string(path)?)
}

pub fn write_dimacs(graph: &Graph, path: impl AsRef<Path>) -> Result<(), WorkloadError> {
    fs::write(path, to_dimacs(graph))?;
    Ok(())
}

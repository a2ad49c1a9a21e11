use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::WorkloadError;
use crate::disorder;
use crate::key::Key;

/// Shape of a generated key sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    Random,
    Increasing,
    Decreasing,
    /// Exactly this many descending runs.
    Runs(usize),
    /// Exactly this SUS value.
    Sus(usize),
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Random => f.write_str("random"),
            Order::Increasing => f.write_str("increasing"),
            Order::Decreasing => f.write_str("decreasing"),
            Order::Runs(r) => write!(f, "runs:{r}"),
            Order::Sus(s) => write!(f, "sus:{s}"),
        }
    }
}

impl FromStr for Order {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let count = |v: &str| {
            v.parse::<usize>()
                .map_err(|_| format!("bad count `{v}` in order `{s}`"))
        };
        match s.split_once(':') {
            None => match s {
                "random" => Ok(Order::Random),
                "increasing" => Ok(Order::Increasing),
                "decreasing" => Ok(Order::Decreasing),
                _ => Err(format!("unknown order `{s}`")),
            },
            Some(("runs", v)) => count(v).map(Order::Runs),
            Some(("sus", v)) => count(v).map(Order::Sus),
            Some(_) => Err(format!("unknown order `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceSpec {
    pub n: usize,
    pub order: Order,
    pub seed: u64,
}

/// Generates `spec.n` distinct keys drawn from `1..=n` with the requested
/// shape, then checks the shape with the disorder measures.
pub fn gen_sequence(spec: SequenceSpec) -> Result<Vec<i64>, WorkloadError> {
    let n = spec.n;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let keys: Vec<i64> = match spec.order {
        Order::Increasing => (1..=n as i64).collect(),
        Order::Decreasing => (1..=n as i64).rev().collect(),
        Order::Random => {
            let mut keys: Vec<i64> = (1..=n as i64).collect();
            keys.shuffle(&mut rng);
            keys
        }
        Order::Runs(r) => runs_blocks(n, r)?,
        Order::Sus(s) => interleaved_upsequences(n, s, &mut rng)?,
    };

    let check = |what: &str, got: usize, want: usize| {
        if got == want {
            Ok(())
        } else {
            Err(WorkloadError::Unverified(format!(
                "{what} = {got}, expected {want}"
            )))
        }
    };
    match spec.order {
        Order::Increasing => check("runs", disorder::runs_count(&keys)?, n)?,
        Order::Decreasing => check("runs", disorder::runs_count(&keys)?, n.min(1))?,
        Order::Runs(r) => check("runs", disorder::runs_count(&keys)?, r)?,
        Order::Sus(s) => check("SUS", disorder::sus_count(&keys)?, s)?,
        Order::Random => disorder::check_unique(&keys)?,
    }
    Ok(keys)
}

fn block_sizes(n: usize, blocks: usize) -> impl Iterator<Item = usize> {
    let (base, extra) = (n / blocks, n % blocks);
    (0..blocks).map(move |b| base + usize::from(b < extra))
}

fn check_blocks(n: usize, blocks: usize, what: &str) -> Result<(), WorkloadError> {
    if blocks > n || (blocks == 0 && n > 0) {
        return Err(WorkloadError::Infeasible(format!(
            "{what}({blocks}) needs 1..={n} blocks for n = {n}"
        )));
    }
    Ok(())
}

/// `r` descending blocks over ascending value ranges; each block's first
/// key exceeds the previous block's last, so no two blocks merge.
fn runs_blocks(n: usize, r: usize) -> Result<Vec<i64>, WorkloadError> {
    check_blocks(n, r, "runs")?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut keys = Vec::with_capacity(n);
    let mut low = 1i64;
    for size in block_sizes(n, r) {
        let high = low + size as i64;
        keys.extend((low..high).rev());
        low = high;
    }
    Ok(keys)
}

/// `s` ascending blocks over descending value ranges, riffled together at
/// random. A block may start only after its predecessor has, so the block
/// starts form a decreasing chain of length `s` while every block stays
/// increasing; SUS is therefore exactly `s`.
fn interleaved_upsequences(
    n: usize,
    s: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<i64>, WorkloadError> {
    check_blocks(n, s, "sus")?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut blocks: Vec<std::ops::Range<i64>> = Vec::with_capacity(s);
    let mut high = n as i64 + 1;
    for size in block_sizes(n, s) {
        blocks.push(high - size as i64..high);
        high -= size as i64;
    }
    let mut active = vec![0usize];
    let mut next_block = 1;
    let mut keys = Vec::with_capacity(n);
    while !active.is_empty() {
        let slot = rng.gen_range(0..active.len());
        let b = active[slot];
        let key = blocks[b].next().expect("active blocks are non-empty");
        keys.push(key);
        if b + 1 == next_block && next_block < s {
            active.push(next_block);
            next_block += 1;
        }
        if blocks[b].is_empty() {
            active.swap_remove(slot);
        }
    }
    Ok(keys)
}

/// Renders the sequence-file format: `n=<count>` then one key per line.
pub fn to_sequence_file<K: Key>(keys: &[K]) -> String {
    let mut out = format!("n={}\n", keys.len());
    for k in keys {
        out.push_str(&k.to_string());
        out.push('\n');
    }
    out
}

pub fn parse_sequence<K: Key + FromStr>(text: &str) -> Result<Vec<K>, WorkloadError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or(WorkloadError::Malformed {
        line: 1,
        message: "missing `n=<count>` header".into(),
    })?;
    let declared = header
        .trim()
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse::<usize>().ok())
        .ok_or_else(|| WorkloadError::Malformed {
            line: 1,
            message: format!("expected `n=<count>`, found `{}`", header.trim()),
        })?;
    let mut keys = Vec::with_capacity(declared);
    for (i, line) in lines {
        let key = line
            .trim()
            .parse::<K>()
            .map_err(|_| WorkloadError::Malformed {
                line: i + 1,
                message: format!("`{}` is not a key", line.trim()),
            })?;
        keys.push(key);
    }
    if keys.len() != declared {
        return Err(WorkloadError::SizeMismatch {
            what: "keys",
            declared,
            found: keys.len(),
        });
    }
    Ok(keys)
}

pub fn read_sequence<K: Key + FromStr>(path: impl AsRef<Path>) -> Result<Vec<K>, WorkloadError> {
    parse_sequence(&fs::read_to_string(path)?)
}

pub fn write_sequence<K: Key>(keys: &[K], path: impl AsRef<Path>) -> Result<(), WorkloadError> {
    fs::write(path, to_sequence_file(keys))?;
    Ok(())
}

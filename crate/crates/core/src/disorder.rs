//! Presortedness measures: runs, SUS and Enc.
//!
//! - A *run* is a maximal block of consecutive, strictly decreasing items.
//! - *SUS* is the minimum number of increasing (not necessarily consecutive)
//!   subsequences that partition the input.
//! - *Enc* is the number of increasing sequences melsort builds when it puts
//!   each item on the front or back of the oldest sequence it fits.
//!
//! On every input `Enc <= SUS` and `Enc <= runs`. SUS and runs are not
//! ordered in general: runs count *decreasing* blocks while SUS counts
//! *increasing* subsequences, so a descending input has one run but SUS `n`.
//! For random permutations runs grows like `n / 2` and SUS like `2 sqrt(n)`.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, VecDeque};

use thiserror::Error;

use crate::key::Key;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum DisorderError {
    #[error("sequence contains a repeated key")]
    DuplicateKey,
    #[error("sequence contains a key outside the total order")]
    InvalidKey,
}

/// Disjoint subsequences covering an input, each item tagged with its index.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition<K> {
    pub parts: Vec<Vec<(usize, K)>>,
}

impl<K: Copy> Partition<K> {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Keys of each part, dropping the indices.
    pub fn keys(&self) -> Vec<Vec<K>> {
        self.parts
            .iter()
            .map(|p| p.iter().map(|&(_, k)| k).collect())
            .collect()
    }
}

/// Increasing sequences whose heads ascend and tails descend.
#[derive(Debug, Clone, PartialEq)]
pub struct EncroachingSet<K> {
    pub sequences: Vec<Vec<K>>,
}

impl<K: Key> EncroachingSet<K> {
    pub fn len(&self) -> usize {
        self.sequences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequences.is_empty()
    }

    /// Each sequence increasing, heads ascending, tails descending.
    pub fn is_valid(&self) -> bool {
        let increasing = self
            .sequences
            .iter()
            .all(|s| !s.is_empty() && s.windows(2).all(|w| w[0] < w[1]));
        increasing
            && self
                .sequences
                .windows(2)
                .all(|w| w[0][0] < w[1][0] && w[0][w[0].len() - 1] > w[1][w[1].len() - 1])
    }
}

/// Fails unless every key is valid and distinct.
pub fn check_unique<K: Key>(keys: &[K]) -> Result<(), DisorderError> {
    if keys.iter().any(|k| !k.is_valid()) {
        return Err(DisorderError::InvalidKey);
    }
    let mut sorted = keys.to_vec();
    sorted.sort_unstable_by(cmp);
    if sorted
        .windows(2)
        .any(|w| w[0].identity() == w[1].identity())
    {
        return Err(DisorderError::DuplicateKey);
    }
    Ok(())
}

fn cmp<K: Key>(a: &K, b: &K) -> Ordering {
    a.partial_cmp(b).expect("keys validated")
}

/// Splits `keys` into maximal consecutive decreasing runs.
pub fn runs_partition<K: Key>(keys: &[K]) -> Result<Partition<K>, DisorderError> {
    check_unique(keys)?;
    let mut parts: Vec<Vec<(usize, K)>> = Vec::new();
    for (i, &k) in keys.iter().enumerate() {
        match parts.last_mut() {
            Some(part) if part.last().is_some_and(|&(_, prev)| k < prev) => part.push((i, k)),
            _ => parts.push(vec![(i, k)]),
        }
    }
    Ok(Partition { parts })
}

pub fn runs_count<K: Key>(keys: &[K]) -> Result<usize, DisorderError> {
    check_unique(keys)?;
    Ok(if keys.is_empty() {
        0
    } else {
        1 + keys.windows(2).filter(|w| w[0] < w[1]).count()
    })
}

/// Greedy minimum partition into increasing subsequences.
///
/// Each item extends the subsequence with the largest tail below it, or
/// opens a new one. Tails are kept in descending order so the lookup is a
/// binary search.
pub fn sus_partition<K: Key>(keys: &[K]) -> Result<Partition<K>, DisorderError> {
    check_unique(keys)?;
    let mut parts: Vec<Vec<(usize, K)>> = Vec::new();
    // (tail key, part index), tails strictly descending
    let mut tails: Vec<(K, usize)> = Vec::new();
    for (i, &k) in keys.iter().enumerate() {
        let j = tails.partition_point(|&(t, _)| t > k);
        if j == tails.len() {
            tails.push((k, parts.len()));
            parts.push(vec![(i, k)]);
        } else {
            let part = tails[j].1;
            tails[j].0 = k;
            parts[part].push((i, k));
        }
    }
    Ok(Partition { parts })
}

pub fn sus_count<K: Key>(keys: &[K]) -> Result<usize, DisorderError> {
    check_unique(keys)?;
    let mut tails: Vec<K> = Vec::new();
    for &k in keys {
        let j = tails.partition_point(|&t| t > k);
        if j == tails.len() {
            tails.push(k);
        } else {
            tails[j] = k;
        }
    }
    Ok(tails.len())
}

/// Melsort's list phase.
///
/// Each item goes on the front of the oldest sequence whose head exceeds it,
/// else on the back of the oldest sequence whose tail is below it, else into
/// a new sequence. Because heads ascend and tails descend with age, both
/// "oldest fit" lookups are binary searches.
pub fn enc_build<K: Key>(keys: &[K]) -> Result<EncroachingSet<K>, DisorderError> {
    check_unique(keys)?;
    let mut seqs: Vec<VecDeque<K>> = Vec::new();
    for &k in keys {
        let front = seqs.partition_point(|s| s[0] < k);
        if front < seqs.len() {
            seqs[front].push_front(k);
            continue;
        }
        let back = seqs.partition_point(|s| s[s.len() - 1] > k);
        if back < seqs.len() {
            seqs[back].push_back(k);
            continue;
        }
        seqs.push(VecDeque::from([k]));
    }
    Ok(EncroachingSet {
        sequences: seqs.into_iter().map(Vec::from).collect(),
    })
}

pub fn enc_count<K: Key>(keys: &[K]) -> Result<usize, DisorderError> {
    enc_build(keys).map(|e| e.len())
}

struct MergeItem<K> {
    key: K,
    seq: usize,
    next: usize,
}

impl<K: Key> PartialEq for MergeItem<K> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<K: Key> Eq for MergeItem<K> {}

impl<K: Key> PartialOrd for MergeItem<K> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<K: Key> Ord for MergeItem<K> {
    // reversed: std's heap is a max-heap
    fn cmp(&self, other: &Self) -> Ordering {
        cmp(&other.key, &self.key)
    }
}

/// Sorts by building the encroaching set and merging its sequences.
pub fn melsort<K: Key>(keys: &[K]) -> Result<Vec<K>, DisorderError> {
    let set = enc_build(keys)?;
    let mut heap: BinaryHeap<MergeItem<K>> = set
        .sequences
        .iter()
        .enumerate()
        .map(|(seq, s)| MergeItem {
            key: s[0],
            seq,
            next: 1,
        })
        .collect();
    let mut out = Vec::with_capacity(keys.len());
    while let Some(item) = heap.pop() {
        out.push(item.key);
        if let Some(&key) = set.sequences[item.seq].get(item.next) {
            heap.push(MergeItem {
                key,
                seq: item.seq,
                next: item.next + 1,
            });
        }
    }
    Ok(out)
}

//! List Heaps: binary heaps whose elements are sorted linked lists.
//!
//! A List Heap keeps an array of circular doubly linked lists, each sorted
//! ascending, arranged in heap order by their head keys. All operations cost
//! `O(log k)` where `k` is the number of lists, and `k` depends on how much
//! order is already present in the inserted keys:
//!
//! - [`RaListHeap`] places keys so that `k` never exceeds the number of
//!   descending runs of an insert-only sequence.
//! - [`EaListHeap`] builds an encroaching set during insert-only phases, so
//!   `k` matches melsort's list count (and is bounded by SUS).
//!
//! [`BinaryHeap`] is a conventional array heap with the same handle API and
//! comparison accounting, used as the baseline. The [`disorder`] module
//! computes the presortedness measures and [`workloads`] generates inputs
//! and drives Dijkstra.
//!
//! ```
//! use listheap::{PriorityQueue, RaListHeap};
//!
//! let mut heap = RaListHeap::new();
//! for key in [3i64, 15, 14, 4] {
//!     heap.insert(key).unwrap();
//! }
//! assert_eq!(heap.delete_min().unwrap().0, 3);
//! ```

// Checks written as `!(a < b)` also reject incomparable pairs.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod binary;
pub mod disorder;
pub mod ea_heap;
pub mod heap_core;
mod key;
pub mod ra_heap;
pub mod workloads;

pub use binary::BinaryHeap;
pub use ea_heap::{EaListHeap, EncAdaptive};
pub use heap_core::{InsertStrategy, ListHeap, ListHeapState, Placement};
pub use key::{CompCounter, HeapError, Key, NodeHandle};
pub use ra_heap::{RaListHeap, RunsAdaptive};

use std::fmt;
use std::str::FromStr;

/// Operations shared by every heap in the crate.
///
/// Handles returned by `insert` stay valid until the item is removed by
/// `delete_min`.
pub trait PriorityQueue<K: Key> {
    fn insert(&mut self, key: K) -> Result<NodeHandle, HeapError>;
    fn find_min(&self) -> Result<NodeHandle, HeapError>;
    fn delete_min(&mut self) -> Result<(K, NodeHandle), HeapError>;
    fn decrease_key(&mut self, handle: NodeHandle, key: K) -> Result<(), HeapError>;
    fn key_of(&self, handle: NodeHandle) -> Result<K, HeapError>;
    fn len(&self) -> usize;
    /// Key comparisons performed since construction.
    fn comparisons(&self) -> u64;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Number of sorted lists, for list-based heaps.
    fn num_lists(&self) -> Option<usize> {
        None
    }
}

/// The three heap implementations, selectable at runtime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HeapKind {
    Ra,
    Ea,
    Binary,
}

impl HeapKind {
    pub const ALL: [HeapKind; 3] = [HeapKind::Ra, HeapKind::Ea, HeapKind::Binary];

    pub fn name(self) -> &'static str {
        match self {
            HeapKind::Ra => "ra",
            HeapKind::Ea => "ea",
            HeapKind::Binary => "binary",
        }
    }

    /// Builds an empty heap of this kind behind a trait object.
    pub fn new_heap<K: Key + 'static>(self) -> Box<dyn PriorityQueue<K>> {
        match self {
            HeapKind::Ra => Box::new(RaListHeap::<K>::new()),
            HeapKind::Ea => Box::new(EaListHeap::<K>::new()),
            HeapKind::Binary => Box::new(BinaryHeap::<K>::new()),
        }
    }
}

impl fmt::Display for HeapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HeapKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ra" => Ok(HeapKind::Ra),
            "ea" => Ok(HeapKind::Ea),
            "binary" | "bin" => Ok(HeapKind::Binary),
            other => Err(format!("unknown heap kind `{other}`")),
        }
    }
}

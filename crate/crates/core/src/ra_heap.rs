//! The runs-adaptive insert strategy.
//!
//! A new key starts at the last list if it is smaller than that list's head,
//! otherwise at the (not yet existing) position `k + 1`, then climbs toward
//! the root while it is smaller than the parent's head and is prepended to
//! the list where it stops. Consecutive descending keys therefore follow each
//! other into the same list or one of its ancestors, so an insert-only
//! sequence never produces more lists than it has descending runs.

use crate::disorder::{self, DisorderError};
use crate::heap_core::{InsertStrategy, ListHeap, ListHeapState, Placement};
use crate::key::{HeapError, Key};

#[derive(Debug, Clone, Copy, Default)]
pub struct RunsAdaptive;

pub type RaListHeap<K> = ListHeap<K, RunsAdaptive>;

impl InsertStrategy for RunsAdaptive {
    fn locate<K: Key>(state: &mut ListHeapState<K>, key: K) -> Placement {
        let k = state.list_count();
        let mut pos = if state.less(key, state.head_key(k)) {
            k
        } else {
            k + 1
        };
        while pos > 1 && state.less(key, state.head_key(pos / 2)) {
            pos /= 2;
        }
        if pos > k {
            Placement::NewList
        } else {
            Placement::Front(pos)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum BoundCheckError {
    #[error(transparent)]
    Heap(#[from] HeapError),
    #[error(transparent)]
    Disorder(#[from] DisorderError),
}

/// Inserts `keys` into a fresh RA heap and returns `(lists, runs)`.
///
/// The first is always at most the second.
pub fn list_count_bound_check<K: Key>(keys: &[K]) -> Result<(usize, usize), BoundCheckError> {
    let runs = disorder::runs_count(keys)?;
    let mut heap = RaListHeap::new();
    for &key in keys {
        heap.insert(key)?;
    }
    Ok((heap.list_count(), runs))
}

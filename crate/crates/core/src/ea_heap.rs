//! The Enc-adaptive insert strategy.
//!
//! Insertion tries, in order:
//!
//! 1. **front fit**: binary search over head keys for the smallest head above
//!    the key, then climb through ancestors whose head is still above it;
//! 2. **tail fit**: binary search over tail keys for the largest tail below
//!    the key, and append there;
//! 3. a new list at position `k + 1` (after the same ancestor climb).
//!
//! Both searches treat the array as if heads ascend and tails descend. After
//! insert-only histories that holds exactly, the lists form an encroaching
//! set and the result matches melsort list for list. Once `delete_min` or
//! `decrease_key` reshuffle the array the searches become a heuristic; the
//! ancestor climb keeps heap order either way and a tail append never moves
//! a head.

use crate::heap_core::{InsertStrategy, ListHeap, ListHeapState, Placement};
use crate::key::Key;

#[derive(Debug, Clone, Copy, Default)]
pub struct EncAdaptive;

pub type EaListHeap<K> = ListHeap<K, EncAdaptive>;

impl InsertStrategy for EncAdaptive {
    fn locate<K: Key>(state: &mut ListHeapState<K>, key: K) -> Placement {
        if let Some(pos) = front_search(state, key) {
            return Placement::Front(climb(state, key, pos));
        }
        if let Some(pos) = tail_search(state, key) {
            return Placement::Back(pos);
        }
        let k = state.list_count();
        match climb(state, key, k + 1) {
            pos if pos > k => Placement::NewList,
            pos => Placement::Front(pos),
        }
    }
}

fn climb<K: Key>(state: &mut ListHeapState<K>, key: K, mut pos: usize) -> usize {
    while pos > 1 && state.less(key, state.head_key(pos / 2)) {
        pos /= 2;
    }
    pos
}

/// Front-fit candidate: the first probed position whose head exceeds `key`,
/// searching as if heads ascend by position.
pub fn front_search<K: Key>(state: &mut ListHeapState<K>, key: K) -> Option<usize> {
    let (mut lo, mut hi) = (1usize, state.list_count());
    let mut found = None;
    while lo <= hi {
        let mid = lo + (hi - lo) / 2;
        if state.less(key, state.head_key(mid)) {
            found = Some(mid);
            hi = mid - 1;
        } else {
            lo = mid + 1;
        }
    }
    found
}

/// Tail-fit candidate: the first probed position whose tail is below `key`,
/// searching as if tails descend by position.
pub fn tail_search<K: Key>(state: &mut ListHeapState<K>, key: K) -> Option<usize> {
    let (mut lo, mut hi) = (1usize, state.list_count());
    let mut found = None;
    while lo <= hi {
        let mid = lo + (hi - lo) / 2;
        if state.less(state.tail_key(mid), key) {
            found = Some(mid);
            hi = mid - 1;
        } else {
            lo = mid + 1;
        }
    }
    found
}

impl<K: Key> ListHeap<K, EncAdaptive> {
    /// See [`front_search`]. Requires at least one list.
    pub fn front_search(&mut self, key: K) -> Option<usize> {
        front_search(self, key)
    }

    /// See [`tail_search`]. Requires at least one list.
    pub fn tail_search(&mut self, key: K) -> Option<usize> {
        tail_search(self, key)
    }

    /// Whether heads strictly ascend and tails strictly descend by position.
    pub fn is_encroaching(&self) -> bool {
        let (heads, tails) = (self.heads(), self.tails());
        heads.windows(2).all(|w| w[0] < w[1]) && tails.windows(2).all(|w| w[0] > w[1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: [i64; 16] = [3, 15, 14, 4, 9, 13, 5, 12, 10, 6, 1, 11, 8, 16, 2, 7];

    fn build(keys: &[i64]) -> EaListHeap<i64> {
        let mut heap = EaListHeap::new();
        for &k in keys {
            heap.insert(k).unwrap();
            heap.validate().unwrap();
            assert!(heap.is_encroaching());
        }
        heap
    }

    #[test]
    fn sample_sequence_builds_encroaching_set() {
        let heap = build(&SAMPLE);
        assert_eq!(
            heap.lists(),
            vec![
                vec![1, 3, 15, 16],
                vec![2, 4, 14],
                vec![5, 9, 13],
                vec![6, 10, 12],
                vec![7, 8, 11],
            ]
        );
    }

    #[test]
    fn sixteen_goes_to_first_tail() {
        let mut heap = build(&SAMPLE[..13]);
        assert_eq!(heap.tails(), vec![15, 14, 13, 12, 11]);
        let h = heap.insert(16).unwrap();
        assert_eq!(heap.position_of(h), Ok(1));
        assert_eq!(heap.list_keys(1), vec![1, 3, 15, 16]);
    }

    #[test]
    fn insert_into_empty() {
        let heap = build(&[5]);
        assert_eq!(heap.lists(), vec![vec![5]]);
    }

    #[test]
    fn front_search_examples() {
        let mut state =
            ListHeapState::from_raw_lists(vec![vec![1], vec![2], vec![5], vec![6], vec![8]])
                .unwrap();
        assert_eq!(front_search(&mut state, 7), Some(5));
        let mut single = ListHeapState::from_raw_lists(vec![vec![3i64]]).unwrap();
        assert_eq!(front_search(&mut single, 2), Some(1));
        assert_eq!(front_search(&mut single, 9), None);
    }

    #[test]
    fn tail_search_examples() {
        let mut state = ListHeapState::from_raw_lists(vec![
            vec![1, 15],
            vec![2, 14],
            vec![3, 13],
            vec![4, 12],
            vec![5, 11],
        ])
        .unwrap();
        assert_eq!(tail_search(&mut state, 16), Some(1));
        let mut single = ListHeapState::from_raw_lists(vec![vec![3i64]]).unwrap();
        assert_eq!(tail_search(&mut single, 2), None);
        let mut three =
            ListHeapState::from_raw_lists(vec![vec![1, 15], vec![2, 14], vec![3, 9]]).unwrap();
        assert_eq!(tail_search(&mut three, 13), Some(3));
    }

    #[test]
    fn climb_corrects_heuristic_candidate() {
        // Heap-ordered but unsorted heads: the search lands on position 6
        // (head 7) whose parent (head 6) also admits 5.
        let mut heap =
            EaListHeap::from_raw_lists([1, 2, 6, 3, 4, 7, 8].iter().map(|&k| vec![k]).collect())
                .unwrap();
        heap.validate().unwrap();
        let mut state = heap.state().clone();
        assert_eq!(front_search(&mut state, 5), Some(6));
        let h = heap.insert(5).unwrap();
        assert_eq!(heap.position_of(h), Ok(3));
        assert_eq!(heap.list_keys(3), vec![5, 6]);
        heap.validate().unwrap();
    }

    #[test]
    fn new_list_when_nothing_fits() {
        let mut heap = build(&[1, 10]);
        assert_eq!(heap.lists(), vec![vec![1, 10]]);
        let h = heap.insert(5).unwrap();
        assert_eq!(heap.position_of(h), Ok(2));
        assert_eq!(heap.lists(), vec![vec![1, 10], vec![5]]);
    }

    #[test]
    fn heuristic_search_keeps_heap_order() {
        let mut heap = build(&SAMPLE);
        for _ in 0..3 {
            heap.delete_min().unwrap();
        }
        for k in [0, 17, 20, 12, 100, -5] {
            let _ = heap.insert(k);
            heap.validate().unwrap();
        }
    }
}

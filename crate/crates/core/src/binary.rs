//! Array binary heap with decrease-key, the baseline for the List Heaps.
//!
//! Entries sit in a 0-based slab in heap order; a per-handle slot table maps
//! each live handle to its slab index. Comparisons are counted with the same
//! [`CompCounter`] as the List Heaps, one per key-key test.

use std::collections::HashSet;

use crate::key::{CompCounter, HeapError, Key, NodeHandle};
use crate::PriorityQueue;

const FREE: usize = usize::MAX;

#[derive(Debug, Clone)]
struct Slot {
    index: usize,
    generation: u32,
}

#[derive(Debug, Clone)]
pub struct BinaryHeap<K> {
    slab: Vec<(K, u32)>,
    slots: Vec<Slot>,
    free_slots: Vec<u32>,
    keys: HashSet<u64>,
    counter: CompCounter,
}

impl<K: Key> Default for BinaryHeap<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Key> BinaryHeap<K> {
    pub fn new() -> Self {
        Self {
            slab: Vec::new(),
            slots: Vec::new(),
            free_slots: Vec::new(),
            keys: HashSet::new(),
            counter: CompCounter::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.slab.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slab.is_empty()
    }

    pub fn comparisons(&self) -> u64 {
        self.counter.count()
    }

    /// Keys in slab order.
    pub fn keys(&self) -> Vec<K> {
        self.slab.iter().map(|&(k, _)| k).collect()
    }

    pub fn insert(&mut self, key: K) -> Result<NodeHandle, HeapError> {
        if !key.is_valid() {
            return Err(HeapError::InvalidKey);
        }
        if !self.keys.insert(key.identity()) {
            return Err(HeapError::DuplicateKey);
        }
        let index = self.slab.len();
        let slot = match self.free_slots.pop() {
            Some(slot) => {
                self.slots[slot as usize].index = index;
                slot
            }
            None => {
                self.slots.push(Slot {
                    index,
                    generation: 0,
                });
                (self.slots.len() - 1) as u32
            }
        };
        self.slab.push((key, slot));
        self.sift_up(index);
        Ok(self.handle(slot))
    }

    pub fn find_min(&self) -> Result<NodeHandle, HeapError> {
        self.slab
            .first()
            .map(|&(_, slot)| self.handle(slot))
            .ok_or(HeapError::Empty)
    }

    pub fn delete_min(&mut self) -> Result<(K, NodeHandle), HeapError> {
        if self.slab.is_empty() {
            return Err(HeapError::Empty);
        }
        let (key, slot) = self.slab.swap_remove(0);
        let handle = self.handle(slot);
        if let Some(&(_, moved)) = self.slab.first() {
            self.slots[moved as usize].index = 0;
            self.sift_down(0);
        }
        let s = &mut self.slots[slot as usize];
        s.index = FREE;
        s.generation = s.generation.wrapping_add(1);
        self.free_slots.push(slot);
        self.keys.remove(&key.identity());
        Ok((key, handle))
    }

    pub fn decrease_key(&mut self, handle: NodeHandle, key: K) -> Result<(), HeapError> {
        let index = self.check_handle(handle)?;
        if !key.is_valid() {
            return Err(HeapError::InvalidKey);
        }
        let old = self.slab[index].0;
        if !(key < old) {
            return Err(HeapError::KeyNotDecreased);
        }
        if self.keys.contains(&key.identity()) {
            return Err(HeapError::DuplicateKey);
        }
        self.keys.remove(&old.identity());
        self.keys.insert(key.identity());
        self.slab[index].0 = key;
        self.sift_up(index);
        Ok(())
    }

    pub fn key_of(&self, handle: NodeHandle) -> Result<K, HeapError> {
        self.check_handle(handle).map(|i| self.slab[i].0)
    }

    /// Checks heap order and the slot table, describing the first problem.
    pub fn validate(&self) -> Result<(), String> {
        for i in 1..self.slab.len() {
            let parent = (i - 1) / 2;
            if !(self.slab[parent].0 < self.slab[i].0) {
                return Err(format!(
                    "heap order: {:?} at {parent} above {:?} at {i}",
                    self.slab[parent].0, self.slab[i].0
                ));
            }
        }
        for (i, &(_, slot)) in self.slab.iter().enumerate() {
            if self.slots[slot as usize].index != i {
                return Err(format!(
                    "slot {slot} points at {} not {i}",
                    self.slots[slot as usize].index
                ));
            }
        }
        let live = self.slots.iter().filter(|s| s.index != FREE).count();
        if live != self.slab.len() || self.keys.len() != self.slab.len() {
            return Err(format!(
                "{live} live slots, {} keys, {} entries",
                self.keys.len(),
                self.slab.len()
            ));
        }
        Ok(())
    }

    fn handle(&self, slot: u32) -> NodeHandle {
        NodeHandle::new(slot, self.slots[slot as usize].generation)
    }

    fn check_handle(&self, handle: NodeHandle) -> Result<usize, HeapError> {
        match self.slots.get(handle.index()) {
            Some(s) if s.index != FREE && s.generation == handle.generation => Ok(s.index),
            _ => Err(HeapError::InvalidHandle),
        }
    }

    fn sift_up(&mut self, mut i: usize) {
        while i > 0 {
            let parent = (i - 1) / 2;
            if self.counter.less(&self.slab[i].0, &self.slab[parent].0) {
                self.swap(i, parent);
                i = parent;
            } else {
                break;
            }
        }
    }

    fn sift_down(&mut self, mut i: usize) {
        let n = self.slab.len();
        loop {
            let left = 2 * i + 1;
            if left >= n {
                break;
            }
            let right = left + 1;
            let child = if right < n && self.counter.less(&self.slab[right].0, &self.slab[left].0) {
                right
            } else {
                left
            };
            if self.counter.less(&self.slab[child].0, &self.slab[i].0) {
                self.swap(i, child);
                i = child;
            } else {
                break;
            }
        }
    }

    fn swap(&mut self, a: usize, b: usize) {
        self.slab.swap(a, b);
        self.slots[self.slab[a].1 as usize].index = a;
        self.slots[self.slab[b].1 as usize].index = b;
    }
}

impl<K: Key> PriorityQueue<K> for BinaryHeap<K> {
    fn insert(&mut self, key: K) -> Result<NodeHandle, HeapError> {
        BinaryHeap::insert(self, key)
    }

    fn find_min(&self) -> Result<NodeHandle, HeapError> {
        BinaryHeap::find_min(self)
    }

    fn delete_min(&mut self) -> Result<(K, NodeHandle), HeapError> {
        BinaryHeap::delete_min(self)
    }

    fn decrease_key(&mut self, handle: NodeHandle, key: K) -> Result<(), HeapError> {
        BinaryHeap::decrease_key(self, handle, key)
    }

    fn key_of(&self, handle: NodeHandle) -> Result<K, HeapError> {
        BinaryHeap::key_of(self, handle)
    }

    fn len(&self) -> usize {
        self.slab.len()
    }

    fn comparisons(&self) -> u64 {
        self.counter.count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn floor_log2(n: usize) -> u64 {
        (usize::BITS - 1 - n.leading_zeros()) as u64
    }

    #[test]
    fn single_element() {
        let mut heap = BinaryHeap::new();
        heap.insert(5i64).unwrap();
        assert_eq!(heap.keys(), vec![5]);
        assert_eq!(heap.delete_min().unwrap().0, 5);
        assert!(heap.is_empty());
        assert_eq!(heap.comparisons(), 0);
        assert_eq!(heap.delete_min(), Err(HeapError::Empty));
        assert_eq!(heap.find_min(), Err(HeapError::Empty));
    }

    #[test]
    fn min_of_three() {
        let mut heap = BinaryHeap::new();
        for k in [3i64, 2, 1] {
            heap.insert(k).unwrap();
        }
        let min = heap.find_min().unwrap();
        assert_eq!(heap.key_of(min), Ok(1));
    }

    #[test]
    fn random_drain_is_sorted_within_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut keys: Vec<i64> = (0..1000).collect();
        keys.shuffle(&mut rng);
        let mut heap = BinaryHeap::new();
        for (i, &k) in keys.iter().enumerate() {
            let before = heap.comparisons();
            heap.insert(k).unwrap();
            assert!(heap.comparisons() - before <= floor_log2(i + 1));
        }
        heap.validate().unwrap();
        let mut out = Vec::new();
        while !heap.is_empty() {
            out.push(heap.delete_min().unwrap().0);
        }
        assert_eq!(out, (0..1000).collect::<Vec<_>>());
    }

    #[test]
    fn delete_min_bound_at_two_to_the_sixteen() {
        let n = 1usize << 16;
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        let mut keys: Vec<i64> = (0..n as i64).collect();
        keys.shuffle(&mut rng);
        let mut heap = BinaryHeap::new();
        for &k in &keys {
            heap.insert(k).unwrap();
        }
        let mut worst = 0;
        let mut expected = 0;
        while !heap.is_empty() {
            let before = heap.comparisons();
            assert_eq!(heap.delete_min().unwrap().0, expected);
            expected += 1;
            worst = worst.max(heap.comparisons() - before);
        }
        assert!(worst <= 2 * 16, "worst delete_min took {worst}");
    }

    #[test]
    fn decrease_key_moves_to_root() {
        let mut heap = BinaryHeap::new();
        let handles: Vec<_> = [1i64, 4, 2]
            .iter()
            .map(|&k| heap.insert(k).unwrap())
            .collect();
        assert_eq!(heap.keys(), vec![1, 4, 2]);
        heap.decrease_key(handles[1], 0).unwrap();
        assert_eq!(heap.key_of(heap.find_min().unwrap()), Ok(0));
        assert_eq!(heap.find_min(), Ok(handles[1]));
        heap.validate().unwrap();
    }

    #[test]
    fn decrease_root_does_not_move() {
        let mut heap = BinaryHeap::new();
        let root = heap.insert(1i64).unwrap();
        heap.insert(4).unwrap();
        heap.insert(2).unwrap();
        heap.decrease_key(root, -3).unwrap();
        assert_eq!(heap.keys(), vec![-3, 4, 2]);
    }

    #[test]
    fn decrease_key_errors() {
        let mut heap = BinaryHeap::new();
        let a = heap.insert(1i64).unwrap();
        let b = heap.insert(5).unwrap();
        assert_eq!(heap.decrease_key(b, 5), Err(HeapError::KeyNotDecreased));
        assert_eq!(heap.decrease_key(b, 1), Err(HeapError::DuplicateKey));
        assert_eq!(heap.insert(5), Err(HeapError::DuplicateKey));
        heap.delete_min().unwrap();
        assert_eq!(heap.decrease_key(a, 0), Err(HeapError::InvalidHandle));
        let c = heap.insert(9).unwrap();
        assert_eq!(c.slot, a.slot);
        assert_eq!(heap.key_of(a), Err(HeapError::InvalidHandle));
        heap.validate().unwrap();
    }
}

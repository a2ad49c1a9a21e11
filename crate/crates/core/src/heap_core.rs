//! Storage and the strategy-independent operations of the List Heap.
//!
//! Nodes live in an arena and are addressed by [`NodeHandle`]s that stay
//! valid until the node is deleted. Each sorted list is a record holding its
//! head node, its length and its current 1-based position in the heap array,
//! so swapping two lists touches only the two records and never the nodes.
//!
//! ```text
//!   position:   1        2          3
//!   order:    [ l_a ]  [ l_b ]    [ l_c ]        heads: 1 < 4, 1 < 2
//!               |        |          |
//!               1<->3    4<->14<->15  2<->8<->9   (circular, ascending)
//! ```
//!
//! Two invariants hold after every public operation:
//!
//! 1. every list is strictly increasing from head to tail;
//! 2. for every position `i >= 2`, `head(order[i / 2]) < head(order[i])`.
//!
//! How a new key is placed is delegated to an [`InsertStrategy`]; see
//! [`crate::ra_heap`] and [`crate::ea_heap`].

use std::collections::HashSet;
use std::marker::PhantomData;
use std::ops::{Deref, DerefMut};

use crate::key::{CompCounter, HeapError, Key, NodeHandle};
use crate::PriorityQueue;

const NIL: u32 = u32::MAX;

#[derive(Debug, Clone)]
struct Node<K> {
    key: K,
    prev: u32,
    next: u32,
    owner: u32,
    generation: u32,
    live: bool,
}

#[derive(Debug, Clone)]
struct SortedList {
    head: u32,
    len: usize,
    /// 1-based index into `order`; 0 while the record is free.
    position: usize,
}

/// Where an insert strategy wants a key to go.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Placement {
    /// Prepend to the list at this 1-based position.
    Front(usize),
    /// Append to the list at this 1-based position.
    Back(usize),
    /// Open a new singleton list at position `k + 1`.
    NewList,
}

/// Chooses the list that receives a key.
///
/// Implementations may inspect head and tail keys and must compare keys only
/// through [`ListHeapState::less`] so the work is counted. The returned
/// placement has to keep both heap invariants intact.
pub trait InsertStrategy {
    fn locate<K: Key>(state: &mut ListHeapState<K>, key: K) -> Placement;
}

/// The array of sorted lists plus the node arena and comparison counter.
#[derive(Debug, Clone)]
pub struct ListHeapState<K> {
    nodes: Vec<Node<K>>,
    free_nodes: Vec<u32>,
    lists: Vec<SortedList>,
    free_lists: Vec<u32>,
    // order[0] is unused so positions are 1-based like the textbook layout.
    order: Vec<u32>,
    size: usize,
    keys: HashSet<u64>,
    counter: CompCounter,
}

impl<K: Key> Default for ListHeapState<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Key> ListHeapState<K> {
    pub fn new() -> Self {
        Self {
            nodes: Vec::new(),
            free_nodes: Vec::new(),
            lists: Vec::new(),
            free_lists: Vec::new(),
            order: vec![NIL],
            size: 0,
            keys: HashSet::new(),
            counter: CompCounter::new(),
        }
    }

    /// Builds a heap whose array holds exactly `lists`, in the given order.
    ///
    /// Each list must be non-empty and strictly increasing and keys must be
    /// unique across lists. Heap order between lists is *not* checked; use
    /// [`validate`](Self::validate), [`heapify_up`](Self::heapify_up) or
    /// [`heapify_down`](Self::heapify_down) as needed.
    pub fn from_raw_lists(lists: Vec<Vec<K>>) -> Result<Self, HeapError> {
        let mut state = Self::new();
        for keys in lists {
            let Some((&first, rest)) = keys.split_first() else {
                return Err(HeapError::MalformedList);
            };
            let node = state.alloc_node(first)?;
            state.push_new_list(node);
            state.size += 1;
            let pos = state.list_count();
            let mut last = first;
            for &key in rest {
                if !(last < key) {
                    return Err(HeapError::MalformedList);
                }
                let node = state.alloc_node(key)?;
                state.link(node, Placement::Back(pos));
                state.size += 1;
                last = key;
            }
        }
        Ok(state)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// Number of lists `k` currently in the array.
    #[inline]
    pub fn list_count(&self) -> usize {
        self.order.len() - 1
    }

    #[inline]
    pub fn comparisons(&self) -> u64 {
        self.counter.count()
    }

    pub fn reset_comparisons(&mut self) {
        self.counter.reset();
    }

    /// Counted `a < b`.
    #[inline]
    pub fn less(&mut self, a: K, b: K) -> bool {
        self.counter.less(&a, &b)
    }

    /// Head key of the list at 1-based `pos`.
    #[inline]
    pub fn head_key(&self, pos: usize) -> K {
        let list = &self.lists[self.order[pos] as usize];
        self.nodes[list.head as usize].key
    }

    /// Tail key of the list at 1-based `pos`.
    #[inline]
    pub fn tail_key(&self, pos: usize) -> K {
        let list = &self.lists[self.order[pos] as usize];
        let tail = self.nodes[list.head as usize].prev;
        self.nodes[tail as usize].key
    }

    pub fn list_len(&self, pos: usize) -> usize {
        self.lists[self.order[pos] as usize].len
    }

    /// Keys of the list at `pos`, head first.
    pub fn list_keys(&self, pos: usize) -> Vec<K> {
        let list = &self.lists[self.order[pos] as usize];
        let mut out = Vec::with_capacity(list.len);
        let mut cur = list.head;
        for _ in 0..list.len {
            let node = &self.nodes[cur as usize];
            out.push(node.key);
            cur = node.next;
        }
        out
    }

    /// Snapshot of every list in array order.
    pub fn lists(&self) -> Vec<Vec<K>> {
        (1..=self.list_count())
            .map(|pos| self.list_keys(pos))
            .collect()
    }

    pub fn heads(&self) -> Vec<K> {
        (1..=self.list_count())
            .map(|pos| self.head_key(pos))
            .collect()
    }

    pub fn tails(&self) -> Vec<K> {
        (1..=self.list_count())
            .map(|pos| self.tail_key(pos))
            .collect()
    }

    pub fn contains_key(&self, key: K) -> bool {
        key.is_valid() && self.keys.contains(&key.identity())
    }

    pub fn find_min(&self) -> Result<NodeHandle, HeapError> {
        if self.size == 0 {
            return Err(HeapError::Empty);
        }
        let head = self.lists[self.order[1] as usize].head;
        Ok(self.handle(head))
    }

    pub fn key_of(&self, handle: NodeHandle) -> Result<K, HeapError> {
        self.check_handle(handle)
            .map(|id| self.nodes[id as usize].key)
    }

    /// 1-based array position of the list holding `handle`.
    pub fn position_of(&self, handle: NodeHandle) -> Result<usize, HeapError> {
        let id = self.check_handle(handle)?;
        Ok(self.lists[self.nodes[id as usize].owner as usize].position)
    }

    /// Linear scan for the node holding `key`.
    pub fn find_handle(&self, key: K) -> Option<NodeHandle> {
        if !self.contains_key(key) {
            return None;
        }
        self.nodes
            .iter()
            .position(|n| n.live && n.key.identity() == key.identity())
            .map(|i| self.handle(i as u32))
    }

    /// Removes and returns the minimum key; the handle becomes invalid.
    pub fn delete_min(&mut self) -> Result<(K, NodeHandle), HeapError> {
        if self.size == 0 {
            return Err(HeapError::Empty);
        }
        let root = self.order[1];
        let head = self.lists[root as usize].head;
        let handle = self.handle(head);
        let key = self.nodes[head as usize].key;

        if self.lists[root as usize].len == 1 {
            self.free_list(root);
            let last = self.order.pop().expect("root exists");
            if last != root {
                self.order[1] = last;
                self.lists[last as usize].position = 1;
            }
        } else {
            let next = self.nodes[head as usize].next;
            self.unlink(head);
            let list = &mut self.lists[root as usize];
            list.head = next;
            list.len -= 1;
        }
        self.free_node(head);
        self.keys.remove(&key.identity());
        self.size -= 1;

        if self.list_count() > 0 {
            self.heapify_down(1);
        }
        Ok((key, handle))
    }

    /// Sifts the list at `pos` toward the leaves until heap order holds.
    ///
    /// At most two counted comparisons per level.
    pub fn heapify_down(&mut self, mut pos: usize) {
        let k = self.list_count();
        assert!(pos >= 1 && pos <= k, "position {pos} out of range 1..={k}");
        loop {
            let left = 2 * pos;
            if left > k {
                break;
            }
            let right = left + 1;
            let child = if right <= k && self.less(self.head_key(right), self.head_key(left)) {
                right
            } else {
                left
            };
            if self.less(self.head_key(child), self.head_key(pos)) {
                self.swap_positions(pos, child);
                pos = child;
            } else {
                break;
            }
        }
    }

    /// Sifts the list at `pos` toward the root until heap order holds.
    ///
    /// At most one counted comparison per level.
    pub fn heapify_up(&mut self, mut pos: usize) {
        let k = self.list_count();
        assert!(pos >= 1 && pos <= k, "position {pos} out of range 1..={k}");
        while pos > 1 {
            let parent = pos / 2;
            if self.less(self.head_key(pos), self.head_key(parent)) {
                self.swap_positions(pos, parent);
                pos = parent;
            } else {
                break;
            }
        }
    }

    /// Inserts `key` at the location chosen by strategy `S`.
    pub fn insert_with<S: InsertStrategy>(&mut self, key: K) -> Result<NodeHandle, HeapError> {
        let node = self.alloc_node(key)?;
        self.place::<S>(node);
        self.size += 1;
        Ok(self.handle(node))
    }

    /// Decreases the key of `handle`, reinserting through strategy `S` when
    /// the node falls out of order within its list.
    pub fn decrease_key_with<S: InsertStrategy>(
        &mut self,
        handle: NodeHandle,
        key: K,
    ) -> Result<(), HeapError> {
        let id = self.check_handle(handle)?;
        if !key.is_valid() {
            return Err(HeapError::InvalidKey);
        }
        let old = self.nodes[id as usize].key;
        // Precondition checks are not part of the algorithm and go uncounted.
        if !(key < old) {
            return Err(HeapError::KeyNotDecreased);
        }
        if self.keys.contains(&key.identity()) {
            return Err(HeapError::DuplicateKey);
        }
        self.keys.remove(&old.identity());
        self.keys.insert(key.identity());

        let owner = self.nodes[id as usize].owner as usize;
        let pos = self.lists[owner].position;
        if self.lists[owner].head == id {
            self.nodes[id as usize].key = key;
            self.heapify_up(pos);
            return Ok(());
        }
        let left = self.nodes[id as usize].prev;
        if self.less(self.nodes[left as usize].key, key) {
            self.nodes[id as usize].key = key;
            return Ok(());
        }
        // Not the head, so the list keeps its head and stays non-empty.
        self.unlink(id);
        self.lists[owner].len -= 1;
        self.nodes[id as usize].key = key;
        self.place::<S>(id);
        Ok(())
    }

    /// Checks every structural invariant, returning a description of the
    /// first violation found.
    pub fn validate(&self) -> Result<(), String> {
        if self.order.first() != Some(&NIL) {
            return Err("order[0] sentinel missing".into());
        }
        let mut total = 0usize;
        for pos in 1..=self.list_count() {
            let lid = self.order[pos];
            let list = self
                .lists
                .get(lid as usize)
                .ok_or_else(|| format!("position {pos}: unknown list {lid}"))?;
            if list.position != pos {
                return Err(format!(
                    "list {lid} records position {} but sits at {pos}",
                    list.position
                ));
            }
            if list.len == 0 {
                return Err(format!("list at position {pos} is empty"));
            }
            let mut cur = list.head;
            let mut prev_key: Option<K> = None;
            for step in 0..list.len {
                let node = &self.nodes[cur as usize];
                if !node.live {
                    return Err(format!("position {pos}: dead node in list"));
                }
                if node.owner != lid {
                    return Err(format!(
                        "position {pos}: node {:?} owned by list {}",
                        node.key, node.owner
                    ));
                }
                if self.nodes[node.next as usize].prev != cur {
                    return Err(format!(
                        "position {pos}: broken back link after {:?}",
                        node.key
                    ));
                }
                if let Some(p) = prev_key {
                    if !(p < node.key) {
                        return Err(format!(
                            "position {pos}: {p:?} before {:?} at step {step}",
                            node.key
                        ));
                    }
                }
                prev_key = Some(node.key);
                cur = node.next;
            }
            if cur != list.head {
                return Err(format!(
                    "position {pos}: list is not circular over its length"
                ));
            }
            total += list.len;
            if pos >= 2 && !(self.head_key(pos / 2) < self.head_key(pos)) {
                return Err(format!(
                    "heap order: head {:?} at {} not below head {:?} at {pos}",
                    self.head_key(pos / 2),
                    pos / 2,
                    self.head_key(pos)
                ));
            }
        }
        if total != self.size {
            return Err(format!("size {} but lists hold {total}", self.size));
        }
        if self.keys.len() != self.size {
            return Err(format!(
                "key set holds {} keys for size {}",
                self.keys.len(),
                self.size
            ));
        }
        Ok(())
    }

    fn place<S: InsertStrategy>(&mut self, node: u32) {
        let key = self.nodes[node as usize].key;
        if self.list_count() == 0 {
            self.push_new_list(node);
            return;
        }
        match S::locate(self, key) {
            Placement::NewList => self.push_new_list(node),
            placement => self.link(node, placement),
        }
    }

    fn handle(&self, id: u32) -> NodeHandle {
        NodeHandle::new(id, self.nodes[id as usize].generation)
    }

    fn check_handle(&self, handle: NodeHandle) -> Result<u32, HeapError> {
        match self.nodes.get(handle.index()) {
            Some(node) if node.live && node.generation == handle.generation => Ok(handle.slot),
            _ => Err(HeapError::InvalidHandle),
        }
    }

    fn alloc_node(&mut self, key: K) -> Result<u32, HeapError> {
        if !key.is_valid() {
            return Err(HeapError::InvalidKey);
        }
        if !self.keys.insert(key.identity()) {
            return Err(HeapError::DuplicateKey);
        }
        let node = Node {
            key,
            prev: NIL,
            next: NIL,
            owner: NIL,
            generation: 0,
            live: true,
        };
        Ok(match self.free_nodes.pop() {
            Some(id) => {
                let slot = &mut self.nodes[id as usize];
                *slot = Node {
                    generation: slot.generation,
                    ..node
                };
                id
            }
            None => {
                self.nodes.push(node);
                (self.nodes.len() - 1) as u32
            }
        })
    }

    fn free_node(&mut self, id: u32) {
        let node = &mut self.nodes[id as usize];
        node.live = false;
        node.generation = node.generation.wrapping_add(1);
        node.prev = NIL;
        node.next = NIL;
        node.owner = NIL;
        self.free_nodes.push(id);
    }

    fn push_new_list(&mut self, node: u32) {
        let position = self.order.len();
        let record = SortedList {
            head: node,
            len: 1,
            position,
        };
        let lid = match self.free_lists.pop() {
            Some(lid) => {
                self.lists[lid as usize] = record;
                lid
            }
            None => {
                self.lists.push(record);
                (self.lists.len() - 1) as u32
            }
        };
        let n = &mut self.nodes[node as usize];
        n.prev = node;
        n.next = node;
        n.owner = lid;
        self.order.push(lid);
    }

    fn free_list(&mut self, lid: u32) {
        self.lists[lid as usize].position = 0;
        self.lists[lid as usize].len = 0;
        self.free_lists.push(lid);
    }

    /// Links `node` into an existing list; the list is never empty here.
    fn link(&mut self, node: u32, placement: Placement) {
        let (pos, front) = match placement {
            Placement::Front(pos) => (pos, true),
            Placement::Back(pos) => (pos, false),
            Placement::NewList => unreachable!("new lists are created by push_new_list"),
        };
        let lid = self.order[pos];
        let head = self.lists[lid as usize].head;
        let tail = self.nodes[head as usize].prev;
        debug_assert!(if front {
            self.nodes[node as usize].key < self.nodes[head as usize].key
        } else {
            self.nodes[tail as usize].key < self.nodes[node as usize].key
        });
        {
            let n = &mut self.nodes[node as usize];
            n.prev = tail;
            n.next = head;
            n.owner = lid;
        }
        self.nodes[tail as usize].next = node;
        self.nodes[head as usize].prev = node;
        let list = &mut self.lists[lid as usize];
        list.len += 1;
        if front {
            list.head = node;
        }
    }

    fn unlink(&mut self, id: u32) {
        let (prev, next) = {
            let n = &self.nodes[id as usize];
            (n.prev, n.next)
        };
        self.nodes[prev as usize].next = next;
        self.nodes[next as usize].prev = prev;
    }

    #[inline]
    fn swap_positions(&mut self, a: usize, b: usize) {
        self.order.swap(a, b);
        let (la, lb) = (self.order[a], self.order[b]);
        self.lists[la as usize].position = a;
        self.lists[lb as usize].position = b;
    }
}

/// A List Heap whose insert placement is decided by `S`.
///
/// Dereferences to [`ListHeapState`] for inspection and the
/// strategy-independent operations.
#[derive(Debug, Clone)]
pub struct ListHeap<K, S> {
    state: ListHeapState<K>,
    _strategy: PhantomData<S>,
}

impl<K: Key, S: InsertStrategy> Default for ListHeap<K, S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Key, S: InsertStrategy> ListHeap<K, S> {
    pub fn new() -> Self {
        Self {
            state: ListHeapState::new(),
            _strategy: PhantomData,
        }
    }

    /// See [`ListHeapState::from_raw_lists`].
    pub fn from_raw_lists(lists: Vec<Vec<K>>) -> Result<Self, HeapError> {
        Ok(Self {
            state: ListHeapState::from_raw_lists(lists)?,
            _strategy: PhantomData,
        })
    }

    pub fn insert(&mut self, key: K) -> Result<NodeHandle, HeapError> {
        self.state.insert_with::<S>(key)
    }

    pub fn decrease_key(&mut self, handle: NodeHandle, key: K) -> Result<(), HeapError> {
        self.state.decrease_key_with::<S>(handle, key)
    }

    pub fn state(&self) -> &ListHeapState<K> {
        &self.state
    }
}

impl<K, S> Deref for ListHeap<K, S> {
    type Target = ListHeapState<K>;

    fn deref(&self) -> &Self::Target {
        &self.state
    }
}

impl<K, S> DerefMut for ListHeap<K, S> {
    fn deref_mut(&mut self) -> &mut Self::Target {
        &mut self.state
    }
}

impl<K: Key, S: InsertStrategy> PriorityQueue<K> for ListHeap<K, S> {
    fn insert(&mut self, key: K) -> Result<NodeHandle, HeapError> {
        ListHeap::insert(self, key)
    }

    fn find_min(&self) -> Result<NodeHandle, HeapError> {
        self.state.find_min()
    }

    fn delete_min(&mut self) -> Result<(K, NodeHandle), HeapError> {
        self.state.delete_min()
    }

    fn decrease_key(&mut self, handle: NodeHandle, key: K) -> Result<(), HeapError> {
        ListHeap::decrease_key(self, handle, key)
    }

    fn key_of(&self, handle: NodeHandle) -> Result<K, HeapError> {
        self.state.key_of(handle)
    }

    fn len(&self) -> usize {
        self.state.len()
    }

    fn comparisons(&self) -> u64 {
        self.state.comparisons()
    }

    fn num_lists(&self) -> Option<usize> {
        Some(self.state.list_count())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ra_heap::RunsAdaptive;

    type Heap = ListHeap<f64, RunsAdaptive>;

    fn sample_heap() -> Heap {
        Heap::from_raw_lists(vec![
            vec![1.0, 3.0],
            vec![4.0, 14.0, 15.0],
            vec![2.0, 8.0, 9.0],
            vec![5.0, 13.0],
            vec![6.0, 10.0, 12.0],
            vec![11.0],
            vec![7.0, 16.0],
        ])
        .unwrap()
    }

    fn as_f64(lists: &[&[i32]]) -> Vec<Vec<f64>> {
        lists
            .iter()
            .map(|l| l.iter().map(|&x| x as f64).collect())
            .collect()
    }

    #[test]
    fn empty_heap() {
        let heap = Heap::new();
        assert_eq!(heap.len(), 0);
        assert_eq!(heap.list_count(), 0);
        assert_eq!(heap.comparisons(), 0);
        assert_eq!(heap.find_min(), Err(HeapError::Empty));
        let mut heap = heap;
        assert_eq!(heap.delete_min(), Err(HeapError::Empty));
    }

    #[test]
    fn single_insert_makes_one_list() {
        let mut heap = Heap::new();
        let h = heap.insert(5.0).unwrap();
        assert_eq!(heap.list_count(), 1);
        assert_eq!(heap.len(), 1);
        assert_eq!(heap.find_min(), Ok(h));
        assert_eq!(heap.delete_min().unwrap().0, 5.0);
        assert!(heap.is_empty());
        assert_eq!(heap.list_count(), 0);
        heap.validate().unwrap();
    }

    #[test]
    fn find_min_on_sample_heap() {
        let heap = sample_heap();
        heap.validate().unwrap();
        let h = heap.find_min().unwrap();
        assert_eq!(heap.key_of(h), Ok(1.0));
        assert_eq!(heap.comparisons(), 0);
    }

    #[test]
    fn delete_min_on_sample_heap() {
        let mut heap = sample_heap();
        let (key, handle) = heap.delete_min().unwrap();
        assert_eq!(key, 1.0);
        assert_eq!(heap.key_of(handle), Err(HeapError::InvalidHandle));
        assert_eq!(heap.heads(), vec![2.0, 4.0, 3.0, 5.0, 6.0, 11.0, 7.0]);
        assert_eq!(
            heap.lists(),
            as_f64(&[
                &[2, 8, 9],
                &[4, 14, 15],
                &[3],
                &[5, 13],
                &[6, 10, 12],
                &[11],
                &[7, 16]
            ])
        );
        heap.validate().unwrap();
        let min = heap.find_min().unwrap();
        assert_eq!(heap.key_of(min), Ok(2.0));
    }

    #[test]
    fn delete_min_replaces_emptied_root_with_last_list() {
        let mut heap = Heap::from_raw_lists(as_f64(&[&[1], &[4, 5], &[2, 3]])).unwrap();
        heap.delete_min().unwrap();
        assert_eq!(heap.lists(), as_f64(&[&[2, 3], &[4, 5]]));
        heap.validate().unwrap();
    }

    #[test]
    fn heapify_down_three_lists() {
        let mut heap = Heap::from_raw_lists(as_f64(&[&[9], &[4], &[2]])).unwrap();
        assert!(heap.validate().is_err());
        heap.heapify_down(1);
        assert_eq!(heap.heads(), vec![2.0, 4.0, 9.0]);
        assert_eq!(heap.comparisons(), 2);
        heap.validate().unwrap();
    }

    #[test]
    fn heapify_down_at_leaf_is_noop() {
        let mut heap = sample_heap();
        heap.heapify_down(7);
        heap.heapify_down(4);
        assert_eq!(heap.comparisons(), 0);
        assert_eq!(heap.lists(), sample_heap().lists());
    }

    #[test]
    fn heapify_up_three_lists() {
        let mut heap = Heap::from_raw_lists(as_f64(&[&[1], &[4], &[0]])).unwrap();
        heap.heapify_up(3);
        assert_eq!(heap.heads(), vec![0.0, 4.0, 1.0]);
        heap.validate().unwrap();
        heap.heapify_up(1);
        assert_eq!(heap.heads(), vec![0.0, 4.0, 1.0]);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn heapify_rejects_bad_position() {
        let mut heap = sample_heap();
        heap.heapify_down(8);
    }

    #[test]
    fn decrease_head_moves_list_to_root() {
        let mut heap = sample_heap();
        let h = heap.find_handle(4.0).unwrap();
        heap.decrease_key(h, 0.0).unwrap();
        assert_eq!(heap.list_keys(1), vec![0.0, 14.0, 15.0]);
        assert_eq!(heap.list_keys(2), vec![1.0, 3.0]);
        assert_eq!(heap.position_of(h), Ok(1));
        heap.validate().unwrap();
    }

    #[test]
    fn decrease_tail_in_place() {
        let mut heap = sample_heap();
        let before = heap.lists();
        let h = heap.find_handle(15.0).unwrap();
        heap.decrease_key(h, 14.5).unwrap();
        assert_eq!(heap.list_keys(2), vec![4.0, 14.0, 14.5]);
        assert_eq!(heap.comparisons(), 1);
        let mut expected = before;
        expected[1][2] = 14.5;
        assert_eq!(heap.lists(), expected);
    }

    #[test]
    fn decrease_middle_reinserts() {
        let mut heap = sample_heap();
        let h = heap.find_handle(14.0).unwrap();
        heap.decrease_key(h, 2.5).unwrap();
        assert_eq!(heap.list_keys(2), vec![4.0, 15.0]);
        assert_eq!(heap.list_keys(7), vec![2.5, 7.0, 16.0]);
        assert_eq!(heap.key_of(h), Ok(2.5));
        assert_eq!(heap.position_of(h), Ok(7));
        heap.validate().unwrap();
    }

    #[test]
    fn decrease_key_errors() {
        let mut heap = sample_heap();
        let h = heap.find_handle(9.0).unwrap();
        assert_eq!(heap.decrease_key(h, 9.0), Err(HeapError::KeyNotDecreased));
        assert_eq!(heap.decrease_key(h, 10.0), Err(HeapError::KeyNotDecreased));
        assert_eq!(heap.decrease_key(h, 8.0), Err(HeapError::DuplicateKey));
        assert_eq!(heap.decrease_key(h, f64::NAN), Err(HeapError::InvalidKey));
        let (_, gone) = heap.delete_min().unwrap();
        assert_eq!(heap.decrease_key(gone, -1.0), Err(HeapError::InvalidHandle));
        heap.validate().unwrap();
    }

    #[test]
    fn stale_handle_rejected_after_slot_reuse() {
        let mut heap = Heap::new();
        heap.insert(1.0).unwrap();
        let (_, old) = heap.delete_min().unwrap();
        let new = heap.insert(2.0).unwrap();
        assert_eq!(old.slot, new.slot);
        assert_eq!(heap.key_of(old), Err(HeapError::InvalidHandle));
        assert_eq!(heap.key_of(new), Ok(2.0));
    }

    #[test]
    fn insert_rejects_duplicates_and_nan() {
        let mut heap = Heap::new();
        heap.insert(1.0).unwrap();
        assert_eq!(heap.insert(1.0), Err(HeapError::DuplicateKey));
        assert_eq!(heap.insert(f64::NAN), Err(HeapError::InvalidKey));
        heap.insert(-0.0).unwrap();
        assert_eq!(heap.insert(0.0), Err(HeapError::DuplicateKey));
        assert_eq!(heap.len(), 2);
        heap.validate().unwrap();
    }

    #[test]
    fn raw_lists_must_be_sorted_and_nonempty() {
        assert_eq!(
            Heap::from_raw_lists(vec![vec![2.0, 1.0]]).unwrap_err(),
            HeapError::MalformedList
        );
        assert_eq!(
            Heap::from_raw_lists(vec![vec![]]).unwrap_err(),
            HeapError::MalformedList
        );
        assert_eq!(
            Heap::from_raw_lists(vec![vec![1.0], vec![1.0]]).unwrap_err(),
            HeapError::DuplicateKey
        );
    }
}

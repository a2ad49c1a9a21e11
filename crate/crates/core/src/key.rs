use std::fmt;

use thiserror::Error;

/// A totally ordered scalar key.
///
/// Keys within one heap must be unique. `identity` maps keys that compare
/// equal to the same value so duplicates can be detected without spending
/// counted comparisons.
pub trait Key: Copy + PartialOrd + fmt::Debug + fmt::Display {
    /// Whether the key takes part in the total order (false for NaN).
    fn is_valid(&self) -> bool {
        true
    }

    fn identity(&self) -> u64;
}

macro_rules! int_key {
    ($($t:ty),*) => {$(
        impl Key for $t {
            #[inline]
            fn identity(&self) -> u64 {
                *self as u64
            }
        }
    )*};
}

int_key!(i32, i64, u32, u64, usize);

impl Key for f64 {
    #[inline]
    fn is_valid(&self) -> bool {
        !self.is_nan()
    }

    #[inline]
    fn identity(&self) -> u64 {
        // -0.0 == 0.0
        if *self == 0.0 {
            0
        } else {
            self.to_bits()
        }
    }
}

/// Counts key-versus-key comparisons.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CompCounter {
    count: u64,
}

impl CompCounter {
    pub fn new() -> Self {
        Self::default()
    }

    /// `a < b`, counted.
    #[inline]
    pub fn less<K: PartialOrd>(&mut self, a: &K, b: &K) -> bool {
        self.count += 1;
        a < b
    }

    #[inline]
    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn reset(&mut self) {
        self.count = 0;
    }
}

/// Stable reference to an item stored in a heap.
///
/// The generation stamp makes a handle to a deleted item fail with
/// [`HeapError::InvalidHandle`] even after its slot is reused.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NodeHandle {
    pub(crate) slot: u32,
    pub(crate) generation: u32,
}

impl NodeHandle {
    #[inline]
    pub(crate) fn new(slot: u32, generation: u32) -> Self {
        Self { slot, generation }
    }

    #[inline]
    pub(crate) fn index(self) -> usize {
        self.slot as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum HeapError {
    #[error("heap is empty")]
    Empty,
    #[error("handle does not refer to a live item")]
    InvalidHandle,
    #[error("new key is not smaller than the current key")]
    KeyNotDecreased,
    #[error("key is already present in the heap")]
    DuplicateKey,
    #[error("key is not part of the total order")]
    InvalidKey,
    #[error("list is empty or not strictly increasing")]
    MalformedList,
}

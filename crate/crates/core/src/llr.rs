//! Left-bounded longest repeats and the staircase array of the useful ones.

use crate::suffix::SuffixStructures;

/// A repeat span `S[start..end]`, 1-based and inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LlrEntry {
    start: u32,
    end: u32,
}

impl LlrEntry {
    /// Panics unless `1 <= start <= end`.
    pub fn new(start: usize, end: usize) -> Self {
        assert!(1 <= start && start <= end, "bad span ({start}, {end})");
        LlrEntry {
            start: start as u32,
            end: end as u32,
        }
    }

    #[inline]
    pub fn start(&self) -> usize {
        self.start as usize
    }

    #[inline]
    pub fn end(&self) -> usize {
        self.end as usize
    }

    #[inline]
    pub fn weight(&self) -> usize {
        (self.end - self.start + 1) as usize
    }

    /// Whether the span covers every position of `[x..y]`.
    #[inline]
    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.start() <= x && self.end() >= y
    }
}

/// Longest repeat starting at position `i`, or `None` when `S[i]` is a
/// singleton.
pub fn llr_at(i: usize, ss: &SuffixStructures) -> Option<LlrEntry> {
    let len = ss.llr_len(i);
    (len > 0).then(|| LlrEntry::new(i, i + len - 1))
}

/// The useful LLRs in ascending start order. Both coordinates strictly
/// increase along the array.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LlrcArray {
    entries: Vec<LlrEntry>,
}

impl LlrcArray {
    /// Wraps entries that are already known to form a strict staircase.
    /// Returns `None` if the coordinates are not strictly increasing.
    pub fn from_entries(entries: Vec<LlrEntry>) -> Option<Self> {
        let ok = entries
            .windows(2)
            .all(|w| w[0].start < w[1].start && w[0].end < w[1].end);
        ok.then_some(LlrcArray { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[LlrEntry] {
        &self.entries
    }

    /// 1-based access, matching the boundary arrays.
    pub fn get(&self, idx: usize) -> Option<&LlrEntry> {
        idx.checked_sub(1).and_then(|k| self.entries.get(k))
    }

    pub fn weights(&self) -> Vec<u32> {
        self.entries.iter().map(|e| e.weight() as u32).collect()
    }

    pub fn heap_bytes(&self) -> usize {
        self.entries.capacity() * std::mem::size_of::<LlrEntry>()
    }
}

/// One left-to-right pass: `llr_i` is kept iff its length is positive and
/// at least the previous position's length. The previous length starts
/// at 1, so `llr_1` is kept whenever it exists.
pub fn build_llrc(ss: &SuffixStructures) -> LlrcArray {
    let n = ss.len();
    let mut entries = Vec::new();
    let mut prev = 1usize;
    for i in 1..=n {
        let len = ss.llr_len(i);
        if len > 0 && len >= prev {
            entries.push(LlrEntry::new(i, i + len - 1));
        }
        prev = len;
    }
    LlrcArray { entries }
}

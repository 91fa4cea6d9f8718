//! Per-coordinate boundaries that turn a dominance set into an LLRc range.
//!
//! `L[y]` is the smallest LLRc index whose end is `>= y` and `R[x]` the
//! largest whose start is `<= x`, both 1-based, with `-1` when no such
//! entry exists. LLRc entries with start `<= x` and end `>= y` are exactly
//! those with index in `L[y]..=R[x]`.

use crate::llr::LlrcArray;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Boundaries {
    // (L[i], R[i]) pairs, stored together because point queries read both
    // at the same coordinate.
    pairs: Vec<(i32, i32)>,
}

impl Boundaries {
    pub fn from_arrays(left: &[i32], right: &[i32]) -> Self {
        assert_eq!(left.len(), right.len());
        Boundaries {
            pairs: left.iter().copied().zip(right.iter().copied()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `L[y]`, 1-based `y`.
    #[inline]
    pub fn left(&self, y: usize) -> i32 {
        self.pairs[y - 1].0
    }

    /// `R[x]`, 1-based `x`.
    #[inline]
    pub fn right(&self, x: usize) -> i32 {
        self.pairs[x - 1].1
    }

    pub fn left_array(&self) -> Vec<i32> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn right_array(&self) -> Vec<i32> {
        self.pairs.iter().map(|p| p.1).collect()
    }

    /// The 1-based LLRc index range `[L[y] .. R[x]]`, or `None` if either
    /// side is `-1` or the range is inverted.
    #[inline]
    pub fn range(&self, x: usize, y: usize) -> Option<(usize, usize)> {
        let l = self.left(y);
        let r = self.right(x);
        if l != -1 && r != -1 && l <= r {
            Some((l as usize, r as usize))
        } else {
            None
        }
    }

    pub fn heap_bytes(&self) -> usize {
        self.pairs.capacity() * std::mem::size_of::<(i32, i32)>()
    }
}

/// Two linear sweeps over the coordinates, one upward for `L` and one
/// downward for `R`. Relies on the strict staircase order of `llrc`.
pub fn build_boundaries(llrc: &LlrcArray, n: usize) -> Boundaries {
    let mut pairs = vec![(-1i32, -1i32); n];
    let e = llrc.entries();
    let size = e.len();
    if size == 0 {
        return Boundaries { pairs };
    }

    let mut i = 0usize;
    for y in 1..=n {
        if y <= e[i].end() {
            pairs[y - 1].0 = i as i32 + 1;
        } else if i + 1 < size {
            i += 1;
            pairs[y - 1].0 = i as i32 + 1;
        } else {
            break;
        }
    }

    let mut i = size - 1;
    for x in (1..=n).rev() {
        if x >= e[i].start() {
            pairs[x - 1].1 = i as i32 + 1;
        } else if i > 0 {
            i -= 1;
            pairs[x - 1].1 = i as i32 + 1;
        } else {
            break;
        }
    }

    Boundaries { pairs }
}

//! Range-maximum structures over a weight sequence.
//!
//! Both return the smallest index holding the maximum weight in a range.
//! Indices are 0-based and ranges inclusive.

pub trait RangeMax {
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn weight(&self, i: usize) -> u32;

    /// Leftmost index of the maximum in `[l..=r]`. Requires `l <= r < len`.
    fn argmax(&self, l: usize, r: usize) -> usize;

    fn heap_bytes(&self) -> usize;
}

#[inline]
fn floor_log2(v: usize) -> usize {
    (usize::BITS - 1 - v.leading_zeros()) as usize
}

/// Doubling table: `levels[k][i]` is the argmax of `[i, i + 2^k)`.
/// O(n log n) words, O(1) query.
#[derive(Debug, Clone)]
pub struct SparseTable {
    weights: Vec<u32>,
    levels: Vec<Vec<u32>>,
}

impl SparseTable {
    pub fn new(weights: Vec<u32>) -> Self {
        let levels = doubling_levels(&weights, (0..weights.len() as u32).collect());
        SparseTable { weights, levels }
    }
}

/// Builds the doubling levels over `base`, a list of candidate indices into
/// `weights`.
fn doubling_levels(weights: &[u32], base: Vec<u32>) -> Vec<Vec<u32>> {
    let n = base.len();
    let mut levels = vec![base];
    let mut k = 1;
    while (1usize << k) <= n {
        let prev = &levels[k - 1];
        let half = 1usize << (k - 1);
        let next: Vec<u32> = (0..=n - (1 << k))
            .map(|i| pick(weights, prev[i], prev[i + half]))
            .collect();
        levels.push(next);
        k += 1;
    }
    levels
}

/// `a` must lie left of `b`; ties go to `a`.
#[inline]
fn pick(weights: &[u32], a: u32, b: u32) -> u32 {
    if weights[b as usize] > weights[a as usize] {
        b
    } else {
        a
    }
}

#[inline]
fn query_levels(weights: &[u32], levels: &[Vec<u32>], l: usize, r: usize) -> u32 {
    let k = floor_log2(r - l + 1);
    let level = &levels[k];
    pick(weights, level[l], level[r + 1 - (1 << k)])
}

impl RangeMax for SparseTable {
    fn len(&self) -> usize {
        self.weights.len()
    }

    #[inline]
    fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    fn argmax(&self, l: usize, r: usize) -> usize {
        debug_assert!(l <= r && r < self.weights.len());
        query_levels(&self.weights, &self.levels, l, r) as usize
    }

    fn heap_bytes(&self) -> usize {
        4 * (self.weights.capacity() + self.levels.iter().map(Vec::capacity).sum::<usize>())
    }
}

const BLOCK: usize = 64;

/// Blocks of 64 weights. Inside a block, `masks[i]` records the stack of
/// candidate maxima for ranges ending at `i` (bit `j` set means the `j`-th
/// entry of the block is on the stack). A sparse table over block maxima
/// covers the whole blocks between the two ends. O(n) words, O(1) query.
#[derive(Debug, Clone)]
pub struct BlockRangeMax {
    weights: Vec<u32>,
    masks: Vec<u64>,
    blocks: Vec<Vec<u32>>,
}

impl BlockRangeMax {
    pub fn new(weights: Vec<u32>) -> Self {
        let n = weights.len();
        let mut masks = vec![0u64; n];
        let mut block_max = Vec::with_capacity(n.div_ceil(BLOCK));
        for (b, chunk) in weights.chunks(BLOCK).enumerate() {
            let base = b * BLOCK;
            let mut stack: u64 = 0;
            for (j, &w) in chunk.iter().enumerate() {
                // Pop strictly lighter entries; equal ones stay so the
                // lowest surviving bit is the leftmost maximum.
                while stack != 0 {
                    let top = 63 - stack.leading_zeros() as usize;
                    if chunk[top] < w {
                        stack &= !(1u64 << top);
                    } else {
                        break;
                    }
                }
                stack |= 1u64 << j;
                masks[base + j] = stack;
            }
            block_max.push((base + stack.trailing_zeros() as usize) as u32);
        }
        let blocks = doubling_levels(&weights, block_max);
        BlockRangeMax {
            weights,
            masks,
            blocks,
        }
    }

    #[inline]
    fn in_block(&self, l: usize, r: usize) -> usize {
        let base = r & !(BLOCK - 1);
        let m = self.masks[r] & (!0u64 << (l - base));
        base + m.trailing_zeros() as usize
    }
}

impl RangeMax for BlockRangeMax {
    fn len(&self) -> usize {
        self.weights.len()
    }

    #[inline]
    fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    #[inline]
    fn argmax(&self, l: usize, r: usize) -> usize {
        debug_assert!(l <= r && r < self.weights.len());
        let (bl, br) = (l / BLOCK, r / BLOCK);
        if bl == br {
            return self.in_block(l, r);
        }
        let w = &self.weights;
        let mut best = self.in_block(l, bl * BLOCK + BLOCK - 1);
        if bl + 1 < br {
            let mid = query_levels(w, &self.blocks, bl + 1, br - 1) as usize;
            if w[mid] > w[best] {
                best = mid;
            }
        }
        let tail = self.in_block(br * BLOCK, r);
        if w[tail] > w[best] {
            best = tail;
        }
        best
    }

    fn heap_bytes(&self) -> usize {
        4 * self.weights.capacity()
            + 8 * self.masks.capacity()
            + 4 * self.blocks.iter().map(Vec::capacity).sum::<usize>()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive(w: &[u32], l: usize, r: usize) -> usize {
        let mut best = l;
        for i in l..=r {
            if w[i] > w[best] {
                best = i;
            }
        }
        best
    }

    #[test]
    fn worked_weights() {
        let w = vec![5, 4, 7, 5, 7];
        for rm in [
            &SparseTable::new(w.clone()) as &dyn RangeMax,
            &BlockRangeMax::new(w.clone()),
        ] {
            // 1-based [3..5] -> 3, [4..5] -> 5.
            assert_eq!(rm.argmax(2, 4) + 1, 3);
            assert_eq!(rm.argmax(3, 4) + 1, 5);
            assert_eq!(rm.argmax(0, 4) + 1, 3);
        }
        let one = BlockRangeMax::new(vec![5]);
        assert_eq!(one.argmax(0, 0), 0);
        assert_eq!(SparseTable::new(vec![5]).argmax(0, 0), 0);
    }

    #[test]
    fn exhaustive_across_blocks() {
        let w: Vec<u32> = (0..300u32).map(|i| (i * 37 + 11) % 23).collect();
        let st = SparseTable::new(w.clone());
        let br = BlockRangeMax::new(w.clone());
        for l in 0..w.len() {
            for r in l..w.len() {
                let want = naive(&w, l, r);
                assert_eq!(st.argmax(l, r), want, "sparse [{l}, {r}]");
                assert_eq!(br.argmax(l, r), want, "block [{l}, {r}]");
            }
        }
    }

    #[test]
    fn constant_weights_pick_leftmost() {
        let w = vec![3u32; 200];
        let br = BlockRangeMax::new(w.clone());
        let st = SparseTable::new(w);
        for (l, r) in [(0, 199), (5, 70), (64, 127), (63, 64), (130, 131)] {
            assert_eq!(br.argmax(l, r), l);
            assert_eq!(st.argmax(l, r), l);
        }
    }

    proptest! {
        #[test]
        fn matches_linear_scan(
            w in proptest::collection::vec(0u32..6, 1..400),
            a in any::<usize>(), b in any::<usize>(),
        ) {
            let (l, r) = (a % w.len(), b % w.len());
            let (l, r) = (l.min(r), l.max(r));
            let want = naive(&w, l, r);
            prop_assert_eq!(SparseTable::new(w.clone()).argmax(l, r), want);
            prop_assert_eq!(BlockRangeMax::new(w).argmax(l, r), want);
        }
    }
}

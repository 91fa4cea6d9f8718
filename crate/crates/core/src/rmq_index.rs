//! Constant-time index: LLRc, boundary arrays and a range-max structure
//! over LLRc weights.

use std::time::{Duration, Instant};

use crate::boundary::{build_boundaries, Boundaries};
use crate::error::Result;
use crate::llr::{build_llrc, LlrcArray};
use crate::query::{LrAnswer, LrEngine, QueryInterval, Span};
use crate::range_max::{BlockRangeMax, RangeMax};
use crate::suffix::SuffixStructures;
use crate::text::Text;

#[derive(Debug, Clone)]
pub struct RmqIndex {
    n: usize,
    llrc: LlrcArray,
    boundaries: Boundaries,
    rm: BlockRangeMax,
}

/// Wall time of each construction phase.
#[derive(Debug, Clone, Copy, Default)]
pub struct BuildTimings {
    pub suffix: Duration,
    pub llrc: Duration,
    pub boundaries: Duration,
    pub range_max: Duration,
}

impl BuildTimings {
    pub fn total(&self) -> Duration {
        self.suffix + self.llrc + self.boundaries + self.range_max
    }
}

impl RmqIndex {
    pub fn build(text: &Text) -> Self {
        Self::build_timed(text).0
    }

    pub fn build_timed(text: &Text) -> (Self, BuildTimings) {
        let mut t = BuildTimings::default();
        let now = Instant::now();
        let ss = SuffixStructures::build(text);
        t.suffix = now.elapsed();

        let now = Instant::now();
        let llrc = build_llrc(&ss);
        t.llrc = now.elapsed();
        drop(ss);

        let now = Instant::now();
        let boundaries = build_boundaries(&llrc, text.len());
        t.boundaries = now.elapsed();

        let now = Instant::now();
        let index = Self::from_parts(llrc, boundaries, text.len());
        t.range_max = now.elapsed();
        (index, t)
    }

    /// Assembles an index from precomputed parts; only the range-max
    /// structure is built here.
    pub fn from_parts(llrc: LlrcArray, boundaries: Boundaries, n: usize) -> Self {
        assert_eq!(boundaries.len(), n);
        let rm = BlockRangeMax::new(llrc.weights());
        RmqIndex {
            n,
            llrc,
            boundaries,
            rm,
        }
    }

    pub fn llrc(&self) -> &LlrcArray {
        &self.llrc
    }

    pub fn boundaries(&self) -> &Boundaries {
        &self.boundaries
    }

    /// Leftmost argmax of the weights in the 1-based LLRc range `[l..r]`.
    pub fn range_max(&self, l: usize, r: usize) -> usize {
        self.rm.argmax(l - 1, r - 1) + 1
    }

    pub fn heap_bytes(&self) -> usize {
        self.llrc.heap_bytes() + self.boundaries.heap_bytes() + self.rm.heap_bytes()
    }

    fn span(&self, k: usize) -> Span {
        self.llrc.entries()[k].into()
    }

    /// `query_one` plus the number of range-max calls it made (0 or 1).
    pub fn query_one_counted(&self, q: QueryInterval) -> Result<(LrAnswer, usize)> {
        q.validate(self.n)?;
        match self.boundaries.range(q.x, q.y) {
            Some((l, r)) => {
                let m = self.rm.argmax(l - 1, r - 1);
                Ok((LrAnswer::from_spans(vec![self.span(m)]), 1))
            }
            None => Ok((LrAnswer::none(), 0)),
        }
    }

    /// `query_all` plus the number of range-max calls it made.
    ///
    /// The first argmax fixes the answer length; the remaining candidates
    /// are found by splitting the range around each hit, pruning any
    /// subrange whose maximum is lighter. At most `2 * occ + 1` calls.
    pub fn query_all_counted(&self, q: QueryInterval) -> Result<(LrAnswer, usize)> {
        q.validate(self.n)?;
        let Some((l, r)) = self.boundaries.range(q.x, q.y) else {
            return Ok((LrAnswer::none(), 0));
        };
        let (l, r) = (l - 1, r - 1);
        let first = self.rm.argmax(l, r);
        let weight = self.rm.weight(first);
        let mut calls = 1;
        let mut hits = vec![first];
        let mut work = Vec::new();
        split(&mut work, l, first, r);
        while let Some((a, b)) = work.pop() {
            let m = self.rm.argmax(a, b);
            calls += 1;
            if self.rm.weight(m) < weight {
                continue;
            }
            hits.push(m);
            split(&mut work, a, m, b);
        }
        let spans = hits.into_iter().map(|k| self.span(k)).collect();
        Ok((LrAnswer::from_spans(spans), calls))
    }
}

#[inline]
fn split(work: &mut Vec<(usize, usize)>, l: usize, m: usize, r: usize) {
    if l < m {
        work.push((l, m - 1));
    }
    if m < r {
        work.push((m + 1, r));
    }
}

impl LrEngine for RmqIndex {
    fn text_len(&self) -> usize {
        self.n
    }

    fn query_one(&self, q: QueryInterval) -> Result<LrAnswer> {
        self.query_one_counted(q).map(|(a, _)| a)
    }

    fn query_all(&self, q: QueryInterval) -> Result<LrAnswer> {
        self.query_all_counted(q).map(|(a, _)| a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn index(s: &[u8]) -> RmqIndex {
        RmqIndex::build(&Text::new(s.to_vec(), "t").unwrap())
    }

    fn spans(a: &LrAnswer) -> Vec<(usize, usize)> {
        a.spans.iter().map(|s| (s.start, s.end)).collect()
    }

    #[test]
    fn worked_queries() {
        let idx = index(b"aaababaabaaabaaab");
        assert_eq!(idx.range_max(3, 5), 3);
        assert_eq!(idx.range_max(4, 5), 5);

        let one = |x, y| spans(&idx.query_one(QueryInterval::new(x, y)).unwrap());
        assert_eq!(one(5, 5), vec![(1, 5)]);
        assert_eq!(one(11, 14), vec![(11, 17)]);
        assert_eq!(one(11, 12), vec![(7, 13)]);
        assert!(one(6, 12).is_empty());

        let (all, calls) = idx.query_all_counted(QueryInterval::new(11, 12)).unwrap();
        assert_eq!(spans(&all), vec![(7, 13), (11, 17)]);
        assert_eq!(all.length, 7);
        assert!(calls <= 2 * all.occ() + 1);
    }

    #[test]
    fn other_texts() {
        let idx = index(b"mississippi");
        assert_eq!(
            spans(&idx.query_all(QueryInterval::new(3, 4)).unwrap()),
            vec![(2, 5)]
        );
        let idx = index(b"abcd");
        assert!(idx.llrc().is_empty());
        assert!(idx.query_all(QueryInterval::new(1, 4)).unwrap().is_empty());
        let idx = index(b"a");
        assert!(idx.query_one(QueryInterval::point(1)).unwrap().is_empty());
    }

    #[test]
    fn query_one_makes_at_most_one_call() {
        let idx = index(b"aaababaabaaabaaab");
        assert_eq!(idx.query_one_counted(QueryInterval::new(5, 5)).unwrap().1, 1);
        assert_eq!(idx.query_one_counted(QueryInterval::new(6, 12)).unwrap().1, 0);
    }

    #[test]
    fn rejects_bad_interval() {
        let idx = index(b"abab");
        assert!(matches!(
            idx.query_one(QueryInterval::new(2, 1)),
            Err(Error::InvalidInterval { .. })
        ));
        assert!(matches!(
            idx.query_all(QueryInterval::new(1, 5)),
            Err(Error::InvalidInterval { .. })
        ));
    }
}

//! Logarithmic-time index based on 2d dominance-max queries.
//!
//! Each useful LLR is a dot `(start, end)` weighted by its length. The
//! dots form a strict staircase, so the dominance region `{start <= x,
//! end >= y}` is a contiguous run of the array: two binary searches find
//! it and a sparse table gives the heaviest dot in O(1).

use crate::error::Result;
use crate::llr::{build_llrc, LlrEntry, LlrcArray};
use crate::query::{LrAnswer, LrEngine, QueryInterval, Span};
use crate::range_max::{RangeMax, SparseTable};
use crate::suffix::SuffixStructures;
use crate::text::Text;

#[derive(Debug, Clone)]
pub struct DmqIndex {
    n: usize,
    dots: LlrcArray,
    rm: SparseTable,
}

impl DmqIndex {
    pub fn build(text: &Text) -> Self {
        let ss = SuffixStructures::build(text);
        Self::new(build_llrc(&ss), text.len())
    }

    pub fn new(dots: LlrcArray, n: usize) -> Self {
        let rm = SparseTable::new(dots.weights());
        DmqIndex { n, dots, rm }
    }

    pub fn dots(&self) -> &LlrcArray {
        &self.dots
    }

    pub fn heap_bytes(&self) -> usize {
        self.dots.heap_bytes() + self.rm.heap_bytes()
    }

    /// Heaviest dot with `start <= x` and `end >= y`, ties to the smaller
    /// start. `x < y` is not required.
    pub fn dominance_max(&self, x: usize, y: usize) -> Option<LlrEntry> {
        self.dominance_max_index(x, y).map(|k| self.dots.entries()[k])
    }

    fn dominance_max_index(&self, x: usize, y: usize) -> Option<usize> {
        let e = self.dots.entries();
        let lo = e.partition_point(|d| d.end() < y);
        let hi = e.partition_point(|d| d.start() <= x);
        (lo < hi).then(|| self.rm.argmax(lo, hi - 1))
    }

    /// `query_one` plus the number of dominance queries (always 1).
    pub fn query_one_counted(&self, q: QueryInterval) -> Result<(LrAnswer, usize)> {
        q.validate(self.n)?;
        let hit = self.dominance_max(q.x, q.y);
        Ok((LrAnswer::from_spans(hit.map(Span::from).into_iter().collect()), 1))
    }

    /// `query_all` plus the number of dominance queries it made.
    ///
    /// After a hit `(x', y')` the rest of the dominance region splits into
    /// `S(x'-1, y)` and `S(x, y'+1)`; each is searched the same way until
    /// it is empty or its heaviest dot is lighter than the answer.
    pub fn query_all_counted(&self, q: QueryInterval) -> Result<(LrAnswer, usize)> {
        q.validate(self.n)?;
        let Some(first) = self.dominance_max_index(q.x, q.y) else {
            return Ok((LrAnswer::none(), 1));
        };
        let e = self.dots.entries();
        let weight = e[first].weight();
        let mut calls = 1;
        let mut hits = vec![first];
        let mut work = Vec::new();
        self.split(&mut work, q.x, q.y, e[first]);
        while let Some((x, y)) = work.pop() {
            calls += 1;
            match self.dominance_max_index(x, y) {
                Some(k) if e[k].weight() >= weight => {
                    hits.push(k);
                    self.split(&mut work, x, y, e[k]);
                }
                _ => {}
            }
        }
        let spans = hits.into_iter().map(|k| e[k].into()).collect();
        Ok((LrAnswer::from_spans(spans), calls))
    }

    fn split(&self, work: &mut Vec<(usize, usize)>, x: usize, y: usize, hit: LlrEntry) {
        if hit.start() > 1 {
            work.push((hit.start() - 1, y));
        }
        if hit.end() < self.n {
            work.push((x, hit.end() + 1));
        }
    }
}

impl LrEngine for DmqIndex {
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

//! Index-free queries that walk the LLRs leftward from `x`.
//!
//! Each query costs O(x) given the rank and lcp arrays. The walk stops at
//! the first position whose LLR is missing or fails to cover `[x..y]`: no
//! position further left can cover the interval after that.

use crate::error::Result;
use crate::query::{LrAnswer, LrEngine, QueryInterval, Span};
use crate::suffix::SuffixStructures;
use crate::text::Text;

/// Leftmost longest repeat covering `q`.
pub fn scan_leftmost_lr(q: QueryInterval, ss: &SuffixStructures) -> Result<LrAnswer> {
    q.validate(ss.len())?;
    let mut best: Option<Span> = None;
    for i in (1..=q.x).rev() {
        let len = ss.llr_len(i);
        if len == 0 || i + len - 1 < q.y {
            break;
        }
        // `>=` moves ties to the smaller start.
        if best.is_none_or(|b| len >= b.len()) {
            best = Some(Span::new(i, i + len - 1));
        }
    }
    Ok(LrAnswer::from_spans(best.into_iter().collect()))
}

/// Every longest repeat covering `q`: one pass for the length, one pass to
/// collect the spans of that length.
pub fn scan_all_lr(q: QueryInterval, ss: &SuffixStructures) -> Result<LrAnswer> {
    q.validate(ss.len())?;
    let covering = || {
        (1..=q.x)
            .rev()
            .map(|i| (i, ss.llr_len(i)))
            .take_while(|&(i, len)| len > 0 && i + len > q.y)
    };
    let length = covering().map(|(_, len)| len).max().unwrap_or(0);
    if length == 0 {
        return Ok(LrAnswer::none());
    }
    let spans = covering()
        .filter(|&(_, len)| len == length)
        .map(|(i, len)| Span::new(i, i + len - 1))
        .collect();
    Ok(LrAnswer::from_spans(spans))
}

/// Suffix structures plus the scan algorithms, usable wherever an
/// [`LrEngine`] is expected.
#[derive(Debug, Clone)]
pub struct ScanEngine {
    ss: SuffixStructures,
}

impl ScanEngine {
    pub fn new(ss: SuffixStructures) -> Self {
        ScanEngine { ss }
    }

    pub fn build(text: &Text) -> Self {
        ScanEngine::new(SuffixStructures::build(text))
    }

    pub fn structures(&self) -> &SuffixStructures {
        &self.ss
    }
}

impl LrEngine for ScanEngine {
    fn text_len(&self) -> usize {
        self.ss.len()
    }

    fn query_one(&self, q: QueryInterval) -> Result<LrAnswer> {
        scan_leftmost_lr(q, &self.ss)
    }

    fn query_all(&self, q: QueryInterval) -> Result<LrAnswer> {
        scan_all_lr(q, &self.ss)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use proptest::prelude::*;

    fn engine(s: &[u8]) -> ScanEngine {
        ScanEngine::build(&Text::new(s.to_vec(), "t").unwrap())
    }

    fn spans(a: &LrAnswer) -> Vec<(usize, usize)> {
        a.spans.iter().map(|s| (s.start, s.end)).collect()
    }

    #[test]
    fn leftmost_examples() {
        let e = engine(b"abcabcddbca");
        assert_eq!(spans(&e.query_one(QueryInterval::new(2, 3)).unwrap()), vec![(1, 3)]);

        let e = engine(b"aaaabaaaa");
        let a = e.query_one(QueryInterval::new(3, 4)).unwrap();
        assert_eq!(spans(&a), vec![(1, 4)]);
        assert_eq!(a.length, 4);

        let e = engine(b"mississippi");
        assert!(e.query_one(QueryInterval::point(1)).unwrap().is_empty());
    }

    #[test]
    fn all_examples() {
        let e = engine(b"abcabcddbca");
        assert_eq!(
            spans(&e.query_all(QueryInterval::new(2, 3)).unwrap()),
            vec![(1, 3), (2, 4)]
        );

        let e = engine(b"aaababaabaaabaaab");
        let a = e.query_all(QueryInterval::new(11, 12)).unwrap();
        assert_eq!(spans(&a), vec![(7, 13), (11, 17)]);
        assert_eq!(a.length, 7);

        let e = engine(b"abcd");
        assert!(e.query_all(QueryInterval::point(2)).unwrap().is_empty());
    }

    #[test]
    fn invalid_intervals() {
        let e = engine(b"abcd");
        for (x, y) in [(0, 1), (3, 2), (1, 5)] {
            assert!(matches!(
                e.query_all(QueryInterval::new(x, y)),
                Err(Error::InvalidInterval { .. })
            ));
            assert!(matches!(
                e.query_one(QueryInterval::new(x, y)),
                Err(Error::InvalidInterval { .. })
            ));
        }
    }

    proptest! {
        /// Once the leftward walk meets a missing or non-covering LLR, no
        /// position further left covers the interval.
        #[test]
        fn early_stop_is_safe(
            s in proptest::collection::vec(0u8..3, 1..100),
            a in 0usize..100, d in 0usize..8,
        ) {
            let ss = SuffixStructures::build(&Text::new(s.clone(), "t").unwrap());
            let n = s.len();
            let x = a % n + 1;
            let y = (x + d).min(n);
            let covers = |i: usize| {
                let len = ss.llr_len(i);
                len > 0 && i + len > y
            };
            if let Some(stop) = (1..=x).rev().find(|&i| !covers(i)) {
                for i in 1..stop {
                    prop_assert!(!covers(i), "position {} covers after stop at {}", i, stop);
                }
            }
        }

        #[test]
        fn leftmost_is_first_of_all(
            s in proptest::collection::vec(0u8..4, 1..100),
            a in 0usize..100, d in 0usize..8,
        ) {
            let e = ScanEngine::build(&Text::new(s.clone(), "t").unwrap());
            let n = s.len();
            let x = a % n + 1;
            let q = QueryInterval::new(x, (x + d).min(n));
            let one = e.query_one(q).unwrap();
            let all = e.query_all(q).unwrap();
            prop_assert_eq!(one.leftmost(), all.leftmost());
            prop_assert_eq!(one.length, all.length);
        }
    }
}

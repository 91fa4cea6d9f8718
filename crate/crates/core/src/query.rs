//! Query and answer types shared by every engine.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::llr::LlrEntry;

/// A position interval `[x..y]`, 1-based. A point query has `x == y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QueryInterval {
    pub x: usize,
    pub y: usize,
}

impl QueryInterval {
    pub fn new(x: usize, y: usize) -> Self {
        QueryInterval { x, y }
    }

    pub fn point(x: usize) -> Self {
        QueryInterval { x, y: x }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if self.x < 1 || self.x > self.y || self.y > n {
            return Err(Error::InvalidInterval {
                x: self.x,
                y: self.y,
                n,
            });
        }
        Ok(())
    }
}

/// A 1-based inclusive span of the text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end < self.start
    }
}

impl From<LlrEntry> for Span {
    fn from(e: LlrEntry) -> Self {
        Span::new(e.start(), e.end())
    }
}

/// All (or one) longest repeats covering a query interval. An empty span
/// list means no repeat covers the interval.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LrAnswer {
    pub spans: Vec<Span>,
    pub length: usize,
}

impl LrAnswer {
    pub fn none() -> Self {
        LrAnswer::default()
    }

    /// Sorts and deduplicates the spans. All spans must share one length.
    pub fn from_spans(mut spans: Vec<Span>) -> Self {
        spans.sort_unstable();
        spans.dedup();
        let length = spans.first().map_or(0, Span::len);
        debug_assert!(spans.iter().all(|s| s.len() == length));
        LrAnswer { spans, length }
    }

    pub fn is_empty(&self) -> bool {
        self.spans.is_empty()
    }

    pub fn occ(&self) -> usize {
        self.spans.len()
    }

    pub fn leftmost(&self) -> Option<Span> {
        self.spans.first().copied()
    }

    /// Tab-separated `start end length` lines; nonexistence is the single
    /// line `-1 -1 0`.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        self.write_lines(&mut out);
        out
    }

    pub fn write_lines(&self, out: &mut String) {
        if self.spans.is_empty() {
            out.push_str("-1\t-1\t0\n");
            return;
        }
        for s in &self.spans {
            let _ = writeln!(out, "{}\t{}\t{}", s.start, s.end, s.len());
        }
    }
}

/// Anything that can answer longest-repeat stabbing queries.
pub trait LrEngine {
    fn text_len(&self) -> usize;

    /// One longest repeat covering the interval, the leftmost when there
    /// are several.
    fn query_one(&self, q: QueryInterval) -> Result<LrAnswer>;

    /// Every longest repeat covering the interval, by ascending start.
    fn query_all(&self, q: QueryInterval) -> Result<LrAnswer>;
}

/// Parses a batch of queries, one `x y` pair per line. Blank lines and
/// lines starting with `#` are skipped. Bounds are not checked here.
pub fn parse_query_batch(input: &str) -> Result<Vec<QueryInterval>> {
    let mut out = Vec::new();
    for (lineno, line) in input.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let parse = |f: Option<&str>| -> Result<usize> {
            f.and_then(|v| v.parse().ok()).ok_or_else(|| {
                Error::Format(format!("line {}: expected two positions", lineno + 1))
            })
        };
        let x = parse(fields.next())?;
        let y = parse(fields.next())?;
        if fields.next().is_some() {
            return Err(Error::Format(format!(
                "line {}: trailing fields",
                lineno + 1
            )));
        }
        out.push(QueryInterval::new(x, y));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_validation() {
        assert!(QueryInterval::new(1, 1).validate(1).is_ok());
        assert!(QueryInterval::new(0, 1).validate(4).is_err());
        assert!(QueryInterval::new(3, 2).validate(4).is_err());
        assert!(QueryInterval::new(2, 5).validate(4).is_err());
    }

    #[test]
    fn answer_lines() {
        let a = LrAnswer::from_spans(vec![Span::new(11, 17), Span::new(7, 13)]);
        assert_eq!(a.length, 7);
        assert_eq!(a.to_lines(), "7\t13\t7\n11\t17\t7\n");
        assert_eq!(LrAnswer::none().to_lines(), "-1\t-1\t0\n");
    }

    #[test]
    fn batch_parsing() {
        let q = parse_query_batch("# header\n1 2\n\n  3\t3  \n").unwrap();
        assert_eq!(q, vec![QueryInterval::new(1, 2), QueryInterval::new(3, 3)]);
        assert!(parse_query_batch("1\n").is_err());
        assert!(parse_query_batch("1 2 3\n").is_err());
        assert!(parse_query_batch("-1 2\n").is_err());
        assert!(parse_query_batch("a b\n").is_err());
    }
}

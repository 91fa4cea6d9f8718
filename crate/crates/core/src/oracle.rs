//! Brute-force ground truth by naive substring comparison.
//!
//! Nothing here touches suffix arrays or LLR machinery; the point of this
//! module is to stay independent of the indexed engines it checks.

use crate::error::{Error, Result};
use crate::query::{LrAnswer, QueryInterval, Span};
use crate::text::Text;

#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    pub max_n: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_n: 512 }
    }
}

impl OracleConfig {
    fn check(&self, text: &Text) -> Result<()> {
        if text.len() > self.max_n {
            return Err(Error::TextTooLarge {
                n: text.len(),
                max: self.max_n,
            });
        }
        Ok(())
    }
}

/// Whether `S[i..j]` occurs at two or more distinct start positions.
/// Overlapping occurrences count.
pub fn is_repeat(text: &Text, i: usize, j: usize, cfg: &OracleConfig) -> Result<bool> {
    cfg.check(text)?;
    let pat = text.substring(i, j)?;
    let count = text
        .as_bytes()
        .windows(pat.len())
        .filter(|w| *w == pat)
        .take(2)
        .count();
    Ok(count >= 2)
}

/// Enumerates every span `(i, j)` with `i <= x` and `j >= y`, keeps the
/// repeats and returns those of maximal length. Quartic in the worst case;
/// meant for small texts.
pub fn brute_lr_exhaustive(text: &Text, q: QueryInterval, cfg: &OracleConfig) -> Result<LrAnswer> {
    cfg.check(text)?;
    q.validate(text.len())?;
    let mut best = Vec::new();
    let mut best_len = 0;
    for i in 1..=q.x {
        for j in q.y..=text.len() {
            let len = j - i + 1;
            if len < best_len || !is_repeat(text, i, j, cfg)? {
                continue;
            }
            if len > best_len {
                best.clear();
                best_len = len;
            }
            best.push(Span::new(i, j));
        }
    }
    Ok(LrAnswer::from_spans(best))
}

/// Precomputes, for every start position, the longest repeat beginning
/// there by comparing against every other start. Queries then cost O(x).
///
/// A repeat starting at `i` is a prefix of the longest one starting at
/// `i`, so the longest repeat covering `[x..y]` is always one of these
/// per-start maxima.
#[derive(Debug, Clone)]
pub struct Oracle {
    n: usize,
    longest_from: Vec<usize>,
}

impl Oracle {
    pub fn new(text: &Text, cfg: &OracleConfig) -> Result<Self> {
        cfg.check(text)?;
        let s = text.as_bytes();
        let n = s.len();
        let longest_from = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&k| k != i)
                    .map(|k| {
                        s[i..]
                            .iter()
                            .zip(&s[k..])
                            .take_while(|(a, b)| a == b)
                            .count()
                    })
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        Ok(Oracle { n, longest_from })
    }

    pub fn brute_lr(&self, q: QueryInterval) -> Result<LrAnswer> {
        q.validate(self.n)?;
        let mut best = Vec::new();
        let mut best_len = 0;
        for i in 1..=q.x {
            let len = self.longest_from[i - 1];
            if len == 0 || i + len - 1 < q.y || len < best_len {
                continue;
            }
            if len > best_len {
                best.clear();
                best_len = len;
            }
            best.push(Span::new(i, i + len - 1));
        }
        Ok(LrAnswer::from_spans(best))
    }
}

/// Convenience wrapper over [`Oracle`] for a single query.
pub fn brute_lr(text: &Text, q: QueryInterval, cfg: &OracleConfig) -> Result<LrAnswer> {
    Oracle::new(text, cfg)?.brute_lr(q)
}

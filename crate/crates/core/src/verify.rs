//! Cross-checks every engine against the brute-force oracle.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dmq_index::DmqIndex;
use crate::error::Result;
use crate::llr::{build_llrc, llr_at};
use crate::oracle::{Oracle, OracleConfig};
use crate::query::{LrAnswer, QueryInterval};
use crate::rmq_index::RmqIndex;
use crate::scan::{scan_all_lr, scan_leftmost_lr};
use crate::suffix::SuffixStructures;
use crate::text::Text;

/// Longest interval length checked besides point queries.
pub const MAX_VERIFY_SPAN: usize = 10;

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub queries: usize,
    /// Description of the first disagreement, if any.
    pub counterexample: Option<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// All intervals `[x..y]` with `y - x + 1 <= max_span`, points included.
pub fn short_intervals(n: usize, max_span: usize) -> Vec<QueryInterval> {
    let mut out = Vec::new();
    for x in 1..=n {
        for y in x..=(x + max_span - 1).min(n) {
            out.push(QueryInterval::new(x, y));
        }
    }
    out
}

/// Every engine built over one text, plus the oracle.
pub struct EngineSet {
    pub ss: SuffixStructures,
    pub rmq: RmqIndex,
    pub dmq: DmqIndex,
    pub oracle: Oracle,
}

impl EngineSet {
    pub fn build(text: &Text, cfg: &OracleConfig) -> Result<Self> {
        let oracle = Oracle::new(text, cfg)?;
        let ss = SuffixStructures::build(text);
        let rmq = RmqIndex::build(text);
        let dmq = DmqIndex::build(text);
        Ok(EngineSet {
            ss,
            rmq,
            dmq,
            oracle,
        })
    }

    /// Checks one query across all engines. Returns a description of the
    /// first violated property.
    pub fn check(&self, q: QueryInterval) -> Result<Option<String>> {
        let want = self.oracle.brute_lr(q)?;
        let scan_all = scan_all_lr(q, &self.ss)?;
        let scan_one = scan_leftmost_lr(q, &self.ss)?;
        let (rmq_all, rmq_calls) = self.rmq.query_all_counted(q)?;
        let (rmq_one, _) = self.rmq.query_one_counted(q)?;
        let (dmq_all, dmq_calls) = self.dmq.query_all_counted(q)?;
        let (dmq_one, _) = self.dmq.query_one_counted(q)?;

        let mismatch = |name: &str, got: &LrAnswer| {
            Some(format!(
                "[{}..{}] {name}: got {:?}, oracle {:?}",
                q.x, q.y, got.spans, want.spans
            ))
        };
        for (name, got) in [
            ("scan_all", &scan_all),
            ("rmq_all", &rmq_all),
            ("dmq_all", &dmq_all),
        ] {
            if *got != want {
                return Ok(mismatch(name, got));
            }
        }
        for (name, got) in [
            ("scan_one", &scan_one),
            ("rmq_one", &rmq_one),
            ("dmq_one", &dmq_one),
        ] {
            if got.spans != want.spans.iter().copied().take(1).collect::<Vec<_>>() {
                return Ok(mismatch(name, got));
            }
        }
        let bound = 2 * want.occ() + 1;
        if rmq_calls > bound || dmq_calls > bound {
            return Ok(Some(format!(
                "[{}..{}] call bound exceeded: rmq {rmq_calls}, dmq {dmq_calls}, occ {}",
                q.x,
                q.y,
                want.occ()
            )));
        }
        let llrc = self.rmq.llrc().entries();
        for s in &rmq_all.spans {
            if !llrc.iter().any(|e| e.start() == s.start && e.end() == s.end) {
                return Ok(Some(format!(
                    "[{}..{}] answer ({}, {}) is not an LLRc entry",
                    q.x, q.y, s.start, s.end
                )));
            }
        }
        Ok(None)
    }
}

/// Structural properties of the LLR machinery on one text: the LLRc is a
/// strict staircase and neighbouring LLR lengths differ by at most one
/// downward step.
pub fn check_structure(ss: &SuffixStructures) -> Option<String> {
    let llrc = build_llrc(ss);
    for (k, w) in llrc.entries().windows(2).enumerate() {
        if !(w[0].start() < w[1].start() && w[0].end() < w[1].end()) {
            return Some(format!("LLRc entries {} and {} are not increasing", k + 1, k + 2));
        }
    }
    for i in 1..ss.len() {
        if let (Some(a), Some(b)) = (llr_at(i, ss), llr_at(i + 1, ss)) {
            if a.weight() > b.weight() + 1 {
                return Some(format!("|llr_{i}| = {} > |llr_{}| + 1", a.weight(), i + 1));
            }
        }
    }
    None
}

/// Verifies a text. Without `sample`, checks every point query and every
/// interval of up to [`MAX_VERIFY_SPAN`] positions. With `sample`, checks a
/// seeded random subset of that many intervals and lifts the oracle's size
/// limit.
pub fn verify_text(
    text: &Text,
    cfg: &OracleConfig,
    sample: Option<(usize, u64)>,
) -> Result<VerifyReport> {
    let cfg = match sample {
        Some(_) => OracleConfig {
            max_n: cfg.max_n.max(text.len()),
        },
        None => *cfg,
    };
    let engines = EngineSet::build(text, &cfg)?;
    let mut queries = short_intervals(text.len(), MAX_VERIFY_SPAN);
    if let Some((count, seed)) = sample {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        queries.shuffle(&mut rng);
        queries.truncate(count);
    }
    let mut report = VerifyReport::default();
    if let Some(msg) = check_structure(&engines.ss) {
        report.counterexample = Some(msg);
        return Ok(report);
    }
    for q in queries {
        report.queries += 1;
        if let Some(msg) = engines.check(q)? {
            report.counterexample = Some(msg);
            break;
        }
    }
    Ok(report)
}

//! Reduced-scale timing of index construction and queries.

use std::hint::black_box;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dmq_index::DmqIndex;
use crate::error::{Error, Result};
use crate::llr::build_llrc;
use crate::query::{LrEngine, QueryInterval};
use crate::rmq_index::{BuildTimings, RmqIndex};
use crate::scan::ScanEngine;
use crate::suffix::SuffixStructures;
use crate::text::Text;

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Rmq,
    Dmq,
    Scan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    One,
    All,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub query_count: usize,
    /// Interval size; 1 means point queries.
    pub delta: usize,
    pub mode: Mode,
    pub engine: Engine,
    pub seed: u64,
    /// Query every one of the `n - delta + 1` intervals in order instead
    /// of sampling `query_count` of them.
    pub sweep: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            query_count: 1_000_000,
            delta: 1,
            mode: Mode::One,
            engine: Engine::Rmq,
            seed: DEFAULT_SEED,
            sweep: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub n: usize,
    pub build: BuildTimings,
    /// Sum of the heap sizes of the structures the engine keeps.
    pub footprint_bytes: usize,
    pub queries: usize,
    pub total_occ: usize,
    pub query_time: Duration,
}

impl BenchReport {
    pub fn per_query(&self) -> Duration {
        if self.queries == 0 {
            Duration::ZERO
        } else {
            self.query_time / self.queries as u32
        }
    }
}

/// Seeded random text over `alphabet`.
pub fn random_text(len: usize, alphabet: &[u8], seed: u64) -> Text {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bytes = (0..len)
        .map(|_| alphabet[rng.gen_range(0..alphabet.len())])
        .collect();
    Text::new(bytes, format!("random-{len}-{seed}")).expect("non-empty random text")
}

/// The query sequence for a configuration: either the full sweep or
/// `query_count` intervals drawn uniformly from the `n - delta + 1`
/// possible ones.
pub fn bench_queries(n: usize, cfg: &BenchConfig) -> Result<Vec<QueryInterval>> {
    if cfg.delta < 1 || cfg.delta > n {
        return Err(Error::InvalidInterval {
            x: 1,
            y: cfg.delta,
            n,
        });
    }
    let last = n - cfg.delta + 1;
    let starts: Vec<usize> = if cfg.sweep {
        (1..=last).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        (0..cfg.query_count)
            .map(|_| rng.gen_range(1..=last))
            .collect()
    };
    Ok(starts
        .into_iter()
        .map(|x| QueryInterval::new(x, x + cfg.delta - 1))
        .collect())
}

/// Runs `queries` against an engine and returns (elapsed, total spans).
pub fn time_queries<E: LrEngine + ?Sized>(
    engine: &E,
    queries: &[QueryInterval],
    mode: Mode,
) -> Result<(Duration, usize)> {
    let mut occ = 0usize;
    let start = Instant::now();
    for &q in queries {
        let a = match mode {
            Mode::One => engine.query_one(q)?,
            Mode::All => engine.query_all(q)?,
        };
        occ += black_box(a).occ();
    }
    Ok((start.elapsed(), occ))
}

pub fn run_bench(text: &Text, cfg: &BenchConfig) -> Result<BenchReport> {
    let queries = bench_queries(text.len(), cfg)?;
    let (engine, build, footprint_bytes): (Box<dyn LrEngine>, BuildTimings, usize) = match cfg
        .engine
    {
        Engine::Rmq => {
            let (idx, t) = RmqIndex::build_timed(text);
            let bytes = idx.heap_bytes();
            (Box::new(idx), t, bytes)
        }
        Engine::Dmq => {
            let mut t = BuildTimings::default();
            let now = Instant::now();
            let ss = SuffixStructures::build(text);
            t.suffix = now.elapsed();
            let now = Instant::now();
            let llrc = build_llrc(&ss);
            t.llrc = now.elapsed();
            let now = Instant::now();
            let idx = DmqIndex::new(llrc, text.len());
            t.range_max = now.elapsed();
            let bytes = idx.heap_bytes();
            (Box::new(idx), t, bytes)
        }
        Engine::Scan => {
            let now = Instant::now();
            let eng = ScanEngine::build(text);
            let t = BuildTimings {
                suffix: now.elapsed(),
                ..Default::default()
            };
            let bytes = eng.structures().heap_bytes();
            (Box::new(eng), t, bytes)
        }
    };
    let (query_time, total_occ) = time_queries(engine.as_ref(), &queries, cfg.mode)?;
    Ok(BenchReport {
        n: text.len(),
        build,
        footprint_bytes: footprint_bytes + text.len(),
        queries: queries.len(),
        total_occ,
        query_time,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn queries_are_deterministic_and_in_range() {
        let cfg = BenchConfig {
            query_count: 500,
            delta: 5,
            ..Default::default()
        };
        let a = bench_queries(50, &cfg).unwrap();
        let b = bench_queries(50, &cfg).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|q| q.x >= 1 && q.y == q.x + 4 && q.y <= 50));

        let sweep = BenchConfig {
            sweep: true,
            delta: 30,
            ..Default::default()
        };
        assert_eq!(bench_queries(100, &sweep).unwrap().len(), 71);
        assert!(bench_queries(10, &sweep).is_err());
    }

    #[test]
    fn random_text_is_seeded() {
        assert_eq!(random_text(64, b"ACGT", 3), random_text(64, b"ACGT", 3));
        assert_ne!(random_text(64, b"ACGT", 3), random_text(64, b"ACGT", 4));
    }

    #[test]
    fn engines_report_the_same_occ() {
        let t = random_text(2000, b"ACGT", 11);
        let mut totals = Vec::new();
        for engine in [Engine::Rmq, Engine::Dmq, Engine::Scan] {
            let cfg = BenchConfig {
                query_count: 300,
                delta: 3,
                mode: Mode::All,
                engine,
                ..Default::default()
            };
            let r = run_bench(&t, &cfg).unwrap();
            assert_eq!(r.queries, 300);
            totals.push(r.total_occ);
        }
        assert!(totals.windows(2).all(|w| w[0] == w[1]));
    }
}

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use lrstab::bench::{self, BenchConfig};
use lrstab::oracle::OracleConfig;
use lrstab::verify::verify_text;
use lrstab::{
    load_text, parse_query_batch, DmqIndex, IndexFile, LrEngine, QueryInterval, RmqIndex,
    ScanEngine, TextFormat,
};

#[derive(Parser)]
#[command(name = "lrstab", version, about = "Longest-repeat stabbing queries over a text")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Fasta,
}

impl From<Format> for TextFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Plain => TextFormat::Plain,
            Format::Fasta => TextFormat::Fasta,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum IndexEngine {
    Rmq,
    Dmq,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchEngine {
    Rmq,
    Dmq,
    Scan,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchMode {
    One,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Build an index and write it to disk.
    Build {
        text: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        /// Omit the text checksum from the index file.
        #[arg(long)]
        no_checksum: bool,
    },
    /// Query a saved index.
    Query {
        index: PathBuf,
        x: Option<usize>,
        y: Option<usize>,
        /// Report every longest repeat instead of the leftmost one.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value = "rmq")]
        engine: IndexEngine,
        /// File with one "x y" pair per line.
        #[arg(long, conflicts_with_all = ["x", "y"])]
        queries: Option<PathBuf>,
    },
    /// Answer one query without an index.
    Scan {
        text: PathBuf,
        x: usize,
        y: usize,
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Compare every engine against the brute-force oracle.
    Verify {
        text: PathBuf,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        #[arg(long, default_value_t = 512)]
        max_n: usize,
        /// Check only this many randomly chosen intervals.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, env = "LRSTAB_SEED", default_value_t = bench::DEFAULT_SEED)]
        seed: u64,
    },
    /// Time index construction and queries.
    Bench {
        /// Text file; omit to use a random DNA text of --random-len bytes.
        text: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        #[arg(long, default_value_t = 1 << 20)]
        random_len: usize,
        #[arg(long, default_value_t = 1_000_000)]
        queries: usize,
        #[arg(long, default_value_t = 1)]
        delta: usize,
        #[arg(long, value_enum, default_value = "one")]
        mode: BenchMode,
        #[arg(long, value_enum, default_value = "rmq")]
        engine: BenchEngine,
        #[arg(long, env = "LRSTAB_SEED", default_value_t = bench::DEFAULT_SEED)]
        seed: u64,
        /// Query all n - delta + 1 intervals instead of sampling.
        #[arg(long)]
        sweep: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            match err.downcast_ref::<lrstab::Error>() {
                Some(lrstab::Error::InvalidInterval { .. }) => ExitCode::from(2),
                Some(lrstab::Error::CorruptIndex(_)) => ExitCode::from(3),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Build {
            text,
            output,
            format,
            no_checksum,
        } => {
            let text = load_text(&text, format.into())?;
            let (index, t) = RmqIndex::build_timed(&text);
            let checksum = (!no_checksum).then(|| text.checksum());
            IndexFile::from_index(&index, text.len(), checksum)
                .save(&output)
                .with_context(|| format!("writing {}", output.display()))?;
            println!("n\t{}", text.len());
            println!("llrc_size\t{}", index.llrc().len());
            println!("suffix_ms\t{:.3}", ms(t.suffix));
            println!("llrc_ms\t{:.3}", ms(t.llrc));
            println!("boundaries_ms\t{:.3}", ms(t.boundaries));
            println!("range_max_ms\t{:.3}", ms(t.range_max));
            println!("total_ms\t{:.3}", ms(t.total()));
        }
        Command::Query {
            index,
            x,
            y,
            all,
            engine,
            queries,
        } => {
            let file = IndexFile::load(&index)?;
            let n = file.n;
            let engine: Box<dyn LrEngine + Sync> = match engine {
                IndexEngine::Rmq => Box::new(file.into_index()),
                IndexEngine::Dmq => Box::new(DmqIndex::new(file.llrc, n)),
            };
            let out = match (queries, x, y) {
                (Some(path), _, _) => {
                    let input = fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    let batch = parse_query_batch(&input)?;
                    let blocks: Vec<String> = batch
                        .par_iter()
                        .map(|&q| {
                            let mut s = format!("# {}\t{}\n", q.x, q.y);
                            answer(engine.as_ref(), q, all)?.write_lines(&mut s);
                            Ok(s)
                        })
                        .collect::<lrstab::Result<_>>()?;
                    blocks.concat()
                }
                (None, Some(x), Some(y)) => {
                    answer(engine.as_ref(), QueryInterval::new(x, y), all)?.to_lines()
                }
                _ => bail!("give either X Y or --queries FILE"),
            };
            io::stdout().write_all(out.as_bytes())?;
        }
        Command::Scan {
            text,
            x,
            y,
            all,
            format,
        } => {
            let text = load_text(&text, format.into())?;
            let engine = ScanEngine::build(&text);
            let a = answer(&engine, QueryInterval::new(x, y), all)?;
            io::stdout().write_all(a.to_lines().as_bytes())?;
        }
        Command::Verify {
            text,
            format,
            max_n,
            sample,
            seed,
        } => {
            let text = load_text(&text, format.into())?;
            let cfg = OracleConfig { max_n };
            let report = verify_text(&text, &cfg, sample.map(|k| (k, seed)))?;
            match report.counterexample {
                None => println!("PASS\t{} queries", report.queries),
                Some(msg) => {
                    println!("FAIL\t{msg}");
                    return Ok(ExitCode::from(1));
                }
            }
        }
        Command::Bench {
            text,
            format,
            random_len,
            queries,
            delta,
            mode,
            engine,
            seed,
            sweep,
        } => {
            let text = match text {
                Some(p) => load_text(&p, format.into())?,
                None => bench::random_text(random_len, b"ACGT", seed),
            };
            let cfg = BenchConfig {
                query_count: queries,
                delta,
                mode: match mode {
                    BenchMode::One => bench::Mode::One,
                    BenchMode::All => bench::Mode::All,
                },
                engine: match engine {
                    BenchEngine::Rmq => bench::Engine::Rmq,
                    BenchEngine::Dmq => bench::Engine::Dmq,
                    BenchEngine::Scan => bench::Engine::Scan,
                },
                seed,
                sweep,
            };
            let r = bench::run_bench(&text, &cfg)?;
            println!("n\t{}", r.n);
            println!("suffix_ms\t{:.3}", ms(r.build.suffix));
            println!("llrc_ms\t{:.3}", ms(r.build.llrc));
            println!("boundaries_ms\t{:.3}", ms(r.build.boundaries));
            println!("range_max_ms\t{:.3}", ms(r.build.range_max));
            println!("build_ms\t{:.3}", ms(r.build.total()));
            println!("footprint_bytes\t{}", r.footprint_bytes);
            println!("queries\t{}", r.queries);
            println!("total_occ\t{}", r.total_occ);
            println!("query_ms\t{:.3}", ms(r.query_time));
            println!("per_query_ns\t{:.1}", r.per_query().as_secs_f64() * 1e9);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn answer<E: LrEngine + ?Sized>(
    engine: &E,
    q: QueryInterval,
    all: bool,
) -> lrstab::Result<lrstab::LrAnswer> {
    if all {
        engine.query_all(q)
    } else {
        engine.query_one(q)
    }
}

fn ms(d: std::time::Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

//! Longest-repeat stabbing queries.
//!
//! Given a text `S[1..n]` and a position interval `[x..y]`, find the
//! longest substrings that occur at least twice in `S` and cover every
//! position of the interval. [`RmqIndex`] answers in O(1) time for one
//! answer and O(occ) for all of them after linear-time construction;
//! [`DmqIndex`] and the index-free [`scan`] functions are alternative
//! engines, and [`oracle`] is a brute-force reference.
//!
//! ```
//! use lrstab::{LrEngine, QueryInterval, RmqIndex, Text};
//!
//! let text = Text::new(b"aaababaabaaabaaab".to_vec(), "example").unwrap();
//! let index = RmqIndex::build(&text);
//! let all = index.query_all(QueryInterval::new(11, 12)).unwrap();
//! assert_eq!(all.length, 7);
//! assert_eq!(all.occ(), 2);
//! ```

pub mod bench;
pub mod boundary;
pub mod dmq_index;
pub mod error;
pub mod index_file;
pub mod llr;
pub mod oracle;
pub mod query;
pub mod range_max;
pub mod rmq_index;
pub mod scan;
pub mod suffix;
pub mod text;
pub mod verify;

pub use boundary::{build_boundaries, Boundaries};
pub use dmq_index::DmqIndex;
pub use error::{Error, Result};
pub use index_file::IndexFile;
pub use llr::{build_llrc, llr_at, LlrEntry, LlrcArray};
pub use query::{parse_query_batch, LrAnswer, LrEngine, QueryInterval, Span};
pub use rmq_index::{BuildTimings, RmqIndex};
pub use scan::{scan_all_lr, scan_leftmost_lr, ScanEngine};
pub use suffix::SuffixStructures;
pub use text::{load_text, parse_text, Text, TextFormat};

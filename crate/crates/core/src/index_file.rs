//! On-disk index format.
//!
//! ```text
//! magic       8 bytes   "LRSTAB01"
//! version     u32       1
//! n           u64       text length
//! llrc_size   u64
//! llrc        llrc_size x (start u64, end u64)
//! L           n x i64   (-1 = none)
//! R           n x i64   (-1 = none)
//! checksum    u64       optional, FNV-1a of the text
//! ```
//!
//! Little-endian throughout, positions and indices 1-based. The range-max
//! structure is rebuilt on load.

use std::fs;
use std::path::Path;

use crate::boundary::{build_boundaries, Boundaries};
use crate::error::{Error, Result};
use crate::llr::{LlrEntry, LlrcArray};
use crate::rmq_index::RmqIndex;
use crate::text::MAX_TEXT_LEN;

pub const MAGIC: &[u8; 8] = b"LRSTAB01";
pub const VERSION: u32 = 1;
const HEADER_LEN: usize = 8 + 4 + 8 + 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexFile {
    pub n: usize,
    pub llrc: LlrcArray,
    pub boundaries: Boundaries,
    pub checksum: Option<u64>,
}

impl IndexFile {
    pub fn from_index(index: &RmqIndex, n: usize, checksum: Option<u64>) -> Self {
        IndexFile {
            n,
            llrc: index.llrc().clone(),
            boundaries: index.boundaries().clone(),
            checksum,
        }
    }

    pub fn into_index(self) -> RmqIndex {
        RmqIndex::from_parts(self.llrc, self.boundaries, self.n)
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let size = self.llrc.len();
        let mut out = Vec::with_capacity(HEADER_LEN + 16 * size + 16 * self.n + 8);
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&VERSION.to_le_bytes());
        out.extend_from_slice(&(self.n as u64).to_le_bytes());
        out.extend_from_slice(&(size as u64).to_le_bytes());
        for e in self.llrc.entries() {
            out.extend_from_slice(&(e.start() as u64).to_le_bytes());
            out.extend_from_slice(&(e.end() as u64).to_le_bytes());
        }
        for v in self.boundaries.left_array() {
            out.extend_from_slice(&(v as i64).to_le_bytes());
        }
        for v in self.boundaries.right_array() {
            out.extend_from_slice(&(v as i64).to_le_bytes());
        }
        if let Some(c) = self.checksum {
            out.extend_from_slice(&c.to_le_bytes());
        }
        out
    }

    /// Decodes and fully validates an index. The stored boundary arrays
    /// must equal the ones recomputed from the stored LLRc.
    pub fn from_bytes(data: &[u8]) -> Result<Self> {
        let corrupt = |msg: &str| Error::CorruptIndex(msg.to_string());
        let mut r = Reader { data, pos: 0 };

        if r.take(8).ok_or_else(|| corrupt("truncated header"))? != MAGIC {
            return Err(corrupt("bad magic"));
        }
        let version = r.u32().ok_or_else(|| corrupt("truncated header"))?;
        if version != VERSION {
            return Err(Error::CorruptIndex(format!("unsupported version {version}")));
        }
        let n = r.u64().ok_or_else(|| corrupt("truncated header"))?;
        let size = r.u64().ok_or_else(|| corrupt("truncated header"))?;
        if n == 0 || n > MAX_TEXT_LEN as u64 {
            return Err(Error::CorruptIndex(format!("text length {n} out of range")));
        }
        if size > n {
            return Err(corrupt("more LLRc entries than text positions"));
        }
        let (n, size) = (n as usize, size as usize);
        let body = 16 * size + 16 * n;
        let rest = data.len() - HEADER_LEN;
        if rest != body && rest != body + 8 {
            return Err(corrupt("file length does not match header"));
        }

        let mut entries = Vec::with_capacity(size);
        for _ in 0..size {
            let start = r.u64().ok_or_else(|| corrupt("truncated LLRc"))?;
            let end = r.u64().ok_or_else(|| corrupt("truncated LLRc"))?;
            if start < 1 || start > end || end > n as u64 {
                return Err(corrupt("LLRc entry out of range"));
            }
            entries.push(LlrEntry::new(start as usize, end as usize));
        }
        let llrc = LlrcArray::from_entries(entries)
            .ok_or_else(|| corrupt("LLRc entries are not strictly increasing"))?;

        let mut read_bounds = |what: &str| -> Result<Vec<i32>> {
            (0..n)
                .map(|_| {
                    let v = r.i64().ok_or_else(|| corrupt("truncated boundaries"))?;
                    if v == -1 || (1..=size as i64).contains(&v) {
                        Ok(v as i32)
                    } else {
                        Err(Error::CorruptIndex(format!("{what} value {v} out of range")))
                    }
                })
                .collect()
        };
        let left = read_bounds("L")?;
        let right = read_bounds("R")?;
        let boundaries = Boundaries::from_arrays(&left, &right);
        if boundaries != build_boundaries(&llrc, n) {
            return Err(corrupt("boundary arrays disagree with LLRc"));
        }

        let checksum = if r.remaining() == 8 { r.u64() } else { None };
        Ok(IndexFile {
            n,
            llrc,
            boundaries,
            checksum,
        })
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_bytes())?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_bytes(&fs::read(path)?)
    }
}

struct Reader<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, k: usize) -> Option<&'a [u8]> {
        let s = self.data.get(self.pos..self.pos.checked_add(k)?)?;
        self.pos += k;
        Some(s)
    }

    fn remaining(&self) -> usize {
        self.data.len() - self.pos
    }

    fn u32(&mut self) -> Option<u32> {
        Some(u32::from_le_bytes(self.take(4)?.try_into().ok()?))
    }

    fn u64(&mut self) -> Option<u64> {
        Some(u64::from_le_bytes(self.take(8)?.try_into().ok()?))
    }

    fn i64(&mut self) -> Option<i64> {
        Some(i64::from_le_bytes(self.take(8)?.try_into().ok()?))
    }
}

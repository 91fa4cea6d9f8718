//! Input text loading and 1-based position services.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

/// Largest text length the index supports. Positions are stored as `u32`
/// and boundary indices as `i32`, so every index must fit in `i32`.
pub const MAX_TEXT_LEN: usize = i32::MAX as usize - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TextFormat {
    Plain,
    Fasta,
}

/// An immutable byte string `S[1..n]`.
///
/// All positions accepted and returned by this type are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Text {
    bytes: Vec<u8>,
    source_name: String,
}

impl Text {
    pub fn new(bytes: Vec<u8>, source_name: impl Into<String>) -> Result<Self> {
        if bytes.is_empty() {
            return Err(Error::EmptyText);
        }
        if bytes.len() > MAX_TEXT_LEN {
            return Err(Error::TextTooLarge {
                n: bytes.len(),
                max: MAX_TEXT_LEN,
            });
        }
        Ok(Text {
            bytes,
            source_name: source_name.into(),
        })
    }

    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn source_name(&self) -> &str {
        &self.source_name
    }

    /// `S[i..j]`, inclusive on both ends.
    pub fn substring(&self, i: usize, j: usize) -> Result<&[u8]> {
        let n = self.len();
        if i < 1 || i > j || j > n {
            return Err(Error::InvalidRange { i, j, n });
        }
        Ok(&self.bytes[i - 1..j])
    }

    /// 64-bit FNV-1a digest of the text bytes, stored in index files.
    pub fn checksum(&self) -> u64 {
        fnv1a(&self.bytes)
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Reads a text file in the given format. The file stem becomes the
/// source name.
pub fn load_text(path: impl AsRef<Path>, format: TextFormat) -> Result<Text> {
    let path = path.as_ref();
    let data = fs::read(path)?;
    let name = path.display().to_string();
    parse_text(&data, format, name)
}

pub fn parse_text(data: &[u8], format: TextFormat, name: impl Into<String>) -> Result<Text> {
    let bytes = match format {
        TextFormat::Plain => parse_plain(data),
        TextFormat::Fasta => parse_fasta(data)?,
    };
    Text::new(bytes, name)
}

/// Keeps every byte except one trailing `\n`.
pub fn parse_plain(data: &[u8]) -> Vec<u8> {
    data.strip_suffix(b"\n").unwrap_or(data).to_vec()
}

/// Concatenates the sequence lines of every record. Header lines (starting
/// with `>`) are dropped and all ASCII whitespace is removed. Sequence
/// bytes are kept verbatim, without case folding.
pub fn parse_fasta(data: &[u8]) -> Result<Vec<u8>> {
    let mut seq = Vec::with_capacity(data.len());
    let mut seen_header = false;
    for (lineno, line) in data.split(|&b| b == b'\n').enumerate() {
        if line.first() == Some(&b'>') {
            seen_header = true;
            continue;
        }
        if line.iter().all(u8::is_ascii_whitespace) {
            continue;
        }
        if !seen_header {
            return Err(Error::Format(format!(
                "FASTA sequence data on line {} before any '>' header",
                lineno + 1
            )));
        }
        seq.extend(line.iter().copied().filter(|b| !b.is_ascii_whitespace()));
    }
    if !seen_header {
        return Err(Error::Format("FASTA input has no '>' header".into()));
    }
    Ok(seq)
}

#![no_main]

use libfuzzer_sys::fuzz_target;
use lrstab::{parse_text, TextFormat};

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = parse_text(data, TextFormat::Fasta, "fuzz") {
        assert!(!text.is_empty());
        assert!(text.as_bytes().iter().all(|b| !b.is_ascii_whitespace()));
        assert!(text.len() <= data.len());
    }
});

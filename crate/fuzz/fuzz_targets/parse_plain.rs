#![no_main]

use libfuzzer_sys::fuzz_target;
use lrstab::{parse_text, TextFormat};

fuzz_target!(|data: &[u8]| {
    match parse_text(data, TextFormat::Plain, "fuzz") {
        Ok(text) => {
            let stripped = data.strip_suffix(b"\n").unwrap_or(data);
            assert_eq!(text.as_bytes(), stripped);
        }
        Err(_) => assert!(data.is_empty() || data == b"\n"),
    }
});

#![no_main]

use libfuzzer_sys::fuzz_target;
use lrstab::parse_query_batch;

fuzz_target!(|data: &str| {
    if let Ok(queries) = parse_query_batch(data) {
        let lines = data
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .count();
        assert_eq!(queries.len(), lines);
    }
});

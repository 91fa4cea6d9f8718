#![no_main]

use libfuzzer_sys::fuzz_target;
use lrstab::{IndexFile, LrEngine, QueryInterval};

fuzz_target!(|data: &[u8]| {
    let Ok(file) = IndexFile::from_bytes(data) else {
        return;
    };
    // Anything that decodes must re-encode to the same bytes and answer
    // queries without panicking.
    assert_eq!(file.to_bytes(), data);
    let n = file.n;
    let index = file.into_index();
    for x in [1, n / 2 + 1, n] {
        let q = QueryInterval::new(x.min(n), n);
        let _ = index.query_all(q).unwrap();
        let _ = index.query_one(QueryInterval::point(x.min(n))).unwrap();
    }
});

#![no_main]

use libfuzzer_sys::fuzz_target;
use lrstab::oracle::OracleConfig;
use lrstab::verify::{short_intervals, EngineSet};
use lrstab::Text;

// Differential target: every engine must agree with the oracle on short
// texts built from the fuzz input.
fuzz_target!(|data: &[u8]| {
    if data.is_empty() || data.len() > 128 {
        return;
    }
    let text = Text::new(data.to_vec(), "fuzz").unwrap();
    let engines = EngineSet::build(&text, &OracleConfig::default()).unwrap();
    for q in short_intervals(text.len(), 4) {
        if let Some(msg) = engines.check(q).unwrap() {
            panic!("{msg}");
        }
    }
});

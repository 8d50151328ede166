#![no_main]

use libfuzzer_sys::fuzz_target;

// Fixture names and parameters come from the command line; building must
// reject bad input with an error, never a panic.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let mut parts = text.split_whitespace();
    let Some(name) = parts.next() else { return };
    let params: Vec<u64> = parts.take(4).filter_map(|p| p.parse().ok()).collect();
    let _ = semitopology::gallery::build(name, &params);
});

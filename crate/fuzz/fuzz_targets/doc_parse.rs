#![no_main]

use libfuzzer_sys::fuzz_target;

// The document loader must never panic, whatever the bytes.
fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = semitopology::doc::load_str(text);
    }
});

#![no_main]

use std::sync::OnceLock;

use libfuzzer_sys::fuzz_target;
use semitopology::{gallery, SemiTopology};

// The point-set expression parser must never panic.
fuzz_target!(|data: &[u8]| {
    static SPACE: OnceLock<SemiTopology> = OnceLock::new();
    let st = SPACE.get_or_init(|| gallery::build("fig2_lower_left", &[]).unwrap());
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = st.parse_set(text);
    }
});

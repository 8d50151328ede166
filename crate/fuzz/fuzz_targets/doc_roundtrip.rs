#![no_main]

use libfuzzer_sys::fuzz_target;
use semitopology::doc;

// Any document that loads must canonicalize to a fixpoint: saving, loading
// and saving again reproduces the same bytes with no warnings.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(loaded) = doc::load_str(text) else { return };
    let canonical = doc::save_string(&loaded.space, loaded.assignment.as_ref());
    let again = doc::load_str(&canonical).expect("canonical document must re-load");
    assert!(again.warnings.is_empty());
    assert_eq!(doc::save_string(&again.space, again.assignment.as_ref()), canonical);
});

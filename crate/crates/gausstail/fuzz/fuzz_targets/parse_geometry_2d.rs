#![no_main]

use libfuzzer_sys::fuzz_target;

// The 2D geometry parser must reject arbitrary input with an error, never
// panic or hang.
fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = gausstail::geometry2d::json::validate_set(text);
    }
});

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(src) = std::str::from_utf8(data) {
        if let Ok(r) = empath_core::trace::TraceRecord::from_json_line(src) {
            let _ = r.to_json_line();
        }
    }
});

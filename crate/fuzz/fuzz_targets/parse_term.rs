#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(src) = std::str::from_utf8(data) {
        if let Ok(t) = empath_core::parser::parse_term(src) {
            assert_eq!(empath_core::parser::parse_term(&t.to_string()).as_ref(), Ok(&t));
        }
    }
});

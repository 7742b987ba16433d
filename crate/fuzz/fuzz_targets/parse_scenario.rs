#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(src) = std::str::from_utf8(data) {
        if let Ok(s) = empath_core::parser::parse_scenario(src) {
            let again = empath_core::parser::parse_scenario(&empath_core::parser::pretty::scenario(&s));
            assert_eq!(again.as_ref(), Ok(&s));
        }
    }
});

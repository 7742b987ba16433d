#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(src) = std::str::from_utf8(data) {
        if let Ok(p) = empath_core::parser::parse_agent(src) {
            let again = empath_core::parser::parse_agent(&empath_core::parser::pretty::agent(&p));
            assert_eq!(again.as_ref(), Ok(&p));
        }
    }
});

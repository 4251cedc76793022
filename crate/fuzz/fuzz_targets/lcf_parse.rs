#![no_main]

use geodex::graph::LcfSpec;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = text.parse::<LcfSpec>() {
        if let Ok(g) = spec.decode() {
            assert_eq!(g.valency(), Some(3));
        }
    }
});

#![no_main]

use geodex::perm::Permutation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&degree, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    if let Ok(p) = Permutation::from_cycles(degree as usize, text) {
        let again = Permutation::from_cycles(degree as usize, &p.to_string()).unwrap();
        assert_eq!(p, again);
    }
});

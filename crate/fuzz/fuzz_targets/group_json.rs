#![no_main]

use geodex::perm::GroupSpec;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(spec) = GroupSpec::parse_json(text) else { return };
    // Schreier-Sims on huge degrees only measures the machine
    if spec.degree > 64 {
        return;
    }
    if let Ok(group) = spec.build() {
        let round = GroupSpec::parse_json(&GroupSpec::from_group(&group).to_json()).unwrap();
        assert_eq!(round.build().unwrap().order(), group.order());
    }
});

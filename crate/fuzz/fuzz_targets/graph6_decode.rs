#![no_main]

use geodex::graph::Graph;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = Graph::from_graph6(text) {
        let again = Graph::from_graph6(&g.to_graph6()).expect("re-encoded graph6 decodes");
        assert_eq!(g, again);
    }
});

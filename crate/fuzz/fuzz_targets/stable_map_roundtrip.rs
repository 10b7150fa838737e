#![no_main]

use hurwitz_core::branch::StableMapGraph;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(graph) = StableMapGraph::from_json(data) {
        let reparsed = StableMapGraph::from_json(&graph.to_json()).expect("own output parses");
        assert_eq!(graph, reparsed);
        assert_eq!(graph.validate(), reparsed.validate());
    }
});

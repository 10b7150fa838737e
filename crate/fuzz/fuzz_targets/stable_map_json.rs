#![no_main]

use hurwitz_core::branch::StableMapGraph;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(graph) = StableMapGraph::from_json(text) else {
        return;
    };
    let violations = graph.validate();
    let _ = graph.arithmetic_genus();
    match graph.evaluate() {
        Ok(report) => {
            assert!(violations.is_empty());
            assert!(report.degree_check, "degree law broken: {report:?}");
            assert!(report.effective, "non-effective divisor: {report:?}");
        }
        Err(_) => assert!(!violations.is_empty()),
    }
});

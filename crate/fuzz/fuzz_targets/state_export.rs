#![no_main]

use deformed_dicke::export::StateExport;
use libfuzzer_sys::fuzz_target;

// Accepted documents decode to a state and re-serialize stably.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(export) = StateExport::from_json(text) {
        let _ = export.exact_state().unwrap();
        let _ = export.numeric_state().unwrap();
        let json = export.to_json().unwrap();
        assert_eq!(StateExport::from_json(&json).unwrap().to_json().unwrap(), json);
    }
});

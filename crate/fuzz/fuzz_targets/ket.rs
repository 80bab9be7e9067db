#![no_main]

use deformed_dicke::hilbert::BasisState;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(b) = text.parse::<BasisState>() {
        assert_eq!(b.to_string().parse::<BasisState>().unwrap(), b);
        assert_eq!(b.to_ascii().parse::<BasisState>().unwrap(), b);
    }
});

#![no_main]

use deformed_dicke::scalar::HScalar;
use libfuzzer_sys::fuzz_target;

// Anything that parses must print to a canonical form that parses back to it.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(x) = text.parse::<HScalar>() {
        let printed = x.to_string();
        assert_eq!(printed.parse::<HScalar>().unwrap(), x, "{printed}");
    }
});

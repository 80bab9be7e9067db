#![no_main]

use deformed_dicke::table::StateTable;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(table) = StateTable::from_csv(text) {
        let again = StateTable::from_csv(&table.to_csv().unwrap()).unwrap();
        assert_eq!(again, table);
    }
});

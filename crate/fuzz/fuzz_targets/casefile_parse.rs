#![no_main]

use libfuzzer_sys::fuzz_target;
use margulis::casefile;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(records) = casefile::parse(text) {
        // whatever parses must survive a write/parse cycle unchanged
        let written = casefile::write(&records);
        let again = casefile::parse(&written).expect("written records parse");
        assert_eq!(again, records);
        assert_eq!(casefile::write(&again), written);
    }
});

#![no_main]

use libfuzzer_sys::fuzz_target;
use margulis::report::Report;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(r) = Report::from_json(text) {
        let json = r.to_json();
        let back = Report::from_json(&json).expect("emitted report parses");
        assert_eq!(back.to_json(), json);
    }
});

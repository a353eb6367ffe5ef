#![no_main]

use libfuzzer_sys::fuzz_target;
use margulis::casefile::{parse_complex, parse_reals8, parse_target};
use margulis::constants::Order;
use margulis::verify::Suite;
use margulis::{Matrix2, MoebiusMap};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(z) = parse_complex(s) {
        assert!(z.is_finite());
    }
    if let Ok(v) = parse_reals8(s) {
        // a parsed matrix is either rejected or normalised to determinant 1
        if let Ok(f) = MoebiusMap::normalize(Matrix2::from_reals(v)) {
            let m = f.matrix();
            assert!((m.det() - 1.0).norm() <= 1e-9 * m.max_abs().powi(2).max(1.0));
        }
    }
    if let Ok(o) = s.parse::<Order>() {
        assert_eq!(o.to_string().parse::<Order>().unwrap(), o);
    }
    let _ = parse_target(s);
    let _ = s.parse::<Suite>();
});

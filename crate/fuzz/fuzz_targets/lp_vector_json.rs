#![no_main]

use fplrs::LpVector;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 1 << 14 {
        return;
    }
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(v) = LpVector::from_json(s) {
        assert_eq!(LpVector::from_json(&v.to_json()).expect("roundtrip"), v);
    }
});

#![no_main]

use fplrs::fpl::PsiTable;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 1 << 14 {
        return;
    }
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(t) = PsiTable::from_json(s) {
        assert_eq!(PsiTable::from_json(&t.to_json()).expect("roundtrip"), t);
    }
});

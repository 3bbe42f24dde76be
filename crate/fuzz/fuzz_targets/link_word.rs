#![no_main]

use fplrs::LinkPattern;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = LinkPattern::from_word(s) {
        assert_eq!(p.to_word(), s);
        assert_eq!(p.rotate(2 * p.n() as i64), p);
        assert_eq!(s.parse::<LinkPattern>().ok(), Some(p));
    }
});

#![no_main]

use fplrs::lattice::BoundaryCondition;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(t) = s.parse::<BoundaryCondition>() {
        let back: BoundaryCondition = t.to_string().parse().expect("display parses");
        assert_eq!(back, t);
        assert_eq!(t.complement().complement(), t);
    }
});

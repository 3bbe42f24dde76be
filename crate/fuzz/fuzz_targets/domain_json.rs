#![no_main]

use fplrs::lattice::Domain;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 1 << 14 {
        return;
    }
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(d) = Domain::from_json(s) {
        let back = Domain::from_json(&d.to_json()).expect("serialized domain parses");
        assert_eq!(back, d);
        assert_eq!(d.boundary_string().total(), 4);
        assert_eq!(d.num_terminations(), 4 * d.num_cells() - 2 * d.num_internal());
    }
});

#![no_main]

// Small enum parsers: pairing sign, vertex type, auxiliary vertex type.
use fplrs::fpl::VertexType;
use fplrs::identities::AuxType;
use fplrs::lattice::Sign;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(x) = s.parse::<Sign>() {
        assert_eq!(x.to_string().parse::<Sign>().ok(), Some(x));
    }
    if let Ok(x) = s.parse::<VertexType>() {
        assert_eq!(x.to_string().parse::<VertexType>().ok(), Some(x));
    }
    if let Ok(x) = s.parse::<AuxType>() {
        assert_eq!(x.to_string().parse::<AuxType>().ok(), Some(x));
    }
});

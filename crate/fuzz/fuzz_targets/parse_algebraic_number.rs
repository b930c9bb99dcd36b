#![no_main]

use libfuzzer_sys::fuzz_target;
use polyrep::AlgebraicNumber;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(a) = AlgebraicNumber::from_json(text) {
        let again = AlgebraicNumber::from_json(&a.to_json()).expect("printed number parses");
        assert_eq!(a, again);
    }
});

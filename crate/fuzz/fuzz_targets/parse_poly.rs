#![no_main]

use libfuzzer_sys::fuzz_target;
use polyrep::poly::parse_poly;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // Anything accepted must print back to an equal polynomial.
    if let Ok(p) = parse_poly(text) {
        let again = parse_poly(&p.to_string()).expect("printed polynomial parses");
        assert_eq!(p, again);
    }
});

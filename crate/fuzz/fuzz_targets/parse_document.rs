#![no_main]

use libfuzzer_sys::fuzz_target;
use polyrep::document::InputDocument;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(doc) = InputDocument::from_toml(text) {
        let _ = doc.to_map();
    }
});

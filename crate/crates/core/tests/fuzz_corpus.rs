//! Replays the checked-in fuzz corpus on the stable toolchain, applying the
//! same checks as the fuzz targets.

use std::fs;
use std::path::PathBuf;

use polyrep::document::InputDocument;
use polyrep::poly::parse_poly;
use polyrep::AlgebraicNumber;

fn corpus(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            let bytes = fs::read(&path).unwrap();
            (path.file_name().unwrap().to_string_lossy().into_owned(), String::from_utf8_lossy(&bytes).into_owned())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn polynomial_seeds_round_trip() {
    let mut accepted = 0;
    for (name, text) in corpus("parse_poly") {
        if let Ok(p) = parse_poly(&text) {
            let again = parse_poly(&p.to_string()).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(p, again, "{name}");
            accepted += 1;
        }
    }
    assert!(accepted >= 3);
}

#[test]
fn document_seeds_never_panic() {
    let mut maps = 0;
    for (_, text) in corpus("parse_document") {
        if let Ok(doc) = InputDocument::from_toml(&text) {
            maps += usize::from(doc.to_map().is_ok());
        }
    }
    assert!(maps >= 3);
}

#[test]
fn algebraic_number_seeds_round_trip() {
    let mut accepted = 0;
    for (name, text) in corpus("parse_algebraic_number") {
        if let Ok(a) = AlgebraicNumber::from_json(&text) {
            let again = AlgebraicNumber::from_json(&a.to_json()).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(a, again, "{name}");
            accepted += 1;
        }
    }
    assert!(accepted >= 2);
}

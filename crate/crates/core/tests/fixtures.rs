use std::path::PathBuf;

use superlie::catalog::{build, export_string, import_str};

fn fixture(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name);
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

#[test]
fn poincare_fixture_matches_catalog() {
    let text = fixture("poincare-1-2.json");
    let built = build("poincare-1-2").unwrap();
    assert_eq!(import_str(&text).unwrap(), built);
    assert_eq!(text.trim_end(), export_string(&built));
}

#[test]
fn tampered_fixture_is_rejected() {
    let text = fixture("poincare-1-2.json").replacen("\"coeff\": \"1\"", "\"coeff\": \"2\"", 1);
    assert!(import_str(&text).is_err());
    assert!(import_str("{\"schema\": 2}").is_err());
}

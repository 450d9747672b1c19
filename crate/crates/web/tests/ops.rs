use qfrac_web::{fraction_coefficients, list_paths, psi_stages};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn touchard_coefficients() {
    let v = parse(fraction_coefficients("touchard", "", "", "", 3).unwrap());
    assert_eq!(v["coefficients"][0], "1");
    assert_eq!(v["coefficients"][1], "1");
    assert_eq!(v["coefficients"][2], "2 + q");
}

#[test]
fn psi_has_five_stages() {
    let v = parse(psi_stages("k=3 lambda=[] arrows=[h2 h3 v1]").unwrap());
    assert_eq!(v.as_array().unwrap().len(), 5);
    assert!(psi_stages("not a config").is_err());
}

#[test]
fn dyck_paths() {
    let v = parse(list_paths("dyck", 3, "one,one").unwrap());
    assert_eq!(v["count"], 5);
    assert!(list_paths("dyck", 40, "one,one").is_err());
}

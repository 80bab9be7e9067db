//! Runs the fuzz-target properties over the checked-in seed corpora.

use std::path::{Path, PathBuf};

use deformed_dicke::export::StateExport;
use deformed_dicke::hilbert::BasisState;
use deformed_dicke::scalar::HScalar;
use deformed_dicke::selector::Selector;
use deformed_dicke::table::StateTable;

fn seeds(target: &str) -> Vec<(PathBuf, String)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<_> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            (p, text)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn scalar_seeds_parse_and_round_trip() {
    for (path, text) in seeds("scalar") {
        let x: HScalar = text.parse().unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(x.to_string().parse::<HScalar>().unwrap(), x);
    }
}

#[test]
fn ket_seeds_parse_and_round_trip() {
    for (path, text) in seeds("ket") {
        let b: BasisState = text.parse().unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(b.to_string().parse::<BasisState>().unwrap(), b);
        assert_eq!(b.to_ascii().parse::<BasisState>().unwrap(), b);
    }
}

#[test]
fn selector_seeds_parse_and_round_trip() {
    for (path, text) in seeds("selector") {
        let s: Selector = text.parse().unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(s.to_string().parse::<Selector>().unwrap(), s);
    }
}

#[test]
fn table_seeds_parse_and_round_trip() {
    for (path, text) in seeds("state_table") {
        let t = StateTable::from_csv(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(StateTable::from_csv(&t.to_csv().unwrap()).unwrap(), t);
    }
}

#[test]
fn export_seeds_parse_and_round_trip() {
    for (path, text) in seeds("state_export") {
        let e = StateExport::from_json(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        e.exact_state().unwrap();
        e.numeric_state().unwrap();
        let json = e.to_json().unwrap();
        assert_eq!(json, text);
        assert_eq!(StateExport::from_json(&json).unwrap().to_json().unwrap(), json);
    }
}

#[test]
fn malformed_inputs_are_errors() {
    for bad in ["", "h^", "sqrt(", "1/0", "((h)", "h^99999999999", "2**h", "sqrt(-2)"] {
        assert!(bad.parse::<HScalar>().is_err(), "{bad:?}");
    }
    for bad in ["", "x", "↑a", "|↑", "↑⟩", "|⟩"] {
        assert!(bad.parse::<BasisState>().is_err(), "{bad:?}");
    }
    assert_eq!("|ud>".parse::<BasisState>().unwrap(), "↑↓".parse().unwrap());
    assert!(StateTable::from_csv("state,↑\nA,1,2\n").is_err());
    assert!(StateExport::from_json("{\"meta\":{}}").is_err());
    assert!(StateExport::from_json("[]").is_err());
}

#[test]
fn loose_scalar_forms_parse() {
    let expected: HScalar = "(1/2)*h + (3/4)*h^2".parse().unwrap();
    assert_eq!("1/2*h + 3/4*h^2".parse::<HScalar>().unwrap(), expected);
    assert!("3*h*h/4".parse::<HScalar>().is_err());
    assert_eq!("h*(1/2) + 3/4*h*h".parse::<HScalar>().unwrap(), expected);
    assert_eq!("-sqrt(1/8)*h".parse::<HScalar>().unwrap(), "(-1/4)*sqrt(2)*h".parse().unwrap());
}

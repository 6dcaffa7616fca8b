use homalg::constructions::{load_octonions, sedenions, twisted_jordan, twisted_octonions};
use homalg::io::{algebra_from_str, load_algebra, save_algebra};
use homalg::repro::{repro_paper, ReproConfig};
use homalg::{Error, HomAlgebra};

fn same(a: &HomAlgebra, b: &HomAlgebra) -> bool {
    a.dim() == b.dim()
        && a.alpha() == b.alpha()
        && a.conjugation() == b.conjugation()
        && a.labels() == b.labels()
        && a.metadata() == b.metadata()
        && (0..a.dim()).all(|i| (0..a.dim()).all(|j| a.basis_product(i, j) == b.basis_product(i, j)))
}

#[test]
fn constructed_algebras_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for (name, h) in [
        ("oct", load_octonions()),
        ("oct-alpha", twisted_octonions()),
        ("sed", sedenions()),
        ("jordan", twisted_jordan()),
    ] {
        let path = dir.path().join(format!("{name}.json"));
        save_algebra(&h, &path).unwrap();
        let back = load_algebra(&path).unwrap();
        assert!(same(&h, &back), "{name}");
    }
}

#[test]
fn loaded_twisted_octonions_stay_multiplicative() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("o.json");
    save_algebra(&twisted_octonions(), &path).unwrap();
    assert!(load_algebra(&path).unwrap().is_multiplicative());
}

#[test]
fn zero_denominator_is_reported() {
    let text = r#"{"format_version": 1, "dim": 1, "structure_constants": [[0, 0, 0, "1/0"]], "alpha": [["1"]]}"#;
    match algebra_from_str(text) {
        Err(e @ Error::ZeroDenominator(_)) => assert_eq!(e.code(), "zero-denominator"),
        other => panic!("expected zero-denominator, got {other:?}"),
    }
}

#[test]
fn unknown_fields_carry_position() {
    let text = "{\"format_version\": 1, \"dim\": 1,\n \"extra\": 3, \"structure_constants\": [], \"alpha\": [[\"1\"]]}";
    let e = algebra_from_str(text).unwrap_err();
    assert!(e.to_string().contains("line 2"), "{e}");
}

#[test]
fn repro_is_deterministic() {
    let cfg = ReproConfig::default();
    let a = repro_paper(Some("oct-"), &cfg).to_jsonl();
    let b = repro_paper(Some("oct-"), &cfg).to_jsonl();
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 4);
}

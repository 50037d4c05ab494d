use std::path::PathBuf;

use abcat::algebra::ar::ar_quiver;
use abcat::io::{emit_dot, AlgebraSpecFile, FieldKind, SpecError};
use abcat::linalg::Q;
use abcat::Error;

fn specs_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../specs")
}

#[test]
fn shipped_specs_are_canonical() {
    let mut seen = 0;
    for entry in std::fs::read_dir(specs_dir()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "toml") {
            let text = std::fs::read_to_string(&path).unwrap();
            let spec = AlgebraSpecFile::parse(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            assert_eq!(spec.emit(), text, "{} is not in canonical form", path.display());
            seen += 1;
        }
    }
    assert!(seen >= 5);
}

#[test]
fn family_spec_builds_the_family() {
    let spec = AlgebraSpecFile::read(&specs_dir().join("family_n2.toml")).unwrap();
    assert_eq!(spec.field, FieldKind::Q);
    let a = spec.build::<Q>().unwrap();
    assert_eq!(a.dim(), 11);
    assert_eq!(a.num_vertices(), 2);
}

#[test]
fn structure_constant_spec_builds() {
    let spec = AlgebraSpecFile::read(&specs_dir().join("a2_structure_constants.toml")).unwrap();
    let a = spec.build::<Q>().unwrap();
    assert_eq!((a.dim(), a.num_vertices(), a.name()), (3, 2, "A2"));
}

fn validation_field(text: &str) -> (String, String) {
    match AlgebraSpecFile::parse(text).unwrap_err() {
        SpecError::Validation { field, constraint } => (field, constraint),
        other => panic!("expected a validation error, got {other:?}"),
    }
}

#[test]
fn validation_errors_name_the_field() {
    let (f, c) = validation_field("kind = \"nakayama\"\nfield = \"Q\"\nshape = \"cyclic\"\nkupisch = [0]\n");
    assert_eq!(f, "kupisch");
    assert!(c.contains("kupisch entries ≥ 1"));
    assert_eq!(validation_field("kind = \"nakayama\"\nfield = \"Q\"\nshape = \"round\"\nkupisch = [2]\n").0, "shape");
    assert_eq!(validation_field("kind = \"nakayama\"\nfield = \"Fp:4\"\nshape = \"linear\"\nkupisch = [1]\n").0, "field");
    assert_eq!(validation_field("kind = \"quiver\"\nfield = \"Q\"\n").0, "kind");
    assert_eq!(validation_field("kind = \"nakayama\"\nfield = \"Q\"\nshape = \"linear\"\n").0, "kupisch");
    assert_eq!(validation_field("kind = \"nakayama\"\nfield = \"Q\"\nshape = \"linear\"\nkupisch = [3, 1]\n").0, "kupisch");
    assert_eq!(
        validation_field("kind = \"structure-constants\"\nfield = \"Q\"\ndim = 2\nlabels = [\"e\"]\nidempotents = [0]\n").0,
        "labels"
    );
    assert_eq!(
        validation_field("kind = \"nakayama\"\nfield = \"Q\"\nshape = \"linear\"\nkupisch = [1]\ndim = 1\n").0,
        "dim"
    );
}

#[test]
fn unknown_keys_are_parse_errors_with_position() {
    let e = AlgebraSpecFile::parse("kind = \"nakayama\"\nfield = \"Q\"\ncolour = 3\n").unwrap_err();
    assert!(matches!(e, SpecError::Parse { line: 3, .. }), "{e:?}");
}

#[test]
fn non_associative_table_names_the_triple() {
    let mut text = String::from(
        "kind = \"structure-constants\"\nfield = \"Q\"\ndim = 4\nlabels = [\"e1\", \"x\", \"y\", \"z\"]\nidempotents = [0]\n",
    );
    for (l, r, t) in [("e1", "e1", "e1"), ("e1", "x", "x"), ("x", "e1", "x"), ("e1", "y", "y"), ("y", "e1", "y"), ("e1", "z", "z"), ("z", "e1", "z"), ("x", "x", "y"), ("y", "x", "z")] {
        text.push_str(&format!("\n[[products]]\nleft = \"{l}\"\nright = \"{r}\"\nterms = [[\"{t}\", \"1\"]]\n"));
    }
    let spec = AlgebraSpecFile::parse(&text).unwrap();
    assert_eq!(spec.emit(), text);
    let err = spec.build::<Q>().unwrap_err();
    assert!(matches!(&err, Error::Validation(m) if m.contains("(x, x, x)")), "{err}");
}

#[test]
fn field_mismatch_is_an_input_error() {
    let spec = AlgebraSpecFile::parse("kind = \"nakayama\"\nfield = \"Fp:7\"\nshape = \"linear\"\nkupisch = [2, 1]\n").unwrap();
    assert!(matches!(spec.build::<Q>(), Err(Error::Input(_))));
}

#[test]
fn dot_of_the_small_family() {
    let spec = AlgebraSpecFile::read(&specs_dir().join("family_n1.toml")).unwrap();
    let q = ar_quiver(&spec.build::<Q>().unwrap()).unwrap();
    let dot = emit_dot(&q, "family");
    assert_eq!(dot.matches("[label=\"[").count(), 7);
    assert_eq!(dot, emit_dot(&q, "family"));
    // every non-projective indecomposable carries one mesh edge
    assert_eq!(dot.matches("dir=none").count(), q.mesh.len());
    assert!(dot.starts_with("digraph \"family\" {"));
}

#[test]
fn dot_of_isolated_vertices() {
    let q = abcat::algebra::ar::Quiver { vertices: vec!["a".into(), "b".into()], arrows: vec![], mesh: vec![] };
    let dot = emit_dot(&q, "g");
    assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 2);
    assert!(!dot.contains("->"));
}

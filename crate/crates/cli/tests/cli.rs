use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, Output};

fn spec(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../specs").join(name).display().to_string()
}

fn abcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abcat")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (serde_json::Value, i32) {
    let mut a = args.to_vec();
    a.extend(["--json", "-"]);
    let o = abcat(&a);
    let v = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (v, o.status.code().unwrap())
}

/// Checks the envelope against the shipped schema's `required`, `const`,
/// `enum` and `additionalProperties` constraints.
fn assert_matches_schema(v: &serde_json::Value) {
    let schema: serde_json::Value = serde_json::from_str(abcat::io::REPORT_SCHEMA).unwrap();
    let obj = v.as_object().expect("report is an object");
    let props = schema["properties"].as_object().unwrap();
    for k in schema["required"].as_array().unwrap() {
        assert!(obj.contains_key(k.as_str().unwrap()), "missing {k}");
    }
    for (k, val) in obj {
        let p = props.get(k).unwrap_or_else(|| panic!("unexpected key {k}"));
        if let Some(c) = p.get("const") {
            assert_eq!(c, val, "{k}");
        }
        if let Some(e) = p.get("enum") {
            assert!(e.as_array().unwrap().contains(val), "{k} = {val}");
        }
        if p.get("type").and_then(|t| t.as_str()) == Some("string") {
            assert!(val.is_string(), "{k}");
        }
    }
}

fn numbers(s: &str) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    let mut cur = String::new();
    for c in s.chars().chain(std::iter::once(' ')) {
        if c.is_ascii_digit() {
            cur.push(c);
        } else if !cur.is_empty() {
            out.insert(std::mem::take(&mut cur));
        }
    }
    out
}

/// Every number in the table rendering also occurs in the JSON rendering.
fn assert_numbers_covered(args: &[&str]) {
    let table = stdout(&abcat(args));
    let (v, _) = json(args);
    let missing: Vec<String> = numbers(&table).difference(&numbers(&v.to_string())).cloned().collect();
    assert!(missing.is_empty(), "{args:?}: {missing:?} only in the table\n{table}");
}

#[test]
fn indec_lists_eleven_modules_for_n_two() {
    let o = abcat(&[&spec("family_n2.toml"), "indec"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with('[')).count(), 11);
}

#[test]
fn singeq_passes_on_the_family() {
    let o = abcat(&[&spec("family_n2.toml"), "singeq", "--T", "[1]_1,[1]_6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("overall: pass"));
}

#[test]
fn singeq_over_a_prime_field() {
    let o = abcat(&[&spec("family_n2_f101.toml"), "singeq", "--T", "[1]_1,[1]_6"]);
    assert_eq!(o.status.code(), Some(0));
    let o = abcat(&[&spec("family_n2.toml"), "--field", "Fp:101", "singeq", "--T", "[1]_1,[1]_6"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn family_report_json_is_valid_and_deterministic() {
    let args = [spec("family_n2.toml"), "family-report".into(), "--n".into(), "2".into()];
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    let (v, code) = json(&args);
    assert_eq!(code, 0);
    assert_matches_schema(&v);
    assert_eq!(v["command"], "family-report");
    assert_eq!(v["payload"]["i3"]["iso_3_9"], true);
    assert_eq!(v["payload"]["mod_bar"]["ig"], false);
    assert_eq!(v["payload"]["perp_bar"]["ig"], false);
    let first = abcat(&[args.as_slice(), &["--json", "-", "--jobs", "1"]].concat()).stdout;
    let second = abcat(&[args.as_slice(), &["--json", "-", "--jobs", "3"]].concat()).stdout;
    assert_eq!(first, second);
    let text = stdout(&abcat(&args));
    assert!(text.contains("discrepancy"));
}

#[test]
fn family_report_rejects_a_mismatched_n() {
    let o = abcat(&[&spec("family_n2.toml"), "family-report", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn table_numbers_appear_in_json() {
    let f1 = spec("family_n1.toml");
    assert_numbers_covered(&[&f1, "indec"]);
    assert_numbers_covered(&[&f1, "hom", "--by", "[1]_1,[1]_4"]);
    assert_numbers_covered(&[&f1, "ext"]);
    assert_numbers_covered(&[&f1, "singeq", "--T", "[1]_1,[1]_4"]);
    assert_numbers_covered(&[&f1, "quotient", "--perp", "[1]_1,[1]_4"]);
    assert_numbers_covered(&[&f1, "resolve", "--perp", "[1]_1,[1]_4", "--functor", "simple:[1]_3"]);
    assert_numbers_covered(&[&f1, "bounds", "--T", "[1]_1,[1]_4"]);
}

#[test]
fn exit_codes() {
    let f2 = spec("family_n2.toml");
    assert_eq!(abcat(&[&f2, "frobnicate"]).status.code(), Some(2));
    assert_eq!(abcat(&[&f2, "indec", "--colour"]).status.code(), Some(2));
    assert_eq!(abcat(&["/nonexistent.toml", "indec"]).status.code(), Some(2));
    assert_eq!(abcat(&[&f2, "cotilting", "--T", "[9]_9"]).status.code(), Some(2));
    assert_eq!(abcat(&[&f2, "cotilting", "--T", "[1]_1"]).status.code(), Some(1));
    assert_eq!(abcat(&[&f2, "cotilting", "--T", "[1]_1,[1]_6"]).status.code(), Some(0));
    let truncated = abcat(&[&f2, "resolve", "--by", "[1]_1,[1]_6", "--functor", "simple:[1]_4", "--cutoff", "2"]);
    assert_eq!(truncated.status.code(), Some(3));
    assert_eq!(abcat(&["--help"]).status.code(), Some(0));
}

#[test]
fn bad_kupisch_reports_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.toml");
    std::fs::write(&p, "kind = \"nakayama\"\nfield = \"Q\"\nshape = \"cyclic\"\nkupisch = [0]\n").unwrap();
    let o = abcat(&[p.to_str().unwrap(), "indec"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("kupisch") && err.contains("kupisch entries ≥ 1"), "{err}");
}

#[test]
fn ar_quiver_dot_files() {
    let dir = tempfile::tempdir().unwrap();
    let full = dir.path().join("ar.dot");
    let o = abcat(&[&spec("family_n1.toml"), "ar-quiver", "--dot", full.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let dot = std::fs::read_to_string(&full).unwrap();
    assert_eq!(dot.matches("[label=\"[").count(), 7);
    assert!(dot.contains("style=dashed, dir=none"));

    let quot = dir.path().join("perp.dot");
    let o = abcat(&[&spec("family_n2.toml"), "ar-quiver", "--perp", "[1]_1,[1]_6", "--dot", quot.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let dot = std::fs::read_to_string(&quot).unwrap();
    for l in ["[1]_2", "[1]_3", "[1]_4", "[1]_5"] {
        assert!(dot.contains(&format!("label=\"{l}\"")), "{dot}");
    }
    assert_eq!(dot.matches("[label=\"[").count(), 4);
}

#[test]
fn check_ab_and_duality() {
    let f1 = spec("family_n1.toml");
    let perp = "[1]_1,[1]_2,[1]_3,[1]_4";
    let o = abcat(&[&f1, "check-ab", "--X", perp, "--omega", "[1]_1,[1]_4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(abcat(&[&f1, "ar-duality"]).status.code(), Some(0));
    assert_eq!(abcat(&[&f1, "injectives-as-ext", "--T", "[1]_1,[1]_4"]).status.code(), Some(0));
    assert_eq!(abcat(&[&spec("gd2_linear.toml"), "bounds", "--stable"]).status.code(), Some(0));
}

#[test]
fn structure_constant_specs_are_refused_where_enumeration_is_needed() {
    let o = abcat(&[&spec("a2_structure_constants.toml"), "indec"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("unsupported"));
}

use std::path::PathBuf;

use voltlift::cli::run;
use voltlift::spectra::{spectra_equal, SpectrumDocument, SpectrumMultiset};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn spectrum_of(doc: &str) -> SpectrumMultiset {
    let doc: SpectrumDocument = serde_json::from_str(doc).unwrap();
    let values: Vec<_> = doc
        .eigenvalues
        .iter()
        .flat_map(|e| std::iter::repeat(num_complex::Complex64::new(e.re, e.im)).take(e.mult))
        .collect();
    assert_eq!(values.len(), doc.order);
    SpectrumMultiset::from_values(&values, 1e-9)
}

#[test]
fn spectrum_text_of_worked_example() {
    let out = run(["spectrum", "--digraph", &data("k2star.json"), "--group", "dihedral:3", "--method", "repr", "--format", "text"]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    assert_eq!(out.stdout.lines().collect::<Vec<_>>(), ["3^1", "1^3", "0^4", "-1^3", "-3^1"]);
}

#[test]
fn spectrum_json_shape() {
    let out = run(["spectrum", "--digraph", &data("k2star.json"), "--group", "dihedral:3"]);
    assert_eq!(out.status, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["order"], 12);
    assert_eq!(v["method"], "repr");
    assert_eq!(v["eigenvalues"][0], serde_json::json!({"re": 3.0, "im": 0.0, "mult": 1}));
    assert_eq!(v["eigenvalues"].as_array().unwrap().len(), 5);
}

#[test]
fn verify_worked_example() {
    let out = run(["verify", "--digraph", &data("k2star.json"), "--group", "dihedral:3"]);
    assert_eq!(out.status, 0);
    assert!(out.stdout.contains("repr vs bruteforce: MATCH (worst 0.0e0)"), "{}", out.stdout);
    let text = run(["verify", "--digraph", &data("k2star.json"), "--group", "dihedral:3", "--format", "text"]);
    assert_eq!(text.stdout.lines().next(), Some("repr vs bruteforce: MATCH (worst 0.0e0)"));
}

#[test]
fn mismatched_group_is_an_input_error() {
    let out = run(["spectrum", "--digraph", &data("k2star.json"), "--group", "cyclic:5"]);
    assert_eq!(out.status, 2);
    assert!(out.stderr.contains(r#"unknown voltage name "s""#), "{}", out.stderr);
}

#[test]
fn usage_errors_exit_two() {
    for argv in [
        vec!["frobnicate", "--group", "cyclic:2"],
        vec!["spectrum", "--group", "cyclic:2", "--bogus"],
        vec!["spectrum", "--group", "cyclic:2", "-d", "x"],
        vec!["spectrum", "--group", "cyclic:2"],
        vec!["walks", "--digraph", "x.json", "--group", "cyclic:2"],
        vec!["spectrum", "--digraph", "/nonexistent.json", "--group", "cyclic:2"],
        vec!["spectrum", "--digraph", "x.json", "--group", "quaternion:2"],
        vec!["spectrum", "--digraph", "x.json", "--group", "cyclic:2", "--method", "magic"],
    ] {
        let out = run(argv.clone());
        assert_eq!(out.status, 2, "{argv:?}");
        assert!(!out.stderr.is_empty(), "{argv:?}");
    }
    let help = run(["--help"]);
    assert_eq!(help.status, 0);
    assert!(help.stdout.contains("--digraph"));
}

#[test]
fn three_methods_agree() {
    let mut spectra = Vec::new();
    for method in ["repr", "charsum", "bruteforce"] {
        let out = run(["spectrum", "--digraph", &data("k2star.json"), "--group", "dihedral:3", "--method", method]);
        assert_eq!(out.status, 0, "{method}: {}", out.stderr);
        assert!(out.stdout.contains(&format!(r#""method": "{method}""#)));
        spectra.push(spectrum_of(&out.stdout));
    }
    assert!(spectra_equal(&spectra[0], &spectra[1], 1e-9).matched);
    assert!(spectra_equal(&spectra[0], &spectra[2], 1e-9).matched);
}

#[test]
fn lift_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let lift_path = dir.path().join("lift.json");
    let lift_str = lift_path.display().to_string();
    let out = run(["lift", "--digraph", &data("k2star.json"), "--group", "dihedral:3", "--out", &lift_str]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    assert!(out.stdout.is_empty());
    let lifted: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&lift_path).unwrap()).unwrap();
    assert_eq!(lifted["vertices"].as_array().unwrap().len(), 12);
    assert_eq!(lifted["arcs"].as_array().unwrap().len(), 36);
    assert_eq!(lifted["vertices"][1], "a.s");

    let brute = run(["spectrum", "--digraph", &lift_str, "--group", "cyclic:1", "--method", "bruteforce"]);
    assert_eq!(brute.status, 0, "{}", brute.stderr);
    let repr = run(["spectrum", "--digraph", &data("k2star.json"), "--group", "dihedral:3", "--method", "repr"]);
    let r = spectra_equal(&spectrum_of(&brute.stdout), &spectrum_of(&repr.stdout), 1e-7);
    assert!(r.matched, "{r}");
}

#[test]
fn lift_round_trip_on_a_product_group() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().join("base.json");
    std::fs::write(
        &base,
        r#"{"vertices":["p","q","r"],"arcs":[
            {"from":"p","to":"q","voltage":"(g,r)"},{"from":"q","to":"r","voltage":"(e,s)"},
            {"from":"r","to":"p","voltage":"(g,r^2*s)"},{"from":"q","to":"q","voltage":"(e,r)"},
            {"from":"p","to":"r"}]}"#,
    )
    .unwrap();
    let base = base.display().to_string();
    let group = "product:cyclic:2,dihedral:3";
    let lift = run(["lift", "--digraph", &base, "--group", group]);
    assert_eq!(lift.status, 0, "{}", lift.stderr);
    let lift_path = dir.path().join("lift.json");
    std::fs::write(&lift_path, &lift.stdout).unwrap();
    let brute = run(["spectrum", "--digraph", &lift_path.display().to_string(), "--group", "cyclic:1", "--method", "bruteforce"]);
    let repr = run(["spectrum", "--digraph", &base, "--group", group]);
    assert_eq!((brute.status, repr.status), (0, 0), "{} {}", brute.stderr, repr.stderr);
    let r = spectra_equal(&spectrum_of(&brute.stdout), &spectrum_of(&repr.stdout), 1e-7);
    assert!(r.matched, "{r}");
}

#[test]
fn output_is_deterministic() {
    let argv = ["verify", "--digraph", &data("k2star.json"), "--group", "dihedral:3"];
    let first = run(argv);
    for _ in 0..3 {
        assert_eq!(run(argv), first);
    }
    let spec = ["spectrum", "--digraph", &data("k2star_s3.json"), "--group", &data("s3_table.json"), "--irreps", &data("s3_irreps.json")];
    assert_eq!(run(spec), run(spec));
}

#[test]
fn walks_table_and_oracle() {
    let out = run(["walks", "--digraph", &data("k2star.json"), "--group", "dihedral:3", "--length", "2"]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["length"], 2);
    // (B²)_aa = 2e + 2r + r²: the loop twice, and a -> b -> a through e or r
    assert_eq!(v["entries"][0]["from"], "a");
    assert_eq!(v["entries"][0]["coefficients"], serde_json::json!([["e", 2], ["r", 2], ["r^2", 1]]));
    assert_eq!(v["oracle"]["checked"], true);
    assert_eq!(v["oracle"]["coefficient_mismatches"], 0);
    assert_eq!(v["oracle"]["trace_lift"], v["oracle"]["trace_algebra"]);
    let text = run(["walks", "--digraph", &data("k2star.json"), "--group", "dihedral:3", "--length", "2", "--format", "text"]);
    assert!(text.stdout.starts_with("a -> a: 2e + 2r + r^2\n"), "{}", text.stdout);
}

#[test]
fn custom_group_from_files() {
    let group = data("s3_table.json");
    let base = ["--digraph", &data("k2star_s3.json"), "--group", &group];
    let with = |extra: &[&str]| {
        let mut argv = vec![];
        argv.extend_from_slice(extra);
        argv.extend_from_slice(&base);
        run(argv)
    };
    let repr = with(&["spectrum", "--format", "text", "--irreps", &data("s3_irreps.json")]);
    assert_eq!(repr.stdout, "3^1\n1^3\n0^4\n-1^3\n-3^1\n", "{}", repr.stderr);
    let chars = with(&["spectrum", "--format", "text", "--method", "charsum", "--chars", &data("s3_chars.json")]);
    assert_eq!(chars.stdout, repr.stdout, "{}", chars.stderr);
    // a table-defined group has no builtin irreps
    let missing = with(&["spectrum"]);
    assert_eq!(missing.status, 2);
    let validate = with(&["validate", "--irreps", &data("s3_irreps.json"), "--chars", &data("s3_chars.json")]);
    assert_eq!(validate.status, 0, "{}", validate.stderr);
    let v: serde_json::Value = serde_json::from_str(&validate.stdout).unwrap();
    assert_eq!(v["group"]["class_sizes"], serde_json::json!([1, 3, 2]));
    assert_eq!(v["irreps"]["dims"], serde_json::json!([1, 1, 2]));
    assert_eq!(v["digraph"]["lift_order"], 12);
}

#[test]
fn validate_reports_bad_irreps() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    // the sign character listed twice for Z2
    std::fs::write(
        &bad,
        r#"[{"dim":1,"matrices":{"e":[[[1,0]]],"g":[[[-1,0]]]}},{"dim":1,"matrices":{"e":[[[1,0]]],"g":[[[-1,0]]]}}]"#,
    )
    .unwrap();
    let out = run(["validate", "--group", "cyclic:2", "--irreps", &bad.display().to_string()]);
    assert_eq!(out.status, 2);
    assert!(out.stderr.contains("orthogonality"), "{}", out.stderr);
}

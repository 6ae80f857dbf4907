//! Kept in its own binary: it mutates the process environment.

use std::path::PathBuf;

use voltlift::cli::run;

#[test]
fn thread_override_is_respected() {
    // same bytes with a single worker
    let k2star = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/k2star.json").display().to_string();
    let argv = ["spectrum", "--digraph", &k2star, "--group", "dihedral:3"];
    let auto = run(argv);
    std::env::set_var("VOLTLIFT_THREADS", "1");
    let single = run(argv);
    std::env::set_var("VOLTLIFT_THREADS", "lots");
    let bad = run(argv);
    std::env::remove_var("VOLTLIFT_THREADS");
    assert_eq!(auto, single);
    assert_eq!(bad.status, 2);
}

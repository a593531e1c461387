//! End-to-end tests against the compiled binary: output formats, exit
//! codes, diagnostics, and byte determinism.

use std::process::{Command, Output};

fn agraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_agraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn graph_dot_of_a_star() {
    let out = agraph(&["graph", "Z16", "--format", "dot"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "graph ag {\n  \"(8)\";\n  \"(4)\";\n  \"(2)\";\n  \"(8)\" -- \"(4)\";\n  \"(8)\" -- \"(2)\";\n}\n"
    );
}

#[test]
fn graph_gamma_dot_of_a_path() {
    let out = agraph(&["graph", "Z8", "--gamma", "--format", "dot"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "graph gamma {\n  \"2\";\n  \"4\";\n  \"6\";\n  \"2\" -- \"4\";\n  \"4\" -- \"6\";\n}\n"
    );
}

#[test]
fn graph_json_has_the_documented_shape() {
    let out = agraph(&["graph", "Z6"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["ring"], "Z6");
    assert_eq!(doc["order"], 6);
    assert_eq!(doc["graph"], "AG");
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 2);
    assert_eq!(doc["edges"], serde_json::json!([[0, 1]]));
    assert_eq!(doc["invariants"]["diameter"], 1);
    assert_eq!(doc["invariants"]["is_complete"], true);
}

#[test]
fn invariants_json_on_a_two_vertex_graph() {
    let out = agraph(&["invariants", "Z6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"diameter\": 1"), "{text}");
    assert!(text.contains("\"is_complete\": true"), "{text}");
}

#[test]
fn invariants_stay_cheap_on_large_moduli() {
    let out = agraph(&["invariants", "Z100000"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["vertex_count"], 34);
    assert_eq!(doc["is_connected"], true);
}

#[test]
fn verify_all_checks_on_a_corpus_member() {
    let out = agraph(&["verify", "Z12", "--checks", "all"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let results = doc.as_array().unwrap();
    assert_eq!(results.len(), 19);
    for r in results {
        assert_ne!(r["verdict"], "fail", "{r}");
    }
}

#[test]
fn verify_text_respects_catalog_order() {
    let out = agraph(&[
        "verify", "Z8", "--checks", "star_cases,conn_diam", "--format", "text",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("[pass] conn_diam Z8"), "{text}");
    assert!(lines[1].starts_with("[pass] star_cases Z8"), "{text}");
    assert_eq!(lines[2], "passed 2, failed 0, not applicable 0");
}

#[test]
fn verify_rejects_unknown_check_names() {
    let out = agraph(&["verify", "Z6", "--checks", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[input]:"), "{}", stderr(&out));
}

#[test]
fn parse_errors_exit_2_with_a_parse_diagnostic() {
    let out = agraph(&["graph", "Z0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[parse]:"), "{}", stderr(&out));

    let out = agraph(&["graph", "Z6 x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[parse]:"), "{}", stderr(&out));
}

#[test]
fn element_enumeration_cap_exits_3() {
    let out = agraph(&["graph", "Z100000"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).starts_with("error[cap]:"), "{}", stderr(&out));

    let out = agraph(&["graph", "Z100000", "--gamma", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(3));

    // Raising the cap unblocks the same invocation.
    let out = agraph(&["graph", "Z100000", "--order-cap", "200000"]);
    assert!(out.status.success());
}

#[test]
fn crosscheck_reports_full_agreement() {
    let out = agraph(&["crosscheck", "64"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "64/64 agree\n");
}

#[test]
fn atlas_zn_sweep_csv_golden() {
    let out = agraph(&["atlas", "--max", "6"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "ring,order,vertex_count,edge_count,diameter,girth,is_complete,is_star\n\
         Z2,2,0,0,undef,inf,true,false\n\
         Z3,3,0,0,undef,inf,true,false\n\
         Z4,4,1,0,0,inf,true,true\n\
         Z5,5,0,0,undef,inf,true,false\n\
         Z6,6,2,1,1,inf,true,true\n"
    );
}

#[test]
fn atlas_needs_exactly_one_family() {
    let out = agraph(&["atlas"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[input]:"), "{}", stderr(&out));

    let out = agraph(&["atlas", "--max", "6", "--products", "8"]);
    assert_eq!(out.status.code(), Some(2));

    let out = agraph(&["atlas", "--min", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn atlas_reads_a_corpus_file_and_sorts_by_order() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rings.txt");
    std::fs::write(&path, "Z9\n# a comment\n\nZ6\nZ2[x]/(x^2)\n").unwrap();
    let out = agraph(&["atlas", "--corpus", path.to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("Z2[x]/(x^2),4,1,0"), "{text}");
    assert!(lines[2].starts_with("Z6,6,2,1"), "{text}");
    assert!(lines[3].starts_with("Z9,9,1,0"), "{text}");
}

#[test]
fn out_flag_writes_the_same_bytes_as_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z12.json");
    let piped = agraph(&["graph", "Z12"]);
    assert!(piped.status.success());
    let filed = agraph(&["graph", "Z12", "--out", path.to_str().unwrap()]);
    assert!(filed.status.success());
    assert!(stdout(&filed).is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&piped));
}

#[test]
fn unwritable_out_path_exits_2_with_io_diagnostic() {
    let out = agraph(&["graph", "Z6", "--out", "/nonexistent-dir/z6.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[io]:"), "{}", stderr(&out));
}

#[test]
fn unsupported_format_combinations_exit_2() {
    let out = agraph(&["invariants", "Z6", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[input]:"), "{}", stderr(&out));

    let out = agraph(&["graph", "Z6", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn repeated_invocations_are_byte_identical() {
    for args in [
        vec!["verify", "Z12", "--checks", "all"],
        vec!["graph", "Z2 x Z4"],
        vec!["atlas", "--products", "16"],
        vec!["crosscheck", "24", "--format", "json"],
    ] {
        let first = agraph(&args);
        let second = agraph(&args);
        assert!(first.status.success());
        assert_eq!(first.stdout, second.stdout, "nondeterministic output for {args:?}");
    }
}

#[test]
fn divisor_backend_rejects_non_zn_specs() {
    let out = agraph(&["graph", "Z2 x Z3", "--backend", "divisor"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[input]:"), "{}", stderr(&out));
}

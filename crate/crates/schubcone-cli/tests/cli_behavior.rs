//! End-to-end behavior of the `schubcone` binary: argument surface, exit
//! codes, report shape, rendering goldens, determinism, and the hidden
//! fault-injection switch.  Every test spawns the real executable, so
//! what is asserted here is exactly what a script consumer sees.

use std::process::Command;

/// Run the binary with `args`; return (exit code, stdout, stderr).
fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_schubcone"))
        .args(args)
        .output()
        .expect("binary spawns");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

fn run_json(args: &[&str]) -> (i32, serde_json::Value) {
    let (code, stdout, stderr) = run(args);
    let v = serde_json::from_str(&stdout)
        .unwrap_or_else(|e| panic!("bad JSON ({e}): {stdout}\nstderr: {stderr}"));
    (code, v)
}

// ======================================================================
// classify
// ======================================================================

#[test]
fn classify_quadric_reports_nonrigid_toric() {
    let (code, v) = run_json(&["classify", "[2,4,1,3]"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["input"], "[2,4,1,3]");
    let c = &v["classification"];
    assert_eq!(c["toric"], true);
    assert_eq!(c["complexity"], 0);
    assert_eq!(c["dim_y"], 3);
    assert_eq!(c["rigid"], false);
    assert_eq!(c["consistent"], true);
    assert_eq!(c["components"][0]["m"], 2);
    assert_eq!(c["components"][0]["n"], 2);
    // classify carries the diagram block and timings.
    assert_eq!(v["diagrams"]["rothe"][0], "##*.");
    assert!(v["timings"]["total_ms"].is_number());
}

#[test]
fn classify_non_toric_exits_3_with_report() {
    let (code, v) = run_json(&["classify", "[2,1,4,3]"]);
    assert_eq!(code, 3, "rigidity request on non-toric input");
    let c = &v["classification"];
    assert_eq!(c["toric"], false);
    assert_eq!(c["complexity"], 2);
    assert_eq!(c["dim_y"], 7);
    assert_eq!(c["rigid"], serde_json::Value::Null);
    assert_eq!(c["methods"]["oracle"], serde_json::Value::Null);
}

#[test]
fn classify_parse_error_exits_2() {
    let (code, stdout, stderr) = run(&["classify", "[2,5,1]"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("error"));
}

#[test]
fn classify_method_subset_runs_only_that_route() {
    let (code, v) = run_json(&["classify", "[2,4,1,3]", "--methods", "oracle"]);
    assert_eq!(code, 0);
    let m = &v["classification"]["methods"];
    assert_eq!(m["graph"], serde_json::Value::Null);
    assert_eq!(m["corollary"], serde_json::Value::Null);
    assert_eq!(m["oracle"], false);
    assert_eq!(v["classification"]["rigid"], false);
}

#[test]
fn classify_unknown_method_exits_2() {
    let (code, _, stderr) = run(&["classify", "[2,4,1,3]", "--methods", "graph,bogus"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("bogus"));
}

#[test]
fn classify_text_mode_is_human_readable() {
    let (code, stdout, _) = run(&["classify", "[1,4,3,2]", "--text"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("π = [1,4,3,2]"));
    assert!(stdout.contains("rigid       no"));
    assert!(stdout.contains("essential cell (3,2)"));
    assert!(stdout.contains("chain pattern rule"));
    assert!(stdout.contains("regions"));
}

#[test]
fn classify_faces_dumps_the_three_face_inventory() {
    let (code, v) = run_json(&["classify", "[1,3,2]", "--faces"]);
    assert_eq!(code, 0);
    let faces = v["faces"].as_array().expect("faces array");
    // The quadric cone is three-dimensional, so its only 3-face is the
    // cone itself: one entry, four rays, vanishing functional.
    assert_eq!(faces.len(), 1);
    assert_eq!(faces[0]["component"], 0);
    assert_eq!(faces[0]["face"]["dim"], 3);
    assert_eq!(faces[0]["face"]["rays"].as_array().unwrap().len(), 4);
    assert_eq!(faces[0]["face"]["functional"], serde_json::json!([0, 0, 0, 0]));
    assert!(v["timings"]["faces_ms"].is_number());
}

#[test]
fn classify_s10_example_names_the_witnesses() {
    let (code, v) = run_json(&["classify", "[1,10,8,7,6,9,4,5,2,3]"]);
    assert_eq!(code, 0);
    let c = &v["classification"];
    assert_eq!(c["toric"], true);
    assert_eq!(c["rigid"], false);
    let ws = c["witnesses"].as_array().unwrap();
    assert_eq!(ws[0]["type"], "essential-pattern");
    assert_eq!(ws[0]["cell"], serde_json::json!([7, 3]));
    assert_eq!(ws[1]["cell"], serde_json::json!([6, 4]));
    assert_eq!(
        ws.iter().filter(|w| w["type"] == "non-simplicial-three-face").count(),
        2
    );
}

// ======================================================================
// scan
// ======================================================================

#[test]
fn scan_streams_one_parseable_line_per_permutation() {
    let (code, stdout, _) = run(&["scan", "--n", "4"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 24);
    let mut toric = 0;
    for line in &lines {
        let v: serde_json::Value = serde_json::from_str(line).expect("NDJSON line");
        assert_eq!(v["schema_version"], "1");
        assert!(v.get("timings").is_none(), "scan lines must be byte-stable");
        assert!(v.get("diagrams").is_none());
        if v["classification"]["toric"] == true {
            toric += 1;
        }
    }
    assert_eq!(toric, 22);
    // Lexicographic order: the identity comes first.
    let first: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(first["input"], "[1,2,3,4]");
    assert_eq!(first["classification"]["trivial"], true);
    assert_eq!(first["classification"]["rigid"], true);
}

#[test]
fn scan_output_is_byte_identical_across_jobs() {
    let (c1, seq, _) = run(&["scan", "--n", "5"]);
    let (c4, par, _) = run(&["scan", "--n", "5", "--jobs", "4"]);
    assert_eq!((c1, c4), (0, 0));
    assert_eq!(seq, par, "--jobs must not change a single byte");
    let (c3, par_filtered, _) =
        run(&["scan", "--n", "5", "--jobs", "3", "--filter", "nonrigid"]);
    let (c1f, seq_filtered, _) = run(&["scan", "--n", "5", "--filter", "nonrigid"]);
    assert_eq!((c3, c1f), (0, 0));
    assert_eq!(par_filtered, seq_filtered);
    assert_eq!(seq_filtered.lines().count(), 32, "non-rigid toric count in S_5");
}

#[test]
fn scan_summary_prints_the_category_table() {
    let (code, stdout, _) = run(&["scan", "--n", "3", "--summary"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "scan n=3: 6 permutations\n\
         \x20 toric         6\n\
         \x20 non-toric     0\n\
         \x20 rigid         5\n\
         \x20 non-rigid     1\n\
         \x20 undecided     0\n\
         \x20 disagreement  0\n",
    );
}

#[test]
fn scan_disagreement_filter_is_empty_on_an_honest_build() {
    let (code, stdout, _) = run(&["scan", "--n", "5", "--filter", "disagreement"]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty(), "any disagreement line is a bug: {stdout}");
}

#[test]
fn scan_guards_reject_out_of_range_requests() {
    assert_eq!(run(&["scan", "--n", "9"]).0, 2);
    assert_eq!(run(&["scan", "--n", "1"]).0, 2);
    assert_eq!(run(&["scan", "--n", "4", "--jobs", "0"]).0, 2);
    assert_eq!(run(&["scan", "--n", "4", "--filter", "weird"]).0, 2);
}

// ======================================================================
// render
// ======================================================================

#[test]
fn render_rothe_grid_golden() {
    let (code, stdout, _) = run(&["render", "--perm", "[2,1,4,3]", "--what", "rothe"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "#*..\n*...\n..#*\n..*.\n");
}

#[test]
fn render_rothe_identity_has_no_diagram_cells() {
    let (code, stdout, _) = run(&["render", "--perm", "[1,2,3]", "--what", "rothe"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "*..\n.*.\n..*\n");
    assert!(!stdout.contains('#'));
}

#[test]
fn render_regions_overlay_golden() {
    let (code, stdout, _) =
        run(&["render", "--perm", "[2,4,1,3]", "--what", "regions"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "DE..\nPP..\nPE..\n....\n");
}

#[test]
fn render_graph_dot_lists_the_quadric_edges() {
    let (code, stdout, _) =
        run(&["render", "--perm", "[2,4,1,3]", "--what", "graph-dot"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.matches(" -- ").count(), 4, "K_{{2,2}} has 4 edges");
    assert!(stdout.contains("r2 -- c1;"));
    assert!(stdout.contains("r3 -- c2;"));
}

#[test]
fn render_parse_error_exits_2() {
    assert_eq!(run(&["render", "--perm", "nope", "--what", "rothe"]).0, 2);
}

// ======================================================================
// crosscheck
// ======================================================================

#[test]
fn crosscheck_passes_on_an_honest_build() {
    let (code, stdout, _) = run(&["crosscheck", "--n", "4", "--deep"]);
    assert_eq!(code, 0, "stdout: {stdout}");
    assert!(stdout.contains("all checks passed"));
    assert!(stdout.contains("22 toric"));
}

#[test]
fn crosscheck_guard_rejects_large_degrees() {
    assert_eq!(run(&["crosscheck", "--n", "8"]).0, 2);
}

// ======================================================================
// the hidden sabotage switch (negative controls)
// ======================================================================

#[test]
fn sabotaged_ray_sign_is_caught() {
    let (code, stdout, _) = run(&["--sabotage", "ray-sign", "crosscheck", "--n", "4"]);
    assert_eq!(code, 1, "a corrupted Γ must not pass");
    assert!(stdout.contains("FAIL"));
    assert!(stdout.contains("Γ-ray set differs from the oracle"));
}

#[test]
fn sabotaged_corollary_pattern_is_caught() {
    let (code, stdout, _) =
        run(&["--sabotage", "corollary-pattern", "crosscheck", "--n", "4"]);
    assert_eq!(code, 1, "a corrupted pattern rule must not pass");
    assert!(stdout.contains("FAIL"));
    assert!(stdout.contains("rigidity routes disagree"));
}

#[test]
fn sabotage_rejects_unknown_modes_and_stays_hidden() {
    assert_eq!(run(&["--sabotage", "off", "crosscheck", "--n", "4"]).0, 2);
    let (code, stdout, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(!stdout.contains("sabotage"), "the switch must stay out of --help");
}

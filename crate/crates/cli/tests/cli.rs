//! End-to-end tests of the `staircase` binary: golden outputs, exit codes,
//! JSON and text round trips, and byte determinism.

use std::process::{Command, Output};

fn staircase(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_staircase"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = staircase(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    staircase(args).status.code().expect("exit code")
}

#[test]
fn decompose_golden() {
    let out = stdout_of(&["decompose", "--dim", "3", "(x1 x2, x2^>2 x3^>2)"]);
    assert_eq!(out, "(x1, x2^>2)\n(x1, x3^>2)\n(x2)\n");
}

#[test]
fn decompose_json_golden() {
    let out = stdout_of(&["decompose", "--dim", "3", "--json", "(x1 x2, x2^>2 x3^>2)"]);
    assert_eq!(
        out.trim(),
        "{\"components\":[{\"1\":{\"alpha\":\"1\",\"strict\":false},\"2\":{\"alpha\":\"2\",\"strict\":true}},{\"1\":{\"alpha\":\"1\",\"strict\":false},\"3\":{\"alpha\":\"2\",\"strict\":true}},{\"2\":{\"alpha\":\"1\",\"strict\":false}}]}"
    );
}

#[test]
fn mdim_of_zero_ideal() {
    assert_eq!(stdout_of(&["mdim", "--dim", "2", "()"]), "mdim = 2\n");
    assert_eq!(stdout_of(&["mdim", "--dim", "2", "(1)"]), "mdim = -inf\n");
}

#[test]
fn mdim_with_chain() {
    let out = stdout_of(&["mdim", "--dim", "3", "--chain", "(x1 x2, x2^>2 x3^>2)"]);
    assert_eq!(out, "mdim = 2\n{2}\n{1, 2}\n{1, 2, 3}\n");
}

#[test]
fn dist_golden() {
    let out = stdout_of(&["dist", "--dim", "2", "--tol", "1/1000000", "(x2)", "(x1)"]);
    assert_eq!(out, "dist in [1, 1]\n");
    let out = stdout_of(&[
        "dist", "--dim", "2", "(x1, x2)", "(x1^3/2, x1^1/2 x2)",
    ]);
    assert_eq!(out, "dist in [0.5, 0.5]\n");
    // Tolerances in scientific and decimal notation.
    let out = stdout_of(&["dist", "--dim", "2", "--tol", "1e-6", "(x2)", "(x1)"]);
    assert_eq!(out, "dist in [1, 1]\n");
    let out = stdout_of(&["dist", "--dim", "2", "--tol", "0.25", "(x1 x2)", "(x2^2)"]);
    assert!(out.starts_with("dist in ["));
    assert_eq!(exit_code(&["dist", "--dim", "2", "--tol", "junk", "(x2)", "(x1)"]), 2);
}

#[test]
fn eq_member_and_operators() {
    assert_eq!(stdout_of(&["eq", "--dim", "2", "(x1) + (x2)", "(x2, x1)"]), "true\n");
    assert_eq!(stdout_of(&["eq", "--dim", "2", "(x1)", "(x2)"]), "false\n");
    assert_eq!(stdout_of(&["member", "--dim", "2", "x1", "(x1, x2)"]), "true\n");
    assert_eq!(
        stdout_of(&["member", "--dim", "2", "x1", "(x1^>1, x2^1/2)"]),
        "false\n"
    );
    assert_eq!(
        stdout_of(&["intersect", "--dim", "2", "(x2^>1)", "(x1)"]),
        "(x1 x2^>1)\n"
    );
    assert_eq!(
        stdout_of(&["sum", "--dim", "2", "(x1)", "(x2)"]),
        "(x2, x1)\n"
    );
}

#[test]
fn bindings_and_grouping() {
    assert_eq!(
        stdout_of(&["normalize", "--dim", "2", "A = (x1); B = (x2); A ^ B"]),
        "(x1 x2)\n"
    );
    assert_eq!(
        stdout_of(&["normalize", "--dim", "2", "((x1^2) + (x1)) ^ (x2)"]),
        "(x1 x2)\n"
    );
}

#[test]
fn generators_and_radius() {
    assert_eq!(
        stdout_of(&["generators", "--dim", "2", "(x2^2, x1 x2, x1^2 x2^2)"]),
        "(x2^2, x1 x2)\n"
    );
    assert_eq!(stdout_of(&["radius", "--dim", "2", "(x1^1/2, x2^3)"]), "1/2\n");
}

#[test]
fn prime_and_irreducible() {
    assert_eq!(stdout_of(&["prime", "--dim", "2", "(x2^>0)"]), "T = {2}\n");
    assert_eq!(stdout_of(&["prime", "--dim", "2", "(x1)"]), "not m-prime\n");
    assert_eq!(
        stdout_of(&["prime", "--dim", "2", "--mode", "z", "(x1)"]),
        "T = {1}\n"
    );
    assert_eq!(stdout_of(&["irreducible", "--dim", "2", "(x1, x2^>1)"]), "true\n");
    assert_eq!(stdout_of(&["irreducible", "--dim", "2", "(x1 x2)"]), "false\n");
}

#[test]
fn covers_golden() {
    let out = stdout_of(&["covers", "--dim", "3", "(x1 x2, x2^>2 x3^>2)"]);
    assert_eq!(out, "{1:[1,inf), 2:(2,inf)}\n{1:[1,inf), 3:(2,inf)}\n{2:[1,inf)}\n");
    let dot = stdout_of(&["covers", "--dim", "3", "--dot", "(x1 x2, x2^>2 x3^>2)"]);
    assert_eq!(
        dot,
        "graph staircase {\n  1 -- 2 [label=\"[1,inf)\"];\n  2 -- 3 [label=\"(2,inf)\"];\n}\n"
    );
}

#[test]
fn json_round_trip_through_the_cli() {
    let json = stdout_of(&["normalize", "--dim", "2", "--json", "(x1 x2^>1, x2^2)"]);
    let json = json.trim();
    assert!(json.starts_with("{\"d\":2,\"mode\":\"Q\""));
    let text = stdout_of(&["normalize", json]);
    assert_eq!(text, "(x2^2, x1 x2^>1)\n");
    // The canonical text reparses to the same canonical JSON.
    let json_again = stdout_of(&["normalize", "--dim", "2", "--json", text.trim()]);
    assert_eq!(json_again.trim(), json);
}

#[test]
fn exit_codes() {
    // Parse errors: 2.
    assert_eq!(exit_code(&["normalize", "--dim", "2", "(x1"]), 2);
    assert_eq!(exit_code(&["normalize", "--dim", "2", "(x9)"]), 2);
    assert_eq!(exit_code(&["normalize", "--dim", "2", "--mode", "z", "(x1^1/2)"]), 2);
    assert_eq!(exit_code(&["normalize", "(x1)"]), 2); // missing --dim
    // Domain errors: 1.
    assert_eq!(exit_code(&["generators", "--dim", "2", "(x1^>1)"]), 1);
    assert_eq!(exit_code(&["dist", "--dim", "2", "(x1^>1)", "(x1)"]), 1);
    assert_eq!(exit_code(&["dist", "--dim", "2", "()", "(x1)"]), 1);
    assert_eq!(exit_code(&["decompose", "--dim", "2", "()"]), 1);
    assert_eq!(exit_code(&["covers", "--dim", "2", "(x1^2)"]), 1);
    assert_eq!(exit_code(&["plot", "--dim", "3", "(x1 x2 x3)"]), 1);
    // Success: 0.
    assert_eq!(exit_code(&["normalize", "--dim", "2", "(x1)"]), 0);
}

#[test]
fn plot_mirrors_figure_conventions() {
    // Open corner: dashed bottom edge, solid left edge, open corner circle.
    let svg = stdout_of(&["plot", "--dim", "2", "(x1 x2^>1)"]);
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("stroke-dasharray"));
    assert!(svg.contains("fill=\"white\""));

    // Fully closed pure powers: solid edges, filled corner circle.
    let svg = stdout_of(&["plot", "--dim", "2", "(x1, x2)"]);
    assert!(!svg.contains("stroke-dasharray"));
    assert!(svg.contains("fill=\"black\""));

    // Zero ideal: no region, no circles.
    let svg = stdout_of(&["plot", "--dim", "2", "()"]);
    assert!(!svg.contains("<path"));
    assert!(!svg.contains("<circle"));
}

#[test]
fn byte_determinism() {
    for args in [
        &["decompose", "--dim", "3", "(x1 x2, x2^>2 x3^>2)"][..],
        &["plot", "--dim", "2", "(x1^>1, x2, x1 x2^1/2)"][..],
        &["dist", "--dim", "2", "--tol", "1/100000", "(x1 x2)", "(x2^3)"][..],
        &["covers", "--dim", "4", "(x1 x2, x2 x3, x3^1/2 x4^1/2)"][..],
    ] {
        let first = stdout_of(args);
        let second = stdout_of(args);
        assert_eq!(first, second, "output of {args:?} varied between runs");
    }
}

#[test]
fn file_input() {
    let dir = std::env::temp_dir().join("staircase-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ideal.json");
    let json = stdout_of(&["normalize", "--dim", "2", "--json", "(x1 x2^3/2)"]);
    std::fs::write(&path, json.trim()).unwrap();
    let arg = format!("@{}", path.display());
    assert_eq!(stdout_of(&["normalize", &arg]), "(x1 x2^3/2)\n");
    std::fs::remove_file(&path).unwrap();
}

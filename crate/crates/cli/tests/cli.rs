use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_corner-forge")).args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("corner-forge-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn path(dir: &Path, file: &str) -> String {
    dir.join(file).to_string_lossy().into_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn examples_lists_every_bundled_manifold() {
    let out = run(&["examples"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for name in ["whitehead", "borromean", "m128", "dodecahedral16"] {
        assert!(text.contains(name), "missing {name}");
    }
}

#[test]
fn emitted_example_validates_as_closed() {
    let dir = scratch("validate");
    let file = path(&dir, "whitehead.json");
    assert!(run(&["examples", "--emit", "whitehead", "-o", &file]).status.success());
    let out = run(&["validate", &file, "--json"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["is_closed_manifold"], true);
}

#[test]
fn file_pipeline_embeds_colours_covers_and_cuts() {
    let dir = scratch("pipeline");
    let m = path(&dir, "m.json");
    let (w, rec, col, cov, cut) =
        (path(&dir, "w.json"), path(&dir, "rec.json"), path(&dir, "col.json"), path(&dir, "cov.json"), path(&dir, "cut.json"));
    assert!(run(&["examples", "--emit", "borromean", "-o", &m]).status.success());
    assert!(run(&["embed", &m, "-o", &w, "--record", &rec]).status.success());
    assert!(run(&["color", &w, "--strategy", "canonical", "-o", &col]).status.success());
    let colouring: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&col).unwrap()).unwrap();
    assert!(colouring["k"].as_u64().unwrap() <= 8);
    assert!(run(&["cover", &w, "--coloring", &col, "--mode", "explicit", "-o", &cov]).status.success());
    let out = run(&["validate", &cov]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(run(&["cut", &w, "--record", &rec, "-o", &cut]).status.success());
    assert!(run(&["iso", &w, &w]).status.success());
    assert_eq!(run(&["iso", &m, &w]).status.code(), Some(1));
}

#[test]
fn report_passes_on_bundled_examples() {
    for name in ["whitehead", "borromean", "m128"] {
        let out = run(&["report", "--input", name]);
        assert!(out.status.success(), "{name}: {}", stdout(&out));
        assert!(!stdout(&out).contains("FAIL"));
    }
}

#[test]
fn cover_budget_is_enforced() {
    let out = run(&["report", "--input", "borromean", "--mode", "explicit", "--max-cells", "8"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_and_io_errors_exit_with_two() {
    assert_eq!(run(&["report", "--input", "no-such-example"]).status.code(), Some(2));
    assert_eq!(run(&["validate", "/nonexistent/complex.json"]).status.code(), Some(2));
    assert_eq!(run(&["census"]).status.code(), Some(2));
}

#[test]
fn census_of_a_template_reports_its_face_counts() {
    let out = run(&["census", "24-cell"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("24"));
}

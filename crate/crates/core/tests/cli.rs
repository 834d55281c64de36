use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use sharkovsky::document::MapDocument;
use sharkovsky::rat::rat;

fn maps_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("maps")
}

fn tent_file() -> String {
    maps_dir().join("tent.toml").to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sharkovsky"))
        .args(args)
        .env_remove("SHARKOVSKY_HORIZON")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn orbits_json() {
    let o = run(&["orbits", &tent_file(), "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["orbits"].as_array().unwrap().len(), 2);
    assert_eq!(v["orbits"][1]["points"], serde_json::json!(["2/7", "4/7", "6/7"]));
}

#[test]
fn orbits_decimal_column_is_labelled() {
    let out = stdout(&run(&["orbits", &tent_file(), "2", "--decimal"]));
    assert!(out.lines().next().unwrap().contains("not exact"));
    assert!(out.contains("2/5 4/5\t0.400000 0.800000"));
}

#[test]
fn witness_report() {
    let o = run(&["witness", &tent_file(), "3", "--turbulence", "--cascade", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for line in ["z = 2/3", "y = 2/5", "v = 4/7", "d = 1/3", "s = 0", "t = 5/12", "p_5 = 14/33"] {
        assert!(out.lines().any(|l| l == line), "missing {line}");
    }
    assert!(out.contains("check: s = 0 < d = 1/3"));
}

#[test]
fn witness_without_odd_orbit() {
    let dir = tempfile::tempdir().unwrap();
    let t2 = dir.path().join("t2.toml");
    let o = run(&["counterexample", "truncated-tent", "2", "--out", t2.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["witness", t2.to_str().unwrap(), "3"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("period 3"));
}

#[test]
fn tower_file_has_trace() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("tower1.toml");
    let o = run(&["counterexample", "tower", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("counterexample pass n=6"));
    let doc = MapDocument::parse(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let c = doc.construction.unwrap();
    assert_eq!((c.kind.as_str(), c.parameter), ("tower", 1));
    assert_eq!((c.q0, c.q1), (rat(22, 63), rat(52, 63)));
    assert_eq!(c.orbits.len(), 2);
    assert_eq!(c.verified_periods, vec![1, 2, 4, 6, 8, 10, 12]);
}

#[test]
fn plot_csv_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("w.txt");
    std::fs::write(&report, run(&["witness", &tent_file(), "3"]).stdout).unwrap();
    let svg = dir.path().join("t.svg");
    let o = run(&[
        "plot",
        &tent_file(),
        "--cobweb",
        "2/7",
        "--steps",
        "6",
        "--svg",
        svg.to_str().unwrap(),
        "--witness",
        report.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let csv = stdout(&o);
    for row in ["node,0,0", "node,1/2,1", "node,1,0", "cobweb,6/7,2/7"] {
        assert!(csv.lines().any(|l| l == row), "missing {row}");
    }
    let picture = std::fs::read_to_string(&svg).unwrap();
    assert!(picture.contains(">z=2/3</text>"));
    assert_eq!(run(&["plot", &tent_file(), "--cobweb", "2/4"]).status.code(), Some(2));
}

#[test]
fn horizon_override_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_sharkovsky"))
        .args(["orbits", &tent_file(), "6"])
        .env("SHARKOVSKY_HORIZON", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("horizon 5"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["witness", &tent_file(), "3", "--even", "2"],
        vec!["counterexample", "truncated-tent", "4"],
        vec!["verify", &tent_file(), "--horizon", "6"],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout, "{args:?}");
    }
}

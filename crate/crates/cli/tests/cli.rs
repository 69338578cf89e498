//! End-to-end runs of the `syzygy` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use syzygy::constructions::{rational_normal_curve, scroll, ScrollSpec};
use syzygy::groebner::ideal_equal;
use syzygy::kernel::PrimeField;
use syzygy_cli::ideal_file::IdealFile;

fn syzygy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_syzygy")).args(args).env("SYZYGY_THREADS", "2").output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("syzygy-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn constructed_files_parse_back_to_the_same_ideal() {
    let f = PrimeField::default();
    let cases = [
        (vec!["construct", "rnc", "--d", "4"], rational_normal_curve(&f, 4).unwrap()),
        (vec!["construct", "scroll", "--blocks", "1,2"], scroll(&f, &ScrollSpec::new(vec![1, 2]).unwrap()).unwrap()),
    ];
    for (args, want) in cases {
        let text = stdout(&syzygy(&args));
        let parsed = IdealFile::parse(&text).unwrap().ideal(&f).unwrap();
        let want = want.ideal.in_ring(parsed.ring()).unwrap();
        assert!(ideal_equal(&parsed.groebner(), &want.groebner()).unwrap(), "{args:?}");
    }
}

#[test]
fn twisted_cubic_table() {
    let path = scratch("cubic.txt", &stdout(&syzygy(&["construct", "rnc", "--d", "3"])));
    let table = stdout(&syzygy(&["betti", path.to_str().unwrap()]));
    assert_eq!(table, "   0 1 2\n0: 1 . .\n1: . 3 2\n");
}

#[test]
fn almost_minimal_curve_table() {
    let path = scratch("am.txt", &stdout(&syzygy(&["construct", "almost-minimal-curve", "--e", "3"])));
    let table = stdout(&syzygy(&["betti", path.to_str().unwrap()]));
    let rows: Vec<&str> = table.lines().collect();
    assert_eq!(rows[2], "1: . 4 2 . .");
    assert_eq!(rows[3], "2: . 1 6 5 1");
}

#[test]
fn betti_json_schema() {
    let path = scratch("json.txt", &stdout(&syzygy(&["construct", "rnc", "--d", "3"])));
    let v: Value = serde_json::from_str(&stdout(&syzygy(&["betti", "--json", path.to_str().unwrap()]))).unwrap();
    assert_eq!(v["entries"], serde_json::json!([[0, 0, 1], [1, 1, 3], [2, 1, 2]]));
    assert_eq!((v["pd"].as_u64(), v["depth"].as_u64(), v["reg"].as_u64()), (Some(2), Some(2), Some(1)));
    assert!(v["aX"].is_null());
}

#[test]
fn parse_errors_name_line_and_column() {
    let path = scratch("bad.txt", "ring 3 over 32003\nz0*z1 + z2\n");
    let o = syzygy(&["betti", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn randomized_constructions_require_a_seed() {
    let o = syzygy(&["construct", "points", "--e", "3", "--d", "6"]);
    assert_eq!(o.status.code(), Some(2));
    let a = stdout(&syzygy(&["construct", "points", "--e", "3", "--d", "6", "--seed", "9"]));
    let b = stdout(&syzygy(&["construct", "points", "--e", "3", "--d", "6", "--seed", "9"]));
    assert_eq!(a, b);
}

#[test]
fn verify_reports_genus_two_classes() {
    let o = syzygy(&["verify", "--check", "genus-two", "--e-min", "3", "--e-max", "4", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["command"], "verify --check genus-two --e-min 3 --e-max 4 --seed 1");
    let items = v["items"].as_array().unwrap();
    let actual: Vec<&str> = items.iter().map(|i| i["actual"].as_str().unwrap()).collect();
    assert!(actual[0].starts_with("2H+0F") && actual[1].starts_with("2H-1F"), "{actual:?}");
    assert!(items.iter().all(|i| i["pass"] == true && i["millis"].is_u64()));
}

#[test]
fn verify_rejects_bad_ranges() {
    for args in [["--e-min", "1", "--e-max", "3"], ["--e-min", "4", "--e-max", "3"]] {
        let mut full = vec!["verify", "--check", "bound", "--seed", "1"];
        full.extend(args);
        assert_eq!(syzygy(&full).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(syzygy(&["verify", "--check", "bound"]).status.code(), Some(2));
}

#[test]
fn verify_is_deterministic_across_thread_counts() {
    let run = |threads: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_syzygy"))
            .args(["verify", "--check", "bound,dichotomy", "--e-min", "3", "--e-max", "4", "--seed", "5"])
            .env("SYZYGY_THREADS", threads)
            .output()
            .unwrap();
        let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
        for item in v["items"].as_array_mut().unwrap() {
            item.as_object_mut().unwrap().remove("millis");
        }
        v
    };
    assert_eq!(run("1"), run("3"));
}

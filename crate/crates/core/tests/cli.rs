use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tubecat::category::catalog_entry;

fn tubecat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tubecat")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

/// Fibonacci data with one F-symbol nudged so the pentagon fails.
fn write_broken(dir: &Path) -> std::path::PathBuf {
    let mut v: Value = serde_json::from_str(&catalog_entry("fib").unwrap().to_json()).unwrap();
    v["name"] = "broken".into();
    let entry = v["F"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|e| e["abcd"].as_array().unwrap().iter().all(|x| x == "tau") && e["e"] == "tau" && e["f"] == "tau")
        .unwrap();
    let re = entry["re"].as_f64().unwrap();
    entry["re"] = (re + 0.05).into();
    let p = dir.join("broken.json");
    std::fs::write(&p, serde_json::to_string_pretty(&v).unwrap()).unwrap();
    p
}

#[test]
fn catalog_lists_seven_categories() {
    let out = tubecat(&["catalog"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let names: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["name"].as_str().unwrap())
        .collect();
    assert_eq!(
        names,
        ["vec", "vec_z2", "vec_z2_omega", "vec_z3", "fib", "ising", "rep_s3"]
    );
}

#[test]
fn verify_fib_lists_the_relation_suites() {
    let out = tubecat(&["verify", "--category", "fib"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["pass"], true);
    let suites: Vec<&str> = v["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["suite"].as_str().unwrap())
        .collect();
    for want in ["bigon1", "bigon2", "fusion", "ih", "globaldim", "spherical", "pentagon"] {
        assert!(suites.contains(&want), "{want}");
    }
}

#[test]
fn center_of_toric_code() {
    let out = tubecat(&["center", "--category", "vec_z2", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["rank"], 4);
    assert_eq!(v["tube_dim"], 4);
    assert_eq!(v["seed"], 1);
    for key in ["category", "lambda", "blocks", "pass"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    let b = &v["blocks"][0];
    for key in ["size", "underlying", "twist", "hexagon_residual"] {
        assert!(b.get(key).is_some(), "{key}");
    }
}

#[test]
fn tube_reports_structure_constants() {
    let out = tubecat(&["tube", "--category", "fib", "--lambda", "tau:1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["dim"], 3);
    assert_eq!(v["pass"], true);
    assert!(!v["mult_table"].as_array().unwrap().is_empty());
}

#[test]
fn broken_pentagon_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_broken(dir.path());
    let out = tubecat(&["verify", "--category", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["pass"], false);
    let pent = v["suites"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["suite"] == "pentagon")
        .unwrap();
    assert_eq!(pent["pass"], false);
    // downstream commands refuse inconsistent data
    let out = tubecat(&["center", "--category", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "{ not json").unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec!["verify", "--category", "no_such_category"],
        vec!["verify", "--category", junk.to_str().unwrap()],
        vec!["center", "--category", "fib", "--lambda", "sigma:1"],
        vec!["tube", "--category", "fib", "--lambda", "tau:zero"],
        vec!["verify", "--category", "fib", "--tol", "-1"],
        vec!["verify", "--category", "fib", "--seed", "-3"],
        vec!["frobnicate"],
        vec!["center"],
    ];
    for args in cases {
        let out = tubecat(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn category_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tubecat"))
        .args(["center", "--category", "-", "--format", "text"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    let data = catalog_entry("vec_z3").unwrap().to_json();
    child.stdin.take().unwrap().write_all(data.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("center PASS category=vec_z3"));
    assert!(text.contains("rank=9"));
}

#[test]
fn user_catalog_directory() {
    let dir = tempfile::tempdir().unwrap();
    let mut v: Value = serde_json::from_str(&catalog_entry("ising").unwrap().to_json()).unwrap();
    v["name"] = "my_ising".into();
    std::fs::write(dir.path().join("my_ising.json"), v.to_string()).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_tubecat"))
        .args(["center", "--category", "my_ising"])
        .env("TUBECAT_CATALOG_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["category"], "my_ising");
    assert_eq!(v["rank"], 9);
}

#[test]
fn output_file_and_formats_agree() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("report.json");
    let out = tubecat(&["verify", "--category", "ising", "--output", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(v["pass"], true);

    let broken = write_broken(dir.path());
    for args in [
        vec!["verify", "--category", "rep_s3"],
        vec!["verify", "--category", broken.to_str().unwrap()],
    ] {
        let j = tubecat(&[&args[..], &["--format", "json"]].concat());
        let t = tubecat(&[&args[..], &["--format", "text"]].concat());
        assert_eq!(j.status.code(), t.status.code());
        let pass = json(&j)["pass"].as_bool().unwrap();
        let text = String::from_utf8(t.stdout).unwrap();
        assert_eq!(text.starts_with("verify PASS"), pass);
    }
}

#[test]
fn identical_runs_are_byte_identical() {
    for cmd in ["center", "tube", "verify"] {
        let a = tubecat(&[cmd, "--category", "fib", "--seed", "7"]);
        let b = tubecat(&[cmd, "--category", "fib", "--seed", "7"]);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
}

#[test]
fn sorted_sizes_do_not_depend_on_the_seed() {
    for name in ["fib", "ising", "rep_s3"] {
        let sizes = |seed: &str| {
            let v = json(&tubecat(&["center", "--category", name, "--seed", seed]));
            let mut s: Vec<u64> = v["blocks"]
                .as_array()
                .unwrap()
                .iter()
                .map(|b| b["size"].as_u64().unwrap())
                .collect();
            s.sort_unstable();
            (v["rank"].as_u64().unwrap(), s)
        };
        assert_eq!(sizes("1"), sizes("12345"), "{name}");
    }
}

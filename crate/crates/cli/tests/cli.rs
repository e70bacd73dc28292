use std::io::Write;
use std::process::{Command, Output};

fn skein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skein"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = skein(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn temp_table(name: &str, body: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("skein-cli-{}-{name}.tsv", std::process::id()));
    std::fs::File::create(&path)
        .unwrap()
        .write_all(body.as_bytes())
        .unwrap();
    path
}

#[test]
fn eval_goldens() {
    assert_eq!(stdout(&["eval", "[1; -]"]), "1\n");
    assert_eq!(
        stdout(&["eval", "[4; -1,2,3,-1,3,2,-3]"]),
        "l^-4 + l^-2 - l^-2*m^2 + m^2 - l^2\n"
    );
    assert_eq!(
        stdout(&["eval", "--no-memo", "[2; 1,1,1]"]),
        "-l^-4 - 2*l^-2 + l^-2*m^2\n"
    );
    assert_eq!(
        stdout(&["eval", "--canonical-cache", "[2; 1,1]"]),
        "l^-3*m^-1 + l^-1*m^-1 - l^-1*m\n"
    );
}

#[test]
fn specializations() {
    assert_eq!(stdout(&["jones", "[2; 1,1,1]"]), "t + t^3 - t^4\n");
    assert_eq!(stdout(&["jones", "[2; 1,1]"]), "-t^(1/2) - t^(5/2)\n");
    assert_eq!(stdout(&["conway", "[2; 1,1,1]"]), "1 + z^2\n");
    assert_eq!(stdout(&["conway", "[2; -]"]), "0\n");
    assert_eq!(stdout(&["alexander", "[3; 1,-2,1,-2]"]), "-t^-1 + 3 - t\n");
}

#[test]
fn simplify_and_compare() {
    assert_eq!(stdout(&["simplify", "[3; 2,1,-2]"]), "[2; -]\nEmpty\n");
    let traced = stdout(&["simplify", "--trace", "[4; -1,2,3,-1,3,2,-3]"]);
    assert!(traced.starts_with("S1 [4; -1,2,3,-1,3,2,-3]\n"));
    assert!(traced.ends_with("[4; -1,2,-1,3,3,2,-3]\nBraidTripleAt(2)\n"));
    assert_eq!(
        stdout(&["compare", "[2; 1,1]", "[4; 1,2,3]"]),
        "Less (rule 1)\n"
    );
    assert_eq!(
        stdout(&["compare", "[3; -1,2]", "[3; 1,2]"]),
        "Less (rule 5)\n"
    );
    assert_eq!(
        stdout(&["compare", "[3; 1,2]", "[3; -1,2]"]),
        "Greater (rule 5)\n"
    );
    assert_eq!(stdout(&["compare", "[3; 1,2]", "[3;1, 2]"]), "Equal\n");
    assert_eq!(stdout(&["minimize", "[3; 1,2,-1,2]"]), "[1; -]\n");
}

#[test]
fn json_records() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["eval", "--json", "[2; 1,1,1]"])).unwrap();
    assert_eq!(v["input"], "[2; 1,1,1]");
    assert_eq!(v["simplified"], "[2; 1,1,1]");
    assert_eq!(v["homfly"].as_array().unwrap().len(), 3);
    assert_eq!(
        v["homfly"][0],
        serde_json::json!({"el": -4, "em": 0, "c": "-1"})
    );
    for key in ["nodes_total", "nodes_peak", "max_depth", "cache_hits"] {
        assert!(v["stats"][key].is_u64(), "{key}");
    }
    assert!(v["stats"]["elapsed_ms"].is_number());

    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["jones", "--json", "[2; 1,1]"])).unwrap();
    assert_eq!(v["polynomial"], "-t^(1/2) - t^(5/2)");
    assert_eq!(
        v["jones"][0],
        serde_json::json!({"s": 1, "re": "-1", "im": "0"})
    );
}

#[test]
fn byte_stable() {
    for args in [
        &["eval", "[4; -1,2,3,-1,3,2,-3]"][..],
        &["simplify", "--trace", "[5; 1,-2,3,-4,2,1]"],
        &["alexander", "[3; 1,1,1,-2,1,-2]"],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}

#[test]
fn bench_reports() {
    let path = temp_table(
        "ok",
        "# two knots\n3_1\t[2; 1,1,1]\t3\n4_1\t[3; 1,-2,1,-2]\n",
    );
    let text = stdout(&["bench", path.to_str().unwrap()]);
    assert!(text.starts_with(
        "name\tletters\tnodes_total\tnodes_peak\telapsed_ms\tpolynomial\n3_1\t3\t5\t"
    ));
    assert!(text.contains("\ngrowth_metric\t"));
    let v: serde_json::Value = serde_json::from_str(&stdout(&[
        "bench",
        "--json",
        "--threads",
        "2",
        path.to_str().unwrap(),
    ]))
    .unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 2);
    assert_eq!(v["entries"][1]["name"], "4_1");

    let path = temp_table("unknot", "unknot\t[1; -]\n");
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["bench", "--json", path.to_str().unwrap()])).unwrap();
    assert_eq!(v["entries"][0]["nodes_total"], 1);
    assert_eq!(v["growth_metric"], 1.0);

    let memo = stdout(&["bench", "--json"]);
    let plain = stdout(&["bench", "--json", "--no-memo"]);
    let polys = |s: &str| {
        let v: serde_json::Value = serde_json::from_str(s).unwrap();
        v["entries"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| e["polynomial"].clone())
            .collect::<Vec<_>>()
    };
    assert!(polys(&memo).len() >= 30);
    assert_eq!(polys(&memo), polys(&plain));
}

#[test]
fn exit_codes() {
    assert_eq!(skein(&["eval", "[2; 0]"]).status.code(), Some(1));
    assert_eq!(skein(&["eval", "[2 1]"]).status.code(), Some(1));
    assert_eq!(skein(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(skein(&[]).status.code(), Some(1));
    assert_eq!(skein(&["--help"]).status.code(), Some(0));
    assert_eq!(skein(&["--version"]).status.code(), Some(0));
    assert_eq!(
        skein(&["bench", "/nonexistent/table.tsv"]).status.code(),
        Some(1)
    );
    let dup = temp_table("dup", "a\t[2; 1]\na\t[2; 1]\n");
    let out = skein(&["bench", dup.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let err = skein(&["eval", "[2; 0]"]);
    assert!(err.stdout.is_empty());
    assert!(!err.stderr.is_empty());
}

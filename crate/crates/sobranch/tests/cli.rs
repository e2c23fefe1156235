use std::process::{Command, Output};

use serde_json::Value;

fn sobranch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sobranch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = sobranch(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn classify_trivial_weight_of_so41() {
    let v = json(&[
        "classify", "--group", "SO(4,1)", "--weight", "0,0", "--json",
    ]);
    let members = v.as_array().unwrap();
    assert_eq!(members.len(), 5);
    let heights: Vec<u64> = members
        .iter()
        .map(|m| m["enhanced"]["height"].as_u64().unwrap())
        .collect();
    assert_eq!(heights, [0, 0, 1, 1, 2]);
    assert_eq!(members[4]["enhanced"]["signature"], "pm");
    assert_eq!(members[4]["langlands"]["variant"], "discrete_series");
}

#[test]
fn period_for_n2_i1() {
    let v = json(&["period", "--n", "2", "--i", "1"]);
    assert_eq!(v["pi_quarters"], 2);
    assert_eq!(v["pretty"], "π^{1/2}");
    assert_eq!(
        (v["num"].as_str(), v["den"].as_str()),
        (Some("1"), Some("1"))
    );
}

#[test]
fn branch_list_and_multiplicity() {
    let v = json(&[
        "branch",
        "--group",
        "SO(5,1)",
        "--enhanced",
        "1,1,0;h=1;sig=-",
        "--list",
    ]);
    assert_eq!(v.as_array().unwrap().len(), 4);
    for target in v.as_array().unwrap() {
        assert_eq!(target["group"], "SO(4,1)");
        assert_eq!(target["signature"], "-");
    }
    let m = json(&[
        "branch",
        "--group",
        "SO(5,1)",
        "--enhanced",
        "1,1,0;h=1;sig=-",
        "--pi",
        "1,0;h=1;sig=-",
    ]);
    assert_eq!(m["multiplicity"], 1);
    let m = json(&[
        "branch",
        "--group",
        "SO(5,1)",
        "--enhanced",
        "1,1,0;h=1;sig=-",
        "--pi",
        "1,0;h=1;sig=+",
    ]);
    assert_eq!(m["multiplicity"], 0);
}

#[test]
fn convert_round_trips() {
    let v = json(&[
        "convert",
        "--group",
        "SO(5,1)",
        "--langlands",
        "sigma=2,0;delta=+;lambda=0",
    ]);
    let e = &v["enhanced"];
    let spelled = format!(
        "{};h={};sig={}",
        e["weight"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(","),
        e["height"],
        e["signature"].as_str().unwrap()
    );
    let back = json(&["convert", "--group", "SO(5,1)", "--enhanced", &spelled]);
    assert_eq!(back, v);
}

#[test]
fn exit_codes() {
    assert_eq!(sobranch(&["--help"]).status.code(), Some(0));
    assert_eq!(sobranch(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(
        sobranch(&["classify", "--group", "SO(1,1)", "--weight", ""])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        sobranch(&["classify", "--group", "SO(4,1)", "--weight", "1,2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        sobranch(&["classify", "--group", "SO(4,1)", "--weight", "1,x"])
            .status
            .code(),
        Some(2)
    );
    // well-formed but outside the classified set
    let out = sobranch(&[
        "convert",
        "--group",
        "SO(5,1)",
        "--langlands",
        "sigma=1,0;delta=+;lambda=0",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn output_is_deterministic() {
    let args = [
        "hasse",
        "--group",
        "SO(6,1)",
        "--weight",
        "2,1,0",
        "--standard",
    ];
    let a = sobranch(&args);
    let b = sobranch(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn table_output_for_diagram() {
    let out = sobranch(&[
        "diagram",
        "--group",
        "SO(4,1)",
        "--weight",
        "0,0",
        "--sub-weight",
        "0,0",
        "--table",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("SO(4,1)  Pi_0    Pi_1    Pi_2\n"));
    assert!(text.contains("Pi_2 = (0,0 ||)_pm"));
}

#[test]
fn selftest_with_small_config() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("oracle.toml");
    std::fs::write(
        &path,
        "[roundtrip]\nmax_n = 6\nmax_entry = 2\n\n[chi-twist]\nmax_n = 5\nmax_entry = 1\n",
    )
    .unwrap();
    let args = [
        "selftest",
        "--config",
        path.to_str().unwrap(),
        "--suite",
        "roundtrip",
        "--suite",
        "chi-twist",
        "--jobs",
        "2",
    ];
    let v = json(&args);
    assert_eq!(v["passed"], true);
    let suites = v["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 2);
    assert!(suites
        .iter()
        .all(|s| s["cases_run"].as_u64().unwrap() > 0 && s.get("elapsed_ms").is_none()));
    assert_eq!(
        sobranch(&args).stdout,
        serde_json::to_vec_pretty(&v)
            .map(|mut b| {
                b.push(b'\n');
                b
            })
            .unwrap()
    );

    std::fs::write(&path, "[roundtrip]\nmax_n = 99\n").unwrap();
    assert_eq!(
        sobranch(&["selftest", "--config", path.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        sobranch(&["selftest", "--suite", "bogus"]).status.code(),
        Some(2)
    );
}

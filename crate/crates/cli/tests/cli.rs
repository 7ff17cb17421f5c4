use std::process::{Command, Output};

use serde_json::Value;

fn mackey(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mackey"))
        .args(args)
        .env_remove("MACKEY_ORDER_CAP")
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> (i32, Value) {
    let out = mackey(args);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (out.status.code().unwrap(), v)
}

#[test]
fn verify_s3_over_f2_passes() {
    let (code, v) = run(&["verify", "--group", "s3.json", "--prime", "2"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["payload"]["fields"], serde_json::json!(["F2"]));
}

#[test]
fn crossed_burnside_of_c2_has_rank_four() {
    let (code, v) = run(&["xburn", "--group", "c2", "--prime", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["rank"], 4);
    assert_eq!(v["payload"]["associative"], true);
    assert_eq!(v["payload"]["rho_coh"]["verified"], true);
}

#[test]
fn s3_has_two_blocks_in_characteristic_two() {
    let (code, v) = run(&["blocks", "--group", "s3", "--prime", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["count"], 2);
    let mut dims: Vec<u64> = v["payload"]["dims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d.as_u64().unwrap())
        .collect();
    dims.sort();
    assert_eq!(dims, vec![2, 4]);
}

#[test]
fn same_seed_gives_identical_bytes() {
    for args in [
        &["blocks", "--group", "s4", "--prime", "3", "--seed", "7"][..],
        &[
            "vertex", "--group", "s4", "--module", "regular", "--prime", "2", "--seed", "7",
        ][..],
    ] {
        let a = mackey(args);
        let b = mackey(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn timing_is_opt_in() {
    let (_, v) = run(&["tom", "--group", "a4"]);
    assert!(v.get("timing_ms").is_none());
    let (_, v) = run(&["tom", "--group", "a4", "--timing"]);
    assert!(v["timing_ms"]["marks"].is_number());
}

#[test]
fn malformed_input_exits_two() {
    for args in [
        &["group", "--group", "{not json"][..],
        &["group", "--group", "nonesuch"][..],
        &["group", "--group", r#"{"degree": 3, "generators": [[0, 0, 1]]}"#][..],
        &["blocks", "--group", "s3", "--prime", "4"][..],
        &["vertex", "--group", "s3", "--module", "perm:class:99", "--prime", "2"][..],
    ] {
        let (code, v) = run(args);
        assert_eq!(code, 2, "{args:?}: {v}");
        assert_eq!(v["status"], "error");
        assert!(v["reason"].is_string());
    }
}

#[test]
fn order_cap_exceeded_exits_two() {
    let out = Command::new(env!("CARGO_BIN_EXE_mackey"))
        .args(["group", "--group", "s4"])
        .env("MACKEY_ORDER_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mackey_check_passes_and_fails() {
    let (code, v) = run(&[
        "mackey-check",
        "--group",
        "s3",
        "--functor",
        "fixed-points",
        "--module",
        "regular",
    ]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["payload"]["cohomological"]["holds"], true);

    // the Burnside functor is a Green functor but not cohomological
    let (code, v) = run(&["mackey-check", "--group", "c2", "--functor", "burnside"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["cohomological"]["holds"], false);

    let dir = std::env::temp_dir().join(format!("mackey-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.json");
    let (code, _) = run(&[
        "mackey-check",
        "--group",
        "c2",
        "--functor",
        "hom",
        "--x",
        "regular",
        "--y",
        "regular",
        "--field",
        "Q",
        "--export",
        good.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let (code, _) = run(&["mackey-check", "--functor", "load", "--load", good.to_str().unwrap()]);
    assert_eq!(code, 0);

    // double the transfer from the trivial subgroup to C2
    let mut file: Value = serde_json::from_str(&std::fs::read_to_string(&good).unwrap()).unwrap();
    let levels = file["functor"]["levels"].clone();
    let top = levels
        .as_array()
        .unwrap()
        .iter()
        .position(|l| l["subgroup"].as_array().unwrap().len() == 2)
        .unwrap();
    let bottom = 1 - top;
    for t in file["functor"]["transfers"].as_array_mut().unwrap() {
        if t["from"] == bottom && t["to"] == top {
            for row in t["matrix"].as_array_mut().unwrap() {
                for e in row.as_array_mut().unwrap() {
                    let x: i64 = e.as_str().unwrap().parse().unwrap();
                    *e = Value::String((2 * x).to_string());
                }
            }
        }
    }
    let bad = dir.join("bad.json");
    std::fs::write(&bad, file.to_string()).unwrap();
    let (code, v) = run(&["mackey-check", "--functor", "load", "--load", bad.to_str().unwrap()]);
    assert_eq!(code, 1, "{v}");
    assert_eq!(v["status"], "fail");
    assert_eq!(v["first_failure"]["clause"], "mackey");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn green_correspondence_census() {
    let (code, v) = run(&["green-corr", "--group", "s4", "--d", "sylow:3", "--prime", "3"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["payload"]["bijection"], true);
    assert_eq!(v["payload"]["h_side"].as_array().unwrap().len(), 2);
}

#[test]
fn isocomma_sweep_matches() {
    let (code, v) = run(&["isocomma", "--group", "d8"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["pairs"], v["payload"]["matched"]);
}

#[test]
fn text_format() {
    let out = mackey(&["tom", "--group", "c2", "--format", "text"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.starts_with("tom: pass\n"));
    assert!(s.contains("rank: 2"));
}

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn z2tk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_z2tk"))
        .args(args)
        .env_remove("Z2TK_DERIV_CAP")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = z2tk(&full);
    (code(&o), serde_json::from_slice(&o.stdout).expect("valid JSON"))
}

fn schema() -> jsonschema::JSONSchema {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/report-schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::JSONSchema::options()
        .with_draft(jsonschema::Draft::Draft7)
        .compile(&schema)
        .expect("schema compiles")
}

#[test]
fn verify_relations_exit_codes() {
    let (c, v) = json(&["verify-relations", "--rep", "DEl"]);
    assert_eq!(c, 0);
    assert_eq!(v["report"]["relations"].as_array().unwrap().len(), 21);
    assert_eq!(v["report"]["all_pass"], true);

    let (c, v) = json(&["verify-relations", "--rep", "DE"]);
    assert_eq!(c, 0);
    assert_eq!(v["report"]["z_matrix_zero"], true);

    assert_eq!(code(&z2tk(&["verify-relations", "--rep", "bogus"])), 64);
    assert_eq!(code(&z2tk(&["frobnicate"])), 64);
    assert_eq!(code(&z2tk(&["--help"])), 0);
}

#[test]
fn decompose_block_dimensions() {
    let dims = |v: &Value, key: &str| -> Vec<u64> {
        v["report"][key].as_array().unwrap().iter().map(|b| b["dim"].as_u64().unwrap()).collect()
    };
    let (c, v) = json(&["decompose", "--rep", "DE"]);
    assert_eq!(c, 0);
    assert_eq!(dims(&v, "blocks"), vec![4, 4, 4, 4]);
    let (c, v) = json(&["decompose", "--rep", "DEl", "--lambda-eq-E2"]);
    assert_eq!(c, 0);
    assert_eq!(dims(&v, "blocks"), vec![8, 8, 8, 8]);
    assert_eq!(dims(&v, "irreps_on_locus"), vec![4, 4, 4, 4]);
    // table mismatches are flagged, not failures
    let flagged = v["report"]["blocks"].as_array().unwrap().iter().filter(|b| b["matches_reference"] == false).count();
    assert!(flagged > 0);
    assert_eq!(code(&z2tk(&["decompose", "--rep", "DE", "--lambda-eq-E2"])), 64);
}

#[test]
fn probe_panel_and_single_points() {
    let (c, v) = json(&["probe"]);
    assert_eq!(c, 0);
    let got: Vec<(String, String, String, u64)> = v["report"]["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                r["block"].as_str().unwrap().to_string(),
                r["E"].as_str().unwrap().to_string(),
                r["lambda"].as_str().unwrap().to_string(),
                r["dim"].as_u64().unwrap(),
            )
        })
        .collect();
    let expected = [("1", "2", 8), ("2", "3", 8), ("3", "-1", 8), ("1", "1", 4), ("2", "4", 4)];
    for block in ["D1", "D2"] {
        for (e, l, d) in expected {
            assert!(got.contains(&(block.into(), e.into(), l.into(), d)), "{block} {e} {l}");
        }
    }

    let (c, v) = json(&["probe", "--block", "D2", "--E", "2", "--lambda", "4", "--seed", "1,0"]);
    assert_eq!(c, 0);
    assert_eq!(v["report"]["results"][0]["dim"], 4);

    let (c, v) = json(&["probe", "--block", "D1", "--E", "1/2+i", "--lambda", "-3/4+i"]);
    assert_eq!(c, 0);
    assert_eq!(v["report"]["results"][0]["on_locus"], true);
    assert_eq!(v["report"]["results"][0]["dim"], 4);

    assert_eq!(code(&z2tk(&["probe", "--block", "D1", "--E", "0", "--lambda", "0"])), 64);
    assert_eq!(code(&z2tk(&["probe", "--E", "1.5", "--lambda", "2"])), 64);
    assert_eq!(code(&z2tk(&["probe", "--E", "1"])), 64);
    assert_eq!(code(&z2tk(&["probe", "--seed", "0,0"])), 64);
}

#[test]
fn intertwiners_vanish_between_inequivalent_blocks() {
    let (c, v) = json(&["intertwine"]);
    assert_eq!(c, 0);
    for p in v["report"]["pairs"].as_array().unwrap() {
        if p["expected"] == 0 {
            assert_eq!(p["dim"], 0, "{p}");
        }
    }
}

#[test]
fn mechanics_reports() {
    let (c, v) = json(&["mechanics", "--L", "L0"]);
    assert_eq!(c, 0);
    let charges = v["report"]["charges"].as_array().unwrap();
    let z = charges.iter().find(|q| q["generator"] == "Z").unwrap();
    assert_eq!(z["reference"], "dx*dzbar + dxbar*dz");
    assert!(charges.iter().all(|q| q["charge"] != "0" && q["matches"] == true && q["conserved"] == true));

    let o = z2tk(&["mechanics", "--L", "L4", "--on-shell"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("    Z = 0\n"));

    let (_, v) = json(&["mechanics", "--L", "L2", "--on-shell"]);
    let z = v["report"]["charges"].as_array().unwrap().iter().find(|q| q["generator"] == "Z").unwrap().clone();
    assert_eq!(z["charge"], "F*A - Fbar*A");
    assert_eq!(z["on_shell"], "0");

    // Lg is not invariant under delta01 and delta11, so the contract exit is 2.
    let (c, v) = json(&["mechanics", "--action1", "--g", "mu*x*xbar"]);
    assert_eq!(c, 2);
    assert_eq!(v["report"]["matches_reference_mod_total_derivative"], true);
    assert_eq!(v["report"]["q10_identity_with_q10"], true);

    assert_eq!(code(&z2tk(&["mechanics", "--action1", "--g", "x"])), 64);
    assert_eq!(code(&z2tk(&["mechanics", "--action1", "--g", "mu*"])), 64);
    assert_eq!(code(&z2tk(&["mechanics", "--L", "L9"])), 64);
    assert_eq!(code(&z2tk(&["mechanics"])), 64);
}

#[test]
fn derivative_cap_from_environment() {
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_z2tk"))
            .args(["mechanics", "--action1"])
            .env("Z2TK_DERIV_CAP", cap)
            .output()
            .unwrap()
    };
    // the action needs third derivatives and its variations fourth ones
    assert_eq!(code(&run("2")), 70);
    assert_eq!(code(&run("banana")), 64);
    assert_eq!(code(&run("6")), 2);
}

#[test]
fn dump_matches_the_module() {
    let (c, v) = json(&["dump", "--rep", "DE"]);
    assert_eq!(c, 0);
    assert_eq!(v["report"]["dim"], 16);
    let z = v["report"]["generators"]["Z"].as_array().unwrap();
    assert!(z.iter().all(|col| col["text"] == "0"));
    let o = z2tk(&["dump", "--rep", "DEl"]);
    assert!(stdout(&o).contains("Z:\n  v1 -> u5\n"));
}

#[test]
fn all_aggregates_the_suite() {
    let (c, v) = json(&["all"]);
    assert_eq!(c, 0);
    let r = &v["report"];
    assert_eq!(r["unexpected_failures"].as_array().unwrap().len(), 0);
    assert_eq!(r["expected_failures_now_passing"].as_array().unwrap().len(), 0);
    assert!(!r["errata"].as_array().unwrap().is_empty());
    let criteria: std::collections::BTreeSet<u64> =
        r["checks"].as_array().unwrap().iter().map(|c| c["criterion"].as_u64().unwrap()).collect();
    assert_eq!(criteria, (1..=10).collect());
}

#[test]
fn output_is_deterministic_and_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = z2tk(&["--format", "json", "--output", p.to_str().unwrap(), "mechanics", "--L", "L3"]);
        assert_eq!(code(&o), 0);
        assert!(o.stdout.is_empty());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let t1 = stdout(&z2tk(&["decompose", "--rep", "DEl"]));
    let t2 = stdout(&z2tk(&["decompose", "--rep", "DEl"]));
    assert_eq!(t1, t2);
    let bad = dir.path().join("missing/dir/out.json");
    assert_eq!(code(&z2tk(&["--output", bad.to_str().unwrap(), "verify-relations", "--rep", "DE"])), 74);
}

#[test]
fn json_reports_validate_against_the_schema() {
    let schema = schema();
    let commands: [&[&str]; 11] = [
        &["verify-relations", "--rep", "DEl"],
        &["decompose", "--rep", "DE"],
        &["decompose", "--rep", "DEl", "--lambda-eq-E2"],
        &["probe"],
        &["intertwine"],
        &["mechanics", "--L", "L0"],
        &["mechanics", "--L", "L2", "--on-shell"],
        &["mechanics", "--action1"],
        &["dump", "--rep", "DE"],
        &["dump", "--rep", "DEl"],
        &["all"],
    ];
    for args in commands {
        let (_, v) = json(args);
        let msgs: Vec<String> = match schema.validate(&v) {
            Ok(()) => Vec::new(),
            Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
        };
        assert!(msgs.is_empty(), "{args:?}: {msgs:?}");
    }
    let mut broken = json(&["verify-relations", "--rep", "DE"]).1;
    broken["report"]["dim"] = Value::String("sixteen".into());
    assert!(!schema.is_valid(&broken));
}

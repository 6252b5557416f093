use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn dmc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dmc")).args(args).env_remove("DMC_CHECKS").env_remove("DMC_FORMAT").output().expect("runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dmc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn every_fixture_verifies() {
    for name in ["abelian2", "odd-square", "heis", "koszul-x2", "harrison-d2"] {
        let o = dmc(&["verify", name, "--format", "json"]);
        assert_eq!(code(&o), 0, "{name}: {}", String::from_utf8_lossy(&o.stdout));
        let r = json(&o);
        assert_eq!(r["fixture"], name);
        assert_eq!(r["chain_map"]["pass"], true);
        let rows = r["cohomology"].as_array().unwrap();
        assert!(!rows.is_empty() && rows.iter().all(|row| row["induced"] == "iso"));
    }
}

#[test]
fn abelian_fixtures_get_larger_default_bounds() {
    let r = json(&dmc(&["verify", "abelian2", "--checks", "validate", "--format", "json"]));
    assert_eq!((r["bounds"]["levels"].as_u64(), r["bounds"]["weight"].as_u64()), (Some(4), Some(4)));
    let r = json(&dmc(&["verify", "heis", "--checks", "validate", "--format", "json"]));
    assert_eq!((r["bounds"]["levels"].as_u64(), r["bounds"]["weight"].as_u64()), (Some(3), Some(3)));
}

#[test]
fn flipped_sign_fails_with_a_witness() {
    let o = dmc(&["verify", "odd-square", "--flip-binary-sign", "--format", "json"]);
    assert_eq!(code(&o), 1);
    let w = &json(&o)["chain_map"]["witness"];
    assert_eq!(w["degree"], -1);
    assert_eq!(w["defect_weight"], 2);
    let text = String::from_utf8(dmc(&["verify", "odd-square", "--flip-binary-sign"]).stdout).unwrap();
    assert!(text.contains("chain map: FAIL at degree -1"), "{text}");
}

#[test]
fn malformed_input_is_a_configuration_error() {
    let p = scratch("broken.json", "{\"name\": ");
    assert_eq!(code(&dmc(&["validate", p.to_str().unwrap()])), 2);
    assert_eq!(code(&dmc(&["verify", "no-such-fixture"])), 2);
    assert_eq!(code(&dmc(&["verify", "heis", "--checks", "phi,bogus"])), 2);
    assert_eq!(code(&dmc(&["verify", "heis", "--weight", "0"])), 2);
    assert_eq!(code(&dmc(&["verify", "heis", "--jobs", "0"])), 2);
    assert_eq!(code(&dmc(&["selftest", "--checks", "phi"])), 2);
}

#[test]
fn bracket_degree_mismatch_names_the_bracket() {
    let p = scratch(
        "degree.json",
        r#"{"name":"bad","generators":[{"name":"x","degree":1},{"name":"y","degree":2}],
            "brackets":[{"args":["x","y"],"value":[{"gen":"y","coef":"1"}]}],"max_arity":2}"#,
    );
    let o = dmc(&["validate", p.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&o), 1);
    let detail = json(&o)["checks"][0]["detail"][0].as_str().unwrap().to_string();
    assert!(detail.contains("[\"x\", \"y\"]") && detail.contains("expected 3"), "{detail}");
}

#[test]
fn json_is_deterministic_across_thread_counts() {
    let args = ["verify", "heis", "odd-square", "koszul-x2", "--format", "json", "--checks", "phi,quasi-iso,freeness,matching"];
    let one = dmc(&[&args[..], &["--jobs", "1"]].concat());
    let four = dmc(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
    let fixtures: Vec<Value> = json(&one).as_array().unwrap().iter().map(|r| r["fixture"].clone()).collect();
    assert_eq!(fixtures, ["heis", "odd-square", "koszul-x2"]);
}

#[test]
fn environment_overrides_flags() {
    let o = Command::new(env!("CARGO_BIN_EXE_dmc"))
        .args(["verify", "heis"])
        .env("DMC_CHECKS", "validate,ce")
        .env("DMC_FORMAT", "json")
        .env("DMC_LEVELS", "2")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["checks"].as_array().unwrap().len(), 2);
    assert_eq!(r["bounds"]["levels"], 2);
}

#[test]
fn informational_mismatches_do_not_fail() {
    let r = json(&dmc(&["verify", "heis", "--checks", "mc", "--format", "json"]));
    let oracles = r["oracles"].as_array().unwrap();
    assert!(oracles.iter().any(|o| o["informational"] == true && o["agrees"] == false));
    assert!(oracles.iter().all(|o| o["informational"] == true || o["agrees"] == true));
    assert_eq!(r["checks"][0]["status"], "pass");
}

#[test]
fn selftest_passes() {
    let o = dmc(&["selftest", "--levels", "3", "--seed", "11"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let text = String::from_utf8(o.stdout).unwrap();
    for name in ["ez-selftest", "pairing", "normalize", "simplex-identities"] {
        assert!(text.contains(&format!("PASS {name}")), "{name}");
    }
}

#[test]
fn structural_checks_run_alongside_inputs() {
    let o = dmc(&["verify", "odd-square", "--checks", "validate,pairing", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let doc = json(&o);
    assert_eq!(doc[1]["selftest"][0]["name"], "pairing");
}

#[test]
fn mc_locus_lists_coordinates_and_classical_locus() {
    let o = dmc(&["mc-locus", "heis", "--levels", "2", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["coordinates"][0]["names"], serde_json::json!(["x1[]", "x2[]"]));
    assert_eq!(r["classical"]["curvature"], serde_json::json!(["x1[]*x2[]"]));
    assert_eq!(r["classical"]["agree"], true);
    let maps: Vec<&str> = r["structure_maps"].as_array().unwrap().iter().map(|m| m["map"].as_str().unwrap()).collect();
    assert!(maps.contains(&"s^0: MC^1 -> MC^0") && maps.contains(&"d^2: MC^1 -> MC^2"));
}

#[test]
fn written_fixtures_validate() {
    let dir = std::env::temp_dir().join(format!("dmc-cli-fixtures-{}", std::process::id()));
    let o = dmc(&["fixtures", "--write", dir.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let paths: Vec<String> = String::from_utf8(o.stdout).unwrap().lines().map(String::from).collect();
    assert_eq!(paths.len(), 5);
    let mut args = vec!["validate"];
    args.extend(paths.iter().map(String::as_str));
    assert_eq!(code(&dmc(&args)), 0);
}

use std::path::PathBuf;
use std::process::Command;

use hypertopo::fixtures::{fix_a, fix_b_e11, fix_b_e21, fix_c_coloring, fix_f};
use hypertopo::io::{canonical_hypergraph_json, canonicalize_hypergraph_text, GraphDocument};
use hypertopo_cli::run;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn fixture(name: &str) -> String {
    root().join("fixtures").join(name).to_string_lossy().into_owned()
}

fn expected_fixtures() -> Vec<(&'static str, String)> {
    let mut c = serde_json::to_string_pretty(&GraphDocument::from_coloring(&fix_c_coloring())).unwrap();
    c.push('\n');
    vec![
        ("fixA.json", canonical_hypergraph_json(&fix_a(), None)),
        ("fixB-e11.json", canonical_hypergraph_json(&fix_b_e11(), None)),
        ("fixB-e21.json", canonical_hypergraph_json(&fix_b_e21(), None)),
        ("fixF-6.json", canonical_hypergraph_json(&fix_f(6).unwrap(), None)),
        ("fixC.json", c),
    ]
}

#[test]
fn fixtures_are_current_and_round_trip() {
    let bless = std::env::var_os("HYPERTOPO_BLESS").is_some();
    for (name, want) in expected_fixtures() {
        let path = fixture(name);
        if bless {
            std::fs::write(&path, &want).unwrap();
        }
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text, want, "{name} is stale; rerun with HYPERTOPO_BLESS=1");
        if name != "fixC.json" {
            assert_eq!(canonicalize_hypergraph_text(&text).unwrap(), text, "{name}");
            let o = run(["hypertopo", "canon", &path]);
            assert_eq!((o.code, o.stdout.as_str()), (0, text.as_str()));
        }
    }
}

#[test]
fn messy_input_canonicalizes() {
    let dir = std::env::temp_dir().join("hypertopo-cli-messy.json");
    std::fs::write(&dir, r#"{"edges":[[4,3,2],[2,1,1,3],[4,2,1]],"ground":[4,1,2,3]}"#).unwrap();
    let o = run(["hypertopo", "canon", dir.to_str().unwrap()]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.contains("[1, 2, 3],\n    [1, 2, 4],\n    [2, 3, 4]"), "{}", o.stdout);
}

#[test]
fn documented_examples() {
    let o = run(["hypertopo", "gen", "strong", "--m", "4", "--t", "2"]);
    assert_eq!(o.code, 0);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["edges"], serde_json::json!([[1, 2, 3], [1, 2, 4], [2, 3, 4]]));

    let o = run(["hypertopo", "verify", &fixture("fixA.json"), "--strict"]);
    assert_eq!(o.code, 0, "{}", o.stdout);

    let o = run(["hypertopo", "count", "trees", "--n", "4", "--complete"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["count"], 16);
}

#[test]
fn exit_codes() {
    // verified failure
    assert_eq!(run(["hypertopo", "verify", &fixture("fixB-e11.json"), "--strict"]).code, 1);
    assert_eq!(run(["hypertopo", "verify", &fixture("fixB-e21.json"), "--strict"]).code, 0);
    assert_eq!(run(["hypertopo", "group", "check", &fixture("fixA.json"), "--modulus", "8"]).code, 0);
    // usage
    assert_eq!(run(["hypertopo", "frobnicate"]).code, 2);
    assert_eq!(run(["hypertopo", "gen", "cyclic", "--n", "4", "--k", "4"]).code, 2);
    assert_eq!(run(["hypertopo", "enum", "--ground", "9"]).code, 2);
    assert_eq!(run(["hypertopo", "count", "trees"]).code, 2);
}

#[test]
fn parse_errors_carry_positions() {
    let p = std::env::temp_dir().join("hypertopo-cli-bad.json");
    std::fs::write(&p, "{\n  \"ground\": [1, 2, 3],\n  \"edges\": [[1, 2], [2, x]]\n}\n").unwrap();
    let o = run(["hypertopo", "verify", p.to_str().unwrap()]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("line 3, column 25"), "{}", o.stderr);
}

#[test]
fn binary_is_deterministic() {
    let bin = env!("CARGO_BIN_EXE_hypertopo");
    let cases: Vec<Vec<String>> = vec![
        vec!["metrics".into(), fixture("fixA.json")],
        vec!["graph".into(), fixture("fixA.json"), "--out".into(), "dot".into()],
        vec!["enum".into(), "--ground".into(), "3".into(), "--strict".into()],
        vec!["keys".into(), "--ground".into(), "4".into(), "--limit".into(), "3".into(), "--seed".into(), "7".into()],
        vec!["cycle".into(), fixture("fixA.json"), "--jobs".into(), "3".into()],
        vec!["topcode".into(), fixture("fixC.json")],
    ];
    for args in cases {
        let a = Command::new(bin).args(&args).output().unwrap();
        let b = Command::new(bin).args(&args).output().unwrap();
        assert!(a.status.success(), "{args:?}: {}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn seed_comes_from_environment() {
    let bin = env!("CARGO_BIN_EXE_hypertopo");
    let keys = |env: Option<&str>, flag: Option<&str>| {
        let mut c = Command::new(bin);
        c.args(["keys", "--ground", "5", "--limit", "4"]).env_remove("HYPERTOPO_SEED");
        if let Some(s) = env {
            c.env("HYPERTOPO_SEED", s);
        }
        if let Some(s) = flag {
            c.args(["--seed", s]);
        }
        let v: serde_json::Value = serde_json::from_slice(&c.output().unwrap().stdout).unwrap();
        v["seed"].as_u64().unwrap()
    };
    assert_eq!(keys(None, None), 0);
    assert_eq!(keys(Some("11"), None), 11);
    assert_eq!(keys(Some("11"), Some("3")), 3);
    let bad = Command::new(bin).args(["keys", "--ground", "4"]).env("HYPERTOPO_SEED", "x").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn color_verify_kinds() {
    let g = std::env::temp_dir().join("hypertopo-cli-p4.json");
    std::fs::write(&g, r#"{"vertices":4,"edges":[[0,1],[1,2],[2,3]],"vertex_colors":[0,3,1,2],"edge_colors":[3,2,1]}"#).unwrap();
    let path = g.to_str().unwrap();
    let o = run(["hypertopo", "color", "verify", path, "--kind", "graceful"]);
    assert_eq!(o.code, 0, "{}{}", o.stdout, o.stderr);
    let o = run(["hypertopo", "color", "verify", path, "--kind", "6c"]);
    assert_eq!(o.code, 1, "{}{}", o.stdout, o.stderr);
    let o = run(["hypertopo", "color", "verify", path, "--kind", "harmonious"]);
    assert_eq!(o.code, 1);
}

use std::path::PathBuf;
use std::process::{Command, Output};

use arrangement_kappa::config::{maclane_c8, IncidenceIndex};
use arrangement_kappa::lcs::maclane::{g_plus, G_MINUS_JSON, G_PLUS_JSON};
use arrangement_kappa::words::Word;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arrangement-kappa"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("arrangement-kappa-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn s(p: &PathBuf) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_exit_codes() {
    assert_eq!(run(&["validate", "builtin:c8"]).status.code(), Some(0));
    let lonely = scratch(
        "lonely.json",
        r#"{"lines": ["a", "b", "c"], "infinity": "a",
            "points": [{"name": "p", "lines": ["a", "b", "c"]}, {"name": "q", "lines": ["b"]}]}"#,
    );
    let out = run(&["validate", s(&lonely)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("axiom (2)"));
    let broken = scratch("broken.json", "{\"lines\": [");
    assert_eq!(run(&["validate", s(&broken)]).status.code(), Some(2));
    assert_eq!(run(&["validate", "/nonexistent/c.json"]).status.code(), Some(2));
}

#[test]
fn maclane_report_variants() {
    let out = run(&["maclane-report"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["passed"], true);
    let kappa = r["checks"].as_array().unwrap().iter().find(|c| c["name"] == "kappa").unwrap();
    assert_eq!(kappa["details"]["zero"], false);
    assert_eq!(kappa["details"]["t_value"], 1);

    let swapped = json(&run(&["maclane-report", "--swap-g"]));
    let kappa = swapped["checks"].as_array().unwrap().iter().find(|c| c["name"] == "kappa").unwrap();
    assert_eq!(kappa["details"]["zero"], true);

    let out = run(&["maclane-report", "--no-hardcoded"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let names: Vec<&str> = r["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"r3perp_recomputed"));
    assert!(!names.contains(&"tau_star_identities"));
}

#[test]
fn c13_report_is_deterministic() {
    let a = run(&["c13-report", "--seed", "4"]);
    let b = run(&["c13-report", "--seed", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let r = json(&a);
    assert_eq!(r["verdict"], "distinct fundamental groups mod gamma_4");
    let autos = r["checks"].as_array().unwrap().iter().find(|c| c["name"] == "automorphism_group").unwrap();
    assert_eq!(autos["details"]["order"], 12);

    let forced = json(&run(&["c13-report", "--seed", "4", "--degenerate-first"]));
    assert_eq!(forced["verdict"], r["verdict"]);
    let psi = forced["checks"].as_array().unwrap().iter().find(|c| c["name"] == "generic_psi").unwrap();
    assert_eq!(psi["details"]["rejected"][0]["seed"], Value::Null);
    assert!(run(&["--quiet", "c13-report"]).stdout.is_empty());
}

#[test]
fn kappa_on_shifted_maps() {
    let c = maclane_c8();
    let idx = IncidenceIndex::new(&c);
    let plus = scratch("g_plus.json", G_PLUS_JSON);
    let minus = scratch("g_minus.json", G_MINUS_JSON);
    let zero = |out: &Output| {
        let r = json(out);
        assert_eq!(out.status.code(), Some(0));
        r["checks"][0]["details"]["zero"].as_bool().unwrap()
    };
    assert!(!zero(&run(&["kappa", "builtin:c8", s(&plus), s(&minus)])));

    // g(i, p) ↦ w_i g(i, p) at one pair moves ḡ by a generator of U
    let g = g_plus(&c, &idx).unwrap();
    let mut u_shift = g.clone();
    let (i, _) = idx.pairs()[0];
    u_shift.set(0, Word::generator(i).mul(g.get(0)));
    let u_file = scratch("g_u.json", &u_shift.to_json(&c, &idx));
    assert!(zero(&run(&["kappa", "builtin:c8", s(&plus), s(&u_file)])));

    // the same extra letter at every point of one line moves ḡ inside B
    let mut b_shift = g.clone();
    for (k, &(line, _)) in idx.pairs().iter().enumerate() {
        if line == 3 {
            b_shift.set(k, g.get(k).mul(&Word::generator(5)));
        }
    }
    let b_file = scratch("g_b.json", &b_shift.to_json(&c, &idx));
    assert!(zero(&run(&["kappa", "builtin:c8", s(&plus), s(&b_file)])));

    let bad_key = scratch("bad_key.json", r#"{"(3,p999)": "w1"}"#);
    assert_eq!(run(&["kappa", "builtin:c8", s(&plus), s(&bad_key)]).status.code(), Some(2));
}

#[test]
fn missing_inputs_are_input_errors() {
    let out = run(&["kappa", "builtin:c13", "/nonexistent/g.json", "/nonexistent/g.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dump_contains_the_tables() {
    let out = run(&["dump-paper-data"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["c8"]["points"].as_array().unwrap().len(), 12);
    assert_eq!(v["relators_plus"].as_array().unwrap().len(), 8);
    assert_eq!(v["a0"].as_array().unwrap().len(), 3);
    // z1 + ω⁻¹ z2 = 0 after scaling, with ω⁻¹ = -1 - ω
    assert_eq!(v["phi_plus"][5][2], "-1-1*w");
}

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use suppkit::field::Field;
use suppkit::poly::{Ideal, Ring};
use suppkit::varieties::variety_equal_up_to_radical;
use suppkit_cli::input::Input;

fn corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn suppkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_suppkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("json report")
}

fn corpus_file(name: &str) -> String {
    corpus().join(name).to_string_lossy().into_owned()
}

fn scratch_dir(name: &str) -> PathBuf {
    let d = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn gb_of_empty_generating_set() {
    let r = report(&suppkit(&["gb", &corpus_file("empty.json")]));
    assert_eq!(r["command"], "gb");
    assert_eq!(r["results"]["basis"], Value::Array(vec![]));
    assert_eq!(r["results"]["zero_ideal"], true);
}

#[test]
fn gb_membership_probes() {
    let r = report(&suppkit(&["gb", &corpus_file("plane_monomial_ideal.json"), "--order", "lex"]));
    let m = r["results"]["membership"].as_array().unwrap();
    assert_eq!(m[0]["member"], true);
    assert_eq!(m[1]["member"], false);
}

#[test]
fn rankvar_of_lx_is_the_first_axis() {
    let r = report(&suppkit(&["rankvar", &corpus_file("v4_Lx.json")]));
    let ring = Ring::numbered(Field::prime(2).unwrap(), "a", 2, 1);
    let gens: Vec<&str> = r["results"]["ideal"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    let got = Ideal::parse(&ring, &gens).unwrap();
    let want = Ideal::parse(&ring, &["a1"]).unwrap();
    assert!(variety_equal_up_to_radical(&got, &want).unwrap());
    assert_eq!(r["results"]["routes_agree"], true);
    assert!(r["warnings"].as_array().unwrap().iter().any(|w| w == "ann truncated at bound 12"));
}

#[test]
fn localcoh_plane_corner() {
    let r = report(&suppkit(&["localcoh", &corpus_file("plane_maximal.json"), "--box=4"]));
    let degrees = &r["results"]["cohomology"]["degrees"];
    assert_eq!(degrees["0"], Value::Array(vec![]));
    assert_eq!(degrees["1"], Value::Array(vec![]));
    let h2 = degrees["2"].as_array().unwrap();
    assert_eq!(h2.len(), 16);
    for cell in h2 {
        let beta = cell[0].as_array().unwrap();
        assert!(beta.iter().all(|b| b.as_i64().unwrap() <= -1));
        assert_eq!(cell[1], 1);
    }
    assert!(h2.iter().any(|c| c[0] == serde_json::json!([-1, -1])));
}

#[test]
fn triangle_and_mv_reports() {
    let t = report(&suppkit(&["triangle", &corpus_file("punctured_plane.json"), "--box", "3"]));
    assert_eq!(t["results"]["passes"], true);
    let rows = t["results"]["triangle"]["rows"].as_array().unwrap();
    let m = rows.iter().find(|r| r["prime"] == "(x,y)").unwrap();
    assert_eq!(m["in_ell"], false);
    let mv = report(&suppkit(&["mv-check", &corpus_file("plane_mod_x.json")]));
    assert_eq!(mv["results"]["report"]["passes"], true);
}

#[test]
fn benson_agrees_with_rank_variety() {
    let r = report(&suppkit(&["benson", &corpus_file("v4_Lx.json"), "--bound", "8"]));
    for row in r["results"]["primes"].as_array().unwrap() {
        assert_eq!(row["outcome"]["member"], row["rank_variety_member"], "{}", row["prime"]);
    }
}

#[test]
fn decompose_direct_sum() {
    let r = report(&suppkit(&["decompose", &corpus_file("v4_Lx_plus_Ly.json"), "--seed", "3"]));
    assert_eq!(r["results"]["summands"].as_array().unwrap().len(), 2);
    assert_eq!(r["results"]["krs_groups"].as_array().unwrap().len(), 2);
}

#[test]
fn ext_and_carlson_reports() {
    let e = report(&suppkit(&["ext", &corpus_file("v4_k.json"), "--bound", "6"]));
    let dims: Vec<u64> = e["results"]["ext"]["dims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert_eq!(dims, vec![1, 2, 3, 4, 5, 6, 7]);
    assert_eq!(e["results"]["chi_commute"], true);
    assert_eq!(e["results"]["operators_reassemble"], true);
    let c = report(&suppkit(&["carlson", &corpus_file("v4_Lxy.json")]));
    assert_eq!(c["results"]["module"]["dim"], 2);
    assert_eq!(c["results"]["syzygy_dim"], 3);
}

#[test]
fn support_of_each_input_kind() {
    for f in ["plane_monomial_ideal.json", "plane_mod_xy.json", "v4_Lx.json"] {
        let r = report(&suppkit(&["support", &corpus_file(f)]));
        assert_eq!(r["command"], "support");
    }
}

#[test]
fn results_are_deterministic() {
    for args in [
        vec!["decompose", "v4_Lx_plus_Ly.json"],
        vec!["rankvar", "v4_Lxy.json"],
        vec!["triangle", "plane_mod_xy.json"],
    ] {
        let path = corpus_file(args[1]);
        let a = report(&suppkit(&[args[0], &path]));
        let b = report(&suppkit(&[args[0], &path]));
        assert_eq!(a["results"].to_string(), b["results"].to_string());
        assert_eq!(a["input_hash"], b["input_hash"]);
    }
}

#[test]
fn input_hash_depends_on_options() {
    let path = corpus_file("v4_k.json");
    let a = report(&suppkit(&["rankvar", &path, "--bound", "8"]));
    let b = report(&suppkit(&["rankvar", &path, "--bound", "9"]));
    assert_ne!(a["input_hash"], b["input_hash"]);
}

#[test]
fn corpus_round_trips() {
    let mut n = 0;
    for entry in std::fs::read_dir(corpus()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_none_or(|x| x != "json") {
            continue;
        }
        let text = std::fs::read_to_string(&path).unwrap();
        let parsed = Input::parse(&text).unwrap();
        let again = Input::parse(&serde_json::to_string(&parsed).unwrap()).unwrap();
        assert_eq!(parsed, again, "{}", path.display());
        n += 1;
    }
    assert!(n >= 15);
}

#[test]
fn shipped_corpus_passes_axioms() {
    let r = report(&suppkit(&["axioms", &corpus().to_string_lossy()]));
    assert_eq!(r["results"]["all_pass"], true);
    assert!(r["results"]["files"].as_u64().unwrap() >= 15);
}

#[test]
fn empty_corpus_passes_with_warning() {
    let d = scratch_dir("empty_corpus");
    let r = report(&suppkit(&["axioms", &d.to_string_lossy()]));
    assert_eq!(r["results"]["all_pass"], true);
    assert_eq!(r["warnings"].as_array().unwrap().len(), 1);
}

#[test]
fn corrupted_differential_is_rejected() {
    let d = scratch_dir("bad_corpus");
    std::fs::write(
        d.join("square_nonzero.json"),
        r#"{"kind": "complex", "vars": ["x", "y"],
            "terms": [{"generators": [[2, 0]]}, {"generators": [[1, 0]]}, {"generators": [[0, 0]]}],
            "maps": [[["x"]], [["x"]]]}"#,
    )
    .unwrap();
    let out = suppkit(&["axioms", &d.to_string_lossy()]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["kind"], "parse");
}

#[test]
fn exit_codes() {
    let d = scratch_dir("exit_codes");
    let bad = d.join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    assert_eq!(suppkit(&["gb", &bad.to_string_lossy()]).status.code(), Some(1));
    let unknown = d.join("unknown.json");
    std::fs::write(&unknown, r#"{"kind": "sheaf"}"#).unwrap();
    assert_eq!(suppkit(&["gb", &unknown.to_string_lossy()]).status.code(), Some(1));
    // wrong kind for the command
    assert_eq!(suppkit(&["localcoh", &corpus_file("v4_k.json")]).status.code(), Some(2));
    // a field of characteristic 4
    assert_eq!(suppkit(&["gb", &corpus_file("empty.json"), "--char", "4"]).status.code(), Some(2));
    // the file fixes characteristic 2
    let fixed = d.join("fixed.json");
    std::fs::write(&fixed, r#"{"kind": "ideal", "char": 2, "vars": ["x"], "generators": ["x"]}"#).unwrap();
    assert_eq!(suppkit(&["gb", &fixed.to_string_lossy(), "--char", "3"]).status.code(), Some(2));
    assert_eq!(suppkit(&["gb", "/nonexistent/file.json"]).status.code(), Some(1));
    assert_eq!(suppkit(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn exit_code_mapping() {
    use suppkit::Error;
    use suppkit_cli::report::exit_code;
    assert_eq!(exit_code(&Error::Parse("x".into())), 1);
    assert_eq!(exit_code(&Error::NotMonomial), 2);
    assert_eq!(exit_code(&Error::Invariant("x".into())), 3);
    assert_eq!(exit_code(&Error::DecompositionFailure("x".into())), 3);
}

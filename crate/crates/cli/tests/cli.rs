use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn alliance(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alliance")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = alliance(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn code(args: &[&str]) -> i32 {
    alliance(args).status.code().expect("exited")
}

#[test]
fn solve_examples() {
    let r = json(&["solve", "--gen", "hypercube:3", "-k", "-1", "--global"]);
    assert_eq!(r["results"]["value"], 2);
    assert_eq!(r["results"]["witness"], serde_json::json!([0, 7]));
    assert!(r["results"]["nodes_explored"].as_u64().unwrap() > 0);

    let r = json(&["solve", "--gen", "complete:6", "-k", "2", "--global"]);
    assert_eq!(r["results"]["value"], 4);

    assert_eq!(code(&["solve", "--gen", "cycle:3", "-k", "5"]), 3);
}

#[test]
fn solve_methods_agree() {
    for k in ["-1", "0", "1", "2", "3"] {
        let exact = json(&["solve", "--gen", "hypercube:3", "-k", k])["results"]["value"].clone();
        let bnb = json(&["solve", "--gen", "hypercube:3", "-k", k, "--method", "bnb"]);
        assert_eq!(bnb["results"]["value"], exact);
        assert_eq!(bnb["results"]["method"], "branch_and_bound");
        let greedy = json(&["solve", "--gen", "hypercube:3", "-k", k, "--method", "greedy"]);
        assert!(greedy["results"]["value"].as_u64() >= exact.as_u64());
        assert_eq!(greedy["results"]["exact"], false);
    }
    let plain = json(&["solve", "--gen", "product:cycle:4,complete:4", "-k", "-3", "--offensive"]);
    assert_eq!(plain["results"]["value"], 1);
    assert_eq!(plain["results"]["global"], false);
}

#[test]
fn check_examples() {
    let r = json(&["check", "--gen", "hypercube:3", "--members", "0,7", "-k", "-1", "--predicate", "global-offensive"]);
    assert_eq!(r["results"]["holds"], true);
    assert_eq!(r["results"]["violations"], serde_json::json!([]));

    let r = json(&["check", "--gen", "cycle:4", "--members", "0", "-k", "1", "--predicate", "dominating"]);
    assert_eq!(r["results"]["holds"], false);
    let v = &r["results"]["violations"];
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["vertex"], 2);
    assert_eq!(v[0]["degree_in"], 0);
    assert_eq!(v[0]["degree_out"], 2);

    let dir = tempfile::tempdir().unwrap();
    let set = dir.path().join("set.txt");
    fs::write(&set, "# independent\n0 2\n4\n").unwrap();
    let r =
        json(&["check", "--gen", "cycle:6", "--set", set.to_str().unwrap(), "-r", "0", "--predicate", "r-dependent"]);
    assert_eq!(r["results"]["holds"], true);
    assert_eq!(r["results"]["set"], serde_json::json!([0, 2, 4]));

    let r = json(&["check", "--gen", "cycle:4", "--members", "0,2", "--tau", "1/2", "--predicate", "tau-dominating"]);
    assert_eq!(r["results"]["holds"], true);

    let r = json(&["check", "--gen", "hypercube:3", "--members", "0", "-k", "2", "--predicate", "offensive"]);
    assert_eq!(r["results"]["holds"], false);
    assert_eq!(r["results"]["violations"].as_array().unwrap().len(), 3);
}

#[test]
fn check_rejects_bad_sets() {
    let dir = tempfile::tempdir().unwrap();
    let set = dir.path().join("set.txt");
    fs::write(&set, "0 x\n").unwrap();
    assert_eq!(code(&["check", "--gen", "cycle:4", "--set", set.to_str().unwrap(), "--predicate", "dominating"]), 2);
    assert_eq!(code(&["check", "--gen", "cycle:4", "--members", "9", "--predicate", "dominating"]), 2);
    assert_eq!(code(&["check", "--gen", "cycle:4", "--members", "0", "--predicate", "offensive"]), 2);
    assert_eq!(code(&["check", "--gen", "cycle:4", "--members", "0", "-k", "7", "--predicate", "global-offensive"]), 3);
}

#[test]
fn bounds_examples() {
    let r = &json(&["bounds", "--gen", "hypercube:3", "-k", "2"])["results"];
    let value =
        |name: &str| r["entries"].as_array().unwrap().iter().find(|e| e["name"] == name).unwrap()["value"].clone();
    assert_eq!(value("quadratic"), 4);
    assert_eq!(value("degree_lower"), 4);
    assert_eq!(value("degree_upper"), 7);
    assert_eq!(r["oracle"], 4);

    let r = &json(&["bounds", "--gen", "complete:5", "-k", "1"])["results"];
    let quad = r["entries"].as_array().unwrap().iter().find(|e| e["name"] == "quadratic").unwrap();
    assert_eq!(quad["value"], 3);
    assert_eq!(r["oracle"], 3);

    let r = &json(&["bounds", "--gen", "cycle:30", "-k", "0"])["results"];
    assert_eq!(r["oracle"], Value::Null);
    assert!(r["oracle_skipped"].as_str().unwrap().contains("cap"));
    assert!(r["best_lower"].as_i64().is_some());
}

#[test]
fn family_reports_formula_and_oracle() {
    let r = &json(&["family", "complete", "6", "-k", "2"])["results"];
    assert_eq!(r["value"], 4);
    assert_eq!(r["oracle"], 4);
    assert_eq!(r["agrees"], true);

    let r = &json(&["family", "bipartite", "4", "2", "-k", "1"])["results"];
    assert_eq!(r["case"], "b");
    assert_eq!(r["agrees"], true);

    assert_eq!(code(&["family", "cycle", "5", "-k", "3"]), 3);
    assert_eq!(code(&["family", "bipartite", "4", "-k", "1"]), 2);
}

#[test]
fn product_constructions() {
    let r = &json(&["product", "--left", "complete:4", "--right", "cycle:3", "-k", "2", "--k2", "1"])["results"];
    assert_eq!(r["product_order"], 12);
    let g = &r["global"];
    // S × V₂ is a global offensive (k − Δ₂)-alliance of size n₂·|S|
    assert_eq!(g["construction"]["k"], 0);
    assert_eq!(g["construction"]["set"].as_array().unwrap().len(), 9);
    assert!(g["product"]["value"].as_u64().unwrap() <= g["upper_bound"].as_u64().unwrap());
    let o = &r["offensive"];
    assert!(o["product"]["value"].as_u64().unwrap() <= o["upper_bound"].as_u64().unwrap());
    let c = &r["complete_bounds"];
    let exact = c["product"]["value"].as_i64().unwrap();
    assert!(c["lower"].as_i64().unwrap() <= exact && exact <= c["upper"].as_i64().unwrap());
}

#[test]
fn verify_corpus_passes() {
    let out = alliance(&["verify", "--corpus", "random:8,200,seed=42"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["seed"], 42);
    assert_eq!(r["results"]["failed"], false);
    assert_eq!(r["results"]["instances"].as_array().unwrap().len(), 200);
    let verdicts = r["results"]["verdicts"].as_array().unwrap();
    let ids: Vec<&str> = verdicts.iter().map(|v| v["instance"].as_str().unwrap()).collect();
    assert!(ids.windows(2).all(|w| w[0] <= w[1]));
    assert!(r["results"]["summary"]["monotonicity"]["pass"].as_u64().unwrap() == 200);
}

#[test]
fn verify_families_and_cases() {
    let r = json(&["verify", "--family", "bipartite:rmax=6"]);
    assert_eq!(r["results"]["failed"], false);

    let out = alliance(&["verify", "--case", "c4xk4"]);
    assert_eq!(out.status.code(), Some(0));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    let v = &r["results"]["verdicts"][0];
    assert_eq!(v["status"], "discrepancy");
    assert!(v["detail"].as_str().unwrap().contains("published value 2"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("discrepancy-check"));

    assert_eq!(code(&["verify", "--case", "nope"]), 2);
    assert_eq!(code(&["verify"]), 2);
    assert_eq!(code(&["verify", "--corpus", "regular", "--checks", "bogus"]), 2);
}

#[test]
fn gen_examples() {
    let out = alliance(&["gen", "product:cycle:4,complete:4"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("16 40\n"));
    let mut degree = [0; 16];
    for line in text.lines().skip(1) {
        let (u, v) = line.split_once(' ').unwrap();
        degree[u.parse::<usize>().unwrap()] += 1;
        degree[v.parse::<usize>().unwrap()] += 1;
    }
    assert!(degree.iter().all(|&d| d == 5));

    assert_eq!(alliance(&["gen", "complement:complete:4"]).stdout, b"4 0\n");
    assert_eq!(alliance(&["gen", "gnp:8,0.5,7"]).stdout, alliance(&["gen", "gnp:8,0.5,7"]).stdout);
    assert_eq!(code(&["gen", "wheel:5"]), 2);
}

#[test]
fn gen_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.txt");
    let r = json(&["gen", "linegraph:hypercube:3", "--out", file.to_str().unwrap()]);
    let written = fs::read(&file).unwrap();
    assert_eq!(written, alliance(&["gen", "linegraph:hypercube:3"]).stdout);
    // the input digest hashes the re-serialised parse of the file
    let solved = json(&["solve", "--graph", file.to_str().unwrap(), "-k", "2", "--method", "bnb"]);
    assert_eq!(solved["input_digest"], r["results"]["edge_list_sha256"]);
    assert_eq!(solved["input_digest"], r["input_digest"]);
}

#[test]
fn malformed_graph_file_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.txt");
    fs::write(&file, "3 2\n0 1\n1 1\n").unwrap();
    assert_eq!(code(&["solve", "--graph", file.to_str().unwrap(), "-k", "1"]), 2);
    assert_eq!(code(&["solve", "--graph", "/nonexistent/graph.txt", "-k", "1"]), 2);
    assert_eq!(code(&["solve", "-k", "1"]), 2);
}

#[test]
fn reports_are_deterministic() {
    let args = ["solve", "--gen", "gnp:10,0.4,3", "-k", "0"];
    let a = alliance(&args).stdout;
    assert_eq!(a, alliance(&args).stdout);
    let r: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(r["seed"], 3);

    let mut timed = args.to_vec();
    timed.push("--timing");
    let t = json(&timed);
    assert!(t["wall_time_ms"].as_f64().is_some());
    assert_eq!(t["digest"], r["digest"]);

    let text = String::from_utf8(a).unwrap();
    let keys: Vec<usize> = ["\"command\"", "\"digest\"", "\"input_digest\"", "\"results\"", "\"seed\""]
        .iter()
        .map(|k| text.find(k).unwrap())
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

// Copyright 2026 The zxsimp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

use zxsimp::problems::{direct_potts_sum, Sign, SignedGraph};
use zxsimp::random::{random_diagram, rng, DiagramShape};
use zxsimp::semantics::contract_closed;
use zxsimp::Dim;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_zxsimp"));
    c.env_remove("ZXSIMP_ORACLE_CAP");
    c
}

fn fixture(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn closed_qutrit() -> (PathBuf, num_complex::Complex64) {
    let shape = DiagramShape {
        hbox_rate: 0.2,
        ..DiagramShape::closed(6, 8)
    };
    let a = random_diagram(&mut rng(41), Dim::Qutrit, shape);
    (fixture("closed_qutrit.json", &a.to_json()), contract_closed(&a).unwrap())
}

#[test]
fn simplify_agrees_with_contract() {
    let (path, z) = closed_qutrit();
    let p = path.to_str().unwrap();
    let s = json(&run(&["simplify", p, "--trace"]));
    let c = json(&run(&["contract", p, "--d", "3"]));
    assert_eq!(s["d"], 3);
    assert!(s["spiders_left"].as_u64().unwrap() <= 1);
    assert_eq!(s["partial"], false);
    assert_eq!(s["trace"].as_array().unwrap().len() as u64, s["steps"].as_u64().unwrap());
    for v in [&s, &c] {
        let re = v["value_re"].as_f64().unwrap();
        let im = v["value_im"].as_f64().unwrap();
        assert!((re - z.re).abs() < 1e-9 && (im - z.im).abs() < 1e-9, "{v}");
    }
    assert!(s["scalar"]["coeffs"].is_array());
}

#[test]
fn stdin_input() {
    let (path, _) = closed_qutrit();
    let text = std::fs::read_to_string(path).unwrap();
    let mut child = bin()
        .args(["simplify", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(json(&out)["d"], 3);
}

#[test]
fn colour_counts() {
    let k3 = fixture("k3.json", r#"{"vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]}"#);
    let k3 = k3.to_str().unwrap();
    let two = json(&run(&["colour-count", k3, "--d", "2", "--trace"]));
    assert_eq!(two["count"], 0);
    assert_eq!(two["method"], "stabilizer");
    assert!(two["trace"].is_array());
    let three = json(&run(&["colour-count", k3, "--d", "3"]));
    assert_eq!(three["count"], 6);
    assert_eq!(three["method"], "oracle");
}

#[test]
fn potts_and_jones() {
    let g = SignedGraph::new(3, vec![(0, 1, Sign::Plus), (1, 2, Sign::Minus), (0, 2, Sign::Plus)]).unwrap();
    let path = fixture("signed.json", &serde_json::to_string(&g).unwrap());
    let out = json(&run(&["potts", path.to_str().unwrap(), "--d", "3"]));
    let z = direct_potts_sum(&g, 3).unwrap();
    assert!((out["value_re"].as_f64().unwrap() - z.re).abs() < 1e-9);
    assert!((out["value_im"].as_f64().unwrap() - z.im).abs() < 1e-9);
    assert_eq!(out["method"], "stabilizer");
    assert!(out["exact"].is_object());

    let trefoil = fixture("trefoil.json", "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]");
    let out = json(&run(&["jones", trefoil.to_str().unwrap(), "--d", "4"]));
    assert!((out["value_re"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert!(out["value_im"].as_f64().unwrap().abs() < 1e-9);
    assert_eq!(out["writhe"].as_i64().unwrap().abs(), 3);
}

#[test]
fn verify_passes_and_is_deterministic() {
    let first = run(&["verify", "--seed", "7", "--samples", "20"]);
    assert_eq!(first.status.code(), Some(0), "{}", String::from_utf8_lossy(&first.stdout));
    let v = json(&first);
    assert_eq!(v["passed"], true);
    assert_eq!(v["random"]["seed"], 7);
    assert!(v["catalogue"]["failures"].as_array().unwrap().is_empty());
    let second = run(&["verify", "--seed", "7", "--samples", "20"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn exit_codes() {
    let bad = fixture("bad.json", "{ not json");
    assert_eq!(run(&["simplify", bad.to_str().unwrap()]).status.code(), Some(1));
    let unknown = fixture(
        "unknown_field.json",
        r#"{"version":"zxsimp-v1","d":2,"spiders":[],"edges":[],"inputs":[],"outputs":[],"scalar":{"coeffs":[1,0,0,0,0,0,0,0],"sqrt2_pow":0,"sqrt3_pow":0},"extra":1}"#,
    );
    assert_eq!(run(&["simplify", unknown.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));

    let (path, _) = closed_qutrit();
    let p = path.to_str().unwrap();
    assert_eq!(run(&["simplify", p, "--d", "2"]).status.code(), Some(1));
    let too_large = bin().args(["contract", p]).env("ZXSIMP_ORACLE_CAP", "1").output().unwrap();
    assert_eq!(too_large.status.code(), Some(3));

    let k3 = fixture("k3_nod.json", r#"{"vertices": 3, "edges": [[0, 1]]}"#);
    assert_eq!(run(&["colour-count", k3.to_str().unwrap()]).status.code(), Some(1));
    let looped = fixture("loop.json", r#"{"vertices": 2, "edges": [[1, 1]]}"#);
    assert_eq!(run(&["colour-count", looped.to_str().unwrap(), "--d", "3"]).status.code(), Some(1));
}

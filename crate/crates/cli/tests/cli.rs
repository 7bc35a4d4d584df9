use serde_json::Value;
use std::path::PathBuf;
use std::process::Command;
use tempfile::TempDir;

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace { dir: tempfile::tempdir().unwrap() }
    }

    fn file(&self, name: &str, contents: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        std::fs::write(&path, contents).unwrap();
        path
    }
}

fn arrtwist(args: &[&str]) -> (Value, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_arrtwist")).args(args).output().unwrap();
    let code = out.status.code().unwrap();
    let text = if code == 0 { out.stdout } else { out.stderr };
    let value = serde_json::from_slice(&text).unwrap_or_else(|_| Value::String(String::from_utf8_lossy(&text).into()));
    (value, code)
}

const GENERIC5: &str = r#"{"r": 3, "forms": [[1,0,0],[0,1,0],[0,0,1],[1,1,1],[1,2,3]]}"#;
const PENCIL: &str = r#"{"r": 3, "forms": [[1,0,0],[0,1,0],[1,1,0],[0,0,1]]}"#;

#[test]
fn obstruct_example() {
    let (report, code) = arrtwist(&["milnor", "obstruct", "--n", "5", "--spectrum", "5,0,1,0,1,0"]);
    assert_eq!(code, 0);
    assert_eq!(report["divides"], Value::Bool(false));
    assert_eq!(report["verdict"], "obstructed");
    assert_eq!(report["b1_total"], 7);
}

#[test]
fn koszul_full_generic_five_lines() {
    let ws = Workspace::new();
    let path = ws.file("generic5.json", GENERIC5);
    let (report, code) =
        arrtwist(&["homology", "koszul", "--arrangement", path.to_str().unwrap(), "--weights", "-4,1,1,1,1", "--full"]);
    assert_eq!(code, 0);
    assert_eq!(report["groups"][2]["degree"], 2);
    assert_eq!(report["groups"][2]["free_rank"], 3);
    assert_eq!(report["kernel_rank"], report["formula_rank"]);
}

#[test]
fn chain_iso_diagonal_pair() {
    let ws = Workspace::new();
    let a = ws.file("c1.json", r#"{"ring": "Z", "ranks": [2, 2], "boundaries": [[2, 0, 0, 2]]}"#);
    let b = ws.file("c2.json", r#"{"ring": "Z", "ranks": [2, 2], "boundaries": [[1, 0, 0, 4]]}"#);
    let (report, code) = arrtwist(&["chain", "iso", "--a", a.to_str().unwrap(), "--b", b.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(report["isomorphic"], Value::Bool(false));
    let (same, _) = arrtwist(&["chain", "iso", "--a", a.to_str().unwrap(), "--b", a.to_str().unwrap()]);
    assert_eq!(same["isomorphic"], Value::Bool(true));
}

#[test]
fn refusal_exits_two() {
    let ws = Workspace::new();
    let path = ws.file("pencil.json", PENCIL);
    let (report, code) =
        arrtwist(&["homology", "koszul", "--arrangement", path.to_str().unwrap(), "--weights", "1,1,1"]);
    assert_eq!(code, 2);
    assert_eq!(report["error"], "GirthTooSmall");
    assert!(report["message"].as_str().unwrap().contains("c(A)=3"));
}

#[test]
fn input_errors_exit_one() {
    let ws = Workspace::new();
    let missing = ws.dir.path().join("missing.json");
    let (report, code) = arrtwist(&["arr", "girth", "--arrangement", missing.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(report["error"], "Io");
    let broken = ws.file("broken.json", r#"{"r": 3, "forms": [[1,0,0]], "extra": 1}"#);
    let (report, code) = arrtwist(&["arr", "girth", "--arrangement", broken.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(report["error"], "Json");
    let path = ws.file("generic5.json", GENERIC5);
    let (report, code) = arrtwist(&["homology", "koszul", "--arrangement", path.to_str().unwrap(), "--weights", "1,1"]);
    assert_eq!(code, 1);
    assert_eq!(report["error"], "Usage");
    let (report, code) = arrtwist(&["milnor", "obstruct", "--n", "4", "--spectrum", "5,0,1,0,1,0"]);
    assert_eq!(code, 1);
    assert_eq!(report["error"], "InvalidInput");
}

#[test]
fn unbalanced_character_is_refused() {
    let ws = Workspace::new();
    let path = ws.file("generic5.json", GENERIC5);
    let (report, code) =
        arrtwist(&["arr", "nonres", "--arrangement", path.to_str().unwrap(), "--weights", "1,1,1,1,1"]);
    assert_eq!(code, 2);
    assert_eq!(report["error"], "InvalidCharacter");
}

#[test]
fn crosscheck_agrees_and_is_deterministic() {
    let ws = Workspace::new();
    let path = ws.file("generic5.json", GENERIC5);
    let args = ["crosscheck", "--arrangement", path.to_str().unwrap(), "--weights", "-4,1,1,1,1", "--seed", "3"];
    let (report, code) = arrtwist(&args);
    assert_eq!(code, 0);
    assert_eq!(report["agree"], Value::Bool(true));
    let homotopy = report["checks"].as_array().unwrap().iter().find(|c| c["name"] == "homotopy-rank").unwrap();
    let values: Vec<&Value> = homotopy["paths"].as_array().unwrap().iter().map(|p| &p["value"]).collect();
    assert_eq!(values.len(), 3);
    assert!(values.iter().all(|v| **v == 3));
    let (again, _) = arrtwist(&args);
    assert_eq!(report, again);
}

#[test]
fn crosscheck_commutator_presentation() {
    let ws = Workspace::new();
    let path = ws.file("comm.json", r#"{"generators": 2, "relators": ["aba-1b-1"], "meridians": true}"#);
    let (report, code) = arrtwist(&["crosscheck", "--presentation", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let names: Vec<&str> = report["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.iter().any(|n| n.starts_with("koszul-low-degrees")));
    assert!(names.contains(&"milnor-untwisted"));
}

#[test]
fn tower_commands() {
    let ws = Workspace::new();
    let path = ws.file(
        "tower.json",
        r#"{"exponents": [2, 1], "monodromy": {"level_3": {"y1": ["x1", "x1 x2 x1-1"]}}, "weights": {"y1": 1}}"#,
    );
    let p = path.to_str().unwrap();
    let (report, code) = arrtwist(&["homology", "tower", "--tower", p]);
    assert_eq!(code, 0);
    assert_eq!(report["ranks"], serde_json::json!([1, 3, 2]));
    assert_eq!(report["groups"][0]["torsion"], serde_json::json!(["t - 1"]));
    let (report, code) = arrtwist(&["pi", "rank", "--tower", p, "--p", "1"]);
    assert_eq!(code, 2);
    assert_eq!(report["error"], "DegreeUnavailable");
    let (report, code) = arrtwist(&["crosscheck", "--tower", p]);
    assert_eq!(code, 0);
    assert_eq!(report["agree"], Value::Bool(true));
}

#[test]
fn invalid_tower_is_refused() {
    let ws = Workspace::new();
    let path = ws.file("swap.json", r#"{"exponents": [2, 1], "monodromy": {"level_3": {"y1": ["x2", "x1"]}}}"#);
    let (report, code) = arrtwist(&["homology", "tower", "--tower", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(report["error"], "TowerInvalid");
}

#[test]
fn cyclotomic_units() {
    let ws = Workspace::new();
    let path = ws.file("four.json", r#"{"r": 3, "forms": [[1,0,0],[0,1,0],[0,0,1],[1,1,1]]}"#);
    let (report, code) =
        arrtwist(&["homology", "koszul", "--arrangement", path.to_str().unwrap(), "--units", "z3,z3,z3", "--full"]);
    assert_eq!(code, 0);
    assert_eq!(report["ring"], "Q(z3)");
    let ranks: Vec<u64> =
        report["groups"].as_array().unwrap().iter().map(|g| g["free_rank"].as_u64().unwrap()).collect();
    assert_eq!(ranks, vec![0, 0, 1]);
}

#[test]
fn version_lists_formats() {
    let out = Command::new(env!("CARGO_BIN_EXE_arrtwist")).arg("--version").output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("tower 1") && text.contains("chain 1"));
}

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

fn din(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_din")).args(args).output().expect("run din")
}

fn din_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_din"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn din");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn write(dir: &TempDir, name: &str, content: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, content).unwrap();
    path.to_str().unwrap().to_string()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

fn palette_line(out: &Output) -> usize {
    let err = stderr(out);
    let line = err.lines().find(|l| l.starts_with("palette_size = ")).expect("palette line");
    line["palette_size = ".len()..].parse().unwrap()
}

#[test]
fn gen_examples() {
    let out = din(&["gen", "source-arc-path", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "4\n1 2\n1 4\n2 3\n3 4\n");

    let out = din(&["gen", "directed-path", "2"]);
    assert_eq!(stdout(&out), "2\n1 2\n");

    let out = din(&["gen", "augmented", "6"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("n >= 8"));

    assert_eq!(code(&din(&["gen", "no-such-family", "4"])), 2);
    assert_eq!(code(&din(&["gen", "star"])), 2);
}

#[test]
fn gen_writes_files_and_json() {
    let dir = TempDir::new().unwrap();
    let file = path(&dir, "star.json");
    assert_eq!(code(&din(&["gen", "star", "3", "-o", &file, "--format", "json"])), 0);
    let value: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(value["n"], 3);
    assert_eq!(value["arcs"], serde_json::json!([[1, 3], [2, 3]]));
}

#[test]
fn construct_examples() {
    let dir = TempDir::new().unwrap();
    let path4 = write(&dir, "path4.g", "4\n1 2\n2 3\n3 4\n");
    let out = din(&["construct", "--method", "inductive", &path4]);
    assert_eq!(code(&out), 0);
    assert!(palette_line(&out) <= 8);

    let out = din(&["construct", "--method", "closed-form", golden("sap6.g").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(palette_line(&out), 18);
    assert_eq!(stdout(&out), std::fs::read_to_string(golden("sap6.json")).unwrap());

    let star5 = write(&dir, "star5.g", "5\n1 5\n2 5\n3 5\n4 5\n");
    assert_eq!(code(&din(&["construct", "--method", "closed-form", &star5])), 2);

    let cyclic = write(&dir, "cyclic.g", "3\n1 2\n2 3\n3 1\n");
    assert_eq!(code(&din(&["construct", "--method", "pairing", &cyclic])), 3);
    assert_eq!(code(&din(&["construct", "--method", "bogus", &path4])), 2);
}

#[test]
fn construct_flags_odd_n_overshoot() {
    let out = din_stdin(&["construct", "-"], "5\n1 2\n2 3\n3 4\n4 5\n");
    assert_eq!(code(&out), 0);
    let palette = palette_line(&out);
    let note = stderr(&out).contains("exceeds the floored formula value 12");
    assert_eq!(note, palette > 12);
}

#[test]
fn verify_examples() {
    let dir = TempDir::new().unwrap();
    let out = din(&["verify", golden("sap6.g").to_str().unwrap(), golden("sap6.json").to_str().unwrap()]);
    assert_eq!((code(&out), stdout(&out).as_str()), (0, "VALID\n"));

    let arc = write(&dir, "arc.g", "2\n1 2\n");
    let reversed = write(&dir, "rev.json", r#"{"n":2,"phi":{"1":[0,1],"2":[0]}}"#);
    let out = din(&["verify", &arc, &reversed]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "1 2 size-not-increasing\n2 1 false-arc-implied\n");

    let empty = write(&dir, "empty.json", r#"{"n":2,"phi":{"1":[],"2":[0]}}"#);
    assert_eq!(code(&din(&["verify", &arc, &empty])), 2);
    let short = write(&dir, "short.json", r#"{"n":1,"phi":{"1":[0]}}"#);
    assert_eq!(code(&din(&["verify", &arc, &short])), 2);
    let garbage = write(&dir, "garbage.g", "two\n1 2\n");
    assert_eq!(code(&din(&["verify", &garbage, &reversed])), 2);
    assert_eq!(code(&din(&["verify", &arc, &path(&dir, "missing.json")])), 2);
}

#[test]
fn din_examples() {
    let dir = TempDir::new().unwrap();
    let triangle = write(&dir, "triangle.g", "3\n1 2\n2 3\n3 1\n");
    let out = din(&["din", &triangle]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).starts_with("INFEASIBLE (cyclic)\n"));

    let star5 = write(&dir, "star5.g", "5\n1 5\n2 5\n3 5\n4 5\n");
    let out = din(&["din", &star5]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("DIN = 2\n"));

    let tree4 = write(&dir, "tree4.g", "4\n1 2\n1 3\n3 4\n");
    let witness = path(&dir, "w.json");
    let out = din(&["din", &tree4, "--witness", &witness]);
    assert!(stdout(&out).starts_with("DIN = 5\n"));
    assert!(stdout(&out).contains(&format!("witness: {witness}")));
    let check = din(&["verify", &tree4, &witness]);
    assert_eq!(stdout(&check), "VALID\n");

    let bad = write(&dir, "bad.g", "3\n1 1\n");
    assert_eq!(code(&din(&["din", &bad])), 2);
}

#[test]
fn din_budget_and_json() {
    let out = din_stdin(&["din", "-", "--budget-nodes", "10"], &stdout(&din(&["gen", "source-arc-path", "6"])));
    assert_eq!(code(&out), 4);
    let text = stdout(&out);
    assert!(text.starts_with("UNKNOWN (budget) best upper bound = "), "{text}");

    let out = din_stdin(&["din", "-", "--json"], "4\n1 2\n1 4\n2 3\n3 4\n");
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["status"], "optimal");
    assert_eq!(value["din"], 8);
    assert_eq!(value["witness"]["palette_size"], 8);

    assert_eq!(code(&din_stdin(&["din", "-", "--max-palette", "65"], "2\n1 2\n")), 2);
}

#[test]
fn din_threads_are_deterministic() {
    let graph = stdout(&din(&["gen", "source-arc-path", "5"]));
    let one = din_stdin(&["din", "-", "--json", "--threads", "1"], &graph);
    let three = din_stdin(&["din", "-", "--json", "--threads", "3"], &graph);
    let strip = |o: &Output| {
        let mut v: serde_json::Value = serde_json::from_str(&stdout(o)).unwrap();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v.as_object_mut().unwrap().remove("nodes_explored");
        v
    };
    assert_eq!(strip(&one), strip(&three));
}

#[test]
fn bound_examples() {
    let out = din(&["bound", "6"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for line in ["general 19", "source-arc-path 18", "directed-path 12"] {
        assert!(text.lines().any(|l| l == line), "missing {line:?} in {text}");
    }
    assert_eq!(stdout(&din(&["bound", "8", "--formula", "augmented"])), "33\n");
    assert_eq!(code(&din(&["bound", "1"])), 2);
    assert_eq!(code(&din(&["bound", "7", "--formula", "lemma"])), 2);
    assert_eq!(code(&din(&["bound", "6", "--formula", "nope"])), 2);
    assert_eq!(stdout(&din(&["bound", "18", "--formula", "p-intersection", "--p", "3"])), "20\n");
    assert_eq!(code(&din(&["bound", "18", "--formula", "p-intersection"])), 2);
}

#[test]
fn extremal_small() {
    let out = din(&["extremal", "4", "--json"]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["max_din"], 8);
    let sap = serde_json::json!([[1, 2], [1, 4], [2, 3], [3, 4]]);
    assert!(value["witnesses"].as_array().unwrap().contains(&sap));

    assert!(stdout(&din(&["extremal", "3"])).starts_with("n = 3: max DIN = 4\n"));
    assert_eq!(code(&din(&["extremal", "6"])), 2);
}

#[test]
fn round_trip_every_family_and_method() {
    let dir = TempDir::new().unwrap();
    let cases: &[(&str, &[usize])] = &[
        ("directed-path", &[2, 3, 6, 9]),
        ("star", &[2, 5, 8]),
        ("complete-dag", &[3, 6, 7]),
        ("source-arc-path", &[4, 5, 8, 10]),
        ("augmented", &[8, 10]),
        ("fig3-tree-small", &[0]),
        ("fig3-tree-large", &[0]),
    ];
    for &(family, sizes) in cases {
        for &n in sizes {
            let graph = path(&dir, &format!("{family}-{n}.g"));
            assert_eq!(code(&din(&["gen", family, &n.to_string(), "-o", &graph])), 0);
            let closed = matches!(family, "augmented") || (family == "source-arc-path" && n % 2 == 0);
            let methods: &[&str] =
                if closed { &["pairing", "inductive", "closed-form"] } else { &["pairing", "inductive"] };
            for method in methods {
                let rep = path(&dir, &format!("{family}-{n}-{method}.json"));
                let out = din(&["construct", "-m", method, &graph, "-o", &rep]);
                assert_eq!(code(&out), 0, "{family} {n} {method}: {}", stderr(&out));
                let check = din(&["verify", &graph, &rep]);
                assert_eq!((code(&check), stdout(&check)), (0, "VALID\n".to_string()), "{family} {n} {method}");
            }
        }
    }
}

#[test]
fn outputs_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let graph = path(&dir, "aug.g");
    din(&["gen", "augmented", "12", "-o", &graph]);
    for method in ["pairing", "inductive", "closed-form"] {
        let a = path(&dir, "a.json");
        let b = path(&dir, "b.json");
        din(&["construct", "-m", method, &graph, "-o", &a]);
        din(&["construct", "-m", method, &graph, "-o", &b]);
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap(), "{method}");
    }
    assert_eq!(din(&["gen", "complete-dag", "7"]).stdout, din(&["gen", "complete-dag", "7"]).stdout);
}

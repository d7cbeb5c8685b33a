use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn cube(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cube")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn scramble_solve_verify() {
    let dir = TempDir::new().unwrap();
    for dims in ["7,7,1", "4,4,4", "1,2,3", "2,2,3"] {
        let st = dir.path().join("state.json");
        let mv = dir.path().join("moves.txt");
        let a = cube(&["scramble", "--dims", dims, "--seed", "3", "--k", "30", "--out", s(&st)]);
        assert_eq!(code(&a), 0, "{dims}");
        let solved = cube(&["solve", "--in", s(&st), "--out", s(&mv)]);
        assert_eq!(code(&solved), 0, "{dims}: {}", String::from_utf8_lossy(&solved.stderr));
        let v = cube(&["verify", "--in", s(&st), "--moves", s(&mv)]);
        assert_eq!((code(&v), stdout(&v).trim()), (0, "SOLVED"), "{dims}");
        let wrong = write(&dir, "wrong.txt", "");
        assert_eq!(code(&cube(&["verify", "--in", s(&st), "--moves", s(&wrong)])), 1);
    }
}

#[test]
fn outputs_are_deterministic() {
    let a = cube(&["scramble", "--dims", "9,9,1", "--seed", "11", "--k", "90"]);
    let b = cube(&["scramble", "--dims", "9,9,1", "--seed", "11", "--k", "90"]);
    assert_eq!(a.stdout, b.stdout);
    let dir = TempDir::new().unwrap();
    let st = write(&dir, "s.json", &stdout(&a));
    assert_eq!(cube(&["solve", "--in", s(&st)]).stdout, cube(&["solve", "--in", s(&st)]).stdout);
}

#[test]
fn solved_input_needs_nothing() {
    let dir = TempDir::new().unwrap();
    let st = write(&dir, "s.json", &stdout(&cube(&["scramble", "--dims", "5,5,1", "--k", "0"])));
    let o = cube(&["solve", "--in", s(&st)]);
    assert_eq!((code(&o), stdout(&o)), (0, "\n".to_string()));
}

#[test]
fn error_exit_codes() {
    let dir = TempDir::new().unwrap();
    let text = stdout(&cube(&["scramble", "--dims", "5,5,1", "--k", "0"]));
    let st = write(&dir, "s.json", &text);
    // one top sticker recolored: the color counts no longer add up
    let mut state = cube_core::CubeState::from_json(&text).unwrap();
    state.set(cube_core::Face::U, 1, 1, cube_core::Face::F);
    let bad = write(&dir, "bad.json", &state.to_json());
    assert_eq!(code(&cube(&["solve", "--in", s(&bad)])), 3);
    let illegal = write(&dir, "m.txt", "z0:+");
    assert_eq!(code(&cube(&["verify", "--in", s(&st), "--moves", s(&illegal)])), 2);
    let unparsable = write(&dir, "m2.txt", "Q7");
    assert_eq!(code(&cube(&["verify", "--in", s(&st), "--moves", s(&unparsable)])), 2);
    let garbage = write(&dir, "g.json", "{");
    assert_eq!(code(&cube(&["solve", "--in", s(&garbage)])), 2);
    assert_eq!(code(&cube(&["solve", "--in", s(&st), "--dims", "7,7,1"])), 2);
    assert_eq!(code(&cube(&["scramble", "--dims", "5,5", "--k", "1"])), 2);
    let f = write(&dir, "f.txt", "p nae 2 1\n1 2\n");
    assert_eq!(code(&cube(&["reduce", "--in", s(&f)])), 2);
}

#[test]
fn reduce_and_decide() {
    let dir = TempDir::new().unwrap();
    for (formula, answer) in [("p nae 3 1\n1 2 3\n", "YES"), ("c x or x or x\np nae 1 1\n1 1 1\n", "NO")] {
        let f = write(&dir, "f.txt", formula);
        let inst = dir.path().join("inst.json");
        assert_eq!(code(&cube(&["reduce", "--in", s(&f), "--out", s(&inst)])), 0);
        let moves = dir.path().join("cert.txt");
        let o = cube(&["decide", "--in", s(&inst), "--out", s(&moves)]);
        assert_eq!((code(&o), stdout(&o).trim()), (0, answer));
        if answer == "YES" {
            let v = cube(&["verify", "--in", s(&inst), "--moves", s(&moves)]);
            assert_eq!(stdout(&v).trim(), "SOLVED");
        }
    }
    let f = write(&dir, "f.txt", "p nae 3 1\n1 2 3\n");
    let inst = dir.path().join("inst.json");
    cube(&["reduce", "--in", s(&f), "--out", s(&inst)]);
    assert_eq!(code(&cube(&["decide", "--in", s(&inst), "--cap", "1"])), 4);
}

#[test]
fn bounds() {
    assert_eq!(stdout(&cube(&["bounds", "--geometry", "n1", "--n", "4"])).trim(), "0");
    assert_eq!(stdout(&cube(&["bounds", "--geometry", "n3", "--n", "4"])).trim(), "11");
    let big: u64 = stdout(&cube(&["bounds", "--geometry", "n1", "--n", "1000"])).trim().parse().unwrap();
    assert!(big > 0);
}

#[test]
fn bench_csv() {
    let o = cube(&["bench", "--n", "8,16", "--seeds", "2", "--solver", "n1-naive,n1-grouped", "--jobs", "2"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "dims,seed,k,solver,len,millis");
    let rows: Vec<&str> = lines.iter().copied().filter(|l| !l.starts_with('#')).skip(1).collect();
    assert_eq!(rows.len(), 8);
    assert!(rows[0].starts_with("8x8x1,0,80,n1-naive,"));
    assert!(lines.iter().any(|l| l.starts_with("#fit,n1-grouped,all,")));
    assert_eq!(lines.iter().filter(|l| l.starts_with("#ratio,")).count(), 2);
    let opt = cube(&["bench", "--n", "3", "--seeds", "2", "--solver", "optimal", "--cross", "1,2"]);
    assert_eq!(code(&opt), 0);
    assert!(stdout(&opt).contains("1x2x3,1,30,optimal,"));
}

#[test]
fn optimal_with_oracle() {
    let dir = TempDir::new().unwrap();
    let st = write(&dir, "s.json", &stdout(&cube(&["scramble", "--dims", "1,2,3", "--seed", "5", "--k", "12"])));
    let o = cube(&["optimal", "--dims", "1,2,3", "--in", s(&st), "--oracle-cap", "1000"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    let len: usize = lines[1].parse().unwrap();
    assert_eq!(lines[0].split_whitespace().count(), len);
    assert_eq!(code(&cube(&["optimal", "--dims", "1,2,3", "--in", s(&st), "--oracle-cap", "10"])), 4);
    assert_eq!(code(&cube(&["optimal", "--dims", "1,2,4", "--in", s(&st)])), 2);
}

use std::path::{Path, PathBuf};

use hullkit::cli::run;
use hullkit::fixtures::load;
use hullkit::io::{format_matrix, read_code};
use tempfile::TempDir;

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn fixture_code(dir: &TempDir, name: &str) -> PathBuf {
    write(dir, &format!("{name}.txt"), &format_matrix(load(name).unwrap().code.generator()))
}

fn fixture_append(dir: &TempDir, name: &str, t: usize) -> PathBuf {
    let f = load(name).unwrap();
    let row = f.rows.iter().find(|r| r.t == t).unwrap();
    write(dir, &format!("{name}-t{t}.txt"), &format_matrix(&row.appended))
}

fn cli(args: &[&str]) -> hullkit::cli::Outcome {
    run(std::iter::once("hullkit").chain(args.iter().copied()))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn info_on_binary_hamming() {
    let dir = TempDir::new().unwrap();
    let out = cli(&["info", s(&fixture_code(&dir, "table5"))]);
    assert_eq!(out.code, 0);
    assert_eq!(
        out.stdout,
        "field p=2 m=1 modulus=0,1\nn: 7\nk: 4\ndistance: 3\nhull euclidean: 3\ntype: Eena\n"
    );
}

#[test]
fn info_on_quaternary_hamming_reports_hermitian_hull() {
    let dir = TempDir::new().unwrap();
    let out = cli(&["info", s(&fixture_code(&dir, "table1"))]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("n: 5\nk: 3\ndistance: 3\n"));
    assert!(out.stdout.contains("hull hermitian: 2\n"));
}

#[test]
fn info_on_trivial_code_and_skipped_distance() {
    let dir = TempDir::new().unwrap();
    let one = write(&dir, "one.txt", "field p=2\n1 1\n1\n");
    let out = cli(&["info", s(&one)]);
    assert!(out.stdout.contains("n: 1\nk: 1\ndistance: 1\nhull euclidean: 0\n"));
    let out = cli(&["info", s(&one), "--max-enum", "0"]);
    assert!(out.stdout.contains("distance: skipped"));
}

#[test]
fn embed_with_published_columns() {
    let dir = TempDir::new().unwrap();
    let code = fixture_code(&dir, "table1");
    let append = fixture_append(&dir, "table1", 3);
    let out = cli(&["embed", s(&code), "--t", "3", "--inner", "hermitian", "--append", s(&append)]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("embedded: [6, 3, 4], hull 3, s = 1\n"));

    let code = fixture_code(&dir, "table6");
    let append = fixture_append(&dir, "table6", 6);
    let out = cli(&["embed", s(&code), "--t", "6", "--append", s(&append)]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("embedded: [20, 6, 8], hull 6, s = 5\n"));
}

#[test]
fn embed_rejects_wrong_append() {
    let dir = TempDir::new().unwrap();
    let code = fixture_code(&dir, "table1");
    let append = fixture_append(&dir, "table1", 3);
    let out = cli(&["embed", s(&code), "--t", "1", "--inner", "hermitian", "--append", s(&append)]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("hull dimension 3, expected 1"));
    let out = cli(&["embed", s(&code), "--t", "4"]);
    assert_eq!(out.code, 2);
}

#[test]
fn embed_output_round_trips() {
    let dir = TempDir::new().unwrap();
    let code = fixture_code(&dir, "table4");
    let out_path = dir.path().join("out.txt");
    let out = cli(&["embed", s(&code), "--t", "6", "--out", s(&out_path)]);
    assert_eq!(out.code, 0);
    let written = std::fs::read_to_string(&out_path).unwrap();
    let reread = read_code(&out_path).unwrap();
    assert_eq!(reread.n(), 14);
    assert_eq!(format_matrix(reread.generator()), written);

    let same = dir.path().join("same.txt");
    cli(&["embed", s(&code), "--t", "2", "--out", s(&same)]);
    assert_eq!(std::fs::read_to_string(&same).unwrap(), std::fs::read_to_string(&code).unwrap());
}

#[test]
fn sweep_lengths() {
    let dir = TempDir::new().unwrap();
    let out = cli(&["sweep", s(&fixture_code(&dir, "table5")), "--tsv"]);
    assert_eq!(out.code, 0);
    let lengths: Vec<&str> = out.stdout.lines().skip(1).map(|l| l.split('\t').nth(1).unwrap()).collect();
    assert_eq!(lengths, ["10", "9", "8", "(7)", "8"]);

    let out = cli(&["sweep", s(&fixture_code(&dir, "table3")), "--tsv"]);
    let lengths: Vec<&str> = out.stdout.lines().skip(1).map(|l| l.split('\t').nth(1).unwrap()).collect();
    assert_eq!(lengths, ["24", "23", "22", "21", "20", "19", "(18)", "19", "20"]);

    let lcd = write(&dir, "lcd.txt", "field p=2\n1 1\n1\n");
    let out = cli(&["sweep", s(&lcd)]);
    assert_eq!(out.stdout, "[1, 1] code, euclidean hull dimension 0\nt  length  s  [n,k,d]  note\n0  (1)     0  [1,1,1]  original LCD\n1  2       1  [2,1,2]  ESO\n");
}

#[test]
fn output_is_byte_stable() {
    let dir = TempDir::new().unwrap();
    let code = fixture_code(&dir, "table6");
    let a = cli(&["sweep", s(&code)]);
    let b = cli(&["sweep", s(&code)]);
    assert_eq!(a, b);
    assert_eq!(cli(&["reproduce", "table2"]), cli(&["reproduce", "table2"]));
}

#[test]
fn verify_and_canon() {
    let dir = TempDir::new().unwrap();
    let out = cli(&["verify", s(&fixture_code(&dir, "table6")), "--t", "5"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.ends_with("result: pass\n"));

    let j = write(&dir, "j.txt", "field p=2\n2 2\n0 1\n1 0\n");
    let out = cli(&["canon", s(&j)]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("form: EvenAlternating r=2\n"));
    let out = cli(&["canon", s(&j), "--kind", "hermitian"]);
    assert_eq!(out.code, 2);
}

#[test]
fn reproduce_tables() {
    let out = cli(&["reproduce", "table1", "--tsv"]);
    assert_eq!(out.code, 0);
    let computed: Vec<&str> = out.stdout.lines().skip(1).map(|l| l.split('\t').nth(3).unwrap()).collect();
    assert_eq!(computed, ["[7,3,3]", "[6,3,3]", "[6,3,4]"]);
    let out = cli(&["reproduce", "table4"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("[14,6,6]"));
    assert!(out.stdout.ends_with("table4: pass\n\n"));
}

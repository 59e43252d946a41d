use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use knee_mcdm::gen::table1_front;
use knee_mcdm::{load_front, normalize, select_dnc, select_mmd, write_front, Format};
use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_knee-mcdm"));
    cmd.env_remove("KNEE_MCDM_EPSILON");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn table1_file(dir: &Path) -> PathBuf {
    let mut buf = Vec::new();
    write_front(&table1_front(), &mut buf, Format::Csv).unwrap();
    write(dir, "table1.csv", std::str::from_utf8(&buf).unwrap())
}

#[test]
fn select_mmd_on_table1() {
    let dir = tempfile::tempdir().unwrap();
    let path = table1_file(dir.path());
    let o = run(&[
        "select",
        "--method",
        "mmd",
        "--input",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["winner_ids"], serde_json::json!(["x6"]));
    assert!((v["c_min_mmd"].as_f64().unwrap() - 0.8448).abs() < 5e-5);
    assert!(v.get("trace").is_none());
}

#[test]
fn output_matches_the_library_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let path = table1_file(dir.path());
    let p = path.to_str().unwrap();
    let front = load_front(std::fs::File::open(&path).unwrap(), Format::Csv, &[]).unwrap();
    let nf = normalize(&front).unwrap();

    let o = run(&["select", "-i", p]);
    assert_eq!(stdout(&o), select_mmd(&nf, 1e-9).unwrap().to_json());
    let o = run(&["select", "-i", p, "--method", "dnc", "--seed", "7"]);
    assert_eq!(stdout(&o), select_dnc(&nf, 1e-9, 7).unwrap().to_json());
}

#[test]
fn dnc_prints_its_trace() {
    let dir = tempfile::tempdir().unwrap();
    let path = table1_file(dir.path());
    let o = run(&[
        "select",
        "--method",
        "dnc",
        "--seed",
        "7",
        "-i",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["winner_ids"], serde_json::json!(["x6"]));
    assert_eq!(v["trace"].as_array().unwrap().len(), 15);

    let o = run(&[
        "select",
        "--method",
        "dnc",
        "-i",
        path.to_str().unwrap(),
        "--output-format",
        "text",
    ]);
    let text = stdout(&o);
    assert!(text.contains("winner: x6"));
    assert_eq!(text.lines().filter(|l| l.starts_with("round ")).count(), 15);
}

#[test]
fn single_solution() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "one.csv", "id,a,b\nonly,3,4\n");
    let o = run(&["select", "-i", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["winner_ids"], serde_json::json!(["only"]));
    assert_eq!(v["c_min_mmd"].as_f64(), Some(0.0));
    assert_eq!(v["c_min_ws"].as_f64(), Some(0.0));
}

#[test]
fn csv_and_text_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let path = table1_file(dir.path());
    let p = path.to_str().unwrap();
    let csv = stdout(&run(&["select", "-i", p, "--output-format", "csv"]));
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "id,mmd,ws,winner");
    assert_eq!(lines.len(), 17);
    assert!(lines[6].starts_with("x6,8.44784") && lines[6].ends_with(",true"));

    let o = run(&["select", "-i", p, "--representative"]);
    assert_eq!(stdout(&o), "x6\n");
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = table1_file(dir.path());
    let out = dir.path().join("decision.json");
    let o = run(&[
        "select",
        "-i",
        path.to_str().unwrap(),
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["method"], "mmd");
}

#[test]
fn reads_standard_input() {
    use std::io::Write;
    let mut child = bin()
        .args(["select", "--format", "json", "--representative"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"objectives": ["a", "b"], "solutions": [{"id": "p", "f": [0, 1]}, {"id": "q", "f": [0.4, 0.4]}, {"id": "r", "f": [1, 0]}]}"#)
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "q\n");
}

#[test]
fn maximize_flips_a_column() {
    let dir = tempfile::tempdir().unwrap();
    // Minimizing both columns, b is the knee; maximizing `gain` lets a
    // dominate everything else.
    let path = write(
        dir.path(),
        "m.csv",
        "id,cost,gain\na,0,1\nb,0.2,0.2\nc,1,0\n",
    );
    let p = path.to_str().unwrap();
    assert_eq!(
        stdout(&run(&["select", "-i", p, "--representative"])),
        "b\n"
    );
    let o = run(&["select", "-i", p, "--maximize", "gain", "--representative"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "a\n");
    assert!(
        stderr(&o).contains("dropped 2 dominated solution(s): b, c"),
        "{}",
        stderr(&o)
    );
    let o = run(&["select", "-i", p, "--maximize", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dominated_rows_are_dropped_unless_asked() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "d.csv", "id,a,b\np,0,1\nq,1,0\nbad,2,2\n");
    let p = path.to_str().unwrap();
    let o = run(&["select", "-i", p, "--output-format", "csv"]);
    assert!(stderr(&o).contains("dropped 1 dominated solution(s): bad"));
    assert!(!stdout(&o).contains("bad"));
    let o = run(&["select", "-i", p, "--output-format", "csv", "--no-filter"]);
    assert!(stderr(&o).is_empty());
    assert!(stdout(&o).contains("\nbad,"));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let corrupt = write(dir.path(), "bad.csv", "id,a,b\nx,1,oops\n");
    for cmd in ["select", "rank", "verify", "plot"] {
        let o = run(&[cmd, "-i", corrupt.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(2), "{cmd}");
        assert!(stderr(&o).starts_with("error:"), "{}", stderr(&o));
    }
    let o = run(&[
        "select",
        "-i",
        dir.path().join("missing.csv").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["select", "--epsilon", "-1", "-i", corrupt.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["select", "--method", "topsis"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn degenerate_front_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "same.csv", "id,a,b\np,1,1\nq,1,1\n");
    let o = run(&["select", "-i", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn degenerate_column_warns() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "flat.csv",
        "id,a,flat,b\np,0,5,1\nq,0.3,5,0.3\nr,1,5,0\n",
    );
    let o = run(&["select", "-i", path.to_str().unwrap(), "--representative"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "q\n");
    assert!(stderr(&o).contains("`flat` has zero spread"));
}

#[test]
fn epsilon_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = table1_file(dir.path());
    let p = path.to_str().unwrap();
    let o = bin()
        .args(["select", "-i", p])
        .env("KNEE_MCDM_EPSILON", "10")
        .output()
        .unwrap();
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["winner_ids"].as_array().unwrap().len(), 16);
    // An explicit flag wins over the environment.
    let o = bin()
        .args(["select", "-i", p, "--epsilon", "0"])
        .env("KNEE_MCDM_EPSILON", "10")
        .output()
        .unwrap();
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["winner_ids"], serde_json::json!(["x6"]));
}

#[test]
fn rank_lists_classes_in_order() {
    let dir = tempfile::tempdir().unwrap();
    let path = table1_file(dir.path());
    let p = path.to_str().unwrap();
    let v: Value = serde_json::from_str(&stdout(&run(&["rank", "-i", p]))).unwrap();
    let ranking = v["ranking"].as_array().unwrap();
    assert_eq!(ranking.len(), 16);
    let head: Vec<&str> = ranking[..3]
        .iter()
        .map(|c| c["members"][0].as_str().unwrap())
        .collect();
    assert_eq!(head, ["x6", "x2", "x8"]);
    let text = stdout(&run(&["rank", "-i", p, "--output-format", "text"]));
    assert!(text.lines().next().unwrap().ends_with("x6"));
    let csv = stdout(&run(&["rank", "-i", p, "--output-format", "csv"]));
    assert!(csv.starts_with("rank,id,mmd\n1,x6,"));
}

#[test]
fn verify_table1_and_self_test() {
    let dir = tempfile::tempdir().unwrap();
    let path = table1_file(dir.path());
    let p = path.to_str().unwrap();
    let o = run(&[
        "verify", "-i", p, "--seed", "1", "--seed", "2", "--seed", "3", "--seed", "4",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["winner_ids"], serde_json::json!(["x6"]));
    assert_eq!(v["seeds"], serde_json::json!([1, 2, 3, 4]));

    let o = run(&["verify", "--self-test", "--output-format", "text"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(
        stdout(&o),
        "self-test: 100 fronts, 4 seeds each: 100 passed, 0 failed\n"
    );
}

#[test]
fn gen_is_deterministic() {
    let a = run(&[
        "gen",
        "--family",
        "sphere3d",
        "--samples",
        "12",
        "--seed",
        "5",
    ]);
    let b = run(&[
        "gen",
        "--family",
        "sphere3d",
        "--samples",
        "12",
        "--seed",
        "5",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 13);

    let o = run(&["gen", "--family", "table2like", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["solutions"].as_array().unwrap().len(), 16);

    let o = run(&["gen", "--family", "table1", "--samples", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["gen", "--family", "zdt9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn plot_convex_and_concave() {
    let dir = tempfile::tempdir().unwrap();
    let convex = dir.path().join("convex.csv");
    run(&[
        "gen",
        "--family",
        "convex2d",
        "--samples",
        "25",
        "-o",
        convex.to_str().unwrap(),
    ]);
    let o = run(&["plot", "-i", convex.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let svg = stdout(&o);
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("class=\"knee\"").count(), 1);
    assert_eq!(svg, stdout(&run(&["plot", "-i", convex.to_str().unwrap()])));

    let concave = dir.path().join("concave.csv");
    run(&[
        "gen",
        "--family",
        "concave2d",
        "--samples",
        "25",
        "-o",
        concave.to_str().unwrap(),
    ]);
    let svg = stdout(&run(&["plot", "-i", concave.to_str().unwrap()]));
    assert_eq!(svg.matches("class=\"knee\"").count(), 2);
    assert!(svg.contains("c_min = 1.000000"));
}

#[test]
fn plot_rejects_three_objectives() {
    let dir = tempfile::tempdir().unwrap();
    let path = table1_file(dir.path());
    let o = run(&["plot", "-i", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(5));
    assert!(stderr(&o).contains("exactly two objectives"));
    assert!(o.stdout.is_empty());
}

#[test]
fn bench_small_sweep() {
    let o = run(&[
        "bench",
        "--category",
        "c2",
        "--sizes",
        "10,20",
        "--reps",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 8);
    assert!(text
        .lines()
        .last()
        .unwrap()
        .starts_with("dnc slower than mmd/ws: "));
    let o = run(&[
        "bench",
        "--category",
        "c1",
        "--runs",
        "5",
        "--output-format",
        "csv",
    ]);
    assert!(stdout(&o).starts_with("category,workload,m,n,runs,method,total_s,mean_s,agree\n"));
    let o = run(&["bench", "--reps", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    assert_eq!(run(&[]).status.code(), Some(2));
}

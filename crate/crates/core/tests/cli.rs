use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_prolatekit"));
    cmd.env_remove("PROLATEKIT_THREADS");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

/// Rows of a report after the provenance line and header.
fn rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

fn write_basis(dir: &Path, name: &str, extra: &[&str]) -> std::path::PathBuf {
    let path = dir.join(name);
    let mut args = vec!["basis", "--out", p(&path)];
    args.extend_from_slice(extra);
    let o = run(&args);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    path
}

fn lambdas(path: &Path) -> Vec<f64> {
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    v["lambdas"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect()
}

#[test]
fn basis_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_basis(dir.path(), "b.json", &["--c", "10", "--K", "60"]);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["K"], 60);
    assert_eq!(v["family"], "fourier");
    let l = lambdas(&path);
    assert_eq!(l.len(), 60);
    assert!(l[0] > 0.99 && l[0] <= 1.0);
    assert!(l.windows(2).all(|w| w[1] <= w[0]));
    assert_eq!(v["B"].as_array().unwrap().len(), 60);
}

#[test]
fn basis_goes_to_stdout_without_out() {
    let o = run(&["basis", "--c", "2", "--K", "20"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["lambdas"].as_array().unwrap().len(), 20);
}

#[test]
fn constructions_agree() {
    let dir = tempfile::tempdir().unwrap();
    let a = lambdas(&write_basis(dir.path(), "t.json", &["--c", "5", "--K", "40"]));
    let b = lambdas(&write_basis(dir.path(), "g.json", &["--c", "5", "--K", "40", "--construction", "gram"]));
    for (x, y) in a.iter().zip(&b).take(20) {
        assert!((x - y).abs() < 1e-10, "{x} vs {y}");
    }
}

#[test]
fn half_order_hankel_eigenvalues_are_odd_fourier_ones() {
    let dir = tempfile::tempdir().unwrap();
    let f = lambdas(&write_basis(dir.path(), "f.json", &["--c", "10", "--K", "60"]));
    let h = lambdas(&write_basis(
        dir.path(),
        "h.json",
        &["--family", "hankel", "--alpha", "0.5", "--c", "10", "--K", "30"],
    ));
    for n in 0..10 {
        assert!((h[n] - f[2 * n + 1]).abs() < 1e-10 * f[2 * n + 1].max(1e-12), "n={n}");
    }
}

#[test]
fn missing_bandwidth_is_a_usage_error() {
    let o = run(&["basis", "--K", "60"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("--c"), "{}", stderr(&o));
    assert!(stderr(&o).to_lowercase().contains("usage"));
}

#[test]
fn help_exits_cleanly() {
    let o = run(&["--help"]);
    assert_eq!(code(&o), 0);
    for sub in ["basis", "expand", "project", "rates", "apweight", "normscan"] {
        assert!(stdout(&o).contains(sub));
    }
}

#[test]
fn bad_configuration_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let basis = write_basis(dir.path(), "b.json", &["--c", "10", "--K", "60"]);
    let o = run(&["expand", "--basis", p(&basis), "--function", "builtin:jn:3", "--N", "51"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).starts_with("prolatekit: "));
    assert_eq!(code(&run(&["basis", "--c", "-1"])), 2);
    assert_eq!(code(&run(&["basis", "--family", "hankel", "--c", "1"])), 2);
    assert_eq!(code(&run(&["basis", "--c", "1", "--alpha", "0.5"])), 2);
    assert_eq!(code(&run(&["rates", "--p", "0.5"])), 2);
    assert_eq!(code(&run(&["apweight", "--beta", "-0.5", "--p", "2", "--depth", "31"])), 2);
    assert_eq!(code(&run(&["project", "--c", "5", "--function", "builtin:jn:1", "--route", "lommel"])), 2);
    let o = bin().args(["basis", "--c", "2", "--K", "10"]).env("PROLATEKIT_THREADS", "0").output().unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn numerical_failure_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let basis = write_basis(dir.path(), "b.json", &["--c", "10", "--K", "60"]);
    let o = run(&["expand", "--basis", p(&basis), "--function", "builtin:bump:0.1", "--p", "1"]);
    assert_eq!(code(&o), 3, "{}", stderr(&o));
}

#[test]
fn unreadable_files_exit_four() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope.json");
    let o = run(&["expand", "--basis", p(&missing), "--function", "builtin:jn:3"]);
    assert_eq!(code(&o), 4);
    let o = run(&["project", "--c", "5", "--function", p(&dir.path().join("nope.csv"))]);
    assert_eq!(code(&o), 4);
    let o = run(&["basis", "--c", "2", "--K", "10", "--out", p(&dir.path().join("no/such/dir/b.json"))]);
    assert_eq!(code(&o), 4);
}

#[test]
fn expanding_a_prolate_gives_a_delta() {
    let dir = tempfile::tempdir().unwrap();
    let basis = write_basis(dir.path(), "b.json", &["--c", "10", "--K", "60"]);
    let coeffs = dir.path().join("a.csv");
    let out = dir.path().join("e.csv");
    let o = run(&[
        "expand",
        "--basis",
        p(&basis),
        "--function",
        "builtin:psi:3",
        "--coefficients",
        p(&coeffs),
        "--out",
        p(&out),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = std::fs::read_to_string(&coeffs).unwrap();
    assert!(text.starts_with("# prolatekit "));
    let table = rows(&text);
    assert_eq!(table.len(), 60);
    for r in &table {
        let n: usize = r[0].parse().unwrap();
        let a: f64 = r[1].parse().unwrap();
        let want = if n == 3 { 1.0 } else { 0.0 };
        assert!((a - want).abs() < 1e-6, "a_{n} = {a}");
    }
    let report = rows(&std::fs::read_to_string(&out).unwrap());
    assert_eq!(report.len(), 51 * 10);
    for r in report.iter().filter(|r| r[0].parse::<usize>().unwrap() >= 3) {
        assert!(r[3].parse::<f64>().unwrap() < 1e-6);
    }
}

#[test]
fn rates_report_one_slope_per_exponent() {
    let o = run(&["rates", "--p", "2,4,6"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.lines().nth(1).unwrap().starts_with("p,slope,predicted"));
    let table = rows(&text);
    assert_eq!(table.len(), 3);
    for r in &table {
        let p: f64 = r[0].parse().unwrap();
        let slope: f64 = r[1].parse().unwrap();
        if p == 4.0 {
            assert_eq!(r[2], "nan");
        } else {
            let want: f64 = r[2].parse().unwrap();
            let oracle = if p < 4.0 { 1.0 / p - 1.0 } else { 1.0 / (3.0 * p) - 5.0 / 6.0 };
            assert!((want - oracle).abs() < 1e-15);
            assert!((slope - want).abs() < 0.1, "p={p}: {slope} vs {want}");
        }
    }
}

#[test]
fn apweight_reports_the_power_bracket() {
    let o = run(&["apweight", "--beta", "-0.5", "--p", "2", "--depth", "8"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let table = rows(&stdout(&o));
    assert_eq!(table.len(), 9);
    for r in &table {
        assert!((r[1].parse::<f64>().unwrap() - 4.0 / 3.0).abs() < 1e-10);
    }
}

#[test]
fn apweight_reads_a_step_weight() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.csv");
    std::fs::write(&w, "x,value\n0,1\n0.5,4\n1,0\n").unwrap();
    let o = run(&["apweight", "--weight", p(&w), "--p", "2", "--depth", "4"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let last = rows(&stdout(&o)).pop().unwrap();
    assert!((last[2].parse::<f64>().unwrap() - 1.5625).abs() < 1e-12);
}

#[test]
fn project_reads_a_table() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.csv");
    let mut text = String::from("x,value\n");
    for i in 0..=400 {
        let x = -4.0 + 0.02 * i as f64;
        text.push_str(&format!("{x},{}\n", (-x * x).exp()));
    }
    std::fs::write(&f, text).unwrap();
    let o = run(&["project", "--c", "8", "--function", p(&f)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = stdout(&o);
    let mass: f64 = text.lines().nth(1).unwrap().strip_prefix("# out_of_band_mass ").unwrap().parse().unwrap();
    assert!(mass < 1e-6);
    let table = rows(&text);
    let (_, v) = table
        .iter()
        .map(|r| (r[0].parse::<f64>().unwrap(), r[1].parse::<f64>().unwrap()))
        .min_by(|a, b| a.0.abs().total_cmp(&b.0.abs()))
        .unwrap();
    assert!((v - 1.0).abs() < 1e-3, "{v}");
}

#[test]
fn runs_are_reproducible() {
    let args = ["normscan", "--c", "5", "--p", "2", "--q", "3", "--count", "4"];
    let a = run(&args);
    let b = bin().args(args).env("PROLATEKIT_THREADS", "1").output().unwrap();
    assert_eq!(code(&a), 0, "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let first = stdout(&a).lines().next().unwrap().to_string();
    let parts: Vec<&str> = first.split(' ').collect();
    assert_eq!(parts[..2], ["#", "prolatekit"]);
    assert_eq!(parts[3], "config-sha256");
    assert_eq!(parts[4].len(), 64);
}

#[test]
fn provenance_ignores_output_paths() {
    let dir = tempfile::tempdir().unwrap();
    let (x, y) = (dir.path().join("x.csv"), dir.path().join("y.csv"));
    for path in [&x, &y] {
        assert_eq!(code(&run(&["apweight", "--beta", "0.5", "--p", "3", "--out", p(path)])), 0);
    }
    assert_eq!(std::fs::read(&x).unwrap(), std::fs::read(&y).unwrap());
    let other = run(&["apweight", "--beta", "0.25", "--p", "3"]);
    let head = |s: String| s.lines().next().unwrap().to_string();
    assert_ne!(head(std::fs::read_to_string(&x).unwrap()), head(stdout(&other)));
}

#[test]
fn library_entry_point_matches_the_binary() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.csv");
    let status = prolatekit::cli::run(["prolatekit", "rates", "--p", "3", "--nmax", "30", "--out", p(&out)]);
    assert_eq!(status, 0);
    let o = run(&["rates", "--p", "3", "--nmax", "30"]);
    assert_eq!(std::fs::read(&out).unwrap(), o.stdout);
}

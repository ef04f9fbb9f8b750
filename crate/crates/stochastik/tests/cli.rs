use std::path::Path;
use std::process::{Command, Output};

use stochastik::export::{parse_dieharder_text, read_trajectory_csv};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stochastik"))
        .args(args)
        .env_remove("STOCHASTIK_ENTROPY_PATH")
        .output()
        .expect("spawn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_dieharder_text_matches_golden_prefix() {
    let o = run(&[
        "gen",
        "--alg",
        "xorshift-star",
        "--seed",
        "12345",
        "--count",
        "5",
        "--format",
        "dieharder-text",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let (header, words) = parse_dieharder_text(o.stdout.as_slice()).unwrap();
    assert_eq!((header.count(), header.numbit()), (5, 64));
    let golden = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/xorshift-star_seed12345.txt"),
    )
    .unwrap();
    let expect: Vec<u64> = golden.lines().take(5).map(|l| l.parse().unwrap()).collect();
    assert_eq!(words, expect);
    assert!(o.stderr.is_empty());
}

#[test]
fn gen_is_deterministic() {
    for fmt in ["dieharder-text", "raw", "hex"] {
        let args = [
            "gen", "--alg", "cmrg", "--seed", "3", "--count", "100", "--format", fmt,
        ];
        let (a, b) = (run(&args), run(&args));
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{fmt}");
    }
}

#[test]
fn gen_raw_is_eight_bytes_per_word() {
    let o = run(&[
        "gen", "--alg", "lcg", "--seed", "0", "--count", "3", "--format", "raw",
    ]);
    assert_eq!(o.stdout.len(), 24);
    assert_eq!(
        u64::from_le_bytes(o.stdout[..8].try_into().unwrap()),
        1442695040888963407
    );
}

#[test]
fn gen_32_bit_generators_declare_32_bits() {
    let o = run(&["gen", "--alg", "kiss", "--count", "10"]);
    let (header, _) = parse_dieharder_text(o.stdout.as_slice()).unwrap();
    assert_eq!(header.numbit(), 32);
}

#[test]
fn unknown_generator_lists_names() {
    let o = run(&["gen", "--alg", "nosuch"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    for name in ["lcg", "mt64", "xorshift-plus", "cubic-cg"] {
        assert!(err.contains(name), "{err}");
    }
    assert!(o.stdout.is_empty());
}

#[test]
fn config_errors_exit_2() {
    for args in [
        &["gen", "--alg", "lcg", "--count", "0"][..],
        &["gen", "--alg", "lcg", "--numbit", "16"],
        &["gen", "--alg", "xorshift-star", "--seed", "0"],
        &["dist", "poisson", "--lambda", "-1"],
        &["dist", "normal", "--sigma", "0"],
        &["process", "wiener", "--T", "1", "--h", "0"],
        &[
            "process",
            "wiener",
            "--T",
            "1",
            "--h",
            "0.1",
            "--trajectories",
            "2",
        ],
        &["test", "--alg", "mt64", "--samples", "1000"],
        &["sde", "--h-euler", "0.5"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn dist_shapes() {
    let o = run(&[
        "dist", "normal", "--mu", "0", "--sigma", "1", "--count", "3", "--seed", "7",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<f64> = stdout(&o).lines().map(|l| l.parse().unwrap()).collect();
    assert_eq!(lines.len(), 3);

    let o = run(&["dist", "poisson", "--lambda", "0", "--count", "10"]);
    assert_eq!(stdout(&o), "0\n".repeat(10));

    let o = run(&[
        "dist", "normal", "--mu", "-5", "--sigma", "0.5", "--count", "200",
    ]);
    let mean = stdout(&o)
        .lines()
        .map(|l| l.parse::<f64>().unwrap())
        .sum::<f64>()
        / 200.0;
    assert!((mean + 5.0).abs() < 0.2, "{mean}");
}

#[test]
fn process_wiener_csv() {
    let o = run(&[
        "process", "wiener", "--T", "1", "--h", "0.1", "--dims", "1", "--seed", "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let table = read_trajectory_csv(o.stdout.as_slice()).unwrap();
    assert_eq!(table.header, ["t", "w1"]);
    assert_eq!(table.rows.len(), 11);
    assert_eq!(table.rows[0], [0.0, 0.0]);
}

#[test]
fn process_poisson_zero_rate() {
    let o = run(&[
        "process", "poisson", "--lambda", "0", "--T", "1", "--h", "0.1",
    ]);
    let table = read_trajectory_csv(o.stdout.as_slice()).unwrap();
    assert!(table.rows.iter().all(|r| r[1] == 0.0));
}

#[test]
fn process_ensemble_writes_indexed_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w.csv");
    let o = run(&[
        "process",
        "wiener",
        "--T",
        "1",
        "--h",
        "0.5",
        "--dims",
        "2",
        "--trajectories",
        "3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let mut names: Vec<String> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names, ["w_0.csv", "w_1.csv", "w_2.csv"]);
    let a = std::fs::read(dir.path().join("w_0.csv")).unwrap();
    let b = std::fs::read(dir.path().join("w_1.csv")).unwrap();
    assert_ne!(a, b);
    assert!(String::from_utf8(a).unwrap().starts_with("t,w1,w2\n"));
}

#[test]
fn test_command_exit_codes() {
    let o = run(&["test", "--alg", "lcg", "--samples", "100000"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["test", "--alg", "xorshift-plus", "--samples", "100000"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&[
        "test",
        "--alg",
        "mt64",
        "--samples",
        "100000",
        "--format",
        "csv",
    ]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("test,statistic,p,verdict"));
    assert_eq!(lines.count(), 4);
}

#[test]
fn sde_output() {
    let o = run(&["sde", "--t-end", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let table = read_trajectory_csv(o.stdout.as_slice()).unwrap();
    assert_eq!(table.header, ["t", "x", "y", "W"]);
    assert_eq!(table.rows[0], [0.0, 2.0, 0.0, 0.0]);

    let o = run(&[
        "sde", "--gain", "0", "--x0", "0", "--y0", "0", "--t-end", "5",
    ]);
    let table = read_trajectory_csv(o.stdout.as_slice()).unwrap();
    assert!(table.rows.iter().all(|r| r[1] == 0.0 && r[2] == 0.0));

    let args = [
        "sde",
        "--seed",
        "5",
        "--t-end",
        "10",
        "--increment-variance",
        "unit",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn sde_divergence_exits_1() {
    let o = run(&[
        "sde",
        "--x0",
        "10000",
        "--h-euler",
        "0.1",
        "--t-end",
        "10",
        "--gain",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
}

#[test]
fn os_seed_uses_entropy_override() {
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("entropy");
    std::fs::write(&src, 7u64.to_le_bytes()).unwrap();
    let via_os = Command::new(env!("CARGO_BIN_EXE_stochastik"))
        .args(["gen", "--alg", "mt64", "--seed", "os", "--count", "4"])
        .env("STOCHASTIK_ENTROPY_PATH", &src)
        .output()
        .unwrap();
    assert_eq!(via_os.status.code(), Some(0));
    assert_eq!(
        via_os.stdout,
        run(&["gen", "--alg", "mt64", "--seed", "7", "--count", "4"]).stdout
    );

    let missing = Command::new(env!("CARGO_BIN_EXE_stochastik"))
        .args(["gen", "--alg", "mt64", "--seed", "os"])
        .env("STOCHASTIK_ENTROPY_PATH", dir.path().join("absent"))
        .output()
        .unwrap();
    assert_eq!(missing.status.code(), Some(1));
}

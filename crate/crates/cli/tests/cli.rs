//! End-to-end tests of the command-line surface: file format contracts,
//! printed precision, determinism, and exit codes.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_expander-forge"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("expander-forge-test-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn gen(n: usize, m: usize, seed: u64, path: &Path) {
    let out = run(&[
        "gen",
        "--n",
        &n.to_string(),
        "--m",
        &m.to_string(),
        "--seed",
        &seed.to_string(),
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{out:?}");
}

#[test]
fn gen_writes_the_documented_format() {
    let path = tmp("g_10_5.rot");
    gen(10, 5, 7, &path);
    let text = fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "10 5");
    assert_eq!(text.lines().count(), 51);
    for line in text.lines().skip(1) {
        assert_eq!(line.split_whitespace().count(), 4);
    }
}

#[test]
fn gen_is_byte_deterministic() {
    let a = tmp("det_a.rot");
    let b = tmp("det_b.rot");
    gen(12, 4, 99, &a);
    gen(12, 4, 99, &b);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let c = tmp("det_c.rot");
    gen(12, 4, 100, &c);
    assert_ne!(fs::read(&a).unwrap(), fs::read(&c).unwrap());
}

#[test]
fn zigzag_header_carries_product_dimensions() {
    let g = tmp("zz_g.rot");
    let h1 = tmp("zz_h1.rot");
    let h2 = tmp("zz_h2.rot");
    gen(10, 5, 1, &g);
    gen(5, 3, 2, &h1);
    gen(5, 2, 3, &h2);
    let out_path = tmp("zz_out.rot");
    let out = run(&[
        "zigzag",
        g.to_str().unwrap(),
        h1.to_str().unwrap(),
        h2.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = fs::read_to_string(&out_path).unwrap();
    assert_eq!(text.lines().next().unwrap(), "50 6");
    assert_eq!(text.lines().count(), 301);
}

#[test]
fn rzigzag_with_trivial_component_gives_a_permutation() {
    let g = tmp("rz_g.rot");
    gen(4, 3, 5, &g);
    // The trivial graph on [3]: single self-loop per vertex.
    let triv = tmp("rz_triv.rot");
    fs::write(&triv, "3 1\n1 1 1 1\n2 1 2 1\n3 1 3 1\n").unwrap();
    let out_path = tmp("rz_out.rot");
    let out = run(&[
        "rzigzag",
        g.to_str().unwrap(),
        triv.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    // A 1-regular graph is a permutation; lambda must print 1.
    let lam = run(&["lambda", out_path.to_str().unwrap()]);
    assert!(lam.status.success());
    assert_eq!(stdout(&lam).trim(), "1.0000000");
}

#[test]
fn power_one_reproduces_the_input_file() {
    let g = tmp("pw_g.rot");
    gen(6, 3, 8, &g);
    let out_path = tmp("pw_out.rot");
    let out = run(&[
        "power",
        g.to_str().unwrap(),
        "--t",
        "1",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(fs::read(&g).unwrap(), fs::read(&out_path).unwrap());
}

#[test]
fn power_cap_maps_to_validation_exit_code() {
    let g = tmp("cap_g.rot");
    gen(6, 3, 8, &g);
    let out = run(&[
        "power",
        g.to_str().unwrap(),
        "--t",
        "30",
        "--out",
        tmp("cap_out.rot").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn lambda_prints_seven_decimals() {
    // Trivial graph on [4]: identity matrix, lambda = 1.
    let triv = tmp("lam_triv.rot");
    fs::write(&triv, "4 1\n1 1 1 1\n2 1 2 1\n3 1 3 1\n4 1 4 1\n").unwrap();
    let out = run(&["lambda", triv.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1.0000000");

    // Directed 2-cycle: permutation, lambda = 1.
    let cyc = tmp("lam_cyc.rot");
    fs::write(&cyc, "2 1\n1 1 2 1\n2 1 1 1\n").unwrap();
    let out = run(&["lambda", cyc.to_str().unwrap()]);
    assert_eq!(stdout(&out).trim(), "1.0000000");

    // Complete-with-loops on [4], all entries 1/4: lambda = 0.
    let complete = tmp("lam_complete.rot");
    let mut text = String::from("4 4\n");
    for u in 1..=4 {
        for k in 1..=4 {
            text.push_str(&format!("{u} {k} {k} {u}\n"));
        }
    }
    fs::write(&complete, text).unwrap();
    let out = run(&["lambda", complete.to_str().unwrap()]);
    assert_eq!(stdout(&out).trim(), "0.0000000");
}

#[test]
fn lambda_of_generated_case_i_graph_is_in_the_expected_window() {
    let g = tmp("lam_big.rot");
    gen(50, 40, 7, &g);
    let out = run(&["lambda", g.to_str().unwrap()]);
    let v: f64 = stdout(&out).trim().parse().unwrap();
    assert!(v > 0.2 && v < 0.45, "lambda = {v}");
}

#[test]
fn bound_commands_print_the_table_values() {
    let out = run(&["bound", "0.4184724", "0.5226591", "0.5226591"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0.6964135");

    let out = run(&["bound-prime", "0.2931153", "0.3334984", "--k", "3"]);
    assert_eq!(stdout(&out).trim(), "0.4670042");

    // k = 1: exponent zero.
    let out = run(&["bound-prime", "0.9", "0.4"]);
    assert_eq!(stdout(&out).trim(), "1.0000000");
}

#[test]
fn domain_errors_exit_with_one() {
    let out = run(&["bound", "1.5", "0.5", "0.5"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["bound-prime", "0.5", "0.5", "--k", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn io_and_parse_errors_exit_with_two() {
    let out = run(&["lambda", "/nonexistent/graph.rot"]);
    assert_eq!(out.status.code(), Some(2));

    let bad = tmp("bad.rot");
    fs::write(&bad, "2 1\n1 1 2 1\n2 1 2 1\n").unwrap();
    let out = run(&["lambda", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dimension_mismatch_exits_with_one() {
    let g = tmp("mm_g.rot");
    let h = tmp("mm_h.rot");
    gen(10, 5, 1, &g);
    gen(4, 2, 2, &h);
    let out = run(&[
        "zigzag",
        g.to_str().unwrap(),
        h.to_str().unwrap(),
        h.to_str().unwrap(),
        "--out",
        tmp("mm_out.rot").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn experiment_zigzag_emits_one_csv_row() {
    let out = run(&[
        "experiment",
        "zigzag",
        "--case",
        "iii",
        "--trials",
        "5",
        "--seed",
        "3",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "lambda_g,lambda_h,ave_lambda,max_lambda,f");
    assert_eq!(lines.len(), 2);
    let fields: Vec<f64> = lines[1].split(',').map(|f| f.parse().unwrap()).collect();
    // ave <= max <= f.
    assert!(fields[2] <= fields[3] && fields[3] <= fields[4] + 1e-9);
}

#[test]
fn experiment_reduced_power_has_unit_first_row_and_is_deterministic() {
    let args = [
        "experiment",
        "reduced-power",
        "--n",
        "8",
        "--m",
        "4",
        "--d",
        "2",
        "--trials",
        "4",
        "--k-max",
        "5",
        "--seed",
        "11",
    ];
    let a = run(&args);
    assert!(a.status.success());
    let text = stdout(&a);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "k,ave_lambda,max_lambda,bound");
    assert_eq!(lines[1], "1,1.0000000,1.0000000,1.0000000");
    assert_eq!(lines.len(), 6);

    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn experiment_case_and_dims_are_mutually_exclusive() {
    let out = run(&[
        "experiment",
        "zigzag",
        "--case",
        "iii",
        "--n",
        "4",
        "--m",
        "2",
        "--d",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["experiment", "zigzag", "--n", "4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn tolerance_env_var_is_validated() {
    let out = bin()
        .args(["bound", "0.5", "0.5", "0.5"])
        .env("EXPANDER_FORGE_TOL", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = bin()
        .args(["bound", "0.5", "0.5", "0.5"])
        .env("EXPANDER_FORGE_TOL", "1e-7")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn experiment_writes_csv_file_when_asked() {
    let path = tmp("exp.csv");
    let out = run(&[
        "experiment",
        "zigzag",
        "--case",
        "iii",
        "--trials",
        "2",
        "--seed",
        "4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("lambda_g,"));
}

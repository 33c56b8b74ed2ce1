use std::process::{Command, Output};

fn run(args: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewcell")).args(args.split(' ')).output().unwrap()
}

#[test]
fn verify_toy_passes() {
    assert_eq!(run("verify --gen toy:3 --field rational").status.code(), Some(0));
}

#[test]
fn decomp_csv_has_t_powers() {
    let out = run("decomp --gen toy:3 --field rational --format csv");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 6);
    for r in rows {
        let cells: Vec<&str> = r.split(',').skip(2).collect();
        assert_eq!(cells.iter().filter(|c| **c != "0").count(), 1, "{r}");
    }
    assert!(text.contains("\"(1,2)\",0,t^2"));
}

#[test]
fn adjust_on_fixture_passes() {
    let out = run("adjust --file klr-2-2-2.json --char 3 --format csv");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("# D_Q") && text.contains("# D_F") && text.contains("# A_F"));
}

#[test]
fn failed_shift_exits_1_with_witness() {
    let out = run("verify --gen matrix:4:1,2,-2,-1:2,1,4,3 --field rational");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("shift.degree"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run("verify --gen toy:3").status.code(), Some(2));
    assert_eq!(run("verify --gen toy:3 --field nope").status.code(), Some(2));
    assert_eq!(run("verify --gen nofixture --field rational").status.code(), Some(2));
    assert_eq!(run("skeleton --e 2 --p 2 --n 2 --rho 0 --format csv").status.code(), Some(2));
    assert_eq!(run("frobnicate").status.code(), Some(2));
}

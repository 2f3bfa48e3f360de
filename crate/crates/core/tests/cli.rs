use std::process::{Command, Output};

fn ladder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ladder")).args(args).output().expect("run ladder")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn gen_writes_csv_to_file() {
    let dir = std::env::temp_dir().join(format!("ladder-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("legendre.csv");
    let o = ladder(&["gen", "--family", "legendre", "--n-max", "2", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "0:1\n1:0,1\n2:-1/2,0,3/2\n");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn gen_laguerre_latex_descending() {
    let o = ladder(&["gen", "--family", "laguerre", "--alpha", "0", "--n-max", "2", "--format", "latex"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("L^{(0)}_{2}(x) = \\frac{1}{2}x^{2} - 2x + 1"), "{}", stdout(&o));
}

#[test]
fn verify_reports_and_exit_codes() {
    let o = ladder(&["verify", "--suite", "remark3term", "--n-max", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("suite remark3term (n-max 10)"));
    assert!(stdout(&o).contains("PASS: "));

    let o = ladder(&["verify", "--suite", "eq31", "--n-max", "5", "--negative-control", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], false);
}

#[test]
fn factorize_radial_and_errors() {
    let o = ladder(&["factorize", "--family", "oscillator-3d", "--l", "0", "--direction", "raising", "--n", "0", "--drift", "r"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("verify:   ok"));

    let o = ladder(&["factorize", "--family", "legendre", "--direction", "sideways", "--n", "1", "--drift", "0"]);
    assert_eq!(o.status.code(), Some(2));

    let o = ladder(&["factorize", "--family", "legendre", "--direction", "raising", "--n", "1", "--drift", "1/(x-1)^2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("repeated pole"));

    let o = ladder(&["gen", "--family", "legendre", "--n-max", "two"]);
    assert_eq!(o.status.code(), Some(2));
}

use std::process::Command;

use umbra_cli::records::{NumberRecord, PolynomialRecord, ReportRecord, TableRecord};

fn umbra(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_umbra"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

fn value_of(stdout: &str) -> String {
    serde_json::from_str::<serde_json::Value>(stdout.trim()).unwrap()["value"]
        .as_str()
        .unwrap()
        .to_string()
}

#[test]
fn number_examples() {
    let (out, _, code) = umbra(&["number", "--k", "10", "--a", "1", "--method", "series"]);
    assert_eq!(code, 0);
    assert_eq!(value_of(&out), "5/66");
    assert_eq!(
        value_of(&umbra(&["number", "--k", "0", "--a", "2,3"]).0),
        "1/6"
    );
    let (out, _, _) = umbra(&["number", "--k", "2", "--n", "1", "--method", "umbral"]);
    assert_eq!(value_of(&out), "1/6*a1^2");
    for method in ["umbral", "multinomial", "series"] {
        let (out, _, _) = umbra(&["number", "--k", "4", "--a", "n=2", "--method", method]);
        assert_eq!(value_of(&out), "-1/30*a1^4 + 1/6*a1^2*a2^2 - 1/30*a2^4");
    }
}

#[test]
fn number_usage_errors() {
    assert_eq!(umbra(&["number", "--k", "1", "--a", "1,0"]).2, 2);
    assert_eq!(
        umbra(&["number", "--k", "1", "--a", "1", "--method", "guess"]).2,
        2
    );
    assert_eq!(umbra(&["number", "--k", "1"]).2, 2);
}

#[test]
fn polynomial_examples() {
    assert_eq!(
        value_of(&umbra(&["polynomial", "--j", "2", "--a", "1"]).0),
        "x^2 - x + 1/6"
    );
    assert_eq!(
        value_of(&umbra(&["polynomial", "--j", "0", "--n", "3"]).0),
        "1"
    );
    assert_eq!(
        value_of(&umbra(&["polynomial", "--j", "1", "--norlund", "3"]).0),
        "x - 3/2"
    );
    let (latex, _, _) = umbra(&["polynomial", "--j", "2", "--a", "1", "--format", "latex"]);
    assert_eq!(latex.trim(), "$x^{2} - x + \\frac{1}{6}$");
}

#[test]
fn json_round_trips_byte_for_byte() {
    let (out, _, _) = umbra(&["number", "--k", "3", "--a", "1/2,-3"]);
    let rec: NumberRecord = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(serde_json::to_string(&rec).unwrap(), out.trim());

    let (out, _, _) = umbra(&["polynomial", "--j", "3", "--norlund", "2"]);
    let rec: PolynomialRecord = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(serde_json::to_string(&rec).unwrap(), out.trim());

    let (out, _, _) = umbra(&["table", "norlund", "--j", "3", "--n", "3"]);
    let rec: TableRecord = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(serde_json::to_string(&rec).unwrap(), out.trim());

    let (out, _, code) = umbra(&[
        "verify",
        "all",
        "--ranges",
        "m=0..2,l=0..1,n=1..3,len=0..3,p=1..3",
    ]);
    assert_eq!(code, 0);
    for line in out.lines() {
        let rec: ReportRecord = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&rec).unwrap(), line);
    }
}

#[test]
fn tables() {
    let (out, _, _) = umbra(&["table", "bernoulli", "--k", "12", "--format", "csv"]);
    assert!(out.lines().any(|l| l == "12,-691/2730"));
    assert_eq!(out.lines().count(), 14);
    let (out, _, code) = umbra(&["table", "bernoulli", "--format", "csv"]);
    assert_eq!((out.as_str(), code), ("k,B_k\n", 0));
    let (out, _, _) = umbra(&["table", "norlund", "--format", "csv"]);
    assert_eq!(out, "j\n");
    let (out, _, _) = umbra(&["table", "bb", "--k", "2", "--n", "2", "--format", "csv"]);
    assert!(out.contains("2,1/6*a1^2 + 1/2*a1*a2 + 1/6*a2^2"));
}

#[test]
fn norlund_table_matches_library() {
    use umbra_core::barnes::norlund_polynomial;
    let (out, _, _) = umbra(&["table", "norlund", "--j", "4", "--n", "4"]);
    let rec: TableRecord = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(rec.rows.len(), 5);
    for (j, row) in rec.rows.iter().enumerate() {
        for n in 0..=4 {
            assert_eq!(row[n + 1], norlund_polynomial(j as u32, n).to_string());
        }
    }
}

#[test]
fn verify_single_and_errors() {
    let (out, err, code) = umbra(&["verify", "main_identity", "--m", "3", "--n", "3"]);
    assert_eq!(code, 0);
    let rec: ReportRecord = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(rec.value.as_deref(), Some("1/2"));
    assert!(rec.passed);
    assert!(err.contains("1 reports: 1 passed"));

    assert_eq!(umbra(&["verify", "bogus"]).2, 2);
    assert_eq!(
        umbra(&["verify", "norlund_recurrence", "--r", "4", "--p", "4"]).2,
        2
    );
    assert_eq!(
        umbra(&[
            "verify",
            "palindromic_general",
            "--m",
            "1",
            "--weights",
            "1,2"
        ])
        .2,
        2
    );

    let (out, _, code) = umbra(&["verify", "norlund_recurrence", "--p", "5"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 5);
}

#[test]
fn config_file_supplies_ranges() {
    let dir = std::env::temp_dir().join(format!("umbra-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("suite.conf");
    std::fs::write(&path, "# small\nm = 1..2\nn = 2\nseed = 3\n").unwrap();
    let path = path.to_str().unwrap();
    let (out, _, code) = umbra(&["verify", "odd_recurrence", "--config", path]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);
    // Flags override the file.
    let (out, _, _) = umbra(&["verify", "odd_recurrence", "--config", path, "--m", "4"]);
    assert_eq!(out.lines().count(), 1);
    let (out, _, _) = umbra(&[
        "verify",
        "odd_recurrence",
        "--config",
        path,
        "--default-ranges",
    ]);
    assert_eq!(out.lines().count(), 28);
    assert_eq!(
        umbra(&["verify", "all", "--config", "/nonexistent/umbra.conf"]).2,
        2
    );
}

#[test]
fn csv_and_latex_reports() {
    let (out, _, _) = umbra(&[
        "verify",
        "reflection",
        "--m",
        "2",
        "--n",
        "1",
        "--format",
        "csv",
    ]);
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some("identity,params,passed,spot_checks,lhs,rhs,witness")
    );
    assert!(lines
        .next()
        .unwrap()
        .starts_with("reflection,m=2 n=1,true,3/3,"));
    let (out, _, _) = umbra(&[
        "verify",
        "reflection",
        "--m",
        "2",
        "--n",
        "1",
        "--format",
        "latex",
    ]);
    assert!(out.contains("\\texttt{reflection} & m=2 n=1 & pass"));
}

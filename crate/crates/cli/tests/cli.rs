use std::process::{Command, Output};

use hopf_galois::{cmd_classify_all, cmd_intermediate, cmd_verify, Context, Suite};
use hopf_galois_core::catalog;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf-galois"))
        .args(args)
        .env_remove("HG_CATALOG")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn degree_six_table_lists_every_label_in_order() {
    let o = bin(&["classify-all", "--degree", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let labels: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("6T"))
        .map(|l| l.split_whitespace().next().unwrap())
        .collect();
    let expected: Vec<String> = (1..=16).map(|k| format!("6T{k}")).collect();
    assert_eq!(labels, expected);
    assert!(text.contains("6T5 [F18] |G|=18 [F:k]=6 |G'|=3: acg"));
}

#[test]
fn json_output_is_deterministic() {
    let args = ["intermediate", "--degree", "6", "--group", "6T10", "--format", "json"];
    let a = bin(&args);
    let b = bin(&args);
    assert_eq!(a.stdout, b.stdout);
    let serial = bin(&[&args[..], &["--jobs", "1"]].concat());
    let parallel = bin(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(serial.stdout, parallel.stdout);
    assert_eq!(a.stdout, serial.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["command"], "intermediate --degree 6 --group 6T10");
    assert!(doc.get("timing").is_none());
}

#[test]
fn text_and_json_carry_the_same_verdicts() {
    let text = stdout(&bin(&["classify-all", "--degree", "5"]));
    let json: serde_json::Value = serde_json::from_slice(&bin(&["classify-all", "--degree", "5", "--format", "json"]).stdout).unwrap();
    for row in json["rows"].as_array().unwrap() {
        let label = row["label"].as_str().unwrap();
        let verdict = row["verdict"].as_str().unwrap();
        let line = text.lines().find(|l| l.starts_with(&format!("{label} "))).unwrap();
        assert!(line.contains(&format!(": {verdict}")), "{line}");
    }
}

#[test]
fn timing_is_opt_in() {
    let o = bin(&["classify-all", "--degree", "4", "--format", "json", "--timing"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["timing"].as_array().unwrap().len(), 5);
}

#[test]
fn undecided_rows_exit_with_two() {
    let o = bin(&["intermediate", "--degree", "6", "--group", "6T16"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("undecided-out-of-catalog"));
    // the same scan restricted to supported degrees is fully decided
    let o = bin(&["intermediate", "--degree", "6", "--group", "6T16", "--order", "36"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn bad_input_exits_with_one() {
    assert_eq!(bin(&["intermediate", "--degree", "6", "--group", "6T17"]).status.code(), Some(1));
    assert_eq!(bin(&["intermediate", "--degree", "5", "--group", "6T3"]).status.code(), Some(1));
    assert_eq!(bin(&["classify-all", "--degree", "9"]).status.code(), Some(1));
    let o = bin(&["classify-all", "--degree", "4", "--catalog", "/nonexistent/catalog.txt"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cannot read catalog"));
}

#[test]
fn catalog_override_by_flag_and_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("catalog.txt");
    std::fs::write(&path, catalog::embedded().print()).unwrap();
    let p = path.to_str().unwrap();
    let embedded = bin(&["classify-all", "--degree", "4"]);
    let by_flag = bin(&["classify-all", "--degree", "4", "--catalog", p]);
    assert_eq!(embedded.stdout, by_flag.stdout);
    let by_env = Command::new(env!("CARGO_BIN_EXE_hopf-galois"))
        .args(["classify-all", "--degree", "4"])
        .env("HG_CATALOG", p)
        .output()
        .unwrap();
    assert_eq!(embedded.stdout, by_env.stdout);

    std::fs::write(&path, "HGCATALOG 1\nG 2 1 C2 2 (1,2\n").unwrap();
    assert_eq!(bin(&["classify-all", "--degree", "4", "--catalog", p]).status.code(), Some(1));
}

#[test]
fn library_entry_points() {
    let ctx = Context::default();
    let doc = cmd_classify_all(4, Some(24), &ctx).unwrap();
    assert_eq!(doc.rows.len(), 1);
    assert_eq!(doc.rows[0].label, "4T5");
    let doc = cmd_intermediate(6, "6T14", None, &ctx).unwrap();
    assert!(doc.rows.iter().all(|r| r.verdict == "not-hg"));
    assert!(cmd_intermediate(6, "6T99", None, &ctx).is_err());
}

#[test]
fn verify_suites_report_named_checks() {
    let ctx = Context::default();
    let hol = cmd_verify(Suite::Holomorph, &ctx).to_text();
    assert!(hol.contains("Hol(N) = Normalizer(Sym, λ(N)) for |N| ≤ 12: pass"));
    let oracle = cmd_verify(Suite::Oracle, &ctx).to_text();
    assert!(oracle.contains("degree ≤ 6 Byott/GP equivalence: pass, 29 problems"));
    let cat = cmd_verify(Suite::Catalog, &ctx).to_text();
    assert!(cat.contains("order 40 → 14, order 60 → 13"));
    let o = bin(&["verify", "all"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains(": fail"));
}

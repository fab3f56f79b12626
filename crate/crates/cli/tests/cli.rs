use std::path::Path;
use std::process::{Command, Output};

fn entransfer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_entransfer")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = entransfer(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Header plus rows as string maps keyed by column.
fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r.headers().unwrap().iter().map(str::to_owned).collect();
    let rows = r.records().map(|rec| rec.unwrap().iter().map(str::to_owned).collect()).collect();
    (header, rows)
}

fn field(text: &str, column: &str) -> String {
    let (header, rows) = parse_csv(text);
    let i = header.iter().position(|h| h == column).unwrap_or_else(|| panic!("no column {column}"));
    rows[0][i].clone()
}

#[test]
fn beta_c_value() {
    let bc: f64 = field(&stdout(&["beta-c", "--dbeta", "0.01"]), "beta_c").parse().unwrap();
    assert!((bc - 0.490549).abs() <= 1e-5, "{bc}");
}

#[test]
fn region_lower_root() {
    let out = stdout(&["region", "--beta", "0.6283", "--dbeta", "0.01"]);
    let lo: f64 = field(&out, "lower_root").parse().unwrap();
    assert!((lo - 0.3274).abs() <= 5e-4, "{lo}");
    assert_eq!(field(&out, "nonempty"), "true");
}

#[test]
fn identity_is_feasible() {
    let out = stdout(&["feasible", "--alpha", "0.37", "--beta", "0.37", "--dbeta", "0"]);
    assert_eq!(field(&out, "reliable"), "true");
}

#[test]
fn swap_point_is_feasible_and_others_are_not() {
    let on = stdout(&["feasible", "--alpha", "0.49", "--beta", "0.5", "--dbeta", "0.01"]);
    assert_eq!(field(&on, "reliable"), "true");
    let off = stdout(&["feasible", "--alpha", "0.3", "--beta", "0.5", "--dbeta", "0.01"]);
    assert_eq!(field(&off, "reliable"), "false");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["beta-c"],
        &["beta-c", "--dbeta", "x"],
        &["beta-c", "--dbeta", "0.01", "--tol", "-1"],
        &["fslacks", "--beta", "0.5", "--dbeta", "0.01", "--grid-points", "1"],
        &["feasible", "--alpha", "1.0", "--beta", "0.5", "--dbeta", "0.01"],
        &["sweep"],
    ] {
        assert_eq!(entransfer(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn headroom_exits_one() {
    let out = entransfer(&["feasible", "--alpha", "0.78", "--beta", "0.7", "--dbeta", "0.3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("headroom"));
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for preset in ["fig1", "fig2", "fig3", "fig4"] {
        let a = dir.path().join(format!("{preset}-a.csv"));
        let b = dir.path().join(format!("{preset}-b.csv"));
        for path in [&a, &b] {
            stdout(&["sweep", "--preset", preset, "--grid-points", "40", "--output", path.to_str().unwrap()]);
        }
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap(), "{preset}");
    }
}

fn preset_rows(preset: &str) -> (Vec<String>, Vec<Vec<String>>) {
    parse_csv(&stdout(&["sweep", "--preset", preset]))
}

#[test]
fn presets_reparse_without_row_loss() {
    let expectations: [(&str, &[&str], usize); 4] = [
        ("fig1", &["beta", "dbeta", "alpha", "dalpha", "f1", "f2", "f3", "f3x10", "regime", "status"], 3 * 401),
        ("fig2", &["dbeta", "beta_c", "status"], 200),
        ("fig3", &["beta", "dbeta", "beta_c", "lower_root", "upper_root", "nonempty", "width", "status"], 4 * 100),
        ("fig4", &["beta", "dbeta", "alpha", "dalpha", "p_max", "binding_term", "status"], 501),
    ];
    for (preset, columns, count) in expectations {
        let (header, rows) = preset_rows(preset);
        assert_eq!(header, columns, "{preset}");
        assert_eq!(rows.len(), count, "{preset}");
        for row in &rows {
            assert_eq!(row.len(), columns.len());
            assert_eq!(row.last().unwrap(), "ok", "{preset}: {row:?}");
        }
    }
}

#[test]
fn fig1_parameters_and_scaled_f3() {
    let (header, rows) = preset_rows("fig1");
    let col = |name: &str| header.iter().position(|h| h == name).unwrap();
    let mut betas: Vec<String> = rows.iter().map(|r| r[col("beta")].clone()).collect();
    betas.dedup();
    assert_eq!(betas, ["0.314159265359", "0.5", "0.628318530718"]);
    assert!(rows.iter().all(|r| r[col("dbeta")] == "0.01"));
    for r in &rows {
        let f3: f64 = r[col("f3")].parse().unwrap();
        let f3x10: f64 = r[col("f3x10")].parse().unwrap();
        assert!((10.0 * f3 - f3x10).abs() <= 1e-10);
    }
}

#[test]
fn fig4_peaks_once() {
    let (header, rows) = preset_rows("fig4");
    let p = header.iter().position(|h| h == "p_max").unwrap();
    let ones: Vec<_> = rows.iter().filter(|r| r[p] == "1").collect();
    assert_eq!(ones.len(), 1);
    let a = header.iter().position(|h| h == "alpha").unwrap();
    let alpha: f64 = ones[0][a].parse().unwrap();
    assert!((alpha - (std::f64::consts::PI / 10.0 - 0.01)).abs() < 1e-11);
}

#[test]
fn fig3_blocks_start_at_beta_c() {
    let (header, rows) = preset_rows("fig3");
    let col = |name: &str| header.iter().position(|h| h == name).unwrap();
    for block in rows.chunks(100) {
        assert_eq!(block[0][col("beta")], block[0][col("beta_c")]);
        assert_eq!(block[0][col("nonempty")], "false");
        assert!(block[1..].iter().all(|r| r[col("nonempty")] == "true"));
    }
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn config_file_and_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "run.toml", "alpha = 0.3\nbeta = 0.5\ndbeta = 0.01\n");
    let from_file = stdout(&["feasible", "--config", &cfg]);
    assert_eq!(field(&from_file, "alpha"), "0.3");
    let overridden = stdout(&["feasible", "--config", &cfg, "--alpha", "0.49"]);
    assert_eq!(field(&overridden, "alpha"), "0.49");
    assert_eq!(field(&overridden, "reliable"), "true");

    let bad = write(dir.path(), "bad.toml", "alpha = [1, 2]\n");
    assert_eq!(entransfer(&["feasible", "--config", &bad]).status.code(), Some(2));
}

#[test]
fn config_selects_preset_and_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fig2.json");
    let cfg = write(
        dir.path(),
        "fig2.toml",
        &format!("preset = \"fig2\"\ngrid_points = 5\nformat = \"json\"\noutput = {:?}\n", out.to_str().unwrap()),
    );
    stdout(&["sweep", "--config", &cfg]);
    let rows: serde_json::Value = serde_json::from_slice(&std::fs::read(out).unwrap()).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 5);
    assert!((rows[0]["beta_c"].as_f64().unwrap() - 0.486_059_121_503_910_5).abs() < 1e-9);
}

#[test]
fn pi_fraction_flag() {
    let out = stdout(&["region", "--pi-fraction", "--beta", "1/5", "--dbeta", "0.01/3.141592653589793"]);
    assert_eq!(field(&out, "beta"), "0.628318530718");
    assert_eq!(field(&out, "upper_root"), "0.618318530718");
}

#[test]
fn json_output() {
    let out = stdout(&["pmax", "--beta", "0.5", "--dbeta", "0.01", "--grid-points", "4", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().any(|r| r["p_max"] == 1.0));
    assert!(rows.iter().all(|r| r["status"] == "ok"));
}

#[test]
fn asymptotic_ledger_conserves() {
    let out = stdout(&["asymptotic", "--alpha", "0.3", "--beta", "0.5", "--dbeta", "0.05", "--n", "1000000"]);
    let err: f64 = field(&out, "conservation_error").parse().unwrap();
    assert!(err <= 1e-9);
    assert_eq!(field(&out, "n"), "1000000");
}

use std::process::{Command, Output};

use noncomm::spectra::{Spectrum, SpectrumEntryJson};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_noncomm")).args(args).env_remove("NONCOMM_CAP").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn spectrum_of_d10() {
    let o = run(&["spectrum", "dihedral:5"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("(2+2*sqrt(6))^1"), "{s}");
    assert!(s.contains("(2-2*sqrt(6))^1"));
    assert!(s.contains("(-1)^4"));
    assert!(s.contains("(0)^3"));
}

#[test]
fn abelian_input_is_null_graph() {
    let o = run(&["spectrum", "cyclic:6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("null graph"));
}

#[test]
fn gl2_spectrum_has_numeric_cubic_roots() {
    let o = run(&["spectrum", "gl2:3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows: Vec<SpectrumEntryJson> = serde_json::from_value(v["spectrum"].clone()).unwrap();
    assert_eq!(rows.iter().filter(|r| r.kind == "numeric_only").count(), 3);
    assert_eq!(rows.iter().map(|r| r.multiplicity).sum::<usize>(), 46);
}

#[test]
fn energies() {
    assert_eq!(stdout(&run(&["energy", "dihedral:4"])).trim(), "8");
    assert_eq!(stdout(&run(&["energy", "prod(dihedral:4,cyclic:2)"])).trim(), "16");
    let s = stdout(&run(&["laplacian", "dihedral:6"]));
    assert!(s.contains("(10)^3, (8)^3, (6)^3, (0)^1"), "{s}");
    assert!(s.contains("Laplacian energy: 108/5"));
}

#[test]
fn json_spectrum_round_trips_energy() {
    let o = run(&["spectrum", "dihedral:8", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows: Vec<SpectrumEntryJson> = serde_json::from_value(v["spectrum"].clone()).unwrap();
    let spec = Spectrum::from_json(&rows).unwrap();
    let printed = v["energy"]["exact"].as_str().unwrap();
    assert_eq!(spec.energy().exact.unwrap().to_string(), printed);
    assert_eq!(printed, "6+2*sqrt(57)");
}

#[test]
fn output_is_deterministic() {
    for args in [&["verify", "product-scaling", "--jobs", "3"][..], &["table", "table1", "--format", "csv"][..]] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}

#[test]
fn tables() {
    let o = run(&["table", "table1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("energy: 2+2*sqrt(7) [PASS]"));
    let o = run(&["table", "table2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("D16,table2/D16,Laplacian energy,304/7,304/7,PASS"), "{s}");
    assert!(s.contains("D10,table2/D10,Laplacian energy,70/3,60 (definition 70/3),DISCREPANCY"));
    // RFC-4180: fields with commas are quoted
    assert!(s.contains("\"(9)^5, (5)^3, (0)^1\""));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", "dihedral-energy", "--n", "3..12"]).status.code(), Some(0));
    let o = run(&["verify", "d8xd8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(-x)^45 (-x+8) (-x-4)^4 (x^2+8x-32)^4 (x^2-40x-128)"));
    assert_eq!(run(&["verify", "dihedral-le", "--n", "5"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "dihedral-le", "--n", "5", "--allow-documented"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "no-such-theorem"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "dihedral-spectrum", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["spectrum", "dihedral:"]).status.code(), Some(2));
    assert_eq!(run(&["spectrum", "dihedral:5", "--tol", "0"]).status.code(), Some(2));
    assert_eq!(run(&["spectrum", "dihedral:5", "--cap", "20000"]).status.code(), Some(2));
    assert_eq!(run(&["spectrum", "dihedral:50", "--cap", "50"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_noncomm")).args(["spectrum", "dihedral:50"]).env("NONCOMM_CAP", "50").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn export_graph() {
    let s = stdout(&run(&["export-graph", "dihedral:3"]));
    assert_eq!(s.lines().count(), 9);
    let v: serde_json::Value = serde_json::from_slice(&run(&["export-graph", "dihedral:4", "--format", "json"]).stdout).unwrap();
    assert_eq!(v["vertices"], 6);
    assert_eq!(v["edges"].as_array().unwrap().len(), 12);
}

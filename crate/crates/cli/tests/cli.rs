use std::process::{Command, Output};

use lpm_cli::output::{BasesOutput, CellOutput, DimOutput, EdgesOutput, EhrhartOutput, FacetRecord, HrepOutput, TreeOutput, VolumeOutput};
use lpm_cli::errata::ReconcileRecord;
use lpm_core::polytope::Relation;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn lpm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lpm")).args(args).output().expect("lpm runs")
}

fn stdout(args: &[&str]) -> String {
    let out = lpm(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Parses, re-serializes and re-parses, requiring identity.
fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(text: &str) -> T {
    let first: T = serde_json::from_str(text).unwrap();
    let again: T = serde_json::from_str(&serde_json::to_string(&first).unwrap()).unwrap();
    assert_eq!(first, again);
    first
}

fn region(verb: &str, lower: &str, upper: &str) -> String {
    stdout(&[verb, "--lower", lower, "--upper", upper])
}

#[test]
fn volume_of_the_square() {
    let out: VolumeOutput = round_trip(&region("volume", "EENN", "NNEE"));
    assert_eq!(out.volume_normalized, "4");
    let value: serde_json::Value = serde_json::from_str(&region("volume", "EENN", "NNEE")).unwrap();
    assert_eq!(value, serde_json::json!({"volume_normalized": "4"}));
}

#[test]
fn facets_of_the_staircase() {
    let records: Vec<FacetRecord> = round_trip(&region("facets", "EENN", "NENE"));
    assert_eq!(records.len(), 5);
    assert!(records.iter().all(|f| f.rel == Relation::Le && f.coeffs.len() == 4));
    let value: serde_json::Value = serde_json::from_str(&region("facets", "EENN", "NENE")).unwrap();
    let keys: Vec<&String> = value[0].as_object().unwrap().keys().collect();
    assert_eq!(keys, ["coeffs", "rel", "rhs", "tight_vertices"]);
    assert_eq!(value[0]["rel"], "<=");
}

#[test]
fn exit_codes() {
    let out = lpm(&["bases", "--lower", "NENE", "--upper", "EENN"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("DominanceViolation"));
    assert_eq!(lpm(&["bases", "--lower", "EXN", "--upper", "NEN"]).status.code(), Some(3));
    assert_eq!(lpm(&["bases", "--lower", "EN", "--upper", "NNE"]).status.code(), Some(3));
    assert_eq!(lpm(&["volume", "--lower", "EN", "--upper", "EN"]).status.code(), Some(3));
    assert_eq!(lpm(&["triangulate", "--lower", "EENN", "--upper", "NNEE"]).status.code(), Some(3));
    assert_eq!(lpm(&["bases", "--lower", "EEEEEENNNNN", "--upper", "NNNNNEEEEEE"]).status.code(), Some(4));
    assert_eq!(lpm(&["bases", "--lower", "EN", "--upper", "NE", "--max-size", "1"]).status.code(), Some(4));
    assert_eq!(lpm(&["bases"]).status.code(), Some(2));
    assert_eq!(lpm(&["bases", "--lower", "EN"]).status.code(), Some(2));
    assert_eq!(lpm(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(lpm(&["triangulate", "--k", "2", "--n", "4", "--lower", "EN"]).status.code(), Some(2));
    assert_eq!(lpm(&["triangulate", "--k", "4", "--n", "4"]).status.code(), Some(2));
    assert_eq!(lpm(&["catalan", "--n", "3", "--lower", "EN"]).status.code(), Some(2));
    assert_eq!(lpm(&["--help"]).status.code(), Some(0));
}

#[test]
fn region_from_file() {
    let dir = std::env::temp_dir().join(format!("lpm-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("square.json");
    std::fs::write(&path, r#"{"lower": "EENN", "upper": "NNEE"}"#).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&["volume", "--file", p]), region("volume", "EENN", "NNEE"));
    assert_eq!(lpm(&["volume", "--file", p, "--lower", "EN"]).status.code(), Some(2));
    std::fs::write(&path, "not json").unwrap();
    assert_eq!(lpm(&["volume", "--file", p]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn region_verbs_round_trip() {
    let bases: BasesOutput = round_trip(&region("bases", "EENN", "NNEE"));
    assert_eq!(bases.count, 6);
    assert_eq!(bases.bases, ["0011", "0101", "0110", "1001", "1010", "1100"]);

    let dim: DimOutput = round_trip(&region("dim", "EEENNN", "ENENEN"));
    assert_eq!(dim.components.len(), 3);

    let edges: EdgesOutput = round_trip(&region("edges", "EENN", "NENE"));
    assert_eq!(edges.edges.len(), 8);

    let hrep: HrepOutput = round_trip(&region("hrep", "EENN", "NNEE"));
    assert_eq!(hrep.equalities.len(), 1);
    assert_eq!(hrep.equalities[0].rel, Relation::Eq);

    let tree: TreeOutput = round_trip(&region("decompose", "EENN", "NNEE"));
    assert_eq!(tree.leaves(), [("RU", &[2][..]), ("UR", &[1][..])]);
    let TreeOutput::Split { split, .. } = &tree else { panic!("expected a split") };
    assert_eq!((split.x, split.j), (2, 1));

    let ehrhart: EhrhartOutput = round_trip(&stdout(&["ehrhart", "--lower", "EN", "--upper", "NE", "--t-max", "3"]));
    assert_eq!(ehrhart.coeffs, ["1/1", "1/1"]);
    assert_eq!(ehrhart.values.get(&3).map(String::as_str), Some("4"));
    let square: EhrhartOutput = round_trip(&region("ehrhart", "EENN", "NNEE"));
    assert_eq!(square.volume_normalized, "4");
    assert_eq!(square.values.get(&1).map(String::as_str), Some("6"));
}

#[test]
fn triangulations() {
    let cells: Vec<CellOutput> = round_trip(&stdout(&["triangulate", "--k", "2", "--n", "4"]));
    assert_eq!(cells.len(), 4);
    assert!(cells.iter().all(|c| c.det.abs() == 1 && c.vertices.len() == 4));
    assert!(cells.iter().flat_map(|c| &c.vertices).all(|v| v.len() == 4));

    let strip: Vec<CellOutput> = round_trip(&region("triangulate", "EENN", "NENE"));
    assert_eq!(strip.len(), 2);
}

#[test]
fn catalan_numbers() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["catalan", "--n", "3"])).unwrap();
    assert_eq!(v["catalan_number"], "5");
    assert_eq!(v["area_total"], "29/2");
    assert_eq!(v["edge_count"], "8");
    assert_eq!(v["facets"]["computed"], 10);
    let k: serde_json::Value = serde_json::from_str(&stdout(&["catalan", "--n", "3", "--r", "2"])).unwrap();
    assert_eq!(k["facets"]["claimed"], k["facets"]["computed"]);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["edges", "--lower", "EEENNN", "--upper", "NNNEEE"][..],
        &["facets", "--lower", "EEENNN", "--upper", "NENNEE", "--format", "csv"],
        &["verify", "facets", "--max-size", "4"],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}

#[test]
fn formats() {
    let csv = stdout(&["facets", "--lower", "EENN", "--upper", "NENE", "--format", "csv"]);
    assert_eq!(csv.lines().next(), Some("coeffs,rel,rhs,tight_vertices"));
    assert_eq!(csv.lines().count(), 6);
    let text = stdout(&["volume", "--lower", "EENN", "--upper", "NNEE", "--format", "text"]);
    assert_eq!(text, "4\n");
}

#[test]
fn ehrhart_formula_table() {
    let csv = stdout(&["verify", "ehrhart-formula", "--max-size", "3", "--t-max", "2"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("region,t,formula_value,true_value,match"));
    assert!(lines.any(|l| l.starts_with("EN NE,1,")));
    let rows: Vec<ReconcileRecord> =
        round_trip(&stdout(&["verify", "ehrhart-formula", "--max-size", "3", "--t-max", "2", "--format", "json"]));
    let segment = rows.iter().find(|r| r.region == "EN NE" && r.t == 1).unwrap();
    assert_eq!(segment.true_value, "2");
}

#[test]
fn verify_facets_passes() {
    let out = lpm(&["verify", "facets", "--max-size", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: lpm_cli::VerifyReport = round_trip(&String::from_utf8(out.stdout).unwrap());
    assert!(report.passed);
    assert!(report.verdict("kcatalan-facets-r1-n3").is_some());
}

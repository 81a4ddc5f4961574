use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use hampair::io::{instance_from_json, solution_from_json, AnySolution, PairJson, SolutionJson};
use hampair::Metric;
use serde_json::Value;

fn hampair(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hampair")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn infeasible_construct_exits_2() {
    let o = hampair(&["construct", "--problem", "paths", "--n", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("no pair exists for n <= 5"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["bogus"],
        vec!["--jobs", "0", "sweep", "--problem", "paths", "--to", "10"],
        vec!["oracle", "--problem", "paths", "--family", "line"],
        vec!["oracle", "--problem", "paths", "--family", "line", "--n", "6", "--instance", "x.json"],
        vec!["sweep", "--problem", "paths", "--to", "10", "--format", "dot"],
    ] {
        let o = hampair(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn malformed_instance_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.json");
    fs::write(&f, "{\n  \"kind\": \"line\",\n  \"coords\": [1, 2,, 3]\n}\n").unwrap();
    let o = hampair(&["oracle", "--problem", "paths", "--instance", path_str(&f)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3, column"), "{}", stderr(&o));
}

#[test]
fn construct_json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("pair.json");
    let o = hampair(&["construct", "--problem", "paths", "--n", "8", "--json", "--out", path_str(&out)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    let inst = instance_from_json(&v["instance"].to_string()).unwrap();
    assert_eq!(inst.len(), 8);
    let pair: PairJson = serde_json::from_value(v["pair"].clone()).unwrap();
    assert_eq!(pair.objective, 13.0);
    for s in [&pair.first, &pair.second] {
        let again = solution_from_json(&serde_json::to_string(s).unwrap()).unwrap();
        assert!(matches!(again.validate(&inst).unwrap(), AnySolution::Path(_)));
    }
    assert_eq!(v["report"]["exact"], serde_json::json!([13, 7]));

    // export re-validates the emitted costs and re-emits the same solutions
    let o = hampair(&["export", "--instance", path_str(&out), "--solution", path_str(&out)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let sols: Vec<SolutionJson> = serde_json::from_value(v["solutions"].clone()).unwrap();
    assert_eq!(sols, vec![pair.first.clone(), pair.second.clone()]);
}

#[test]
fn export_rejects_wrong_costs() {
    let dir = tempfile::tempdir().unwrap();
    let sol = dir.path().join("sol.json");
    fs::write(&sol, r#"{"kind":"path","order":[1,3,2,4],"cost":4}"#).unwrap();
    let o = hampair(&["export", "--family", "line", "--n", "4", "--solution", path_str(&sol)]);
    assert_eq!(o.status.code(), Some(2));
    fs::write(&sol, r#"{"kind":"path","order":[1,3,2,4],"cost":5}"#).unwrap();
    let o = hampair(&["export", "--family", "line", "--n", "4", "--solution", path_str(&sol)]);
    assert!(o.status.success(), "{}", stderr(&o));
}

/// Edges of a DOT graph as (u, v, style) triples.
fn dot_edges(dot: &str) -> Vec<(usize, usize, String)> {
    dot.lines()
        .filter(|l| l.contains(" -- "))
        .map(|l| {
            let l = l.trim();
            let (head, attrs) = l.split_once('[').unwrap();
            assert!(attrs.ends_with("];"), "{l}");
            let (a, b) = head.trim().split_once(" -- ").unwrap();
            let style = if attrs.contains("style=solid") { "solid" } else { "dashed" };
            (a.parse().unwrap(), b.parse().unwrap(), style.to_string())
        })
        .collect()
}

#[test]
fn dot_output_matches_the_pair() {
    for problem in ["paths", "tours"] {
        let o = hampair(&["construct", "--problem", problem, "--n", "9", "--format", "dot"]);
        assert!(o.status.success());
        let dot = stdout(&o);
        assert!(dot.starts_with("graph hampair {"));
        assert!(dot.trim_end().ends_with('}'));
        assert_eq!(dot.matches('{').count(), dot.matches('}').count());
        assert_eq!(dot.matches('"').count() % 2, 0);

        let j = hampair(&["construct", "--problem", problem, "--n", "9", "--json"]);
        let v: Value = serde_json::from_slice(&j.stdout).unwrap();
        let pair: PairJson = serde_json::from_value(v["pair"].clone()).unwrap();
        let edges_of = |s: &SolutionJson| -> BTreeSet<(usize, usize)> {
            let o = &s.order;
            let mut e: Vec<(usize, usize)> = o.windows(2).map(|w| (w[0], w[1])).collect();
            if problem == "tours" {
                e.push((o[o.len() - 1], o[0]));
            }
            e.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect()
        };
        let drawn = dot_edges(&dot);
        let solid: BTreeSet<_> = drawn.iter().filter(|e| e.2 == "solid").map(|e| (e.0.min(e.1), e.0.max(e.1))).collect();
        let dashed: BTreeSet<_> = drawn.iter().filter(|e| e.2 == "dashed").map(|e| (e.0.min(e.1), e.0.max(e.1))).collect();
        assert_eq!(solid, edges_of(&pair.first));
        assert_eq!(dashed, edges_of(&pair.second));
        assert_eq!(drawn.len(), solid.len() + dashed.len());
    }
}

#[test]
fn sweep_csv_peaks_at_eight() {
    let o = hampair(&["sweep", "--problem", "paths", "--to", "50"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,objective,opt,ratio,ratio_float,running_max"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 45);
    let best = rows
        .iter()
        .max_by(|a, b| a[4].parse::<f64>().unwrap().total_cmp(&b[4].parse::<f64>().unwrap()))
        .unwrap();
    assert_eq!((best[0], best[3]), ("8", "13/7"));
    assert_eq!(rows.last().unwrap()[5], "13/7");
}

#[test]
fn verify_claims_reports_every_check() {
    let o = hampair(&["verify-claims"]);
    let text = stdout(&o);
    assert!(text.lines().all(|l| l.starts_with("PASS") || l.starts_with("FAIL") || l.starts_with("      e.g.") || l.ends_with("checks passed")));
    assert!(text.contains("PASS  paths: no disjoint pair, n=5"));
    let failed = text.lines().any(|l| l.starts_with("FAIL"));
    assert_eq!(o.status.code(), Some(if failed { 1 } else { 0 }));

    let o = hampair(&["--json", "verify-claims"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], Value::Bool(!failed));
}

#[test]
fn witness_meets_targets() {
    let o = hampair(&["witness", "--problem", "tsp2", "--eps", "0.25,0.5"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 2);
}

#[test]
fn solve_with_a_supplied_baseline() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().join("tour.json");
    fs::write(&base, r#"{"kind":"tour","order":[1,3,5,7,2,4,6]}"#).unwrap();
    let o = hampair(&["--json", "solve", "--problem", "tsp2", "--family", "circle", "--n", "7", "--baseline", path_str(&base)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["details"]["baseline_cost"], serde_json::json!(14.0));
    assert_eq!(v["pair"]["objective"], serde_json::json!(21.0));

    let o = hampair(&["solve", "--problem", "shp2", "--family", "circle", "--n", "7", "--baseline", path_str(&base)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oracle_writes_to_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.txt");
    let o = hampair(&["--jobs", "1", "oracle", "--problem", "paths", "--family", "line", "--n", "7", "--out", path_str(&out)]);
    assert!(o.status.success());
    assert!(stdout(&o).is_empty());
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.contains("min-max cost: 10"), "{text}");
}

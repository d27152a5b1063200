use std::process::Command;

use hesse_lab::{plot_pencil, report_json, run, select, HarnessConfig, LabError, PlotConfig, Report, Status};

fn config(filters: &[&str]) -> HarnessConfig {
    HarnessConfig { filters: filters.iter().map(|s| s.to_string()).collect(), timing: false, ..HarnessConfig::default() }
}

#[test]
fn norm12_check_passes_with_empty_list() {
    let r = run(&config(&["lattice.a2m3.norm12"])).unwrap();
    assert_eq!(r.results.len(), 1);
    assert_eq!(r.results[0].status, Status::Pass);
    assert_eq!(r.results[0].witness["vectors"], serde_json::json!([]));
}

#[test]
fn unknown_filter_is_an_error() {
    assert!(matches!(run(&config(&["nosuch.check"])), Err(LabError::UnknownCheck(f)) if f == "nosuch.check"));
    // one good filter does not excuse a bad one
    assert!(run(&config(&["lattice.*", "lattice.nope"])).is_err());
    assert!(matches!(run(&config(&["["])), Err(LabError::BadFilter(..))));
}

#[test]
fn empty_filter_selects_everything_in_order() {
    let all = select(&HarnessConfig::default()).unwrap();
    let ids: Vec<&str> = all.iter().map(|c| c.id.as_str()).collect();
    assert!(ids.len() > 100);
    assert_eq!(ids[0], "hesse.configuration.incidence");
    let some = select(&config(&["lattice.*", "hesse.identity.a"])).unwrap();
    let pos: Vec<usize> = some.iter().map(|c| ids.iter().position(|i| *i == c.id).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn low_precision_is_rejected() {
    let c = HarnessConfig { precision_bits: 32, ..config(&["lattice.y.det"]) };
    assert!(matches!(run(&c), Err(LabError::Config(_))));
}

#[test]
fn json_round_trip_and_determinism() {
    let c = config(&["hesse.identity.*", "lattice.*", "ellaw.two_torsion.l_1.p4", "surface.identity.k"]);
    let a = run(&c).unwrap();
    let b = run(&c).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    let back = Report::from_json(&a.to_json()).unwrap();
    assert_eq!(back, a);
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("r.json");
    report_json(&a, &p).unwrap();
    assert_eq!(std::fs::read_to_string(&p).unwrap(), a.to_json());
    // key order is part of the format
    let text = a.to_json();
    let keys = ["\"check_id\"", "\"status\"", "\"witness\"", "\"paper_ref\"", "\"runtime_ms\""];
    let at: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(at.windows(2).all(|w| w[0] < w[1]));
    assert!(text.find("\"version\"").unwrap() < text.find("\"config\"").unwrap());
}

#[test]
fn failures_carry_witnesses() {
    let r = run(&config(&["surface.identity.k", "literal.*"])).unwrap();
    assert_eq!(r.failures(), 2);
    assert_eq!(r.exit_code(), 1);
    for x in &r.results {
        assert!(x.witness.is_object() && !x.witness.as_object().unwrap().is_empty());
    }
    // the surviving monomial of the nonzero difference
    assert_eq!(r.results[0].witness["witness"]["kind"], "surviving");
    let ok = run(&config(&["lattice.*"])).unwrap();
    assert_eq!(ok.exit_code(), 0);
}

#[test]
fn proportionality_witness_is_element_text() {
    let r = run(&config(&["hesse.identity.a"])).unwrap();
    assert_eq!(r.results[0].witness["witness"]["values"]["scalar"], "-2");
}

#[test]
fn numeric_reports_record_precision_and_tolerance() {
    let c = HarnessConfig { precision_bits: 96, lambdas: vec!["3".into()], ..config(&["ellaw.nine_torsion.l_3.b1", "ellaw.tangent_sextic.l_3"]) };
    let r = run(&c).unwrap();
    assert_eq!(r.results.len(), 2);
    for x in &r.results {
        assert_eq!(x.status, Status::Pass, "{}", x.witness);
        assert_eq!(x.witness["precision"], 96);
        assert!(x.witness["tolerance"].as_f64().unwrap() > 1e-25);
    }
}

#[test]
fn lambda_labels_in_ids() {
    let c = HarnessConfig { lambdas: vec!["-3/2".into()], ..config(&["ellaw.two_torsion.l_m3_2.p0"]) };
    assert_eq!(run(&c).unwrap().results.len(), 1);
}

fn count(s: &str, pat: &str) -> usize {
    s.matches(pat).count()
}

#[test]
fn svg_contents() {
    let cfg = PlotConfig { lambdas: vec!["0".into(), "1".into(), "-3".into()], ..Default::default() };
    let svg = plot_pencil(&cfg).unwrap();
    assert_eq!(count(&svg, "class=\"curve\""), 3);
    assert_eq!(count(&svg, "class=\"inflection-line\""), 12);
    assert_eq!(count(&svg, "class=\"base-point"), 3);
    for p in ["p0", "p3", "p6"] {
        assert!(svg.contains(&format!("data-label=\"{p}\"")));
    }
    assert_eq!(svg, plot_pencil(&cfg).unwrap());

    let empty = plot_pencil(&PlotConfig::default()).unwrap();
    assert_eq!(count(&empty, "class=\"curve\""), 0);
    assert_eq!(count(&empty, "class=\"inflection-line\""), 12);
    assert_eq!(count(&empty, "class=\"base-point"), 3);

    let inf = plot_pencil(&PlotConfig { lambdas: vec!["inf".into()], ..Default::default() }).unwrap();
    assert_eq!(count(&inf, "class=\"line"), 3);
}

#[test]
fn fermat_curve_passes_near_its_real_points() {
    // x³ + y³ + 1 = 0 contains (0, −1) and (−1, 0); the contour must reach both
    let segs = hesse_lab::plot::marching_squares(|x, y| x * x * x + y * y * y + 1.0, [-3.0, 3.0, -3.0, 3.0], 300);
    for (px, py) in [(0.0, -1.0), (-1.0, 0.0)] {
        let near = segs.iter().any(|(a, _)| ((a.0 - px) as f64).hypot(a.1 - py) < 0.03);
        assert!(near);
    }
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hesse-lab"))
}

#[test]
fn cli_exit_codes_and_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let ok = bin().args(["check", "lattice.*", "--no-timing"]).output().unwrap().status;
    assert_eq!(ok.code(), Some(0));
    let bad = bin().args(["check", "surface.identity.k", "--no-timing"]).output().unwrap().status;
    assert_eq!(bad.code(), Some(1));
    let unknown = bin().args(["check", "nothing.here"]).output().unwrap().status;
    assert_eq!(unknown.code(), Some(2));

    // the output path is part of the config, so both runs write to the same file
    let j1 = dir.path().join("a.json");
    let mut bytes = vec![];
    for _ in 0..2 {
        let s = bin().args(["check", "hesse.identity.*", "--no-timing", "--lambda", "1", "-2", "--json"]).arg(&j1).output().unwrap().status;
        assert_eq!(s.code(), Some(0));
        bytes.push(std::fs::read(&j1).unwrap());
    }
    assert_eq!(bytes[0], bytes[1]);
    let r = Report::from_json(&std::fs::read_to_string(&j1).unwrap()).unwrap();
    assert_eq!(r.config.lambdas, vec!["1", "-2"]);

    let env = bin().args(["check", "lattice.y.det", "--no-timing", "--json"]).arg(&j1).env("HESSE_LAB_PRECISION", "200").output().unwrap().status;
    assert_eq!(env.code(), Some(0));
    let r = Report::from_json(&std::fs::read_to_string(&j1).unwrap()).unwrap();
    assert_eq!(r.config.precision_bits, 200);

    let svg = dir.path().join("p.svg");
    let s = bin().args(["plot-pencil", "--lambda", "0", "1", "-3", "--window", "-2,2,-2,2", "--out"]).arg(&svg).output().unwrap().status;
    assert_eq!(s.code(), Some(0));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(count(&text, "class=\"curve\""), 3);

    let list = bin().arg("list").output().unwrap();
    let out = String::from_utf8(list.stdout).unwrap();
    assert!(out.lines().any(|l| l.starts_with("lattice.a2m3.norm12")));
}

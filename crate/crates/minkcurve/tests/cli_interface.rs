//! End-to-end checks of the command-line surface: determinism of emitted
//! files, the curvature -> reconstruct round trip through CSV, exit codes,
//! and config-file precedence.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_minkcurve"))
}

fn scratch_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!(
        "minkcurve-test-{}-{}",
        tag,
        std::process::id()
    ));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn identical_invocations_are_byte_identical() {
    let run = || {
        let out = bin()
            .args(["curvature", "--norm", "lp:3", "--curve", "ellipse:2,1"])
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run(), run());

    let probes = || {
        let out = bin()
            .args(["analyze", "probes", "--norm", "lp:4"])
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(probes(), probes());
}

#[test]
fn curvature_csv_of_euclidean_circle_is_all_ones() {
    let out = bin()
        .args(["curvature", "--norm", "euclidean", "--curve", "circle:1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "s,k_e,k_m,k_n,k_c,k_l");
    for line in lines.take(32) {
        let cols: Vec<f64> = line.split(',').map(|v| v.parse().unwrap()).collect();
        for &k in &cols[1..] {
            assert!((k - 1.0).abs() < 1e-9, "{line}");
        }
    }
}

#[test]
fn reconstruct_consumes_curvature_csv() {
    let dir = scratch_dir("roundtrip");
    let csv_path = dir.join("km.csv");
    // curvature of the unit-speed l3 circle, exported by the CLI
    let out = bin()
        .args([
            "curvature",
            "--norm",
            "lp:3",
            "--curve",
            "ellipse:2,1",
            "--out",
            csv_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    // reduce to (s, k_m) columns for the reconstruct input
    let text = std::fs::read_to_string(&csv_path).unwrap();
    let mut sk = String::new();
    for line in text.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        sk.push_str(&format!("{},{}\n", cols[0], cols[2]));
    }
    let sk_path = dir.join("sk.csv");
    std::fs::write(&sk_path, sk).unwrap();

    let curve_path = dir.join("curve.json");
    let out = bin()
        .args([
            "reconstruct",
            "--norm",
            "lp:3",
            "--type",
            "minkowski",
            "--k",
            sk_path.to_str().unwrap(),
            "--start",
            "2,0",
            "--dir",
            "1.5707963267948966",
            "--out",
            curve_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let spec: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&curve_path).unwrap()).unwrap();
    let points = spec["points"].as_array().unwrap();
    // the reconstruction must reproduce the source ellipse: every point on
    // |x/2|^2 + |y|^2 = 1 within tolerance
    for p in points.iter().step_by(37) {
        let x = p[0].as_f64().unwrap();
        let y = p[1].as_f64().unwrap();
        let level = (x / 2.0) * (x / 2.0) + y * y;
        assert!((level - 1.0).abs() < 1e-3, "point ({x}, {y}) level {level}");
    }
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn evolute_svg_has_fixed_viewport_and_version_comment() {
    let dir = scratch_dir("svg");
    let svg_path = dir.join("evo.svg");
    let out = bin()
        .args([
            "evolute",
            "--norm",
            "lp:3",
            "--curve",
            "lq-circle",
            "--out",
            svg_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("width=\"800\" height=\"800\""));
    assert!(svg.contains("<!-- minkcurve"));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn exit_codes_and_machine_parsable_errors() {
    // usage error: exit 2
    let out = bin().args(["no-such-command"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    // module error: exit 1 with a single machine-parsable stderr line
    let out = bin()
        .args(["analyze", "probes", "--norm", "lp:1.5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.starts_with("minkcurve-error kind=InvalidProfile"), "{err}");

    // evolute of a segment: vanishing curvature
    let out = bin()
        .args([
            "evolute",
            "--norm",
            "euclidean",
            "--curve",
            "segment:0,0,1,1",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("kind=VanishingCurvature"), "{err}");
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let dir = scratch_dir("config");
    let cfg_path = dir.join("minkcurve.toml");
    std::fs::write(&cfg_path, "norm = lp:3\ncurve = circle:1\n").unwrap();

    // config provides both norm and curve
    let out = bin()
        .args(["frenet-check", "--config", cfg_path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    // flags take precedence: an invalid config curve is overridden
    std::fs::write(&cfg_path, "norm = lp:3\ncurve = nonsense\n").unwrap();
    let out = bin()
        .args([
            "frenet-check",
            "--config",
            cfg_path.to_str().unwrap(),
            "--curve",
            "circle:1",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn analyze_reports_parse_as_json() {
    for args in [
        vec!["analyze", "probes", "--norm", "lp:3"],
        vec!["analyze", "width", "--norm", "euclidean", "--curve", "ellipse:2,1"],
        vec!["analyze", "inclusion", "--norm", "lp:3", "--curve", "ellipse:2,1"],
        vec![
            "analyze",
            "four-vertex",
            "--norm",
            "lp:3",
            "--curve",
            "harmonic:1;0.02,0.01;0.05,0.0",
        ],
        vec!["duality-check", "--norm", "lp:3", "--curve", "ellipse:2,1"],
        vec!["norm", "show", "--norm", "lp:4"],
    ] {
        let out = bin().args(&args).output().unwrap();
        assert!(
            out.status.success(),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let text = String::from_utf8(out.stdout).unwrap();
        serde_json::from_str::<serde_json::Value>(&text)
            .unwrap_or_else(|e| panic!("{args:?} produced invalid JSON: {e}\n{text}"));
    }
}

#[test]
fn curve_json_files_are_accepted_as_input() {
    let dir = scratch_dir("jsonin");
    let path = dir.join("curve.json");
    // a sampled ellipse as input
    let pts: Vec<[f64; 2]> = (0..256)
        .map(|i| {
            let t = 2.0 * std::f64::consts::PI * i as f64 / 256.0;
            [2.0 * t.cos(), t.sin()]
        })
        .collect();
    let spec = serde_json::json!({"closed": true, "points": pts});
    std::fs::write(&path, serde_json::to_string(&spec).unwrap()).unwrap();
    let out = bin()
        .args(["curvature", "--norm", "lp:3", "--curve", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let _ = std::fs::remove_dir_all(&dir);
}

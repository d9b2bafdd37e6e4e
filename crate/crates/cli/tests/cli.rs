use std::path::Path;
use std::process::{Command, Output};

use bidom::BivariateSample;
use bidom_cli::args::{Cli, Command as Sub};
use bidom_cli::report::{JointDecisionDoc, SimulationReport, StatisticReport, TestReport};
use bidom_cli::statistic_report_for;
use clap::Parser;

fn bidom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bidom"))
        .args(args)
        .env_remove("BIDOM_THREADS")
        .output()
        .unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn samples(dir: &Path) -> (String, String) {
    let a = write(dir, "a.csv", "1,5\n2,3\n4,4\n3,1\n5,2\n");
    let b = write(dir, "b.csv", "6,6\n3,5\n5,4\n4,7\n");
    (a, b)
}

#[test]
fn test_report_round_trips_and_is_consistent() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = samples(dir.path());
    for (order, class, names) in [
        ("first", "submodular", vec!["delta_F"]),
        (
            "first",
            "supermodular",
            vec!["delta_K", "delta_FX", "delta_FY"],
        ),
        (
            "second",
            "submodular",
            vec!["delta_H", "delta_HX", "delta_HY"],
        ),
        (
            "second",
            "supermodular",
            vec!["delta_L", "delta_HX", "delta_HY"],
        ),
    ] {
        let out = bidom(&[
            "test",
            "--a",
            &a,
            "--b",
            &b,
            "--order",
            order,
            "--class",
            class,
            "--replicates",
            "99",
            "--adjustment",
            "bonferroni",
        ]);
        assert!(out.status.success());
        let report: TestReport = serde_json::from_slice(&out.stdout).unwrap();
        let got: Vec<&str> = report.conditions.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(got, names);
        assert_eq!(
            report.joint_decision,
            JointDecisionDoc::from_conditions(&report.conditions)
        );
        assert_eq!(report.sample_sizes.a, 5);
        assert_eq!((report.rescale.x_min, report.rescale.x_max), (1.0, 6.0));
        let k = names.len() as f64;
        for c in &report.conditions {
            assert!((c.level - 0.05 / k).abs() < 1e-15);
            assert!(c.p_value > 0.0 && c.p_value <= 1.0);
            assert!(c.replicates.is_none());
            let reject = c.value > c.critical_value;
            assert_eq!(reject, c.decision == bidom_cli::report::DecisionDoc::Reject);
        }
        let again = serde_json::to_value(&report).unwrap();
        assert_eq!(
            again,
            serde_json::from_slice::<serde_json::Value>(&out.stdout).unwrap()
        );
    }
}

#[test]
fn directions_swap_roles() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = samples(dir.path());
    let run = |direction: &str| -> TestReport {
        let out = bidom(&[
            "test",
            "--a",
            &a,
            "--b",
            &b,
            "--direction",
            direction,
            "--replicates",
            "49",
        ]);
        serde_json::from_slice(&out.stdout).unwrap()
    };
    let ab = run("a-dominates-b");
    let ba = run("b_dominates_a");
    assert_eq!(ba.hypothesis.direction, "b_dominates_a");
    let stat = |a: &str, b: &str| -> StatisticReport {
        let out = bidom(&["statistic", "--a", a, "--b", b]);
        serde_json::from_slice(&out.stdout).unwrap()
    };
    assert_eq!(ab.conditions[0].value, stat(&a, &b).value);
    assert_eq!(ba.conditions[0].value, stat(&b, &a).value);
}

#[test]
fn text_format_and_simulate() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = samples(dir.path());
    let out = bidom(&[
        "test",
        "--a",
        &a,
        "--b",
        &b,
        "--replicates",
        "19",
        "--format",
        "text",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("delta_F") && text.contains("joint decision"));

    let out = bidom(&[
        "simulate",
        "--gen-a",
        "independent_uniform",
        "--gen-b",
        "scaled_uniform:0.5",
        "--m",
        "30",
        "--n",
        "30",
        "--trials",
        "4",
        "--replicates",
        "19",
        "--direction",
        "b-dominates-a",
    ]);
    assert!(out.status.success());
    let sim: SimulationReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(sim.trials, 4);
    assert_eq!(sim.generator_b, "scaled_uniform:0.5");
    assert_eq!(sim.rejections, 4);
}

#[test]
fn failures_exit_nonzero_with_message() {
    let dir = tempfile::tempdir().unwrap();
    let (a, _) = samples(dir.path());
    let bad = write(dir.path(), "bad.csv", "0.1,0.2\n0.3,oops\n");
    let flat = write(dir.path(), "flat.csv", "1,5\n2,5\n");
    let cases: Vec<Vec<&str>> = vec![
        vec!["test", "--a", &a, "--b", &bad],
        vec!["test", "--a", &a, "--b", "/missing.csv"],
        vec!["statistic", "--a", &flat, "--b", &flat],
        vec!["test", "--a", &a, "--b", &a, "--class", "marginal-x"],
        vec!["test", "--a", &a, "--b", &a, "--alpha", "1.5"],
        vec!["test", "--a", &a, "--b", &a, "--rescale", "identity"],
        vec![
            "simulate",
            "--gen-a",
            "independent_uniform",
            "--gen-b",
            "nope",
            "--trials",
            "1",
        ],
        vec![
            "simulate",
            "--gen-a",
            "independent_uniform",
            "--gen-b",
            "independent_uniform",
            "--trials",
            "0",
        ],
    ];
    for args in cases {
        let out = bidom(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert!(err.starts_with("error: "), "{args:?}: {err}");
        assert!(out.stdout.is_empty());
    }
    let err = String::from_utf8(bidom(&["test", "--a", &a, "--b", &bad]).stderr).unwrap();
    assert!(err.contains("row 2") || err.contains("line 2"), "{err}");
    // unknown flags are rejected by the parser
    assert_ne!(bidom(&["test", "--frobnicate"]).status.code(), Some(0));
}

#[test]
fn single_point_statistic_example() {
    let cli = Cli::try_parse_from([
        "bidom",
        "statistic",
        "--a",
        "unused",
        "--b",
        "unused",
        "--order",
        "second",
        "--class",
        "supermodular",
    ])
    .unwrap();
    let Sub::Statistic(args) = cli.command else {
        panic!("parsed the wrong subcommand")
    };
    let a = BivariateSample::new(vec![(0.0, 0.0)]).unwrap();
    let b = BivariateSample::new(vec![(0.5, 0.5)]).unwrap();
    let r = statistic_report_for(&args, &a, &b).unwrap();
    assert_eq!(r.statistic, "gamma");
    assert!((r.raw_sup - 0.25).abs() < 1e-15);
    assert!((r.value - 0.25 * 0.5f64.sqrt()).abs() < 1e-15);
    assert_eq!(r.argmax, vec![0.5, 0.5]);
}

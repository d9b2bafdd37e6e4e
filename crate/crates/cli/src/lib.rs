//! Command-line front end for the `bidom` dominance tests.
//!
//! Each subcommand has a library entry point returning its report, so the
//! binary only parses flags and prints.

pub mod args;
pub mod report;

use std::path::Path;

use anyhow::{bail, Context, Result};
use bidom::{
    compute_statistic, load_sample, rescale, run_simulation, run_test, BivariateSample,
    BootstrapConfig, GeneratorFamily, Hypothesis, InputFormat, RawSample, RescaleTransform,
    SimulationConfig, StatisticKind,
};
use serde::Serialize;

use args::{
    BootstrapArgs, Cli, Command, FormatArg, InputArgs, SimulateArgs, StatisticArgs, TestArgs,
};
use report::{SimulationReport, StatisticReport, TestReport};

type Samples = (
    BivariateSample<f64>,
    BivariateSample<f64>,
    RescaleTransform<f64>,
);

fn read(path: &Path, input: &InputArgs) -> Result<RawSample<f64>> {
    let format = input
        .input_format
        .map(InputFormat::from)
        .unwrap_or_else(|| InputFormat::from_path(path));
    load_sample(path, format, input.header).with_context(|| format!("loading {}", path.display()))
}

pub fn load_inputs(input: &InputArgs) -> Result<Samples> {
    let a = read(&input.a, input)?;
    let b = read(&input.b, input)?;
    Ok(rescale(&a, &b, input.rescale.into())?)
}

fn bootstrap_config(b: &BootstrapArgs) -> BootstrapConfig {
    BootstrapConfig {
        replicates: b.replicates,
        seed: b.seed,
        beta: b.alpha,
        workers: b.workers,
    }
}

pub fn test_report(args: &TestArgs) -> Result<TestReport> {
    let (a, b, _) = load_inputs(&args.input)?;
    test_report_for(args, &a, &b)
}

/// Runs the `test` command on samples already on the unit square.
pub fn test_report_for(
    args: &TestArgs,
    a: &BivariateSample<f64>,
    b: &BivariateSample<f64>,
) -> Result<TestReport> {
    let hyp = Hypothesis::new(args.order.into(), args.class.into(), args.direction.into())?;
    let cfg = bootstrap_config(&args.bootstrap);
    let report = run_test(hyp, a, b, &cfg, args.bootstrap.adjustment.into())?;
    Ok(TestReport::new(&report, args.include_replicates))
}

pub fn statistic_report(args: &StatisticArgs) -> Result<StatisticReport> {
    let (a, b, _) = load_inputs(&args.input)?;
    statistic_report_for(args, &a, &b)
}

pub fn statistic_report_for(
    args: &StatisticArgs,
    a: &BivariateSample<f64>,
    b: &BivariateSample<f64>,
) -> Result<StatisticReport> {
    let kind = StatisticKind::new(args.order.into(), args.class.into());
    let s = compute_statistic(kind, a, b)?;
    Ok(StatisticReport::new(
        &s,
        (a.size(), b.size()),
        a.transform(),
    ))
}

pub fn simulation_report(args: &SimulateArgs) -> Result<SimulationReport> {
    if args.trials == 0 {
        bail!("--trials must be at least 1");
    }
    let family_a: GeneratorFamily = args.gen_a.parse()?;
    let family_b: GeneratorFamily = args.gen_b.parse()?;
    let hypothesis = Hypothesis::new(args.order.into(), args.class.into(), args.direction.into())?;
    let cfg = SimulationConfig {
        family_a,
        family_b,
        m: args.m,
        n: args.n,
        trials: args.trials,
        hypothesis,
        bootstrap: bootstrap_config(&args.bootstrap),
        adjustment: args.bootstrap.adjustment.into(),
    };
    let summary = run_simulation(&cfg)?;
    Ok(SimulationReport::new(
        &cfg,
        &hypothesis.conditions(),
        &summary,
    ))
}

fn render<R: Serialize>(
    report: &R,
    format: FormatArg,
    text: impl FnOnce(&R) -> String,
) -> Result<String> {
    Ok(match format {
        FormatArg::Json => serde_json::to_string_pretty(report)? + "\n",
        FormatArg::Text => text(report),
    })
}

/// Executes a parsed command line and returns what should be printed.
pub fn execute(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Test(a) => render(&test_report(a)?, a.format, TestReport::to_text),
        Command::Statistic(a) => render(&statistic_report(a)?, a.format, StatisticReport::to_text),
        Command::Simulate(a) => render(&simulation_report(a)?, a.format, SimulationReport::to_text),
    }
}

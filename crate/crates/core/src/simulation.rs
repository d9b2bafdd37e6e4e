//! Monte Carlo size and power of the dominance tests on synthetic data.

use rand::RngCore;
use rayon::prelude::*;

use crate::bootstrap::{replicate_rng, BootstrapConfig, Decision};
use crate::dominance::{run_test, Adjustment, Hypothesis, JointDecision};
use crate::error::{Error, Result};
use crate::synth::{generate, GeneratorFamily, GeneratorSpec};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimulationConfig {
    pub family_a: GeneratorFamily,
    pub family_b: GeneratorFamily,
    pub m: usize,
    pub n: usize,
    pub trials: usize,
    pub hypothesis: Hypothesis,
    /// Replicates, level and workers for every trial; `seed` is the master seed.
    pub bootstrap: BootstrapConfig,
    pub adjustment: Adjustment,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimulationSummary {
    pub trials: usize,
    pub rejections: usize,
    pub frequency: f64,
    /// Binomial standard error `sqrt(p (1 - p) / R)`.
    pub std_error: f64,
    /// Rejections per sub-condition, in condition order.
    pub condition_rejections: Vec<usize>,
}

/// Seeds for sample `a`, sample `b` and the bootstrap of trial `trial`.
pub fn trial_seeds(master: u64, trial: usize) -> [u64; 3] {
    let mut rng = replicate_rng(master, trial as u64);
    [rng.next_u64(), rng.next_u64(), rng.next_u64()]
}

pub fn run_simulation(cfg: &SimulationConfig) -> Result<SimulationSummary> {
    if cfg.trials == 0 {
        return Err(Error::InvalidConfig("trials must be at least 1".into()));
    }
    if cfg.m == 0 || cfg.n == 0 {
        return Err(Error::InvalidConfig("sample sizes must be positive".into()));
    }
    cfg.family_a.validate()?;
    cfg.family_b.validate()?;
    cfg.bootstrap.validate()?;
    let hypothesis = Hypothesis::new(
        cfg.hypothesis.order,
        cfg.hypothesis.class,
        cfg.hypothesis.direction,
    )?;

    let trial = |t: usize| -> Result<Vec<Decision>> {
        let [sa, sb, sboot] = trial_seeds(cfg.bootstrap.seed, t);
        let a = generate::<f64>(
            &GeneratorSpec {
                family: cfg.family_a,
                seed: sa,
            },
            cfg.m,
        )?;
        let b = generate::<f64>(
            &GeneratorSpec {
                family: cfg.family_b,
                seed: sb,
            },
            cfg.n,
        )?;
        let boot = BootstrapConfig {
            seed: sboot,
            workers: None,
            ..cfg.bootstrap
        };
        let report = run_test(hypothesis, &a, &b, &boot, cfg.adjustment)?;
        Ok(report.sub_results.iter().map(|s| s.decision).collect())
    };
    let run = || {
        (0..cfg.trials)
            .into_par_iter()
            .map(trial)
            .collect::<Result<Vec<_>>>()
    };
    let outcomes = match cfg.bootstrap.workers {
        None => run()?,
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map_err(|e| Error::InvalidConfig(e.to_string()))?
            .install(run)?,
    };

    let k = hypothesis.conditions().len();
    let mut condition_rejections = vec![0; k];
    let mut rejections = 0;
    for decisions in &outcomes {
        for (c, d) in condition_rejections.iter_mut().zip(decisions) {
            *c += usize::from(*d == Decision::Reject);
        }
        if JointDecision::from_decisions(decisions.iter().copied())
            == JointDecision::RejectDominance
        {
            rejections += 1;
        }
    }
    let frequency = rejections as f64 / cfg.trials as f64;
    Ok(SimulationSummary {
        trials: cfg.trials,
        rejections,
        frequency,
        std_error: (frequency * (1.0 - frequency) / cfg.trials as f64).sqrt(),
        condition_rejections,
    })
}

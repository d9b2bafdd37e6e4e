//! Nonparametric two-sample tests for bivariate stochastic dominance.
//!
//! Samples live on the unit square. First-order hypotheses compare empirical
//! cdfs (submodular class) or the union-event function `K = Fx + Fy - F`
//! (supermodular class); second-order hypotheses compare the double integrals
//! `H` and `L` of those surfaces. Every supremum is computed exactly on the
//! combined coordinate grid of the two samples, and critical values come from
//! a pooled two-sample bootstrap with reproducible per-replicate streams.
//!
//! The math is generic over [`Scalar`] (`f32` or `f64`); the aliases at the
//! bottom of this file name the `f64` and `f32` instantiations.

pub mod bootstrap;
pub mod dominance;
pub mod empirical;
mod error;
pub mod functionals;
mod lattice;
pub mod sample;
mod scalar;
pub mod simulation;
pub mod statistics;
pub mod synth;

pub use bootstrap::{
    bootstrap_statistic, bootstrap_statistics, critical_value, decide, p_value, replicate_rng,
    resample_pooled, BootstrapConfig, BootstrapDistribution, Decision, PooledSample,
};
pub use dominance::{
    run_test, Adjustment, Condition, Direction, DominanceTestReport, Hypothesis, JointDecision,
    SubResult,
};
pub use empirical::{
    combined_grid, sup_delta_surface, Axis, CombinedGrid, EmpiricalCdf, Extremum, Surface,
};
pub use error::{Error, Result};
pub use functionals::{h_at, h_marginal_at, l_at, sup_delta_functional, Functional};
pub use sample::{
    load_sample, rescale, rescale_pooled, BivariateSample, InputFormat, RawSample, RescaleMode,
    RescaleTransform,
};
pub use scalar::Scalar;
pub use simulation::{run_simulation, trial_seeds, SimulationConfig, SimulationSummary};
pub use statistics::{
    compute_statistic, scale_factor, statistic_pair, Argmax, Class, Order, StatisticKind,
    StatisticValue,
};
pub use synth::{generate, normal_cdf, normal_quantile, GeneratorFamily, GeneratorSpec};

pub type RawSample64 = RawSample<f64>;
pub type Sample64 = BivariateSample<f64>;
pub type Transform64 = RescaleTransform<f64>;
pub type Cdf64 = EmpiricalCdf<f64>;
pub type Grid64 = CombinedGrid<f64>;
pub type Statistic64 = StatisticValue<f64>;
pub type Distribution64 = BootstrapDistribution<f64>;
pub type Report64 = DominanceTestReport<f64>;

pub type Sample32 = BivariateSample<f32>;
pub type Cdf32 = EmpiricalCdf<f32>;
pub type Grid32 = CombinedGrid<f32>;
pub type Statistic32 = StatisticValue<f32>;

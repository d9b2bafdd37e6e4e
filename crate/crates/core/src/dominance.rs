//! Full dominance hypotheses: the principal bivariate condition plus the
//! marginal conditions that complete the sufficient conditions for dominance.
//!
//! | order  | class        | conditions               |
//! |--------|--------------|--------------------------|
//! | first  | submodular   | dF <= 0                  |
//! | first  | supermodular | dK <= 0, dFx <= 0, dFy <= 0 |
//! | second | submodular   | dH <= 0, dHx <= 0, dHy <= 0 |
//! | second | supermodular | dL <= 0, dHx <= 0, dHy <= 0 |
//!
//! Dominance is rejected when any condition is rejected.

use std::fmt;

use crate::bootstrap::{
    bootstrap_statistics, critical_value, BootstrapConfig, BootstrapDistribution, Decision,
};
use crate::empirical::Axis;
use crate::error::{Error, Result};
use crate::sample::{BivariateSample, RescaleTransform};
use crate::scalar::Scalar;
use crate::statistics::{Class, Order, StatisticKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    ADominatesB,
    BDominatesA,
}

impl Direction {
    pub fn as_str(&self) -> &'static str {
        match self {
            Direction::ADominatesB => "a_dominates_b",
            Direction::BDominatesA => "b_dominates_a",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Hypothesis {
    pub order: Order,
    /// Submodular or supermodular.
    pub class: Class,
    pub direction: Direction,
}

/// One inequality of a dominance condition, stated as `(dominating - dominated) <= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    DeltaF,
    DeltaK,
    DeltaFx,
    DeltaFy,
    DeltaH,
    DeltaL,
    DeltaHx,
    DeltaHy,
}

impl Condition {
    pub fn kind(&self) -> StatisticKind {
        match self {
            Condition::DeltaF => StatisticKind::LAMBDA,
            Condition::DeltaK => StatisticKind::KAPPA,
            Condition::DeltaH => StatisticKind::MU,
            Condition::DeltaL => StatisticKind::GAMMA,
            Condition::DeltaFx => StatisticKind::marginal(Order::First, Axis::X),
            Condition::DeltaFy => StatisticKind::marginal(Order::First, Axis::Y),
            Condition::DeltaHx => StatisticKind::marginal(Order::Second, Axis::X),
            Condition::DeltaHy => StatisticKind::marginal(Order::Second, Axis::Y),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Condition::DeltaF => "delta_F",
            Condition::DeltaK => "delta_K",
            Condition::DeltaFx => "delta_FX",
            Condition::DeltaFy => "delta_FY",
            Condition::DeltaH => "delta_H",
            Condition::DeltaL => "delta_L",
            Condition::DeltaHx => "delta_HX",
            Condition::DeltaHy => "delta_HY",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Hypothesis {
    pub fn new(order: Order, class: Class, direction: Direction) -> Result<Self> {
        match class {
            Class::Submodular | Class::Supermodular => Ok(Self {
                order,
                class,
                direction,
            }),
            _ => Err(Error::InvalidConfig(
                "a dominance hypothesis needs the submodular or supermodular class".into(),
            )),
        }
    }

    pub fn conditions(&self) -> Vec<Condition> {
        use Condition::*;
        match (self.order, self.class) {
            (Order::First, Class::Submodular) => vec![DeltaF],
            (Order::First, Class::Supermodular) => vec![DeltaK, DeltaFx, DeltaFy],
            (Order::Second, Class::Submodular) => vec![DeltaH, DeltaHx, DeltaHy],
            (Order::Second, Class::Supermodular) => vec![DeltaL, DeltaHx, DeltaHy],
            _ => vec![],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Adjustment {
    None,
    /// Each of `k` conditions is tested at `beta / k`.
    Bonferroni,
}

impl Adjustment {
    pub fn level(&self, beta: f64, conditions: usize) -> f64 {
        match self {
            Adjustment::None => beta,
            Adjustment::Bonferroni => beta / conditions as f64,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum JointDecision {
    RejectDominance,
    FailToReject,
}

impl JointDecision {
    pub fn from_decisions(decisions: impl IntoIterator<Item = Decision>) -> Self {
        if decisions.into_iter().any(|d| d == Decision::Reject) {
            JointDecision::RejectDominance
        } else {
            JointDecision::FailToReject
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SubResult<T> {
    pub condition: Condition,
    /// Per-condition level after adjustment.
    pub level: f64,
    pub distribution: BootstrapDistribution<T>,
    pub decision: Decision,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DominanceTestReport<T> {
    pub hypothesis: Hypothesis,
    pub sub_results: Vec<SubResult<T>>,
    pub joint_decision: JointDecision,
    pub adjustment: Adjustment,
    pub beta: f64,
    pub replicates: usize,
    pub seed: u64,
    /// Sizes of `a` and `b` as passed in, before any direction swap.
    pub sizes: (usize, usize),
    pub transform: RescaleTransform<T>,
}

pub fn run_test<T: Scalar>(
    hyp: Hypothesis,
    a: &BivariateSample<T>,
    b: &BivariateSample<T>,
    cfg: &BootstrapConfig,
    adjustment: Adjustment,
) -> Result<DominanceTestReport<T>> {
    let hyp = Hypothesis::new(hyp.order, hyp.class, hyp.direction)?;
    cfg.validate()?;
    let conditions = hyp.conditions();
    let level = adjustment.level(cfg.beta, conditions.len());
    let (dominant, dominated) = match hyp.direction {
        Direction::ADominatesB => (a, b),
        Direction::BDominatesA => (b, a),
    };
    let kinds: Vec<StatisticKind> = conditions.iter().map(Condition::kind).collect();
    let sub_cfg = BootstrapConfig {
        beta: level,
        ..*cfg
    };
    let dists = bootstrap_statistics(&kinds, dominant, dominated, &sub_cfg)?;

    let sub_results: Vec<SubResult<T>> = conditions
        .into_iter()
        .zip(dists)
        .map(|(condition, distribution)| {
            debug_assert_eq!(
                distribution.critical_value,
                critical_value(&distribution.values, level)
            );
            SubResult {
                condition,
                level,
                decision: distribution.decision(),
                distribution,
            }
        })
        .collect();
    let joint_decision = JointDecision::from_decisions(sub_results.iter().map(|s| s.decision));
    Ok(DominanceTestReport {
        hypothesis: hyp,
        sub_results,
        joint_decision,
        adjustment,
        beta: cfg.beta,
        replicates: cfg.replicates,
        seed: cfg.seed,
        sizes: (a.size(), b.size()),
        transform: *a.transform(),
    })
}

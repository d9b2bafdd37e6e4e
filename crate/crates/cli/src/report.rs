//! JSON documents written by the CLI. Field names are the stable interface;
//! see `docs/report-schema.md`.

use std::fmt::Write as _;

use bidom::{
    Adjustment, Argmax, Class, Condition, Decision, Direction, DominanceTestReport, JointDecision,
    Order, RescaleTransform, SimulationConfig, SimulationSummary, StatisticValue,
};
use serde::{Deserialize, Serialize};

pub const JOINT_RULE: &str = "reject dominance when any condition is rejected";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecisionDoc {
    Reject,
    FailToReject,
}

impl From<Decision> for DecisionDoc {
    fn from(d: Decision) -> Self {
        match d {
            Decision::Reject => DecisionDoc::Reject,
            Decision::FailToReject => DecisionDoc::FailToReject,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JointDecisionDoc {
    RejectDominance,
    FailToReject,
}

impl From<JointDecision> for JointDecisionDoc {
    fn from(d: JointDecision) -> Self {
        match d {
            JointDecision::RejectDominance => JointDecisionDoc::RejectDominance,
            JointDecision::FailToReject => JointDecisionDoc::FailToReject,
        }
    }
}

impl JointDecisionDoc {
    /// The joint rule applied to per-condition decisions.
    pub fn from_conditions(conditions: &[ConditionDoc]) -> Self {
        if conditions.iter().any(|c| c.decision == DecisionDoc::Reject) {
            JointDecisionDoc::RejectDominance
        } else {
            JointDecisionDoc::FailToReject
        }
    }
}

pub fn order_name(o: Order) -> &'static str {
    match o {
        Order::First => "first",
        Order::Second => "second",
    }
}

pub fn class_name(c: Class) -> &'static str {
    match c {
        Class::Submodular => "submodular",
        Class::Supermodular => "supermodular",
        Class::MarginalX => "marginal_x",
        Class::MarginalY => "marginal_y",
    }
}

pub fn adjustment_name(a: Adjustment) -> &'static str {
    match a {
        Adjustment::None => "none",
        Adjustment::Bonferroni => "bonferroni",
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HypothesisDoc {
    pub order: String,
    pub class: String,
    pub direction: String,
}

impl HypothesisDoc {
    pub fn new(order: Order, class: Class, direction: Direction) -> Self {
        Self {
            order: order_name(order).into(),
            class: class_name(class).into(),
            direction: direction.as_str().into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransformDoc {
    pub mode: String,
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl From<&RescaleTransform<f64>> for TransformDoc {
    fn from(t: &RescaleTransform<f64>) -> Self {
        Self {
            mode: if t.identity {
                "identity"
            } else {
                "pooled_minmax"
            }
            .into(),
            x_min: t.x_min,
            x_max: t.x_max,
            y_min: t.y_min,
            y_max: t.y_max,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SizesDoc {
    pub a: usize,
    pub b: usize,
}

/// `[x, y]` for bivariate statistics, `[v]` for marginal ones.
pub fn argmax_vec(a: Argmax<f64>) -> Vec<f64> {
    match a {
        Argmax::Point(x, y) => vec![x, y],
        Argmax::Coordinate(v) => vec![v],
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConditionDoc {
    pub name: String,
    pub statistic: String,
    pub value: f64,
    pub raw_sup: f64,
    pub scale: f64,
    pub argmax: Vec<f64>,
    pub critical_value: f64,
    pub p_value: f64,
    pub level: f64,
    pub decision: DecisionDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub replicates: Option<Vec<f64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TestReport {
    pub hypothesis: HypothesisDoc,
    pub conditions: Vec<ConditionDoc>,
    pub joint_decision: JointDecisionDoc,
    pub joint_rule: String,
    pub adjustment: String,
    pub alpha: f64,
    pub replicates: usize,
    pub seed: u64,
    pub sample_sizes: SizesDoc,
    pub rescale: TransformDoc,
}

impl TestReport {
    pub fn new(report: &DominanceTestReport<f64>, include_replicates: bool) -> Self {
        let h = report.hypothesis;
        let conditions = report
            .sub_results
            .iter()
            .map(|s| {
                let d = &s.distribution;
                ConditionDoc {
                    name: s.condition.name().into(),
                    statistic: s.condition.kind().symbol().into(),
                    value: d.observed.value,
                    raw_sup: d.observed.raw_sup,
                    scale: d.observed.scale,
                    argmax: argmax_vec(d.observed.argmax),
                    critical_value: d.critical_value,
                    p_value: d.p_value,
                    level: s.level,
                    decision: s.decision.into(),
                    replicates: include_replicates.then(|| d.values.clone()),
                }
            })
            .collect();
        Self {
            hypothesis: HypothesisDoc::new(h.order, h.class, h.direction),
            conditions,
            joint_decision: report.joint_decision.into(),
            joint_rule: JOINT_RULE.into(),
            adjustment: adjustment_name(report.adjustment).into(),
            alpha: report.beta,
            replicates: report.replicates,
            seed: report.seed,
            sample_sizes: SizesDoc {
                a: report.sizes.0,
                b: report.sizes.1,
            },
            rescale: (&report.transform).into(),
        }
    }

    pub fn to_text(&self) -> String {
        let h = &self.hypothesis;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "hypothesis: {} order, {} class, {}",
            h.order, h.class, h.direction
        );
        let _ = writeln!(
            out,
            "sizes: a = {}, b = {}; B = {}, seed = {}, alpha = {}, adjustment = {}",
            self.sample_sizes.a,
            self.sample_sizes.b,
            self.replicates,
            self.seed,
            self.alpha,
            self.adjustment
        );
        for c in &self.conditions {
            let _ = writeln!(
                out,
                "  {:<9} {:<7} value {:.6} (raw {:.6}) at {:?}  critical {:.6}  p {:.4}  level {:.4}  {:?}",
                c.name, c.statistic, c.value, c.raw_sup, c.argmax, c.critical_value, c.p_value, c.level, c.decision
            );
        }
        let _ = writeln!(out, "joint decision: {:?}", self.joint_decision);
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StatisticReport {
    pub statistic: String,
    pub order: String,
    pub class: String,
    pub value: f64,
    pub raw_sup: f64,
    pub scale: f64,
    pub argmax: Vec<f64>,
    pub sample_sizes: SizesDoc,
    pub rescale: TransformDoc,
}

impl StatisticReport {
    pub fn new(
        s: &StatisticValue<f64>,
        sizes: (usize, usize),
        transform: &RescaleTransform<f64>,
    ) -> Self {
        Self {
            statistic: s.kind.symbol().into(),
            order: order_name(s.kind.order).into(),
            class: class_name(s.kind.class).into(),
            value: s.value,
            raw_sup: s.raw_sup,
            scale: s.scale,
            argmax: argmax_vec(s.argmax),
            sample_sizes: SizesDoc {
                a: sizes.0,
                b: sizes.1,
            },
            rescale: transform.into(),
        }
    }

    pub fn to_text(&self) -> String {
        format!(
            "{} = {:.6} (raw sup {:.6} x scale {:.6}) at {:?}\n",
            self.statistic, self.value, self.raw_sup, self.scale, self.argmax
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConditionCountDoc {
    pub name: String,
    pub rejections: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimulationReport {
    pub generator_a: String,
    pub generator_b: String,
    pub sample_sizes: SizesDoc,
    pub hypothesis: HypothesisDoc,
    pub trials: usize,
    pub replicates: usize,
    pub alpha: f64,
    pub adjustment: String,
    pub seed: u64,
    pub rejections: usize,
    pub rejection_frequency: f64,
    pub std_error: f64,
    pub conditions: Vec<ConditionCountDoc>,
}

impl SimulationReport {
    pub fn new(
        cfg: &SimulationConfig,
        conditions: &[Condition],
        summary: &SimulationSummary,
    ) -> Self {
        let h = cfg.hypothesis;
        Self {
            generator_a: cfg.family_a.to_string(),
            generator_b: cfg.family_b.to_string(),
            sample_sizes: SizesDoc { a: cfg.m, b: cfg.n },
            hypothesis: HypothesisDoc::new(h.order, h.class, h.direction),
            trials: summary.trials,
            replicates: cfg.bootstrap.replicates,
            alpha: cfg.bootstrap.beta,
            adjustment: adjustment_name(cfg.adjustment).into(),
            seed: cfg.bootstrap.seed,
            rejections: summary.rejections,
            rejection_frequency: summary.frequency,
            std_error: summary.std_error,
            conditions: conditions
                .iter()
                .zip(&summary.condition_rejections)
                .map(|(c, &r)| ConditionCountDoc {
                    name: c.name().into(),
                    rejections: r,
                })
                .collect(),
        }
    }

    pub fn to_text(&self) -> String {
        format!(
            "{} vs {} (m = {}, n = {}): rejected {}/{} = {:.4} (se {:.4})\n",
            self.generator_a,
            self.generator_b,
            self.sample_sizes.a,
            self.sample_sizes.b,
            self.rejections,
            self.trials,
            self.rejection_frequency,
            self.std_error
        )
    }
}

use std::path::PathBuf;

use bidom::{Adjustment, Class, Direction, InputFormat, Order, RescaleMode};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "bidom",
    version,
    about = "Bootstrap tests for bivariate first- and second-order stochastic dominance"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a dominance test on two samples.
    Test(TestArgs),
    /// Monte Carlo rejection frequency on synthetic samples.
    Simulate(SimulateArgs),
    /// Evaluate one statistic without bootstrapping.
    Statistic(StatisticArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    First,
    Second,
}

impl From<OrderArg> for Order {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::First => Order::First,
            OrderArg::Second => Order::Second,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    Submodular,
    Supermodular,
    #[value(alias = "marginal_x")]
    MarginalX,
    #[value(alias = "marginal_y")]
    MarginalY,
}

impl From<ClassArg> for Class {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Submodular => Class::Submodular,
            ClassArg::Supermodular => Class::Supermodular,
            ClassArg::MarginalX => Class::MarginalX,
            ClassArg::MarginalY => Class::MarginalY,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    #[value(alias = "a_dominates_b")]
    ADominatesB,
    #[value(alias = "b_dominates_a")]
    BDominatesA,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::ADominatesB => Direction::ADominatesB,
            DirectionArg::BDominatesA => Direction::BDominatesA,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RescaleArg {
    #[value(alias = "pooled_minmax")]
    PooledMinmax,
    Identity,
}

impl From<RescaleArg> for RescaleMode {
    fn from(r: RescaleArg) -> Self {
        match r {
            RescaleArg::PooledMinmax => RescaleMode::PooledMinMax,
            RescaleArg::Identity => RescaleMode::Identity,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AdjustmentArg {
    None,
    Bonferroni,
}

impl From<AdjustmentArg> for Adjustment {
    fn from(a: AdjustmentArg) -> Self {
        match a {
            AdjustmentArg::None => Adjustment::None,
            AdjustmentArg::Bonferroni => Adjustment::Bonferroni,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormatArg {
    Csv,
    Tsv,
}

impl From<InputFormatArg> for InputFormat {
    fn from(f: InputFormatArg) -> Self {
        match f {
            InputFormatArg::Csv => InputFormat::Csv,
            InputFormatArg::Tsv => InputFormat::Tsv,
        }
    }
}

#[derive(Clone, Debug, Args)]
pub struct InputArgs {
    /// Sample `a`: two numeric columns (x, y).
    #[arg(long = "a", value_name = "PATH")]
    pub a: PathBuf,
    /// Sample `b`.
    #[arg(long = "b", value_name = "PATH")]
    pub b: PathBuf,
    /// Both files start with a header line.
    #[arg(long)]
    pub header: bool,
    /// Delimiter; inferred from the extension when omitted (`.tsv` is tab, anything else comma).
    #[arg(long, value_enum)]
    pub input_format: Option<InputFormatArg>,
    #[arg(long, value_enum, default_value = "pooled-minmax")]
    pub rescale: RescaleArg,
}

#[derive(Clone, Debug, Args)]
pub struct BootstrapArgs {
    #[arg(long, default_value_t = 999)]
    pub replicates: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Nominal level of each test.
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    #[arg(long, value_enum, default_value = "none")]
    pub adjustment: AdjustmentArg,
    /// Worker threads for bootstrap replicates.
    #[arg(long, env = "BIDOM_THREADS")]
    pub workers: Option<usize>,
}

#[derive(Clone, Debug, Args)]
pub struct TestArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value = "first")]
    pub order: OrderArg,
    #[arg(long, value_enum, default_value = "submodular")]
    pub class: ClassArg,
    #[arg(long, value_enum, default_value = "a-dominates-b")]
    pub direction: DirectionArg,
    #[command(flatten)]
    pub bootstrap: BootstrapArgs,
    /// Include every replicate value in the report.
    #[arg(long)]
    pub include_replicates: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: FormatArg,
}

#[derive(Clone, Debug, Args)]
pub struct StatisticArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value = "first")]
    pub order: OrderArg,
    #[arg(long, value_enum, default_value = "submodular")]
    pub class: ClassArg,
    #[arg(long, value_enum, default_value = "json")]
    pub format: FormatArg,
}

#[derive(Clone, Debug, Args)]
pub struct SimulateArgs {
    /// Generator for sample `a`, e.g. `independent_uniform` or `scaled_uniform:0.8`.
    #[arg(long)]
    pub gen_a: String,
    /// Generator for sample `b`.
    #[arg(long)]
    pub gen_b: String,
    #[arg(long, default_value_t = 100)]
    pub m: usize,
    #[arg(long, default_value_t = 100)]
    pub n: usize,
    /// Monte Carlo trials.
    #[arg(long, default_value_t = 500)]
    pub trials: usize,
    #[arg(long, value_enum, default_value = "first")]
    pub order: OrderArg,
    #[arg(long, value_enum, default_value = "submodular")]
    pub class: ClassArg,
    #[arg(long, value_enum, default_value = "a-dominates-b")]
    pub direction: DirectionArg,
    #[command(flatten)]
    pub bootstrap: BootstrapArgs,
    #[arg(long, value_enum, default_value = "json")]
    pub format: FormatArg,
}

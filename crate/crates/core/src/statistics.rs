//! Scaled two-sample supremum statistics.

use std::fmt;

use crate::empirical::{combined_grid, Axis, CombinedGrid, Extremum};
use crate::error::Result;
use crate::lattice::DeltaLattice;
use crate::sample::BivariateSample;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    First,
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Class {
    Submodular,
    Supermodular,
    MarginalX,
    MarginalY,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StatisticKind {
    pub order: Order,
    pub class: Class,
}

impl StatisticKind {
    pub const LAMBDA: Self = Self::new(Order::First, Class::Submodular);
    pub const KAPPA: Self = Self::new(Order::First, Class::Supermodular);
    pub const MU: Self = Self::new(Order::Second, Class::Submodular);
    pub const GAMMA: Self = Self::new(Order::Second, Class::Supermodular);

    pub const ALL: [Self; 8] = [
        Self::LAMBDA,
        Self::KAPPA,
        Self::MU,
        Self::GAMMA,
        Self::new(Order::First, Class::MarginalX),
        Self::new(Order::First, Class::MarginalY),
        Self::new(Order::Second, Class::MarginalX),
        Self::new(Order::Second, Class::MarginalY),
    ];

    pub const fn new(order: Order, class: Class) -> Self {
        Self { order, class }
    }

    pub fn marginal(order: Order, axis: Axis) -> Self {
        let class = match axis {
            Axis::X => Class::MarginalX,
            Axis::Y => Class::MarginalY,
        };
        Self { order, class }
    }

    /// Conventional name: lambda, kappa, mu, gamma, or D*/S* on an axis.
    pub fn symbol(&self) -> &'static str {
        match (self.order, self.class) {
            (Order::First, Class::Submodular) => "lambda",
            (Order::First, Class::Supermodular) => "kappa",
            (Order::Second, Class::Submodular) => "mu",
            (Order::Second, Class::Supermodular) => "gamma",
            (Order::First, Class::MarginalX) => "D*_x",
            (Order::First, Class::MarginalY) => "D*_y",
            (Order::Second, Class::MarginalX) => "S*_x",
            (Order::Second, Class::MarginalY) => "S*_y",
        }
    }
}

impl fmt::Display for StatisticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Where the supremum was attained: a vertex for bivariate kinds, a coordinate for marginal ones.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Argmax<T> {
    Point(T, T),
    Coordinate(T),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StatisticValue<T> {
    pub kind: StatisticKind,
    pub raw_sup: T,
    pub scale: T,
    pub value: T,
    pub argmax: Argmax<T>,
}

/// `sqrt(m n / (m + n))`
pub fn scale_factor<T: Scalar>(m: usize, n: usize) -> T {
    (T::from_count(m) * T::from_count(n) / T::from_count(m + n)).sqrt()
}

pub(crate) fn evaluate<T: Scalar>(
    kind: StatisticKind,
    grid: &CombinedGrid<T>,
    a: &[(u32, u32)],
    b: &[(u32, u32)],
) -> StatisticValue<T> {
    let lattice = DeltaLattice::from_indices(grid, a, b);
    evaluate_on(kind, &lattice, a.len(), b.len())
}

pub(crate) fn evaluate_on<T: Scalar>(
    kind: StatisticKind,
    lattice: &DeltaLattice<'_, T>,
    m: usize,
    n: usize,
) -> StatisticValue<T> {
    let point = |e: Extremum<T>| (e.value, Argmax::Point(e.argmax.0, e.argmax.1));
    let coord = |(v, c): (T, T)| (v, Argmax::Coordinate(c));
    let (raw_sup, argmax) = match (kind.order, kind.class) {
        (Order::First, Class::Submodular) => point(lattice.sup_f()),
        (Order::First, Class::Supermodular) => point(lattice.sup_k()),
        (Order::Second, Class::Submodular) => point(lattice.sup_h()),
        (Order::Second, Class::Supermodular) => point(lattice.sup_l()),
        (Order::First, Class::MarginalX) => coord(lattice.sup_marginal_f(Axis::X)),
        (Order::First, Class::MarginalY) => coord(lattice.sup_marginal_f(Axis::Y)),
        (Order::Second, Class::MarginalX) => coord(lattice.sup_marginal_h(Axis::X)),
        (Order::Second, Class::MarginalY) => coord(lattice.sup_marginal_h(Axis::Y)),
    };
    let scale = scale_factor(m, n);
    StatisticValue {
        kind,
        raw_sup,
        scale,
        value: scale * raw_sup,
        argmax,
    }
}

/// Statistic for the null "a dominates b": the scaled supremum of `a`'s surface minus `b`'s.
pub fn compute_statistic<T: Scalar>(
    kind: StatisticKind,
    a: &BivariateSample<T>,
    b: &BivariateSample<T>,
) -> Result<StatisticValue<T>> {
    let grid = combined_grid(a, b);
    let ia = grid.locate(a.points())?;
    let ib = grid.locate(b.points())?;
    Ok(evaluate(kind, &grid, &ia, &ib))
}

/// Both one-sided statistics; each direction is its own hypothesis.
pub fn statistic_pair<T: Scalar>(
    kind: StatisticKind,
    a: &BivariateSample<T>,
    b: &BivariateSample<T>,
) -> Result<(StatisticValue<T>, StatisticValue<T>)> {
    Ok((
        compute_statistic(kind, a, b)?,
        compute_statistic(kind, b, a)?,
    ))
}

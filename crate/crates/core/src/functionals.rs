//! Second-order integral functionals of the empirical cdf.
//!
//! Exchanging the finite sum in the empirical cdf with the double integral gives
//! `H(x, y) = (1/n) sum (x - X_i)+ (y - Y_i)+` and `Hx(x) = (1/n) sum (x - X_i)+`.
//! Integrating `K = Fx + Fy - F` termwise gives `L(x, y) = y Hx(x) + x Hy(y) - H(x, y)`.
//! On each cell of the combined grid every term is a product of one affine
//! factor per axis, so two-sample differences are bilinear per cell and peak
//! at a vertex.

use crate::empirical::{Axis, CombinedGrid, Extremum};
use crate::error::Result;
use crate::lattice::DeltaLattice;
use crate::sample::BivariateSample;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Functional {
    /// `H_a - H_b`
    DeltaH,
    /// `L_a - L_b`
    DeltaL,
}

fn pos<T: Scalar>(v: T) -> T {
    v.max(T::zero())
}

pub fn h_at<T: Scalar>(sample: &BivariateSample<T>, x: T, y: T) -> T {
    let sum: T = sample
        .points()
        .iter()
        .map(|&(px, py)| pos(x - px) * pos(y - py))
        .sum();
    sum / T::from_count(sample.size())
}

pub fn h_marginal_at<T: Scalar>(sample: &BivariateSample<T>, axis: Axis, v: T) -> T {
    let sum: T = sample
        .points()
        .iter()
        .map(|&(px, py)| match axis {
            Axis::X => pos(v - px),
            Axis::Y => pos(v - py),
        })
        .sum();
    sum / T::from_count(sample.size())
}

pub fn l_at<T: Scalar>(sample: &BivariateSample<T>, x: T, y: T) -> T {
    y * h_marginal_at(sample, Axis::X, x) + x * h_marginal_at(sample, Axis::Y, y)
        - h_at(sample, x, y)
}

/// Exact supremum over `[0, 1]²` of `functional_a - functional_b`.
pub fn sup_delta_functional<T: Scalar>(
    kind: Functional,
    a: &BivariateSample<T>,
    b: &BivariateSample<T>,
    grid: &CombinedGrid<T>,
) -> Result<Extremum<T>> {
    let lattice = DeltaLattice::from_samples(grid, a, b)?;
    Ok(match kind {
        Functional::DeltaH => lattice.sup_h(),
        Functional::DeltaL => lattice.sup_l(),
    })
}

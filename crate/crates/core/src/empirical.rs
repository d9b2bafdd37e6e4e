//! Empirical cdf, marginals and the union-event surface `K`, plus the
//! combined grid on which every two-sample supremum is attained.
//!
//! Both `F` and `K` are right-continuous step surfaces whose jumps lie on the
//! coordinate lines of the sample points. On a cell `[x_k, x_{k+1}) x [y_l, y_{l+1})`
//! of the combined grid the difference of two such surfaces is constant and
//! equal to its value at the lower-left vertex, so the maximum over grid
//! vertices is the supremum over the whole square.

use crate::error::{Error, Result};
use crate::lattice::DeltaLattice;
use crate::sample::BivariateSample;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
}

/// A maximum value together with its lexicographically smallest maximizer.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Extremum<T> {
    pub value: T,
    pub argmax: (T, T),
}

/// Step surface compared by [`sup_delta_surface`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Surface {
    /// `F_a - F_b`
    DeltaF,
    /// `K_a - K_b`
    DeltaK,
}

#[derive(Clone, Debug)]
pub struct EmpiricalCdf<T> {
    sample: BivariateSample<T>,
    // points sorted by x, with sorted_x their x-coordinates
    by_x: Vec<(T, T)>,
    sorted_x: Vec<T>,
    sorted_y: Vec<T>,
}

fn sort_values<T: Scalar>(v: &mut [T]) {
    v.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates"));
}

impl<T: Scalar> EmpiricalCdf<T> {
    pub fn new(sample: &BivariateSample<T>) -> Self {
        let mut by_x = sample.points().to_vec();
        by_x.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite coordinates"));
        let sorted_x = by_x.iter().map(|p| p.0).collect();
        let mut sorted_y: Vec<T> = by_x.iter().map(|p| p.1).collect();
        sort_values(&mut sorted_y);
        Self {
            sample: sample.clone(),
            by_x,
            sorted_x,
            sorted_y,
        }
    }

    pub fn sample(&self) -> &BivariateSample<T> {
        &self.sample
    }

    pub fn size(&self) -> usize {
        self.by_x.len()
    }

    fn n(&self) -> T {
        T::from_count(self.size())
    }

    /// `#{i : X_i <= s and Y_i <= t}`
    pub fn count_at(&self, s: T, t: T) -> usize {
        let r = self.sorted_x.partition_point(|&x| x <= s);
        self.by_x[..r].iter().filter(|p| p.1 <= t).count()
    }

    pub fn marginal_count(&self, axis: Axis, v: T) -> usize {
        match axis {
            Axis::X => self.sorted_x.partition_point(|&x| x <= v),
            Axis::Y => self.sorted_y.partition_point(|&y| y <= v),
        }
    }

    /// `#{i : X_i <= s or Y_i <= t}` by inclusion-exclusion.
    pub fn union_count(&self, s: T, t: T) -> usize {
        self.marginal_count(Axis::X, s) + self.marginal_count(Axis::Y, t) - self.count_at(s, t)
    }

    /// Empirical cdf at `(s, t)`. Queries must lie in `[0, 1]²`.
    pub fn cdf_at(&self, s: T, t: T) -> T {
        debug_assert!(in_unit(s) && in_unit(t), "query outside the unit square");
        T::from_count(self.count_at(s, t)) / self.n()
    }

    pub fn marginal_cdf_at(&self, axis: Axis, v: T) -> T {
        debug_assert!(in_unit(v), "query outside the unit interval");
        T::from_count(self.marginal_count(axis, v)) / self.n()
    }

    /// `K(s, t) = Fx(s) + Fy(t) - F(s, t)`, the mass of `{X <= s or Y <= t}`.
    pub fn k_at(&self, s: T, t: T) -> T {
        debug_assert!(in_unit(s) && in_unit(t), "query outside the unit square");
        T::from_count(self.union_count(s, t)) / self.n()
    }
}

fn in_unit<T: Scalar>(v: T) -> bool {
    v >= T::zero() && v <= T::one()
}

/// Sorted distinct coordinates of two samples on each axis, with 0 and 1 added.
#[derive(Clone, Debug, PartialEq)]
pub struct CombinedGrid<T> {
    pub xs: Vec<T>,
    pub ys: Vec<T>,
}

impl<T: Scalar> CombinedGrid<T> {
    pub fn from_points<'a>(points: impl IntoIterator<Item = &'a (T, T)>) -> Self {
        let mut xs = vec![T::zero(), T::one()];
        let mut ys = vec![T::zero(), T::one()];
        for &(x, y) in points {
            xs.push(x);
            ys.push(y);
        }
        sort_values(&mut xs);
        sort_values(&mut ys);
        xs.dedup();
        ys.dedup();
        Self { xs, ys }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.xs.len(), self.ys.len())
    }

    /// Grid indices of each point; every coordinate must be a grid value.
    pub fn locate(&self, points: &[(T, T)]) -> Result<Vec<(u32, u32)>> {
        let find = |axis: &[T], v: T| -> Result<u32> {
            axis.binary_search_by(|g| g.partial_cmp(&v).expect("finite coordinates"))
                .map(|i| i as u32)
                .map_err(|_| Error::GridMismatch {
                    value: v.to_f64().unwrap_or(f64::NAN),
                })
        };
        points
            .iter()
            .map(|&(x, y)| Ok((find(&self.xs, x)?, find(&self.ys, y)?)))
            .collect()
    }

    /// All grid vertices in lexicographic order.
    pub fn vertices(&self) -> impl Iterator<Item = (T, T)> + '_ {
        self.xs
            .iter()
            .flat_map(move |&x| self.ys.iter().map(move |&y| (x, y)))
    }
}

pub fn combined_grid<T: Scalar>(a: &BivariateSample<T>, b: &BivariateSample<T>) -> CombinedGrid<T> {
    CombinedGrid::from_points(a.points().iter().chain(b.points()))
}

/// Exact supremum over `[0, 1]²` of `surface_a - surface_b`.
pub fn sup_delta_surface<T: Scalar>(
    surface: Surface,
    a: &EmpiricalCdf<T>,
    b: &EmpiricalCdf<T>,
    grid: &CombinedGrid<T>,
) -> Result<Extremum<T>> {
    let lattice = DeltaLattice::from_samples(grid, a.sample(), b.sample())?;
    Ok(match surface {
        Surface::DeltaF => lattice.sup_f(),
        Surface::DeltaK => lattice.sup_k(),
    })
}

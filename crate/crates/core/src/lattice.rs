//! Grid-scale evaluation of every two-sample difference surface.
//!
//! Points are reduced to their vertex indices on a combined grid. Each point of
//! sample `a` carries integer weight `n` and each point of `b` weight `-m`, so the
//! 2-D prefix sum at vertex `(k, l)` is `m * n * (F_a - F_b)(x_k, y_l)` exactly.
//! First-order maxima are located on these integers; second-order surfaces are
//! accumulated from them by the cell-wise recurrences of the double integral.

use crate::empirical::{Axis, CombinedGrid, Extremum};
use crate::error::Result;
use crate::sample::BivariateSample;
use crate::scalar::Scalar;

pub(crate) struct DeltaLattice<'g, T> {
    grid: &'g CombinedGrid<T>,
    gy: usize,
    mn: i64,
    // row-major, gx * gy
    counts: Vec<i64>,
}

/// Lexicographic scan keeping the first strict maximum.
fn first_max<V: PartialOrd + Copy>(values: impl Iterator<Item = V>) -> (usize, V) {
    let mut best: Option<(usize, V)> = None;
    for (i, v) in values.enumerate() {
        if best.is_none_or(|(_, b)| v > b) {
            best = Some((i, v));
        }
    }
    best.expect("grid is never empty")
}

impl<'g, T: Scalar> DeltaLattice<'g, T> {
    pub(crate) fn from_samples(
        grid: &'g CombinedGrid<T>,
        a: &BivariateSample<T>,
        b: &BivariateSample<T>,
    ) -> Result<Self> {
        let ia = grid.locate(a.points())?;
        let ib = grid.locate(b.points())?;
        Ok(Self::from_indices(grid, &ia, &ib))
    }

    pub(crate) fn from_indices(
        grid: &'g CombinedGrid<T>,
        a: &[(u32, u32)],
        b: &[(u32, u32)],
    ) -> Self {
        let (gx, gy) = grid.dims();
        let (m, n) = (a.len() as i64, b.len() as i64);
        let mut counts = vec![0i64; gx * gy];
        for &(i, j) in a {
            counts[i as usize * gy + j as usize] += n;
        }
        for &(i, j) in b {
            counts[i as usize * gy + j as usize] -= m;
        }
        for k in 0..gx {
            let row = &mut counts[k * gy..(k + 1) * gy];
            for l in 1..gy {
                row[l] += row[l - 1];
            }
        }
        for k in 1..gx {
            let (prev, cur) = counts.split_at_mut(k * gy);
            let prev = &prev[(k - 1) * gy..];
            for l in 0..gy {
                cur[l] += prev[l];
            }
        }
        Self {
            grid,
            gy,
            mn: m * n,
            counts,
        }
    }

    fn gx(&self) -> usize {
        self.grid.xs.len()
    }

    fn scaled(&self, v: i64) -> T {
        T::from_int(v) / T::from_int(self.mn)
    }

    fn vertex(&self, flat: usize) -> (T, T) {
        (self.grid.xs[flat / self.gy], self.grid.ys[flat % self.gy])
    }

    fn marginal_counts(&self, axis: Axis) -> Vec<i64> {
        match axis {
            Axis::X => (0..self.gx())
                .map(|k| self.counts[k * self.gy + self.gy - 1])
                .collect(),
            Axis::Y => self.counts[(self.gx() - 1) * self.gy..].to_vec(),
        }
    }

    fn axis_values(&self, axis: Axis) -> &[T] {
        match axis {
            Axis::X => &self.grid.xs,
            Axis::Y => &self.grid.ys,
        }
    }

    pub(crate) fn sup_f(&self) -> Extremum<T> {
        let (at, best) = first_max(self.counts.iter().copied());
        Extremum {
            value: self.scaled(best),
            argmax: self.vertex(at),
        }
    }

    pub(crate) fn sup_k(&self) -> Extremum<T> {
        let dx = self.marginal_counts(Axis::X);
        let dy = self.marginal_counts(Axis::Y);
        let gy = self.gy;
        let union = self
            .counts
            .iter()
            .enumerate()
            .map(|(f, &c)| dx[f / gy] + dy[f % gy] - c);
        let (at, best) = first_max(union);
        Extremum {
            value: self.scaled(best),
            argmax: self.vertex(at),
        }
    }

    /// Max of the marginal cdf difference, with its coordinate.
    pub(crate) fn sup_marginal_f(&self, axis: Axis) -> (T, T) {
        let d = self.marginal_counts(axis);
        let (at, best) = first_max(d.into_iter());
        (self.scaled(best), self.axis_values(axis)[at])
    }

    /// `(H_a - H_b)` on one axis at every grid coordinate: running integral of
    /// the marginal cdf difference, which is constant between coordinates.
    fn marginal_h(&self, axis: Axis) -> Vec<T> {
        let d = self.marginal_counts(axis);
        let v = self.axis_values(axis);
        let mut out = Vec::with_capacity(v.len());
        let mut acc = T::zero();
        for k in 0..v.len() {
            out.push(acc);
            if k + 1 < v.len() {
                acc = acc + (v[k + 1] - v[k]) * self.scaled(d[k]);
            }
        }
        out
    }

    pub(crate) fn sup_marginal_h(&self, axis: Axis) -> (T, T) {
        let h = self.marginal_h(axis);
        let (at, best) = first_max(h.into_iter());
        (best, self.axis_values(axis)[at])
    }

    /// `(H_a - H_b)` at every vertex, row-major.
    fn delta_h(&self) -> Vec<T> {
        let (xs, ys, gy) = (&self.grid.xs, &self.grid.ys, self.gy);
        // integrate along y within each row
        let mut g = vec![T::zero(); self.counts.len()];
        for k in 0..self.gx() {
            let mut acc = T::zero();
            for l in 0..gy {
                g[k * gy + l] = acc;
                if l + 1 < gy {
                    acc = acc + (ys[l + 1] - ys[l]) * self.scaled(self.counts[k * gy + l]);
                }
            }
        }
        // then along x, accumulating whole rows
        let mut h = vec![T::zero(); self.counts.len()];
        let mut acc = vec![T::zero(); gy];
        for k in 0..self.gx() {
            h[k * gy..(k + 1) * gy].copy_from_slice(&acc);
            if k + 1 < self.gx() {
                let dx = xs[k + 1] - xs[k];
                for l in 0..gy {
                    acc[l] = acc[l] + dx * g[k * gy + l];
                }
            }
        }
        h
    }

    pub(crate) fn sup_h(&self) -> Extremum<T> {
        let h = self.delta_h();
        let (at, best) = first_max(h.into_iter());
        Extremum {
            value: best,
            argmax: self.vertex(at),
        }
    }

    /// `L = y Hx(x) + x Hy(y) - H(x, y)` differenced vertex by vertex.
    pub(crate) fn sup_l(&self) -> Extremum<T> {
        let h = self.delta_h();
        let hx = self.marginal_h(Axis::X);
        let hy = self.marginal_h(Axis::Y);
        let (xs, ys, gy) = (&self.grid.xs, &self.grid.ys, self.gy);
        let l = h
            .iter()
            .enumerate()
            .map(|(f, &hv)| ys[f % gy] * hx[f / gy] + xs[f / gy] * hy[f % gy] - hv);
        let (at, best) = first_max(l);
        Extremum {
            value: best,
            argmax: self.vertex(at),
        }
    }
}

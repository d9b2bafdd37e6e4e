//! Pooled two-sample bootstrap.
//!
//! Under the null both samples are resampled from their concatenation: `N = m + n`
//! indices are drawn with replacement, the first `m` form the bootstrap `a` and
//! the last `n` the bootstrap `b`. Replicate `r` draws from its own ChaCha stream
//! keyed on `(seed, r)`, so results do not depend on the thread schedule.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::empirical::combined_grid;
use crate::error::{Error, Result};
use crate::lattice::DeltaLattice;
use crate::sample::{BivariateSample, RescaleTransform};
use crate::scalar::Scalar;
use crate::statistics::{compute_statistic, evaluate_on, StatisticKind, StatisticValue};

/// Concatenation of `a` (first `m` points) and `b` (last `n` points).
#[derive(Clone, Debug, PartialEq)]
pub struct PooledSample<T> {
    points: Vec<(T, T)>,
    m: usize,
    transform: RescaleTransform<T>,
}

impl<T: Scalar> PooledSample<T> {
    pub fn new(a: &BivariateSample<T>, b: &BivariateSample<T>) -> Self {
        let mut points = a.points().to_vec();
        points.extend_from_slice(b.points());
        Self {
            points,
            m: a.size(),
            transform: *a.transform(),
        }
    }

    pub fn points(&self) -> &[(T, T)] {
        &self.points
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.points.len() - self.m
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Splits a resample given by pooled indices: the first `m` go to `a`, the rest to `b`.
    pub fn split(&self, indices: &[usize]) -> Result<(BivariateSample<T>, BivariateSample<T>)> {
        if indices.len() != self.len() {
            return Err(Error::InvalidConfig(format!(
                "resample has {} indices, pooled sample has {} points",
                indices.len(),
                self.len()
            )));
        }
        let pick = |ix: &[usize]| ix.iter().map(|&i| self.points[i]).collect::<Vec<_>>();
        Ok((
            BivariateSample::with_transform(pick(&indices[..self.m]), self.transform)?,
            BivariateSample::with_transform(pick(&indices[self.m..]), self.transform)?,
        ))
    }
}

/// Random stream for replicate `replicate` under master `seed`.
pub fn replicate_rng(seed: u64, replicate: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(replicate);
    rng
}

fn draw_indices<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Vec<usize> {
    (0..len).map(|_| rng.gen_range(0..len)).collect()
}

/// One pooled resample with replacement, split back into sizes `m` and `n`.
pub fn resample_pooled<T: Scalar, R: Rng + ?Sized>(
    pooled: &PooledSample<T>,
    rng: &mut R,
) -> Result<(BivariateSample<T>, BivariateSample<T>)> {
    let indices = draw_indices(pooled.len(), rng);
    pooled.split(&indices)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BootstrapConfig {
    pub replicates: usize,
    pub seed: u64,
    pub beta: f64,
    /// Worker threads; `None` uses the ambient rayon pool.
    pub workers: Option<usize>,
}

impl Default for BootstrapConfig {
    fn default() -> Self {
        Self {
            replicates: 999,
            seed: 0,
            beta: 0.05,
            workers: None,
        }
    }
}

impl BootstrapConfig {
    pub fn validate(&self) -> Result<()> {
        if self.replicates == 0 {
            return Err(Error::InvalidConfig("replicates must be at least 1".into()));
        }
        if !(self.beta > 0.0 && self.beta < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "level must lie in (0, 1), got {}",
                self.beta
            )));
        }
        if self.workers == Some(0) {
            return Err(Error::InvalidConfig("workers must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Decision {
    Reject,
    FailToReject,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BootstrapDistribution<T> {
    pub kind: StatisticKind,
    /// Replicate statistics in replicate order.
    pub values: Vec<T>,
    pub observed: StatisticValue<T>,
    pub critical_value: T,
    pub p_value: f64,
    pub seed: u64,
    pub beta: f64,
}

impl<T: Scalar> BootstrapDistribution<T> {
    pub fn decision(&self) -> Decision {
        if self.observed.value > self.critical_value {
            Decision::Reject
        } else {
            Decision::FailToReject
        }
    }

    pub fn replicates(&self) -> usize {
        self.values.len()
    }
}

fn sorted<T: Scalar>(values: &[T]) -> Vec<T> {
    let mut v = values.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).expect("finite statistics"));
    v
}

/// Smallest replicate value `t` with `#{values > t} / B <= beta`.
pub fn critical_value<T: Scalar>(values: &[T], beta: f64) -> T {
    assert!(!values.is_empty(), "empty bootstrap distribution");
    let v = sorted(values);
    let b = v.len() as f64;
    let mut i = 0;
    while i < v.len() {
        // first index past the run of values equal to v[i]
        let end = i + v[i..].partition_point(|&x| x <= v[i]);
        let above = (v.len() - end) as f64;
        if above / b <= beta {
            return v[i];
        }
        i = end;
    }
    v[v.len() - 1]
}

/// `(1 + #{values >= observed}) / (B + 1)`
pub fn p_value<T: Scalar>(values: &[T], observed: T) -> f64 {
    let at_least = values.iter().filter(|&&v| v >= observed).count();
    (1 + at_least) as f64 / (values.len() + 1) as f64
}

/// Rejects when the observed statistic strictly exceeds the level-`beta` critical value.
pub fn decide<T: Scalar>(dist: &BootstrapDistribution<T>, beta: f64) -> Decision {
    if dist.observed.value > critical_value(&dist.values, beta) {
        Decision::Reject
    } else {
        Decision::FailToReject
    }
}

fn in_pool<R: Send>(workers: Option<usize>, job: impl FnOnce() -> R + Send) -> Result<R> {
    match workers {
        None => Ok(job()),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map_err(|e| Error::InvalidConfig(e.to_string()))?;
            Ok(pool.install(job))
        }
    }
}

pub fn bootstrap_statistic<T: Scalar>(
    kind: StatisticKind,
    a: &BivariateSample<T>,
    b: &BivariateSample<T>,
    cfg: &BootstrapConfig,
) -> Result<BootstrapDistribution<T>> {
    Ok(bootstrap_statistics(&[kind], a, b, cfg)?.remove(0))
}

/// Bootstraps several statistics over the same resamples.
///
/// Each replicate is evaluated on the pooled combined grid: resampled
/// coordinates are a subset of it, and extra grid lines never change a
/// supremum because the surfaces are constant or bilinear between the
/// resample's own coordinates.
pub fn bootstrap_statistics<T: Scalar>(
    kinds: &[StatisticKind],
    a: &BivariateSample<T>,
    b: &BivariateSample<T>,
    cfg: &BootstrapConfig,
) -> Result<Vec<BootstrapDistribution<T>>> {
    cfg.validate()?;
    let observed = kinds
        .iter()
        .map(|&k| compute_statistic(k, a, b))
        .collect::<Result<Vec<_>>>()?;

    let grid = combined_grid(a, b);
    let pooled = PooledSample::new(a, b);
    let cells = grid.locate(pooled.points())?;
    let (m, total) = (pooled.m(), pooled.len());

    let replicate = |r: usize| -> Vec<T> {
        let mut rng = replicate_rng(cfg.seed, r as u64);
        let draws: Vec<(u32, u32)> = draw_indices(total, &mut rng)
            .into_iter()
            .map(|i| cells[i])
            .collect();
        let (da, db) = draws.split_at(m);
        let lattice = DeltaLattice::from_indices(&grid, da, db);
        kinds
            .iter()
            .map(|&k| evaluate_on(k, &lattice, da.len(), db.len()).value)
            .collect()
    };
    let per_replicate: Vec<Vec<T>> = in_pool(cfg.workers, || {
        (0..cfg.replicates).into_par_iter().map(replicate).collect()
    })?;

    Ok(kinds
        .iter()
        .zip(observed)
        .enumerate()
        .map(|(j, (&kind, observed))| {
            let values: Vec<T> = per_replicate.iter().map(|row| row[j]).collect();
            BootstrapDistribution {
                kind,
                critical_value: critical_value(&values, cfg.beta),
                p_value: p_value(&values, observed.value),
                values,
                observed,
                seed: cfg.seed,
                beta: cfg.beta,
            }
        })
        .collect())
}

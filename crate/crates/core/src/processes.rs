//! Sampled Wiener and Poisson trajectories built as cumulative sums of
//! independent increments on a uniform time grid.

use alloc::vec::Vec;

use crate::distributions::{poisson, NormalParams, NormalSampler, PoissonParams};
use crate::error::{Error, Result};
use crate::prng::Generator;

/// Uniform grid `t_i = t0 + i*h` for `i = 0..=n_steps`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    t0: f64,
    h: f64,
    n_steps: usize,
}

impl TimeGrid {
    pub fn new(t0: f64, h: f64, n_steps: usize) -> Result<Self> {
        if !t0.is_finite() || !(h > 0.0 && h.is_finite()) {
            return Err(Error::InvalidParams(
                "time grid needs finite t0 and step h > 0",
            ));
        }
        if n_steps == 0 {
            return Err(Error::InvalidParams("time grid needs at least one step"));
        }
        Ok(TimeGrid { t0, h, n_steps })
    }

    /// Grid over `[0, horizon]` with `round(horizon / h)` steps.
    pub fn over(horizon: f64, h: f64) -> Result<Self> {
        if !(horizon > 0.0 && horizon.is_finite()) || !(h > 0.0 && h.is_finite()) {
            return Err(Error::InvalidParams(
                "time grid needs horizon > 0 and step h > 0",
            ));
        }
        let n = libm::round(horizon / h);
        if n < 1.0 || n > usize::MAX as f64 {
            return Err(Error::InvalidParams("step larger than the horizon"));
        }
        Self::new(0.0, h, n as usize)
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn step(&self) -> f64 {
        self.h
    }

    pub fn n_steps(&self) -> usize {
        self.n_steps
    }

    #[inline]
    pub fn time(&self, i: usize) -> f64 {
        self.t0 + i as f64 * self.h
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        (0..=self.n_steps).map(move |i| self.time(i))
    }
}

/// Process values on a grid, stored row-major with `dims` columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    grid: TimeGrid,
    dims: usize,
    values: Vec<f64>,
}

impl Trajectory {
    /// `values.len()` must be `(n_steps + 1) * dims`.
    pub fn from_values(grid: TimeGrid, dims: usize, values: Vec<f64>) -> Result<Self> {
        if dims == 0 || values.len() != (grid.n_steps + 1) * dims {
            return Err(Error::InvalidParams(
                "trajectory shape does not match its grid",
            ));
        }
        Ok(Trajectory { grid, dims, values })
    }

    pub fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn rows(&self) -> usize {
        self.grid.n_steps + 1
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.dims..(i + 1) * self.dims]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Column `d` over all grid points.
    pub fn column(&self, d: usize) -> impl Iterator<Item = f64> + '_ {
        self.values.iter().skip(d).step_by(self.dims).copied()
    }

    pub fn last(&self) -> &[f64] {
        self.row(self.grid.n_steps)
    }
}

/// Cumulative sum of `n_steps * dims` increments, starting from zero.
///
/// Increments are consumed step by step, dimension by dimension. This is the
/// deterministic core of both process builders and the hook for injecting
/// known increments.
pub fn cumulative_trajectory<I>(grid: TimeGrid, dims: usize, increments: I) -> Result<Trajectory>
where
    I: IntoIterator<Item = f64>,
{
    if dims == 0 {
        return Err(Error::InvalidParams(
            "trajectory needs at least one dimension",
        ));
    }
    let mut src = increments.into_iter();
    let mut values = Vec::with_capacity((grid.n_steps + 1) * dims);
    values.resize(dims, 0.0);
    for i in 0..grid.n_steps {
        for d in 0..dims {
            let inc = src.next().ok_or(Error::SourceExhausted)?;
            let prev = values[i * dims + d];
            values.push(prev + inc);
        }
    }
    Ok(Trajectory { grid, dims, values })
}

/// `dims` independent Wiener coordinates; each increment is `N(0, h)`.
pub fn wiener_trajectory<G: Generator>(gen: G, grid: TimeGrid, dims: usize) -> Result<Trajectory> {
    let params = NormalParams::new(0.0, libm::sqrt(grid.h))?;
    let mut sampler = NormalSampler::new(gen, params);
    let n = grid.n_steps * dims;
    cumulative_trajectory(grid, dims, (0..n).map(|_| sampler.sample()))
}

/// Poisson counting process with intensity `lambda`; per-step counts are
/// `Poisson(lambda * h)`.
pub fn poisson_trajectory<G: Generator>(
    mut gen: G,
    grid: TimeGrid,
    lambda: f64,
) -> Result<Trajectory> {
    if !(lambda >= 0.0) {
        return Err(Error::InvalidParams("Poisson intensity must be >= 0"));
    }
    let params = PoissonParams::new(lambda * grid.h)?;
    let n = grid.n_steps;
    cumulative_trajectory(grid, 1, (0..n).map(|_| poisson(&mut gen, &params) as f64))
}

/// First differences per dimension, row-major `n_steps x dims`.
pub fn increments_of(traj: &Trajectory) -> Result<Vec<f64>> {
    if traj.rows() < 2 {
        return Err(Error::TooShort);
    }
    let d = traj.dims;
    Ok(traj.values[d..]
        .iter()
        .zip(&traj.values)
        .map(|(next, prev)| next - prev)
        .collect())
}

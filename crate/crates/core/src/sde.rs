//! Van der Pol-Duffing oscillator driven by a sampled Wiener signal.
//!
//! ```text
//! x' = y
//! y' = x (1 - x^2) - y + g x W(t)
//! ```
//!
//! `W` is piecewise constant: it jumps by one Gaussian increment at every
//! clock event `t0 + k h_s` (`k >= 1`) and is held in between. The ODE is
//! integrated with explicit Euler on a uniform grid whose step divides `h_s`,
//! so no step straddles an event.

use alloc::vec::Vec;

use crate::distributions::{NormalParams, NormalSampler};
use crate::error::{Error, Result};
use crate::prng::Generator;
use crate::processes::{TimeGrid, Trajectory};

/// Bound on `|x|` and `|y|` past which the run is declared divergent.
pub const DIVERGENCE_BOUND: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscState {
    pub x: f64,
    pub y: f64,
    pub t: f64,
}

/// Event clock: fires every `interval` seconds after `t0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleClock {
    t0: f64,
    interval: f64,
}

impl SampleClock {
    pub fn new(t0: f64, interval: f64) -> Result<Self> {
        if !t0.is_finite() || !(interval > 0.0 && interval.is_finite()) {
            return Err(Error::InvalidParams(
                "sample clock needs finite t0 and interval > 0",
            ));
        }
        Ok(SampleClock { t0, interval })
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn interval(&self) -> f64 {
        self.interval
    }
}

impl Default for SampleClock {
    fn default() -> Self {
        SampleClock {
            t0: 0.0,
            interval: 0.1,
        }
    }
}

/// Variance of the Wiener jump applied at each clock event.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IncrementVariance {
    /// `N(0, h_s)`: a true Wiener process sampled on the clock.
    #[default]
    Step,
    /// `N(0, 1)` per event regardless of the clock interval.
    Unit,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorConfig {
    pub x0: f64,
    pub y0: f64,
    pub t_end: f64,
    /// Upper bound for the Euler step; the step used is
    /// `h_s / ceil(h_s / euler_step)`.
    pub euler_step: f64,
    pub clock: SampleClock,
    pub gain: f64,
    pub increments: IncrementVariance,
}

impl Default for OscillatorConfig {
    fn default() -> Self {
        OscillatorConfig {
            x0: 2.0,
            y0: 0.0,
            t_end: 100.0,
            euler_step: 1e-3,
            clock: SampleClock::default(),
            gain: 1.0,
            increments: IncrementVariance::Step,
        }
    }
}

impl OscillatorConfig {
    fn validate(&self) -> Result<()> {
        if !(self.euler_step > 0.0) || self.euler_step > self.clock.interval {
            return Err(Error::InvalidParams(
                "Euler step must satisfy 0 < h_e <= h_s",
            ));
        }
        if !(self.t_end > self.clock.t0) || !self.t_end.is_finite() {
            return Err(Error::InvalidParams("t_end must lie after the clock start"));
        }
        if !(self.x0.is_finite() && self.y0.is_finite() && self.gain.is_finite()) {
            return Err(Error::InvalidParams(
                "initial state and gain must be finite",
            ));
        }
        Ok(())
    }

    /// Euler substeps per clock interval.
    pub fn substeps(&self) -> usize {
        // Guard against ratios like 0.1 / 0.001 = 100.00000000000001.
        let r = self.clock.interval / self.euler_step;
        let n = libm::ceil(r - 1e-9 * r);
        (n as usize).max(1)
    }
}

/// Right-hand side of the oscillator for a frozen noise value `w`.
#[inline]
pub fn vector_field(x: f64, y: f64, w: f64, gain: f64) -> (f64, f64) {
    (y, x * (1.0 - x * x) - y + gain * x * w)
}

/// Integrate the oscillator. The returned trajectory has columns
/// `(x, y, W)`; row `i` holds the state at `t_i` and the noise value in
/// force on `[t_i, t_{i+1})`.
pub fn simulate<G: Generator>(config: &OscillatorConfig, gen: G) -> Result<Trajectory> {
    config.validate()?;
    let clock = config.clock;
    let sub = config.substeps();
    let h = clock.interval / sub as f64;
    let span = config.t_end - clock.t0;
    let n_steps = libm::floor(span / h + 1e-9) as usize;
    let grid = TimeGrid::new(clock.t0, h, n_steps.max(1))?;

    let sigma = match config.increments {
        IncrementVariance::Step => libm::sqrt(clock.interval),
        IncrementVariance::Unit => 1.0,
    };
    let mut noise = NormalSampler::new(gen, NormalParams::new(0.0, sigma)?);

    let mut values = Vec::with_capacity((grid.n_steps() + 1) * 3);
    let (mut x, mut y, mut w) = (config.x0, config.y0, 0.0);
    for i in 0..=grid.n_steps() {
        if i > 0 && i % sub == 0 && config.gain != 0.0 {
            w += noise.sample();
        }
        values.extend_from_slice(&[x, y, w]);
        if i == grid.n_steps() {
            break;
        }
        let (dx, dy) = vector_field(x, y, w, config.gain);
        x += h * dx;
        y += h * dy;
        if !(x.abs() <= DIVERGENCE_BOUND && y.abs() <= DIVERGENCE_BOUND) {
            return Err(Error::Diverged {
                t: grid.time(i + 1),
            });
        }
    }
    Trajectory::from_values(grid, 3, values)
}

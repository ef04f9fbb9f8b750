//! Deterministic pseudo-random generation and stochastic-process building
//! blocks.
//!
//! * [`prng`]: congruential, lagged Fibonacci, multiple recursive,
//!   inversive, xorshift, KISS and Mersenne twister generators behind one
//!   [`Generator`] trait.
//! * [`distributions`]: unit-interval mapping, Box-Muller normals, Knuth
//!   Poisson variates.
//! * [`processes`]: Wiener and Poisson trajectories.
//! * [`stattests`]: chi-square, serial-correlation, low-bit and moment tests.
//! * [`sde`]: a noisy van der Pol-Duffing oscillator.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
// `!(x > 0.0)` style guards are used on purpose so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod distributions;
pub mod error;
pub mod modmath;
pub mod prng;
pub mod processes;
pub mod sde;
pub mod stattests;

pub use error::{Error, Result};
pub use modmath::Modulus;
pub use prng::{expand_seed, Generator, GeneratorKind};

//! Uniform pseudo-random generators.
//!
//! Every generator is a deterministic state machine behind the [`Generator`]
//! trait. Outputs are always delivered as `u64`; generators whose natural
//! range is 32 bits (KISS, jKISS, CMRG, MRG5) zero-extend. [`Generator::modulus`]
//! reports the exclusive upper bound of the output range, which is what the
//! unit-interval mapping divides by.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::distributions::{scale_by_modulus, UnitReal};
use crate::error::Result;
use crate::modmath::Modulus;

mod icg;
mod kiss;
mod lcg;
mod lfg;
mod mrg;
mod mt64;
mod xorshift;

pub use icg::{Icg, IcgParams};
pub use kiss::{Kiss, KissVariant};
pub use lcg::{Degree, Lcg, LcgParams, PolyCongruential, PolyCongruentialParams};
pub use lfg::Lfg;
pub use mrg::{Cmrg, CmrgParams, Mrg5, Mrg5Params};
pub use mt64::Mt64;
pub use xorshift::{XorShiftPlus, XorShiftStar};

/// Knuth's MMIX multiplier, also used for seed expansion.
pub const KNUTH_MULTIPLIER: u64 = 6_364_136_223_846_793_005;
/// Knuth's MMIX increment.
pub const KNUTH_INCREMENT: u64 = 1_442_695_040_888_963_407;

const EXPAND_WARMUP: usize = 16;

/// Common step interface for all uniform generators.
pub trait Generator {
    /// Advance the state one step and return the new output word.
    fn next_word(&mut self) -> u64;

    /// Exclusive upper bound of the values returned by [`next_word`](Self::next_word).
    fn modulus(&self) -> Modulus;

    /// Next output mapped to `[0, 1)` by dividing by the modulus.
    fn next_unit(&mut self) -> UnitReal {
        let m = self.modulus();
        scale_by_modulus(self.next_word(), m)
    }

    /// 32 when every output fits in a `u32`, 64 otherwise.
    fn word_bits(&self) -> u32 {
        if self.modulus().get() <= 1u128 << 32 {
            32
        } else {
            64
        }
    }
}

impl<G: Generator + ?Sized> Generator for &mut G {
    fn next_word(&mut self) -> u64 {
        (**self).next_word()
    }
    fn modulus(&self) -> Modulus {
        (**self).modulus()
    }
}

impl<G: Generator + ?Sized> Generator for Box<G> {
    fn next_word(&mut self) -> u64 {
        (**self).next_word()
    }
    fn modulus(&self) -> Modulus {
        (**self).modulus()
    }
}

/// Derive `count` words from a single seed.
///
/// Iterates the Knuth-constant LCG from `seed`, discards 16 warm-up outputs
/// and then takes `count` words. A zero word is replaced by the increment so
/// that no returned word is zero.
pub fn expand_seed(seed: u64, count: usize) -> Vec<u64> {
    let mut x = seed;
    let mut step = || {
        x = x
            .wrapping_mul(KNUTH_MULTIPLIER)
            .wrapping_add(KNUTH_INCREMENT);
        x
    };
    for _ in 0..EXPAND_WARMUP {
        step();
    }
    (0..count)
        .map(|_| match step() {
            0 => KNUTH_INCREMENT,
            w => w,
        })
        .collect()
}

/// Registry of the generators reachable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    Lcg,
    QuadCg,
    CubicCg,
    Lfg,
    Cmrg,
    Mrg5,
    Icg,
    XorShiftStar,
    XorShiftPlus,
    Kiss,
    JKiss,
    Mt64,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 12] = [
        GeneratorKind::Lcg,
        GeneratorKind::Lfg,
        GeneratorKind::Cmrg,
        GeneratorKind::Mrg5,
        GeneratorKind::Icg,
        GeneratorKind::XorShiftStar,
        GeneratorKind::XorShiftPlus,
        GeneratorKind::Kiss,
        GeneratorKind::JKiss,
        GeneratorKind::Mt64,
        GeneratorKind::QuadCg,
        GeneratorKind::CubicCg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::Lcg => "lcg",
            GeneratorKind::QuadCg => "quad-cg",
            GeneratorKind::CubicCg => "cubic-cg",
            GeneratorKind::Lfg => "lfg",
            GeneratorKind::Cmrg => "cmrg",
            GeneratorKind::Mrg5 => "mrg5",
            GeneratorKind::Icg => "icg",
            GeneratorKind::XorShiftStar => "xorshift-star",
            GeneratorKind::XorShiftPlus => "xorshift-plus",
            GeneratorKind::Kiss => "kiss",
            GeneratorKind::JKiss => "jkiss",
            GeneratorKind::Mt64 => "mt64",
        }
    }

    /// Build the generator with its default parameters from one seed word.
    ///
    /// Single-word generators take the seed directly (reduced by their
    /// modulus); multi-word generators draw their state from [`expand_seed`].
    /// Fails only for xorshift* with seed 0.
    pub fn build(self, seed: u64) -> Result<Box<dyn Generator + Send>> {
        Ok(match self {
            GeneratorKind::Lcg => Box::new(Lcg::new(LcgParams::knuth(), seed)),
            GeneratorKind::QuadCg => Box::new(PolyCongruential::new(
                PolyCongruentialParams::quadratic_default(),
                seed,
            )),
            GeneratorKind::CubicCg => Box::new(PolyCongruential::new(
                PolyCongruentialParams::cubic_default(),
                seed,
            )),
            GeneratorKind::Lfg => Box::new(Lfg::from_seed(seed)),
            GeneratorKind::Cmrg => Box::new(Cmrg::from_seed(seed)),
            GeneratorKind::Mrg5 => Box::new(Mrg5::from_seed(seed)),
            GeneratorKind::Icg => Box::new(Icg::from_seed(seed)),
            GeneratorKind::XorShiftStar => Box::new(XorShiftStar::new(seed)?),
            GeneratorKind::XorShiftPlus => Box::new(XorShiftPlus::from_seed(seed)),
            GeneratorKind::Kiss => Box::new(Kiss::from_seed(KissVariant::Kiss, seed)),
            GeneratorKind::JKiss => Box::new(Kiss::from_seed(KissVariant::JKiss, seed)),
            GeneratorKind::Mt64 => Box::new(Mt64::new(seed)),
        })
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Unknown generator name; the message lists the valid names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownGenerator(pub alloc::string::String);

impl fmt::Display for UnknownGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown generator '{}', expected one of: ", self.0)?;
        for (i, kind) in GeneratorKind::ALL.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(kind.name())?;
        }
        Ok(())
    }
}

impl core::error::Error for UnknownGenerator {}

impl FromStr for GeneratorKind {
    type Err = UnknownGenerator;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        GeneratorKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| UnknownGenerator(s.into()))
    }
}

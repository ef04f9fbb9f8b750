use super::{expand_seed, Generator};
use crate::error::{Error, Result};
use crate::modmath::Modulus;

/// Constant set of a KISS-family generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KissVariant {
    /// Marsaglia's KISS: congruential (69069, 123456), xorshift (13, 17, 5),
    /// multiply-with-carry multiplier 698769069.
    Kiss,
    /// Jones' jKISS: congruential (314527869, 1234567), xorshift (5, 7, 22),
    /// multiply-with-carry multiplier 4294584393.
    JKiss,
}

struct Constants {
    cong_mul: u32,
    cong_add: u32,
    shifts: (u32, u32, u32),
    mwc_mul: u64,
}

impl KissVariant {
    fn constants(self) -> Constants {
        match self {
            KissVariant::Kiss => Constants {
                cong_mul: 69_069,
                cong_add: 123_456,
                shifts: (13, 17, 5),
                mwc_mul: 698_769_069,
            },
            KissVariant::JKiss => Constants {
                cong_mul: 314_527_869,
                cong_add: 1_234_567,
                shifts: (5, 7, 22),
                mwc_mul: 4_294_584_393,
            },
        }
    }
}

/// KISS / jKISS: sum of a congruential word, a xorshift word and a
/// multiply-with-carry word, all 32-bit.
///
/// State layout follows the usual naming: `s[0]` congruential, `s[1]`
/// xorshift, `s[2]` MWC value, `s[3]` MWC carry.
#[derive(Debug, Clone)]
pub struct Kiss {
    variant: KissVariant,
    s: [u32; 4],
}

impl Kiss {
    pub fn new(variant: KissVariant, seeds: [u32; 4]) -> Result<Self> {
        if seeds[1] == 0 {
            return Err(Error::InvalidParams("KISS xorshift word must be nonzero"));
        }
        let a = variant.constants().mwc_mul;
        let (v, c) = (seeds[2] as u64, seeds[3] as u64);
        // Both MWC fixed points: (0, 0) and (2^32 - 1, a - 1).
        if (v == 0 && c == 0) || (v == u32::MAX as u64 && c == a - 1) {
            return Err(Error::InvalidParams(
                "KISS multiply-with-carry pair is a fixed point",
            ));
        }
        Ok(Kiss { variant, s: seeds })
    }

    /// State words from [`expand_seed`]; the carry is reduced below the MWC
    /// multiplier and degenerate words are nudged away from fixed points.
    pub fn from_seed(variant: KissVariant, seed: u64) -> Self {
        let a = variant.constants().mwc_mul;
        let w = expand_seed(seed, 4);
        let mut s = [
            (w[0] >> 32) as u32,
            (w[1] >> 32) as u32,
            (w[2] >> 32) as u32,
            ((w[3] >> 32) % a) as u32,
        ];
        if s[1] == 0 {
            s[1] = 1;
        }
        if s[2] == 0 || s[2] == u32::MAX {
            s[2] = 1;
        }
        Kiss { variant, s }
    }

    pub fn state(&self) -> [u32; 4] {
        self.s
    }

    #[inline]
    pub fn next_u32(&mut self) -> u32 {
        let k = self.variant.constants();
        let s = &mut self.s;
        s[0] = s[0].wrapping_mul(k.cong_mul).wrapping_add(k.cong_add);
        s[1] ^= s[1] << k.shifts.0;
        s[1] ^= s[1] >> k.shifts.1;
        s[1] ^= s[1] << k.shifts.2;
        let t = k.mwc_mul * s[2] as u64 + s[3] as u64;
        s[3] = (t >> 32) as u32;
        s[2] = t as u32;
        s[0].wrapping_add(s[1]).wrapping_add(s[2])
    }
}

impl Generator for Kiss {
    #[inline]
    fn next_word(&mut self) -> u64 {
        self.next_u32() as u64
    }

    fn modulus(&self) -> Modulus {
        Modulus::HALF_WORD
    }
}

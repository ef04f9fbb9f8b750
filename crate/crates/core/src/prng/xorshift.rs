use super::{expand_seed, Generator};
use crate::error::{Error, Result};
use crate::modmath::Modulus;

const STAR_MULTIPLIER: u64 = 2_685_821_657_736_338_717;

/// xorshift* with shifts (12, 25, 27) and an output multiply.
#[derive(Debug, Clone)]
pub struct XorShiftStar {
    x: u64,
}

impl XorShiftStar {
    pub fn new(seed: u64) -> Result<Self> {
        if seed == 0 {
            return Err(Error::ZeroState);
        }
        Ok(XorShiftStar { x: seed })
    }

    /// Internal word after the last shift round (before the multiply).
    pub fn state(&self) -> u64 {
        self.x
    }
}

impl Generator for XorShiftStar {
    #[inline]
    fn next_word(&mut self) -> u64 {
        let mut x = self.x;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.x = x;
        x.wrapping_mul(STAR_MULTIPLIER)
    }

    fn modulus(&self) -> Modulus {
        Modulus::WORD
    }
}

/// xorshift+ with two state words and shifts (23, 17, 26).
#[derive(Debug, Clone)]
pub struct XorShiftPlus {
    s: [u64; 2],
}

impl XorShiftPlus {
    pub fn new(seed1: u64, seed2: u64) -> Result<Self> {
        if seed1 == 0 && seed2 == 0 {
            return Err(Error::ZeroState);
        }
        Ok(XorShiftPlus { s: [seed1, seed2] })
    }

    pub fn from_seed(seed: u64) -> Self {
        let w = expand_seed(seed, 2);
        XorShiftPlus { s: [w[0], w[1]] }
    }

    pub fn state(&self) -> [u64; 2] {
        self.s
    }
}

impl Generator for XorShiftPlus {
    #[inline]
    fn next_word(&mut self) -> u64 {
        let mut x = self.s[0];
        let y = self.s[1];
        self.s[0] = y;
        x ^= x << 23;
        self.s[1] = x ^ y ^ (x >> 17) ^ (y >> 26);
        self.s[1].wrapping_add(y)
    }

    fn modulus(&self) -> Modulus {
        Modulus::WORD
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_seed_one() {
        let mut g = XorShiftStar::new(1).unwrap();
        let out = g.next_word();
        assert_eq!(g.state(), 33_554_433);
        assert_eq!(
            out as u128,
            (33_554_433u128 * STAR_MULTIPLIER as u128) % (1u128 << 64)
        );
    }

    #[test]
    fn plus_seeds_one_two() {
        let mut g = XorShiftPlus::new(1, 2).unwrap();
        assert_eq!(g.next_word(), 8_388_677);
        assert_eq!(g.state(), [2, 8_388_675]);
    }

    #[test]
    fn zero_states_rejected() {
        assert_eq!(XorShiftStar::new(0).unwrap_err(), Error::ZeroState);
        assert_eq!(XorShiftPlus::new(0, 0).unwrap_err(), Error::ZeroState);
        assert!(XorShiftPlus::new(0, 1).is_ok());
    }

    #[test]
    fn states_stay_nonzero() {
        let mut a = XorShiftStar::new(1).unwrap();
        let mut b = XorShiftPlus::new(0, 1).unwrap();
        for _ in 0..100_000 {
            a.next_word();
            b.next_word();
            assert_ne!(a.state(), 0);
            assert_ne!(b.state(), [0, 0]);
        }
    }
}

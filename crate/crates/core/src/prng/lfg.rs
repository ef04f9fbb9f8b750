use alloc::vec::Vec;

use super::{expand_seed, Generator};
use crate::error::{Error, Result};
use crate::modmath::Modulus;

/// Additive lagged Fibonacci generator, `x_n = (x_{n-na} + x_{n-nb}) mod 2^e`.
#[derive(Debug, Clone)]
pub struct Lfg {
    // Ring of the last max(na, nb) values; `pos` indexes the oldest.
    buf: Vec<u64>,
    pos: usize,
    lag_a: usize,
    lag_b: usize,
    mask: u64,
    bits: u32,
}

impl Lfg {
    pub const DEFAULT_LAGS: (usize, usize) = (55, 24);

    /// `initial` holds `max(lag_a, lag_b)` values, oldest first; they are
    /// reduced modulo `2^bits`.
    pub fn new(lags: (usize, usize), bits: u32, initial: &[u64]) -> Result<Self> {
        let (lag_a, lag_b) = lags;
        if lag_a == 0 || lag_b == 0 || lag_a == lag_b {
            return Err(Error::InvalidParams(
                "LFG lags must be distinct and positive",
            ));
        }
        if bits == 0 || bits > 64 {
            return Err(Error::InvalidParams("LFG word width must be 1..=64 bits"));
        }
        let len = lag_a.max(lag_b);
        if initial.len() != len {
            return Err(Error::InvalidParams(
                "LFG needs exactly max(lag_a, lag_b) initial values",
            ));
        }
        let mask = if bits == 64 {
            u64::MAX
        } else {
            (1u64 << bits) - 1
        };
        Ok(Lfg {
            buf: initial.iter().map(|&w| w & mask).collect(),
            pos: 0,
            lag_a,
            lag_b,
            mask,
            bits,
        })
    }

    /// Lags (55, 24) modulo 2^64, buffer filled by [`expand_seed`].
    pub fn from_seed(seed: u64) -> Self {
        let (a, b) = Self::DEFAULT_LAGS;
        Self::new((a, b), 64, &expand_seed(seed, a.max(b)))
            .expect("default LFG parameters are valid")
    }
}

impl Generator for Lfg {
    #[inline]
    fn next_word(&mut self) -> u64 {
        let len = self.buf.len();
        let xa = self.buf[(self.pos + len - self.lag_a) % len];
        let xb = self.buf[(self.pos + len - self.lag_b) % len];
        let x = xa.wrapping_add(xb) & self.mask;
        self.buf[self.pos] = x;
        self.pos += 1;
        if self.pos == len {
            self.pos = 0;
        }
        x
    }

    fn modulus(&self) -> Modulus {
        Modulus::pow2(self.bits).expect("bits checked at construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn fibonacci_mod_16() {
        let mut g = Lfg::new((2, 1), 4, &[1, 2]).unwrap();
        let got: Vec<u64> = (0..6).map(|_| g.next_word()).collect();
        assert_eq!(got, [3, 5, 8, 13, 5, 2]);
    }

    #[test]
    fn zero_buffer_is_fixed_point() {
        let mut g = Lfg::new((2, 1), 64, &[0, 0]).unwrap();
        assert!((0..100).all(|_| g.next_word() == 0));
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(Lfg::new((3, 3), 64, &[1, 2, 3]).is_err());
        assert!(Lfg::new((0, 3), 64, &[1, 2, 3]).is_err());
        assert!(Lfg::new((2, 1), 64, &[1, 2, 3]).is_err());
        assert!(Lfg::new((2, 1), 65, &[1, 2]).is_err());
    }

    #[test]
    fn low_bits_follow_parity_recurrence() {
        let mut g = Lfg::from_seed(7);
        let mut bits = vec![];
        // Seed bits come first in the sequence.
        bits.extend(expand_seed(7, 55).iter().map(|w| w & 1));
        for _ in 0..5000 {
            bits.push(g.next_word() & 1);
        }
        for n in 55..bits.len() {
            assert_eq!(bits[n], bits[n - 55] ^ bits[n - 24]);
        }
    }
}

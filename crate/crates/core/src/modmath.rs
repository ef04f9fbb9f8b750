//! Exact modular arithmetic for the congruential and multi-recursive
//! generators.
//!
//! Products are formed in 128-bit intermediates, so every operation is exact
//! for moduli up to and including 2^64.

use crate::error::{Error, Result};

/// A generator modulus in `[1, 2^64]`.
///
/// `2^64` cannot be stored in a `u64`, so the value is kept as `u128` and
/// arithmetic with it is plain word wrap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u128);

impl Modulus {
    /// The native word modulus, 2^64.
    pub const WORD: Modulus = Modulus(1u128 << 64);
    /// 2^32, the range of the 32-bit generators.
    pub const HALF_WORD: Modulus = Modulus(1u128 << 32);

    pub fn new(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParams("modulus must be at least 1"));
        }
        Ok(Modulus(m as u128))
    }

    /// `2^bits` for `bits` in `1..=64`.
    pub fn pow2(bits: u32) -> Result<Self> {
        if bits == 0 || bits > 64 {
            return Err(Error::InvalidParams(
                "power-of-two modulus needs 1..=64 bits",
            ));
        }
        Ok(Modulus(1u128 << bits))
    }

    #[inline]
    pub fn get(self) -> u128 {
        self.0
    }

    #[inline]
    pub fn is_word(self) -> bool {
        self.0 == 1u128 << 64
    }

    /// Exponent `e` when the modulus is `2^e`.
    pub fn log2_exact(self) -> Option<u32> {
        self.0.is_power_of_two().then(|| self.0.trailing_zeros())
    }

    /// Largest value a reduced residue can take.
    #[inline]
    pub fn max_residue(self) -> u64 {
        (self.0 - 1) as u64
    }

    #[inline]
    pub fn reduce(self, x: u128) -> u64 {
        (x % self.0) as u64
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        self.reduce(a as u128 * b as u128)
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        self.reduce(a as u128 + b as u128)
    }

    /// Number of bits needed to hold any residue.
    pub fn bits(self) -> u32 {
        128 - (self.0 - 1).leading_zeros()
    }
}

/// A residue together with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModInt {
    value: u64,
    modulus: u64,
}

impl ModInt {
    pub fn new(value: u64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidParams("modulus must be at least 1"));
        }
        Ok(ModInt {
            value: value % modulus,
            modulus,
        })
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn inverse(self) -> Result<Self> {
        Ok(ModInt {
            value: modinv(self.value, self.modulus)?,
            ..self
        })
    }
}

impl core::ops::Add<u64> for ModInt {
    type Output = ModInt;

    fn add(self, rhs: u64) -> ModInt {
        let v = (self.value as u128 + (rhs % self.modulus) as u128) % self.modulus as u128;
        ModInt {
            value: v as u64,
            ..self
        }
    }
}

impl core::ops::Mul<u64> for ModInt {
    type Output = ModInt;

    fn mul(self, rhs: u64) -> ModInt {
        ModInt {
            value: mulmod(self.value, rhs, self.modulus),
            ..self
        }
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Multiplicative inverse of `x` modulo `m` by the extended Euclidean
/// algorithm.
///
/// Works for any modulus `m >= 2`, prime or not, as long as `gcd(x, m) = 1`.
pub fn modinv(x: u64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::InvalidParams("modular inverse needs m >= 2"));
    }
    // Signed 128-bit so the Bezout coefficients never wrap for 64-bit moduli.
    let (mut old_r, mut r) = ((x % m) as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return Err(Error::NotCoprime { x, m });
    }
    Ok(signed_mod(old_s, m))
}

/// `a * b mod m`, exact for all 64-bit inputs.
#[inline]
pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    debug_assert!(m >= 1);
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Sign-correct reduction of `a` into `[0, m)`.
#[inline]
pub fn signed_mod(a: i128, m: u64) -> u64 {
    debug_assert!(m >= 1);
    a.rem_euclid(m as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn modinv_examples() {
        assert_eq!(modinv(3, 7), Ok(5));
        assert_eq!(modinv(1, 1_000_003), Ok(1));
        assert_eq!(modinv(2, 4), Err(Error::NotCoprime { x: 2, m: 4 }));
        assert_eq!(modinv(0, 7), Err(Error::NotCoprime { x: 0, m: 7 }));
        assert!(modinv(5, 1).is_err());
    }

    #[test]
    fn modinv_exhaustive_small_moduli() {
        for m in 2u64..=257 {
            for x in 0..m {
                match modinv(x, m) {
                    Ok(y) => {
                        assert!(y >= 1 && y < m);
                        assert_eq!(x * y % m, 1, "x={x} m={m}");
                    }
                    Err(_) => assert_ne!(gcd(x, m), 1, "x={x} m={m}"),
                }
            }
        }
    }

    #[test]
    fn modinv_near_word_boundary() {
        // 2^64 - 59 is the largest 64-bit prime.
        let p = u64::MAX - 58;
        for x in [1, 2, 3, p - 1, p - 2, 1 << 63] {
            let y = modinv(x, p).unwrap();
            assert_eq!(mulmod(x, y, p), 1);
        }
    }

    #[test]
    fn mulmod_examples() {
        assert_eq!(mulmod(1 << 32, 1 << 32, u64::MAX), 1);
        assert_eq!(mulmod(12345, 1, 100), 45);
    }

    #[test]
    fn signed_mod_examples() {
        assert_eq!(signed_mod(-1, 7), 6);
        assert_eq!(signed_mod(-183_326, 2_147_483_647), 2_147_300_321);
        assert_eq!(signed_mod(14, 7), 0);
    }

    #[test]
    fn modulus_helpers() {
        assert!(Modulus::WORD.is_word());
        assert_eq!(Modulus::WORD.log2_exact(), Some(64));
        assert_eq!(Modulus::new(10).unwrap().log2_exact(), None);
        assert_eq!(Modulus::pow2(4).unwrap().bits(), 4);
        assert_eq!(Modulus::new(2_147_483_647).unwrap().bits(), 31);
        assert_eq!(Modulus::WORD.mul(u64::MAX, u64::MAX), 1);
        assert!(Modulus::new(0).is_err());
        assert!(Modulus::pow2(65).is_err());
    }

    #[test]
    fn modint_arithmetic() {
        let x = ModInt::new(10, 7).unwrap();
        assert_eq!(x.value(), 3);
        assert_eq!((x * 5).value(), 1);
        assert_eq!((x + 4).value(), 0);
        assert_eq!(x.inverse().unwrap().value(), 5);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn signed_mod_is_periodic(a in -(1i128 << 100)..(1i128 << 100), m in 1u64.., k in -1000i128..1000) {
            let r = signed_mod(a, m);
            prop_assert!(r < m);
            prop_assert_eq!(signed_mod(a + k * m as i128, m), r);
        }

        #[test]
        fn mulmod_matches_bigint(a: u64, b: u64, m in 1u64..) {
            use num_bigint::BigUint;
            let expected = BigUint::from(a) * BigUint::from(b) % BigUint::from(m);
            prop_assert_eq!(BigUint::from(mulmod(a, b, m)), expected);
        }

        #[test]
        fn modinv_roundtrip(x in 1u64.., m in 2u64..) {
            if let Ok(y) = modinv(x, m) {
                prop_assert_eq!(mulmod(x % m, y, m), 1 % m);
                prop_assert_eq!(modinv(y, m).unwrap(), x % m);
            } else {
                prop_assert_ne!(gcd(x, m), 1);
            }
        }
    }
}

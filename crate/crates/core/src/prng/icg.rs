use super::{expand_seed, Generator};
use crate::error::{Error, Result};
use crate::modmath::{modinv, mulmod, Modulus};

/// Constants of `x <- (a * x^-1 + b) mod m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IcgParams {
    pub a: u64,
    pub b: u64,
    pub m: u64,
}

impl IcgParams {
    /// Prime modulus 2^31 - 1, so every nonzero state is invertible.
    pub const DEFAULT: IcgParams = IcgParams {
        a: 9102,
        b: 36_884_165,
        m: 2_147_483_647,
    };

    fn validate(&self) -> Result<()> {
        if self.m < 2 {
            return Err(Error::InvalidParams("ICG modulus must exceed 1"));
        }
        if self.a >= self.m || self.b >= self.m {
            return Err(Error::InvalidParams(
                "ICG multiplier and increment must be below the modulus",
            ));
        }
        Ok(())
    }
}

impl Default for IcgParams {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Inversive congruential generator.
///
/// The state 0 is inverted to 0, the usual convention for this generator.
/// With a composite modulus the state can reach a value sharing a factor
/// with `m`; [`Icg::try_next`] then returns
/// [`Error::NonInvertibleState`].
#[derive(Debug, Clone)]
pub struct Icg {
    params: IcgParams,
    x: u64,
}

impl Icg {
    pub fn new(params: IcgParams, seed: u64) -> Result<Self> {
        params.validate()?;
        Ok(Icg {
            x: seed % params.m,
            params,
        })
    }

    /// Default parameters, initial state from [`expand_seed`].
    pub fn from_seed(seed: u64) -> Self {
        let p = IcgParams::DEFAULT;
        Icg {
            x: expand_seed(seed, 1)[0] % p.m,
            params: p,
        }
    }

    pub fn state(&self) -> u64 {
        self.x
    }

    pub fn try_next(&mut self) -> Result<u64> {
        let IcgParams { a, b, m } = self.params;
        let inv = match self.x {
            0 => 0,
            x => modinv(x, m).map_err(|_| Error::NonInvertibleState { x, m })?,
        };
        self.x = ((mulmod(a, inv, m) as u128 + b as u128) % m as u128) as u64;
        Ok(self.x)
    }
}

impl Generator for Icg {
    /// # Panics
    /// When the state becomes non-invertible, which needs a composite
    /// modulus. Use [`Icg::try_next`] for those.
    fn next_word(&mut self) -> u64 {
        self.try_next()
            .expect("ICG state not invertible; use try_next with composite moduli")
    }

    fn modulus(&self) -> Modulus {
        Modulus::new(self.params.m).expect("m checked at construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod_seven_trace() {
        let mut g = Icg::new(IcgParams { a: 3, b: 2, m: 7 }, 1).unwrap();
        assert_eq!(g.try_next(), Ok(5));
        assert_eq!(g.try_next(), Ok(4));
        assert_eq!(g.try_next(), Ok(1));
    }

    #[test]
    fn increment_only() {
        let mut g = Icg::new(IcgParams { a: 0, b: 4, m: 11 }, 3).unwrap();
        for _ in 0..10 {
            assert_eq!(g.try_next(), Ok(4));
        }
    }

    #[test]
    fn composite_modulus_non_invertible() {
        let mut g = Icg::new(IcgParams { a: 3, b: 1, m: 8 }, 2).unwrap();
        assert_eq!(g.try_next(), Err(Error::NonInvertibleState { x: 2, m: 8 }));
    }

    #[test]
    fn zero_state_maps_to_increment() {
        let mut g = Icg::new(IcgParams { a: 3, b: 2, m: 7 }, 0).unwrap();
        assert_eq!(g.try_next(), Ok(2));
    }

    #[test]
    fn double_inverse_is_identity_for_prime() {
        let p = 10_007u64;
        for x in 1..p {
            assert_eq!(modinv(modinv(x, p).unwrap(), p).unwrap(), x);
        }
    }

    #[test]
    fn default_stream_never_fails() {
        let mut g = Icg::from_seed(5);
        for _ in 0..10_000 {
            assert!(g.try_next().unwrap() < IcgParams::DEFAULT.m);
        }
    }
}

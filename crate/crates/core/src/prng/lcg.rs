use super::{Generator, KNUTH_INCREMENT, KNUTH_MULTIPLIER};
use crate::error::{Error, Result};
use crate::modmath::Modulus;

/// Constants of `x <- (a*x + c) mod m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LcgParams {
    multiplier: u64,
    increment: u64,
    modulus: Modulus,
}

impl LcgParams {
    pub fn new(multiplier: u64, increment: u64, modulus: Modulus) -> Result<Self> {
        if modulus.get() <= 1 {
            return Err(Error::InvalidParams("LCG modulus must exceed 1"));
        }
        if multiplier as u128 >= modulus.get() || increment as u128 >= modulus.get() {
            return Err(Error::InvalidParams(
                "LCG multiplier and increment must be below the modulus",
            ));
        }
        Ok(LcgParams {
            multiplier,
            increment,
            modulus,
        })
    }

    /// Knuth's MMIX constants with `m = 2^64`.
    pub fn knuth() -> Self {
        LcgParams {
            multiplier: KNUTH_MULTIPLIER,
            increment: KNUTH_INCREMENT,
            modulus: Modulus::WORD,
        }
    }

    pub fn multiplier(&self) -> u64 {
        self.multiplier
    }

    pub fn increment(&self) -> u64 {
        self.increment
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }
}

impl Default for LcgParams {
    fn default() -> Self {
        Self::knuth()
    }
}

/// Linear congruential generator.
#[derive(Debug, Clone)]
pub struct Lcg {
    params: LcgParams,
    x: u64,
}

impl Lcg {
    /// The seed is reduced modulo `m`.
    pub fn new(params: LcgParams, seed: u64) -> Self {
        Lcg {
            x: params.modulus.reduce(seed as u128),
            params,
        }
    }

    pub fn state(&self) -> u64 {
        self.x
    }
}

impl Generator for Lcg {
    #[inline]
    fn next_word(&mut self) -> u64 {
        let p = &self.params;
        self.x = p
            .modulus
            .reduce(p.multiplier as u128 * self.x as u128 + p.increment as u128);
        self.x
    }

    fn modulus(&self) -> Modulus {
        self.params.modulus
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degree {
    Quadratic,
    Cubic,
}

impl TryFrom<u8> for Degree {
    type Error = Error;

    fn try_from(d: u8) -> Result<Self> {
        match d {
            2 => Ok(Degree::Quadratic),
            3 => Ok(Degree::Cubic),
            _ => Err(Error::InvalidParams(
                "polynomial congruential degree must be 2 or 3",
            )),
        }
    }
}

/// Coefficients of the quadratic or cubic congruential recurrence.
///
/// Quadratic: `x <- (a*x^2 + b*x + d) mod m` (`c` is ignored).
/// Cubic: `x <- (a*x^3 + b*x^2 + c*x + d) mod m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyCongruentialParams {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    pub modulus: Modulus,
    pub degree: Degree,
}

impl PolyCongruentialParams {
    /// `a` even, `b = a + 1 (mod 4)`, `d` odd: full period modulo `2^64`.
    pub fn quadratic_default() -> Self {
        PolyCongruentialParams {
            a: KNUTH_MULTIPLIER - 1,
            b: KNUTH_MULTIPLIER,
            c: 0,
            d: KNUTH_INCREMENT,
            modulus: Modulus::WORD,
            degree: Degree::Quadratic,
        }
    }

    /// `a`, `b` even and `c` odd, so the map is a permutation modulo `2^64`.
    pub fn cubic_default() -> Self {
        PolyCongruentialParams {
            a: 2_862_933_555_777_941_756,
            b: KNUTH_MULTIPLIER - 1,
            c: KNUTH_MULTIPLIER,
            d: KNUTH_INCREMENT,
            modulus: Modulus::WORD,
            degree: Degree::Cubic,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.modulus.get() <= 1 {
            return Err(Error::InvalidParams(
                "polynomial congruential modulus must exceed 1",
            ));
        }
        Ok(())
    }
}

/// Quadratic or cubic congruential generator.
#[derive(Debug, Clone)]
pub struct PolyCongruential {
    params: PolyCongruentialParams,
    x: u64,
}

impl PolyCongruential {
    /// Fails when `m <= 1`. The seed is reduced modulo `m`.
    pub fn try_new(params: PolyCongruentialParams, seed: u64) -> Result<Self> {
        params.validate()?;
        Ok(PolyCongruential {
            x: params.modulus.reduce(seed as u128),
            params,
        })
    }

    /// Infallible constructor for parameter sets known to be valid, such as
    /// the defaults.
    ///
    /// # Panics
    /// If `m <= 1`.
    pub fn new(params: PolyCongruentialParams, seed: u64) -> Self {
        Self::try_new(params, seed).expect("invalid polynomial congruential parameters")
    }
}

impl Generator for PolyCongruential {
    fn next_word(&mut self) -> u64 {
        let p = &self.params;
        let m = p.modulus;
        let x = self.x;
        // Horner form keeps every intermediate below m.
        let acc = match p.degree {
            Degree::Quadratic => m.mul(m.add(m.mul(m.reduce(p.a as u128), x), p.b), x),
            Degree::Cubic => {
                let t = m.add(m.mul(m.reduce(p.a as u128), x), p.b);
                m.mul(m.add(m.mul(t, x), p.c), x)
            }
        };
        self.x = m.add(acc, p.d);
        self.x
    }

    fn modulus(&self) -> Modulus {
        self.params.modulus
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(a: u64, c: u64, m: u64) -> LcgParams {
        LcgParams::new(a, c, Modulus::new(m).unwrap()).unwrap()
    }

    #[test]
    fn knuth_seed_zero_gives_increment() {
        let mut g = Lcg::new(LcgParams::knuth(), 0);
        assert_eq!(g.next_word(), 1_442_695_040_888_963_407);
    }

    #[test]
    fn small_modulus_trace() {
        let mut g = Lcg::new(small(5, 1, 16), 1);
        let got: [u64; 4] = core::array::from_fn(|_| g.next_word());
        assert_eq!(got, [6, 15, 12, 13]);
    }

    #[test]
    fn identity_recurrence() {
        let mut g = Lcg::new(small(1, 0, 1000), 417);
        for _ in 0..50 {
            assert_eq!(g.next_word(), 417);
        }
    }

    #[test]
    fn rejects_bad_params() {
        assert!(LcgParams::new(1, 0, Modulus::new(1).unwrap()).is_err());
        assert!(LcgParams::new(16, 0, Modulus::new(16).unwrap()).is_err());
        assert!(LcgParams::new(3, 16, Modulus::new(16).unwrap()).is_err());
    }

    #[test]
    fn low_bit_alternates() {
        let mut g = Lcg::new(LcgParams::knuth(), 987_654_321);
        let mut prev = g.next_word() & 1;
        for _ in 0..1000 {
            let b = g.next_word() & 1;
            assert_ne!(b, prev);
            prev = b;
        }
    }

    fn poly(a: u64, b: u64, c: u64, d: u64, m: u64, degree: u8) -> PolyCongruentialParams {
        PolyCongruentialParams {
            a,
            b,
            c,
            d,
            modulus: Modulus::new(m).unwrap(),
            degree: Degree::try_from(degree).unwrap(),
        }
    }

    #[test]
    fn quadratic_square_mod_ten() {
        let mut g = PolyCongruential::try_new(poly(1, 0, 0, 0, 10, 2), 7).unwrap();
        assert_eq!(g.next_word(), 9);
    }

    #[test]
    fn cubic_identity() {
        let mut g = PolyCongruential::try_new(poly(0, 0, 1, 0, 1 << 40, 3), 31337).unwrap();
        for _ in 0..10 {
            assert_eq!(g.next_word(), 31337);
        }
    }

    #[test]
    fn quadratic_linear_case_matches_lcg() {
        let mut g = PolyCongruential::try_new(poly(0, 1, 0, 1, 16, 2), 3).unwrap();
        assert_eq!(g.next_word(), 4);
        let mut q = PolyCongruential::try_new(poly(0, 5, 0, 1, 16, 2), 1).unwrap();
        let mut l = Lcg::new(small(5, 1, 16), 1);
        for _ in 0..32 {
            assert_eq!(q.next_word(), l.next_word());
        }
    }

    #[test]
    fn invalid_degree() {
        assert!(Degree::try_from(4).is_err());
        assert!(Degree::try_from(1).is_err());
    }

    #[test]
    fn quadratic_default_has_full_period_mod_2_pow_12() {
        // Reducing the default coefficients modulo 2^12 keeps the full-period
        // conditions, so the orbit must visit all 4096 residues.
        let mut p = PolyCongruentialParams::quadratic_default();
        p.modulus = Modulus::pow2(12).unwrap();
        let mut g = PolyCongruential::try_new(p, 0).unwrap();
        let mut seen = [false; 4096];
        for _ in 0..4096 {
            seen[g.next_word() as usize] = true;
        }
        assert!(seen.iter().all(|&s| s));
    }
}

use super::{expand_seed, Generator};
use crate::error::{Error, Result};
use crate::modmath::{signed_mod, Modulus};

/// Coefficients and moduli of the combined multiple recursive generator.
///
/// ```text
/// x_n = (a1 x_{n-1} + a2 x_{n-2} + a3 x_{n-3}) mod m1
/// y_n = (b1 y_{n-1} + b2 y_{n-2} + b3 y_{n-3}) mod m2
/// z_n = (x_n - y_n) mod m1
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CmrgParams {
    pub a: [i64; 3],
    pub b: [i64; 3],
    pub m1: u64,
    pub m2: u64,
}

impl CmrgParams {
    /// The GSL parameter set.
    pub const GSL: CmrgParams = CmrgParams {
        a: [0, 63_308, -183_326],
        b: [86_098, 0, -539_608],
        m1: 2_147_483_647,
        m2: 2_145_483_479,
    };
}

impl Default for CmrgParams {
    fn default() -> Self {
        Self::GSL
    }
}

/// Combined multiple recursive generator. Histories are stored most recent
/// first: `x[0] = x_{n-1}`.
#[derive(Debug, Clone)]
pub struct Cmrg {
    params: CmrgParams,
    x: [u64; 3],
    y: [u64; 3],
}

impl Cmrg {
    /// Histories must already be reduced (`x[i] < m1`, `y[i] < m2`). A zero
    /// history is accepted: that component then stays at zero.
    pub fn new(params: CmrgParams, x: [u64; 3], y: [u64; 3]) -> Result<Self> {
        if params.m1 < 2 || params.m2 < 2 {
            return Err(Error::InvalidParams("CMRG moduli must exceed 1"));
        }
        if x.iter().any(|&v| v >= params.m1) || y.iter().any(|&v| v >= params.m2) {
            return Err(Error::InvalidParams("CMRG history outside [0, m)"));
        }
        Ok(Cmrg { params, x, y })
    }

    /// GSL parameters; both histories drawn from [`expand_seed`] and kept
    /// nonzero.
    pub fn from_seed(seed: u64) -> Self {
        let p = CmrgParams::GSL;
        let w = expand_seed(seed, 6);
        let x = core::array::from_fn(|i| nonzero_residue(w[i], p.m1));
        let y = core::array::from_fn(|i| nonzero_residue(w[3 + i], p.m2));
        Cmrg { params: p, x, y }
    }

    pub fn histories(&self) -> ([u64; 3], [u64; 3]) {
        (self.x, self.y)
    }
}

fn step3(coef: &[i64; 3], hist: &mut [u64; 3], m: u64) -> u64 {
    let sum: i128 = coef
        .iter()
        .zip(hist.iter())
        .map(|(&c, &h)| c as i128 * h as i128)
        .sum();
    let next = signed_mod(sum, m);
    *hist = [next, hist[0], hist[1]];
    next
}

pub(crate) fn nonzero_residue(w: u64, m: u64) -> u64 {
    match w % m {
        0 => 1,
        r => r,
    }
}

impl Generator for Cmrg {
    #[inline]
    fn next_word(&mut self) -> u64 {
        let p = self.params;
        let xn = step3(&p.a, &mut self.x, p.m1);
        let yn = step3(&p.b, &mut self.y, p.m2);
        signed_mod(xn as i128 - yn as i128, p.m1)
    }

    fn modulus(&self) -> Modulus {
        Modulus::new(self.params.m1).expect("m1 checked at construction")
    }
}

/// `x_n = (a1 x_{n-1} + a5 x_{n-5}) mod m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mrg5Params {
    pub a1: u64,
    pub a5: u64,
    pub m: u64,
}

impl Mrg5Params {
    /// The GSL parameter set.
    pub const GSL: Mrg5Params = Mrg5Params {
        a1: 107_374_182,
        a5: 104_480,
        m: 2_147_483_647,
    };
}

impl Default for Mrg5Params {
    fn default() -> Self {
        Self::GSL
    }
}

/// Five-term multiple recursive generator; history most recent first.
#[derive(Debug, Clone)]
pub struct Mrg5 {
    params: Mrg5Params,
    hist: [u64; 5],
}

impl Mrg5 {
    pub fn new(params: Mrg5Params, hist: [u64; 5]) -> Result<Self> {
        if params.m < 2 {
            return Err(Error::InvalidParams("MRG modulus must exceed 1"));
        }
        if hist.iter().any(|&v| v >= params.m) {
            return Err(Error::InvalidParams("MRG history outside [0, m)"));
        }
        Ok(Mrg5 { params, hist })
    }

    pub fn from_seed(seed: u64) -> Self {
        let p = Mrg5Params::GSL;
        let w = expand_seed(seed, 5);
        Mrg5 {
            params: p,
            hist: core::array::from_fn(|i| nonzero_residue(w[i], p.m)),
        }
    }
}

impl Generator for Mrg5 {
    #[inline]
    fn next_word(&mut self) -> u64 {
        let p = self.params;
        let sum = p.a1 as u128 * self.hist[0] as u128 + p.a5 as u128 * self.hist[4] as u128;
        let next = (sum % p.m as u128) as u64;
        self.hist.rotate_right(1);
        self.hist[0] = next;
        next
    }

    fn modulus(&self) -> Modulus {
        Modulus::new(self.params.m).expect("m checked at construction")
    }
}

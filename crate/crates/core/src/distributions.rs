//! Unit-interval mapping, normal (Box-Muller) and Poisson (Knuth) variates.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::modmath::Modulus;
use crate::prng::Generator;

/// A real number in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct UnitReal(f64);

impl UnitReal {
    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(UnitReal(value))
        } else {
            Err(Error::DomainError("unit real must lie in [0, 1]"))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

impl From<UnitReal> for f64 {
    fn from(u: UnitReal) -> f64 {
        u.0
    }
}

const TWO_POW_M53: f64 = 1.0 / (1u64 << 53) as f64;
const LARGEST_BELOW_ONE: f64 = 1.0 - TWO_POW_M53;

/// `word / m`, always in `[0, 1)`.
///
/// Power-of-two moduli wider than 53 bits keep the top 53 bits of the word,
/// which is exact. Other moduli divide in floating point; a quotient that
/// rounds up to 1 is pulled back to the largest double below 1.
pub fn scale_by_modulus(word: u64, m: Modulus) -> UnitReal {
    debug_assert!((word as u128) < m.get());
    match m.log2_exact() {
        Some(bits) if bits > 53 => UnitReal((word >> (bits - 53)) as f64 * TWO_POW_M53),
        _ => {
            let q = word as f64 / m.get() as f64;
            UnitReal(if q < 1.0 { q } else { LARGEST_BELOW_ONE })
        }
    }
}

/// Divide every element by the sequence maximum; the maximum maps to 1.
pub fn normalize_by_max(words: &[u64]) -> Result<Vec<UnitReal>> {
    let max = *words.iter().max().ok_or(Error::EmptySequence)?;
    if max == 0 {
        return Err(Error::AllZero);
    }
    let max = max as f64;
    Ok(words.iter().map(|&w| UnitReal(w as f64 / max)).collect())
}

/// Standard Box-Muller transform of `x` in `(0, 1)` and `y` in `[0, 1]`.
pub fn box_muller_standard(x: f64, y: f64) -> Result<(f64, f64)> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::DomainError(
            "Box-Muller radius input must lie in (0, 1)",
        ));
    }
    if !(0.0..=1.0).contains(&y) {
        return Err(Error::DomainError(
            "Box-Muller angle input must lie in [0, 1]",
        ));
    }
    let r = libm::sqrt(-2.0 * libm::log(x));
    let theta = 2.0 * PI * y;
    Ok((r * libm::cos(theta), r * libm::sin(theta)))
}

/// Result of the polar transform.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarSample {
    pub z1: f64,
    pub z2: f64,
    /// Pairs consumed and discarded before the accepted one.
    pub rejected: usize,
}

/// Polar Box-Muller: consume pairs from `[-1, 1]^2` until `0 < s <= 1`.
pub fn box_muller_polar<I>(pairs: I) -> Result<PolarSample>
where
    I: IntoIterator<Item = (f64, f64)>,
{
    for (rejected, (x, y)) in pairs.into_iter().enumerate() {
        let s = x * x + y * y;
        if s > 0.0 && s <= 1.0 {
            let f = libm::sqrt(-2.0 * libm::log(s) / s);
            return Ok(PolarSample {
                z1: x * f,
                z2: y * f,
                rejected,
            });
        }
    }
    Err(Error::SourceExhausted)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalParams {
    mu: f64,
    sigma: f64,
}

impl NormalParams {
    pub const STANDARD: NormalParams = NormalParams {
        mu: 0.0,
        sigma: 1.0,
    };

    pub fn new(mu: f64, sigma: f64) -> Result<Self> {
        if !mu.is_finite() || !(sigma > 0.0 && sigma.is_finite()) {
            return Err(Error::InvalidParams("normal needs finite mu and sigma > 0"));
        }
        Ok(NormalParams { mu, sigma })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }
}

/// `sigma * z + mu`.
#[inline]
pub fn normal_general(z: f64, params: &NormalParams) -> f64 {
    params.sigma * z + params.mu
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoissonParams {
    lambda: f64,
}

impl PoissonParams {
    pub fn new(lambda: f64) -> Result<Self> {
        if !(lambda >= 0.0 && lambda.is_finite()) {
            return Err(Error::InvalidParams("Poisson needs finite lambda >= 0"));
        }
        Ok(PoissonParams { lambda })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }
}

/// Knuth's multiplicative Poisson sampler.
///
/// Multiplies uniforms into `p` while `p > exp(-lambda)` and returns the
/// number of factors minus one, so exactly `result + 1` uniforms are read.
/// Cost grows linearly with `lambda`, and `exp(-lambda)` underflows past
/// `lambda ~ 745`.
pub fn poisson_sample<I>(uniforms: I, params: &PoissonParams) -> Result<u64>
where
    I: IntoIterator<Item = f64>,
{
    let threshold = libm::exp(-params.lambda);
    let mut p = 1.0;
    let mut k = 0u64;
    let mut source = uniforms.into_iter();
    loop {
        k += 1;
        p *= source.next().ok_or(Error::SourceExhausted)?;
        if p <= threshold {
            return Ok(k - 1);
        }
    }
}

/// Which Box-Muller form a [`NormalSampler`] uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BoxMuller {
    #[default]
    Polar,
    Standard,
}

/// Normal variates from a uniform generator. Each transform yields two
/// values; the second is handed out on the following call.
#[derive(Debug, Clone)]
pub struct NormalSampler<G> {
    gen: G,
    params: NormalParams,
    method: BoxMuller,
    spare: Option<f64>,
    rejected: u64,
}

impl<G: Generator> NormalSampler<G> {
    pub fn new(gen: G, params: NormalParams) -> Self {
        Self::with_method(gen, params, BoxMuller::Polar)
    }

    pub fn with_method(gen: G, params: NormalParams, method: BoxMuller) -> Self {
        NormalSampler {
            gen,
            params,
            method,
            spare: None,
            rejected: 0,
        }
    }

    /// Draw one standard normal.
    pub fn standard(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        let (z1, z2) = match self.method {
            BoxMuller::Polar => {
                let gen = &mut self.gen;
                let pairs = core::iter::repeat_with(|| (symmetric_unit(gen), symmetric_unit(gen)));
                let s = box_muller_polar(pairs).expect("generator streams are unbounded");
                self.rejected += s.rejected as u64;
                (s.z1, s.z2)
            }
            BoxMuller::Standard => {
                let x = open_unit(&mut self.gen);
                let y = self.gen.next_unit().get();
                box_muller_standard(x, y).expect("inputs drawn inside the domain")
            }
        };
        self.spare = Some(z2);
        z1
    }

    pub fn sample(&mut self) -> f64 {
        let z = self.standard();
        normal_general(z, &self.params)
    }

    /// Total pairs rejected by the polar form so far.
    pub fn rejected_pairs(&self) -> u64 {
        self.rejected
    }

    pub fn into_inner(self) -> G {
        self.gen
    }
}

/// Uniform on `[-1, 1)`: `2 * (word / m) - 1`.
#[inline]
pub fn symmetric_unit<G: Generator + ?Sized>(gen: &mut G) -> f64 {
    2.0 * gen.next_unit().get() - 1.0
}

/// Uniform on `(0, 1)`; zero draws are rejected and redrawn.
pub fn open_unit<G: Generator + ?Sized>(gen: &mut G) -> f64 {
    loop {
        let u = gen.next_unit().get();
        if u > 0.0 {
            return u;
        }
    }
}

/// One Poisson variate using uniforms from `gen`.
pub fn poisson<G: Generator + ?Sized>(gen: &mut G, params: &PoissonParams) -> u64 {
    let uniforms = core::iter::repeat_with(|| gen.next_unit().get());
    poisson_sample(uniforms, params).expect("generator streams are unbounded")
}

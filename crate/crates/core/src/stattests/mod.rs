//! A small statistical battery for uniform generators.
//!
//! Every test reports a statistic and a p-value where small values signal a
//! defect. Verdicts use DieHarder-style cutoffs: `p < 1e-6` fails,
//! `p < 0.005` is weak, anything else passes.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use crate::distributions::scale_by_modulus;
use crate::error::{Error, Result};
use crate::prng::Generator;

pub mod gamma;

pub use gamma::{chi_square_sf, gamma_p, gamma_q, normal_two_sided_p};

pub const FAIL_P: f64 = 1e-6;
pub const WEAK_P: f64 = 0.005;

/// Periods at or below this length fail [`low_bit_period`].
pub const SHORT_PERIOD: usize = 64;

/// Samples required by the full battery.
pub const BATTERY_MIN_SAMPLES: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Weak,
    Fail,
}

impl Verdict {
    pub fn from_p_value(p: f64) -> Verdict {
        if !(p >= FAIL_P) {
            Verdict::Fail
        } else if p < WEAK_P {
            Verdict::Weak
        } else {
            Verdict::Pass
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Weak => "WEAK",
            Verdict::Fail => "FAIL",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TestOutcome {
    pub name: &'static str,
    pub statistic: f64,
    pub p_value: f64,
    pub verdict: Verdict,
}

impl TestOutcome {
    fn from_p(name: &'static str, statistic: f64, p_value: f64) -> Self {
        let p_value = p_value.clamp(0.0, 1.0);
        TestOutcome {
            name,
            statistic,
            p_value,
            verdict: Verdict::from_p_value(p_value),
        }
    }
}

fn require(needed: usize, got: usize) -> Result<()> {
    if got < needed {
        Err(Error::TooFewSamples { needed, got })
    } else {
        Ok(())
    }
}

/// Equal-width chi-square test for uniformity on `[0, 1]`, `bins - 1`
/// degrees of freedom. A value of exactly 1 counts in the last bin.
pub fn chi_square_uniform(samples: &[f64], bins: usize) -> Result<TestOutcome> {
    if bins < 2 {
        return Err(Error::InvalidParams("chi-square needs at least two bins"));
    }
    require(10 * bins, samples.len())?;
    let mut counts = alloc::vec![0u64; bins];
    for &u in samples {
        if !(0.0..=1.0).contains(&u) {
            return Err(Error::DomainError("chi-square samples must lie in [0, 1]"));
        }
        let b = ((u * bins as f64) as usize).min(bins - 1);
        counts[b] += 1;
    }
    let expected = samples.len() as f64 / bins as f64;
    let stat: f64 = counts
        .iter()
        .map(|&c| {
            let d = c as f64 - expected;
            d * d / expected
        })
        .sum();
    Ok(TestOutcome::from_p(
        "chi-square-uniform",
        stat,
        chi_square_sf(stat, (bins - 1) as f64),
    ))
}

/// Sample autocorrelation at `lag`; under independence `rho ~ N(0, 1/N)`.
/// The statistic reported is `rho`.
pub fn serial_correlation(samples: &[f64], lag: usize) -> Result<TestOutcome> {
    require(1000, samples.len())?;
    if lag == 0 || lag >= samples.len() {
        return Err(Error::InvalidParams("lag must be in 1..N"));
    }
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    let denom: f64 = samples.iter().map(|x| (x - mean) * (x - mean)).sum();
    let num: f64 = samples
        .iter()
        .zip(&samples[lag..])
        .map(|(a, b)| (a - mean) * (b - mean))
        .sum();
    let rho = if denom > 0.0 { num / denom } else { 0.0 };
    let p = if denom > 0.0 {
        normal_two_sided_p(rho * libm::sqrt(n))
    } else {
        // A constant sequence carries no randomness at all.
        0.0
    };
    Ok(TestOutcome::from_p("serial-correlation", rho, p))
}

/// Minimal period of the least-significant bit over `words`, if one with
/// at least two full repetitions exists.
pub fn low_bit_period_of(words: &[u64]) -> Option<usize> {
    let bits: Vec<u8> = words.iter().map(|w| (w & 1) as u8).collect();
    let n = bits.len();
    (1..=n / 2).find(|&p| (0..n - p).all(|i| bits[i] == bits[i + p]))
}

/// Detect a short period in the least-significant output bit.
///
/// The statistic is the period found (0 when none). The p-value is 0 for a
/// period of at most [`SHORT_PERIOD`] and 1 otherwise.
pub fn low_bit_period<G: Generator + ?Sized>(gen: &mut G, max_check: usize) -> Result<TestOutcome> {
    if max_check < 4 {
        return Err(Error::InvalidParams(
            "low-bit period check needs max_check >= 4",
        ));
    }
    let words: Vec<u64> = (0..max_check).map(|_| gen.next_word()).collect();
    Ok(low_bit_outcome(&words))
}

fn low_bit_outcome(words: &[u64]) -> TestOutcome {
    let period = low_bit_period_of(words);
    let short = matches!(period, Some(p) if p <= SHORT_PERIOD);
    TestOutcome::from_p(
        "low-bit-period",
        period.unwrap_or(0) as f64,
        if short { 0.0 } else { 1.0 },
    )
}

/// Compare the sample mean and (population) variance with expectations.
///
/// Both z-scores use their own standard error: `sqrt(var / N)` for the mean,
/// `sqrt((m4 - s^4) / N)` for the variance, with `m4` the sample fourth
/// central moment. The statistic is the larger `|z|`; the test passes when it
/// is at most `multiplier`. The p-value is the two-sided normal tail of that
/// `|z|`, doubled for the two comparisons.
pub fn moments_test(
    samples: &[f64],
    mean: f64,
    variance: f64,
    multiplier: f64,
) -> Result<TestOutcome> {
    require(1000, samples.len())?;
    if !(variance > 0.0) || !(multiplier > 0.0) {
        return Err(Error::InvalidParams(
            "moments test needs variance > 0 and multiplier > 0",
        ));
    }
    let n = samples.len() as f64;
    let m = samples.iter().sum::<f64>() / n;
    let (mut m2, mut m4) = (0.0, 0.0);
    for &x in samples {
        let d = (x - m) * (x - m);
        m2 += d;
        m4 += d * d;
    }
    m2 /= n;
    m4 /= n;
    let z_mean = z_score(m - mean, libm::sqrt(variance / n));
    let z_var = z_score(m2 - variance, libm::sqrt((m4 - m2 * m2).max(0.0) / n));
    let z = z_mean.abs().max(z_var.abs());
    let p = (2.0 * normal_two_sided_p(z)).min(1.0);
    Ok(TestOutcome {
        name: "moments",
        statistic: z,
        p_value: p,
        verdict: if z <= multiplier {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
    })
}

fn z_score(dev: f64, se: f64) -> f64 {
    if dev == 0.0 {
        0.0
    } else if se > 0.0 {
        dev / se
    } else {
        f64::INFINITY
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Summary {
    pub fail: usize,
    pub weak: usize,
    pub pass: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BatteryReport {
    pub generator: String,
    pub samples: usize,
    pub outcomes: Vec<TestOutcome>,
}

impl BatteryReport {
    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for o in &self.outcomes {
            match o.verdict {
                Verdict::Fail => s.fail += 1,
                Verdict::Weak => s.weak += 1,
                Verdict::Pass => s.pass += 1,
            }
        }
        s
    }

    /// `test,statistic,p,verdict` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("test,statistic,p,verdict\n");
        for o in &self.outcomes {
            let _ = writeln!(
                out,
                "{},{:?},{:?},{}",
                o.name, o.statistic, o.p_value, o.verdict
            );
        }
        out
    }
}

impl fmt::Display for BatteryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "generator: {}  samples: {}",
            self.generator, self.samples
        )?;
        writeln!(
            f,
            "{:<20} {:>16} {:>12}  verdict",
            "test", "statistic", "p-value"
        )?;
        for o in &self.outcomes {
            writeln!(
                f,
                "{:<20} {:>16.6} {:>12.6}  {}",
                o.name, o.statistic, o.p_value, o.verdict
            )?;
        }
        let s = self.summary();
        writeln!(f, "Fail {}  Weak {}  Pass {}", s.fail, s.weak, s.pass)
    }
}

/// Bins used by the battery's chi-square test.
pub const BATTERY_BINS: usize = 100;
/// Words scanned by the battery's low-bit test.
pub const BATTERY_LOW_BIT_WINDOW: usize = 4096;

/// Draw `samples` words from `gen` and run every test on them.
pub fn run_battery<G: Generator + ?Sized>(
    name: &str,
    gen: &mut G,
    samples: usize,
) -> Result<BatteryReport> {
    require(BATTERY_MIN_SAMPLES, samples)?;
    let m = gen.modulus();
    let words: Vec<u64> = (0..samples).map(|_| gen.next_word()).collect();
    let units: Vec<f64> = words
        .iter()
        .map(|&w| scale_by_modulus(w, m).get())
        .collect();
    let outcomes = alloc::vec![
        chi_square_uniform(&units, BATTERY_BINS)?,
        serial_correlation(&units, 1)?,
        low_bit_outcome(&words[..BATTERY_LOW_BIT_WINDOW]),
        moments_test(&units, 0.5, 1.0 / 12.0, 5.0)?,
    ];
    Ok(BatteryReport {
        generator: name.into(),
        samples,
        outcomes,
    })
}

use thiserror::Error;

/// Errors raised by generators, samplers, processes and tests.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParams(&'static str),
    #[error("generator state is all zero, which is a fixed point")]
    ZeroState,
    #[error("state {x} has no inverse modulo {m}")]
    NonInvertibleState { x: u64, m: u64 },
    #[error("{x} and {m} are not coprime")]
    NotCoprime { x: u64, m: u64 },
    #[error("input outside the sampler domain: {0}")]
    DomainError(&'static str),
    #[error("uniform source ended before a sample was accepted")]
    SourceExhausted,
    #[error("empty sequence")]
    EmptySequence,
    #[error("all elements are zero")]
    AllZero,
    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },
    #[error("trajectory needs at least two rows")]
    TooShort,
    #[error("solution diverged at t = {t}")]
    Diverged { t: f64 },
}

pub type Result<T> = core::result::Result<T, Error>;

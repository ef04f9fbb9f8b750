//! Seeds from the operating system's non-blocking entropy source.

use std::fs::File;
use std::io::{self, Read};
use std::path::PathBuf;

use thiserror::Error;

/// Overrides the entropy device path; meant for tests.
pub const ENTROPY_PATH_ENV: &str = "STOCHASTIK_ENTROPY_PATH";

#[derive(Debug, Error)]
#[error("entropy unavailable from {source_name}: {cause}")]
pub struct EntropyUnavailable {
    source_name: String,
    #[source]
    cause: io::Error,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EntropySource {
    /// `/dev/urandom` on Unix, the platform entropy call elsewhere.
    OsDefault,
    File(PathBuf),
}

impl EntropySource {
    /// [`ENTROPY_PATH_ENV`] if set, otherwise the OS default.
    pub fn from_env() -> Self {
        match std::env::var_os(ENTROPY_PATH_ENV) {
            Some(p) if !p.is_empty() => EntropySource::File(p.into()),
            _ => EntropySource::OsDefault,
        }
    }

    /// Read exactly `8 * n` fresh bytes as little-endian words.
    pub fn read_words(&self, n: usize) -> Result<Vec<u64>, EntropyUnavailable> {
        if n == 0 {
            return Ok(Vec::new());
        }
        let mut buf = vec![0u8; 8 * n];
        self.fill(&mut buf).map_err(|cause| EntropyUnavailable {
            source_name: self.name(),
            cause,
        })?;
        Ok(buf
            .chunks_exact(8)
            .map(|c| u64::from_le_bytes(c.try_into().unwrap()))
            .collect())
    }

    fn name(&self) -> String {
        match self {
            EntropySource::OsDefault => "os".into(),
            EntropySource::File(p) => p.display().to_string(),
        }
    }

    fn fill(&self, buf: &mut [u8]) -> io::Result<()> {
        match self {
            EntropySource::File(p) => File::open(p)?.read_exact(buf),
            EntropySource::OsDefault => os_fill(buf),
        }
    }
}

#[cfg(unix)]
fn os_fill(buf: &mut [u8]) -> io::Result<()> {
    // read_exact retries short reads.
    File::open("/dev/urandom")?.read_exact(buf)
}

#[cfg(not(unix))]
fn os_fill(buf: &mut [u8]) -> io::Result<()> {
    getrandom::getrandom(buf).map_err(io::Error::other)
}

/// `n_words` words from the source selected by [`EntropySource::from_env`].
pub fn os_seed(n_words: usize) -> Result<Vec<u64>, EntropyUnavailable> {
    EntropySource::from_env().read_words(n_words)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;
    use std::io::Write;

    #[test]
    fn os_words_do_not_repeat() {
        let mut seen = HashSet::new();
        for _ in 0..100 {
            let w = EntropySource::OsDefault.read_words(2).unwrap();
            assert_eq!(w.len(), 2);
            assert!(seen.insert((w[0], w[1])));
        }
    }

    #[test]
    fn zero_words() {
        assert!(EntropySource::OsDefault.read_words(0).unwrap().is_empty());
    }

    #[test]
    fn missing_override_is_unavailable() {
        let src = EntropySource::File("/nonexistent/entropy".into());
        assert!(src.read_words(1).is_err());
    }

    #[test]
    fn file_override_reads_little_endian() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0x80])
            .unwrap();
        let src = EntropySource::File(f.path().into());
        assert_eq!(src.read_words(2).unwrap(), [1, 1 << 63]);
        // Short file: not enough bytes for three words.
        assert!(src.read_words(3).is_err());
    }
}

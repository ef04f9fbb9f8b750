//! Stream and trajectory file formats.
//!
//! * DieHarder "input file" text: a three-line header followed by one
//!   decimal word per line.
//! * Raw binary: consecutive little-endian `u64` words.
//! * Hex text: one zero-padded lowercase hex word per line.
//! * Trajectory CSV: `t,w1,..,wD` with numbers printed like C `%.17g`.

use std::io::{self, BufRead, BufWriter, Write};

use stochastik_core::processes::Trajectory;
use stochastik_core::Generator;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExportError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("count must be at least 1")]
    EmptyStream,
    #[error("numbit must be 32 or 64, got {0}")]
    BadNumbit(u32),
    #[error("value {value} does not fit in {numbit} bits")]
    ValueTooWide { value: u64, numbit: u32 },
    #[error("header declares {declared} values but {actual} were supplied")]
    CountMismatch { declared: u64, actual: u64 },
    #[error("label count {labels} does not match {dims} trajectory columns")]
    LabelMismatch { labels: usize, dims: usize },
    #[error("malformed input at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, ExportError>;

/// Header of a DieHarder text stream. Only the `d` (decimal) type is
/// produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StreamHeader {
    count: u64,
    numbit: u32,
}

impl StreamHeader {
    pub fn new(count: u64, numbit: u32) -> Result<Self> {
        if count == 0 {
            return Err(ExportError::EmptyStream);
        }
        if numbit != 32 && numbit != 64 {
            return Err(ExportError::BadNumbit(numbit));
        }
        Ok(StreamHeader { count, numbit })
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn numbit(&self) -> u32 {
        self.numbit
    }

    fn check(&self, value: u64) -> Result<()> {
        if self.numbit == 32 && value > u32::MAX as u64 {
            return Err(ExportError::ValueTooWide { value, numbit: 32 });
        }
        Ok(())
    }

    fn render(&self) -> String {
        format!("type: d\ncount: {}\nnumbit: {}\n", self.count, self.numbit)
    }
}

/// Write `header` and exactly `header.count()` words taken from `words`.
/// Returns the number of bytes written.
pub fn write_dieharder_text<W, I>(sink: W, header: StreamHeader, words: I) -> Result<u64>
where
    W: Write,
    I: IntoIterator<Item = u64>,
{
    let mut out = BufWriter::new(sink);
    let head = header.render();
    out.write_all(head.as_bytes())?;
    let mut bytes = head.len() as u64;
    let mut n = 0u64;
    let mut line = String::with_capacity(24);
    for w in words {
        if n == header.count {
            return Err(ExportError::CountMismatch {
                declared: header.count,
                actual: n + 1,
            });
        }
        header.check(w)?;
        line.clear();
        use std::fmt::Write as _;
        writeln!(line, "{w}").unwrap();
        out.write_all(line.as_bytes())?;
        bytes += line.len() as u64;
        n += 1;
    }
    if n != header.count {
        return Err(ExportError::CountMismatch {
            declared: header.count,
            actual: n,
        });
    }
    out.flush()?;
    Ok(bytes)
}

/// Draw `count` words from `gen` and write them as DieHarder text.
pub fn write_generator_text<W: Write, G: Generator>(
    sink: W,
    gen: &mut G,
    count: u64,
    numbit: u32,
) -> Result<u64> {
    let header = StreamHeader::new(count, numbit)?;
    write_dieharder_text(sink, header, (0..count).map(|_| gen.next_word()))
}

/// Parse a stream written by [`write_dieharder_text`].
pub fn parse_dieharder_text<R: BufRead>(reader: R) -> Result<(StreamHeader, Vec<u64>)> {
    let mut lines = reader.lines().enumerate();
    let mut field = |key: &str| -> Result<String> {
        let (i, line) = lines.next().ok_or(ExportError::Parse {
            line: 0,
            msg: format!("missing `{key}` header"),
        })?;
        let line = line?;
        let (k, v) = line.split_once(':').ok_or_else(|| ExportError::Parse {
            line: i + 1,
            msg: "expected `key: value`".into(),
        })?;
        if k.trim() != key {
            return Err(ExportError::Parse {
                line: i + 1,
                msg: format!("expected `{key}`"),
            });
        }
        Ok(v.trim().to_string())
    };
    let bad = |line: usize, msg: &str| ExportError::Parse {
        line,
        msg: msg.into(),
    };
    if field("type")? != "d" {
        return Err(bad(1, "only type `d` is supported"));
    }
    let count: u64 = field("count")?.parse().map_err(|_| bad(2, "bad count"))?;
    let numbit: u32 = field("numbit")?.parse().map_err(|_| bad(3, "bad numbit"))?;
    let header = StreamHeader::new(count, numbit)?;

    let mut words = Vec::new();
    for (i, line) in lines {
        let line = line?;
        let w: u64 = line.trim().parse().map_err(|_| bad(i + 1, "bad value"))?;
        header.check(w)?;
        words.push(w);
    }
    if words.len() as u64 != count {
        return Err(ExportError::CountMismatch {
            declared: count,
            actual: words.len() as u64,
        });
    }
    Ok((header, words))
}

/// Little-endian `u64` words, no header. Returns bytes written.
pub fn write_raw_binary<W: Write, I: IntoIterator<Item = u64>>(sink: W, words: I) -> Result<u64> {
    let mut out = BufWriter::new(sink);
    let mut bytes = 0;
    for w in words {
        out.write_all(&w.to_le_bytes())?;
        bytes += 8;
    }
    out.flush()?;
    Ok(bytes)
}

/// One 16-digit lowercase hex word per line. Returns bytes written.
pub fn write_hex_lines<W: Write, I: IntoIterator<Item = u64>>(sink: W, words: I) -> Result<u64> {
    let mut out = BufWriter::new(sink);
    let mut bytes = 0;
    for w in words {
        writeln!(out, "{w:016x}")?;
        bytes += 17;
    }
    out.flush()?;
    Ok(bytes)
}

/// Format like C's `%.17g`, which round-trips every finite `f64`. Zero is
/// written as `0` (or `-0`).
pub fn format_g17(x: f64) -> String {
    if x == 0.0 {
        return if x.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let sci = format!("{:.16e}", x);
    let (mant, exp) = sci.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    let (sign, mant) = match mant.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mant),
    };
    let digits: String = mant.chars().filter(|c| *c != '.').collect();

    if !(-4..17).contains(&exp) {
        let mut m = mant.trim_end_matches('0').to_string();
        if m.ends_with('.') {
            m.pop();
        }
        let esign = if exp < 0 { '-' } else { '+' };
        return format!("{sign}{m}e{esign}{:02}", exp.abs());
    }

    let mut s = String::with_capacity(24);
    s.push_str(sign);
    if exp >= 0 {
        let split = exp as usize + 1;
        s.push_str(&digits[..split]);
        let frac = digits[split..].trim_end_matches('0');
        if !frac.is_empty() {
            s.push('.');
            s.push_str(frac);
        }
    } else {
        s.push_str("0.");
        for _ in 0..(-exp - 1) {
            s.push('0');
        }
        s.push_str(digits.trim_end_matches('0'));
    }
    s
}

/// CSV with header `t,w1,..,wD`. Returns bytes written.
pub fn write_trajectory_csv<W: Write>(sink: W, traj: &Trajectory) -> Result<u64> {
    let labels: Vec<String> = (1..=traj.dims()).map(|d| format!("w{d}")).collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    write_trajectory_csv_labeled(sink, traj, &refs)
}

/// CSV with header `t,<labels..>`; `labels.len()` must equal the
/// trajectory's dimension.
pub fn write_trajectory_csv_labeled<W: Write>(
    sink: W,
    traj: &Trajectory,
    labels: &[&str],
) -> Result<u64> {
    if labels.len() != traj.dims() {
        return Err(ExportError::LabelMismatch {
            labels: labels.len(),
            dims: traj.dims(),
        });
    }
    let mut out = BufWriter::new(sink);
    let mut bytes = 0u64;
    let mut line = String::from("t");
    for l in labels {
        line.push(',');
        line.push_str(l);
    }
    line.push('\n');
    out.write_all(line.as_bytes())?;
    bytes += line.len() as u64;

    let grid = traj.grid();
    for i in 0..traj.rows() {
        line.clear();
        line.push_str(&format_g17(grid.time(i)));
        for v in traj.row(i) {
            line.push(',');
            line.push_str(&format_g17(*v));
        }
        line.push('\n');
        out.write_all(line.as_bytes())?;
        bytes += line.len() as u64;
    }
    out.flush()?;
    Ok(bytes)
}

/// Header and numeric rows of a trajectory CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

pub fn read_trajectory_csv<R: BufRead>(reader: R) -> Result<CsvTable> {
    let mut lines = reader.lines();
    let header: Vec<String> = match lines.next() {
        Some(l) => l?.split(',').map(str::to_string).collect(),
        None => {
            return Err(ExportError::Parse {
                line: 0,
                msg: "empty file".into(),
            })
        }
    };
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        let row = line
            .split(',')
            .map(str::parse::<f64>)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| ExportError::Parse {
                line: i + 2,
                msg: e.to_string(),
            })?;
        if row.len() != header.len() {
            return Err(ExportError::Parse {
                line: i + 2,
                msg: "wrong column count".into(),
            });
        }
        rows.push(row);
    }
    Ok(CsvTable { header, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn g17_matches_printf() {
        assert_eq!(format_g17(0.0), "0");
        assert_eq!(format_g17(1.0), "1");
        assert_eq!(format_g17(0.1), "0.10000000000000001");
        assert_eq!(format_g17(0.01), "0.01");
        assert_eq!(format_g17(-2.5), "-2.5");
        assert_eq!(format_g17(1e-5), "1.0000000000000001e-05");
        assert_eq!(format_g17(1e-4), "0.0001");
        assert_eq!(format_g17(1e17), "1e+17");
        assert_eq!(format_g17(12345678901234567.0), "12345678901234568");
        assert_eq!(format_g17(100.0), "100");
    }

    #[test]
    fn header_layout() {
        let mut buf = Vec::new();
        let n = write_dieharder_text(&mut buf, StreamHeader::new(2, 64).unwrap(), [7, 8]).unwrap();
        assert_eq!(buf, b"type: d\ncount: 2\nnumbit: 64\n7\n8\n");
        assert_eq!(n, buf.len() as u64);
    }

    #[test]
    fn count_and_width_enforced() {
        let h = StreamHeader::new(2, 64).unwrap();
        assert!(write_dieharder_text(Vec::new(), h, [1]).is_err());
        assert!(write_dieharder_text(Vec::new(), h, [1, 2, 3]).is_err());
        let h32 = StreamHeader::new(1, 32).unwrap();
        assert!(write_dieharder_text(Vec::new(), h32, [1u64 << 32]).is_err());
        assert!(StreamHeader::new(1, 16).is_err());
        assert!(StreamHeader::new(0, 64).is_err());
    }

    #[test]
    fn raw_is_little_endian() {
        let mut buf = Vec::new();
        write_raw_binary(&mut buf, [0x0102030405060708]).unwrap();
        assert_eq!(buf, [8, 7, 6, 5, 4, 3, 2, 1]);
    }

    proptest! {
        #[test]
        fn g17_round_trips(x in proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL) {
            prop_assert_eq!(format_g17(x).parse::<f64>().unwrap().to_bits(), x.to_bits());
        }

        #[test]
        fn dieharder_round_trips(words in proptest::collection::vec(any::<u64>(), 1..200)) {
            let mut buf = Vec::new();
            let h = StreamHeader::new(words.len() as u64, 64).unwrap();
            write_dieharder_text(&mut buf, h, words.iter().copied()).unwrap();
            let (h2, back) = parse_dieharder_text(buf.as_slice()).unwrap();
            prop_assert_eq!(h2, h);
            prop_assert_eq!(back, words);
        }
    }
}

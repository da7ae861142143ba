//! PGM (PNM P2/P5) reading and writing.
//!
//! Supports the grayscale subset of Netpbm: ASCII `P2` and binary `P5` with
//! maxval up to 255. Comment lines (`#`) are accepted on input and never
//! emitted. Output always uses maxval 255, so `read_pnm(write_pnm(img))` is
//! the identity bit for bit.

use crate::image::Image;
use thiserror::Error;

/// Which PGM flavour to emit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PnmFormat {
    /// ASCII samples ("P2").
    P2,
    /// One raw byte per sample ("P5").
    P5,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PnmError {
    /// Bad magic number, missing or zero dimensions, or unparseable header.
    #[error("malformed PGM header: {0}")]
    MalformedHeader(String),
    /// Fewer samples than `width * height`.
    #[error("truncated PGM data: expected {expected} samples, found {found}")]
    TruncatedData { expected: usize, found: usize },
    /// Declared maxval exceeds 255.
    #[error("unsupported maxval {0} (must be <= 255)")]
    UnsupportedMaxval(u32),
    /// An ASCII sample exceeds the declared maxval.
    #[error("sample value {value} exceeds maxval {maxval}")]
    SampleOutOfRange { value: u32, maxval: u32 },
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(bytes: &'a [u8]) -> Self {
        Cursor { bytes, pos: 0 }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    /// Skips whitespace and `#` comments (which run to end of line).
    fn skip_separators(&mut self) {
        while let Some(b) = self.peek() {
            if b.is_ascii_whitespace() {
                self.pos += 1;
            } else if b == b'#' {
                while let Some(c) = self.peek() {
                    self.pos += 1;
                    if c == b'\n' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    /// Reads one unsigned ASCII decimal token.
    fn read_number(&mut self, what: &str) -> Result<u32, PnmError> {
        self.skip_separators();
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(PnmError::MalformedHeader(format!(
                "expected {what}, found {}",
                match self.peek() {
                    Some(b) => format!("byte 0x{b:02x}"),
                    None => "end of data".to_string(),
                }
            )));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse::<u32>().ok())
            .ok_or_else(|| PnmError::MalformedHeader(format!("unparseable {what}")))
    }
}

/// Parses a PGM file (`P2` ASCII or `P5` binary, maxval <= 255).
///
/// Samples are returned exactly as stored; a maxval below 255 is accepted
/// without rescaling.
pub fn read_pnm(bytes: &[u8]) -> Result<Image<u8>, PnmError> {
    let mut cur = Cursor::new(bytes);
    cur.skip_separators();
    let magic = match (cur.peek(), cur.bytes.get(cur.pos + 1).copied()) {
        (Some(b'P'), Some(b'2')) => PnmFormat::P2,
        (Some(b'P'), Some(b'5')) => PnmFormat::P5,
        _ => {
            return Err(PnmError::MalformedHeader(
                "magic must be \"P2\" or \"P5\"".to_string(),
            ))
        }
    };
    cur.pos += 2;

    let width = cur.read_number("width")? as usize;
    let height = cur.read_number("height")? as usize;
    if width == 0 || height == 0 {
        return Err(PnmError::MalformedHeader(format!(
            "dimensions must be positive, got {width}x{height}"
        )));
    }
    let maxval = cur.read_number("maxval")?;
    if maxval > 255 {
        return Err(PnmError::UnsupportedMaxval(maxval));
    }
    if maxval == 0 {
        return Err(PnmError::MalformedHeader("maxval must be positive".to_string()));
    }
    let expected = width
        .checked_mul(height)
        .ok_or_else(|| PnmError::MalformedHeader("dimensions overflow".to_string()))?;

    let samples = match magic {
        PnmFormat::P2 => {
            let mut samples = Vec::with_capacity(expected);
            for _ in 0..expected {
                cur.skip_separators();
                if cur.peek().is_none() {
                    return Err(PnmError::TruncatedData {
                        expected,
                        found: samples.len(),
                    });
                }
                let value = cur.read_number("sample").map_err(|_| PnmError::TruncatedData {
                    expected,
                    found: samples.len(),
                })?;
                if value > maxval {
                    return Err(PnmError::SampleOutOfRange { value, maxval });
                }
                samples.push(value as u8);
            }
            samples
        }
        PnmFormat::P5 => {
            // Exactly one whitespace byte separates the header from the raster.
            match cur.peek() {
                Some(b) if b.is_ascii_whitespace() => cur.pos += 1,
                _ => {
                    return Err(PnmError::MalformedHeader(
                        "missing whitespace before binary raster".to_string(),
                    ))
                }
            }
            let raster = &cur.bytes[cur.pos..];
            if raster.len() < expected {
                return Err(PnmError::TruncatedData {
                    expected,
                    found: raster.len(),
                });
            }
            raster[..expected].to_vec()
        }
    };

    Ok(Image::from_vec(width, height, samples))
}

/// Serializes an 8-bit image as PGM with maxval 255.
///
/// `P2` emits one ASCII line per row; `P5` emits the raw sample bytes. Both
/// use the header `P<n>\n<width> <height>\n255\n`.
pub fn write_pnm(img: &Image<u8>, format: PnmFormat) -> Vec<u8> {
    let magic = match format {
        PnmFormat::P2 => "P2",
        PnmFormat::P5 => "P5",
    };
    let mut out = format!("{magic}\n{} {}\n255\n", img.width(), img.height()).into_bytes();
    match format {
        PnmFormat::P2 => {
            for y in 0..img.height() {
                let mut line = String::new();
                for (x, &v) in img.row(y).iter().enumerate() {
                    if x > 0 {
                        line.push(' ');
                    }
                    line.push_str(&v.to_string());
                }
                line.push('\n');
                out.extend_from_slice(line.as_bytes());
            }
        }
        PnmFormat::P5 => out.extend_from_slice(img.samples()),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reads_ascii_pgm() {
        let img = read_pnm(b"P2\n2 2\n255\n0 128 255 7\n").unwrap();
        assert_eq!((img.width(), img.height()), (2, 2));
        assert_eq!(img.samples(), &[0, 128, 255, 7]);
    }

    #[test]
    fn reads_binary_pgm() {
        let img = read_pnm(b"P5\n1 1\n255\n\x2a").unwrap();
        assert_eq!((img.width(), img.height()), (1, 1));
        assert_eq!(img.samples(), &[42]);
    }

    #[test]
    fn truncated_ascii_data() {
        assert_eq!(
            read_pnm(b"P2\n2 2\n255\n0 1 2\n"),
            Err(PnmError::TruncatedData {
                expected: 4,
                found: 3
            })
        );
    }

    #[test]
    fn truncated_binary_data() {
        assert_eq!(
            read_pnm(b"P5\n2 2\n255\n\x00\x01"),
            Err(PnmError::TruncatedData {
                expected: 4,
                found: 2
            })
        );
    }

    #[test]
    fn rejects_bad_magic() {
        assert!(matches!(
            read_pnm(b"P6\n1 1\n255\n\x00"),
            Err(PnmError::MalformedHeader(_))
        ));
        assert!(matches!(read_pnm(b""), Err(PnmError::MalformedHeader(_))));
    }

    #[test]
    fn rejects_zero_dimensions() {
        assert!(matches!(
            read_pnm(b"P2\n0 4\n255\n"),
            Err(PnmError::MalformedHeader(_))
        ));
    }

    #[test]
    fn rejects_large_maxval() {
        assert_eq!(
            read_pnm(b"P2\n1 1\n65535\n42\n"),
            Err(PnmError::UnsupportedMaxval(65535))
        );
    }

    #[test]
    fn rejects_sample_above_maxval() {
        assert_eq!(
            read_pnm(b"P2\n1 1\n100\n101\n"),
            Err(PnmError::SampleOutOfRange {
                value: 101,
                maxval: 100
            })
        );
    }

    #[test]
    fn accepts_comments_and_odd_whitespace() {
        let img = read_pnm(b"P2 # magic\n# a comment line\n 2\t1 # dims\n255\n 9  10\n").unwrap();
        assert_eq!(img.samples(), &[9, 10]);
    }

    #[test]
    fn accepts_low_maxval_without_rescaling() {
        let img = read_pnm(b"P2\n2 1\n15\n0 15\n").unwrap();
        assert_eq!(img.samples(), &[0, 15]);
    }

    #[test]
    fn binary_raster_bytes_are_not_interpreted() {
        // 0x23 is '#': must be raster data here, not a comment.
        let img = read_pnm(b"P5\n2 1\n255\n\x23\x0a").unwrap();
        assert_eq!(img.samples(), &[0x23, 0x0a]);
    }

    #[test]
    fn writes_binary_pgm() {
        let img = Image::from_vec(1, 1, vec![42u8]);
        assert_eq!(write_pnm(&img, PnmFormat::P5), b"P5\n1 1\n255\n\x2a");
    }

    #[test]
    fn writes_ascii_pgm() {
        let img = Image::from_vec(2, 1, vec![0u8, 255]);
        assert_eq!(write_pnm(&img, PnmFormat::P2), b"P2\n2 1\n255\n0 255\n");
    }

    proptest! {
        #[test]
        fn round_trip_is_identity(
            w in 1usize..=16,
            h in 1usize..=16,
            seed in any::<u64>(),
        ) {
            let mut state = seed;
            let img = Image::from_fn(w, h, |_, _| {
                // xorshift64 keeps the generator local and deterministic
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state & 0xff) as u8
            });
            prop_assert_eq!(&read_pnm(&write_pnm(&img, PnmFormat::P2)).unwrap(), &img);
            prop_assert_eq!(&read_pnm(&write_pnm(&img, PnmFormat::P5)).unwrap(), &img);
        }
    }
}

//! Interpolation kernels and the separable 2D resampler.
//!
//! Resampling maps every destination index to a source coordinate with
//! pixel-center alignment, `x = (d + 0.5) * (src_len / dst_len) - 0.5`, which
//! keeps the image centroid fixed and makes identity-scale resampling exact.
//! Per-axis tap plans are built once and reused across all rows/columns, so
//! kernel evaluations cost O(dst) rather than O(dst * src).
//!
//! Weights are computed and accumulated in `f64`; samples stay `f32` at the
//! image boundary.

use crate::image::Image;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InterpError {
    /// The requested output would have a zero dimension.
    #[error("degenerate output dimensions {width}x{height}")]
    DegenerateOutput { width: usize, height: usize },
}

/// The three interpolation kernels.
///
/// Each is an even, compactly supported weight function `u(s)` of the signed
/// distance `s` between the reconstruction point and a source grid point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kernel {
    /// Copies the closest source pixel (support 0.5, 1 tap).
    Nearest,
    /// Triangle kernel `1 - |s|` (support 1, 2 taps).
    Bilinear,
    /// Keys piecewise cubic with a = -1/2 (support 2, 4 taps).
    Bicubic,
}

impl Kernel {
    /// Half-width of the kernel: `u(s) = 0` for `|s| > support`.
    pub fn support(self) -> f64 {
        match self {
            Kernel::Nearest => 0.5,
            Kernel::Bilinear => 1.0,
            Kernel::Bicubic => 2.0,
        }
    }

    /// Number of source taps contributing to each destination sample.
    pub fn taps(self) -> usize {
        match self {
            Kernel::Nearest => 1,
            Kernel::Bilinear => 2,
            Kernel::Bicubic => 4,
        }
    }

    /// Evaluates the kernel weight `u(s)`.
    ///
    /// Nearest includes the tie at `|s| = 0.5` in the unit branch; combined
    /// with pixel-center mapping this resolves ties toward the lower source
    /// index. Bicubic interpolates at the nodes: `u(0) = 1`, `u(n) = 0` for
    /// nonzero integers `n`.
    pub fn eval(self, s: f64) -> f64 {
        let a = s.abs();
        match self {
            Kernel::Nearest => {
                if a <= 0.5 {
                    1.0
                } else {
                    0.0
                }
            }
            Kernel::Bilinear => {
                if a <= 1.0 {
                    1.0 - a
                } else {
                    0.0
                }
            }
            Kernel::Bicubic => {
                if a < 1.0 {
                    (1.5 * a - 2.5) * a * a + 1.0
                } else if a < 2.0 {
                    ((-0.5 * a + 2.5) * a - 4.0) * a + 2.0
                } else {
                    0.0
                }
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kernel::Nearest => "nearest",
            Kernel::Bilinear => "bilinear",
            Kernel::Bicubic => "bicubic",
        }
    }
}

impl std::fmt::Display for Kernel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Kernel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "nearest" => Ok(Kernel::Nearest),
            "bilinear" => Ok(Kernel::Bilinear),
            "bicubic" => Ok(Kernel::Bicubic),
            other => Err(format!(
                "unknown method '{other}' (expected nearest, bilinear, or bicubic)"
            )),
        }
    }
}

/// One source contribution: `weight * samples[src]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tap {
    pub src: usize,
    pub weight: f64,
}

/// Per-axis resampling plan: for every destination index, the fixed-size list
/// of source taps (1, 2, or 4 depending on the kernel).
///
/// Out-of-range source indices are clamped to the nearest valid index
/// (replicate border), so taps near an edge may repeat a source pixel.
#[derive(Clone, Debug)]
pub struct ResamplePlan {
    kernel: Kernel,
    src_len: usize,
    dst_len: usize,
    taps: Vec<Tap>,
}

impl ResamplePlan {
    /// Builds the tap plan mapping `src_len` source samples onto `dst_len`
    /// destination samples.
    ///
    /// # Panics
    /// Panics if either length is zero.
    pub fn build(kernel: Kernel, src_len: usize, dst_len: usize) -> Self {
        assert!(src_len >= 1 && dst_len >= 1, "lengths must be >= 1");
        let ratio = src_len as f64 / dst_len as f64;
        let max_src = src_len as isize - 1;
        let mut taps = Vec::with_capacity(dst_len * kernel.taps());
        for d in 0..dst_len {
            let x = (d as f64 + 0.5) * ratio - 0.5;
            match kernel {
                Kernel::Nearest => {
                    // ceil(x - 0.5) is the nearest grid point, ties toward the
                    // lower index.
                    let k = (x - 0.5).ceil() as isize;
                    taps.push(Tap {
                        src: k.clamp(0, max_src) as usize,
                        weight: 1.0,
                    });
                }
                Kernel::Bilinear | Kernel::Bicubic => {
                    let base = x.floor() as isize;
                    let (lo, hi) = match kernel {
                        Kernel::Bilinear => (base, base + 1),
                        _ => (base - 1, base + 2),
                    };
                    for k in lo..=hi {
                        taps.push(Tap {
                            src: k.clamp(0, max_src) as usize,
                            weight: kernel.eval(x - k as f64),
                        });
                    }
                }
            }
        }
        ResamplePlan {
            kernel,
            src_len,
            dst_len,
            taps,
        }
    }

    pub fn kernel(&self) -> Kernel {
        self.kernel
    }

    pub fn src_len(&self) -> usize {
        self.src_len
    }

    pub fn dst_len(&self) -> usize {
        self.dst_len
    }

    /// Taps contributing to destination index `d`, in ascending grid order.
    pub fn taps_for(&self, d: usize) -> &[Tap] {
        let n = self.kernel.taps();
        &self.taps[d * n..(d + 1) * n]
    }
}

/// Resamples an image to `out_w` x `out_h` with a horizontal pass followed by
/// a vertical pass.
///
/// Both passes accumulate in `f64` with taps applied in ascending grid order,
/// so results are deterministic and identity-scale resampling reproduces the
/// input bit for bit.
///
/// # Panics
/// Panics if `out_w` or `out_h` is zero.
pub fn resample_2d(img: &Image<f32>, kernel: Kernel, out_w: usize, out_h: usize) -> Image<f32> {
    assert!(out_w >= 1 && out_h >= 1, "output dimensions must be >= 1");
    let xplan = ResamplePlan::build(kernel, img.width(), out_w);
    let yplan = ResamplePlan::build(kernel, img.height(), out_h);

    // Horizontal pass: src rows resampled to out_w, kept in f64.
    let mut mid = vec![0.0f64; out_w * img.height()];
    for y in 0..img.height() {
        let row = img.row(y);
        let out_row = &mut mid[y * out_w..(y + 1) * out_w];
        for (d, out) in out_row.iter_mut().enumerate() {
            let mut acc = 0.0f64;
            for tap in xplan.taps_for(d) {
                acc += tap.weight * row[tap.src] as f64;
            }
            *out = acc;
        }
    }

    // Vertical pass over the intermediate rows.
    let mut samples = vec![0.0f32; out_w * out_h];
    for d in 0..out_h {
        let out_row = &mut samples[d * out_w..(d + 1) * out_w];
        for (x, out) in out_row.iter_mut().enumerate() {
            let mut acc = 0.0f64;
            for tap in yplan.taps_for(d) {
                acc += tap.weight * mid[tap.src * out_w + x];
            }
            *out = acc as f32;
        }
    }

    Image::from_vec(out_w, out_h, samples)
}

/// Enlarges (or shrinks) an image by a uniform scale factor.
///
/// Output dimensions are `round(width * scale)` x `round(height * scale)`
/// with rounding half away from zero. Returns [`InterpError::DegenerateOutput`]
/// if either rounded dimension is zero (including non-positive scales).
pub fn enlarge(img: &Image<f32>, kernel: Kernel, scale: f64) -> Result<Image<f32>, InterpError> {
    let (out_w, out_h) = scaled_dims(img.width(), img.height(), scale)?;
    Ok(resample_2d(img, kernel, out_w, out_h))
}

/// Rounds scaled dimensions, rejecting degenerate results.
pub fn scaled_dims(width: usize, height: usize, scale: f64) -> Result<(usize, usize), InterpError> {
    let round = |n: usize| -> usize {
        let v = (n as f64 * scale).round();
        if v.is_finite() && v >= 1.0 {
            v as usize
        } else {
            0
        }
    };
    let (out_w, out_h) = (round(width), round(height));
    if out_w == 0 || out_h == 0 {
        return Err(InterpError::DegenerateOutput {
            width: out_w,
            height: out_h,
        });
    }
    Ok((out_w, out_h))
}

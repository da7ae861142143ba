//! 3x3 spatial filtering: neighbour averaging and the unsharp mask.
//!
//! Both masks run through one correlation engine with a replicate border.
//! The masks in scope are 180-degree symmetric, so correlation and
//! convolution coincide. Filtering stays in `f32` (accumulating in `f64`);
//! the unsharp mask produces negative lobes and overshoot that must survive
//! until final quantization.

use crate::image::Image;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum FilterError {
    /// Unsharp `alpha` outside `[0, 1]`.
    #[error("alpha {0} out of range [0, 1]")]
    AlphaOutOfRange(f64),
}

/// Border handling for the convolution engine.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BorderPolicy {
    /// Extend edge pixels outward.
    #[default]
    Replicate,
}

/// Which mask a [`FilterMask`] holds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MaskKind {
    /// Eight-neighbour mean, center excluded.
    Average,
    /// Nine-cell box mean, center included.
    NineCellAverage,
    /// Unsharp mask with the given alpha.
    Unsharp(f64),
}

/// A 3x3 real-valued convolution mask plus its border policy.
#[derive(Clone, Debug, PartialEq)]
pub struct FilterMask {
    kind: MaskKind,
    coeffs: [[f64; 3]; 3],
    border: BorderPolicy,
}

impl FilterMask {
    pub fn kind(&self) -> MaskKind {
        self.kind
    }

    /// Row-major coefficients.
    pub fn coeffs(&self) -> &[[f64; 3]; 3] {
        &self.coeffs
    }

    pub fn border(&self) -> BorderPolicy {
        self.border
    }

    /// Sum of all nine coefficients.
    pub fn coefficient_sum(&self) -> f64 {
        self.coeffs.iter().flatten().sum()
    }
}

/// The eight-neighbour averaging mask: each output pixel becomes the mean of
/// its eight neighbours, with the center itself excluded.
pub fn average_mask() -> FilterMask {
    let e = 1.0 / 8.0;
    FilterMask {
        kind: MaskKind::Average,
        coeffs: [[e, e, e], [e, 0.0, e], [e, e, e]],
        border: BorderPolicy::Replicate,
    }
}

/// The nine-cell box mean (center included). Alternative smoothing variant;
/// [`average_mask`] is the default contract.
pub fn nine_cell_average_mask() -> FilterMask {
    let e = 1.0 / 9.0;
    FilterMask {
        kind: MaskKind::NineCellAverage,
        coeffs: [[e; 3]; 3],
        border: BorderPolicy::Replicate,
    }
}

/// The unsharp mask
/// `1/(alpha+1) * [[-a, a-1, -a], [a-1, a+5, a-1], [-a, a-1, -a]]`.
///
/// Coefficients sum to exactly 1 for any alpha, so flat regions pass through
/// unchanged while edges are amplified. `alpha` must lie in `[0, 1]`.
pub fn unsharp_mask(alpha: f64) -> Result<FilterMask, FilterError> {
    if !(0.0..=1.0).contains(&alpha) || alpha.is_nan() {
        return Err(FilterError::AlphaOutOfRange(alpha));
    }
    let norm = 1.0 / (alpha + 1.0);
    let corner = -alpha * norm;
    let edge = (alpha - 1.0) * norm;
    let center = (alpha + 5.0) * norm;
    Ok(FilterMask {
        kind: MaskKind::Unsharp(alpha),
        coeffs: [
            [corner, edge, corner],
            [edge, center, edge],
            [corner, edge, corner],
        ],
        border: BorderPolicy::Replicate,
    })
}

/// Correlates `img` with a 3x3 mask:
/// `out[y][x] = sum coeffs[i][j] * img[clamp(y+i-1)][clamp(x+j-1)]`.
///
/// Output dimensions equal the input's; values are not clamped to `[0, 255]`.
pub fn convolve_3x3(img: &Image<f32>, mask: &FilterMask) -> Image<f32> {
    let BorderPolicy::Replicate = mask.border;
    let (w, h) = (img.width(), img.height());
    let coeffs = &mask.coeffs;
    let mut samples = Vec::with_capacity(w * h);
    for y in 0..h {
        for x in 0..w {
            let mut acc = 0.0f64;
            for (i, row) in coeffs.iter().enumerate() {
                let sy = y as isize + i as isize - 1;
                for (j, &c) in row.iter().enumerate() {
                    let sx = x as isize + j as isize - 1;
                    acc += c * img.get_clamped(sx, sy) as f64;
                }
            }
            samples.push(acc as f32);
        }
    }
    Image::from_vec(w, h, samples)
}

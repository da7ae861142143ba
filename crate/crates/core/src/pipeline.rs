//! The three-step cleanup pipeline: enlarge, average, unsharp.
//!
//! All intermediates stay in `f32`; quantization back to 8 bits happens
//! exactly once, after the unsharp stage. Earlier clamping would cut off the
//! unsharp mask's negative lobes and shift results.

use crate::filters::{average_mask, convolve_3x3, nine_cell_average_mask, unsharp_mask, FilterError};
use crate::image::{Image, ImageError};
use crate::interp::{resample_2d, scaled_dims, InterpError, Kernel};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum PipelineError {
    #[error(transparent)]
    Interp(#[from] InterpError),
    #[error(transparent)]
    Filter(#[from] FilterError),
    #[error(transparent)]
    Convert(#[from] ImageError),
}

/// Which smoothing mask the second stage uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AverageVariant {
    /// Eight-neighbour mean, center excluded (the default contract).
    #[default]
    EightNeighbour,
    /// Nine-cell box mean, center included.
    NineCell,
}

/// Everything needed to run the pipeline end to end.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PipelineConfig {
    pub method: Kernel,
    pub scale: f64,
    pub alpha: f64,
    pub average_variant: AverageVariant,
}

impl PipelineConfig {
    pub fn new(method: Kernel, scale: f64, alpha: f64) -> Self {
        PipelineConfig {
            method,
            scale,
            alpha,
            average_variant: AverageVariant::EightNeighbour,
        }
    }
}

/// Runs enlarge -> average -> unsharp -> quantize.
///
/// Output dimensions are `round(w * scale)` x `round(h * scale)`.
pub fn run_pipeline(img: &Image<u8>, cfg: &PipelineConfig) -> Result<Image<u8>, PipelineError> {
    let (out_w, out_h) = scaled_dims(img.width(), img.height(), cfg.scale)?;
    run_pipeline_to(img, cfg.method, out_w, out_h, cfg.alpha, cfg.average_variant)
}

/// Same pipeline with explicit output dimensions.
///
/// The evaluation harness uses this to re-enlarge a downscaled image back to
/// the exact dimensions of its reference, which a rounded scale factor cannot
/// always express.
pub fn run_pipeline_to(
    img: &Image<u8>,
    method: Kernel,
    out_w: usize,
    out_h: usize,
    alpha: f64,
    average_variant: AverageVariant,
) -> Result<Image<u8>, PipelineError> {
    let sharpen = unsharp_mask(alpha)?;
    let smooth = match average_variant {
        AverageVariant::EightNeighbour => average_mask(),
        AverageVariant::NineCell => nine_cell_average_mask(),
    };
    if out_w == 0 || out_h == 0 {
        return Err(InterpError::DegenerateOutput {
            width: out_w,
            height: out_h,
        }
        .into());
    }
    let enlarged = resample_2d(&img.to_f32(), method, out_w, out_h);
    let averaged = convolve_3x3(&enlarged, &smooth);
    let sharpened = convolve_3x3(&averaged, &sharpen);
    Ok(sharpened.to_u8()?)
}

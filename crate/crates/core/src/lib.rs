//! Grayscale image enlargement toolkit.
//!
//! Provides the classic trio of interpolation kernels (nearest neighbour,
//! bilinear, bicubic) behind a separable 2D resampler, a pair of 3x3 spatial
//! filters (neighbour averaging and an alpha-parameterized unsharp mask), a
//! three-step cleanup pipeline that composes them (enlarge, average, unsharp),
//! and image-pair error metrics for evaluating the results.
//!
//! Images are owned row-major rasters, 8-bit at the edges and `f32` inside the
//! compute pipeline; quantization back to 8 bits happens exactly once, at the
//! end. PGM (P2/P5) is the canonical on-disk format.

pub mod filters;
pub mod image;
pub mod interp;
pub mod metrics;
pub mod pipeline;
pub mod pnm;

pub use filters::{average_mask, convolve_3x3, unsharp_mask, FilterError, FilterMask};
pub use image::{Image, ImageError, PixelCoord};
pub use interp::{enlarge, resample_2d, InterpError, Kernel, ResamplePlan};
pub use metrics::{error_ratio, mae, mse, psnr, ErrorReport, ErrorRow, MetricsError};
pub use pipeline::{run_pipeline, run_pipeline_to, AverageVariant, PipelineConfig, PipelineError};
pub use pnm::{read_pnm, write_pnm, PnmError, PnmFormat};


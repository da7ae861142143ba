//! Image-pair error metrics.
//!
//! The headline number is the error ratio: mean absolute difference
//! normalized to the full 8-bit range and expressed as a percentage, so
//! near-identical images score hundredths of a percent. MAE, MSE, and PSNR
//! are emitted alongside so results stay interpretable under any metric.

use crate::image::Image;
use crate::interp::Kernel;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MetricsError {
    #[error("dimension mismatch: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),
}

fn check_dims(a: &Image<u8>, b: &Image<u8>) -> Result<(), MetricsError> {
    if a.width() != b.width() || a.height() != b.height() {
        return Err(MetricsError::DimensionMismatch(
            a.width(),
            a.height(),
            b.width(),
            b.height(),
        ));
    }
    Ok(())
}

fn abs_diff_sum(a: &Image<u8>, b: &Image<u8>) -> u64 {
    a.samples()
        .iter()
        .zip(b.samples())
        .map(|(&p, &q)| p.abs_diff(q) as u64)
        .sum()
}

/// Range-normalized mean absolute difference as a percentage:
/// `100 * sum |a_i - b_i| / (N * 255)`. Always in `[0, 100]`.
pub fn error_ratio(a: &Image<u8>, b: &Image<u8>) -> Result<f64, MetricsError> {
    check_dims(a, b)?;
    let n = a.samples().len() as f64;
    Ok(100.0 * abs_diff_sum(a, b) as f64 / (n * 255.0))
}

/// Mean absolute error `sum |a_i - b_i| / N`.
pub fn mae(a: &Image<u8>, b: &Image<u8>) -> Result<f64, MetricsError> {
    check_dims(a, b)?;
    Ok(abs_diff_sum(a, b) as f64 / a.samples().len() as f64)
}

/// Mean squared error `sum (a_i - b_i)^2 / N`.
pub fn mse(a: &Image<u8>, b: &Image<u8>) -> Result<f64, MetricsError> {
    check_dims(a, b)?;
    let sum: u64 = a
        .samples()
        .iter()
        .zip(b.samples())
        .map(|(&p, &q)| {
            let d = p.abs_diff(q) as u64;
            d * d
        })
        .sum();
    Ok(sum as f64 / a.samples().len() as f64)
}

/// Peak signal-to-noise ratio `10 * log10(255^2 / MSE)` in dB; positive
/// infinity for identical images.
pub fn psnr(a: &Image<u8>, b: &Image<u8>) -> Result<f64, MetricsError> {
    let mse = mse(a, b)?;
    if mse == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(10.0 * (255.0f64 * 255.0 / mse).log10())
}

/// One alpha-sweep row: the error ratio plus its companion metrics.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ErrorRow {
    pub alpha: f64,
    pub error_percent: f64,
    pub mae: f64,
    pub mse: f64,
    pub psnr: f64,
}

/// Per-method sweep result: one row per alpha, alphas strictly increasing.
#[derive(Clone, Debug, PartialEq)]
pub struct ErrorReport {
    pub method: Kernel,
    pub rows: Vec<ErrorRow>,
}

impl ErrorReport {
    /// # Panics
    /// Panics if `rows` is empty, alphas are not strictly increasing, or any
    /// error percentage is negative.
    pub fn new(method: Kernel, rows: Vec<ErrorRow>) -> Self {
        assert!(!rows.is_empty(), "report must have at least one row");
        for pair in rows.windows(2) {
            assert!(
                pair[0].alpha < pair[1].alpha,
                "alphas must be strictly increasing"
            );
        }
        assert!(
            rows.iter().all(|r| r.error_percent >= 0.0),
            "error percentages must be non-negative"
        );
        ErrorReport { method, rows }
    }

    /// The row with the smallest error ratio.
    pub fn best_row(&self) -> &ErrorRow {
        self.rows
            .iter()
            .min_by(|a, b| a.error_percent.total_cmp(&b.error_percent))
            .expect("rows are non-empty")
    }
}

/// Computes all four metrics for one image pair.
pub fn pair_row(alpha: f64, a: &Image<u8>, b: &Image<u8>) -> Result<ErrorRow, MetricsError> {
    Ok(ErrorRow {
        alpha,
        error_percent: error_ratio(a, b)?,
        mae: mae(a, b)?,
        mse: mse(a, b)?,
        psnr: psnr(a, b)?,
    })
}

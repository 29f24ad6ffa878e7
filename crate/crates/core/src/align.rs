//! Multivariate dynamic time warping between two code sequences.
//!
//! Steps are `(1,0)`, `(0,1)` and `(1,1)` with unit weights and Euclidean
//! frame distance. The path cost sums the distance of every visited cell,
//! `(0,0)` included. When two predecessors tie during the backtrace the
//! diagonal wins, then the step that advanced the reference index.

use serde::{Deserialize, Serialize};

use crate::codes::CodeMatrix;
use crate::{Error, Matrix, Result};

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DtwOptions {
    /// Sakoe-Chiba half-width around the length-normalized diagonal, in
    /// frames of the shorter sequence. Cell `(i, j)` of an `n × m` grid is
    /// searched when `|i·(m−1) − j·(n−1)| ≤ band · max(n−1, m−1)`. Any band
    /// of at least 1 admits a path; `None` searches the full grid.
    pub band: Option<usize>,
}

/// Monotone alignment of reference frames `i` to assessed frames `j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WarpPath {
    pub pairs: Vec<(usize, usize)>,
    pub total_cost: f64,
}

impl WarpPath {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Checks boundary, step and length constraints against a `ref_len × other_len` grid.
    pub fn validate(&self, ref_len: usize, other_len: usize) -> Result<()> {
        let bad = |why: &str| {
            Err(Error::DimensionMismatch(format!(
                "warp path invalid for {ref_len}×{other_len} grid: {why}"
            )))
        };
        if ref_len == 0 || other_len == 0 {
            return bad("empty grid");
        }
        if self.pairs.first() != Some(&(0, 0)) {
            return bad("does not start at (0,0)");
        }
        if self.pairs.last() != Some(&(ref_len - 1, other_len - 1)) {
            return bad("does not end at the far corner");
        }
        for w in self.pairs.windows(2) {
            let (di, dj) = (w[1].0.wrapping_sub(w[0].0), w[1].1.wrapping_sub(w[0].1));
            if !matches!((di, dj), (1, 0) | (0, 1) | (1, 1)) {
                return bad(&format!("illegal step {:?} -> {:?}", w[0], w[1]));
            }
        }
        Ok(())
    }
}

/// Both sequences resampled along a warp path, `C × K` each.
#[derive(Debug, Clone, PartialEq)]
pub struct AlignedPair {
    pub ref_warped: Matrix,
    pub other_warped: Matrix,
}

/// Euclidean distance between two frames.
pub fn frame_distance(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch(format!(
            "frame of {} dimensions against {}",
            x.len(),
            y.len()
        )));
    }
    Ok(euclidean(x, y))
}

#[inline]
fn euclidean(x: &[f64], y: &[f64]) -> f64 {
    x.iter()
        .zip(y)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt()
}

pub fn dtw(reference: &CodeMatrix, other: &CodeMatrix) -> Result<WarpPath> {
    dtw_with(reference, other, &DtwOptions::default())
}

pub fn dtw_with(reference: &CodeMatrix, other: &CodeMatrix, opts: &DtwOptions) -> Result<WarpPath> {
    if reference.dims() != other.dims() {
        return Err(Error::DimensionMismatch(format!(
            "cannot align {}-dimensional codes with {}-dimensional codes",
            reference.dims(),
            other.dims()
        )));
    }
    dtw_frames(
        &reference.frame_major(),
        &other.frame_major(),
        reference.dims(),
        opts,
    )
}

/// DTW over frame-major buffers of `dims`-dimensional frames.
pub fn dtw_frames(
    reference: &[f64],
    other: &[f64],
    dims: usize,
    opts: &DtwOptions,
) -> Result<WarpPath> {
    if dims == 0 || reference.is_empty() || other.is_empty() {
        return Err(Error::InvalidArgument("cannot align an empty sequence".into()));
    }
    if !reference.len().is_multiple_of(dims) || !other.len().is_multiple_of(dims) {
        return Err(Error::DimensionMismatch(format!(
            "frame buffers are not multiples of {dims} dimensions"
        )));
    }
    let n = reference.len() / dims;
    let m = other.len() / dims;
    let in_band = band_filter(n, m, opts.band);

    let frame_r = |i: usize| &reference[i * dims..(i + 1) * dims];
    let frame_o = |j: usize| &other[j * dims..(j + 1) * dims];

    let mut acc = vec![f64::INFINITY; n * m];
    for i in 0..n {
        for j in 0..m {
            if !in_band(i, j) {
                continue;
            }
            let d = euclidean(frame_r(i), frame_o(j));
            let best = if i == 0 && j == 0 {
                0.0
            } else {
                let diag = if i > 0 && j > 0 { acc[(i - 1) * m + j - 1] } else { f64::INFINITY };
                let up = if i > 0 { acc[(i - 1) * m + j] } else { f64::INFINITY };
                let left = if j > 0 { acc[i * m + j - 1] } else { f64::INFINITY };
                diag.min(up).min(left)
            };
            acc[i * m + j] = d + best;
        }
    }

    let total_cost = acc[n * m - 1];
    if !total_cost.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "band {:?} admits no path through the {n}×{m} grid",
            opts.band
        )));
    }

    let mut pairs = Vec::with_capacity(n + m - 1);
    let (mut i, mut j) = (n - 1, m - 1);
    pairs.push((i, j));
    while (i, j) != (0, 0) {
        let diag = if i > 0 && j > 0 { acc[(i - 1) * m + j - 1] } else { f64::INFINITY };
        let up = if i > 0 { acc[(i - 1) * m + j] } else { f64::INFINITY };
        let left = if j > 0 { acc[i * m + j - 1] } else { f64::INFINITY };
        if diag <= up && diag <= left {
            i -= 1;
            j -= 1;
        } else if up <= left {
            i -= 1;
        } else {
            j -= 1;
        }
        pairs.push((i, j));
    }
    pairs.reverse();

    Ok(WarpPath { pairs, total_cost })
}

fn band_filter(n: usize, m: usize, band: Option<usize>) -> impl Fn(usize, usize) -> bool {
    let (rows, cols) = ((n - 1) as f64, (m - 1) as f64);
    let limit = band.map(|w| w as f64 * rows.max(cols));
    move |i, j| match limit {
        None => true,
        Some(limit) => (i as f64 * cols - j as f64 * rows).abs() <= limit,
    }
}

/// Gathers the columns each sequence contributes along `path`.
pub fn warp(reference: &CodeMatrix, other: &CodeMatrix, path: &WarpPath) -> Result<AlignedPair> {
    if reference.dims() != other.dims() {
        return Err(Error::DimensionMismatch(format!(
            "{} vs {} code dimensions",
            reference.dims(),
            other.dims()
        )));
    }
    path.validate(reference.frames(), other.frames())?;
    let dims = reference.dims();
    let k = path.len();
    let mut ref_warped = Matrix::zeros(dims, k);
    let mut other_warped = Matrix::zeros(dims, k);
    for (col, &(i, j)) in path.pairs.iter().enumerate() {
        for c in 0..dims {
            ref_warped.set(c, col, reference.value(c, i) as f64);
            other_warped.set(c, col, other.value(c, j) as f64);
        }
    }
    Ok(AlignedPair {
        ref_warped,
        other_warped,
    })
}

//! Encoder input features: 80-bin log-mel spectrograms and pitch contours.
//!
//! Framing is 64 ms windows with a 16 ms hop at 16 kHz (1024 / 256 samples),
//! with no padding: an utterance of `n` samples yields
//! `(n - 1024) / 256 + 1` frames. The pitch tracker runs on the same grid so
//! mel columns and pitch frames pair up one to one.

use std::f64::consts::PI;
use std::sync::Arc;

use rustfft::num_complex::Complex;
use rustfft::{Fft, FftPlanner};
use serde::{Deserialize, Serialize};

use crate::preprocess::{Utterance, TARGET_SAMPLE_RATE};
use crate::{Error, Matrix, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FeatureConfig {
    pub frame_len: usize,
    pub hop: usize,
    pub n_mels: usize,
    pub fmin: f64,
    pub fmax: f64,
    /// Lower clip of the level scale, in dB.
    pub min_level_db: f64,
    /// Reference level subtracted before normalization, in dB.
    pub ref_level_db: f64,
    pub pitch_min_hz: f64,
    pub pitch_max_hz: f64,
    /// Frames whose cumulative-mean-normalized difference never drops below
    /// this value are unvoiced.
    pub voicing_threshold: f64,
    pub pitch_bins: usize,
    /// Normalized log-F0 is clamped to `±clamp_sigma` before binning.
    pub clamp_sigma: f64,
}

impl Default for FeatureConfig {
    fn default() -> Self {
        FeatureConfig {
            frame_len: 1024,
            hop: 256,
            n_mels: 80,
            fmin: 90.0,
            fmax: 7600.0,
            min_level_db: -100.0,
            ref_level_db: 16.0,
            pitch_min_hz: 55.0,
            pitch_max_hz: 600.0,
            voicing_threshold: 0.15,
            pitch_bins: 256,
            clamp_sigma: 3.0,
        }
    }
}

impl FeatureConfig {
    /// Number of analysis frames for `num_samples`, or `None` if shorter than a frame.
    pub fn num_frames(&self, num_samples: usize) -> Option<usize> {
        (num_samples >= self.frame_len).then(|| (num_samples - self.frame_len) / self.hop + 1)
    }

    fn validate(&self) -> Result<()> {
        let ok = self.frame_len >= 2
            && self.hop >= 1
            && self.n_mels >= 1
            && self.fmin >= 0.0
            && self.fmin < self.fmax
            && self.fmax <= TARGET_SAMPLE_RATE as f64 / 2.0
            && self.min_level_db < 0.0
            && self.pitch_min_hz > 0.0
            && self.pitch_min_hz < self.pitch_max_hz
            && self.pitch_bins >= 2
            && self.clamp_sigma > 0.0;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "inconsistent feature configuration: {self:?}"
            )))
        }
    }
}

/// `n_mels × T` log-mel magnitudes scaled into `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct MelSpectrogram {
    pub bins: Matrix,
    pub frame_len: usize,
    pub hop: usize,
    pub speaker_id: String,
    pub utterance_id: String,
}

impl MelSpectrogram {
    pub fn num_frames(&self) -> usize {
        self.bins.cols()
    }
}

/// Per-frame F0 in Hz, 0 for unvoiced frames.
#[derive(Debug, Clone, PartialEq)]
pub struct PitchContour {
    pub f0: Vec<f64>,
}

impl PitchContour {
    pub fn voiced(&self) -> impl Iterator<Item = f64> + '_ {
        self.f0.iter().copied().filter(|&f| f > 0.0)
    }
}

/// One-hot pitch classes; index `pitch_bins` marks unvoiced frames.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantizedPitch {
    indices: Vec<usize>,
    classes: usize,
}

impl QuantizedPitch {
    /// Hot index per frame.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Number of classes (rows of the one-hot matrix).
    pub fn classes(&self) -> usize {
        self.classes
    }

    pub fn num_frames(&self) -> usize {
        self.indices.len()
    }

    /// Dense `classes × T` binary matrix.
    pub fn one_hot(&self) -> Matrix {
        let mut m = Matrix::zeros(self.classes, self.indices.len());
        for (t, &k) in self.indices.iter().enumerate() {
            m.set(k, t, 1.0);
        }
        m
    }
}

/// Mean and standard deviation of natural-log F0 over a speaker's voiced frames.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpeakerF0Stats {
    pub mean: f64,
    pub std: f64,
    pub voiced_frames: usize,
}

impl SpeakerF0Stats {
    pub fn from_contours<'a>(contours: impl IntoIterator<Item = &'a PitchContour>) -> Self {
        let logs: Vec<f64> = contours
            .into_iter()
            .flat_map(|c| c.voiced().map(f64::ln))
            .collect();
        if logs.is_empty() {
            return SpeakerF0Stats {
                mean: 0.0,
                std: 0.0,
                voiced_frames: 0,
            };
        }
        let n = logs.len() as f64;
        let mean = logs.iter().sum::<f64>() / n;
        let var = logs.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
        SpeakerF0Stats {
            mean,
            std: var.sqrt(),
            voiced_frames: logs.len(),
        }
    }
}

/// Triangular mel filterbank on the Slaney mel scale with area normalization.
#[derive(Debug, Clone)]
pub struct MelFilterbank {
    weights: Matrix,
    centers_hz: Vec<f64>,
}

impl MelFilterbank {
    pub fn new(sample_rate: u32, n_fft: usize, n_mels: usize, fmin: f64, fmax: f64) -> Self {
        let n_freqs = n_fft / 2 + 1;
        let fft_freqs: Vec<f64> = (0..n_freqs)
            .map(|k| k as f64 * sample_rate as f64 / n_fft as f64)
            .collect();
        let (mel_lo, mel_hi) = (hz_to_mel(fmin), hz_to_mel(fmax));
        let edges: Vec<f64> = (0..n_mels + 2)
            .map(|i| mel_to_hz(mel_lo + (mel_hi - mel_lo) * i as f64 / (n_mels + 1) as f64))
            .collect();

        let mut weights = Matrix::zeros(n_mels, n_freqs);
        for m in 0..n_mels {
            let (lo, mid, hi) = (edges[m], edges[m + 1], edges[m + 2]);
            let norm = 2.0 / (hi - lo);
            for (k, &f) in fft_freqs.iter().enumerate() {
                let rising = (f - lo) / (mid - lo);
                let falling = (hi - f) / (hi - mid);
                let w = rising.min(falling).max(0.0);
                if w > 0.0 {
                    weights.set(m, k, w * norm);
                }
            }
        }
        MelFilterbank {
            weights,
            centers_hz: edges[1..=n_mels].to_vec(),
        }
    }

    pub fn weights(&self) -> &Matrix {
        &self.weights
    }

    pub fn centers_hz(&self) -> &[f64] {
        &self.centers_hz
    }

    fn apply(&self, magnitude: &[f64], out: &mut [f64]) {
        for (m, o) in out.iter_mut().enumerate() {
            *o = self
                .weights
                .row(m)
                .iter()
                .zip(magnitude)
                .map(|(w, x)| w * x)
                .sum();
        }
    }
}

const MEL_F_SP: f64 = 200.0 / 3.0;
const MEL_MIN_LOG_HZ: f64 = 1000.0;
const MEL_MIN_LOG_MEL: f64 = MEL_MIN_LOG_HZ / MEL_F_SP;

fn mel_log_step() -> f64 {
    6.4f64.ln() / 27.0
}

/// Slaney mel scale: linear below 1 kHz, logarithmic above.
pub fn hz_to_mel(hz: f64) -> f64 {
    if hz >= MEL_MIN_LOG_HZ {
        MEL_MIN_LOG_MEL + (hz / MEL_MIN_LOG_HZ).ln() / mel_log_step()
    } else {
        hz / MEL_F_SP
    }
}

pub fn mel_to_hz(mel: f64) -> f64 {
    if mel >= MEL_MIN_LOG_MEL {
        MEL_MIN_LOG_HZ * (mel_log_step() * (mel - MEL_MIN_LOG_MEL)).exp()
    } else {
        mel * MEL_F_SP
    }
}

/// Periodic Hann window.
pub fn hann_window(len: usize) -> Vec<f64> {
    (0..len)
        .map(|n| 0.5 - 0.5 * (2.0 * PI * n as f64 / len as f64).cos())
        .collect()
}

/// Reusable mel analysis state (window, FFT plan, filterbank).
pub struct MelAnalyzer {
    cfg: FeatureConfig,
    window: Vec<f64>,
    fft: Arc<dyn Fft<f64>>,
    filterbank: MelFilterbank,
}

impl MelAnalyzer {
    pub fn new(cfg: &FeatureConfig) -> Result<Self> {
        cfg.validate()?;
        Ok(MelAnalyzer {
            cfg: cfg.clone(),
            window: hann_window(cfg.frame_len),
            fft: FftPlanner::new().plan_fft_forward(cfg.frame_len),
            filterbank: MelFilterbank::new(
                TARGET_SAMPLE_RATE,
                cfg.frame_len,
                cfg.n_mels,
                cfg.fmin,
                cfg.fmax,
            ),
        })
    }

    pub fn filterbank(&self) -> &MelFilterbank {
        &self.filterbank
    }

    pub fn compute(&self, u: &Utterance) -> Result<MelSpectrogram> {
        check_rate(u)?;
        let cfg = &self.cfg;
        let frames = cfg.num_frames(u.len()).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "{} has {} samples, shorter than one {}-sample frame",
                u.utterance_id,
                u.len(),
                cfg.frame_len
            ))
        })?;

        let min_level = 10f64.powf(cfg.min_level_db / 20.0);
        let mut bins = Matrix::zeros(cfg.n_mels, frames);
        let mut buf = vec![Complex::new(0.0, 0.0); cfg.frame_len];
        let mut magnitude = vec![0.0; cfg.frame_len / 2 + 1];
        let mut mel = vec![0.0; cfg.n_mels];

        for t in 0..frames {
            let frame = &u.samples[t * cfg.hop..t * cfg.hop + cfg.frame_len];
            for ((b, &s), w) in buf.iter_mut().zip(frame).zip(&self.window) {
                *b = Complex::new(s as f64 * w, 0.0);
            }
            self.fft.process(&mut buf);
            for (m, b) in magnitude.iter_mut().zip(&buf) {
                *m = b.norm();
            }
            self.filterbank.apply(&magnitude, &mut mel);
            for (m, &energy) in mel.iter().enumerate() {
                let db = 20.0 * energy.max(min_level).log10() - cfg.ref_level_db;
                let scaled = (db - cfg.min_level_db) / -cfg.min_level_db;
                // NaN input samples would otherwise propagate past the clamp.
                let scaled = if scaled.is_nan() { 0.0 } else { scaled };
                bins.set(m, t, scaled.clamp(0.0, 1.0));
            }
        }

        Ok(MelSpectrogram {
            bins,
            frame_len: cfg.frame_len,
            hop: cfg.hop,
            speaker_id: u.speaker_id.clone(),
            utterance_id: u.utterance_id.clone(),
        })
    }
}

fn check_rate(u: &Utterance) -> Result<()> {
    if u.sample_rate != TARGET_SAMPLE_RATE {
        return Err(Error::InvalidArgument(format!(
            "{} is at {} Hz, features expect {} Hz",
            u.utterance_id, u.sample_rate, TARGET_SAMPLE_RATE
        )));
    }
    Ok(())
}

/// Mel-spectrogram with a one-off analyzer. Prefer [`MelAnalyzer`] in loops.
pub fn mel_spectrogram(u: &Utterance, cfg: &FeatureConfig) -> Result<MelSpectrogram> {
    MelAnalyzer::new(cfg)?.compute(u)
}

/// YIN-style F0 tracking on the mel frame grid.
///
/// Utterances shorter than one frame produce an empty contour.
pub fn extract_pitch(u: &Utterance, cfg: &FeatureConfig) -> Result<PitchContour> {
    cfg.validate()?;
    check_rate(u)?;
    let sr = u.sample_rate as f64;
    let frames = cfg.num_frames(u.len()).unwrap_or(0);
    let min_lag = ((sr / cfg.pitch_max_hz).floor() as usize).max(2);
    let max_lag = (sr / cfg.pitch_min_hz).ceil() as usize;
    if max_lag + 2 >= cfg.frame_len {
        return Err(Error::InvalidArgument(format!(
            "a {}-sample frame cannot resolve {} Hz",
            cfg.frame_len, cfg.pitch_min_hz
        )));
    }
    let window = cfg.frame_len - max_lag - 1;

    let f0 = (0..frames)
        .map(|t| {
            let frame: Vec<f64> = u.samples[t * cfg.hop..t * cfg.hop + cfg.frame_len]
                .iter()
                .map(|&s| s as f64)
                .collect();
            yin_frame(&frame, window, min_lag, max_lag, cfg.voicing_threshold)
                .map(|lag| sr / lag)
                .filter(|f| (cfg.pitch_min_hz..=cfg.pitch_max_hz).contains(f))
                .unwrap_or(0.0)
        })
        .collect();
    Ok(PitchContour { f0 })
}

/// Returns the refined period in samples, or `None` when unvoiced.
fn yin_frame(
    frame: &[f64],
    window: usize,
    min_lag: usize,
    max_lag: usize,
    threshold: f64,
) -> Option<f64> {
    let energy: f64 = frame[..window].iter().map(|x| x * x).sum();
    if energy < 1e-10 * window as f64 {
        return None;
    }

    let mut diff = vec![0.0; max_lag + 2];
    for (lag, d) in diff.iter_mut().enumerate().skip(1) {
        *d = (0..window)
            .map(|i| {
                let e = frame[i] - frame[i + lag];
                e * e
            })
            .sum();
    }

    let mut cmnd = vec![1.0; diff.len()];
    let mut running = 0.0;
    for lag in 1..diff.len() {
        running += diff[lag];
        cmnd[lag] = if running > 0.0 {
            diff[lag] * lag as f64 / running
        } else {
            1.0
        };
    }

    let mut lag = (min_lag..=max_lag).find(|&l| cmnd[l] < threshold)?;
    while lag < max_lag && cmnd[lag + 1] < cmnd[lag] {
        lag += 1;
    }

    let (a, b, c) = (cmnd[lag - 1], cmnd[lag], cmnd[lag + 1]);
    let denom = a - 2.0 * b + c;
    let shift = if denom.abs() > 1e-12 {
        (0.5 * (a - c) / denom).clamp(-0.5, 0.5)
    } else {
        0.0
    };
    Some(lag as f64 + shift)
}

/// Z-normalizes log-F0 with the speaker statistics and bins it.
///
/// The clamped z-score maps affinely onto `0..pitch_bins`; a value exactly
/// halfway between two bins goes to the lower one. Unvoiced frames take the
/// extra class `pitch_bins`. A speaker with zero spread (fewer than two
/// distinct voiced values) has every voiced frame placed at the centre.
pub fn quantize_pitch(
    p: &PitchContour,
    stats: &SpeakerF0Stats,
    cfg: &FeatureConfig,
) -> Result<QuantizedPitch> {
    if p.f0.is_empty() {
        return Err(Error::InvalidArgument("empty pitch contour".into()));
    }
    if !(stats.mean.is_finite() && stats.std.is_finite() && stats.std >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "invalid speaker F0 statistics {stats:?}"
        )));
    }
    let top = (cfg.pitch_bins - 1) as f64;
    let indices = p
        .f0
        .iter()
        .map(|&f| {
            if !(f > 0.0 && f.is_finite()) {
                return cfg.pitch_bins;
            }
            let z = if stats.std > 0.0 {
                ((f.ln() - stats.mean) / stats.std).clamp(-cfg.clamp_sigma, cfg.clamp_sigma)
            } else {
                0.0
            };
            let pos = (z + cfg.clamp_sigma) / (2.0 * cfg.clamp_sigma) * top;
            // Round half down.
            ((pos - 0.5).ceil().max(0.0) as usize).min(cfg.pitch_bins - 1)
        })
        .collect();
    Ok(QuantizedPitch {
        indices,
        classes: cfg.pitch_bins + 1,
    })
}

//! Audio ingestion and speech-region selection.
//!
//! Recordings go through [`trim_edges`] first and [`detect_voice_activity`]
//! second. The order matters: clicks near the recording boundaries must be
//! cut away before the VAD sees them, otherwise one side of a parallel pair
//! carries a spurious voiced segment the other side lacks.

use std::f64::consts::PI;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Sample rate every utterance is converted to on load.
pub const TARGET_SAMPLE_RATE: u32 = 16_000;

#[derive(Debug, Clone, PartialEq)]
pub struct Utterance {
    pub speaker_id: String,
    pub utterance_id: String,
    /// Mono amplitudes in `[-1, 1]`.
    pub samples: Vec<f32>,
    pub sample_rate: u32,
}

impl Utterance {
    pub fn new(
        speaker_id: impl Into<String>,
        utterance_id: impl Into<String>,
        samples: Vec<f32>,
        sample_rate: u32,
    ) -> Self {
        Utterance {
            speaker_id: speaker_id.into(),
            utterance_id: utterance_id.into(),
            samples,
            sample_rate,
        }
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn duration_secs(&self) -> f64 {
        self.samples.len() as f64 / self.sample_rate as f64
    }

    fn with_samples(&self, samples: Vec<f32>) -> Utterance {
        Utterance {
            speaker_id: self.speaker_id.clone(),
            utterance_id: self.utterance_id.clone(),
            samples,
            sample_rate: self.sample_rate,
        }
    }
}

/// A run of voiced analysis frames.
///
/// `start_sample..end_sample` is the span of audio the frames own; spans of
/// distinct segments never overlap, and the spans of all frames of an
/// utterance partition it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VadSegment {
    pub start_frame: usize,
    /// Exclusive.
    pub end_frame: usize,
    pub start_sample: usize,
    pub end_sample: usize,
    /// Mean frame energy in dB relative to the loudest frame of the utterance.
    pub mean_energy: f64,
}

impl VadSegment {
    pub fn num_frames(&self) -> usize {
        self.end_frame - self.start_frame
    }

    pub fn num_samples(&self) -> usize {
        self.end_sample - self.start_sample
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VadConfig {
    pub frame_ms: f64,
    pub hop_ms: f64,
    /// Frames louder than `peak + threshold_db` are voiced.
    pub threshold_db: f64,
    /// Voiced runs shorter than this are discarded.
    pub min_segment_frames: usize,
}

impl Default for VadConfig {
    fn default() -> Self {
        VadConfig {
            frame_ms: 25.0,
            hop_ms: 10.0,
            threshold_db: -35.0,
            min_segment_frames: 3,
        }
    }
}

impl VadConfig {
    fn frame_geometry(&self, sample_rate: u32) -> Result<(usize, usize)> {
        let frame = (self.frame_ms * sample_rate as f64 / 1000.0).round();
        let hop = (self.hop_ms * sample_rate as f64 / 1000.0).round();
        if !(frame >= 1.0 && hop >= 1.0 && hop <= frame) {
            return Err(Error::InvalidArgument(format!(
                "VAD framing needs 0 < hop <= frame, got frame {} ms, hop {} ms",
                self.frame_ms, self.hop_ms
            )));
        }
        if !self.threshold_db.is_finite() || self.threshold_db > 0.0 {
            return Err(Error::InvalidArgument(format!(
                "VAD threshold must be a finite non-positive dB value, got {}",
                self.threshold_db
            )));
        }
        Ok((frame as usize, hop as usize))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PreprocessConfig {
    /// Fraction cut from each end of a recording before VAD.
    pub trim_fraction: f64,
    pub vad: VadConfig,
}

impl Default for PreprocessConfig {
    fn default() -> Self {
        PreprocessConfig {
            trim_fraction: 0.15,
            vad: VadConfig::default(),
        }
    }
}

/// Reads a PCM WAV file as a mono 16 kHz utterance.
///
/// Channels are averaged. Integer formats are scaled by `2^(bits-1)`, float
/// samples are clamped to `[-1, 1]`. The utterance id is the file stem; the
/// speaker id is left empty for the caller to fill in.
pub fn load_audio(path: impl AsRef<Path>) -> Result<Utterance> {
    let path = path.as_ref();
    let reader = hound::WavReader::open(path).map_err(|e| wav_error(path, e))?;
    let spec = reader.spec();
    let channels = spec.channels as usize;
    if channels == 0 {
        return Err(unsupported(path, "zero channels"));
    }

    let interleaved: Vec<f32> = match (spec.sample_format, spec.bits_per_sample) {
        (hound::SampleFormat::Float, 32) => reader
            .into_samples::<f32>()
            .map(|s| s.map(|v| if v.is_nan() { 0.0 } else { v.clamp(-1.0, 1.0) }))
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| wav_error(path, e))?,
        (hound::SampleFormat::Int, bits @ (8 | 16 | 24 | 32)) => {
            let scale = 1.0 / (1u64 << (bits - 1)) as f64;
            reader
                .into_samples::<i32>()
                .map(|s| s.map(|v| (v as f64 * scale) as f32))
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| wav_error(path, e))?
        }
        (format, bits) => {
            return Err(unsupported(
                path,
                &format!("{bits}-bit {format:?} samples are not supported"),
            ))
        }
    };

    let mono = downmix(&interleaved, channels);
    if mono.is_empty() {
        return Err(unsupported(path, "zero-length audio"));
    }
    let samples = if spec.sample_rate == TARGET_SAMPLE_RATE {
        mono
    } else {
        resample(&mono, spec.sample_rate, TARGET_SAMPLE_RATE)
    };

    let utterance_id = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    Ok(Utterance::new("", utterance_id, samples, TARGET_SAMPLE_RATE))
}

/// Writes a mono utterance as 32-bit float WAV.
pub fn write_wav(u: &Utterance, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let spec = hound::WavSpec {
        channels: 1,
        sample_rate: u.sample_rate,
        bits_per_sample: 32,
        sample_format: hound::SampleFormat::Float,
    };
    let mut writer = hound::WavWriter::create(path, spec).map_err(|e| wav_error(path, e))?;
    for &s in &u.samples {
        writer.write_sample(s).map_err(|e| wav_error(path, e))?;
    }
    writer.finalize().map_err(|e| wav_error(path, e))
}

fn wav_error(path: &Path, err: hound::Error) -> Error {
    match err {
        hound::Error::IoError(e) => Error::io(path, e),
        other => unsupported(path, &other.to_string()),
    }
}

fn unsupported(path: &Path, reason: &str) -> Error {
    Error::UnsupportedAudio {
        path: path.to_path_buf(),
        reason: reason.to_string(),
    }
}

fn downmix(interleaved: &[f32], channels: usize) -> Vec<f32> {
    if channels == 1 {
        return interleaved.to_vec();
    }
    interleaved
        .chunks_exact(channels)
        .map(|frame| (frame.iter().map(|&s| s as f64).sum::<f64>() / channels as f64) as f32)
        .collect()
}

const RESAMPLE_ZERO_CROSSINGS: usize = 32;
const RESAMPLE_ROLLOFF: f64 = 0.945;
const KAISER_BETA: f64 = 8.6;

/// Band-limited resampling with a Kaiser-windowed sinc kernel.
pub fn resample(input: &[f32], from_rate: u32, to_rate: u32) -> Vec<f32> {
    if from_rate == to_rate || input.is_empty() {
        return input.to_vec();
    }
    let ratio = to_rate as f64 / from_rate as f64;
    let out_len = ((input.len() as u64 * to_rate as u64).div_ceil(from_rate as u64)) as usize;
    // Cutoff relative to the input Nyquist frequency.
    let cutoff = ratio.min(1.0) * RESAMPLE_ROLLOFF;
    let half_width = RESAMPLE_ZERO_CROSSINGS as f64 / cutoff;
    let i0_beta = bessel_i0(KAISER_BETA);

    (0..out_len)
        .map(|n| {
            let center = n as f64 / ratio;
            let lo = (center - half_width).ceil().max(0.0) as usize;
            let hi = ((center + half_width).floor() as usize).min(input.len() - 1);
            let mut acc = 0.0;
            for (k, &x) in input.iter().enumerate().take(hi + 1).skip(lo) {
                let offset = center - k as f64;
                let r = offset / half_width;
                let window = bessel_i0(KAISER_BETA * (1.0 - r * r).max(0.0).sqrt()) / i0_beta;
                acc += x as f64 * cutoff * sinc(cutoff * offset) * window;
            }
            acc as f32
        })
        .collect()
}

fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-12 {
        1.0
    } else {
        (PI * x).sin() / (PI * x)
    }
}

// Zeroth-order modified Bessel function of the first kind, power series.
fn bessel_i0(x: f64) -> f64 {
    let half_sq = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..64 {
        term *= half_sq / (k * k) as f64;
        sum += term;
        if term < sum * 1e-17 {
            break;
        }
    }
    sum
}

/// Removes `floor(fraction * len)` samples from each end.
pub fn trim_edges(u: &Utterance, fraction: f64) -> Result<Utterance> {
    if !(0.0..0.5).contains(&fraction) {
        return Err(Error::InvalidArgument(format!(
            "trim fraction must lie in [0, 0.5), got {fraction}"
        )));
    }
    let cut = (fraction * u.len() as f64).floor() as usize;
    if u.len() <= 2 * cut || u.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "trimming {} of {} samples leaves nothing in {}",
            2 * cut,
            u.len(),
            u.utterance_id
        )));
    }
    Ok(u.with_samples(u.samples[cut..u.len() - cut].to_vec()))
}

/// Relative-energy voice activity detection.
///
/// Frames whose mean-square energy lies within `threshold_db` of the loudest
/// frame are voiced. The decision depends only on energy ratios, so scaling
/// the signal by a positive constant does not change the segments.
pub fn detect_voice_activity(u: &Utterance, cfg: &VadConfig) -> Result<Vec<VadSegment>> {
    let (frame_len, hop) = cfg.frame_geometry(u.sample_rate)?;
    if u.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "empty utterance {}",
            u.utterance_id
        )));
    }

    let len = u.len();
    let num_frames = if len <= frame_len {
        1
    } else {
        1 + (len - frame_len).div_ceil(hop)
    };
    let energies: Vec<f64> = (0..num_frames)
        .map(|f| {
            let start = f * hop;
            let end = (start + frame_len).min(len);
            let frame = &u.samples[start..end];
            frame.iter().map(|&s| (s as f64) * (s as f64)).sum::<f64>() / frame.len() as f64
        })
        .collect();

    let peak = energies.iter().cloned().fold(0.0, f64::max);
    if peak <= 0.0 {
        return Ok(Vec::new());
    }
    let floor = peak * 10f64.powf(cfg.threshold_db / 10.0);

    // Each frame owns the hop-length stretch around its centre; the first
    // and last frames extend to the utterance boundaries.
    let offset = (frame_len - hop) / 2;
    let owned_start = |f: usize| if f == 0 { 0 } else { (f * hop + offset).min(len) };
    let owned_end = |f: usize| {
        if f + 1 == num_frames {
            len
        } else {
            ((f + 1) * hop + offset).min(len)
        }
    };

    let mut segments = Vec::new();
    let mut f = 0;
    while f < num_frames {
        if energies[f] <= floor {
            f += 1;
            continue;
        }
        let start = f;
        while f < num_frames && energies[f] > floor {
            f += 1;
        }
        if f - start >= cfg.min_segment_frames.max(1) {
            let mean = energies[start..f].iter().sum::<f64>() / (f - start) as f64;
            segments.push(VadSegment {
                start_frame: start,
                end_frame: f,
                start_sample: owned_start(start),
                end_sample: owned_end(f - 1),
                mean_energy: 10.0 * (mean / peak).log10(),
            });
        }
    }
    Ok(segments)
}

/// Concatenates the sample spans of `segments`, in order.
///
/// An empty segment list means no speech was found; callers skip such
/// utterances.
pub fn apply_vad(u: &Utterance, segments: &[VadSegment]) -> Result<Utterance> {
    if segments.is_empty() {
        return Err(Error::NoSpeech(format!(
            "{}/{}",
            u.speaker_id, u.utterance_id
        )));
    }
    let mut previous_end = 0;
    let mut out = Vec::with_capacity(segments.iter().map(VadSegment::num_samples).sum());
    for seg in segments {
        if seg.start_frame >= seg.end_frame
            || seg.start_sample >= seg.end_sample
            || seg.start_sample < previous_end
            || seg.end_sample > u.len()
        {
            return Err(Error::InvalidArgument(format!(
                "segment {seg:?} does not fit utterance {} of {} samples",
                u.utterance_id,
                u.len()
            )));
        }
        out.extend_from_slice(&u.samples[seg.start_sample..seg.end_sample]);
        previous_end = seg.end_sample;
    }
    Ok(u.with_samples(out))
}

/// Trim, then VAD, then keep voiced audio.
pub fn preprocess(u: &Utterance, cfg: &PreprocessConfig) -> Result<(Utterance, Vec<VadSegment>)> {
    let trimmed = trim_edges(u, cfg.trim_fraction)?;
    let segments = detect_voice_activity(&trimmed, &cfg.vad)?;
    let voiced = apply_vad(&trimmed, &segments)?;
    Ok((voiced, segments))
}

//! Latent code matrices and their on-disk form.
//!
//! # CDM1 layout
//!
//! All integers little-endian.
//!
//! | offset | size | field                                                  |
//! |-------:|-----:|--------------------------------------------------------|
//! | 0      | 4    | magic `b"CDM1"`                                        |
//! | 4      | 1    | version, `1`                                           |
//! | 5      | 1    | kind: 0 content, 1 rhythm, 2 frequency, 3 raw mel      |
//! | 6      | 3    | reserved, zero                                         |
//! | 9      | 4    | `C` (u32), code dimensions                             |
//! | 13     | 4    | `T` (u32), frames                                      |
//! | 17     | 4    | CRC-32 (IEEE) of bytes `0..17` followed by the payload |
//! | 21     | 4·C·T| payload, `f32`, row-major (row = dimension)            |
//!
//! The checksum makes every single-byte corruption, header or payload,
//! detectable on load.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::features::MelSpectrogram;
use crate::{Error, Result};

pub const CDM1_MAGIC: [u8; 4] = *b"CDM1";
pub const CDM1_VERSION: u8 = 1;
pub const CDM1_HEADER_LEN: usize = 21;
const CRC_OFFSET: usize = 17;

/// Code dimensionality of the content encoder bottleneck.
pub const CONTENT_DIMS: usize = 16;
pub const RAW_MEL_DIMS: usize = 80;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CodeKind {
    Content,
    Rhythm,
    Frequency,
    RawMel,
}

impl CodeKind {
    pub fn to_byte(self) -> u8 {
        match self {
            CodeKind::Content => 0,
            CodeKind::Rhythm => 1,
            CodeKind::Frequency => 2,
            CodeKind::RawMel => 3,
        }
    }

    pub fn from_byte(b: u8) -> Option<Self> {
        Some(match b {
            0 => CodeKind::Content,
            1 => CodeKind::Rhythm,
            2 => CodeKind::Frequency,
            3 => CodeKind::RawMel,
            _ => return None,
        })
    }

    /// Fixed dimensionality, where the kind has one.
    pub fn expected_dims(self) -> Option<usize> {
        match self {
            CodeKind::Content => Some(CONTENT_DIMS),
            CodeKind::RawMel => Some(RAW_MEL_DIMS),
            CodeKind::Rhythm | CodeKind::Frequency => None,
        }
    }
}

impl fmt::Display for CodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodeKind::Content => "content",
            CodeKind::Rhythm => "rhythm",
            CodeKind::Frequency => "frequency",
            CodeKind::RawMel => "raw_mel",
        })
    }
}

/// A `C × T` latent code sequence for one utterance.
#[derive(Debug, Clone, PartialEq)]
pub struct CodeMatrix {
    kind: CodeKind,
    dims: usize,
    frames: usize,
    values: Vec<f32>,
    pub speaker_id: String,
    pub utterance_id: String,
}

impl CodeMatrix {
    /// `values` is row-major, `dims` rows of `frames` columns.
    pub fn new(
        kind: CodeKind,
        dims: usize,
        frames: usize,
        values: Vec<f32>,
        speaker_id: impl Into<String>,
        utterance_id: impl Into<String>,
    ) -> Result<Self> {
        validate_shape(kind, dims, frames)?;
        if dims.checked_mul(frames) != Some(values.len()) {
            return Err(Error::DimensionMismatch(format!(
                "{dims}×{frames} code matrix given {} values",
                values.len()
            )));
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "non-finite code value at dimension {}, frame {}",
                pos / frames,
                pos % frames
            )));
        }
        Ok(CodeMatrix {
            kind,
            dims,
            frames,
            values,
            speaker_id: speaker_id.into(),
            utterance_id: utterance_id.into(),
        })
    }

    pub fn with_identity(mut self, speaker_id: impl Into<String>, utterance_id: impl Into<String>) -> Self {
        self.speaker_id = speaker_id.into();
        self.utterance_id = utterance_id.into();
        self
    }

    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn frames(&self) -> usize {
        self.frames
    }

    pub fn values(&self) -> &[f32] {
        &self.values
    }

    #[inline]
    pub fn value(&self, dim: usize, frame: usize) -> f32 {
        self.values[dim * self.frames + frame]
    }

    pub fn column(&self, frame: usize) -> Vec<f64> {
        (0..self.dims).map(|c| self.value(c, frame) as f64).collect()
    }

    /// Values transposed to frame-major order, widened to `f64`.
    pub fn frame_major(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.values.len()];
        for c in 0..self.dims {
            for t in 0..self.frames {
                out[t * self.dims + c] = self.value(c, t) as f64;
            }
        }
        out
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut buf = Vec::with_capacity(CDM1_HEADER_LEN + 4 * self.values.len());
        buf.extend_from_slice(&CDM1_MAGIC);
        buf.push(CDM1_VERSION);
        buf.push(self.kind.to_byte());
        buf.extend_from_slice(&[0; 3]);
        buf.extend_from_slice(&(self.dims as u32).to_le_bytes());
        buf.extend_from_slice(&(self.frames as u32).to_le_bytes());
        buf.extend_from_slice(&[0; 4]);
        for v in &self.values {
            buf.extend_from_slice(&v.to_le_bytes());
        }
        let crc = checksum(&buf);
        buf[CRC_OFFSET..CDM1_HEADER_LEN].copy_from_slice(&crc.to_le_bytes());
        buf
    }

    /// Parses a CDM1 image. Identity fields are left empty.
    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        if bytes.len() < CDM1_HEADER_LEN {
            return Err(format_err(format!(
                "{} bytes is shorter than the {CDM1_HEADER_LEN}-byte header",
                bytes.len()
            )));
        }
        if bytes[..4] != CDM1_MAGIC {
            return Err(format_err("bad magic"));
        }
        if bytes[4] != CDM1_VERSION {
            return Err(format_err(format!("unsupported version {}", bytes[4])));
        }
        let kind = CodeKind::from_byte(bytes[5])
            .ok_or_else(|| format_err(format!("unknown kind byte {}", bytes[5])))?;
        if bytes[6..9] != [0; 3] {
            return Err(format_err("reserved bytes are not zero"));
        }
        let dims = read_u32(bytes, 9) as usize;
        let frames = read_u32(bytes, 13) as usize;
        validate_shape(kind, dims, frames).map_err(|e| format_err(e.to_string()))?;

        let payload_len = dims
            .checked_mul(frames)
            .and_then(|n| n.checked_mul(4))
            .ok_or_else(|| format_err("dimensions overflow"))?;
        let expected = CDM1_HEADER_LEN + payload_len;
        if bytes.len() < expected {
            return Err(format_err(format!(
                "truncated payload: {} of {payload_len} bytes",
                bytes.len() - CDM1_HEADER_LEN
            )));
        }
        if bytes.len() > expected {
            return Err(format_err(format!(
                "{} trailing bytes after payload",
                bytes.len() - expected
            )));
        }

        let stored = read_u32(bytes, CRC_OFFSET);
        if stored != checksum(bytes) {
            return Err(format_err("checksum mismatch"));
        }

        let values: Vec<f32> = bytes[CDM1_HEADER_LEN..]
            .chunks_exact(4)
            .map(|c| f32::from_le_bytes([c[0], c[1], c[2], c[3]]))
            .collect();
        CodeMatrix::new(kind, dims, frames, values, "", "").map_err(|e| format_err(e.to_string()))
    }
}

fn validate_shape(kind: CodeKind, dims: usize, frames: usize) -> Result<()> {
    if dims == 0 || frames == 0 {
        return Err(Error::DimensionMismatch(format!(
            "empty {dims}×{frames} code matrix"
        )));
    }
    if dims > u32::MAX as usize || frames > u32::MAX as usize {
        return Err(Error::DimensionMismatch(format!(
            "{dims}×{frames} exceeds the format's u32 dimensions"
        )));
    }
    if let Some(expected) = kind.expected_dims() {
        if dims != expected {
            return Err(Error::DimensionMismatch(format!(
                "{kind} codes have {expected} dimensions, got {dims}"
            )));
        }
    }
    Ok(())
}

/// CRC over the fixed header fields and the payload, skipping the CRC slot.
fn checksum(image: &[u8]) -> u32 {
    let mut hasher = crc32fast::Hasher::new();
    hasher.update(&image[..CRC_OFFSET]);
    hasher.update(&image[CDM1_HEADER_LEN..]);
    hasher.finalize()
}

fn read_u32(bytes: &[u8], at: usize) -> u32 {
    u32::from_le_bytes([bytes[at], bytes[at + 1], bytes[at + 2], bytes[at + 3]])
}

fn format_err(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

/// Loads a CDM1 file.
///
/// The utterance id is taken from the file name up to the first `.`, with an
/// optional `<speaker>__` prefix split off into the speaker id.
pub fn load_code_matrix(path: impl AsRef<Path>) -> Result<CodeMatrix> {
    let path = path.as_ref();
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    let mut m = CodeMatrix::from_bytes(&bytes)
        .map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    let name = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let stem = name.split('.').next().unwrap_or_default();
    match stem.split_once("__") {
        Some((speaker, utt)) => {
            m.speaker_id = speaker.to_string();
            m.utterance_id = utt.to_string();
        }
        None => m.utterance_id = stem.to_string(),
    }
    Ok(m)
}

/// Writes `m` as CDM1. Matrices built through [`CodeMatrix::new`] are always
/// finite, so nothing invalid can reach the disk.
pub fn write_code_matrix(m: &CodeMatrix, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, m.to_bytes()).map_err(|e| Error::io(path, e))
}

/// Uses the mel-spectrogram itself as an 80-dimensional code sequence.
pub fn mel_passthrough_codes(mel: &MelSpectrogram) -> Result<CodeMatrix> {
    let (rows, cols) = mel.bins.shape();
    CodeMatrix::new(
        CodeKind::RawMel,
        rows,
        cols,
        mel.bins.as_slice().iter().map(|&v| v as f32).collect(),
        mel.speaker_id.clone(),
        mel.utterance_id.clone(),
    )
}

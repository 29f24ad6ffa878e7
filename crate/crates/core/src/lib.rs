//! Reference-based intelligibility scoring of speech from latent code sequences.
//!
//! The pipeline takes parallel utterances of a healthy reference speaker and an
//! assessed speaker, reduces each to a `C × T` code matrix, aligns the pair with
//! dynamic time warping, and averages the squared differences of the aligned
//! codes into a per-speaker intelligibility index. The [`evaluate`] module runs
//! that score over a corpus and correlates it with subjective ratings.
//!
//! Module map:
//!
//! - [`preprocess`]: WAV ingestion, edge trimming, energy VAD
//! - [`features`]: mel-spectrograms and pitch contours
//! - [`codes`]: the code-matrix model and the CDM1 file format
//! - [`align`]: multivariate DTW and path warping
//! - [`score`]: squared-difference matrices and the intelligibility index
//! - [`stats`]: correlation, p-values and regression
//! - [`evaluate`]: manifests, reference pairs, reports, subsampling
//! - [`synthetic`]: deterministic synthetic corpora for tests and demos

pub mod align;
pub mod codes;
mod error;
pub mod evaluate;
pub mod features;
mod matrix;
pub mod preprocess;
pub mod score;
pub mod stats;
pub mod synthetic;

pub use align::{dtw, dtw_with, frame_distance, warp, AlignedPair, DtwOptions, WarpPath};
pub use codes::{load_code_matrix, mel_passthrough_codes, write_code_matrix, CodeKind, CodeMatrix};
pub use error::{Error, ErrorCategory, Result};
pub use evaluate::{
    load_manifest, run_evaluation, run_reference_sweep, score_speaker, subsample_experiment,
    CodeProvider, EvalOptions, EvaluationReport, Manifest, ReferencePair, SpeakerRecord,
    SubsampleOptions, SubsampleResult,
};
pub use features::{
    extract_pitch, mel_spectrogram, quantize_pitch, FeatureConfig, MelSpectrogram, PitchContour,
    QuantizedPitch, SpeakerF0Stats,
};
pub use matrix::Matrix;
pub use preprocess::{
    apply_vad, detect_voice_activity, load_audio, trim_edges, PreprocessConfig, Utterance,
    VadConfig, VadSegment,
};
pub use score::{diff_matrix, intelligibility_index, DiffMatrix, IndexMode, IntelligibilityIndex};
pub use stats::{linear_regression, pearson, spearman, CorrelationResult, Regression};

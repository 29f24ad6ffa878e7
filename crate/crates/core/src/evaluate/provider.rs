use std::collections::HashMap;

use crate::codes::{load_code_matrix, mel_passthrough_codes, CodeKind, CodeMatrix};
use crate::features::{FeatureConfig, MelAnalyzer};
use crate::preprocess::{load_audio, preprocess, PreprocessConfig};
use crate::{Error, Result};

use super::manifest::UtteranceRef;

/// Source of code matrices for manifest utterances.
///
/// Implementations return [`Error::NoSpeech`] for utterances that hold no
/// usable speech; the evaluation skips those and records them.
pub trait CodeProvider: Sync {
    fn codes(&self, speaker_id: &str, utterance: &UtteranceRef) -> Result<CodeMatrix>;

    fn name(&self) -> &str;
}

/// Reads precomputed CDM1 files named by the manifest.
#[derive(Debug, Clone, Default)]
pub struct CdmFileProvider {
    /// Reject files of any other kind when set.
    pub expected_kind: Option<CodeKind>,
}

impl CodeProvider for CdmFileProvider {
    fn codes(&self, speaker_id: &str, utterance: &UtteranceRef) -> Result<CodeMatrix> {
        let mut m = load_code_matrix(&utterance.path)?;
        if let Some(kind) = self.expected_kind {
            if m.kind() != kind {
                return Err(Error::InvalidArgument(format!(
                    "{} holds {} codes, expected {kind}",
                    utterance.path.display(),
                    m.kind()
                )));
            }
        }
        m.speaker_id = speaker_id.to_string();
        m.utterance_id = utterance.utterance_id.clone();
        Ok(m)
    }

    fn name(&self) -> &str {
        "cdm-files"
    }
}

/// Loads WAV audio, preprocesses it and uses the mel-spectrogram as codes.
pub struct MelPassthroughProvider {
    preprocess: PreprocessConfig,
    analyzer: MelAnalyzer,
}

impl MelPassthroughProvider {
    pub fn new(preprocess: PreprocessConfig, features: &FeatureConfig) -> Result<Self> {
        Ok(MelPassthroughProvider {
            preprocess,
            analyzer: MelAnalyzer::new(features)?,
        })
    }
}

impl CodeProvider for MelPassthroughProvider {
    fn codes(&self, speaker_id: &str, utterance: &UtteranceRef) -> Result<CodeMatrix> {
        let mut audio = load_audio(&utterance.path)?;
        audio.speaker_id = speaker_id.to_string();
        audio.utterance_id = utterance.utterance_id.clone();
        let (voiced, _) = preprocess(&audio, &self.preprocess)?;
        let mel = self.analyzer.compute(&voiced).map_err(|e| match e {
            // Speech shorter than one analysis frame is as good as none.
            Error::InvalidArgument(msg) => Error::NoSpeech(msg),
            other => other,
        })?;
        mel_passthrough_codes(&mel)
    }

    fn name(&self) -> &str {
        "mel-passthrough"
    }
}

/// Codes held in memory, keyed by `(speaker, utterance)`.
#[derive(Debug, Clone, Default)]
pub struct InMemoryProvider {
    codes: HashMap<(String, String), CodeMatrix>,
}

impl InMemoryProvider {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, m: CodeMatrix) {
        self.codes
            .insert((m.speaker_id.clone(), m.utterance_id.clone()), m);
    }

    pub fn get(&self, speaker_id: &str, utterance_id: &str) -> Option<&CodeMatrix> {
        self.codes
            .get(&(speaker_id.to_string(), utterance_id.to_string()))
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &CodeMatrix> {
        self.codes.values()
    }
}

impl CodeProvider for InMemoryProvider {
    fn codes(&self, speaker_id: &str, utterance: &UtteranceRef) -> Result<CodeMatrix> {
        self.get(speaker_id, &utterance.utterance_id)
            .cloned()
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "no codes for {speaker_id}/{}",
                    utterance.utterance_id
                ))
            })
    }

    fn name(&self) -> &str {
        "in-memory"
    }
}

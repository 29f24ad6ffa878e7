//! TOML run configuration. Every field has a default, and command-line flags
//! override whatever the file sets.

use std::path::Path;

use codediv_core::{DtwOptions, FeatureConfig, IndexMode, PreprocessConfig, ReferencePair};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum ProviderChoice {
    /// Precomputed CDM1 files named by the manifest.
    #[default]
    CdmFiles,
    /// WAV files, preprocessed, with the mel-spectrogram as codes.
    MelPassthrough,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EvaluationConfig {
    pub index_mode: IndexMode,
    pub control_intelligibility: f64,
    pub dtw: DtwOptions,
    pub reference_pairs: Vec<ReferencePair>,
}

impl Default for EvaluationConfig {
    fn default() -> Self {
        let opts = codediv_core::EvalOptions::default();
        EvaluationConfig {
            index_mode: opts.index_mode,
            control_intelligibility: opts.control_intelligibility,
            dtw: opts.dtw,
            reference_pairs: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SubsampleConfig {
    pub n_utterances: usize,
    pub iterations: usize,
}

impl Default for SubsampleConfig {
    fn default() -> Self {
        let d = codediv_core::SubsampleOptions::default();
        SubsampleConfig {
            n_utterances: d.n_utterances,
            iterations: d.iterations,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub provider: ProviderChoice,
    pub seed: u64,
    pub preprocess: PreprocessConfig,
    pub features: FeatureConfig,
    pub evaluation: EvaluationConfig,
    pub subsample: SubsampleConfig,
}

impl RunConfig {
    pub fn load(path: Option<&Path>) -> Result<Self, CliError> {
        let Some(path) = path else {
            return Ok(RunConfig::default());
        };
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        toml::from_str(&text)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }

    pub fn eval_options(&self) -> codediv_core::EvalOptions {
        codediv_core::EvalOptions {
            dtw: self.evaluation.dtw.clone(),
            index_mode: self.evaluation.index_mode,
            control_intelligibility: self.evaluation.control_intelligibility,
        }
    }
}

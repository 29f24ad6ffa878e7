//! Deterministic synthetic corpora with a known degradation ordering.
//!
//! Two reference speakers (one per gender) get smooth random content-code
//! sequences. Subject `k` copies its gender-matched reference's codes,
//! optionally re-times them by randomly repeating or dropping frames, and adds
//! Gaussian noise of level `ε_k`. Its subjective score is `100 − 10k`, so a
//! working scorer has to rank subjects in reverse order of `ε_k`.

use std::path::{Path, PathBuf};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::codes::{write_code_matrix, CodeKind, CodeMatrix, CONTENT_DIMS};
use crate::evaluate::{
    Gender, Group, InMemoryProvider, Manifest, ReferencePair, SpeakerRecord, UtteranceRef,
};
use crate::{Error, Result};

pub const FEMALE_REFERENCE: &str = "CF00";
pub const MALE_REFERENCE: &str = "CM00";

#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticConfig {
    pub subjects: usize,
    pub utterances: usize,
    pub min_frames: usize,
    pub max_frames: usize,
    /// Noise level of subject `k` is `noise_scale · √(k + 1)`.
    pub noise_scale: f64,
    /// Randomly drop and repeat subject frames so alignment has work to do.
    pub retime: bool,
    pub seed: u64,
}

impl Default for SyntheticConfig {
    fn default() -> Self {
        SyntheticConfig {
            subjects: 10,
            utterances: 20,
            min_frames: 30,
            max_frames: 50,
            noise_scale: 0.3,
            retime: true,
            seed: 2023,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SyntheticCorpus {
    pub manifest: Manifest,
    pub codes: InMemoryProvider,
    pub reference_pair: ReferencePair,
    /// Noise level per subject id.
    pub noise_levels: Vec<(String, f64)>,
}

pub fn subject_id(k: usize) -> String {
    format!("S{:02}", k + 1)
}

fn cdm_name(speaker: &str, utterance: &str) -> String {
    format!("{speaker}__{utterance}.content.cdm")
}

impl SyntheticCorpus {
    pub fn generate(cfg: &SyntheticConfig) -> Result<Self> {
        if cfg.subjects == 0
            || cfg.subjects > 11
            || cfg.utterances == 0
            || cfg.min_frames < 2
            || cfg.min_frames > cfg.max_frames
        {
            return Err(Error::InvalidArgument(format!(
                "unusable synthetic corpus configuration {cfg:?}"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let utterance_ids: Vec<String> = (0..cfg.utterances).map(|u| format!("utt_{u:03}")).collect();

        let mut codes = InMemoryProvider::new();
        let mut speakers = Vec::new();
        let mut refs = Vec::new();

        // The male reference reads the same material with a small speaker offset.
        let base: Vec<Vec<f32>> = utterance_ids
            .iter()
            .map(|_| {
                let frames = rng.gen_range(cfg.min_frames..=cfg.max_frames);
                smooth_sequence(&mut rng, frames)
            })
            .collect();
        for (id, gender, offset) in [(FEMALE_REFERENCE, Gender::Female, 0.0), (MALE_REFERENCE, Gender::Male, 0.1)] {
            let mut per_utt = Vec::new();
            for (utt, seq) in utterance_ids.iter().zip(&base) {
                let values: Vec<f32> = seq
                    .iter()
                    .map(|&v| v + (offset * rng.sample::<f64, _>(StandardNormal)) as f32)
                    .collect();
                let frames = values.len() / CONTENT_DIMS;
                let m = CodeMatrix::new(CodeKind::Content, CONTENT_DIMS, frames, values, id, utt.clone())?;
                per_utt.push(m.clone());
                codes.insert(m);
            }
            refs.push(per_utt);
            speakers.push(record(id, gender, Group::Control, None, &utterance_ids));
        }

        let mut noise_levels = Vec::new();
        for k in 0..cfg.subjects {
            let id = subject_id(k);
            let gender = if k % 2 == 0 { Gender::Female } else { Gender::Male };
            let reference = &refs[if gender == Gender::Female { 0 } else { 1 }];
            let eps = cfg.noise_scale * ((k + 1) as f64).sqrt();
            for m in reference {
                let base = if cfg.retime {
                    retime(&mut rng, m)
                } else {
                    m.values().to_vec()
                };
                let values: Vec<f32> = base
                    .iter()
                    .map(|&v| (v as f64 + eps * rng.sample::<f64, _>(StandardNormal)) as f32)
                    .collect();
                let frames = values.len() / CONTENT_DIMS;
                codes.insert(CodeMatrix::new(
                    CodeKind::Content,
                    CONTENT_DIMS,
                    frames,
                    values,
                    id.clone(),
                    m.utterance_id.clone(),
                )?);
            }
            let (group, score) = if k == 0 {
                (Group::Control, None)
            } else {
                (Group::Pathological, Some(100.0 - 10.0 * k as f64))
            };
            speakers.push(record(&id, gender, group, score, &utterance_ids));
            noise_levels.push((id, eps));
        }

        Ok(SyntheticCorpus {
            manifest: Manifest::new(speakers)?,
            codes,
            reference_pair: ReferencePair::new(FEMALE_REFERENCE, MALE_REFERENCE),
            noise_levels,
        })
    }

    /// Writes `manifest.csv` and one CDM1 file per utterance into `dir`,
    /// returning the manifest path.
    pub fn write(&self, dir: impl AsRef<Path>) -> Result<PathBuf> {
        let dir = dir.as_ref();
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        for m in self.codes.iter() {
            write_code_matrix(m, dir.join(cdm_name(&m.speaker_id, &m.utterance_id)))?;
        }
        let path = dir.join("manifest.csv");
        std::fs::write(&path, self.manifest.to_csv()).map_err(|e| Error::io(&path, e))?;
        Ok(path)
    }
}

fn record(id: &str, gender: Gender, group: Group, score: Option<f64>, utts: &[String]) -> SpeakerRecord {
    SpeakerRecord {
        speaker_id: id.to_string(),
        gender,
        group,
        subjective_intelligibility: score,
        utterances: utts
            .iter()
            .map(|u| UtteranceRef {
                utterance_id: u.clone(),
                path: PathBuf::from(cdm_name(id, u)),
            })
            .collect(),
    }
}

/// Row-major `16 × frames` AR(1) sequence per dimension.
fn smooth_sequence(rng: &mut ChaCha8Rng, frames: usize) -> Vec<f32> {
    let mut values = vec![0.0f32; CONTENT_DIMS * frames];
    for c in 0..CONTENT_DIMS {
        let mut state: f64 = rng.sample(StandardNormal);
        for t in 0..frames {
            state = 0.8 * state + 0.6 * rng.sample::<f64, _>(StandardNormal);
            values[c * frames + t] = state as f32;
        }
    }
    values
}

/// Repeats or drops frames at random; returns row-major values.
fn retime(rng: &mut ChaCha8Rng, m: &CodeMatrix) -> Vec<f32> {
    let mut columns: Vec<usize> = Vec::with_capacity(m.frames() * 2);
    for t in 0..m.frames() {
        let copies = match rng.gen_range(0..10) {
            0 => 0,
            1 | 2 => 2,
            _ => 1,
        };
        columns.extend(std::iter::repeat_n(t, copies));
    }
    if columns.is_empty() {
        columns.push(0);
    }
    let mut values = vec![0.0f32; m.dims() * columns.len()];
    for c in 0..m.dims() {
        for (k, &t) in columns.iter().enumerate() {
            values[c * columns.len() + k] = m.value(c, t);
        }
    }
    values
}

use std::collections::BTreeMap;

use log::warn;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::align::{dtw_with, warp, DtwOptions};
use crate::codes::CodeMatrix;
use crate::score::{diff_matrix, index_from_summaries, DiffSummary, IndexMode, IntelligibilityIndex};
use crate::stats::{correlate, mean_std, CorrelationResult};
use crate::{Error, Result};

use super::manifest::{Gender, Group, Manifest, SpeakerRecord};
use super::provider::CodeProvider;
use super::report::{EvaluationReport, SpeakerFailure, SpeakerResult};

/// One healthy female and one healthy male reference speaker.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferencePair {
    pub female_ref: String,
    pub male_ref: String,
}

impl ReferencePair {
    pub fn new(female_ref: impl Into<String>, male_ref: impl Into<String>) -> Self {
        ReferencePair {
            female_ref: female_ref.into(),
            male_ref: male_ref.into(),
        }
    }

    pub fn contains(&self, speaker_id: &str) -> bool {
        self.female_ref == speaker_id || self.male_ref == speaker_id
    }

    pub fn reference_for(&self, gender: Gender) -> &str {
        match gender {
            Gender::Female => &self.female_ref,
            Gender::Male => &self.male_ref,
        }
    }

    /// Both members must be control speakers of the stated gender.
    pub fn validate(&self, manifest: &Manifest) -> Result<()> {
        if self.female_ref == self.male_ref {
            return Err(Error::InvalidArgument(format!(
                "reference pair names {} twice",
                self.female_ref
            )));
        }
        for (id, gender) in [(&self.female_ref, Gender::Female), (&self.male_ref, Gender::Male)] {
            let s = manifest.speaker(id).ok_or_else(|| {
                Error::InvalidArgument(format!("reference speaker {id} is not in the manifest"))
            })?;
            if s.group != Group::Control {
                return Err(Error::InvalidArgument(format!(
                    "reference speaker {id} is not a control speaker"
                )));
            }
            if s.gender != gender {
                return Err(Error::InvalidArgument(format!(
                    "reference speaker {id} is listed as {}, expected {}",
                    s.gender.token(),
                    gender.token()
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EvalOptions {
    pub dtw: DtwOptions,
    pub index_mode: IndexMode,
    /// Subjective score assumed for control speakers without one.
    pub control_intelligibility: f64,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            dtw: DtwOptions::default(),
            index_mode: IndexMode::GrandMean,
            control_intelligibility: 100.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedUtterance {
    pub speaker_id: String,
    pub utterance_id: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpeakerScore {
    pub index: IntelligibilityIndex,
    /// Per-utterance `Φ` summaries, sorted by utterance id.
    pub utterances: Vec<DiffSummary>,
    pub skipped: Vec<SkippedUtterance>,
}

/// Reference codes by utterance id; `None` marks an utterance without speech.
type ReferenceCodes = BTreeMap<String, Option<CodeMatrix>>;

fn reference_codes(reference: &SpeakerRecord, provider: &dyn CodeProvider) -> Result<ReferenceCodes> {
    reference
        .utterances
        .par_iter()
        .map(|u| match provider.codes(&reference.speaker_id, u) {
            Ok(m) => Ok((u.utterance_id.clone(), Some(m))),
            Err(Error::NoSpeech(msg)) => {
                warn!("reference {}: skipping {}: no speech ({msg})", reference.speaker_id, u.utterance_id);
                Ok((u.utterance_id.clone(), None))
            }
            Err(e) => Err(e),
        })
        .collect()
}

fn score_with_reference(
    subject: &SpeakerRecord,
    reference_id: &str,
    reference: &ReferenceCodes,
    provider: &dyn CodeProvider,
    opts: &EvalOptions,
) -> Result<SpeakerScore> {
    let mut summaries = Vec::new();
    let mut skipped = Vec::new();
    let mut skip = |utterance_id: &str, reason: String| {
        warn!("{}: skipping {utterance_id}: {reason}", subject.speaker_id);
        skipped.push(SkippedUtterance {
            speaker_id: subject.speaker_id.clone(),
            utterance_id: utterance_id.to_string(),
            reason,
        });
    };

    for utt in &subject.utterances {
        let ref_codes = match reference.get(&utt.utterance_id) {
            None => {
                skip(&utt.utterance_id, format!("no parallel utterance from reference {reference_id}"));
                continue;
            }
            Some(None) => {
                skip(&utt.utterance_id, format!("reference {reference_id} has no speech"));
                continue;
            }
            Some(Some(m)) => m,
        };
        let codes = match provider.codes(&subject.speaker_id, utt) {
            Ok(m) => m,
            Err(Error::NoSpeech(_)) => {
                skip(&utt.utterance_id, "no speech found".to_string());
                continue;
            }
            Err(e) => return Err(e),
        };
        if codes.kind() != ref_codes.kind() {
            return Err(Error::InvalidArgument(format!(
                "{}/{}: {} codes cannot be compared with {} reference codes",
                subject.speaker_id,
                utt.utterance_id,
                codes.kind(),
                ref_codes.kind()
            )));
        }
        let path = dtw_with(ref_codes, &codes, &opts.dtw)?;
        let aligned = warp(ref_codes, &codes, &path)?;
        summaries.push(diff_matrix(&aligned, utt.utterance_id.clone())?.summary());
    }

    if summaries.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "speaker {} shares no usable utterances with reference {reference_id}",
            subject.speaker_id
        )));
    }
    let index = index_from_summaries(&summaries, subject.speaker_id.clone(), opts.index_mode)?;
    Ok(SpeakerScore {
        index,
        utterances: summaries,
        skipped,
    })
}

/// Scores `subject` against an explicit reference speaker, without pair checks.
pub fn score_against(
    subject: &SpeakerRecord,
    reference: &SpeakerRecord,
    provider: &dyn CodeProvider,
    opts: &EvalOptions,
) -> Result<SpeakerScore> {
    let codes = reference_codes(reference, provider)?;
    score_with_reference(subject, &reference.speaker_id, &codes, provider, opts)
}

/// Scores `subject` against the gender-matched member of `pair`.
pub fn score_speaker(
    subject: &SpeakerRecord,
    pair: &ReferencePair,
    provider: &dyn CodeProvider,
    manifest: &Manifest,
    opts: &EvalOptions,
) -> Result<SpeakerScore> {
    if pair.contains(&subject.speaker_id) {
        return Err(Error::InvalidArgument(format!(
            "{} is a reference speaker and cannot be assessed against its own pair",
            subject.speaker_id
        )));
    }
    let ref_id = pair.reference_for(subject.gender);
    let reference = manifest.speaker(ref_id).ok_or_else(|| {
        Error::InvalidArgument(format!("reference speaker {ref_id} is not in the manifest"))
    })?;
    score_against(subject, reference, provider, opts)
}

/// Scores every non-reference speaker; failures are per speaker.
fn score_all<'m>(
    manifest: &'m Manifest,
    pair: &ReferencePair,
    provider: &dyn CodeProvider,
    opts: &EvalOptions,
) -> Result<Vec<(&'m SpeakerRecord, Result<SpeakerScore>)>> {
    pair.validate(manifest)?;
    let female = reference_codes(manifest.speaker(&pair.female_ref).expect("validated"), provider)?;
    let male = reference_codes(manifest.speaker(&pair.male_ref).expect("validated"), provider)?;

    Ok(manifest
        .speakers
        .par_iter()
        .filter(|s| !pair.contains(&s.speaker_id))
        .map(|s| {
            let codes = match s.gender {
                Gender::Female => &female,
                Gender::Male => &male,
            };
            let result = score_with_reference(s, pair.reference_for(s.gender), codes, provider, opts);
            (s, result)
        })
        .collect())
}

fn subjective_score(s: &SpeakerRecord, opts: &EvalOptions) -> f64 {
    s.subjective_intelligibility
        .unwrap_or(opts.control_intelligibility)
}

/// Correlations over all subjects and over the pathological subset.
fn correlations(points: &[(Group, f64, f64)]) -> (Result<CorrelationResult>, Result<CorrelationResult>) {
    let split = |only_pat: bool| {
        let (x, y): (Vec<f64>, Vec<f64>) = points
            .iter()
            .filter(|(g, _, _)| !only_pat || *g == Group::Pathological)
            .map(|&(_, subjective, index)| (subjective, index))
            .unzip();
        correlate(&x, &y)
    };
    (split(false), split(true))
}

/// Scores every non-reference speaker and correlates the indices with the
/// subjective scores.
///
/// Per-speaker failures are logged in the report and excluded from the
/// correlations. A correlation that cannot be computed is left absent with
/// a note.
pub fn run_evaluation(
    manifest: &Manifest,
    pair: &ReferencePair,
    provider: &dyn CodeProvider,
    opts: &EvalOptions,
) -> Result<EvaluationReport> {
    let scored = score_all(manifest, pair, provider, opts)?;

    let mut speakers = BTreeMap::new();
    let mut skipped = Vec::new();
    let mut failures = Vec::new();
    let mut points = Vec::new();
    for (record, result) in scored {
        match result {
            Ok(score) => {
                let subjective = subjective_score(record, opts);
                points.push((record.group, subjective, score.index.value));
                skipped.extend(score.skipped);
                speakers.insert(
                    record.speaker_id.clone(),
                    SpeakerResult {
                        gender: record.gender,
                        group: record.group,
                        subjective,
                        subjective_assumed: record.subjective_intelligibility.is_none(),
                        reference: pair.reference_for(record.gender).to_string(),
                        index: score.index.value,
                        n_utterances: score.index.n_utterances,
                    },
                );
            }
            Err(e) => {
                warn!("speaker {} failed: {e}", record.speaker_id);
                failures.push(SpeakerFailure {
                    speaker_id: record.speaker_id.clone(),
                    error: e.to_string(),
                });
            }
        }
    }

    let mut notes = Vec::new();
    if speakers.values().any(|s| s.subjective_assumed) {
        notes.push(format!(
            "control speakers without a subjective score are assigned {}",
            opts.control_intelligibility
        ));
    }
    let (all, pat) = correlations(&points);
    let mut keep = |label: &str, r: Result<CorrelationResult>| match r {
        Ok(c) => Some(c),
        Err(e) => {
            notes.push(format!("correlation_{label} absent: {e}"));
            None
        }
    };
    let correlation_all = keep("all", all);
    let correlation_pat = keep("pat", pat);

    Ok(EvaluationReport {
        reference_pair: pair.clone(),
        provider: provider.name().to_string(),
        options: opts.clone(),
        speakers,
        correlation_all,
        correlation_pat,
        notes,
        skipped,
        failures,
        config: serde_json::Value::Null,
        metadata: None,
    })
}

/// Mean and spread of correlation results over repeated runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationSpread {
    pub runs: usize,
    pub n: usize,
    pub mean_r: f64,
    pub std_r: f64,
    pub mean_rs: f64,
    pub std_rs: f64,
    /// Largest Pearson p-value over the runs.
    pub worst_p: f64,
    /// Largest Spearman p-value over the runs.
    pub worst_p_s: f64,
}

impl CorrelationSpread {
    /// Population statistics over `results`, in the given order.
    pub fn from_results(results: &[CorrelationResult]) -> Option<Self> {
        let first = results.first()?;
        let r: Vec<f64> = results.iter().map(|c| c.pearson_r).collect();
        let rs: Vec<f64> = results.iter().map(|c| c.spearman_r).collect();
        let (mean_r, std_r) = mean_std(&r);
        let (mean_rs, std_rs) = mean_std(&rs);
        Some(CorrelationSpread {
            runs: results.len(),
            n: first.n,
            mean_r,
            std_r,
            mean_rs,
            std_rs,
            worst_p: results.iter().map(|c| c.pearson_p).fold(0.0, f64::max),
            worst_p_s: results.iter().map(|c| c.spearman_p).fold(0.0, f64::max),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub runs: Vec<EvaluationReport>,
    /// Across-pair spread of the "-all" correlations, over pairs where it exists.
    pub all: Option<CorrelationSpread>,
    pub pat: Option<CorrelationSpread>,
}

/// Runs the evaluation once per reference pair and summarizes the spread.
pub fn run_reference_sweep(
    manifest: &Manifest,
    pairs: &[ReferencePair],
    provider: &dyn CodeProvider,
    opts: &EvalOptions,
) -> Result<SweepReport> {
    if pairs.is_empty() {
        return Err(Error::InvalidArgument("no reference pairs given".into()));
    }
    let runs = pairs
        .iter()
        .map(|p| run_evaluation(manifest, p, provider, opts))
        .collect::<Result<Vec<_>>>()?;
    let collect = |f: fn(&EvaluationReport) -> Option<&CorrelationResult>| {
        let v: Vec<CorrelationResult> = runs.iter().filter_map(|r| f(r).cloned()).collect();
        CorrelationSpread::from_results(&v)
    };
    let all = collect(|r| r.correlation_all.as_ref());
    let pat = collect(|r| r.correlation_pat.as_ref());
    Ok(SweepReport { runs, all, pat })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubsampleOptions {
    pub n_utterances: usize,
    pub iterations: usize,
    pub seed: u64,
}

impl Default for SubsampleOptions {
    fn default() -> Self {
        SubsampleOptions {
            n_utterances: 20,
            iterations: 1000,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubsampleResult {
    pub options: SubsampleOptions,
    pub all: CorrelationSpread,
    /// Absent when the pathological subset is too small to correlate.
    pub pat: Option<CorrelationSpread>,
}

/// Repeats the evaluation on random utterance subsets.
///
/// Each iteration draws `n_utterances` of every subject's scored utterances
/// uniformly without replacement, independently per subject, and recomputes
/// the indices and correlations. Iteration `k` draws from ChaCha8 seeded with
/// `seed` on stream `k`, visiting subjects in speaker-id order, so results do
/// not depend on the number of worker threads.
pub fn subsample_experiment(
    manifest: &Manifest,
    pair: &ReferencePair,
    provider: &dyn CodeProvider,
    sub: &SubsampleOptions,
    opts: &EvalOptions,
) -> Result<SubsampleResult> {
    if sub.n_utterances == 0 || sub.iterations == 0 {
        return Err(Error::InvalidArgument(
            "subsampling needs at least one utterance and one iteration".into(),
        ));
    }
    let mut subjects = Vec::new();
    for (record, result) in score_all(manifest, pair, provider, opts)? {
        let score = result?;
        if score.utterances.len() < sub.n_utterances {
            return Err(Error::InvalidArgument(format!(
                "speaker {} has {} usable parallel utterances, fewer than {}",
                record.speaker_id,
                score.utterances.len(),
                sub.n_utterances
            )));
        }
        subjects.push((record, score.utterances));
    }

    let iterations: Vec<(CorrelationResult, Option<CorrelationResult>)> = (0..sub.iterations)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(sub.seed);
            rng.set_stream(k as u64);
            let mut points = Vec::with_capacity(subjects.len());
            for (record, summaries) in &subjects {
                let picked: Vec<DiffSummary> =
                    rand::seq::index::sample(&mut rng, summaries.len(), sub.n_utterances)
                        .into_iter()
                        .map(|i| summaries[i].clone())
                        .collect();
                let index = index_from_summaries(&picked, record.speaker_id.clone(), opts.index_mode)?;
                points.push((record.group, subjective_score(record, opts), index.value));
            }
            let (all, pat) = correlations(&points);
            Ok((all?, pat.ok()))
        })
        .collect::<Result<_>>()?;

    let all: Vec<CorrelationResult> = iterations.iter().map(|(a, _)| a.clone()).collect();
    let pat: Option<Vec<CorrelationResult>> = iterations.iter().map(|(_, p)| p.clone()).collect();
    Ok(SubsampleResult {
        options: sub.clone(),
        all: CorrelationSpread::from_results(&all).expect("at least one iteration"),
        pat: pat.and_then(|p| CorrelationSpread::from_results(&p)),
    })
}

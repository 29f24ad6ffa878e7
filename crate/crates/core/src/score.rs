//! Squared-difference matrices and the speaker-level intelligibility index.
//!
//! For each parallel utterance pair the aligned codes give
//! `Φ = (Z_ref(ω) − Z_subj(ω))²` elementwise, a `C × K_n` matrix. The index
//! is the mean over every element of every `Φ` of a speaker. When all
//! utterances share one aligned length this is exactly the triple average
//! `1/(C·T·N) Σ_c Σ_t Σ_n φ`; with per-utterance lengths `K_n` the default
//! [`IndexMode::GrandMean`] divides by `Σ_n C·K_n`.

use serde::{Deserialize, Serialize};

use crate::align::AlignedPair;
use crate::{Error, Matrix, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct DiffMatrix {
    pub values: Matrix,
    pub utterance_id: String,
}

impl DiffMatrix {
    pub fn summary(&self) -> DiffSummary {
        DiffSummary {
            utterance_id: self.utterance_id.clone(),
            dims: self.values.rows(),
            sum: pairwise_sum(self.values.as_slice()),
            count: self.values.as_slice().len(),
        }
    }
}

/// Element sum and count of one `Φ`; all the index needs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiffSummary {
    pub utterance_id: String,
    pub dims: usize,
    pub sum: f64,
    pub count: usize,
}

impl DiffSummary {
    pub fn mean(&self) -> f64 {
        self.sum / self.count as f64
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntelligibilityIndex {
    pub value: f64,
    pub n_utterances: usize,
    pub speaker_id: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IndexMode {
    /// Mean over all elements of all stacked matrices.
    #[default]
    GrandMean,
    /// Mean of per-utterance means; weights utterances equally regardless of length.
    PerUtteranceMean,
}

impl std::str::FromStr for IndexMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grand-mean" => Ok(IndexMode::GrandMean),
            "per-utterance-mean" => Ok(IndexMode::PerUtteranceMean),
            other => Err(Error::InvalidArgument(format!(
                "unknown index mode {other:?} (expected grand-mean or per-utterance-mean)"
            ))),
        }
    }
}

pub fn diff_matrix(pair: &AlignedPair, utterance_id: impl Into<String>) -> Result<DiffMatrix> {
    if pair.ref_warped.shape() != pair.other_warped.shape() {
        return Err(Error::DimensionMismatch(format!(
            "aligned matrices {:?} and {:?}",
            pair.ref_warped.shape(),
            pair.other_warped.shape()
        )));
    }
    let (rows, cols) = pair.ref_warped.shape();
    let data = pair
        .ref_warped
        .as_slice()
        .iter()
        .zip(pair.other_warped.as_slice())
        .map(|(r, o)| (r - o) * (r - o))
        .collect();
    Ok(DiffMatrix {
        values: Matrix::from_vec(rows, cols, data).expect("shape preserved"),
        utterance_id: utterance_id.into(),
    })
}

pub fn intelligibility_index(
    diffs: &[DiffMatrix],
    speaker_id: impl Into<String>,
    mode: IndexMode,
) -> Result<IntelligibilityIndex> {
    let summaries: Vec<DiffSummary> = diffs.iter().map(DiffMatrix::summary).collect();
    index_from_summaries(&summaries, speaker_id, mode)
}

/// Aggregates per-utterance summaries.
///
/// Partial results are sorted before summation, so the value is independent
/// of utterance order down to the last bit.
pub fn index_from_summaries(
    summaries: &[DiffSummary],
    speaker_id: impl Into<String>,
    mode: IndexMode,
) -> Result<IntelligibilityIndex> {
    let speaker_id = speaker_id.into();
    let first = summaries.first().ok_or_else(|| {
        Error::InvalidArgument(format!("no difference matrices for speaker {speaker_id}"))
    })?;
    if let Some(odd) = summaries.iter().find(|s| s.dims != first.dims) {
        return Err(Error::DimensionMismatch(format!(
            "speaker {speaker_id}: utterance {} has {} code dimensions, {} has {}",
            odd.utterance_id, odd.dims, first.utterance_id, first.dims
        )));
    }
    if summaries.iter().any(|s| s.count == 0) {
        return Err(Error::InvalidArgument(format!(
            "speaker {speaker_id}: empty difference matrix"
        )));
    }

    let value = match mode {
        IndexMode::GrandMean => {
            let mut sums: Vec<f64> = summaries.iter().map(|s| s.sum).collect();
            sums.sort_by(f64::total_cmp);
            let count: usize = summaries.iter().map(|s| s.count).sum();
            pairwise_sum(&sums) / count as f64
        }
        IndexMode::PerUtteranceMean => {
            let mut means: Vec<f64> = summaries.iter().map(DiffSummary::mean).collect();
            means.sort_by(f64::total_cmp);
            pairwise_sum(&means) / means.len() as f64
        }
    };
    Ok(IntelligibilityIndex {
        value,
        n_utterances: summaries.len(),
        speaker_id,
    })
}

/// Recursive pairwise summation; error grows with `log n` rather than `n`.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    const BLOCK: usize = 64;
    if values.len() <= BLOCK {
        values.iter().sum()
    } else {
        let (lo, hi) = values.split_at(values.len() / 2);
        pairwise_sum(lo) + pairwise_sum(hi)
    }
}

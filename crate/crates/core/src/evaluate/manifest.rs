use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Required header, in canonical order.
pub const MANIFEST_COLUMNS: [&str; 6] = [
    "speaker_id",
    "gender",
    "group",
    "intelligibility",
    "utterance_id",
    "path",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Gender {
    Female,
    Male,
}

impl Gender {
    fn parse(token: &str) -> Option<Self> {
        match token {
            "F" => Some(Gender::Female),
            "M" => Some(Gender::Male),
            _ => None,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Gender::Female => "F",
            Gender::Male => "M",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Control,
    Pathological,
}

impl Group {
    fn parse(token: &str) -> Option<Self> {
        match token {
            "control" => Some(Group::Control),
            "pathological" => Some(Group::Pathological),
            _ => None,
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Control => "control",
            Group::Pathological => "pathological",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UtteranceRef {
    pub utterance_id: String,
    /// Absolute, or relative to the manifest's directory as written.
    pub path: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpeakerRecord {
    pub speaker_id: String,
    pub gender: Gender,
    pub group: Group,
    /// Percent of words understood by listeners; required for pathological speakers.
    pub subjective_intelligibility: Option<f64>,
    /// Sorted by utterance id.
    pub utterances: Vec<UtteranceRef>,
}

impl SpeakerRecord {
    pub fn utterance(&self, utterance_id: &str) -> Option<&UtteranceRef> {
        self.utterances
            .binary_search_by(|u| u.utterance_id.as_str().cmp(utterance_id))
            .ok()
            .map(|i| &self.utterances[i])
    }
}

/// Validated corpus description, speakers sorted by id.
#[derive(Debug, Clone, PartialEq)]
pub struct Manifest {
    pub speakers: Vec<SpeakerRecord>,
}

impl Manifest {
    /// Sorts speakers and utterances, and checks every record's invariants.
    pub fn new(mut speakers: Vec<SpeakerRecord>) -> Result<Self> {
        speakers.sort_by(|a, b| a.speaker_id.cmp(&b.speaker_id));
        for pair in speakers.windows(2) {
            if pair[0].speaker_id == pair[1].speaker_id {
                return Err(Error::Manifest(format!(
                    "speaker {} listed twice",
                    pair[0].speaker_id
                )));
            }
        }
        for s in &mut speakers {
            s.utterances.sort_by(|a, b| a.utterance_id.cmp(&b.utterance_id));
            if let Some(w) = s.utterances.windows(2).find(|w| w[0].utterance_id == w[1].utterance_id) {
                return Err(Error::Manifest(format!(
                    "speaker {} lists utterance {} twice",
                    s.speaker_id, w[0].utterance_id
                )));
            }
            validate_score(&s.speaker_id, s.group, s.subjective_intelligibility)?;
        }
        Ok(Manifest { speakers })
    }

    pub fn speaker(&self, id: &str) -> Option<&SpeakerRecord> {
        self.speakers
            .binary_search_by(|s| s.speaker_id.as_str().cmp(id))
            .ok()
            .map(|i| &self.speakers[i])
    }

    /// Writes the manifest as CSV, one row per utterance.
    pub fn to_csv(&self) -> String {
        let mut out = MANIFEST_COLUMNS.join(",");
        out.push('\n');
        for s in &self.speakers {
            let score = s
                .subjective_intelligibility
                .map(|v| v.to_string())
                .unwrap_or_default();
            for u in &s.utterances {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    s.speaker_id,
                    s.gender.token(),
                    s.group,
                    score,
                    u.utterance_id,
                    u.path.display()
                ));
            }
        }
        out
    }
}

fn validate_score(speaker: &str, group: Group, score: Option<f64>) -> Result<()> {
    match score {
        None if group == Group::Pathological => Err(Error::Manifest(format!(
            "pathological speaker {speaker} has no subjective intelligibility score"
        ))),
        Some(v) if !(0.0..=100.0).contains(&v) => Err(Error::Manifest(format!(
            "speaker {speaker}: intelligibility {v} outside [0, 100]"
        ))),
        _ => Ok(()),
    }
}

/// Reads a manifest CSV. Relative paths are resolved against the manifest's directory.
pub fn load_manifest(path: impl AsRef<Path>) -> Result<Manifest> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let base = path.parent().unwrap_or_else(|| Path::new(""));
    parse_manifest(&text, base)
}

pub(crate) fn parse_manifest(text: &str, base: &Path) -> Result<Manifest> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| Error::Manifest(format!("unreadable header: {e}")))?
        .clone();
    let mut index = [0usize; 6];
    for (slot, column) in index.iter_mut().zip(MANIFEST_COLUMNS) {
        *slot = headers
            .iter()
            .position(|h| h == column)
            .ok_or_else(|| Error::Manifest(format!("missing column `{column}`")))?;
    }
    if let Some(extra) = headers.iter().find(|h| !MANIFEST_COLUMNS.contains(h)) {
        return Err(Error::Manifest(format!("unknown column `{extra}`")));
    }

    let mut speakers: BTreeMap<String, SpeakerRecord> = BTreeMap::new();
    let mut seen = HashSet::new();
    for (row, record) in reader.records().enumerate() {
        // Line 1 is the header.
        let line = row + 2;
        let record = record.map_err(|e| Error::Manifest(format!("line {line}: {e}")))?;
        let field = |k: usize| record.get(index[k]).unwrap_or("");
        let [speaker_id, gender, group, score, utterance_id, utt_path] =
            [0, 1, 2, 3, 4, 5].map(field);

        if speaker_id.is_empty() || utterance_id.is_empty() || utt_path.is_empty() {
            return Err(Error::Manifest(format!(
                "line {line}: speaker_id, utterance_id and path must be non-empty"
            )));
        }
        let gender = Gender::parse(gender).ok_or_else(|| {
            Error::Manifest(format!("line {line}: unknown gender `{gender}` (expected F or M)"))
        })?;
        let group = Group::parse(group).ok_or_else(|| {
            Error::Manifest(format!(
                "line {line}: unknown group `{group}` (expected control or pathological)"
            ))
        })?;
        let score = if score.is_empty() {
            None
        } else {
            Some(score.parse::<f64>().map_err(|_| {
                Error::Manifest(format!("line {line}: intelligibility `{score}` is not a number"))
            })?)
        };
        validate_score(speaker_id, group, score)
            .map_err(|e| Error::Manifest(format!("line {line}: {e}")))?;

        if !seen.insert((speaker_id.to_string(), utterance_id.to_string())) {
            return Err(Error::Manifest(format!(
                "line {line}: duplicate row for speaker {speaker_id}, utterance {utterance_id}"
            )));
        }

        let utt = UtteranceRef {
            utterance_id: utterance_id.to_string(),
            path: base.join(utt_path),
        };
        match speakers.get_mut(speaker_id) {
            Some(existing) => {
                if existing.gender != gender
                    || existing.group != group
                    || existing.subjective_intelligibility != score
                {
                    return Err(Error::Manifest(format!(
                        "line {line}: speaker {speaker_id} disagrees with its earlier rows \
                         on gender, group or intelligibility"
                    )));
                }
                existing.utterances.push(utt);
            }
            None => {
                speakers.insert(
                    speaker_id.to_string(),
                    SpeakerRecord {
                        speaker_id: speaker_id.to_string(),
                        gender,
                        group,
                        subjective_intelligibility: score,
                        utterances: vec![utt],
                    },
                );
            }
        }
    }
    Manifest::new(speakers.into_values().collect())
}

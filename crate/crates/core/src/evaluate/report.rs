use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::stats::CorrelationResult;

use super::manifest::{Gender, Group};
use super::protocol::{EvalOptions, ReferencePair, SkippedUtterance};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpeakerResult {
    pub gender: Gender,
    pub group: Group,
    /// Subjective intelligibility used in the correlations.
    pub subjective: f64,
    /// True when `subjective` is the control default rather than a rating.
    pub subjective_assumed: bool,
    pub reference: String,
    pub index: f64,
    pub n_utterances: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpeakerFailure {
    pub speaker_id: String,
    pub error: String,
}

/// Run-specific data kept apart from the results so reports of identical
/// runs compare equal once it is stripped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunMetadata {
    pub generated_at_unix: u64,
    pub tool_version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationReport {
    pub reference_pair: ReferencePair,
    pub provider: String,
    pub options: EvalOptions,
    /// Keyed by speaker id.
    pub speakers: BTreeMap<String, SpeakerResult>,
    pub correlation_all: Option<CorrelationResult>,
    pub correlation_pat: Option<CorrelationResult>,
    pub notes: Vec<String>,
    pub skipped: Vec<SkippedUtterance>,
    pub failures: Vec<SpeakerFailure>,
    /// Caller-supplied snapshot of the full run configuration.
    #[serde(default)]
    pub config: serde_json::Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<RunMetadata>,
}

impl EvaluationReport {
    pub fn scatter(&self) -> Vec<ScatterPoint> {
        self.speakers
            .iter()
            .map(|(id, s)| ScatterPoint {
                speaker_id: id.clone(),
                group: s.group,
                subjective: s.subjective,
                index: s.index,
            })
            .collect()
    }

    /// The report with run metadata removed, for comparisons.
    pub fn without_metadata(&self) -> Self {
        EvaluationReport {
            metadata: None,
            ..self.clone()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScatterPoint {
    pub speaker_id: String,
    pub group: Group,
    pub subjective: f64,
    pub index: f64,
}

/// `speaker_id,group,subjective,index` rows in speaker order.
pub fn scatter_csv(points: &[ScatterPoint]) -> String {
    let mut out = String::from("speaker_id,group,subjective,index\n");
    for p in points {
        let _ = writeln!(out, "{},{},{},{}", p.speaker_id, p.group, p.subjective, p.index);
    }
    out
}

/// Scatter plot of index against subjective score, with the regression line
/// of `correlation_all` when present.
pub fn render_scatter_svg(report: &EvaluationReport) -> String {
    const W: f64 = 640.0;
    const H: f64 = 480.0;
    const M: f64 = 60.0;

    let points = report.scatter();
    let max_index = points
        .iter()
        .map(|p| p.index)
        .fold(0.0f64, f64::max)
        .max(f64::MIN_POSITIVE)
        * 1.1;
    let sx = |v: f64| M + v / 100.0 * (W - 2.0 * M);
    let sy = |v: f64| H - M - v / max_index * (H - 2.0 * M);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<line x1="{M}" y1="{y}" x2="{x}" y2="{y}" stroke="black"/><line x1="{M}" y1="{M}" x2="{M}" y2="{y}" stroke="black"/>"#,
        x = W - M,
        y = H - M
    );
    for tick in [0.0, 25.0, 50.0, 75.0, 100.0] {
        let _ = writeln!(
            svg,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{tick}</text>"#,
            sx(tick),
            H - M + 18.0
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">subjective intelligibility (%)</text>"#,
        W / 2.0,
        H - 15.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="15" y="{:.1}" text-anchor="middle" transform="rotate(-90 15 {:.1})">intelligibility index</text>"#,
        H / 2.0,
        H / 2.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="{M}" y="{:.1}">0</text><text x="{:.1}" y="{:.1}" text-anchor="end">{:.3e}</text>"#,
        H - M - 4.0,
        M - 4.0,
        M + 4.0,
        max_index
    );

    if let Some(c) = &report.correlation_all {
        let (y0, y1) = (c.regression.predict(0.0), c.regression.predict(100.0));
        let _ = writeln!(
            svg,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="gray" stroke-dasharray="6 3"/>"#,
            sx(0.0),
            sy(y0),
            sx(100.0),
            sy(y1)
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.1}" y="{:.1}">R = {:.2}, p = {:.1e}; Rs = {:.2}, p = {:.1e}</text>"#,
            M + 10.0,
            M - 20.0,
            c.pearson_r,
            c.pearson_p,
            c.spearman_r,
            c.spearman_p
        );
    }
    for p in &points {
        let colour = match p.group {
            Group::Control => "#2a7ab0",
            Group::Pathological => "#c0392b",
        };
        let _ = writeln!(
            svg,
            r#"<circle cx="{:.2}" cy="{:.2}" r="4" fill="{colour}"><title>{}</title></circle>"#,
            sx(p.subjective),
            sy(p.index),
            p.speaker_id
        );
    }
    svg.push_str("</svg>\n");
    svg
}

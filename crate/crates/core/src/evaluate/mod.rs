//! Corpus-level evaluation against subjective intelligibility ratings.
//!
//! Every assessed speaker is scored against the gender-matched member of a
//! healthy reference pair. The resulting indices are correlated with the
//! subjective scores twice: over pathological speakers only ("-pat") and over
//! all assessed speakers including healthy controls ("-all").

mod manifest;
mod protocol;
mod provider;
mod report;

pub use manifest::{load_manifest, Gender, Group, Manifest, SpeakerRecord, UtteranceRef, MANIFEST_COLUMNS};
pub use protocol::{
    run_evaluation, run_reference_sweep, score_against, score_speaker, subsample_experiment,
    CorrelationSpread, EvalOptions, ReferencePair, SkippedUtterance, SpeakerScore,
    SubsampleOptions, SubsampleResult, SweepReport,
};
pub use provider::{CdmFileProvider, CodeProvider, InMemoryProvider, MelPassthroughProvider};
pub use report::{
    render_scatter_svg, scatter_csv, EvaluationReport, RunMetadata, ScatterPoint, SpeakerFailure,
    SpeakerResult,
};

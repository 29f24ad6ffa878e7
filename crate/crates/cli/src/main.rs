//! `codediv`: preprocessing, feature extraction, pairwise scoring and
//! corpus evaluation from the command line.
//!
//! Exit status is 0 on success, 1 for invalid input, 2 for I/O failures and
//! 3 for internal errors.

mod commands;
mod config;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::config::{ProviderChoice, RunConfig};
use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "codediv", version, about = "Reference-based speech intelligibility scoring")]
struct Cli {
    /// TOML run configuration; flags override its values.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Worker threads (defaults to one per core).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    /// More log output; repeat for more detail.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Trim and voice-activity-filter a WAV file.
    Preprocess(PreprocessArgs),
    /// Compute mel (and optionally pitch) features and write them as CDM1.
    Features(FeaturesArgs),
    /// Align two utterances and print their cost and index.
    ScorePair(ScorePairArgs),
    /// Score every speaker in a manifest and correlate with subjective ratings.
    Evaluate(EvaluateArgs),
    /// Repeat the evaluation on random utterance subsets.
    Subsample(SubsampleArgs),
    /// Write scatter data or an SVG plot from an evaluation report.
    ExportScatter(ExportScatterArgs),
    /// Write a synthetic CDM1 corpus with a known degradation ordering.
    Synth(SynthArgs),
}

#[derive(Debug, Args)]
struct AudioArgs {
    /// Fraction cut from each end before VAD.
    #[arg(long, value_name = "FRACTION")]
    trim: Option<f64>,

    /// VAD threshold relative to the loudest frame, in dB.
    #[arg(long, value_name = "DB", allow_hyphen_values = true)]
    vad_threshold: Option<f64>,
}

#[derive(Debug, Args)]
struct PreprocessArgs {
    input: PathBuf,
    #[arg(short, long)]
    output: PathBuf,
    #[command(flatten)]
    audio: AudioArgs,
}

#[derive(Debug, Args)]
struct FeaturesArgs {
    /// WAV input.
    input: PathBuf,
    /// CDM1 file for the 80-bin mel-spectrogram.
    #[arg(short, long)]
    output: PathBuf,
    /// CDM1 file for one-hot quantized pitch (frequency kind).
    #[arg(long, value_name = "FILE")]
    pitch_output: Option<PathBuf>,
    /// Use the audio as is, without trimming or VAD.
    #[arg(long)]
    no_preprocess: bool,
    #[command(flatten)]
    audio: AudioArgs,
}

#[derive(Debug, Args)]
struct ScorePairArgs {
    /// Reference utterance (CDM1, or WAV for mel codes).
    reference: PathBuf,
    /// Assessed utterance (CDM1, or WAV for mel codes).
    assessed: PathBuf,
    /// Sakoe-Chiba band half-width.
    #[arg(long)]
    band: Option<usize>,
    /// Write the warping path as JSON.
    #[arg(long, value_name = "FILE")]
    dump_path: Option<PathBuf>,
    #[command(flatten)]
    audio: AudioArgs,
}

#[derive(Debug, Args)]
struct CorpusArgs {
    #[arg(long)]
    manifest: PathBuf,
    #[arg(long, value_enum)]
    provider: Option<ProviderChoice>,
    /// Female reference speaker id.
    #[arg(long, requires = "male_ref")]
    female_ref: Option<String>,
    /// Male reference speaker id.
    #[arg(long, requires = "female_ref")]
    male_ref: Option<String>,
    /// Reference pair as FEMALE:MALE; repeat to sweep several pairs.
    #[arg(long = "pair", value_name = "FEMALE:MALE", conflicts_with_all = ["female_ref", "male_ref"])]
    pairs: Vec<String>,
    #[arg(long)]
    band: Option<usize>,
    /// grand-mean or per-utterance-mean.
    #[arg(long)]
    index_mode: Option<codediv_core::IndexMode>,
    /// Score assumed for controls without a subjective rating.
    #[arg(long)]
    control_intelligibility: Option<f64>,
    #[command(flatten)]
    audio: AudioArgs,
}

#[derive(Debug, Args)]
struct EvaluateArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    /// Report JSON.
    #[arg(short, long)]
    out: PathBuf,
    /// Scatter CSV (speaker, group, subjective, index).
    #[arg(long, value_name = "FILE")]
    scatter: Option<PathBuf>,
    /// Scatter plot as SVG.
    #[arg(long, value_name = "FILE")]
    svg: Option<PathBuf>,
    /// Leave the timestamp and tool version out of the report.
    #[arg(long)]
    no_metadata: bool,
}

#[derive(Debug, Args)]
struct SubsampleArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    /// Utterances drawn per speaker and iteration.
    #[arg(long = "subsample", visible_alias = "n", value_name = "N")]
    n_utterances: Option<usize>,
    #[arg(long)]
    iterations: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Result JSON; the summary is printed either way.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ExportScatterArgs {
    /// Report written by `evaluate`.
    #[arg(long)]
    report: PathBuf,
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SynthArgs {
    #[arg(long)]
    out_dir: PathBuf,
    #[arg(long, default_value_t = 10)]
    subjects: usize,
    #[arg(long, default_value_t = 20)]
    utterances: usize,
    #[arg(long, default_value_t = 0.3)]
    noise_scale: f64,
    #[arg(long, default_value_t = 2023)]
    seed: u64,
    /// Keep subject frame timing identical to the reference.
    #[arg(long)]
    no_retime: bool,
}

fn init_logging(verbose: u8) {
    let level = match verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .format_timestamp(None)
        .init();
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(CliError::Config("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Internal(e.to_string()))?;
    }
    let cfg = RunConfig::load(cli.config.as_deref())?;
    match cli.command {
        Command::Preprocess(a) => commands::preprocess(cfg, a),
        Command::Features(a) => commands::features(cfg, a),
        Command::ScorePair(a) => commands::score_pair(cfg, a),
        Command::Evaluate(a) => commands::evaluate(cfg, a),
        Command::Subsample(a) => commands::subsample(cfg, a),
        Command::ExportScatter(a) => commands::export_scatter(a),
        Command::Synth(a) => commands::synth(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_logging(cli.verbose);
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

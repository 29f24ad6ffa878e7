use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use codediv_core::evaluate::{
    render_scatter_svg, scatter_csv, CdmFileProvider, MelPassthroughProvider, RunMetadata,
};
use codediv_core::features::MelAnalyzer;
use codediv_core::preprocess::{preprocess as run_preprocess, write_wav};
use codediv_core::synthetic::{SyntheticConfig, SyntheticCorpus};
use codediv_core::{
    diff_matrix, dtw_with, extract_pitch, load_audio, load_code_matrix, load_manifest,
    mel_passthrough_codes, quantize_pitch, run_evaluation, run_reference_sweep,
    subsample_experiment, warp, write_code_matrix, CodeKind, CodeMatrix, CodeProvider,
    EvaluationReport, ReferencePair, SpeakerF0Stats, SubsampleOptions,
};
use log::info;
use serde::Serialize;

use crate::config::{ProviderChoice, RunConfig};
use crate::error::CliError;
use crate::{
    AudioArgs, CorpusArgs, EvaluateArgs, ExportScatterArgs, FeaturesArgs, PreprocessArgs,
    ScorePairArgs, SubsampleArgs, SynthArgs,
};

fn apply_audio(cfg: &mut RunConfig, a: &AudioArgs) {
    if let Some(t) = a.trim {
        cfg.preprocess.trim_fraction = t;
    }
    if let Some(db) = a.vad_threshold {
        cfg.preprocess.vad.threshold_db = db;
    }
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    std::fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn write_json(path: &Path, value: &impl Serialize) -> Result<(), CliError> {
    let mut text =
        serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))?;
    text.push('\n');
    write_text(path, &text)
}

fn print_json(value: &impl Serialize) -> Result<(), CliError> {
    let text =
        serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))?;
    println!("{text}");
    Ok(())
}

pub fn preprocess(mut cfg: RunConfig, a: PreprocessArgs) -> Result<(), CliError> {
    apply_audio(&mut cfg, &a.audio);
    let audio = load_audio(&a.input)?;
    let (voiced, segments) = run_preprocess(&audio, &cfg.preprocess)?;
    write_wav(&voiced, &a.output)?;
    println!(
        "{}: {:.3} s in, {:.3} s kept in {} segment(s)",
        a.input.display(),
        audio.duration_secs(),
        voiced.duration_secs(),
        segments.len()
    );
    for s in &segments {
        println!(
            "  frames {:>5}..{:<5} samples {:>8}..{:<8} {:>7.2} dB",
            s.start_frame, s.end_frame, s.start_sample, s.end_sample, s.mean_energy
        );
    }
    Ok(())
}

/// Mel codes for a WAV file, optionally after trimming and VAD.
fn wav_codes(cfg: &RunConfig, path: &Path, preprocessed: bool) -> Result<CodeMatrix, CliError> {
    let mut audio = load_audio(path)?;
    if preprocessed {
        audio = run_preprocess(&audio, &cfg.preprocess)?.0;
    }
    let mel = MelAnalyzer::new(&cfg.features)?.compute(&audio)?;
    Ok(mel_passthrough_codes(&mel)?)
}

fn is_wav(path: &Path) -> bool {
    path.extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("wav"))
}

pub fn features(mut cfg: RunConfig, a: FeaturesArgs) -> Result<(), CliError> {
    apply_audio(&mut cfg, &a.audio);
    let mut audio = load_audio(&a.input)?;
    if !a.no_preprocess {
        audio = run_preprocess(&audio, &cfg.preprocess)?.0;
    }
    let mel = MelAnalyzer::new(&cfg.features)?.compute(&audio)?;
    let codes = mel_passthrough_codes(&mel)?;
    write_code_matrix(&codes, &a.output)?;
    println!(
        "{}: {} × {} mel codes",
        a.output.display(),
        codes.dims(),
        codes.frames()
    );

    if let Some(path) = &a.pitch_output {
        let contour = extract_pitch(&audio, &cfg.features)?;
        let stats = SpeakerF0Stats::from_contours([&contour]);
        let q = quantize_pitch(&contour, &stats, &cfg.features)?;
        let one_hot = q.one_hot();
        let values = one_hot.as_slice().iter().map(|&v| v as f32).collect();
        let m = CodeMatrix::new(
            CodeKind::Frequency,
            one_hot.rows(),
            one_hot.cols(),
            values,
            "",
            audio.utterance_id.clone(),
        )?;
        write_code_matrix(&m, path)?;
        println!(
            "{}: {} × {} pitch classes, {} voiced frames",
            path.display(),
            m.dims(),
            m.frames(),
            stats.voiced_frames
        );
    }
    Ok(())
}

#[derive(Serialize)]
struct PairSummary {
    reference: String,
    assessed: String,
    kind: String,
    dims: usize,
    reference_frames: usize,
    assessed_frames: usize,
    path_length: usize,
    total_cost: f64,
    index: f64,
}

pub fn score_pair(mut cfg: RunConfig, a: ScorePairArgs) -> Result<(), CliError> {
    apply_audio(&mut cfg, &a.audio);
    if a.band.is_some() {
        cfg.evaluation.dtw.band = a.band;
    }
    let load = |p: &Path| -> Result<CodeMatrix, CliError> {
        if is_wav(p) {
            wav_codes(&cfg, p, true)
        } else {
            Ok(load_code_matrix(p)?)
        }
    };
    let reference = load(&a.reference)?;
    let assessed = load(&a.assessed)?;
    if reference.kind() != assessed.kind() {
        return Err(CliError::Config(format!(
            "cannot compare {} codes with {} codes",
            reference.kind(),
            assessed.kind()
        )));
    }
    let path = dtw_with(&reference, &assessed, &cfg.evaluation.dtw)?;
    let summary = diff_matrix(&warp(&reference, &assessed, &path)?, "")?.summary();

    if let Some(dump) = &a.dump_path {
        write_json(dump, &path)?;
    }
    print_json(&PairSummary {
        reference: a.reference.display().to_string(),
        assessed: a.assessed.display().to_string(),
        kind: reference.kind().to_string(),
        dims: reference.dims(),
        reference_frames: reference.frames(),
        assessed_frames: assessed.frames(),
        path_length: path.len(),
        total_cost: path.total_cost,
        index: summary.mean(),
    })
}

fn parse_pair(text: &str) -> Result<ReferencePair, CliError> {
    match text.split_once(':') {
        Some((f, m)) if !f.is_empty() && !m.is_empty() => Ok(ReferencePair::new(f, m)),
        _ => Err(CliError::Config(format!(
            "reference pair `{text}` is not of the form FEMALE:MALE"
        ))),
    }
}

/// Folds corpus flags into `cfg` and returns the reference pairs to run.
fn apply_corpus(cfg: &mut RunConfig, a: &CorpusArgs) -> Result<Vec<ReferencePair>, CliError> {
    apply_audio(cfg, &a.audio);
    if let Some(p) = a.provider {
        cfg.provider = p;
    }
    if a.band.is_some() {
        cfg.evaluation.dtw.band = a.band;
    }
    if let Some(mode) = a.index_mode {
        cfg.evaluation.index_mode = mode;
    }
    if let Some(v) = a.control_intelligibility {
        cfg.evaluation.control_intelligibility = v;
    }
    if let (Some(f), Some(m)) = (&a.female_ref, &a.male_ref) {
        cfg.evaluation.reference_pairs = vec![ReferencePair::new(f.clone(), m.clone())];
    } else if !a.pairs.is_empty() {
        cfg.evaluation.reference_pairs = a.pairs.iter().map(|p| parse_pair(p)).collect::<Result<_, _>>()?;
    }
    if cfg.evaluation.reference_pairs.is_empty() {
        return Err(CliError::Config(
            "no reference pair given (use --female-ref/--male-ref, --pair, or the config file)".into(),
        ));
    }
    Ok(cfg.evaluation.reference_pairs.clone())
}

fn provider(cfg: &RunConfig) -> Result<Box<dyn CodeProvider>, CliError> {
    Ok(match cfg.provider {
        ProviderChoice::CdmFiles => Box::new(CdmFileProvider::default()),
        ProviderChoice::MelPassthrough => Box::new(MelPassthroughProvider::new(
            cfg.preprocess.clone(),
            &cfg.features,
        )?),
    })
}

fn metadata() -> RunMetadata {
    RunMetadata {
        generated_at_unix: SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0),
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
    }
}

fn print_correlations(report: &EvaluationReport) {
    println!(
        "reference pair {} / {}: {} speakers scored, {} failed, {} utterances skipped",
        report.reference_pair.female_ref,
        report.reference_pair.male_ref,
        report.speakers.len(),
        report.failures.len(),
        report.skipped.len()
    );
    for (label, c) in [("all", &report.correlation_all), ("pat", &report.correlation_pat)] {
        match c {
            Some(c) => println!(
                "  {label:<3} n={:<3} R={:+.3} (p={:.2e})  Rs={:+.3} (p={:.2e})  index = {:.4e}·score {:+.4e}",
                c.n, c.pearson_r, c.pearson_p, c.spearman_r, c.spearman_p, c.regression.slope, c.regression.intercept
            ),
            None => println!("  {label:<3} not computable"),
        }
    }
}

/// `dir/stem.ext` becomes `dir/stem-<tag>.ext`.
fn tagged(path: &Path, tag: &str) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}-{tag}.{}", ext.to_string_lossy()),
        None => format!("{stem}-{tag}"),
    };
    path.with_file_name(name)
}

fn write_scatter(report: &EvaluationReport, csv: Option<&Path>, svg: Option<&Path>) -> Result<(), CliError> {
    if let Some(p) = csv {
        write_text(p, &scatter_csv(&report.scatter()))?;
        info!("wrote {}", p.display());
    }
    if let Some(p) = svg {
        write_text(p, &render_scatter_svg(report))?;
        info!("wrote {}", p.display());
    }
    Ok(())
}

pub fn evaluate(mut cfg: RunConfig, a: EvaluateArgs) -> Result<(), CliError> {
    let pairs = apply_corpus(&mut cfg, &a.corpus)?;
    let manifest = load_manifest(&a.corpus.manifest)?;
    let provider = provider(&cfg)?;
    let opts = cfg.eval_options();
    let snapshot = serde_json::to_value(&cfg).map_err(|e| CliError::Internal(e.to_string()))?;
    let finish = |mut r: EvaluationReport| {
        r.config = snapshot.clone();
        r.metadata = (!a.no_metadata).then(metadata);
        r
    };

    if let [pair] = pairs.as_slice() {
        let report = finish(run_evaluation(&manifest, pair, provider.as_ref(), &opts)?);
        write_json(&a.out, &report)?;
        write_scatter(&report, a.scatter.as_deref(), a.svg.as_deref())?;
        print_correlations(&report);
        return Ok(());
    }

    let mut sweep = run_reference_sweep(&manifest, &pairs, provider.as_ref(), &opts)?;
    sweep.runs = sweep.runs.into_iter().map(finish).collect();
    write_json(&a.out, &sweep)?;
    for report in &sweep.runs {
        let tag = format!("{}_{}", report.reference_pair.female_ref, report.reference_pair.male_ref);
        write_scatter(
            report,
            a.scatter.as_deref().map(|p| tagged(p, &tag)).as_deref(),
            a.svg.as_deref().map(|p| tagged(p, &tag)).as_deref(),
        )?;
        print_correlations(report);
    }
    for (label, spread) in [("all", &sweep.all), ("pat", &sweep.pat)] {
        if let Some(s) = spread {
            println!(
                "{label} over {} pairs: R = {:+.3} ± {:.3}, Rs = {:+.3} ± {:.3}, worst p = {:.2e}",
                s.runs, s.mean_r, s.std_r, s.mean_rs, s.std_rs, s.worst_p
            );
        }
    }
    Ok(())
}

pub fn subsample(mut cfg: RunConfig, a: SubsampleArgs) -> Result<(), CliError> {
    let pairs = apply_corpus(&mut cfg, &a.corpus)?;
    if let Some(n) = a.n_utterances {
        cfg.subsample.n_utterances = n;
    }
    if let Some(n) = a.iterations {
        cfg.subsample.iterations = n;
    }
    if let Some(s) = a.seed {
        cfg.seed = s;
    }
    let [pair] = pairs.as_slice() else {
        return Err(CliError::Config(format!(
            "subsampling runs on one reference pair, {} given",
            pairs.len()
        )));
    };
    let manifest = load_manifest(&a.corpus.manifest)?;
    let provider = provider(&cfg)?;
    let sub = SubsampleOptions {
        n_utterances: cfg.subsample.n_utterances,
        iterations: cfg.subsample.iterations,
        seed: cfg.seed,
    };
    let result = subsample_experiment(&manifest, pair, provider.as_ref(), &sub, &cfg.eval_options())?;
    if let Some(out) = &a.out {
        write_json(out, &result)?;
    }
    println!(
        "{} iterations of {} utterances per speaker, seed {}",
        sub.iterations, sub.n_utterances, sub.seed
    );
    for (label, s) in [("all", Some(&result.all)), ("pat", result.pat.as_ref())] {
        match s {
            Some(s) => println!(
                "  {label:<3} R = {:+.17} ± {:.17}  Rs = {:+.17} ± {:.17}  worst p = {:.6e}",
                s.mean_r, s.std_r, s.mean_rs, s.std_rs, s.worst_p
            ),
            None => println!("  {label:<3} not computable"),
        }
    }
    Ok(())
}

pub fn export_scatter(a: ExportScatterArgs) -> Result<(), CliError> {
    let text = std::fs::read_to_string(&a.report).map_err(|e| CliError::io(&a.report, e))?;
    let report: EvaluationReport = serde_json::from_str(&text)
        .map_err(|e| CliError::Config(format!("{}: not an evaluation report: {e}", a.report.display())))?;
    if a.csv.is_none() && a.svg.is_none() {
        print!("{}", scatter_csv(&report.scatter()));
        return Ok(());
    }
    write_scatter(&report, a.csv.as_deref(), a.svg.as_deref())
}

pub fn synth(a: SynthArgs) -> Result<(), CliError> {
    let cfg = SyntheticConfig {
        subjects: a.subjects,
        utterances: a.utterances,
        noise_scale: a.noise_scale,
        retime: !a.no_retime,
        seed: a.seed,
        ..Default::default()
    };
    let corpus = SyntheticCorpus::generate(&cfg)?;
    let manifest = corpus.write(&a.out_dir)?;
    println!(
        "{}: {} speakers, {} utterances each; references {} / {}",
        manifest.display(),
        corpus.manifest.speakers.len(),
        a.utterances,
        corpus.reference_pair.female_ref,
        corpus.reference_pair.male_ref
    );
    Ok(())
}

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};

use crowdcheck_core::config::KeyValueConfig;
use crowdcheck_core::format::fmt15;
use crowdcheck_core::inference::{
    CorrelationKind, CorrelationOptions, Enumeration, DEFAULT_N_PERM,
};
use crowdcheck_core::null::{
    quincunx_ensemble, replicate_dataset_unbiased_round, unbiased_ensemble, QuincunxEnsemble,
    SkippedExperiment, UnbiasedEnsemble,
};
use crowdcheck_core::panel::{
    assemble_experiments, parse_forecast_csv, parse_guessing_csv, parse_truth_csv,
    write_forecast_csv, write_guessing_file, write_truth_csv, AssembleOptions, ForecastSchema,
    NumberFormat,
};
use crowdcheck_core::report::{
    bias_histogram, estimates_histogram, scatter, summary_report, write_skipped_csv, xi_histogram,
    HistogramTable, Statistic,
};
use crowdcheck_core::{Dataset, Error, Experiment};

use crate::args::{Command, Common};

pub const DEFAULT_OUT: &str = "crowdcheck-out";

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or configuration; exit code 1.
    Usage(String),
    /// Unreadable or unusable data; exit code 2.
    Data(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Data(_) => "data",
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Data(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(_) | Error::UnknownStatistic(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Data(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

const COMMON_KEYS: [&str; 8] = [
    "truths", "horizon", "min_n", "seed", "n_perm", "bins", "out", "sentinel",
];
const SCATTER_KEYS: [&str; 3] = ["x", "y", "coefficient"];
const EST_KEYS: [&str; 1] = ["id"];
const REPLICATE_KEYS: [&str; 1] = ["replicates"];

/// Flags merged over the config file.
struct Settings {
    inputs: Vec<PathBuf>,
    config: KeyValueConfig,
    truths: Option<PathBuf>,
    horizons: Option<BTreeSet<u32>>,
    min_n: usize,
    seed: u64,
    n_perm: u64,
    bins: Option<usize>,
    out: PathBuf,
    sentinel: String,
}

fn usage<E: ToString>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn cfg_get<T: std::str::FromStr>(cfg: &KeyValueConfig, key: &str) -> CliResult<Option<T>> {
    cfg.get(key).map_err(usage)
}

impl Settings {
    fn resolve(common: &Common, extra_keys: &[&str]) -> CliResult<Self> {
        let config = match &common.config {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| CliError::Usage(format!("config {}: {e}", path.display())))?;
                KeyValueConfig::parse(&text).map_err(usage)?
            }
            None => KeyValueConfig::default(),
        };
        let allowed: Vec<&str> = COMMON_KEYS.iter().chain(extra_keys).copied().collect();
        config.check_keys(&allowed).map_err(usage)?;

        let horizons = if !common.horizon.is_empty() {
            Some(common.horizon.iter().copied().collect())
        } else if let Some(list) = config.get_str("horizon") {
            let parsed: Result<BTreeSet<u32>, _> =
                list.split(',').map(|h| h.trim().parse::<u32>()).collect();
            Some(parsed.map_err(|_| CliError::Usage(format!("invalid horizon list `{list}`")))?)
        } else {
            None
        };
        let bins = match common.bins {
            Some(b) => Some(b),
            None => cfg_get(&config, "bins")?,
        };
        if let Some(b) = bins {
            if b < 2 {
                return Err(CliError::Usage(format!(
                    "--bins must be at least 2, got {b}"
                )));
            }
        }
        let truths = common
            .truths
            .clone()
            .or_else(|| config.get_str("truths").map(PathBuf::from));
        let out = common
            .out
            .clone()
            .or_else(|| config.get_str("out").map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(DEFAULT_OUT));
        if common.inputs.iter().any(|p| Some(p) == truths.as_ref()) {
            return Err(CliError::Usage(
                "input and truth paths must be distinct".into(),
            ));
        }
        Ok(Self {
            inputs: common.inputs.clone(),
            truths,
            horizons,
            min_n: common.min_n.or(cfg_get(&config, "min_n")?).unwrap_or(2),
            seed: common.seed.or(cfg_get(&config, "seed")?).unwrap_or(0),
            n_perm: common
                .n_perm
                .or(cfg_get(&config, "n_perm")?)
                .unwrap_or(DEFAULT_N_PERM),
            bins,
            out,
            sentinel: common
                .sentinel
                .clone()
                .or_else(|| config.get_str("sentinel").map(str::to_string))
                .unwrap_or_else(|| ForecastSchema::default().missing_sentinel),
            config,
        })
    }

    fn base_manifest(&self, command: &str) -> Value {
        json!({
            "command": command,
            "version": env!("CARGO_PKG_VERSION"),
            "inputs": self.inputs.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
            "truths": self.truths.as_ref().map(|p| p.display().to_string()),
            "horizons": self.horizons,
            "min_n": self.min_n,
            "seed": self.seed,
            "n_perm": self.n_perm,
            "bins": self.bins,
            "sentinel": self.sentinel,
        })
    }
}

struct Loaded {
    dataset: Dataset,
    dropped: Vec<SkippedExperiment>,
}

fn is_guessing_file(path: &Path) -> CliResult<bool> {
    let text =
        fs::read_to_string(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    Ok(text
        .lines()
        .find(|l| !l.trim().is_empty())
        .is_some_and(|l| l.trim_start().starts_with('#')))
}

fn open(path: &Path) -> CliResult<fs::File> {
    fs::File::open(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

fn data_at(path: &Path) -> impl Fn(Error) -> CliError + '_ {
    move |e| CliError::Data(format!("{}: {e}", path.display()))
}

fn load(settings: &Settings) -> CliResult<Loaded> {
    if settings.inputs.is_empty() {
        return Err(CliError::Usage("no input files given".into()));
    }
    let options = AssembleOptions {
        min_n: settings.min_n,
        horizons: settings.horizons.clone(),
    };
    if options.min_n < 2 {
        return Err(CliError::Usage(format!(
            "--min-n must be at least 2, got {}",
            options.min_n
        )));
    }
    let schema = ForecastSchema {
        missing_sentinel: settings.sentinel.clone(),
        ..Default::default()
    };
    let mut parts = Vec::new();
    let mut dropped = Vec::new();
    let mut truths = None;
    for path in &settings.inputs {
        if is_guessing_file(path)? {
            let e = parse_guessing_csv(open(path)?).map_err(data_at(path))?;
            let keep = options
                .horizons
                .as_ref()
                .is_none_or(|h| h.contains(&e.horizon));
            if !keep {
                dropped.push(SkippedExperiment {
                    id: e.id,
                    reason: "horizon excluded".into(),
                });
            } else if e.n() < options.min_n {
                let reason = format!("N={} below min_n={}", e.n(), options.min_n);
                dropped.push(SkippedExperiment { id: e.id, reason });
            } else {
                parts.push(Dataset::new(vec![e], path.display().to_string())?);
            }
            continue;
        }
        if truths.is_none() {
            let truth_path = settings
                .truths
                .as_ref()
                .ok_or_else(|| CliError::Usage("forecast CSV input requires --truths".into()))?;
            truths = Some(parse_truth_csv(open(truth_path)?).map_err(data_at(truth_path))?);
        }
        let parsed = parse_forecast_csv(open(path)?, &schema).map_err(data_at(path))?;
        let assembly =
            assemble_experiments(&parsed.records, truths.as_ref().expect("loaded"), &options)
                .map_err(data_at(path))?;
        dropped.extend(assembly.dropped.into_iter().map(|d| SkippedExperiment {
            id: d.id,
            reason: d.reason.to_string(),
        }));
        parts.push(assembly.dataset);
    }
    let provenance = settings
        .inputs
        .iter()
        .map(|p| p.display().to_string())
        .collect::<Vec<_>>()
        .join(", ");
    let dataset = Dataset::concat(parts, provenance)?;
    if dataset.is_empty() {
        return Err(CliError::Data(format!(
            "no usable experiments ({} dropped)",
            dropped.len()
        )));
    }
    Ok(Loaded { dataset, dropped })
}

/// Collects output files and writes them at the end, so a failed run leaves nothing half-written.
struct Output {
    dir: PathBuf,
    files: Vec<(String, Vec<u8>)>,
}

impl Output {
    fn new(dir: &Path) -> Self {
        Self {
            dir: dir.to_path_buf(),
            files: Vec::new(),
        }
    }

    fn add<F>(&mut self, name: &str, write: F) -> CliResult<()>
    where
        F: FnOnce(&mut Vec<u8>) -> crowdcheck_core::Result<()>,
    {
        let mut buf = Vec::new();
        write(&mut buf)?;
        self.files.push((name.to_string(), buf));
        Ok(())
    }

    fn manifest(&mut self, manifest: &Value) -> CliResult<()> {
        let mut text =
            serde_json::to_vec_pretty(manifest).map_err(|e| CliError::Data(e.to_string()))?;
        text.push(b'\n');
        self.files.push(("manifest.json".into(), text));
        Ok(())
    }

    fn commit(self) -> CliResult<Vec<PathBuf>> {
        fs::create_dir_all(&self.dir)
            .map_err(|e| CliError::Data(format!("{}: {e}", self.dir.display())))?;
        let mut written = Vec::new();
        for (name, bytes) in self.files {
            let path = self.dir.join(name);
            fs::write(&path, bytes)
                .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
            written.push(path);
        }
        Ok(written)
    }
}

fn counts(total: usize, used: usize, dropped: usize) -> Value {
    json!({ "total": total, "used": used, "dropped": dropped })
}

fn markers_json(h: &HistogramTable) -> Value {
    Value::Object(
        h.markers
            .iter()
            .map(|m| (m.name.clone(), Value::String(fmt15(m.value))))
            .collect(),
    )
}

fn skipped_with(mut a: Vec<SkippedExperiment>, b: &[SkippedExperiment]) -> Vec<SkippedExperiment> {
    a.extend_from_slice(b);
    a
}

/// Panels with a survey period go to `forecasts.csv` + `truths.csv`; guessing
/// panels, which have none, go to one `guess_<id>.txt` each.
fn write_dataset_files(out: &mut Output, dataset: &Dataset) -> CliResult<()> {
    let (guesses, panels): (Vec<&Experiment>, Vec<&Experiment>) =
        dataset.iter().partition(|e| e.survey_period.is_none());
    for e in guesses {
        let name: String =
            e.id.chars()
                .map(|c| {
                    if c.is_ascii_alphanumeric() || "._~-".contains(c) {
                        c
                    } else {
                        '_'
                    }
                })
                .collect();
        out.add(&format!("guess_{name}.txt"), |w| write_guessing_file(w, e))?;
    }
    if panels.is_empty() {
        return Ok(());
    }
    let panels = Dataset::new(panels.into_iter().cloned().collect(), "")?;
    let (records, truths) = panels.to_records()?;
    let fmt = NumberFormat::Significant(15);
    out.add("forecasts.csv", |w| write_forecast_csv(w, &records, fmt))?;
    out.add("truths.csv", |w| write_truth_csv(w, &truths, fmt))?;
    Ok(())
}

fn ingest(common: &Common) -> CliResult<Vec<PathBuf>> {
    let s = Settings::resolve(common, &[])?;
    let loaded = load(&s)?;
    let mut out = Output::new(&s.out);
    out.add("experiments.csv", |w| {
        use std::io::Write;
        writeln!(
            w,
            "id,indicator,horizon,survey_period,target_period,truth,n"
        )?;
        for e in &loaded.dataset {
            writeln!(
                w,
                "{},{},{},{},{},{},{}",
                e.id,
                e.indicator,
                e.horizon,
                e.survey_period.map(|q| q.to_string()).unwrap_or_default(),
                e.target_period().map(|q| q.to_string()).unwrap_or_default(),
                fmt15(e.truth),
                e.n()
            )?;
        }
        Ok(())
    })?;
    out.add("estimates.csv", |w| {
        use std::io::Write;
        writeln!(w, "id,forecaster_id,estimate")?;
        for e in &loaded.dataset {
            for est in e.estimates() {
                writeln!(w, "{},{},{}", e.id, est.forecaster_id, fmt15(est.value))?;
            }
        }
        Ok(())
    })?;
    out.add("dropped.csv", |w| write_skipped_csv(w, &loaded.dropped))?;
    let used = loaded.dataset.len();
    let mut m = s.base_manifest("ingest");
    m["counts"] = counts(used + loaded.dropped.len(), used, loaded.dropped.len());
    out.manifest(&m)?;
    out.commit()
}

fn summarize(common: &Common) -> CliResult<Vec<PathBuf>> {
    let s = Settings::resolve(common, &[])?;
    let loaded = load(&s)?;
    let report = summary_report(&loaded.dataset)?;
    let skipped = skipped_with(loaded.dropped, &report.skipped);
    let mut out = Output::new(&s.out);
    out.add("summary.csv", |w| report.write_csv(w))?;
    out.add("skipped.csv", |w| write_skipped_csv(w, &skipped))?;
    let mut m = s.base_manifest("summarize");
    m["counts"] = counts(
        report.rows.len() + skipped.len(),
        report.rows.len(),
        skipped.len(),
    );
    out.manifest(&m)?;
    out.commit()
}

fn pick<'a>(flag: Option<&'a str>, cfg: &'a KeyValueConfig, key: &str) -> CliResult<&'a str> {
    flag.or_else(|| cfg.get_str(key))
        .ok_or_else(|| CliError::Usage(format!("--{key} is required")))
}

fn run_scatter(
    common: &Common,
    x: Option<&str>,
    y: Option<&str>,
    pearson: bool,
) -> CliResult<Vec<PathBuf>> {
    let s = Settings::resolve(common, &SCATTER_KEYS)?;
    let x: Statistic = pick(x, &s.config, "x")?.parse()?;
    let y: Statistic = pick(y, &s.config, "y")?.parse()?;
    let kind = if pearson || s.config.get_str("coefficient") == Some("pearson") {
        CorrelationKind::Pearson
    } else {
        CorrelationKind::Spearman
    };
    let loaded = load(&s)?;
    let opts = CorrelationOptions {
        kind,
        n_perm: s.n_perm,
        seed: s.seed,
        enumeration: Enumeration::Auto,
    };
    let report = scatter(&loaded.dataset, x, y, &opts).map_err(|e| match e {
        Error::InvalidParameter(_) => usage(e),
        other => CliError::Data(other.to_string()),
    })?;
    let skipped = skipped_with(loaded.dropped, &report.dropped);
    let mut out = Output::new(&s.out);
    out.add("scatter_pairs.csv", |w| report.write_pairs_csv(w))?;
    out.add("scatter_summary.csv", |w| report.write_summary_csv(w))?;
    out.add("skipped.csv", |w| write_skipped_csv(w, &skipped))?;
    let mut m = s.base_manifest("scatter");
    m["x"] = json!(x.name());
    m["y"] = json!(y.name());
    m["counts"] = counts(
        report.pairs.len() + skipped.len(),
        report.pairs.len(),
        skipped.len(),
    );
    m["correlation"] = json!({
        "coefficient": report.correlation.kind,
        "rho": fmt15(report.correlation.rho),
        "p_value": fmt15(report.correlation.p_value),
        "method": report.correlation.method,
        "n_perm": report.correlation.n_perm,
    });
    out.manifest(&m)?;
    out.commit()
}

fn xi_hist(common: &Common) -> CliResult<Vec<PathBuf>> {
    let s = Settings::resolve(common, &[])?;
    let loaded = load(&s)?;
    let report = xi_histogram(&loaded.dataset, s.bins)?;
    let mut out = Output::new(&s.out);
    out.add("xi_values.csv", |w| report.write_values_csv(w))?;
    out.add("xi_hist.csv", |w| report.histogram.write_csv(w))?;
    out.add("xi_markers.csv", |w| report.histogram.write_markers_csv(w))?;
    out.add("skipped.csv", |w| write_skipped_csv(w, &loaded.dropped))?;
    let mut m = s.base_manifest("xi-hist");
    let used = report.values.len();
    m["counts"] = counts(used + loaded.dropped.len(), used, loaded.dropped.len());
    m["markers"] = markers_json(&report.histogram);
    out.manifest(&m)?;
    out.commit()
}

fn bias_hist(common: &Common) -> CliResult<Vec<PathBuf>> {
    let s = Settings::resolve(common, &[])?;
    let loaded = load(&s)?;
    let report =
        bias_histogram(&loaded.dataset, s.bins).map_err(|e| CliError::Data(e.to_string()))?;
    let skipped = skipped_with(loaded.dropped, &report.skipped);
    let mut out = Output::new(&s.out);
    out.add("bias_values.csv", |w| report.write_values_csv(w))?;
    out.add("bias_hist.csv", |w| report.histogram.write_csv(w))?;
    out.add("bias_markers.csv", |w| {
        report.histogram.write_markers_csv(w)
    })?;
    out.add("skipped.csv", |w| write_skipped_csv(w, &skipped))?;
    let mut m = s.base_manifest("bias-hist");
    m["counts"] = counts(
        report.rows.len() + skipped.len(),
        report.rows.len(),
        skipped.len(),
    );
    m["markers"] = markers_json(&report.histogram);
    out.manifest(&m)?;
    out.commit()
}

fn est_hist(common: &Common, id: Option<&str>) -> CliResult<Vec<PathBuf>> {
    let s = Settings::resolve(common, &EST_KEYS)?;
    let id = pick(id, &s.config, "id")?.to_string();
    let loaded = load(&s)?;
    let report = estimates_histogram(&loaded.dataset, &id, s.bins)
        .map_err(|e| CliError::Data(e.to_string()))?;
    let mut out = Output::new(&s.out);
    out.add("est_hist.csv", |w| report.histogram.write_csv(w))?;
    out.add("est_markers.csv", |w| report.histogram.write_markers_csv(w))?;
    let mut m = s.base_manifest("est-hist");
    m["id"] = json!(id);
    m["n"] = json!(report.relative.len());
    m["markers"] = markers_json(&report.histogram);
    out.manifest(&m)?;
    out.commit()
}

#[derive(Serialize)]
struct SimCounts {
    experiments: usize,
    skipped: usize,
}

#[allow(clippy::too_many_arguments)]
fn simulate_unbiased(
    common: &Common,
    replicates: Option<u64>,
    n_experiments: Option<usize>,
    n_min: Option<usize>,
    n_max: Option<usize>,
    truth: Option<f64>,
    delta: Option<f64>,
) -> CliResult<Vec<PathBuf>> {
    let keys: Vec<&str> = UnbiasedEnsemble::CONFIG_KEYS
        .iter()
        .chain(&REPLICATE_KEYS)
        .copied()
        .collect();
    let s = Settings::resolve(common, &keys)?;
    let mut out = Output::new(&s.out);
    let mut m = s.base_manifest("simulate-unbiased");

    if s.inputs.is_empty() {
        let mut cfg = UnbiasedEnsemble::from_config(&s.config).map_err(usage)?;
        cfg.seed = s.seed;
        cfg.n_experiments = n_experiments.unwrap_or(cfg.n_experiments);
        cfg.n_min = n_min.unwrap_or(cfg.n_min);
        cfg.n_max = n_max.unwrap_or(cfg.n_max);
        cfg.truth = truth.unwrap_or(cfg.truth);
        cfg.delta = delta.unwrap_or(cfg.delta);
        let dataset = unbiased_ensemble(&cfg).map_err(usage)?;
        write_dataset_files(&mut out, &dataset)?;
        m["mode"] = json!("ensemble");
        m["ensemble"] = json!(cfg);
        m["counts"] = json!(SimCounts {
            experiments: dataset.len(),
            skipped: 0
        });
    } else {
        let rounds = replicates
            .or(cfg_get(&s.config, "replicates")?)
            .unwrap_or(1);
        if rounds == 0 {
            return Err(CliError::Usage("--replicates must be at least 1".into()));
        }
        let loaded = load(&s)?;
        let mut parts = Vec::new();
        let mut skipped = loaded.dropped.clone();
        for round in 0..rounds {
            let rep = replicate_dataset_unbiased_round(&loaded.dataset, s.seed, round)?;
            skipped.extend(rep.skipped);
            if rounds == 1 {
                parts.push(rep.dataset);
                continue;
            }
            // Distinct indicators keep replicate experiments apart in the output files.
            let renamed = rep
                .dataset
                .experiments()
                .iter()
                .map(|e| {
                    let mut e = e.clone();
                    e.indicator = format!("{}~r{round}", e.indicator);
                    e.id = format!("{}~r{round}", e.id);
                    e
                })
                .collect();
            parts.push(Dataset::new(renamed, "")?);
        }
        let dataset = Dataset::concat(parts, "unbiased replication")?;
        write_dataset_files(&mut out, &dataset)?;
        out.add("skipped.csv", |w| write_skipped_csv(w, &skipped))?;
        m["mode"] = json!("replicate");
        m["replicates"] = json!(rounds);
        m["counts"] = json!(SimCounts {
            experiments: dataset.len(),
            skipped: skipped.len()
        });
    }
    out.manifest(&m)?;
    out.commit()
}

#[allow(clippy::too_many_arguments)]
fn simulate_quincunx(
    common: &Common,
    g_hat: Option<f64>,
    n_cues: Option<usize>,
    cue_low: Option<f64>,
    cue_high: Option<f64>,
    p_cue: Option<f64>,
    n_experiments: Option<usize>,
    n_per: Option<usize>,
    centered_cues: bool,
) -> CliResult<Vec<PathBuf>> {
    let s = Settings::resolve(common, &QuincunxEnsemble::CONFIG_KEYS)?;
    if !s.inputs.is_empty() {
        return Err(CliError::Usage(
            "simulate-quincunx takes no input files".into(),
        ));
    }
    let mut cfg = QuincunxEnsemble::from_config(&s.config).map_err(usage)?;
    cfg.seed = s.seed;
    cfg.g_hat = g_hat.unwrap_or(cfg.g_hat);
    cfg.n_cues = n_cues.unwrap_or(cfg.n_cues);
    cfg.cue_low = cue_low.unwrap_or(cfg.cue_low);
    cfg.cue_high = cue_high.unwrap_or(cfg.cue_high);
    cfg.p_cue = p_cue.unwrap_or(cfg.p_cue);
    cfg.n_experiments = n_experiments.unwrap_or(cfg.n_experiments);
    cfg.n_per = n_per.unwrap_or(cfg.n_per);
    cfg.centered_cues |= centered_cues;
    let dataset = quincunx_ensemble(&cfg).map_err(usage)?;
    let mut out = Output::new(&s.out);
    write_dataset_files(&mut out, &dataset)?;
    let mut m = s.base_manifest("simulate-quincunx");
    m["ensemble"] = json!(cfg);
    m["counts"] = json!(SimCounts {
        experiments: dataset.len(),
        skipped: 0
    });
    out.manifest(&m)?;
    out.commit()
}

pub fn run(command: &Command) -> CliResult<Vec<PathBuf>> {
    match command {
        Command::Ingest(c) => ingest(c),
        Command::Summarize(c) => summarize(c),
        Command::Scatter {
            common,
            x,
            y,
            pearson,
        } => run_scatter(common, x.as_deref(), y.as_deref(), *pearson),
        Command::XiHist(c) => xi_hist(c),
        Command::BiasHist(c) => bias_hist(c),
        Command::EstHist { common, id } => est_hist(common, id.as_deref()),
        Command::SimulateUnbiased {
            common,
            replicates,
            n_experiments,
            n_min,
            n_max,
            truth,
            delta,
        } => simulate_unbiased(
            common,
            *replicates,
            *n_experiments,
            *n_min,
            *n_max,
            *truth,
            *delta,
        ),
        Command::SimulateQuincunx {
            common,
            g_hat,
            n_cues,
            cue_low,
            cue_high,
            p_cue,
            n_experiments,
            n_per,
            centered_cues,
        } => simulate_quincunx(
            common,
            *g_hat,
            *n_cues,
            *cue_low,
            *cue_high,
            *p_cue,
            *n_experiments,
            *n_per,
            *centered_cues,
        ),
    }
}

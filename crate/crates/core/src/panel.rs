//! Panel data model and ingestion of normalized forecast, truth and guessing files.
//!
//! A forecast CSV carries one row per individual forecast:
//!
//! ```text
//! survey_period,indicator,horizon,forecaster_id,estimate
//! 2019Q3,NGDP,2,417,2.35
//! ```
//!
//! A truth CSV maps `(indicator, target_period)` to the realized value, where
//! `target_period` is the survey period advanced by the horizon. Grouping
//! forecasts by `(indicator, horizon, survey_period)` and attaching the
//! realized value yields one [`Experiment`] per group.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::{BufRead, BufReader, Read, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::{fmt_exact, fmt_sig};

/// Calendar quarter in `YYYYQn` notation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Quarter {
    year: i32,
    quarter: u8,
}

impl Quarter {
    pub fn new(year: i32, quarter: u8) -> Result<Self> {
        if !(1..=4).contains(&quarter) {
            return Err(Error::Quarter(format!("{year}Q{quarter}")));
        }
        Ok(Self { year, quarter })
    }

    pub fn year(self) -> i32 {
        self.year
    }

    pub fn quarter(self) -> u8 {
        self.quarter
    }

    /// Moves forward by `quarters`, carrying into the year.
    pub fn advance(self, quarters: u32) -> Self {
        let index = i64::from(self.year) * 4 + i64::from(self.quarter - 1) + i64::from(quarters);
        Self {
            year: index.div_euclid(4) as i32,
            quarter: index.rem_euclid(4) as u8 + 1,
        }
    }
}

impl fmt::Display for Quarter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}Q{}", self.year, self.quarter)
    }
}

impl FromStr for Quarter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Quarter(s.to_string());
        let (year, quarter) = s.trim().split_once(['Q', 'q']).ok_or_else(bad)?;
        let year: i32 = year.parse().map_err(|_| bad())?;
        let quarter: u8 = quarter.parse().map_err(|_| bad())?;
        Quarter::new(year, quarter).map_err(|_| bad())
    }
}

/// One individual estimate `g_i`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub forecaster_id: String,
    pub value: f64,
}

/// One forecast panel: a set of estimates of a single realized quantity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Experiment {
    pub id: String,
    pub indicator: String,
    /// Quarters ahead of the survey quarter; 0 is the current quarter.
    pub horizon: u32,
    /// `None` for one-off guessing experiments.
    pub survey_period: Option<Quarter>,
    pub truth: f64,
    estimates: Vec<Estimate>,
}

impl Experiment {
    /// Builds a panel, checking that it is nonempty, finite, and that
    /// forecaster ids are unique.
    pub fn new(
        id: impl Into<String>,
        indicator: impl Into<String>,
        horizon: u32,
        survey_period: Option<Quarter>,
        truth: f64,
        estimates: Vec<Estimate>,
    ) -> Result<Self> {
        let id = id.into();
        if estimates.is_empty() {
            return Err(Error::EmptyPanel);
        }
        if !truth.is_finite() {
            return Err(Error::NonFinite(format!("truth of {id}")));
        }
        let mut seen = BTreeSet::new();
        for e in &estimates {
            if !e.value.is_finite() {
                return Err(Error::NonFinite(format!(
                    "estimate of {} in {id}",
                    e.forecaster_id
                )));
            }
            if !seen.insert(e.forecaster_id.as_str()) {
                return Err(Error::DuplicateForecaster {
                    group: id.clone(),
                    forecaster: e.forecaster_id.clone(),
                });
            }
        }
        Ok(Self {
            id,
            indicator: indicator.into(),
            horizon,
            survey_period,
            truth,
            estimates,
        })
    }

    /// Panel with synthetic forecaster ids `f1..fN`.
    pub fn from_values(
        id: impl Into<String>,
        indicator: impl Into<String>,
        horizon: u32,
        survey_period: Option<Quarter>,
        truth: f64,
        values: &[f64],
    ) -> Result<Self> {
        let estimates = values
            .iter()
            .enumerate()
            .map(|(i, &value)| Estimate {
                forecaster_id: format!("f{}", i + 1),
                value,
            })
            .collect();
        Self::new(id, indicator, horizon, survey_period, truth, estimates)
    }

    pub fn estimates(&self) -> &[Estimate] {
        &self.estimates
    }

    pub fn values(&self) -> Vec<f64> {
        self.estimates.iter().map(|e| e.value).collect()
    }

    pub fn n(&self) -> usize {
        self.estimates.len()
    }

    /// Period whose realized value is being predicted.
    pub fn target_period(&self) -> Option<Quarter> {
        self.survey_period.map(|q| q.advance(self.horizon))
    }

    fn sort_key(&self) -> (&str, u32, Option<Quarter>, &str) {
        (&self.indicator, self.horizon, self.survey_period, &self.id)
    }
}

/// Canonical experiment id for a forecast group.
pub fn group_id(indicator: &str, horizon: u32, survey_period: Quarter) -> String {
    format!("{indicator}:h{horizon}:{survey_period}")
}

/// Ordered collection of experiments.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Dataset {
    experiments: Vec<Experiment>,
    pub provenance: String,
}

impl Dataset {
    /// Sorts by `(indicator, horizon, survey_period)` and rejects duplicate keys or ids.
    pub fn new(mut experiments: Vec<Experiment>, provenance: impl Into<String>) -> Result<Self> {
        experiments.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        let mut ids = BTreeSet::new();
        for pair in experiments.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            if a.survey_period.is_some()
                && (&a.indicator, a.horizon, a.survey_period)
                    == (&b.indicator, b.horizon, b.survey_period)
            {
                return Err(Error::DuplicateKey(format!(
                    "({}, {}, {})",
                    a.indicator,
                    a.horizon,
                    a.survey_period.map(|q| q.to_string()).unwrap_or_default()
                )));
            }
        }
        for e in &experiments {
            if !ids.insert(e.id.as_str()) {
                return Err(Error::DuplicateKey(format!("experiment id {}", e.id)));
            }
        }
        Ok(Self {
            experiments,
            provenance: provenance.into(),
        })
    }

    pub fn experiments(&self) -> &[Experiment] {
        &self.experiments
    }

    pub fn len(&self) -> usize {
        self.experiments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.experiments.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&Experiment> {
        self.experiments.iter().find(|e| e.id == id)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Experiment> {
        self.experiments.iter()
    }

    /// Merges datasets, re-validating ordering and uniqueness.
    pub fn concat(parts: Vec<Dataset>, provenance: impl Into<String>) -> Result<Self> {
        let experiments = parts.into_iter().flat_map(|d| d.experiments).collect();
        Self::new(experiments, provenance)
    }

    /// Flattens back into forecast records and truths. Fails for experiments
    /// without a survey period.
    pub fn to_records(&self) -> Result<(Vec<ForecastRecord>, TruthTable)> {
        let mut records = Vec::new();
        let mut truths = TruthTable::default();
        for e in &self.experiments {
            let period = e.survey_period.ok_or_else(|| {
                Error::InvalidParameter(format!("experiment {} has no survey period", e.id))
            })?;
            for est in &e.estimates {
                records.push(ForecastRecord {
                    survey_period: period,
                    indicator: e.indicator.clone(),
                    horizon: e.horizon,
                    forecaster_id: est.forecaster_id.clone(),
                    estimate: est.value,
                });
            }
            // Different horizons can share a target period; their truths must agree.
            let target = period.advance(e.horizon);
            match truths.get(&e.indicator, target) {
                Some(v) if v.to_bits() == e.truth.to_bits() => {}
                Some(_) => {
                    return Err(Error::DuplicateKey(format!(
                        "conflicting truth ({}, {target})",
                        e.indicator
                    )))
                }
                None => truths.insert(&e.indicator, target, e.truth)?,
            }
        }
        Ok((records, truths))
    }
}

impl<'a> IntoIterator for &'a Dataset {
    type Item = &'a Experiment;
    type IntoIter = std::slice::Iter<'a, Experiment>;

    fn into_iter(self) -> Self::IntoIter {
        self.experiments.iter()
    }
}

/// Realized values keyed by `(indicator, target_period)`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TruthTable {
    entries: BTreeMap<(String, Quarter), f64>,
}

impl TruthTable {
    pub fn insert(&mut self, indicator: &str, target: Quarter, value: f64) -> Result<()> {
        if !value.is_finite() {
            return Err(Error::NonFinite(format!("truth for {indicator} {target}")));
        }
        match self.entries.entry((indicator.to_string(), target)) {
            std::collections::btree_map::Entry::Occupied(_) => Err(Error::DuplicateKey(format!(
                "truth ({indicator}, {target})"
            ))),
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(value);
                Ok(())
            }
        }
    }

    pub fn get(&self, indicator: &str, target: Quarter) -> Option<f64> {
        self.entries.get(&(indicator.to_string(), target)).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Quarter, f64)> {
        self.entries.iter().map(|((i, q), v)| (i.as_str(), *q, *v))
    }
}

/// Column names and missing-value marker of a forecast CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct ForecastSchema {
    pub survey_period: String,
    pub indicator: String,
    pub horizon: String,
    pub forecaster_id: String,
    pub estimate: String,
    pub missing_sentinel: String,
}

impl Default for ForecastSchema {
    fn default() -> Self {
        Self {
            survey_period: "survey_period".into(),
            indicator: "indicator".into(),
            horizon: "horizon".into(),
            forecaster_id: "forecaster_id".into(),
            estimate: "estimate".into(),
            missing_sentinel: "#N/A".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ForecastRecord {
    pub survey_period: Quarter,
    pub indicator: String,
    pub horizon: u32,
    pub forecaster_id: String,
    pub estimate: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ParsedForecasts {
    pub records: Vec<ForecastRecord>,
    /// Rows skipped because the estimate was empty or the sentinel.
    pub skipped: usize,
}

fn column(headers: &csv::StringRecord, name: &str) -> Result<usize> {
    headers
        .iter()
        .position(|h| h.trim() == name)
        .ok_or_else(|| Error::MissingColumn(name.to_string()))
}

fn csv_reader<R: Read>(reader: R) -> csv::Reader<R> {
    csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader)
}

fn line_of(record: &csv::StringRecord) -> u64 {
    record.position().map(|p| p.line()).unwrap_or(0)
}

/// Parses a forecast CSV. LF and CRLF line endings are both accepted.
pub fn parse_forecast_csv<R: Read>(reader: R, schema: &ForecastSchema) -> Result<ParsedForecasts> {
    let mut rdr = csv_reader(reader);
    let headers = rdr.headers()?.clone();
    let c_period = column(&headers, &schema.survey_period)?;
    let c_indicator = column(&headers, &schema.indicator)?;
    let c_horizon = column(&headers, &schema.horizon)?;
    let c_forecaster = column(&headers, &schema.forecaster_id)?;
    let c_estimate = column(&headers, &schema.estimate)?;

    let mut out = ParsedForecasts::default();
    for row in rdr.records() {
        let row = row?;
        let line = line_of(&row);
        let field = |i: usize| row.get(i).unwrap_or("");
        let raw_estimate = field(c_estimate);
        if raw_estimate.is_empty() || raw_estimate == schema.missing_sentinel {
            out.skipped += 1;
            continue;
        }
        let row_err = |message: String| Error::Row { line, message };
        let estimate: f64 = raw_estimate
            .parse()
            .map_err(|_| row_err(format!("non-numeric estimate `{raw_estimate}`")))?;
        if !estimate.is_finite() {
            return Err(row_err(format!("non-finite estimate `{raw_estimate}`")));
        }
        let survey_period: Quarter = field(c_period)
            .parse()
            .map_err(|e: Error| row_err(e.to_string()))?;
        let horizon: u32 = field(c_horizon)
            .parse()
            .map_err(|_| row_err(format!("invalid horizon `{}`", field(c_horizon))))?;
        let indicator = field(c_indicator);
        if indicator.is_empty() {
            return Err(row_err("empty indicator".into()));
        }
        out.records.push(ForecastRecord {
            survey_period,
            indicator: indicator.to_string(),
            horizon,
            forecaster_id: field(c_forecaster).to_string(),
            estimate,
        });
    }
    Ok(out)
}

/// How reals are rendered in emitted files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NumberFormat {
    /// Shortest representation that parses back to the same `f64`.
    #[default]
    Exact,
    /// Fixed number of significant digits (`%.{n}g`).
    Significant(usize),
}

impl NumberFormat {
    pub fn render(self, x: f64) -> String {
        match self {
            NumberFormat::Exact => fmt_exact(x),
            NumberFormat::Significant(digits) => fmt_sig(x, digits),
        }
    }
}

pub fn write_forecast_csv<W: Write>(
    writer: W,
    records: &[ForecastRecord],
    format: NumberFormat,
) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(writer);
    w.write_record([
        "survey_period",
        "indicator",
        "horizon",
        "forecaster_id",
        "estimate",
    ])?;
    for r in records {
        w.write_record([
            r.survey_period.to_string(),
            r.indicator.clone(),
            r.horizon.to_string(),
            r.forecaster_id.clone(),
            format.render(r.estimate),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn parse_truth_csv<R: Read>(reader: R) -> Result<TruthTable> {
    let mut rdr = csv_reader(reader);
    let headers = rdr.headers()?.clone();
    let c_indicator = column(&headers, "indicator")?;
    let c_target = column(&headers, "target_period")?;
    let c_value = column(&headers, "value")?;
    let mut table = TruthTable::default();
    for row in rdr.records() {
        let row = row?;
        let line = line_of(&row);
        let row_err = |message: String| Error::Row { line, message };
        let field = |i: usize| row.get(i).unwrap_or("");
        let target: Quarter = field(c_target)
            .parse()
            .map_err(|e: Error| row_err(e.to_string()))?;
        let value: f64 = field(c_value)
            .parse()
            .map_err(|_| row_err(format!("non-numeric value `{}`", field(c_value))))?;
        table
            .insert(field(c_indicator), target, value)
            .map_err(|e| row_err(e.to_string()))?;
    }
    Ok(table)
}

pub fn write_truth_csv<W: Write>(
    writer: W,
    truths: &TruthTable,
    format: NumberFormat,
) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(writer);
    w.write_record(["indicator", "target_period", "value"])?;
    for (indicator, target, value) in truths.iter() {
        w.write_record([
            indicator.to_string(),
            target.to_string(),
            format.render(value),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssembleOptions {
    pub min_n: usize,
    /// Horizons to keep; `None` keeps all.
    pub horizons: Option<BTreeSet<u32>>,
}

impl Default for AssembleOptions {
    fn default() -> Self {
        Self {
            min_n: 2,
            horizons: None,
        }
    }
}

impl AssembleOptions {
    /// Profile for the Philadelphia Fed survey panels, whose smallest observed panel has 9 forecasters.
    pub fn frbp() -> Self {
        Self {
            min_n: 9,
            horizons: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum DropReason {
    HorizonExcluded,
    MissingTruth { target_period: Quarter },
    TooFewEstimates { n: usize, min_n: usize },
}

impl fmt::Display for DropReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DropReason::HorizonExcluded => write!(f, "horizon excluded"),
            DropReason::MissingTruth { target_period } => {
                write!(f, "no truth for target period {target_period}")
            }
            DropReason::TooFewEstimates { n, min_n } => write!(f, "N={n} below min_n={min_n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DroppedGroup {
    pub id: String,
    pub reason: DropReason,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Assembly {
    pub dataset: Dataset,
    pub dropped: Vec<DroppedGroup>,
}

impl Assembly {
    pub fn total_groups(&self) -> usize {
        self.dataset.len() + self.dropped.len()
    }
}

/// Groups records by `(indicator, horizon, survey_period)` and joins each
/// group with its realized value. Groups that are filtered out land in the
/// drop log exactly once.
pub fn assemble_experiments(
    records: &[ForecastRecord],
    truths: &TruthTable,
    options: &AssembleOptions,
) -> Result<Assembly> {
    if options.min_n < 2 {
        return Err(Error::InvalidParameter(format!(
            "min_n must be at least 2, got {}",
            options.min_n
        )));
    }
    let mut groups: BTreeMap<(&str, u32, Quarter), Vec<Estimate>> = BTreeMap::new();
    for r in records {
        groups
            .entry((r.indicator.as_str(), r.horizon, r.survey_period))
            .or_default()
            .push(Estimate {
                forecaster_id: r.forecaster_id.clone(),
                value: r.estimate,
            });
    }

    let mut experiments = Vec::new();
    let mut dropped = Vec::new();
    for ((indicator, horizon, period), estimates) in groups {
        let id = group_id(indicator, horizon, period);
        let mut seen = BTreeSet::new();
        for e in &estimates {
            if !seen.insert(e.forecaster_id.as_str()) {
                return Err(Error::DuplicateForecaster {
                    group: id,
                    forecaster: e.forecaster_id.clone(),
                });
            }
        }
        if let Some(keep) = &options.horizons {
            if !keep.contains(&horizon) {
                dropped.push(DroppedGroup {
                    id,
                    reason: DropReason::HorizonExcluded,
                });
                continue;
            }
        }
        let target_period = period.advance(horizon);
        let Some(truth) = truths.get(indicator, target_period) else {
            dropped.push(DroppedGroup {
                id,
                reason: DropReason::MissingTruth { target_period },
            });
            continue;
        };
        if estimates.len() < options.min_n {
            dropped.push(DroppedGroup {
                id,
                reason: DropReason::TooFewEstimates {
                    n: estimates.len(),
                    min_n: options.min_n,
                },
            });
            continue;
        }
        experiments.push(Experiment::new(
            id,
            indicator,
            horizon,
            Some(period),
            truth,
            estimates,
        )?);
    }
    Ok(Assembly {
        dataset: Dataset::new(experiments, "forecast csv")?,
        dropped,
    })
}

const DEFAULT_GUESS_INDICATOR: &str = "guess";

/// Parses a guessing-experiment file:
///
/// ```text
/// # truth=636 indicator=candies
/// 500
/// 712
/// ```
///
/// Blank lines and further `#` lines are ignored.
pub fn parse_guessing_csv<R: Read>(reader: R) -> Result<Experiment> {
    let mut lines = BufReader::new(reader).lines();
    let first = loop {
        match lines.next() {
            Some(line) => {
                let line = line?;
                if !line.trim().is_empty() {
                    break line;
                }
            }
            None => return Err(Error::Guessing("missing truth line".into())),
        }
    };
    let meta = first
        .trim()
        .strip_prefix('#')
        .ok_or_else(|| Error::Guessing("missing truth line".into()))?;
    let mut truth = None;
    let mut indicator = DEFAULT_GUESS_INDICATOR.to_string();
    for token in meta.split_whitespace() {
        let Some((key, value)) = token.split_once('=') else {
            continue;
        };
        match key {
            "truth" => {
                let v: f64 = value
                    .parse()
                    .map_err(|_| Error::Guessing(format!("invalid truth `{value}`")))?;
                truth = Some(v);
            }
            "indicator" => indicator = value.to_string(),
            _ => {}
        }
    }
    let truth = truth.ok_or_else(|| Error::Guessing("missing truth line".into()))?;

    let mut values = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let v: f64 = text.parse().map_err(|_| Error::Row {
            line: i as u64 + 2,
            message: format!("non-numeric estimate `{text}`"),
        })?;
        values.push(v);
    }
    if values.is_empty() {
        return Err(Error::Guessing("no estimates".into()));
    }
    Experiment::from_values(indicator.clone(), indicator, 0, None, truth, &values)
}

pub fn write_guessing_file<W: Write>(mut writer: W, experiment: &Experiment) -> Result<()> {
    writeln!(
        writer,
        "# truth={} indicator={}",
        fmt_exact(experiment.truth),
        experiment.indicator
    )?;
    for e in experiment.estimates() {
        writeln!(writer, "{}", fmt_exact(e.value))?;
    }
    Ok(())
}

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::fmt15;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Marker {
    pub name: String,
    pub value: f64,
}

/// Binned proportions with their cumulative distribution.
///
/// Bin `i` covers `[edges[i], edges[i + 1])`; the last bin is closed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HistogramTable {
    pub bin_edges: Vec<f64>,
    pub counts: Vec<usize>,
    pub proportions: Vec<f64>,
    pub cdf: Vec<f64>,
    pub markers: Vec<Marker>,
    pub total: usize,
}

impl HistogramTable {
    pub fn from_edges(values: &[f64], edges: Vec<f64>) -> Result<Self> {
        if edges.len() < 3 {
            return Err(Error::InvalidParameter(
                "a histogram needs at least 2 bins".into(),
            ));
        }
        if edges.windows(2).any(|w| w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less)) {
            return Err(Error::InvalidParameter("bin edges must increase".into()));
        }
        if values.is_empty() {
            return Err(Error::EmptyPanel);
        }
        let (lo, hi) = (edges[0], edges[edges.len() - 1]);
        let bins = edges.len() - 1;
        let mut counts = vec![0usize; bins];
        for &v in values {
            if !(lo..=hi).contains(&v) {
                return Err(Error::InvalidParameter(format!(
                    "value {v} outside histogram range [{lo}, {hi}]"
                )));
            }
            let bin = (edges.partition_point(|&e| e <= v) - 1).min(bins - 1);
            counts[bin] += 1;
        }
        let total = values.len();
        let proportions = counts.iter().map(|&c| c as f64 / total as f64).collect();
        let cdf = counts
            .iter()
            .scan(0usize, |acc, &c| {
                *acc += c;
                Some(*acc as f64 / total as f64)
            })
            .collect();
        Ok(Self {
            bin_edges: edges,
            counts,
            proportions,
            cdf,
            markers: Vec::new(),
            total,
        })
    }

    pub fn uniform(values: &[f64], lo: f64, hi: f64, bins: usize) -> Result<Self> {
        Self::from_edges(values, uniform_edges(lo, hi, bins)?)
    }

    pub fn with_marker(mut self, name: &str, value: f64) -> Self {
        self.markers.push(Marker {
            name: name.to_string(),
            value,
        });
        self
    }

    pub fn marker(&self, name: &str) -> Option<f64> {
        self.markers
            .iter()
            .find(|m| m.name == name)
            .map(|m| m.value)
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "bin_lo,bin_hi,count,proportion,cdf")?;
        for i in 0..self.counts.len() {
            writeln!(
                w,
                "{},{},{},{},{}",
                fmt15(self.bin_edges[i]),
                fmt15(self.bin_edges[i + 1]),
                self.counts[i],
                fmt15(self.proportions[i]),
                fmt15(self.cdf[i])
            )?;
        }
        Ok(())
    }

    pub fn write_markers_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "marker,value")?;
        for m in &self.markers {
            writeln!(w, "{},{}", m.name, fmt15(m.value))?;
        }
        Ok(())
    }
}

pub fn uniform_edges(lo: f64, hi: f64, bins: usize) -> Result<Vec<f64>> {
    if bins < 2 {
        return Err(Error::InvalidParameter(format!(
            "bin count must be at least 2, got {bins}"
        )));
    }
    if lo.partial_cmp(&hi) != Some(std::cmp::Ordering::Less) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "invalid histogram range [{lo}, {hi}]"
        )));
    }
    let mut edges: Vec<f64> = (0..bins)
        .map(|i| lo + (hi - lo) * i as f64 / bins as f64)
        .collect();
    edges.push(hi);
    Ok(edges)
}

/// Edges that put each attainable fraction `k/n` in its own bin:
/// `0, 0.5/n, 1.5/n, ..., (n - 0.5)/n, 1`.
pub fn natural_fraction_edges(n: usize) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::EmptyPanel);
    }
    let n_f = n as f64;
    let mut edges = vec![0.0];
    edges.extend((1..=n).map(|k| (k as f64 - 0.5) / n_f));
    edges.push(1.0);
    Ok(edges)
}

/// Share of `values` that are `<= at`.
pub fn empirical_cdf(values: &[f64], at: f64) -> f64 {
    if values.is_empty() {
        return f64::NAN;
    }
    values.iter().filter(|&&v| v <= at).count() as f64 / values.len() as f64
}

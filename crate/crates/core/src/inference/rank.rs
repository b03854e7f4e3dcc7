//! Ranks with tie averaging, Spearman and Pearson coefficients.

use crate::error::{Error, Result};
use crate::stats::compensated_sum;

/// 1-based ranks; tied values share the mean of the positions they occupy.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        // positions start+1 ..= end
        let rank = (start + 1 + end) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = rank;
        }
        start = end;
    }
    ranks
}

/// Which coefficient a correlation study reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CorrelationKind {
    #[default]
    Spearman,
    Pearson,
}

pub(crate) fn validate_pair(x: &[f64], y: &[f64]) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::UndefinedCorrelation(format!(
            "length mismatch {} vs {}",
            x.len(),
            y.len()
        )));
    }
    if x.len() < 3 {
        return Err(Error::UndefinedCorrelation(format!(
            "need at least 3 pairs, got {}",
            x.len()
        )));
    }
    for (name, v) in [("x", x), ("y", y)] {
        if v.iter().any(|a| !a.is_finite()) {
            return Err(Error::NonFinite(format!(
                "{name} contains a non-finite value"
            )));
        }
        if v.iter().all(|&a| a == v[0]) {
            return Err(Error::UndefinedCorrelation(format!("{name} is constant")));
        }
    }
    Ok(())
}

fn center(v: &[f64]) -> Vec<f64> {
    let mean = compensated_sum(v.iter().copied()) / v.len() as f64;
    v.iter().map(|a| a - mean).collect()
}

/// Centers `v` and scales it to unit Euclidean norm.
pub(crate) fn standardize(v: &[f64]) -> Vec<f64> {
    let centered = center(v);
    let norm = compensated_sum(centered.iter().map(|a| a * a)).sqrt();
    centered.into_iter().map(|a| a / norm).collect()
}

/// Product-moment correlation. Written as a single ratio so that identical
/// or mirrored inputs give exactly +1 or -1.
pub(crate) fn product_moment(x: &[f64], y: &[f64]) -> f64 {
    let cx = center(x);
    let cy = center(y);
    let sxy = dot(&cx, &cy);
    let sxx = dot(&cx, &cx);
    let syy = dot(&cy, &cy);
    (sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0)
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    compensated_sum(a.iter().zip(b).map(|(p, q)| p * q))
}

/// Ranks for Spearman, raw values for Pearson.
pub(crate) fn transformed(v: &[f64], kind: CorrelationKind) -> Vec<f64> {
    match kind {
        CorrelationKind::Spearman => average_ranks(v),
        CorrelationKind::Pearson => v.to_vec(),
    }
}

fn correlation(x: &[f64], y: &[f64], kind: CorrelationKind) -> Result<f64> {
    validate_pair(x, y)?;
    Ok(product_moment(&transformed(x, kind), &transformed(y, kind)))
}

/// Spearman's rho: the product-moment correlation of the average ranks.
pub fn spearman_rho(x: &[f64], y: &[f64]) -> Result<f64> {
    correlation(x, y, CorrelationKind::Spearman)
}

pub fn pearson_r(x: &[f64], y: &[f64]) -> Result<f64> {
    correlation(x, y, CorrelationKind::Pearson)
}

//! Permutation significance for correlation coefficients.
//!
//! The two-sided p-value is the share of label permutations of `y` whose
//! coefficient is at least as large in magnitude as the observed one. Small
//! samples are enumerated exhaustively; otherwise permutations are drawn at
//! random and the add-one estimator `(count + 1) / (n_perm + 1)` is reported,
//! so the p-value is never zero.
//!
//! Random permutations are generated in fixed-size blocks. Block `k` draws
//! from a ChaCha stream keyed by `(seed, k)`, which makes the result
//! independent of how blocks are spread over threads.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::rank::{product_moment, standardize, transformed, validate_pair, CorrelationKind};
use crate::error::{Error, Result};

pub const DEFAULT_N_PERM: u64 = 100_000;
pub const MIN_N_PERM: u64 = 1_000;

const BLOCK: u64 = 2_048;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PValueMethod {
    Permutation,
    ExactEnumeration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Enumeration {
    /// Enumerate when `n!` does not exceed `n_perm`.
    Auto,
    Never,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorrelationOptions {
    pub kind: CorrelationKind,
    pub n_perm: u64,
    pub seed: u64,
    pub enumeration: Enumeration,
}

impl Default for CorrelationOptions {
    fn default() -> Self {
        Self {
            kind: CorrelationKind::Spearman,
            n_perm: DEFAULT_N_PERM,
            seed: 0,
            enumeration: Enumeration::Auto,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorrelationResult {
    pub kind: CorrelationKind,
    pub rho: f64,
    pub p_value: f64,
    pub n_pairs: usize,
    pub method: PValueMethod,
    /// Permutations evaluated (`n!` when enumerated).
    pub n_perm: u64,
}

fn factorial_at_most(n: usize, limit: u64) -> Option<u64> {
    let mut f: u64 = 1;
    for k in 2..=n as u64 {
        f = f.checked_mul(k)?;
        if f > limit {
            return None;
        }
    }
    Some(f)
}

/// Spearman rho with a seeded two-sided permutation p-value.
pub fn correlation_p(x: &[f64], y: &[f64], n_perm: u64, seed: u64) -> Result<CorrelationResult> {
    correlation_test(
        x,
        y,
        &CorrelationOptions {
            n_perm,
            seed,
            ..Default::default()
        },
    )
}

pub fn correlation_test(
    x: &[f64],
    y: &[f64],
    opts: &CorrelationOptions,
) -> Result<CorrelationResult> {
    if opts.n_perm < MIN_N_PERM {
        return Err(Error::InvalidParameter(format!(
            "n_perm must be at least {MIN_N_PERM}, got {}",
            opts.n_perm
        )));
    }
    validate_pair(x, y)?;
    let (tx, ty) = (transformed(x, opts.kind), transformed(y, opts.kind));
    let rho = product_moment(&tx, &ty);
    let (a, b) = (standardize(&tx), standardize(&ty));
    // Ranks give coefficients on a lattice; absorb rounding so that exact ties count.
    let threshold = rho.abs() - 64.0 * f64::EPSILON * a.len() as f64;

    let enumerated = match opts.enumeration {
        Enumeration::Auto => factorial_at_most(a.len(), opts.n_perm),
        Enumeration::Never => None,
    };
    let (p_value, method, n_perm) = match enumerated {
        Some(total) => {
            let hits = enumerate_hits(&a, &b, threshold);
            (
                hits as f64 / total as f64,
                PValueMethod::ExactEnumeration,
                total,
            )
        }
        None => {
            let hits = sampled_hits(&a, &b, threshold, opts.n_perm, opts.seed);
            (
                (hits + 1) as f64 / (opts.n_perm + 1) as f64,
                PValueMethod::Permutation,
                opts.n_perm,
            )
        }
    };
    Ok(CorrelationResult {
        kind: opts.kind,
        rho,
        p_value,
        n_pairs: a.len(),
        method,
        n_perm,
    })
}

fn permuted_dot(a: &[f64], b: &[f64], perm: &[usize]) -> f64 {
    a.iter().zip(perm).map(|(p, &j)| p * b[j]).sum()
}

/// Heap's algorithm over all `n!` orderings, identity included.
fn enumerate_hits(a: &[f64], b: &[f64], threshold: f64) -> u64 {
    let n = a.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut hits = u64::from(permuted_dot(a, b, &perm).abs() >= threshold);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            hits += u64::from(permuted_dot(a, b, &perm).abs() >= threshold);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    hits
}

fn sampled_hits(a: &[f64], b: &[f64], threshold: f64, n_perm: u64, seed: u64) -> u64 {
    let blocks = n_perm.div_ceil(BLOCK);
    (0..blocks)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k);
            let count = BLOCK.min(n_perm - k * BLOCK);
            let mut perm: Vec<usize> = (0..a.len()).collect();
            let mut hits = 0u64;
            for _ in 0..count {
                perm.shuffle(&mut rng);
                hits += u64::from(permuted_dot(a, b, &perm).abs() >= threshold);
            }
            hits
        })
        .sum()
}

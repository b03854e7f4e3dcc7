use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crowdcheck_core::inference::{
    bias_p_value, correlation_p, correlation_test, spearman_rho, CorrelationKind,
    CorrelationOptions, Enumeration, PValueMethod,
};

/// Rank by counting: `#less + (#equal + 1) / 2`.
fn oracle_ranks(v: &[f64]) -> Vec<f64> {
    v.iter()
        .map(|x| {
            let less = v.iter().filter(|y| *y < x).count() as f64;
            let equal = v.iter().filter(|y| *y == x).count() as f64;
            less + (equal + 1.0) / 2.0
        })
        .collect()
}

fn oracle_pearson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx).powi(2)).sum();
    let syy: f64 = y.iter().map(|b| (b - my).powi(2)).sum();
    sxy / (sxx * syy).sqrt()
}

fn oracle_spearman(x: &[f64], y: &[f64]) -> f64 {
    oracle_pearson(&oracle_ranks(x), &oracle_ranks(y))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Two-sided exact p over all orderings of `y`.
fn oracle_exact_p(x: &[f64], y: &[f64]) -> f64 {
    let observed = oracle_spearman(x, y).abs();
    let perms = permutations(y.len());
    let hits = perms
        .iter()
        .filter(|p| {
            let yp: Vec<f64> = p.iter().map(|&i| y[i]).collect();
            oracle_spearman(x, &yp).abs() >= observed - 1e-9
        })
        .count();
    hits as f64 / perms.len() as f64
}

#[test]
fn spearman_matches_oracle_for_every_ordering_up_to_six() {
    for n in 3..=6 {
        let x: Vec<f64> = (0..n).map(|i| (i as f64 * 1.7).sin()).collect();
        for p in permutations(n) {
            let y: Vec<f64> = p.iter().map(|&i| i as f64).collect();
            let got = spearman_rho(&x, &y).unwrap();
            let want = oracle_spearman(&x, &y);
            assert!((got - want).abs() <= 1e-12, "n={n} {p:?}: {got} vs {want}");
        }
    }
}

#[test]
fn spearman_matches_oracle_with_heavy_ties() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 100 {
        let n = rng.random_range(3..30);
        let x: Vec<f64> = (0..n).map(|_| rng.random_range(0..4) as f64).collect();
        let y: Vec<f64> = (0..n).map(|_| rng.random_range(0..3) as f64).collect();
        let Ok(got) = spearman_rho(&x, &y) else {
            // constant side
            assert!(x.iter().all(|v| *v == x[0]) || y.iter().all(|v| *v == y[0]));
            continue;
        };
        assert!((got - oracle_spearman(&x, &y)).abs() <= 1e-12);
        checked += 1;
    }
}

#[test]
fn exact_enumeration_matches_independent_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in [3usize, 4, 5, 6] {
        for _ in 0..20 {
            let x: Vec<f64> = (0..n).map(|_| rng.random_range(0..5) as f64).collect();
            let y: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
            let Ok(r) = correlation_p(&x, &y, 1_000, 0) else {
                continue;
            };
            assert_eq!(r.method, PValueMethod::ExactEnumeration);
            let want = oracle_exact_p(&x, &y);
            assert!(
                (r.p_value - want).abs() <= 1e-12,
                "n={n}: {} vs {want}",
                r.p_value
            );
        }
    }
}

#[test]
fn sampled_p_converges_to_exact_p() {
    let x: Vec<f64> = (0..8).map(|i| i as f64).collect();
    let y = [2.0, 1.0, 4.0, 3.0, 7.0, 5.0, 8.0, 6.0];
    let exact = correlation_test(
        &x,
        &y,
        &CorrelationOptions {
            n_perm: 50_000,
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(exact.method, PValueMethod::ExactEnumeration);
    let opts = CorrelationOptions {
        n_perm: 100_000,
        seed: 3,
        enumeration: Enumeration::Never,
        ..Default::default()
    };
    let sampled = correlation_test(&x, &y, &opts).unwrap();
    assert_eq!(sampled.method, PValueMethod::Permutation);
    let se = (exact.p_value * (1.0 - exact.p_value) / 100_000.0).sqrt();
    assert!((sampled.p_value - exact.p_value).abs() <= 4.0 * se + 1e-5);
}

#[test]
fn permutation_p_is_roughly_uniform_under_independence() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let trials = 400;
    let mut small = 0;
    for t in 0..trials {
        let x: Vec<f64> = (0..15).map(|_| rng.random::<f64>()).collect();
        let y: Vec<f64> = (0..15).map(|_| rng.random::<f64>()).collect();
        let r = correlation_p(&x, &y, 1_000, t).unwrap();
        small += usize::from(r.p_value <= 0.1);
    }
    let rate = small as f64 / trials as f64;
    let se = (0.1f64 * 0.9 / trials as f64).sqrt();
    assert!((rate - 0.1).abs() <= 4.0 * se, "rate {rate}");
}

#[test]
fn pearson_kind_reports_product_moment() {
    let x = [1.0, 2.0, 3.0, 4.0, 10.0];
    let y = [1.0, 3.0, 2.0, 5.0, 4.0];
    let opts = CorrelationOptions {
        kind: CorrelationKind::Pearson,
        ..Default::default()
    };
    let r = correlation_test(&x, &y, &opts).unwrap();
    assert!((r.rho - oracle_pearson(&x, &y)).abs() <= 1e-14);
}

proptest! {
    #[test]
    fn spearman_ignores_monotone_transforms(
        pairs in prop::collection::vec((-5.0..5.0f64, -5.0..5.0f64), 3..40)
    ) {
        let (x, y): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();
        prop_assume!(x.iter().any(|v| *v != x[0]) && y.iter().any(|v| *v != y[0]));
        let a = spearman_rho(&x, &y).unwrap();
        let tx: Vec<f64> = x.iter().map(|v| v.exp()).collect();
        let ty: Vec<f64> = y.iter().map(|v| v * v * v + 2.0 * v).collect();
        let b = spearman_rho(&tx, &ty).unwrap();
        prop_assert!((a - b).abs() <= 1e-14);
        let c = spearman_rho(&y, &x).unwrap();
        prop_assert!((a - c).abs() <= 1e-14);
        let neg: Vec<f64> = y.iter().map(|v| -v).collect();
        prop_assert!((spearman_rho(&x, &neg).unwrap() + a).abs() <= 1e-14);
        prop_assert!((-1.0..=1.0).contains(&a));
    }

    #[test]
    fn bias_p_is_a_probability_and_monotone(delta in 1e-3..1e3f64, n in 2usize..500,
                                            d1 in 0.0..10.0f64, d2 in 0.0..10.0f64) {
        let (lo, hi) = if d1 <= d2 { (d1, d2) } else { (d2, d1) };
        let a = bias_p_value(lo, 0.0, delta, n).unwrap().p;
        let b = bias_p_value(hi, 0.0, delta, n).unwrap().p;
        prop_assert!(a > 0.0 && a <= 1.0 && b > 0.0 && b <= 1.0);
        prop_assert!(b <= a);
        let mirrored = bias_p_value(-lo, 0.0, delta, n).unwrap().p;
        prop_assert_eq!(a, mirrored);
    }
}

#[test]
fn bias_p_matches_monte_carlo_of_the_crowd_mean() {
    let (truth, delta, n) = (100.0, 25.0f64, 37usize);
    let normal = Normal::new(truth, delta.sqrt()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let draws = 200_000;
    let means: Vec<f64> = (0..draws)
        .map(|_| (0..n).map(|_| normal.sample(&mut rng)).sum::<f64>() / n as f64)
        .collect();
    for observed in [100.3, 101.0, 101.7, 102.5] {
        let p = bias_p_value(observed, truth, delta, n).unwrap().p;
        let dev = (observed - truth).abs();
        let mc = means.iter().filter(|m| (*m - truth).abs() >= dev).count() as f64 / draws as f64;
        let se = (p * (1.0 - p) / draws as f64).sqrt();
        assert!(
            (mc - p).abs() <= 4.0 * se,
            "observed {observed}: mc {mc} vs {p}"
        );
    }
}

#[test]
fn bias_p_reference_point() {
    let r = bias_p_value(101.0, 100.0, 25.0, 37).unwrap();
    assert!((r.p - 0.22377452230235296).abs() <= 1e-13);
}

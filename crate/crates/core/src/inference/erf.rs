//! Error function and its complement.
//!
//! Piecewise rational approximations in the style of fdlibm's `s_erf.c`:
//!
//! * `|x| < 0.84375`: `erf(x) = x + x * P(x^2) / Q(x^2)`
//! * `0.84375 <= |x| < 1.25`: expansion around 1, `erf(x) = c + P(s) / Q(s)`, `s = |x| - 1`
//! * `1.25 <= |x| < 28`: `erfc(x) = exp(-x^2 - 0.5625 + R(1/x^2) / S(1/x^2)) / x`
//!
//! Each piece is accurate to well under one ulp of its result; `-x^2` is
//! evaluated with a split of `x` so that `exp` sees an argument with no
//! cancellation error.

#![allow(clippy::excessive_precision)]

use crate::error::{Error, Result};

const ERX: f64 = 8.45062911510467529297e-01;
const EFX: f64 = 1.28379167095512586316e-01;

const PP: [f64; 5] = [
    1.28379167095512558561e-01,
    -3.25042107247001499370e-01,
    -2.84817495755985104766e-02,
    -5.77027029648944159157e-03,
    -2.37630166566501626084e-05,
];
const QQ: [f64; 5] = [
    3.97917223959155352819e-01,
    6.50222499887672944485e-02,
    5.08130628187576562776e-03,
    1.32494738004321644526e-04,
    -3.96022827877536812320e-06,
];

const PA: [f64; 7] = [
    -2.36211856075265944077e-03,
    4.14856118683748331666e-01,
    -3.72207876035701323847e-01,
    3.18346619901161753674e-01,
    -1.10894694282396677476e-01,
    3.54783043256182359371e-02,
    -2.16637559486879084300e-03,
];
const QA: [f64; 6] = [
    1.06420880400844228286e-01,
    5.40397917702171048937e-01,
    7.18286544141962662868e-02,
    1.26171219808761642112e-01,
    1.36370839120290507362e-02,
    1.19844998467991074170e-02,
];

const RA: [f64; 8] = [
    -9.86494403484714822705e-03,
    -6.93858572707181764372e-01,
    -1.05586262253232909814e+01,
    -6.23753324503260060396e+01,
    -1.62396669462573470355e+02,
    -1.84605092906711035994e+02,
    -8.12874355063065934246e+01,
    -9.81432934416914548592e+00,
];
const SA: [f64; 8] = [
    1.96512716674392571292e+01,
    1.37657754143519042600e+02,
    4.34565877475229228821e+02,
    6.45387271733267880336e+02,
    4.29008140027567833386e+02,
    1.08635005541779435134e+02,
    6.57024977031928170135e+00,
    -6.04244152148580987438e-02,
];

const RB: [f64; 7] = [
    -9.86494292470009928597e-03,
    -7.99283237680523006574e-01,
    -1.77579549177547519889e+01,
    -1.60636384855821916062e+02,
    -6.37566443368389627722e+02,
    -1.02509513161107724954e+03,
    -4.83519191608651397019e+02,
];
const SB: [f64; 7] = [
    3.03380607434824582924e+01,
    3.25792512996573918826e+02,
    1.53672958608443695994e+03,
    3.19985821950859553908e+03,
    2.55305040643316442583e+03,
    4.74528541206955367215e+02,
    -2.24409524465858183362e+01,
];

/// `c[0] + z*c[1] + z^2*c[2] + ...`
fn horner(z: f64, c: &[f64]) -> f64 {
    c.iter().rev().fold(0.0, |acc, &k| acc * z + k)
}

/// `1 + z*c[0] + z^2*c[1] + ...`
fn horner1(z: f64, c: &[f64]) -> f64 {
    1.0 + z * horner(z, c)
}

/// `x + x*R(x^2)` for `|x| < 0.84375`; returns `(erf, R)`.
fn small(ax: f64) -> (f64, f64) {
    if ax < 2f64.powi(-28) {
        return (ax + EFX * ax, EFX);
    }
    let z = ax * ax;
    let y = horner(z, &PP) / horner1(z, &QQ);
    (ax + ax * y, y)
}

/// `P(s)/Q(s)` with `s = |x| - 1`, for `0.84375 <= |x| < 1.25`.
fn near_one(ax: f64) -> f64 {
    let s = ax - 1.0;
    horner(s, &PA) / horner1(s, &QA)
}

/// `erfc(ax)` for `1.25 <= ax < 28`.
fn tail(ax: f64) -> f64 {
    let s = 1.0 / (ax * ax);
    let (r, q) = if ax < 1.0 / 0.35 {
        (horner(s, &RA), horner1(s, &SA))
    } else {
        (horner(s, &RB), horner1(s, &SB))
    };
    // Split ax into a high part with a 20-bit mantissa so hi*hi is exact.
    let hi = f64::from_bits(ax.to_bits() & 0xffff_ffff_0000_0000);
    ((-hi * hi - 0.5625).exp() * ((hi - ax) * (hi + ax) + r / q).exp()) / ax
}

pub(crate) fn erf_value(x: f64) -> f64 {
    let ax = x.abs();
    let magnitude = if ax < 0.84375 {
        small(ax).0
    } else if ax < 1.25 {
        ERX + near_one(ax)
    } else if ax < 6.0 {
        1.0 - tail(ax)
    } else {
        1.0
    };
    magnitude.copysign(x)
}

pub(crate) fn erfc_value(x: f64) -> f64 {
    let ax = x.abs();
    let negative = x < 0.0;
    if ax < 0.84375 {
        let (e, y) = small(ax);
        if negative || ax < 0.25 {
            return 1.0 - e.copysign(x);
        }
        return 0.5 - (ax * y + (ax - 0.5));
    }
    if ax < 1.25 {
        let c = ERX + near_one(ax);
        return if negative {
            1.0 + c
        } else {
            (1.0 - ERX) - near_one(ax)
        };
    }
    if ax < 28.0 {
        if negative {
            return if ax >= 6.0 { 2.0 } else { 2.0 - tail(ax) };
        }
        return tail(ax);
    }
    if negative {
        2.0
    } else {
        0.0
    }
}

/// Error function, `(2/sqrt(pi)) * integral_0^x exp(-t^2) dt`.
pub fn erf(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::NonFinite(format!("erf argument {x}")));
    }
    Ok(erf_value(x))
}

/// Complementary error function `1 - erf(x)`, accurate in the far tail.
pub fn erfc(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::NonFinite(format!("erfc argument {x}")));
    }
    Ok(erfc_value(x))
}

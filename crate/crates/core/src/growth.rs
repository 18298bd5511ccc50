//! Growth functions and growth-rate estimation from dimension series.
//!
//! Floating point enters the library only here; everything upstream is
//! exact. Asymptotic quantities are approximated over an explicit finite
//! window, and the window is always part of the result.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::series::TruncatedSeries;
use crate::witt::color_witt_series;

/// Threshold for the exponential test and for root/ratio agreement.
pub const EXPONENTIAL_TAU: f64 = 0.02;
/// RMS residual threshold for the log-log polynomial envelope fit.
pub const POLY_FIT_RESIDUAL: f64 = 0.1;
/// Tolerance used by [`enveloping_growth_matches`].
pub const GROWTH_MATCH_TOLERANCE: f64 = 0.05;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EstimateMethod {
    RootTest,
    RatioTest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthClassification {
    Exponential,
    PolynomiallyBounded,
    Intermediate,
    Inconclusive,
}

/// A finite-window growth-rate estimate.
#[derive(Clone, Debug)]
pub struct GrowthEstimate {
    pub rate: f64,
    pub method: EstimateMethod,
    pub window: (usize, usize),
    pub classification: GrowthClassification,
}

/// Growth function `gamma(n) = sum_{k <= n} dim_k` for `n = 1..=N`.
///
/// The dimension series must have nonnegative coefficients.
pub fn growth_function(dims: &TruncatedSeries) -> Result<Vec<BigUint>> {
    let mut gamma = Vec::with_capacity(dims.order());
    let mut acc = dims
        .coeff(0)
        .to_biguint()
        .ok_or_else(|| Error::InvalidInput("negative dimension at degree 0".into()))?;
    for n in 1..=dims.order() {
        acc += dims
            .coeff(n)
            .to_biguint()
            .ok_or_else(|| Error::InvalidInput(format!("negative dimension at degree {n}")))?;
        gamma.push(acc.clone());
    }
    Ok(gamma)
}

/// First differences `lambda(n) = gamma(n) - gamma(n-1)`, with
/// `lambda(1) = gamma(1)`.
pub fn lambda_differences(gamma: &[BigUint]) -> Result<Vec<BigUint>> {
    let mut lambda = Vec::with_capacity(gamma.len());
    let mut prev = BigUint::zero();
    for (i, g) in gamma.iter().enumerate() {
        if *g < prev {
            return Err(Error::InvalidInput(format!(
                "growth function decreases at n = {}",
                i + 1
            )));
        }
        lambda.push(g - &prev);
        prev = g.clone();
    }
    Ok(lambda)
}

/// Estimates the (relative) growth rate of a dimension series over the
/// window `n_start..=n_end`.
///
/// Two estimators run side by side: the root test `max lambda(n)^(1/n)` and
/// the telescoped ratio test `(lambda(n1)/lambda(n0))^(1/(n1-n0))` over the
/// outermost nonzero entries of the window. The ratio estimate is reported
/// when defined (it converges much faster on smooth data and is exactly
/// scale invariant); the root test serves as the cross-check.
pub fn growth_rate_estimate(
    dims: &TruncatedSeries,
    window: (usize, usize),
) -> Result<GrowthEstimate> {
    let (a, b) = window;
    if a < 1 || a >= b || b > dims.order() {
        return Err(Error::InvalidInput(format!(
            "window ({a}, {b}) is empty or outside degrees 1..={}",
            dims.order()
        )));
    }
    let gamma = growth_function(dims)?;
    let lambda = lambda_differences(&gamma).expect("partial sums are monotone");

    let positive: Vec<(usize, f64)> = (a..=b)
        .filter_map(|n| {
            let l = &lambda[n - 1];
            (!l.is_zero()).then(|| (n, ln_biguint(l)))
        })
        .collect();

    if positive.is_empty() {
        return Ok(GrowthEstimate {
            rate: 0.0,
            method: EstimateMethod::RootTest,
            window,
            classification: GrowthClassification::PolynomiallyBounded,
        });
    }

    let root = positive
        .iter()
        .map(|&(n, ln_l)| (ln_l / n as f64).exp())
        .fold(f64::NEG_INFINITY, f64::max);

    let ratio = match (positive.first(), positive.last()) {
        (Some(&(n0, l0)), Some(&(n1, l1))) if n1 > n0 => Some(((l1 - l0) / (n1 - n0) as f64).exp()),
        _ => None,
    };

    let (rate, method) = match ratio {
        Some(r) => (r, EstimateMethod::RatioTest),
        None => (root, EstimateMethod::RootTest),
    };

    let poly = fits_polynomial_envelope(&positive);
    let disagree =
        ratio.is_some_and(|r| (root - r).abs() / f64::max(1.0, root.max(r)) > EXPONENTIAL_TAU);
    let classification = if poly {
        GrowthClassification::PolynomiallyBounded
    } else if disagree {
        GrowthClassification::Inconclusive
    } else if rate > 1.0 + EXPONENTIAL_TAU {
        GrowthClassification::Exponential
    } else {
        GrowthClassification::Intermediate
    };

    Ok(GrowthEstimate {
        rate,
        method,
        window,
        classification,
    })
}

/// Least-squares fit of `ln lambda` against `ln n`; a small RMS residual
/// means the differences sit under a polynomial envelope `n^k`.
fn fits_polynomial_envelope(points: &[(usize, f64)]) -> bool {
    if points.len() < 2 {
        return true;
    }
    let n = points.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(x, y) in points {
        let x = (x as f64).ln();
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    let denom = n * sxx - sx * sx;
    if denom.abs() < 1e-12 {
        return true;
    }
    let slope = (n * sxy - sx * sy) / denom;
    let intercept = (sy - slope * sx) / n;
    let sq_sum: f64 = points
        .iter()
        .map(|&(x, y)| {
            let e = y - intercept - slope * (x as f64).ln();
            e * e
        })
        .sum();
    (sq_sum / n).sqrt() <= POLY_FIT_RESIDUAL
}

/// Natural log of a positive big integer, stable far beyond `f64` range.
fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        (x.to_u64().expect("fits in u64") as f64).ln()
    } else {
        let shift = bits - 64;
        let top = (x >> shift).to_u64().expect("top 64 bits");
        (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// Desk-scale check that a free color Lie superalgebra and its enveloping
/// algebra grow at the same rate `r + s`.
#[derive(Clone, Debug)]
pub struct GrowthMatchReport {
    pub rank_even: u64,
    pub rank_odd: u64,
    pub expected_rate: f64,
    pub lie_estimate: GrowthEstimate,
    pub enveloping_estimate: GrowthEstimate,
    /// `|lie rate - enveloping rate|`.
    pub difference: f64,
    pub tolerance: f64,
    pub passes: bool,
}

/// Estimates the growth rates of `L(X)` (color Witt dimensions) and of its
/// enveloping algebra (the free associative algebra, `1/(1 - (r+s) t)`) over
/// the tail window `(N/2, N)` and reports whether both land within
/// [`GROWTH_MATCH_TOLERANCE`] of `r + s`.
pub fn enveloping_growth_matches(r: u64, s: u64, order: usize) -> Result<GrowthMatchReport> {
    if r + s < 2 {
        return Err(Error::InvalidInput(
            "enveloping_growth_matches needs r + s >= 2".into(),
        ));
    }
    if order < 50 {
        return Err(Error::InvalidInput(
            "enveloping_growth_matches needs order >= 50".into(),
        ));
    }
    let window = (order / 2, order);
    let lie_dims = color_witt_series(r, s, order);
    let env_dims = TruncatedSeries::monomial(r + s, 1, order).geom_inverse()?;

    let lie_estimate = growth_rate_estimate(&lie_dims, window)?;
    let enveloping_estimate = growth_rate_estimate(&env_dims, window)?;

    let expected_rate = (r + s) as f64;
    let difference = (lie_estimate.rate - enveloping_estimate.rate).abs();
    let passes = (lie_estimate.rate - expected_rate).abs() <= GROWTH_MATCH_TOLERANCE
        && (enveloping_estimate.rate - expected_rate).abs() <= GROWTH_MATCH_TOLERANCE;

    Ok(GrowthMatchReport {
        rank_even: r,
        rank_odd: s,
        expected_rate,
        lie_estimate,
        enveloping_estimate,
        difference,
        tolerance: GROWTH_MATCH_TOLERANCE,
        passes,
    })
}

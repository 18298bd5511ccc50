//! Exact truncated formal power series over arbitrary-precision integers.
//!
//! A [`TruncatedSeries`] stores the coefficients of a series modulo
//! `t^(N+1)` where `N` is the truncation order. All arithmetic is exact;
//! binary operations truncate to the minimum of the operands' orders.
//!
//! The module also provides the Euler-transform operator family:
//! `E: sum a_i t^i  ->  prod (1 - t^i)^(-a_i)` together with its inverse and
//! the signed (super) and restricted variants used for enveloping algebras.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::envelope::SignedDimensionSequence;
use crate::error::{Error, Result};
use crate::witt::{divisors, moebius};

/// An integer formal power series truncated at a fixed order.
///
/// Exactly `order + 1` coefficients are stored, for degrees `0..=order`.
/// Negative coefficients are permitted (the Schreier formula multiplies by
/// `H(X) - 1`).
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// The zero series of the given truncation order.
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        Self::monomial(BigInt::one(), 0, order)
    }

    /// The series `c * t^degree`, zero if `degree > order`.
    pub fn monomial(c: impl Into<BigInt>, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = c.into();
        }
        s
    }

    /// Builds a series from its coefficient list; the truncation order is
    /// `coeffs.len() - 1`.
    ///
    /// Panics if `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series stores at least the constant term"
        );
        TruncatedSeries { coeffs }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^k`; zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// All stored coefficients, degrees `0..=order`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, c: impl Into<BigInt>) {
        assert!(k <= self.order(), "degree {k} beyond truncation order");
        self.coeffs[k] = c.into();
    }

    /// Returns a copy truncated (or zero-extended) to the given order.
    pub fn truncated(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, BigInt::zero());
        TruncatedSeries { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// True if every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        !self.coeffs.iter().any(|c| c.is_negative())
    }

    /// Multiplicative inverse of a series with constant term 1.
    ///
    /// Stays in integers: `h_0 = 1`, `h_n = -sum_{k=1..n} f_k h_{n-k}`.
    fn inverse_of_unit(&self) -> Result<TruncatedSeries> {
        if !self.coeff(0).is_one() {
            return Err(Error::InvalidInput(
                "series inversion requires constant term 1".into(),
            ));
        }
        let n = self.order();
        let mut h = vec![BigInt::zero(); n + 1];
        h[0] = BigInt::one();
        for m in 1..=n {
            let mut acc = BigInt::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() && !h[m - k].is_zero() {
                    acc += &self.coeffs[k] * &h[m - k];
                }
            }
            h[m] = -acc;
        }
        Ok(TruncatedSeries { coeffs: h })
    }

    /// `1/(1 - f)` for a series `f` with zero constant term.
    ///
    /// This is the Hilbert series of the free associative algebra on an
    /// alphabet with generating function `f`.
    pub fn geom_inverse(&self) -> Result<TruncatedSeries> {
        if !self.coeff(0).is_zero() {
            return Err(Error::InvalidInput(
                "geom_inverse requires zero constant term".into(),
            ));
        }
        let n = self.order();
        let mut g = vec![BigInt::zero(); n + 1];
        g[0] = BigInt::one();
        for m in 1..=n {
            let mut acc = BigInt::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() && !g[m - k].is_zero() {
                    acc += &self.coeffs[k] * &g[m - k];
                }
            }
            g[m] = acc;
        }
        Ok(TruncatedSeries { coeffs: g })
    }

    /// The Euler transform `E(f) = prod_i (1 - t^i)^(-a_i)` where `f = sum a_i t^i`.
    ///
    /// Requires a zero constant term; coefficients may be negative. The
    /// result always has constant term 1 and integer coefficients.
    pub fn euler_transform(&self) -> Result<TruncatedSeries> {
        if !self.coeff(0).is_zero() {
            return Err(Error::InvalidInput(
                "euler_transform requires zero constant term".into(),
            ));
        }
        let order = self.order();
        let mut result = TruncatedSeries::one(order);
        for i in 1..=order {
            let a = &self.coeffs[i];
            if a.is_zero() {
                continue;
            }
            let factor = if a.is_negative() {
                binomial_factor(&(-a), i, order)
            } else {
                negative_binomial_factor(a, i, order)
            };
            result = &result * &factor;
        }
        Ok(result)
    }

    /// Inverse Euler transform: recovers `a` with `E(a) = f` modulo `t^(N+1)`.
    ///
    /// Works through the power sums `b_m = [t^m](t f'/f)` followed by Möbius
    /// inversion `n a_n = sum_{d|n} mu(n/d) b_d`; every division must be
    /// exact, otherwise the input was not an Euler transform of an integer
    /// series and [`Error::NotAnEulerTransform`] is reported.
    pub fn inverse_euler_transform(&self) -> Result<TruncatedSeries> {
        if !self.coeff(0).is_one() {
            return Err(Error::InvalidInput(
                "inverse_euler_transform requires constant term 1".into(),
            ));
        }
        let order = self.order();
        // t f' has coefficient n*f_n at degree n; dividing by f stays in
        // integers because f has constant term 1.
        let tfp = TruncatedSeries {
            coeffs: (0..=order)
                .map(|n| BigInt::from(n) * &self.coeffs[n])
                .collect(),
        };
        let b = &tfp * &self.inverse_of_unit()?;
        let mut a = vec![BigInt::zero(); order + 1];
        for (n, slot) in a.iter_mut().enumerate().skip(1) {
            let mut acc = BigInt::zero();
            for d in divisors(n as u64) {
                let mu = moebius(n as u64 / d).expect("divisor is positive");
                if mu != 0 {
                    acc += BigInt::from(mu) * &b.coeffs[d as usize];
                }
            }
            let (q, r) = acc.div_rem(&BigInt::from(n));
            if !r.is_zero() {
                return Err(Error::NotAnEulerTransform { degree: n });
            }
            *slot = q;
        }
        Ok(TruncatedSeries { coeffs: a })
    }
}

/// Hilbert series of `U(L)` for a color Lie superalgebra with even
/// dimensions `a_n` and odd dimensions `b_n`:
/// `prod_n (1 - t^n)^(-a_n) (1 + t^n)^(b_n)`.
pub fn super_euler_transform(sdims: &SignedDimensionSequence, order: usize) -> TruncatedSeries {
    let mut result = TruncatedSeries::one(order);
    for n in 1..=order.min(sdims.len()) {
        let a = BigInt::from(sdims.even_dim(n));
        let b = BigInt::from(sdims.odd_dim(n));
        if !a.is_zero() {
            result = &result * &negative_binomial_factor(&a, n, order);
        }
        if !b.is_zero() {
            result = &result * &plus_binomial_factor(&b, n, order);
        }
    }
    result
}

/// Hilbert series of the restricted enveloping algebra `u(L)`:
/// `prod_n ((1 - t^(p n)) / (1 - t^n))^(a_n) (1 + t^n)^(b_n)`.
///
/// `p` must be prime; the characteristic gate for nontrivial gradings lives
/// in the envelope module.
pub fn restricted_euler_transform(
    sdims: &SignedDimensionSequence,
    p: u64,
    order: usize,
) -> Result<TruncatedSeries> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    let mut result = TruncatedSeries::one(order);
    let p = p as usize;
    for n in 1..=order.min(sdims.len()) {
        let a = BigInt::from(sdims.even_dim(n));
        let b = BigInt::from(sdims.odd_dim(n));
        if !a.is_zero() {
            // (1 - t^(p n))^(a_n) * (1 - t^n)^(-a_n)
            if p.checked_mul(n).is_some_and(|pn| pn <= order) {
                result = &result * &binomial_factor(&a, p * n, order);
            }
            result = &result * &negative_binomial_factor(&a, n, order);
        }
        if !b.is_zero() {
            result = &result * &plus_binomial_factor(&b, n, order);
        }
    }
    Ok(result)
}

/// `(1 - x)^(-a)` for `a >= 0`, as a series in `x = t^step`:
/// coefficients `C(a + k - 1, k)` at `t^(step k)`.
fn negative_binomial_factor(a: &BigInt, step: usize, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    let mut c = BigInt::one();
    s.coeffs[0] = BigInt::one();
    let mut k = BigInt::zero();
    let mut deg = step;
    while deg <= order {
        k += 1;
        // c_k = c_{k-1} * (a + k - 1) / k, always exact
        c = (c * (a + &k - 1u32)).div_exact(&k);
        s.coeffs[deg] = c.clone();
        deg += step;
    }
    s
}

/// `(1 - x)^a` for `a >= 0`, as a series in `x = t^step`:
/// coefficients `(-1)^k C(a, k)` at `t^(step k)`.
fn binomial_factor(a: &BigInt, step: usize, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    let mut c = BigInt::one();
    s.coeffs[0] = BigInt::one();
    let mut k = BigInt::zero();
    let mut deg = step;
    while deg <= order {
        k += 1;
        c = (c * (a - &k + 1u32)).div_exact(&k);
        c = -c;
        if c.is_zero() {
            break;
        }
        s.coeffs[deg] = c.clone();
        deg += step;
    }
    s
}

/// `(1 + x)^b` for `b >= 0`, as a series in `x = t^step`:
/// coefficients `C(b, k)` at `t^(step k)`.
fn plus_binomial_factor(b: &BigInt, step: usize, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    let mut c = BigInt::one();
    s.coeffs[0] = BigInt::one();
    let mut k = BigInt::zero();
    let mut deg = step;
    while deg <= order {
        k += 1;
        c = (c * (b - &k + 1u32)).div_exact(&k);
        if c.is_zero() {
            break;
        }
        s.coeffs[deg] = c.clone();
        deg += step;
    }
    s
}

trait DivExact {
    fn div_exact(&self, d: &BigInt) -> BigInt;
}

impl DivExact for BigInt {
    fn div_exact(&self, d: &BigInt) -> BigInt {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "division was expected to be exact");
        q
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
                .collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
                .collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries{:?}", self.coeffs)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            let mag = if first && c.is_negative() {
                c.clone()
            } else {
                c.abs()
            };
            match k {
                0 => write!(f, "{mag}")?,
                1 if mag.is_one() => write!(f, "t")?,
                1 => write!(f, "{mag}*t")?,
                _ if mag.is_one() => write!(f, "t^{k}")?,
                _ => write!(f, "{mag}*t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

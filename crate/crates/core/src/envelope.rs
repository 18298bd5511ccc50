//! Hilbert series of universal and restricted enveloping algebras, plus the
//! filtered-space sum and product rules.
//!
//! Parity splits are always explicit inputs: the closed formulas only give
//! total dimensions, and one equation cannot determine two unknowns.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series::{self, TruncatedSeries};

/// Per-degree even/odd dimension pairs `(a_n, b_n)` of a graded color Lie
/// superalgebra, for degrees `1..=N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedDimensionSequence {
    even: Vec<BigUint>,
    odd: Vec<BigUint>,
}

impl SignedDimensionSequence {
    /// Both lists must have the same length; entries are nonnegative by type.
    pub fn new(even: Vec<BigUint>, odd: Vec<BigUint>) -> Result<Self> {
        if even.len() != odd.len() {
            return Err(Error::InvalidInput(format!(
                "even and odd dimension lists differ in length ({} vs {})",
                even.len(),
                odd.len()
            )));
        }
        Ok(SignedDimensionSequence { even, odd })
    }

    pub fn from_counts(even: &[u64], odd: &[u64]) -> Result<Self> {
        Self::new(
            even.iter().map(|&d| BigUint::from(d)).collect(),
            odd.iter().map(|&d| BigUint::from(d)).collect(),
        )
    }

    /// Splits a pair of dimension series (degrees `1..=min order`).
    /// Both must have zero constant terms and nonnegative coefficients.
    pub fn from_series_split(even: &TruncatedSeries, odd: &TruncatedSeries) -> Result<Self> {
        let order = even.order().min(odd.order());
        let take = |s: &TruncatedSeries, name: &str| -> Result<Vec<BigUint>> {
            if !s.coeff(0).is_zero() {
                return Err(Error::InvalidInput(format!(
                    "{name} dimension series must have zero constant term"
                )));
            }
            (1..=order)
                .map(|n| {
                    s.coeff(n).to_biguint().ok_or_else(|| {
                        Error::InvalidInput(format!("negative {name} dimension at degree {n}"))
                    })
                })
                .collect()
        };
        Ok(SignedDimensionSequence {
            even: take(even, "even")?,
            odd: take(odd, "odd")?,
        })
    }

    /// Number of degrees covered.
    pub fn len(&self) -> usize {
        self.even.len()
    }

    pub fn is_empty(&self) -> bool {
        self.even.is_empty()
    }

    /// Even dimension at degree `n` (1-based); zero beyond the stored range.
    pub fn even_dim(&self, n: usize) -> BigUint {
        if n == 0 {
            return BigUint::zero();
        }
        self.even.get(n - 1).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Odd dimension at degree `n` (1-based); zero beyond the stored range.
    pub fn odd_dim(&self, n: usize) -> BigUint {
        if n == 0 {
            return BigUint::zero();
        }
        self.odd.get(n - 1).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Total dimension `a_n + b_n` at degree `n`.
    pub fn total_dim(&self, n: usize) -> BigUint {
        self.even_dim(n) + self.odd_dim(n)
    }

    /// The same dimensions with the odd part zeroed.
    pub fn even_part(&self) -> Self {
        SignedDimensionSequence {
            even: self.even.clone(),
            odd: vec![BigUint::zero(); self.odd.len()],
        }
    }

    /// The same dimensions with the even part zeroed.
    pub fn odd_part(&self) -> Self {
        SignedDimensionSequence {
            even: vec![BigUint::zero(); self.even.len()],
            odd: self.odd.clone(),
        }
    }
}

/// Hilbert series of `U(L)` from the parity split of `L`.
///
/// By the PBW theorem `U(L) = S(L_+) (x) Lambda(L_-)`, i.e. the signed Euler
/// product `prod (1 - t^n)^(-a_n) (1 + t^n)^(b_n)`.
pub fn enveloping_series(sdims: &SignedDimensionSequence, order: usize) -> TruncatedSeries {
    series::super_euler_transform(sdims, order)
}

/// Hilbert series of the restricted enveloping algebra `u(L)` in
/// characteristic `p`.
///
/// For a nontrivial color grading the characteristic must satisfy `p >= 5`;
/// `allow_small_characteristic` lifts the gate, which is legitimate for
/// trivially graded algebras (ordinary restricted Lie algebras accept any
/// prime).
pub fn restricted_enveloping_series(
    sdims: &SignedDimensionSequence,
    p: u64,
    order: usize,
    allow_small_characteristic: bool,
) -> Result<TruncatedSeries> {
    if !series::is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    if p < 5 && !allow_small_characteristic {
        return Err(Error::InvalidCharacteristic { p });
    }
    series::restricted_euler_transform(sdims, p, order)
}

/// `H(U + V) = H(U) + H(V)` for filtered spaces with
/// `(U + V)^n = U^n + V^n` (direct sum).
pub fn direct_sum_series(f: &TruncatedSeries, g: &TruncatedSeries) -> TruncatedSeries {
    f + g
}

/// `H(U (x) V) = H(U) H(V)` for filtered spaces with
/// `(U (x) V)^n = sum_i U^i (x) V^(n-i)`.
pub fn tensor_series(f: &TruncatedSeries, g: &TruncatedSeries) -> TruncatedSeries {
    f * g
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn s(coeffs: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_i64(coeffs)
    }

    #[test]
    fn symmetric_algebra_on_two_generators() {
        let sd = SignedDimensionSequence::from_counts(&[2], &[0]).unwrap();
        assert_eq!(enveloping_series(&sd, 5), s(&[1, 2, 3, 4, 5, 6]));
    }

    #[test]
    fn grassmann_algebra_on_two_generators() {
        let sd = SignedDimensionSequence::from_counts(&[0], &[2]).unwrap();
        assert_eq!(enveloping_series(&sd, 4), s(&[1, 2, 1, 0, 0]));
    }

    #[test]
    fn restricted_exponent_cap() {
        let a1 = SignedDimensionSequence::from_counts(&[1], &[0]).unwrap();
        assert_eq!(
            restricted_enveloping_series(&a1, 3, 4, true).unwrap(),
            s(&[1, 1, 1, 0, 0])
        );
        let a2 = SignedDimensionSequence::from_counts(&[2], &[0]).unwrap();
        assert_eq!(
            restricted_enveloping_series(&a2, 2, 3, true).unwrap(),
            s(&[1, 2, 1, 0])
        );
        let b1 = SignedDimensionSequence::from_counts(&[0], &[1]).unwrap();
        assert_eq!(
            restricted_enveloping_series(&b1, 5, 3, false).unwrap(),
            s(&[1, 1, 0, 0])
        );
    }

    #[test]
    fn characteristic_gate() {
        let sd = SignedDimensionSequence::from_counts(&[1], &[1]).unwrap();
        assert_eq!(
            restricted_enveloping_series(&sd, 3, 4, false),
            Err(Error::InvalidCharacteristic { p: 3 })
        );
        assert!(restricted_enveloping_series(&sd, 5, 4, false).is_ok());
        assert!(restricted_enveloping_series(&sd, 3, 4, true).is_ok());
    }

    #[test]
    fn direct_sum_examples() {
        assert_eq!(direct_sum_series(&s(&[1, 1]), &s(&[1, 1])), s(&[2, 2]));
        let f = s(&[1, 4, 1, 5]);
        assert_eq!(direct_sum_series(&f, &TruncatedSeries::zero(3)), f);
    }

    #[test]
    fn direct_sum_and_tensor_match_dimension_tables() {
        // Oracle: build two filtered dimension tables directly and take the
        // sum / convolution of the per-degree dimensions.
        let u = [3u64, 1, 4, 1, 5];
        let v = [2u64, 7, 1, 8, 2];
        let us = s(&u.map(|d| d as i64));
        let vs = s(&v.map(|d| d as i64));

        let sum = direct_sum_series(&us, &vs);
        let prod = tensor_series(&us, &vs);
        for n in 0..=4 {
            assert_eq!(sum.coeff(n), BigInt::from(u[n] + v[n]));
            let conv: u64 = (0..=n).map(|i| u[i] * v[n - i]).sum();
            assert_eq!(prod.coeff(n), BigInt::from(conv));
        }
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(tensor_series(&s(&[1, 1, 0]), &s(&[1, 1, 0])), s(&[1, 2, 1]));
        let f = s(&[2, 0, 3]);
        assert_eq!(tensor_series(&f, &TruncatedSeries::one(2)), f);
    }

    #[test]
    fn enveloping_factors_as_tensor_of_parity_parts() {
        let sd = SignedDimensionSequence::from_counts(&[2, 1, 3], &[1, 0, 2]).unwrap();
        let order = 9;
        let factored = tensor_series(
            &series::super_euler_transform(&sd.even_part(), order),
            &series::super_euler_transform(&sd.odd_part(), order),
        );
        assert_eq!(enveloping_series(&sd, order), factored);
    }

    #[test]
    fn restricted_coefficients_never_exceed_unrestricted() {
        let sd = SignedDimensionSequence::from_counts(&[2, 1, 0, 1], &[1, 2, 1, 0]).unwrap();
        let order = 12;
        let unrestricted = enveloping_series(&sd, order);
        for p in [2u64, 3, 5, 7] {
            let restricted = restricted_enveloping_series(&sd, p, order, true).unwrap();
            for n in 0..=order {
                assert!(
                    restricted.coeff(n) <= unrestricted.coeff(n),
                    "restricted series exceeds U(L) at degree {n} for p = {p}"
                );
            }
        }
    }

    #[test]
    fn mismatched_lengths_rejected() {
        assert!(SignedDimensionSequence::from_counts(&[1, 2], &[1]).is_err());
    }

    #[test]
    fn split_rejects_negative_dimensions() {
        let bad = s(&[0, 1, -2]);
        let ok = s(&[0, 1, 1]);
        assert!(SignedDimensionSequence::from_series_split(&bad, &ok).is_err());
        assert!(SignedDimensionSequence::from_series_split(&ok, &bad).is_err());
        assert!(SignedDimensionSequence::from_series_split(&ok, &ok).is_ok());
    }
}

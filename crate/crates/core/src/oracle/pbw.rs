//! Direct monomial counting for the PBW theorem: the independent oracle for
//! the enveloping-series Euler products.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::envelope::SignedDimensionSequence;

/// Counts degree-`n` PBW monomials `e_1^{s_1} ... e_k^{s_k}` over a basis
/// with `a_m` even and `b_m` odd elements of weight `m`.
///
/// Even exponents range over `0..` (or `0..=cap` when `exponent_cap` is
/// given, e.g. `p - 1` in the restricted case); odd exponents are always 0
/// or 1. Dimensions must stay at desk scale (the count is by elementwise
/// dynamic programming).
pub fn pbw_count(sdims: &SignedDimensionSequence, exponent_cap: Option<u64>, n: usize) -> BigUint {
    let mut counts = vec![BigUint::zero(); n + 1];
    counts[0] = BigUint::from(1u32);

    for m in 1..=n.min(sdims.len()) {
        let a = sdims
            .even_dim(m)
            .to_usize()
            .expect("even dimension too large for the PBW oracle");
        let b = sdims
            .odd_dim(m)
            .to_usize()
            .expect("odd dimension too large for the PBW oracle");

        // One even basis element of weight m contributes exponents
        // e with e*m <= n (and e <= cap when restricted).
        for _ in 0..a {
            let mut next = vec![BigUint::zero(); n + 1];
            for (d, c) in counts.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut e = 0u64;
                while d + (e as usize) * m <= n {
                    if let Some(cap) = exponent_cap {
                        if e > cap {
                            break;
                        }
                    }
                    next[d + (e as usize) * m] += c;
                    e += 1;
                }
            }
            counts = next;
        }
        // One odd basis element: exponent 0 or 1.
        for _ in 0..b {
            let mut next = counts.clone();
            for d in 0..=n.saturating_sub(m) {
                let add = counts[d].clone();
                next[d + m] += add;
            }
            counts = next;
        }
    }
    counts[n].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::{enveloping_series, restricted_enveloping_series};
    use num_bigint::BigInt;

    #[test]
    fn single_even_generator_has_one_monomial_per_degree() {
        let sd = SignedDimensionSequence::from_counts(&[1], &[0]).unwrap();
        assert_eq!(pbw_count(&sd, None, 4), BigUint::from(1u32));
    }

    #[test]
    fn exponent_cap_empties_high_degrees() {
        // x^3 is forbidden with cap 2: count 0, matching [t^3](1 + t + t^2).
        let sd = SignedDimensionSequence::from_counts(&[1], &[0]).unwrap();
        assert_eq!(pbw_count(&sd, Some(2), 3), BigUint::zero());
        assert_eq!(pbw_count(&sd, Some(2), 2), BigUint::from(1u32));
    }

    #[test]
    fn one_even_one_odd_weight_one() {
        // Monomials x^j y^e, j >= 0, e in {0,1}: two per degree >= 1.
        let sd = SignedDimensionSequence::from_counts(&[1], &[1]).unwrap();
        for n in 1..=6 {
            assert_eq!(pbw_count(&sd, None, n), BigUint::from(2u32));
        }
    }

    #[test]
    fn oracle_split_of_free_superalgebra_counts_all_words() {
        // PBW monomials over the parity split of L(1,1) through degree 3
        // must count all words: [t^3] 1/(1 - 2t) = 8.
        use crate::oracle::span::LieBasis;
        use crate::witt::GradedAlphabet;
        let basis = LieBasis::build(&GradedAlphabet::free_super(1, 1), 3).unwrap();
        assert_eq!(
            pbw_count(&basis.signed_dims(), None, 3),
            BigUint::from(8u32)
        );
    }

    #[test]
    fn matches_enveloping_series_coefficients() {
        let sd = SignedDimensionSequence::from_counts(&[2, 1, 3], &[1, 2, 0]).unwrap();
        let order = 8;
        let series = enveloping_series(&sd, order);
        for n in 0..=order {
            assert_eq!(
                BigInt::from(pbw_count(&sd, None, n)),
                series.coeff(n),
                "degree {n}"
            );
        }
    }

    #[test]
    fn matches_restricted_series_coefficients() {
        let sd = SignedDimensionSequence::from_counts(&[2, 1], &[1, 1]).unwrap();
        let order = 8;
        for p in [2u64, 3, 5] {
            let series = restricted_enveloping_series(&sd, p, order, true).unwrap();
            for n in 0..=order {
                assert_eq!(
                    BigInt::from(pbw_count(&sd, Some(p - 1), n)),
                    series.coeff(n),
                    "degree {n}, p = {p}"
                );
            }
        }
    }
}

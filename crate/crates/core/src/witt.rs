//! Closed-form dimension formulas for free (color) Lie superalgebras: the
//! Möbius function, the Witt formula and its color analog, and free-Lie
//! series over weighted alphabets.
//!
//! Dimension series are indexed from degree 1; every `H(L)` here has zero
//! constant term.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::oracle::bicharacter::{BicharacterTable, FiniteAbelianGroup, GroupElement};
use crate::series::TruncatedSeries;

/// The Möbius function: `mu(n) = 0` when a square of a prime divides `n`,
/// `(-1)^k` otherwise with `k` the number of prime divisors (`mu(1) = 1`).
pub fn moebius(n: u64) -> Result<i8> {
    if n == 0 {
        return Err(Error::InvalidInput("moebius is defined for n >= 1".into()));
    }
    let mut n = n;
    let mut k = 0u32;
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return Ok(0);
            }
            k += 1;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        k += 1;
    }
    Ok(if k.is_multiple_of(2) { 1 } else { -1 })
}

/// Positive divisors of `n >= 1`, unsorted beyond the small/large pairing.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Witt formula: dimension of the degree-`n` component of the free Lie
/// algebra of rank `r`, `(1/n) sum_{d|n} mu(d) r^(n/d)`.
pub fn witt_dim(r: u64, n: u64) -> BigUint {
    assert!(n >= 1, "witt_dim is defined for n >= 1");
    let mut sum = BigInt::zero();
    for d in divisors(n) {
        let mu = moebius(d).expect("divisor is positive");
        if mu != 0 {
            sum += BigInt::from(mu) * BigInt::from(r).pow((n / d) as u32);
        }
    }
    let (q, rem) = sum.div_rem(&BigInt::from(n));
    assert!(rem.is_zero(), "Witt divisor sum must be divisible by n");
    q.to_biguint().expect("Witt dimensions are nonnegative")
}

/// Color Witt formula: total dimension (even + odd) of the degree-`n`
/// component of the free color Lie superalgebra on `r` even and `s` odd
/// generators of degree 1: `(1/n) sum_{m|n} mu(m) (r - (-1)^m s)^(n/m)`.
pub fn color_witt_dim(r: u64, s: u64, n: u64) -> BigUint {
    assert!(r + s >= 1, "color_witt_dim needs at least one generator");
    assert!(n >= 1, "color_witt_dim is defined for n >= 1");
    let mut sum = BigInt::zero();
    for m in divisors(n) {
        let mu = moebius(m).expect("divisor is positive");
        if mu != 0 {
            let base = if m.is_multiple_of(2) {
                BigInt::from(r) - BigInt::from(s)
            } else {
                BigInt::from(r) + BigInt::from(s)
            };
            sum += BigInt::from(mu) * base.pow((n / m) as u32);
        }
    }
    let (q, rem) = sum.div_rem(&BigInt::from(n));
    assert!(
        rem.is_zero(),
        "color Witt divisor sum must be divisible by n"
    );
    q.to_biguint()
        .expect("color Witt dimensions are nonnegative")
}

/// `H(L, t)` for the free Lie algebra of rank `r`, degrees `1..=order`.
pub fn witt_series(r: u64, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    for n in 1..=order {
        s.set_coeff(n, BigInt::from(witt_dim(r, n as u64)));
    }
    s
}

/// `H(L, t)` for the free color Lie superalgebra on `r` even and `s` odd
/// degree-1 generators (total dimensions).
pub fn color_witt_series(r: u64, s: u64, order: usize) -> TruncatedSeries {
    let mut series = TruncatedSeries::zero(order);
    for n in 1..=order {
        series.set_coeff(n, BigInt::from(color_witt_dim(r, s, n as u64)));
    }
    series
}

/// One generator of a graded alphabet: a label, a positive weight, and a
/// degree in the attached bicharacter's group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub label: String,
    pub weight: usize,
    pub degree: GroupElement,
}

/// A finite generating set with weights and grading-group degrees, together
/// with the bicharacter that decides each generator's parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlphabet {
    table: BicharacterTable,
    generators: Vec<Generator>,
}

impl GradedAlphabet {
    pub fn new(table: BicharacterTable, generators: Vec<Generator>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for g in &generators {
            if g.weight == 0 {
                return Err(Error::InvalidInput(format!(
                    "generator `{}` has weight 0; weights must be >= 1",
                    g.label
                )));
            }
            if !table.group().contains(&g.degree) {
                return Err(Error::InvalidInput(format!(
                    "generator `{}` has degree {} outside the grading group",
                    g.label, g.degree
                )));
            }
            if !seen.insert(g.label.clone()) {
                return Err(Error::InvalidInput(format!(
                    "duplicate generator label `{}`",
                    g.label
                )));
            }
        }
        Ok(GradedAlphabet { table, generators })
    }

    /// `r` even weight-1 generators `x1..xr` over the trivial group.
    pub fn classical(r: usize) -> Self {
        let table = BicharacterTable::trivial(FiniteAbelianGroup::trivial());
        let id = table.group().identity();
        let generators = (1..=r)
            .map(|i| Generator {
                label: format!("x{i}"),
                weight: 1,
                degree: id.clone(),
            })
            .collect();
        GradedAlphabet { table, generators }
    }

    /// `r` even and `s` odd weight-1 generators over `Z_2` with the standard
    /// superalgebra bicharacter.
    pub fn free_super(r: usize, s: usize) -> Self {
        let table = BicharacterTable::super_z2();
        let even = table.group().element(0);
        let odd = table.group().element(1);
        let mut generators = Vec::with_capacity(r + s);
        for i in 1..=r {
            generators.push(Generator {
                label: format!("x{i}"),
                weight: 1,
                degree: even.clone(),
            });
        }
        for j in 1..=s {
            generators.push(Generator {
                label: format!("y{j}"),
                weight: 1,
                degree: odd.clone(),
            });
        }
        GradedAlphabet { table, generators }
    }

    /// A purely even alphabet with `counts[i]` generators of weight `i + 1`,
    /// labelled `z{weight}_{index}`.
    pub fn even_from_weight_counts(counts: &[u64]) -> Result<Self> {
        let table = BicharacterTable::trivial(FiniteAbelianGroup::trivial());
        let id = table.group().identity();
        let mut generators = Vec::new();
        for (i, &count) in counts.iter().enumerate() {
            let weight = i + 1;
            for j in 1..=count {
                generators.push(Generator {
                    label: format!("z{weight}_{j}"),
                    weight,
                    degree: id.clone(),
                });
            }
        }
        GradedAlphabet::new(table, generators)
    }

    /// A purely even alphabet with `series.coeff(n)` generators of weight `n`.
    /// The constant term must be zero and all coefficients nonnegative.
    pub fn even_from_series(series: &TruncatedSeries) -> Result<Self> {
        if !series.coeff(0).is_zero() {
            return Err(Error::InvalidInput(
                "a generating function of an alphabet has zero constant term".into(),
            ));
        }
        let counts: Vec<u64> = (1..=series.order())
            .map(|n| {
                let c = series.coeff(n);
                if c.is_negative() {
                    return Err(Error::InvalidInput(format!(
                        "negative generator count at weight {n}"
                    )));
                }
                u64::try_from(c.to_biguint().expect("checked nonnegative")).map_err(|_| {
                    Error::InvalidInput(format!("generator count at weight {n} is too large"))
                })
            })
            .collect::<Result<_>>()?;
        Self::even_from_weight_counts(&counts)
    }

    pub fn table(&self) -> &BicharacterTable {
        &self.table
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// True if generator `i` has even parity, i.e. `gamma(g, g) = +1` for
    /// its degree `g`.
    pub fn is_even_generator(&self, i: usize) -> bool {
        self.table.is_even(&self.generators[i].degree)
    }

    /// `(r, s) = (|X_+|, |X_-|)`.
    pub fn parity_counts(&self) -> (usize, usize) {
        let even = (0..self.len())
            .filter(|&i| self.is_even_generator(i))
            .count();
        (even, self.len() - even)
    }

    pub fn is_purely_even(&self) -> bool {
        self.parity_counts().1 == 0
    }

    /// Total weight of a word over this alphabet.
    pub fn word_weight(&self, word: &[u8]) -> usize {
        word.iter()
            .map(|&i| self.generators[i as usize].weight)
            .sum()
    }

    /// Grading-group degree of a word (product of letter degrees).
    pub fn word_degree(&self, word: &[u8]) -> GroupElement {
        let group = self.table.group();
        word.iter().fold(group.identity(), |acc, &i| {
            group.mul(&acc, &self.generators[i as usize].degree)
        })
    }

    pub fn format_word(&self, word: &[u8]) -> String {
        word.iter()
            .map(|&i| self.generators[i as usize].label.as_str())
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// Weight-generating function `H(X) = sum |X_i| t^i` of an alphabet.
pub fn alphabet_series(x: &GradedAlphabet, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    for g in x.generators() {
        if g.weight <= order {
            let c = s.coeff(g.weight) + 1;
            s.set_coeff(g.weight, c);
        }
    }
    s
}

/// Weight-graded Hilbert series of the free Lie algebra on a purely even
/// weighted alphabet, computed as `InvE(1 / (1 - H(X)))`.
///
/// Odd generators are rejected: there is no weighted super Witt formula to
/// implement, so super dimensions come from [`color_witt_dim`] (weight one)
/// or the oracle.
pub fn free_lie_series_from_alphabet(x: &GradedAlphabet, order: usize) -> Result<TruncatedSeries> {
    if let Some(i) = (0..x.len()).find(|&i| !x.is_even_generator(i)) {
        return Err(Error::UnsupportedParity {
            label: x.generators()[i].label.clone(),
        });
    }
    alphabet_series(x, order)
        .geom_inverse()?
        .inverse_euler_transform()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::lyndon::lyndon_count;

    #[test]
    fn moebius_small_values() {
        let expected: [i8; 12] = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, &mu) in expected.iter().enumerate() {
            assert_eq!(moebius(i as u64 + 1).unwrap(), mu, "mu({})", i + 1);
        }
    }

    #[test]
    fn moebius_rejects_zero() {
        assert!(moebius(0).is_err());
    }

    #[test]
    fn moebius_is_multiplicative_on_coprime_arguments() {
        fn gcd(mut a: u64, mut b: u64) -> u64 {
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a
        }
        for m in 1..=60u64 {
            for n in 1..=60u64 {
                if gcd(m, n) == 1 {
                    assert_eq!(
                        moebius(m * n).unwrap(),
                        moebius(m).unwrap() * moebius(n).unwrap(),
                        "m = {m}, n = {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn divisors_are_complete() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn witt_dim_examples() {
        assert_eq!(witt_dim(2, 1), BigUint::from(2u32));
        // Frozen from the Lyndon oracle: words aab, abb.
        assert_eq!(witt_dim(2, 3), BigUint::from(2u32));
        assert_eq!(witt_dim(2, 6), BigUint::from(9u32));
    }

    #[test]
    fn witt_dim_matches_lyndon_enumeration() {
        for r in 1..=2u64 {
            for n in 1..=8u64 {
                assert_eq!(
                    witt_dim(r, n),
                    lyndon_count(r as usize, n as usize).unwrap(),
                    "r = {r}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn witt_divisor_sum_divisibility() {
        // The assertion inside witt_dim / color_witt_dim is the check; it
        // must hold over the whole range.
        for r in 0..=6 {
            for n in 1..=40 {
                let _ = witt_dim(r, n);
            }
        }
        for r in 0..=4u64 {
            for s in 0..=4u64 {
                if r + s == 0 {
                    continue;
                }
                for n in 1..=40 {
                    let _ = color_witt_dim(r, s, n);
                }
            }
        }
    }

    #[test]
    fn color_witt_examples() {
        // Frozen from the span oracle (see the oracle and acceptance tests).
        assert_eq!(color_witt_dim(1, 1, 2), BigUint::from(2u32));
        assert_eq!(color_witt_dim(2, 1, 2), BigUint::from(4u32));
    }

    #[test]
    fn color_witt_collapses_to_classical_when_s_is_zero() {
        for r in 1..=4 {
            for n in 1..=8 {
                assert_eq!(color_witt_dim(r, 0, n), witt_dim(r, n));
            }
        }
    }

    #[test]
    fn color_witt_degree_one_counts_generators() {
        for r in 0..=4u64 {
            for s in 0..=4u64 {
                if r + s == 0 {
                    continue;
                }
                assert_eq!(color_witt_dim(r, s, 1), BigUint::from(r + s));
            }
        }
    }

    #[test]
    fn witt_series_rank_two() {
        assert_eq!(
            witt_series(2, 8),
            TruncatedSeries::from_i64(&[0, 2, 1, 2, 3, 6, 9, 18, 30])
        );
    }

    #[test]
    fn witt_series_sum_coefficient() {
        // H(L(2)) + H(L(3)) at t^3: 2 + 8 Lyndon words.
        let sum = &witt_series(2, 8) + &witt_series(3, 8);
        let expected = lyndon_count(2, 3).unwrap() + lyndon_count(3, 3).unwrap();
        assert_eq!(sum.coeff(3), BigInt::from(expected));
        assert_eq!(sum.coeff(3), BigInt::from(10));
    }

    #[test]
    fn witt_series_degenerate_ranks() {
        assert_eq!(witt_series(1, 6), TruncatedSeries::monomial(1, 1, 6));
        assert_eq!(witt_series(0, 6), TruncatedSeries::zero(6));
    }

    #[test]
    fn pbw_witt_identity() {
        // E(H(L)) = H(U(L)) = 1/(1 - r t), dual route through geom_inverse.
        for r in 0..=3u64 {
            let lhs = witt_series(r, 12).euler_transform().unwrap();
            let rhs = TruncatedSeries::monomial(r, 1, 12).geom_inverse().unwrap();
            assert_eq!(lhs, rhs, "r = {r}");
        }
    }

    #[test]
    fn alphabet_series_counts_weights() {
        let x = GradedAlphabet::classical(3);
        assert_eq!(alphabet_series(&x, 4), TruncatedSeries::monomial(3, 1, 4));

        let y = GradedAlphabet::even_from_weight_counts(&[1, 0, 2]).unwrap();
        assert_eq!(
            alphabet_series(&y, 4),
            TruncatedSeries::from_i64(&[0, 1, 0, 2, 0])
        );

        let empty = GradedAlphabet::even_from_weight_counts(&[]).unwrap();
        assert_eq!(alphabet_series(&empty, 3), TruncatedSeries::zero(3));
    }

    #[test]
    fn alphabet_rejects_bad_generators() {
        let table = BicharacterTable::trivial(FiniteAbelianGroup::trivial());
        let id = table.group().identity();
        let dup = vec![
            Generator {
                label: "x".into(),
                weight: 1,
                degree: id.clone(),
            },
            Generator {
                label: "x".into(),
                weight: 2,
                degree: id.clone(),
            },
        ];
        assert!(GradedAlphabet::new(table.clone(), dup).is_err());

        let zero_weight = vec![Generator {
            label: "x".into(),
            weight: 0,
            degree: id,
        }];
        assert!(GradedAlphabet::new(table, zero_weight).is_err());
    }

    #[test]
    fn free_lie_series_classical_case() {
        let x = GradedAlphabet::classical(2);
        assert_eq!(
            free_lie_series_from_alphabet(&x, 10).unwrap(),
            witt_series(2, 10)
        );
    }

    #[test]
    fn free_lie_series_single_generator() {
        let x = GradedAlphabet::classical(1);
        assert_eq!(
            free_lie_series_from_alphabet(&x, 6).unwrap(),
            TruncatedSeries::monomial(1, 1, 6)
        );
    }

    #[test]
    fn free_lie_series_weighted_alphabet() {
        // One weight-1 and one weight-2 even generator; low-degree values
        // cross-checked against the span oracle in the oracle tests.
        let x = GradedAlphabet::even_from_weight_counts(&[1, 1]).unwrap();
        let h = free_lie_series_from_alphabet(&x, 8).unwrap();
        assert_eq!(h.coeff(1), 1.into());
        assert_eq!(h.coeff(2), 1.into());
        assert_eq!(h.coeff(3), 1.into());
    }

    #[test]
    fn free_lie_series_respects_weight_rescaling() {
        // Three even weight-2 generators: the algebra is the free Lie
        // algebra on 3 letters with every degree doubled.
        let x = GradedAlphabet::even_from_weight_counts(&[0, 3]).unwrap();
        let h = free_lie_series_from_alphabet(&x, 12).unwrap();
        for n in 1..=12usize {
            let expected = if n.is_multiple_of(2) {
                BigInt::from(witt_dim(3, n as u64 / 2))
            } else {
                BigInt::from(0)
            };
            assert_eq!(h.coeff(n), expected, "degree {n}");
        }
    }

    #[test]
    fn free_lie_series_rejects_odd_generators() {
        let x = GradedAlphabet::free_super(1, 1);
        assert!(matches!(
            free_lie_series_from_alphabet(&x, 5),
            Err(Error::UnsupportedParity { .. })
        ));
    }

    #[test]
    fn parity_counts_follow_the_bicharacter() {
        let x = GradedAlphabet::free_super(2, 1);
        assert_eq!(x.parity_counts(), (2, 1));
        assert!(!x.is_purely_even());
        assert!(GradedAlphabet::classical(3).is_purely_even());
    }

    #[test]
    fn word_weight_and_degree() {
        let x = GradedAlphabet::free_super(1, 1);
        // word x.y.y: weight 3, degree 0 + 1 + 1 = 0 in Z_2
        assert_eq!(x.word_weight(&[0, 1, 1]), 3);
        assert_eq!(x.word_degree(&[0, 1, 1]), x.table().group().element(0));
        assert_eq!(x.word_degree(&[0, 1]), x.table().group().element(1));
        assert_eq!(x.format_word(&[0, 1]), "x1.y1");
    }
}

//! Brute-force realization of free color Lie superalgebras inside the free
//! associative algebra.
//!
//! Degree components are built weight by weight: the degree-`d` component is
//! spanned by the seed elements of weight `d` together with all brackets
//! `[u, v]` with `u` in the basis of degree `k` and `v` in degree `d - k`,
//! over every split `k` (not only left-normed brackets). Ranks are computed
//! over the rationals by fraction-free elimination after clearing
//! denominators.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::envelope::SignedDimensionSequence;
use crate::error::{Error, Result};
use crate::oracle::free_algebra::{super_commutator, FreeAlgebraElement, Word};
use crate::oracle::linalg::IntegerRowSpace;
use crate::series::TruncatedSeries;
use crate::witt::GradedAlphabet;

/// Default cap on the number of words of the requested weight.
pub const DEFAULT_WORD_CAP: usize = 1_000_000;

/// Basis data for one weight component.
#[derive(Clone, Debug, Default)]
struct Layer {
    elements: Vec<FreeAlgebraElement>,
    even_count: usize,
    odd_count: usize,
}

/// Degree-by-degree basis of the free color Lie superalgebra `L(X)`
/// realized inside `A<X>`.
#[derive(Debug)]
pub struct LieBasis {
    alphabet: GradedAlphabet,
    layers: Vec<Layer>,
}

impl LieBasis {
    pub fn build(alphabet: &GradedAlphabet, max_degree: usize) -> Result<Self> {
        Self::build_with_cap(alphabet, max_degree, DEFAULT_WORD_CAP)
    }

    pub fn build_with_cap(
        alphabet: &GradedAlphabet,
        max_degree: usize,
        word_cap: usize,
    ) -> Result<Self> {
        // Words index generators with a byte.
        if alphabet.len() > usize::from(u8::MAX) + 1 {
            return Err(Error::TooLarge {
                detail: format!("alphabet of {} generators", alphabet.len()),
                cap: usize::from(u8::MAX) + 1,
            });
        }
        let mut seeds: BTreeMap<usize, Vec<FreeAlgebraElement>> = BTreeMap::new();
        for (i, g) in alphabet.generators().iter().enumerate() {
            seeds
                .entry(g.weight)
                .or_default()
                .push(FreeAlgebraElement::generator(i as u8));
        }
        let layers = close_under_bracket(alphabet, &seeds, max_degree, word_cap)?;
        Ok(LieBasis {
            alphabet: alphabet.clone(),
            layers,
        })
    }

    pub fn alphabet(&self) -> &GradedAlphabet {
        &self.alphabet
    }

    pub fn max_degree(&self) -> usize {
        self.layers.len()
    }

    /// `dim L_n` over the rationals.
    pub fn dim(&self, n: usize) -> usize {
        assert!(n >= 1 && n <= self.max_degree());
        self.layers[n - 1].elements.len()
    }

    /// `(a_n, b_n)`: dimensions of the even and odd parts of `L_n`.
    pub fn parity_split(&self, n: usize) -> (usize, usize) {
        assert!(n >= 1 && n <= self.max_degree());
        (self.layers[n - 1].even_count, self.layers[n - 1].odd_count)
    }

    pub fn elements(&self, n: usize) -> &[FreeAlgebraElement] {
        assert!(n >= 1 && n <= self.max_degree());
        &self.layers[n - 1].elements
    }

    /// The parity splits of all computed degrees, ready for the enveloping
    /// series constructors.
    pub fn signed_dims(&self) -> SignedDimensionSequence {
        let even: Vec<u64> = self.layers.iter().map(|l| l.even_count as u64).collect();
        let odd: Vec<u64> = self.layers.iter().map(|l| l.odd_count as u64).collect();
        SignedDimensionSequence::from_counts(&even, &odd).expect("equal lengths by construction")
    }

    /// `H(L, t)` up to the computed degree.
    pub fn dimension_series(&self) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(self.max_degree());
        for n in 1..=self.max_degree() {
            s.set_coeff(n, BigInt::from(self.dim(n)));
        }
        s
    }
}

/// Dimension of `L(X)_n`, building the basis up to degree `n`.
pub fn lie_span_dimension(alphabet: &GradedAlphabet, n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidInput("degree must be >= 1".into()));
    }
    Ok(LieBasis::build(alphabet, n)?.dim(n))
}

/// Degreewise span of the subalgebra generated by `gens` under the
/// gamma-bracket.
#[derive(Debug)]
pub struct SubalgebraBasis {
    layers: Vec<Layer>,
}

impl SubalgebraBasis {
    /// `gens` must be nonzero and homogeneous in both weight and
    /// grading-group degree.
    pub fn build(
        alphabet: &GradedAlphabet,
        gens: &[FreeAlgebraElement],
        max_degree: usize,
    ) -> Result<Self> {
        Self::build_with_cap(alphabet, gens, max_degree, DEFAULT_WORD_CAP)
    }

    pub fn build_with_cap(
        alphabet: &GradedAlphabet,
        gens: &[FreeAlgebraElement],
        max_degree: usize,
        word_cap: usize,
    ) -> Result<Self> {
        let mut seeds: BTreeMap<usize, Vec<FreeAlgebraElement>> = BTreeMap::new();
        for (i, g) in gens.iter().enumerate() {
            let weight = g.homogeneous_weight(alphabet).ok_or_else(|| {
                Error::InvalidInput(format!(
                    "subalgebra generator {i} is zero or not weight-homogeneous"
                ))
            })?;
            if g.homogeneous_degree(alphabet).is_none() {
                return Err(Error::InvalidInput(format!(
                    "subalgebra generator {i} is not G-homogeneous"
                )));
            }
            if weight <= max_degree {
                seeds.entry(weight).or_default().push(g.clone());
            }
        }
        let layers = close_under_bracket(alphabet, &seeds, max_degree, word_cap)?;
        Ok(SubalgebraBasis { layers })
    }

    pub fn max_degree(&self) -> usize {
        self.layers.len()
    }

    /// `dim (K cap L_n)` for the weight-`n` component of the subalgebra.
    pub fn dim(&self, n: usize) -> usize {
        assert!(n >= 1 && n <= self.max_degree());
        self.layers[n - 1].elements.len()
    }

    pub fn parity_split(&self, n: usize) -> (usize, usize) {
        assert!(n >= 1 && n <= self.max_degree());
        (self.layers[n - 1].even_count, self.layers[n - 1].odd_count)
    }
}

/// Dimension of the weight-`n` component of the subalgebra generated by
/// `gens`.
pub fn subalgebra_span_dimension(
    alphabet: &GradedAlphabet,
    gens: &[FreeAlgebraElement],
    n: usize,
) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidInput("degree must be >= 1".into()));
    }
    Ok(SubalgebraBasis::build(alphabet, gens, n)?.dim(n))
}

fn close_under_bracket(
    alphabet: &GradedAlphabet,
    seeds: &BTreeMap<usize, Vec<FreeAlgebraElement>>,
    max_degree: usize,
    word_cap: usize,
) -> Result<Vec<Layer>> {
    let word_counts = words_per_weight(alphabet, max_degree);
    let mut layers: Vec<Layer> = Vec::with_capacity(max_degree);

    for d in 1..=max_degree {
        if word_counts[d] > word_cap as u128 {
            return Err(Error::TooLarge {
                detail: format!("{} words of weight {d}", word_counts[d]),
                cap: word_cap,
            });
        }

        let mut candidates: Vec<FreeAlgebraElement> = Vec::new();
        if let Some(s) = seeds.get(&d) {
            candidates.extend(s.iter().cloned());
        }
        for k in 1..d {
            let (left, right) = (&layers[k - 1], &layers[d - k - 1]);
            for u in &left.elements {
                for v in &right.elements {
                    let bracket = super_commutator(u, v, alphabet)?;
                    if !bracket.is_zero() {
                        candidates.push(bracket);
                    }
                }
            }
        }

        // Words of distinct grading-group degree never interact, so the rank
        // splits as a direct sum over degree classes.
        let mut by_degree: BTreeMap<_, Vec<FreeAlgebraElement>> = BTreeMap::new();
        for c in candidates {
            let deg = c
                .homogeneous_degree(alphabet)
                .expect("brackets of homogeneous elements are homogeneous");
            by_degree.entry(deg).or_default().push(c);
        }

        let mut layer = Layer::default();
        for (deg, class) in by_degree {
            let even = alphabet.table().is_even(&deg);
            let columns: BTreeMap<&Word, usize> = class
                .iter()
                .flat_map(|e| e.terms().map(|(w, _)| w))
                .collect::<BTreeSet<_>>()
                .into_iter()
                .enumerate()
                .map(|(i, w)| (w, i))
                .collect();
            let mut space = IntegerRowSpace::new();
            let mut independent = Vec::new();
            for elem in &class {
                if space.insert(integer_row(elem, &columns)) {
                    independent.push(elem.clone());
                }
            }
            debug_assert_eq!(space.rank(), independent.len());
            if even {
                layer.even_count += independent.len();
            } else {
                layer.odd_count += independent.len();
            }
            layer.elements.extend(independent);
        }
        layers.push(layer);
    }
    Ok(layers)
}

/// Clears denominators and writes the element as an integer coordinate row.
fn integer_row(elem: &FreeAlgebraElement, columns: &BTreeMap<&Word, usize>) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for (_, c) in elem.terms() {
        lcm = lcm.lcm(c.denom());
    }
    let mut row = vec![BigInt::from(0); columns.len()];
    for (w, c) in elem.terms() {
        row[columns[w]] = c.numer() * (&lcm / c.denom());
    }
    row
}

/// Number of words of each weight `0..=max_degree`, saturating at `u128`.
fn words_per_weight(alphabet: &GradedAlphabet, max_degree: usize) -> Vec<u128> {
    let weights: Vec<usize> = alphabet.generators().iter().map(|g| g.weight).collect();
    let mut counts = vec![0u128; max_degree + 1];
    counts[0] = 1;
    for d in 1..=max_degree {
        let mut acc: u128 = 0;
        for &w in &weights {
            if w <= d {
                acc = acc.saturating_add(counts[d - w]);
            }
        }
        counts[d] = acc;
    }
    counts
}

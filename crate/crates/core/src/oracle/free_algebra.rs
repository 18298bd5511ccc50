//! Sparse exact-rational elements of the free associative algebra `A<X>`,
//! with the gamma-super-commutator that realizes the free color Lie
//! superalgebra inside it.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::oracle::bicharacter::GroupElement;
use crate::witt::GradedAlphabet;

/// A word is a sequence of generator indices into a [`GradedAlphabet`].
pub type Word = Vec<u8>;

/// A sparse rational linear combination of words. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FreeAlgebraElement {
    terms: BTreeMap<Word, BigRational>,
}

impl FreeAlgebraElement {
    pub fn zero() -> Self {
        FreeAlgebraElement::default()
    }

    /// The length-one word for generator `index`.
    pub fn generator(index: u8) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![index], BigRational::one());
        FreeAlgebraElement { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, BigRational)>) -> Self {
        let mut e = FreeAlgebraElement::default();
        for (word, coeff) in terms {
            e.add_term(word, coeff);
        }
        e
    }

    fn add_term(&mut self, word: Word, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FreeAlgebraElement {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    fn scale_sign(&self, sign: i8) -> Self {
        if sign == 1 {
            self.clone()
        } else {
            -self
        }
    }

    /// Common weight of all words, if the element is weight-homogeneous.
    /// `None` for the zero element or mixed weights.
    pub fn homogeneous_weight(&self, alphabet: &GradedAlphabet) -> Option<usize> {
        let mut it = self.terms.keys();
        let w = alphabet.word_weight(it.next()?);
        it.all(|word| alphabet.word_weight(word) == w).then_some(w)
    }

    /// Common grading-group degree of all words, if the element is
    /// G-homogeneous. `None` for the zero element or mixed degrees.
    pub fn homogeneous_degree(&self, alphabet: &GradedAlphabet) -> Option<GroupElement> {
        let mut it = self.terms.keys();
        let d = alphabet.word_degree(it.next()?);
        it.all(|word| alphabet.word_degree(word) == d).then_some(d)
    }

    pub fn format_with(&self, alphabet: &GradedAlphabet) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (word, coeff)) in self.terms.iter().enumerate() {
            let mag = coeff.abs();
            if i == 0 {
                if coeff.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if coeff.is_negative() { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&alphabet.format_word(word));
        }
        out
    }
}

impl Add for &FreeAlgebraElement {
    type Output = FreeAlgebraElement;
    fn add(self, rhs: &FreeAlgebraElement) -> FreeAlgebraElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &FreeAlgebraElement {
    type Output = FreeAlgebraElement;
    fn sub(self, rhs: &FreeAlgebraElement) -> FreeAlgebraElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &FreeAlgebraElement {
    type Output = FreeAlgebraElement;
    fn neg(self) -> FreeAlgebraElement {
        FreeAlgebraElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

/// Concatenation product, extended bilinearly.
impl Mul for &FreeAlgebraElement {
    type Output = FreeAlgebraElement;
    fn mul(self, rhs: &FreeAlgebraElement) -> FreeAlgebraElement {
        let mut out = FreeAlgebraElement::default();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                let mut word = Vec::with_capacity(u.len() + v.len());
                word.extend_from_slice(u);
                word.extend_from_slice(v);
                out.add_term(word, a * b);
            }
        }
        out
    }
}

/// The gamma-super-commutator `[u, v] = uv - gamma(d(u), d(v)) vu` for
/// G-homogeneous `u` and `v`.
///
/// The result is homogeneous of degree `d(u) d(v)`; if either operand is
/// zero the bracket is zero. Non-homogeneous operands are rejected.
pub fn super_commutator(
    u: &FreeAlgebraElement,
    v: &FreeAlgebraElement,
    alphabet: &GradedAlphabet,
) -> Result<FreeAlgebraElement> {
    if u.is_zero() || v.is_zero() {
        return Ok(FreeAlgebraElement::zero());
    }
    let du = u.homogeneous_degree(alphabet).ok_or_else(|| {
        Error::InvalidInput("super_commutator requires G-homogeneous operands".into())
    })?;
    let dv = v.homogeneous_degree(alphabet).ok_or_else(|| {
        Error::InvalidInput("super_commutator requires G-homogeneous operands".into())
    })?;
    let sign = alphabet.table().gamma(&du, &dv);
    Ok(&(u * v) - &(v * u).scale_sign(sign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn bracket_of_odd_generator_with_itself_is_nonzero() {
        // [y, y] = y y - (-1) y y = 2 y y on the Z_2 super grading.
        let x = GradedAlphabet::free_super(1, 1);
        let y = FreeAlgebraElement::generator(1);
        let b = super_commutator(&y, &y, &x).unwrap();
        assert_eq!(b, FreeAlgebraElement::from_terms([(vec![1, 1], rat(2))]));
    }

    #[test]
    fn bracket_of_even_generator_with_itself_vanishes() {
        let x = GradedAlphabet::free_super(1, 1);
        let e = FreeAlgebraElement::generator(0);
        assert!(super_commutator(&e, &e, &x).unwrap().is_zero());
    }

    #[test]
    fn bracket_of_distinct_even_generators() {
        let x = GradedAlphabet::classical(2);
        let a = FreeAlgebraElement::generator(0);
        let b = FreeAlgebraElement::generator(1);
        let ab = super_commutator(&a, &b, &x).unwrap();
        assert_eq!(
            ab,
            FreeAlgebraElement::from_terms([(vec![0, 1], rat(1)), (vec![1, 0], rat(-1))])
        );
    }

    #[test]
    fn non_homogeneous_operand_is_rejected() {
        let x = GradedAlphabet::free_super(1, 1);
        let mixed = &FreeAlgebraElement::generator(0) + &FreeAlgebraElement::generator(1);
        let y = FreeAlgebraElement::generator(1);
        assert!(super_commutator(&mixed, &y, &x).is_err());
    }

    #[test]
    fn zero_operand_short_circuits() {
        let x = GradedAlphabet::free_super(1, 1);
        let y = FreeAlgebraElement::generator(1);
        assert!(super_commutator(&FreeAlgebraElement::zero(), &y, &x)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn cancellation_drops_stored_terms() {
        let a = FreeAlgebraElement::from_terms([(vec![0], rat(2)), (vec![1], rat(1))]);
        let b = FreeAlgebraElement::from_terms([(vec![0], rat(-2))]);
        let sum = &a + &b;
        assert_eq!(sum.num_terms(), 1);
        assert_eq!(sum, FreeAlgebraElement::from_terms([(vec![1], rat(1))]));
    }

    #[test]
    fn homogeneity_detection() {
        let x = GradedAlphabet::free_super(1, 1);
        let h = FreeAlgebraElement::from_terms([(vec![0, 1], rat(1)), (vec![1, 0], rat(3))]);
        assert_eq!(h.homogeneous_weight(&x), Some(2));
        assert_eq!(h.homogeneous_degree(&x), Some(x.table().group().element(1)));

        let mixed = FreeAlgebraElement::from_terms([(vec![0], rat(1)), (vec![0, 0], rat(1))]);
        assert_eq!(mixed.homogeneous_weight(&x), None);
        assert_eq!(
            mixed.homogeneous_degree(&x),
            Some(x.table().group().element(0))
        );
    }
}

//! Lyndon word enumeration: the independent combinatorial oracle for the
//! Witt formula.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::oracle::span::DEFAULT_WORD_CAP;

/// Counts Lyndon words of length `n` over a `k`-letter alphabet by explicit
/// enumeration, testing that each word is strictly smaller than all of its
/// proper rotations.
pub fn lyndon_count(k: usize, n: usize) -> Result<BigUint> {
    lyndon_count_with_cap(k, n, DEFAULT_WORD_CAP)
}

pub fn lyndon_count_with_cap(k: usize, n: usize, cap: usize) -> Result<BigUint> {
    if k < 1 || n < 1 {
        return Err(Error::InvalidInput(
            "lyndon_count requires k >= 1 and n >= 1".into(),
        ));
    }
    let total = (k as u128).checked_pow(n as u32);
    match total {
        Some(t) if t <= cap as u128 => {}
        _ => {
            return Err(Error::TooLarge {
                detail: format!("{k}^{n} words"),
                cap,
            })
        }
    }

    let mut count = BigUint::zero();
    let mut word = vec![0u8; n];
    loop {
        if is_lyndon(&word) {
            count += 1u32;
        }
        // Odometer step through all k^n words.
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(count);
            }
            i -= 1;
            word[i] += 1;
            if (word[i] as usize) < k {
                break;
            }
            word[i] = 0;
        }
    }
}

/// A word is Lyndon iff it is strictly smaller than every proper rotation.
fn is_lyndon(word: &[u8]) -> bool {
    let n = word.len();
    for r in 1..n {
        let rotation = word[r..].iter().chain(word[..r].iter());
        if word.iter().ge(rotation) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witt::{divisors, moebius};
    use num_bigint::BigInt;

    #[test]
    fn binary_words_of_length_three() {
        // Enumeration of the 8 words finds exactly aab and abb.
        assert_eq!(lyndon_count(2, 3).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn single_letters_are_lyndon() {
        for k in 1..=5 {
            assert_eq!(lyndon_count(k, 1).unwrap(), BigUint::from(k));
        }
    }

    #[test]
    fn ternary_words_of_length_two() {
        // ab, ac, bc out of 9 words.
        assert_eq!(lyndon_count(3, 2).unwrap(), BigUint::from(3u32));
    }

    #[test]
    fn necklace_identity() {
        // n * lyndon_count(k, n) = sum_{d|n} mu(d) k^(n/d)
        for k in 1..=3u64 {
            for n in 1..=8u64 {
                let lhs =
                    BigInt::from(n) * BigInt::from(lyndon_count(k as usize, n as usize).unwrap());
                let mut rhs = BigInt::zero();
                for d in divisors(n) {
                    let mu = moebius(d).unwrap();
                    if mu != 0 {
                        rhs += BigInt::from(mu) * BigInt::from(k).pow((n / d) as u32);
                    }
                }
                assert_eq!(lhs, rhs, "k = {k}, n = {n}");
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(lyndon_count(10, 10), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn degenerate_arguments_rejected() {
        assert!(lyndon_count(0, 3).is_err());
        assert!(lyndon_count(2, 0).is_err());
    }
}

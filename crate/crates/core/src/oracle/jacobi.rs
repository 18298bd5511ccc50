//! Randomized exact verification of the gamma-skew-symmetry and
//! gamma-Jacobi identities for the super-commutator.
//!
//! Both identities hold identically in `A^(gamma)`, so any failure reported
//! here is an implementation bug, not a property of the inputs. Trials are
//! seeded and the seed is recorded in the report.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::oracle::bicharacter::GroupElement;
use crate::oracle::free_algebra::{super_commutator, FreeAlgebraElement, Word};
use crate::witt::GradedAlphabet;

#[derive(Clone, Debug)]
pub struct JacobiFailure {
    pub trial: u32,
    pub identity: &'static str,
    pub witness: String,
}

#[derive(Clone, Debug)]
pub struct JacobiReport {
    pub trials: u32,
    pub seed: u64,
    pub max_degree: usize,
    pub failures: Vec<JacobiFailure>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs `trials` seeded random checks of the gamma-skew-symmetry and
/// gamma-Jacobi identities on homogeneous elements built from words of
/// weight at most `max_degree`.
pub fn verify_jacobi(
    alphabet: &GradedAlphabet,
    trials: u32,
    max_degree: usize,
    seed: u64,
) -> Result<JacobiReport> {
    if alphabet.is_empty() {
        return Err(Error::InvalidInput("the alphabet is empty".into()));
    }
    if alphabet.len() > usize::from(u8::MAX) + 1 {
        return Err(Error::TooLarge {
            detail: format!("alphabet of {} generators", alphabet.len()),
            cap: usize::from(u8::MAX) + 1,
        });
    }
    if max_degree == 0 {
        return Err(Error::InvalidInput("max_degree must be >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();

    for trial in 0..trials {
        let (x, dx) = random_homogeneous(&mut rng, alphabet, max_degree);
        let (y, dy) = random_homogeneous(&mut rng, alphabet, max_degree);
        let (z, dz) = random_homogeneous(&mut rng, alphabet, max_degree);
        let table = alphabet.table();

        // [x, y] = -gamma(d(x), d(y)) [y, x]
        let xy = super_commutator(&x, &y, alphabet)?;
        let yx = super_commutator(&y, &x, alphabet)?;
        let skew = &xy + &yx.scale(&rational_sign(table.gamma(&dx, &dy)));
        if !skew.is_zero() {
            failures.push(JacobiFailure {
                trial,
                identity: "gamma-skew-symmetry",
                witness: witness(alphabet, &[&x, &y]),
            });
        }

        // gamma(dz,dx)[x,[y,z]] + gamma(dy,dz)[z,[x,y]] + gamma(dx,dy)[y,[z,x]] = 0
        let yz = super_commutator(&y, &z, alphabet)?;
        let zx = super_commutator(&z, &x, alphabet)?;
        let t1 = super_commutator(&x, &yz, alphabet)?.scale(&rational_sign(table.gamma(&dz, &dx)));
        let t2 = super_commutator(&z, &xy, alphabet)?.scale(&rational_sign(table.gamma(&dy, &dz)));
        let t3 = super_commutator(&y, &zx, alphabet)?.scale(&rational_sign(table.gamma(&dx, &dy)));
        let jacobi = &(&t1 + &t2) + &t3;
        if !jacobi.is_zero() {
            failures.push(JacobiFailure {
                trial,
                identity: "gamma-Jacobi",
                witness: witness(alphabet, &[&x, &y, &z]),
            });
        }
    }

    Ok(JacobiReport {
        trials,
        seed,
        max_degree,
        failures,
    })
}

fn witness(alphabet: &GradedAlphabet, elems: &[&FreeAlgebraElement]) -> String {
    elems
        .iter()
        .map(|e| e.format_with(alphabet))
        .collect::<Vec<_>>()
        .join(" ; ")
}

fn rational_sign(sign: i8) -> BigRational {
    BigRational::from_integer(BigInt::from(sign))
}

fn random_word(rng: &mut ChaCha8Rng, alphabet: &GradedAlphabet, max_degree: usize) -> Word {
    let len = rng.random_range(1..=max_degree);
    (0..len)
        .map(|_| rng.random_range(0..alphabet.len()) as u8)
        .collect()
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let mut numer = 0i64;
    while numer == 0 {
        numer = rng.random_range(-4..=4);
    }
    let denom = rng.random_range(1..=4i64);
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// A random G-homogeneous element: a small rational combination of words
/// sharing one grading-group degree (mixed weights are fine).
fn random_homogeneous(
    rng: &mut ChaCha8Rng,
    alphabet: &GradedAlphabet,
    max_degree: usize,
) -> (FreeAlgebraElement, GroupElement) {
    let first = random_word(rng, alphabet, max_degree);
    let degree = alphabet.word_degree(&first);
    let mut terms = vec![(first, random_rational(rng))];
    let wanted = rng.random_range(0..=2usize);
    let mut attempts = 0;
    while terms.len() <= wanted && attempts < 40 {
        attempts += 1;
        let w = random_word(rng, alphabet, max_degree);
        if alphabet.word_degree(&w) == degree {
            terms.push((w, random_rational(rng)));
        }
    }
    (FreeAlgebraElement::from_terms(terms), degree)
}

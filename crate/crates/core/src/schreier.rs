//! Schreier-type rank and generating-series formulas for subgroups of free
//! groups and subalgebras of free Lie algebras.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// Schreier index formula: the rank of a subgroup of index `index` in a
/// free group of rank `n` is `(n - 1) * index + 1`.
pub fn group_schreier_rank(n: u64, index: u64) -> BigUint {
    assert!(n >= 1 && index >= 1, "rank and index must be >= 1");
    BigUint::from(n - 1) * BigUint::from(index) + BigUint::one()
}

/// Power-series Schreier formula for a subalgebra `K` of the free Lie
/// algebra `L(X)`: a free generating set `Z` of `K` satisfies
/// `H(Z) = (H(X) - 1) E(H(L/K)) + 1`.
///
/// Both inputs must have zero constant term, and `H(L/K)` must have
/// nonnegative coefficients (it counts dimensions of a quotient).
pub fn lie_schreier_series(
    h_x: &TruncatedSeries,
    h_lk: &TruncatedSeries,
) -> Result<TruncatedSeries> {
    if !h_x.coeff(0).is_zero() {
        return Err(Error::InvalidInput(
            "H(X) must have zero constant term".into(),
        ));
    }
    if !h_lk.coeff(0).is_zero() {
        return Err(Error::InvalidInput(
            "H(L/K) must have zero constant term".into(),
        ));
    }
    if !h_lk.is_nonnegative() {
        return Err(Error::InvalidInput(
            "H(L/K) must have nonnegative coefficients".into(),
        ));
    }
    let order = h_x.order().min(h_lk.order());
    let euler = h_lk.euler_transform()?;
    let one = TruncatedSeries::one(order);
    Ok(&(&(h_x - &one) * &euler) + &one)
}

/// Schreier formula from the worked subalgebra example:
/// `rank(K) = 2^odd_codim * (rank(L) - 1) + 1`, where `odd_codim` is the
/// odd codimension `dim (L/K)_-`.
pub fn color_schreier_rank(rank_l: u64, odd_codim: u64) -> BigUint {
    assert!(rank_l >= 1, "rank_l must be >= 1");
    let two_pow =
        BigUint::from(2u32).pow(u32::try_from(odd_codim).expect("odd codimension is desk scale"));
    two_pow * BigUint::from(rank_l - 1) + BigUint::one()
}

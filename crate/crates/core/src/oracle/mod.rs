//! Brute-force exact computer algebra: free color Lie superalgebras are
//! realized inside free associative algebras over the rationals, and every
//! closed formula in the library is independently checkable at desk scale.

pub mod bicharacter;
pub mod free_algebra;
pub mod jacobi;
mod linalg;
pub mod lyndon;
pub mod pbw;
pub mod span;

pub use bicharacter::{BicharacterReport, BicharacterTable, FiniteAbelianGroup, GroupElement};
pub use free_algebra::{super_commutator, FreeAlgebraElement, Word};
pub use jacobi::{verify_jacobi, JacobiFailure, JacobiReport};
pub use lyndon::{lyndon_count, lyndon_count_with_cap};
pub use pbw::pbw_count;
pub use span::{
    lie_span_dimension, subalgebra_span_dimension, LieBasis, SubalgebraBasis, DEFAULT_WORD_CAP,
};

/// Validates a bicharacter table against the axioms and reports the parity
/// decomposition of the group.
pub fn validate_bicharacter(table: &BicharacterTable) -> crate::error::Result<BicharacterReport> {
    table.validate()
}

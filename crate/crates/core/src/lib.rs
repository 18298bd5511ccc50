//! Exact-arithmetic computations around free color Lie superalgebras:
//! Hilbert-Poincaré series, Witt-formula dimensions, Schreier-type
//! generating-set series, (restricted) enveloping-algebra series, and
//! growth-rate estimation.
//!
//! Every closed formula has an independent brute-force counterpart in
//! [`oracle`] that realizes the algebras inside free associative algebras
//! over the rationals, so the two routes check each other at small degree.
//!
//! All values are immutable and the operations are pure functions, so
//! everything here is safe to share and send across threads.

pub mod envelope;
pub mod error;
pub mod growth;
pub mod oracle;
pub mod schreier;
pub mod series;
pub mod witt;

pub use envelope::{
    direct_sum_series, enveloping_series, restricted_enveloping_series, tensor_series,
    SignedDimensionSequence,
};
pub use error::{Error, Result};
pub use growth::{
    enveloping_growth_matches, growth_function, growth_rate_estimate, lambda_differences,
    EstimateMethod, GrowthClassification, GrowthEstimate, GrowthMatchReport,
};
pub use oracle::{
    lie_span_dimension, lyndon_count, pbw_count, subalgebra_span_dimension, super_commutator,
    validate_bicharacter, verify_jacobi, BicharacterReport, BicharacterTable, FiniteAbelianGroup,
    FreeAlgebraElement, GroupElement, JacobiReport, LieBasis, SubalgebraBasis,
};
pub use schreier::{color_schreier_rank, group_schreier_rank, lie_schreier_series};
pub use series::{restricted_euler_transform, super_euler_transform, TruncatedSeries};
pub use witt::{
    alphabet_series, color_witt_dim, color_witt_series, free_lie_series_from_alphabet, moebius,
    witt_dim, witt_series, Generator, GradedAlphabet,
};

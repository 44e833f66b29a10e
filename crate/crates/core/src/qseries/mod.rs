//! Exact q-series: Gaussian binomials, Pochhammer inverses, truncated
//! characters and the gap-two partition identity.

mod characters;
mod identity;
mod partitions;
mod poly;
mod series;

pub use characters::{ch_f, ch_l01, ch_l11, ch_standard, ch_w, limit_stabilization_check, StabilizationReport};
pub use identity::{
    appendix_a_identity_check, fibonacci_polynomial_character, gaussian_stabilization, IdentityReport, Mismatch,
    StabilizationPoint,
};
pub use partitions::restricted_partition_count;
pub use poly::{gaussian_binomial, pochhammer_inv, PochhammerOrder, QPolynomial};
pub use series::{BivariateSeries, Window};

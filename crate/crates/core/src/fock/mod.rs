//! The semi-infinite wedge space with its charge and energy gradings.

mod clifford;
mod elementary;
mod enumerate;
mod vector;

pub use clifford::{psi, psi_star};
pub use elementary::{minimal_energy, normalize, ElementaryVector, IndexOccupancy, Normalized};
pub use enumerate::{enumerate_elementary, partitions};
pub use vector::{rational_string, FockVector};

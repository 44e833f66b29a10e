//! Level-one action of `a_∞` and of affine `sl_2` on the wedge space.

mod action;
mod checks;
mod symbols;

pub use action::{apply_E, apply_e, apply_f, apply_h, apply_lambda, apply_mode, h0_weight, DiagonalFamily, Operator};
pub use checks::{
    e_mode_ceiling, esq_mode_sum, lambda_even_kernel_check, sector_vacuum, vacuum_vector,
    verify_relation, verify_relation_with, Fermionic, RelationCheck, RelationFailure,
    Representation, Sector,
};
pub use symbols::{bracket, cocycle, BracketResult, MatrixSymbol};

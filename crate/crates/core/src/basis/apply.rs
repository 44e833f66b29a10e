use crate::affine::{apply_e, sector_vacuum, Sector};
use crate::error::{FockError, Result};
use crate::fock::{ElementaryVector, FockVector};
use crate::scalar::Scalar;

use super::monomial::FibonacciMonomial;

fn check_bound(indices: &[i64], bound: i64) -> Result<()> {
    match indices.iter().find(|&&i| i > bound) {
        Some(i) => Err(FockError::InvalidInput(format!(
            "mode e({i}) exceeds the sector bound {bound}"
        ))),
        None => Ok(()),
    }
}

/// Applies `e_{i_1} ... e_{i_k}` (rightmost, i.e. largest index, first) to
/// the extremal vector `sector_vacuum(sector, t)`.
pub fn apply_indices_in<S: Scalar>(indices: &[i64], sector: Sector, t: i64) -> Result<FockVector<S>> {
    check_bound(indices, sector.head_bound(t))?;
    let mut v = FockVector::basis(sector_vacuum(sector, t));
    for &i in indices.iter().rev() {
        v = apply_e(i, &v);
        if v.is_zero() {
            break;
        }
    }
    Ok(v)
}

pub fn apply_monomial_in<S: Scalar>(mon: &FibonacciMonomial, sector: Sector, t: i64) -> Result<FockVector<S>> {
    apply_indices_in(mon.indices(), sector, t)
}

/// `mon |j√2⟩`.
pub fn apply_monomial<S: Scalar>(mon: &FibonacciMonomial, j: i64) -> Result<FockVector<S>> {
    apply_monomial_in(mon, Sector::Zero, j)
}

/// The wedge obtained by letting the largest index act on the highest
/// occupied even slot `-2t`, the next one on `-2t - 2`, and so on.
///
/// Fails with [`FockError::IndexClash`] when two modes land on the same slot,
/// which is what happens for neighbouring indices.
pub fn leading_vector_of(indices: &[i64], sector: Sector, t: i64) -> Result<ElementaryVector> {
    check_bound(indices, sector.head_bound(t))?;
    let mut w = sector_vacuum(sector, t);
    for (p, &i) in indices.iter().rev().enumerate() {
        let source = -2 * t - 2 * p as i64;
        let target = source - 2 * i - 1;
        w = w
            .occupancy()
            .move_index(source, target)
            .map(|(next, _)| next)
            .ok_or(FockError::IndexClash(target))?;
    }
    Ok(w)
}

pub fn leading_vector_in(mon: &FibonacciMonomial, sector: Sector, t: i64) -> Result<ElementaryVector> {
    leading_vector_of(mon.indices(), sector, t)
}

/// Leading wedge `Q(mon)` on `|j√2⟩`.
pub fn leading_vector(mon: &FibonacciMonomial, j: i64) -> Result<ElementaryVector> {
    leading_vector_in(mon, Sector::Zero, j)
}

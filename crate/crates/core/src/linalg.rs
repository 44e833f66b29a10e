//! Fraction-free Gaussian elimination over an exact domain.

use std::collections::{BTreeMap, BTreeSet};

use crate::fock::{ElementaryVector, FockVector};
use crate::scalar::ExactDomain;

/// Rank of a dense matrix by Bareiss elimination.
///
/// Every division is exact, so integer inputs never leave the integers.
pub fn rank<S: ExactDomain>(mut m: Vec<Vec<S>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = S::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                row[j] = (pivot.clone() * row[j].clone() - lead.clone() * pivot_row[j].clone()) / prev.clone();
            }
            row[c] = S::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Dense coefficient matrix of `vectors` over the union of their supports,
/// columns in wedge order.
pub fn coefficient_matrix<S: ExactDomain>(
    vectors: &[FockVector<S>],
) -> (Vec<ElementaryVector>, Vec<Vec<S>>) {
    let columns: Vec<ElementaryVector> = vectors
        .iter()
        .flat_map(|v| v.support().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let index: BTreeMap<&ElementaryVector, usize> =
        columns.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let rows = vectors
        .iter()
        .map(|v| {
            let mut row = vec![S::zero(); columns.len()];
            for (w, c) in v.iter() {
                row[index[w]] = c.clone();
            }
            row
        })
        .collect();
    (columns, rows)
}

/// Dimension of the span of `vectors`.
pub fn span_rank<S: ExactDomain>(vectors: &[FockVector<S>]) -> usize {
    let (_, rows) = coefficient_matrix(vectors);
    rank(rows)
}

/// Dimension of `{x ∈ span(domain) : f(x) = 0}` for a linear map given by its
/// images `images[i] = f(domain[i])`, the domain being linearly independent.
pub fn kernel_dimension<S: ExactDomain>(images: &[FockVector<S>]) -> usize {
    images.len() - span_rank(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(ints(&[])), 0);
        assert_eq!(rank(ints(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(ints(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(ints(&[&[0, 1, 2], &[0, 2, 5], &[0, 3, 7]])), 2);
        assert_eq!(rank(ints(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]])), 3);
    }

    #[test]
    fn skipped_pivot_columns_stay_exact() {
        // first column empty below the top; division by previous pivots must stay integral
        let m = ints(&[&[2, 4, 6, 8], &[0, 0, 3, 9], &[1, 2, 4, 7], &[3, 6, 10, 20]]);
        assert_eq!(rank(m), 3);
    }
}

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::affine::Sector;
use crate::error::Result;
use crate::fock::FockVector;
use crate::linalg::span_rank;

use super::apply::{apply_indices_in, apply_monomial_in, leading_vector_in};
use super::monomial::{enumerate_fibonacci, enumerate_unrestricted, BidegreeCell};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceReport {
    pub cell: BidegreeCell,
    pub count: usize,
    pub rank: usize,
    /// Every leading coefficient is nonzero, the leading vectors are pairwise
    /// distinct and no smaller monomial reaches a larger one's leading vector.
    pub triangular: bool,
}

impl IndependenceReport {
    pub fn holds(&self) -> bool {
        self.triangular && self.count == self.rank
    }
}

/// Exact rank of the Fibonacci monomials of a cell applied to the extremal
/// vector, together with the triangularity of the leading-vector matrix.
pub fn independence_check(cell: &BidegreeCell) -> Result<IndependenceReport> {
    let monomials = enumerate_fibonacci(cell);
    let images: Vec<FockVector<BigInt>> = monomials
        .iter()
        .map(|m| apply_monomial_in(m, cell.sector, cell.j))
        .collect::<Result<_>>()?;
    let leading = monomials
        .iter()
        .map(|m| leading_vector_in(m, cell.sector, cell.j))
        .collect::<Result<Vec<_>>>()?;

    let injective = leading.iter().collect::<BTreeSet<_>>().len() == leading.len();
    let diagonal = images.iter().zip(&leading).all(|(v, q)| !v.coefficient_of(q).is_zero());
    // monomials are ascending, so row r may only touch leading vectors of rows ≤ r
    let upper = images
        .iter()
        .enumerate()
        .all(|(r, v)| leading[r + 1..].iter().all(|q| v.coefficient_of(q).is_zero()));

    Ok(IndependenceReport {
        cell: *cell,
        count: monomials.len(),
        rank: span_rank(&images),
        triangular: injective && diagonal && upper,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanningReport {
    pub cell: BidegreeCell,
    pub unrestricted_count: usize,
    pub unrestricted_rank: usize,
    pub fibonacci_count: usize,
    pub fibonacci_rank: usize,
}

impl SpanningReport {
    pub fn holds(&self) -> bool {
        self.unrestricted_rank == self.fibonacci_rank
    }
}

/// Compares the span of every commutative monomial of the cell with the span
/// of its Fibonacci monomials.
pub fn spanning_report(cell: &BidegreeCell) -> Result<SpanningReport> {
    let all: Vec<FockVector<BigInt>> = enumerate_unrestricted(cell)
        .iter()
        .map(|ix| apply_indices_in(ix, cell.sector, cell.j))
        .collect::<Result<_>>()?;
    let fib: Vec<FockVector<BigInt>> = enumerate_fibonacci(cell)
        .iter()
        .map(|m| apply_monomial_in(m, cell.sector, cell.j))
        .collect::<Result<_>>()?;
    Ok(SpanningReport {
        cell: *cell,
        unrestricted_count: all.len(),
        unrestricted_rank: span_rank(&all),
        fibonacci_count: fib.len(),
        fibonacci_rank: span_rank(&fib),
    })
}

/// Whether the Fibonacci monomials span everything the free monomials reach
/// in bidegree `(n, m)` on `|j√2⟩`.
pub fn spanning_check(n: usize, m: i64, j: i64) -> Result<bool> {
    spanning_report(&BidegreeCell::new(n, m, j)).map(|r| r.holds())
}

/// The cells `(n, m)` of a sector and level with `n ≤ max_n`, `m ≤ max_m`
/// holding at least one Fibonacci monomial.
pub fn nonempty_cells(sector: Sector, j: i64, max_n: usize, max_m: i64) -> Vec<BidegreeCell> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let lo = BidegreeCell::in_sector(n, 0, j, sector).min_deg_q();
        for m in lo..=max_m {
            let cell = BidegreeCell::in_sector(n, m, j, sector);
            if !enumerate_fibonacci(&cell).is_empty() {
                out.push(cell);
            }
        }
    }
    out
}

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::affine::Sector;
use crate::error::{FockError, Result};

/// `e_{i_1} e_{i_2} ... e_{i_k}` with `i_1 < i_2 < ... < i_k` and every gap
/// at least two.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct FibonacciMonomial {
    indices: Vec<i64>,
}

impl FibonacciMonomial {
    pub fn new(indices: Vec<i64>) -> Result<Self> {
        if let Some(w) = indices.windows(2).find(|w| w[1] - w[0] < 2) {
            return Err(FockError::InvalidInput(format!(
                "indices {} and {} violate the gap condition",
                w[0], w[1]
            )));
        }
        Ok(Self { indices })
    }

    pub fn empty() -> Self {
        Self { indices: Vec::new() }
    }

    pub fn indices(&self) -> &[i64] {
        &self.indices
    }

    pub fn deg_z(&self) -> usize {
        self.indices.len()
    }

    pub fn deg_q(&self) -> i64 {
        -self.indices.iter().sum::<i64>()
    }

    pub fn max_index(&self) -> Option<i64> {
        self.indices.last().copied()
    }
}

impl fmt::Display for FibonacciMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.indices.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.indices.iter().map(|i| format!("e({i})")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Monomials of `deg_z = n`, `deg_q = m` acting on the level-`j` extremal
/// vector of a sector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BidegreeCell {
    pub n: usize,
    pub m: i64,
    pub j: i64,
    pub sector: Sector,
}

impl BidegreeCell {
    pub fn new(n: usize, m: i64, j: i64) -> Self {
        Self { n, m, j, sector: Sector::Zero }
    }

    pub fn in_sector(n: usize, m: i64, j: i64, sector: Sector) -> Self {
        Self { n, m, j, sector }
    }

    /// Largest admissible index.
    pub fn index_bound(&self) -> i64 {
        self.sector.head_bound(self.j)
    }

    /// Smallest `deg_q` reachable with `n` admissible indices.
    pub fn min_deg_q(&self) -> i64 {
        let n = self.n as i64;
        -(n * self.index_bound() - n * (n - 1))
    }
}

/// Increasing sequences of `len` integers `≤ max`, consecutive gaps
/// `≥ min_gap`, summing to `sum`.
pub fn gap_sequences(len: usize, max: i64, sum: i64, min_gap: i64) -> Vec<Vec<i64>> {
    fn go(len: i64, max: i64, sum: i64, gap: i64, suffix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if len == 0 {
            if sum == 0 {
                let mut v = suffix.clone();
                v.reverse();
                out.push(v);
            }
            return;
        }
        // with `a` as the largest entry the sum is at most len*a - gap*len(len-1)/2
        let slack = gap * len * (len - 1) / 2;
        let lowest = (sum + slack).div_euclid(len) + ((sum + slack).rem_euclid(len) != 0) as i64;
        let mut a = max;
        while a >= lowest {
            suffix.push(a);
            go(len - 1, a - gap, sum - a, gap, suffix, out);
            suffix.pop();
            a -= 1;
        }
    }
    let mut out = Vec::new();
    go(len as i64, max, sum, min_gap, &mut Vec::new(), &mut out);
    out
}

/// Reflected lexicographic order: the partitions `(-i_1, ..., -i_k)` are
/// compared part by part starting from the smallest part, and the monomial
/// with the larger part at the first difference is the larger one.
pub fn reflected_lex_compare(a: &FibonacciMonomial, b: &FibonacciMonomial) -> Result<Ordering> {
    if a.deg_z() != b.deg_z() || a.deg_q() != b.deg_q() {
        return Err(FockError::InvalidInput(format!(
            "{a} and {b} lie in different bidegree cells"
        )));
    }
    let ord = a
        .indices
        .iter()
        .rev()
        .zip(b.indices.iter().rev())
        .map(|(x, y)| y.cmp(x))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal);
    Ok(ord)
}

/// All Fibonacci monomials of the cell, ascending in reflected lex order.
pub fn enumerate_fibonacci(cell: &BidegreeCell) -> Vec<FibonacciMonomial> {
    let mut out: Vec<FibonacciMonomial> = gap_sequences(cell.n, cell.index_bound(), -cell.m, 2)
        .into_iter()
        .map(|indices| FibonacciMonomial { indices })
        .collect();
    out.sort_by(|a, b| reflected_lex_compare(a, b).expect("same cell"));
    out
}

/// Weakly increasing index lists (repeats allowed) of the cell: every
/// commutative monomial in the admissible modes.
pub fn enumerate_unrestricted(cell: &BidegreeCell) -> Vec<Vec<i64>> {
    gap_sequences(cell.n, cell.index_bound(), -cell.m, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mon(v: &[i64]) -> FibonacciMonomial {
        FibonacciMonomial::new(v.to_vec()).unwrap()
    }

    #[test]
    fn gap_condition_enforced() {
        assert!(FibonacciMonomial::new(vec![-3, -2]).is_err());
        assert!(FibonacciMonomial::new(vec![-3, -1]).is_ok());
    }

    #[test]
    fn small_cells() {
        assert_eq!(enumerate_fibonacci(&BidegreeCell::new(2, 4, 0)), vec![mon(&[-3, -1])]);
        let two = enumerate_fibonacci(&BidegreeCell::new(2, 6, 0));
        assert_eq!(two.len(), 2);
        assert!(two.contains(&mon(&[-5, -1])) && two.contains(&mon(&[-4, -2])));
        assert_eq!(enumerate_fibonacci(&BidegreeCell::new(0, 0, 3)), vec![FibonacciMonomial::empty()]);
        assert!(enumerate_fibonacci(&BidegreeCell::new(2, 3, 0)).is_empty());
    }

    #[test]
    fn unrestricted_includes_repeats() {
        assert_eq!(enumerate_unrestricted(&BidegreeCell::new(2, 2, 0)), vec![vec![-1, -1]]);
        assert_eq!(enumerate_unrestricted(&BidegreeCell::new(2, 4, 0)).len(), 2);
    }

    #[test]
    fn reflected_lex_basics() {
        let a = mon(&[-5, -1]);
        let b = mon(&[-4, -2]);
        assert_eq!(reflected_lex_compare(&a, &a).unwrap(), Ordering::Equal);
        assert_eq!(reflected_lex_compare(&a, &b).unwrap(), Ordering::Less);
        assert_eq!(reflected_lex_compare(&b, &a).unwrap(), Ordering::Greater);
        assert!(reflected_lex_compare(&a, &mon(&[-3, -1])).is_err());
    }

    #[test]
    fn min_deg_q() {
        assert_eq!(BidegreeCell::new(3, 0, 0).min_deg_q(), 9);
        // e(-5) e(-3)
        assert_eq!(BidegreeCell::new(2, 0, 1).min_deg_q(), 8);
    }
}

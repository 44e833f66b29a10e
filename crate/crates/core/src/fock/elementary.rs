//! Elementary wedges `ψ_{k0} ∧ ψ_{k1} ∧ ...` encoded as (charge, partition).
//!
//! With charge `m` and partition `λ` the occupied indices are
//! `k_i = m - i + λ_{i+1}` (λ padded with zeros), so everything at or below
//! `m - len(λ)` is occupied and only `len(λ)` indices sit above that sea.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{FockError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ElementaryVector {
    charge: i64,
    partition: Vec<u32>,
}

impl ElementaryVector {
    pub fn new(charge: i64, partition: Vec<u32>) -> Result<Self> {
        if partition.iter().any(|&p| p == 0) {
            return Err(FockError::InvalidInput(
                "partition parts must be positive".into(),
            ));
        }
        if partition.windows(2).any(|w| w[0] < w[1]) {
            return Err(FockError::InvalidInput(
                "partition must be weakly decreasing".into(),
            ));
        }
        Ok(Self { charge, partition })
    }

    /// The Dirac sea `ψ_m ∧ ψ_{m-1} ∧ ...` of the given charge.
    pub fn vacuum(charge: i64) -> Self {
        Self {
            charge,
            partition: Vec::new(),
        }
    }

    pub fn charge(&self) -> i64 {
        self.charge
    }

    pub fn partition(&self) -> &[u32] {
        &self.partition
    }

    pub fn partition_size(&self) -> i64 {
        self.partition.iter().map(|&p| p as i64).sum()
    }

    /// `m(m+1)/2 + Σ (k_i + i - m)`.
    pub fn energy(&self) -> i64 {
        minimal_energy(self.charge) + self.partition_size()
    }

    /// Indices strictly above the sea, in decreasing order.
    pub fn head(&self) -> Vec<i64> {
        self.partition
            .iter()
            .enumerate()
            .map(|(i, &p)| self.charge - i as i64 + p as i64)
            .collect()
    }

    /// Every index at or below this one is occupied.
    pub fn sea_boundary(&self) -> i64 {
        self.charge - self.partition.len() as i64
    }

    pub fn occupancy(&self) -> IndexOccupancy {
        IndexOccupancy {
            head: self.head(),
            sea: self.sea_boundary(),
        }
    }

    /// The first `len` indices `k_0 > k_1 > ...` of the wedge.
    pub fn leading_indices(&self, len: usize) -> Vec<i64> {
        (0..len)
            .map(|i| {
                let part = self.partition.get(i).copied().unwrap_or(0) as i64;
                self.charge - i as i64 + part
            })
            .collect()
    }

    pub fn is_occupied(&self, index: i64) -> bool {
        index <= self.sea_boundary() || self.head().contains(&index)
    }
}

/// Lowest energy in the charge-`m` sector.
pub fn minimal_energy(charge: i64) -> i64 {
    charge * (charge + 1) / 2
}

impl fmt::Display for ElementaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = self.head();
        for k in &head {
            write!(f, "ψ{k}∧")?;
        }
        write!(f, "[sea ≤ {}]", self.sea_boundary())
    }
}

/// Occupied index set of a wedge: a finite head above a fully occupied sea.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexOccupancy {
    /// Strictly decreasing, every entry `> sea`.
    pub head: Vec<i64>,
    pub sea: i64,
}

impl IndexOccupancy {
    pub fn new(mut head: Vec<i64>, sea: i64) -> Result<Self> {
        head.sort_unstable_by(|a, b| b.cmp(a));
        if head.windows(2).any(|w| w[0] == w[1]) {
            return Err(FockError::InvalidInput("repeated head index".into()));
        }
        if head.last().is_some_and(|&h| h <= sea) {
            return Err(FockError::InvalidInput(format!(
                "head index at or below the sea boundary {sea}"
            )));
        }
        Ok(Self { head, sea })
    }

    pub fn is_occupied(&self, index: i64) -> bool {
        index <= self.sea || self.head.binary_search_by(|h| index.cmp(h)).is_ok()
    }

    pub fn max_occupied(&self) -> i64 {
        self.head.first().copied().unwrap_or(self.sea)
    }

    /// Number of occupied indices `k` with `lo < k < hi`.
    pub fn count_between(&self, lo: i64, hi: i64) -> usize {
        if hi <= lo + 1 {
            return 0;
        }
        let sea_part = (hi.min(self.sea + 1) - lo - 1).max(0) as usize;
        let head_part = self.head.iter().filter(|&&h| h > lo && h < hi).count();
        sea_part + head_part
    }

    /// Canonical (charge, partition) form, absorbing head indices contiguous
    /// with the sea.
    pub fn to_elementary(&self) -> ElementaryVector {
        let mut sea = self.sea;
        let mut len = self.head.len();
        while len > 0 && self.head[len - 1] == sea + 1 {
            sea += 1;
            len -= 1;
        }
        let charge = sea + len as i64;
        let partition = self.head[..len]
            .iter()
            .enumerate()
            .map(|(i, &k)| (k - charge + i as i64) as u32)
            .collect();
        ElementaryVector { charge, partition }
    }

    /// Moves the occupied index `from` to the empty slot `to`.
    ///
    /// Returns the resulting wedge and whether the move carries a minus sign,
    /// which is the parity of the occupied indices strictly between the two.
    /// `None` when `from` is empty or `to` is already filled.
    pub fn move_index(&self, from: i64, to: i64) -> Option<(ElementaryVector, bool)> {
        if from == to || !self.is_occupied(from) || self.is_occupied(to) {
            return None;
        }
        let between = self.count_between(from.min(to), from.max(to));
        let mut head: Vec<i64> = Vec::with_capacity(self.head.len() + 2);
        let mut sea = self.sea;
        if from <= sea {
            head.extend(from + 1..=sea);
            sea = from - 1;
        }
        head.extend(self.head.iter().copied().filter(|&h| h != from));
        head.push(to);
        head.sort_unstable_by(|a, b| b.cmp(a));
        let occ = IndexOccupancy { head, sea };
        Some((occ.to_elementary(), between % 2 == 1))
    }
}

/// Result of [`normalize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Normalized {
    /// Canonical wedge and `true` when sorting needed an odd permutation.
    Wedge {
        vector: ElementaryVector,
        negative: bool,
    },
    /// A repeated index: the wedge is zero.
    Zero,
}

/// Canonicalizes `indices[0] ∧ indices[1] ∧ ... ∧ (everything ≤ sea_start)`.
pub fn normalize(indices: &[i64], sea_start: i64) -> Result<Normalized> {
    if let Some(&bad) = indices.iter().find(|&&i| i <= sea_start) {
        return Err(FockError::InvalidInput(format!(
            "index {bad} repeats a sea index (sea starts at {sea_start})"
        )));
    }
    let mut inversions = 0usize;
    for (a, &x) in indices.iter().enumerate() {
        for &y in &indices[a + 1..] {
            if x == y {
                return Ok(Normalized::Zero);
            }
            if x < y {
                inversions += 1;
            }
        }
    }
    let occ = IndexOccupancy::new(indices.to_vec(), sea_start)?;
    Ok(Normalized::Wedge {
        vector: occ.to_elementary(),
        negative: inversions % 2 == 1,
    })
}

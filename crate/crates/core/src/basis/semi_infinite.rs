use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::affine::{apply_lambda, h0_weight, lambda_even_kernel_check, sector_vacuum, Sector};
use crate::error::{FockError, Result};
use crate::fock::{enumerate_elementary, minimal_energy, FockVector};
use crate::linalg::{kernel_dimension, span_rank};
use crate::qseries::{ch_standard, Window};

use super::apply::apply_monomial_in;
use super::monomial::{gap_sequences, FibonacciMonomial};

/// `head · e_a e_{a+2} e_{a+4} ...`, the tail being the extremal vector of
/// level `tail` in its sector (`a` is [`Sector::tail_start`]).
///
/// Canonical form: the head never ends on `a - 2`, so the tail is as long as
/// possible.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SemiInfiniteMonomial {
    sector: Sector,
    tail: i64,
    head: FibonacciMonomial,
}

impl SemiInfiniteMonomial {
    /// Builds the canonical form, absorbing head indices into the tail.
    pub fn new(sector: Sector, tail: i64, head: FibonacciMonomial) -> Result<Self> {
        let mut indices = head.indices().to_vec();
        let mut tail = tail;
        if let Some(&top) = indices.last() {
            if top > sector.head_bound(tail) {
                return Err(FockError::InvalidInput(format!(
                    "head index {top} collides with the tail starting at {}",
                    sector.tail_start(tail)
                )));
            }
        }
        while indices.last() == Some(&sector.head_bound(tail)) {
            indices.pop();
            tail += 1;
        }
        Ok(Self {
            sector,
            tail,
            head: FibonacciMonomial::new(indices)?,
        })
    }

    pub fn sector(&self) -> Sector {
        self.sector
    }

    pub fn tail(&self) -> i64 {
        self.tail
    }

    pub fn head(&self) -> &FibonacciMonomial {
        &self.head
    }

    /// `h_0 = 2 weight + sector`.
    pub fn weight(&self) -> i64 {
        self.tail + self.head.deg_z() as i64
    }

    pub fn energy(&self) -> i64 {
        let base = sector_vacuum(self.sector, self.tail).energy();
        base + 2 * self.head.deg_q() - self.head.deg_z() as i64
    }

    /// The first `len` indices of the full sequence.
    pub fn indices(&self, len: usize) -> Vec<i64> {
        let a = self.sector.tail_start(self.tail);
        self.head
            .indices()
            .iter()
            .copied()
            .chain((0..).map(|k| a + 2 * k))
            .take(len)
            .collect()
    }

    pub fn vector<S: crate::Scalar>(&self) -> FockVector<S> {
        apply_monomial_in(&self.head, self.sector, self.tail).expect("canonical head respects the tail bound")
    }
}

impl fmt::Display for SemiInfiniteMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.sector.tail_start(self.tail);
        if !self.head.indices().is_empty() {
            write!(f, "{} ", self.head)?;
        }
        write!(f, "e({a}) e({}) ...", a + 2)
    }
}

/// Canonical semi-infinite monomials of `h_0` weight `2 weight + sector` and
/// fermionic energy `energy`.
///
/// Measured against the extremal vector of the same weight, a head of length
/// `ℓ` costs at least `2ℓ` units of energy, which bounds the search.
pub fn enumerate_semi_infinite(weight: i64, energy: i64, sector: Sector) -> Vec<SemiInfiniteMonomial> {
    let excess = energy - sector_vacuum(sector, weight).energy();
    if excess < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for len in 0..=excess / 2 {
        let tail = weight - len;
        let base = sector_vacuum(sector, tail).energy();
        // energy = base - 2 Σ i - len
        let twice = energy - base + len;
        if twice.rem_euclid(2) != 0 {
            continue;
        }
        let max = sector.head_bound(tail) - 1;
        for indices in gap_sequences(len as usize, max, -twice / 2, 2) {
            out.push(SemiInfiniteMonomial {
                sector,
                tail,
                head: FibonacciMonomial::new(indices).expect("gap sequences satisfy the gap condition"),
            });
        }
    }
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlobalCell {
    pub sector: Sector,
    pub weight: i64,
    pub energy: i64,
    /// Number of canonical semi-infinite monomials.
    pub count: usize,
    /// Rank of their images.
    pub rank: usize,
    /// Dimension of `∩_k ker Λ_{2k}` on the full wedge weight space.
    pub kernel_dim: usize,
    pub in_kernel: bool,
    #[serde(serialize_with = "crate::basis::serialize_bigint")]
    pub character_coeff: BigInt,
}

impl GlobalCell {
    pub fn holds(&self) -> bool {
        let c = BigInt::from(self.count);
        self.in_kernel && self.rank == self.count && self.kernel_dim == self.count && self.character_coeff == c
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlobalReport {
    pub sector: Sector,
    pub max_energy: i64,
    pub holds: bool,
    pub cells: Vec<GlobalCell>,
}

/// `q`-power of the character term with `z^{weight}` seen at fermionic
/// energy `energy`, if any.
pub fn character_degree(sector: Sector, weight: i64, energy: i64) -> Option<i64> {
    let twice = energy - sector.index() + weight;
    (twice.rem_euclid(2) == 0).then_some(twice / 2)
}

/// Sweeps every `(weight, energy)` with `energy ≤ max_energy` in the sector,
/// comparing the semi-infinite monomials with the even-`Λ` kernel and the
/// character.
pub fn global_basis_check(max_energy: i64, sector: Sector) -> GlobalReport {
    let min_energy = minimal_energy(sector.charge());
    let mut cells = Vec::new();
    for energy in min_energy..=max_energy {
        let mut by_weight: BTreeMap<i64, Vec<_>> = BTreeMap::new();
        for w in enumerate_elementary(sector.charge(), energy) {
            by_weight.entry((h0_weight(&w) - sector.index()).div_euclid(2)).or_default().push(w);
        }
        let k_max = (energy - min_energy) / 2;
        for (weight, space) in by_weight {
            let constraint: Vec<FockVector<BigInt>> = space
                .into_iter()
                .map(|w| {
                    let v = FockVector::basis(w);
                    (1..=k_max).fold(FockVector::zero(), |acc, k| acc + apply_lambda(2 * k, &v))
                })
                .collect();
            let monomials = enumerate_semi_infinite(weight, energy, sector);
            let images: Vec<FockVector<BigInt>> = monomials.iter().map(|m| m.vector()).collect();
            let character_coeff = character_degree(sector, weight, energy)
                .map(|q| {
                    let window = Window::new(weight, weight, q.max(0));
                    ch_standard(sector, window).coeff(weight, q)
                })
                .unwrap_or_default();
            cells.push(GlobalCell {
                sector,
                weight,
                energy,
                count: monomials.len(),
                rank: span_rank(&images),
                kernel_dim: kernel_dimension(&constraint),
                in_kernel: images.iter().all(|v| lambda_even_kernel_check(v, k_max)),
                character_coeff,
            });
        }
    }
    cells.sort_by_key(|c| (c.energy, c.weight));
    GlobalReport {
        sector,
        max_energy,
        holds: cells.iter().all(GlobalCell::holds),
        cells,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_absorption() {
        let m = SemiInfiniteMonomial::new(Sector::Zero, 0, FibonacciMonomial::new(vec![-1]).unwrap()).unwrap();
        assert_eq!(m.tail(), 1);
        assert!(m.head().indices().is_empty());
        let m = SemiInfiniteMonomial::new(Sector::Zero, 0, FibonacciMonomial::new(vec![-5, -3, -1]).unwrap()).unwrap();
        assert_eq!(m.tail(), 3);
        let m = SemiInfiniteMonomial::new(Sector::Zero, 0, FibonacciMonomial::new(vec![-4, -1]).unwrap()).unwrap();
        assert_eq!((m.tail(), m.head().indices()), (1, &[-4][..]));
        assert!(SemiInfiniteMonomial::new(Sector::Zero, 0, FibonacciMonomial::new(vec![0]).unwrap()).is_err());
    }

    #[test]
    fn small_enumerations() {
        let vac = enumerate_semi_infinite(0, 0, Sector::Zero);
        assert_eq!(vac.len(), 1);
        assert_eq!(vac[0].tail(), 0);
        let one = enumerate_semi_infinite(1, 1, Sector::Zero);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].tail(), 1);
        assert!(one[0].head().indices().is_empty());
    }

    #[test]
    fn energies_match_vectors() {
        for sector in [Sector::Zero, Sector::One] {
            for energy in 0..7 {
                for weight in -3..=3 {
                    for m in enumerate_semi_infinite(weight, energy, sector) {
                        assert_eq!(m.weight(), weight);
                        assert_eq!(m.energy(), energy);
                        let v: FockVector<BigInt> = m.vector();
                        assert_eq!(v.bidegree().map(|(_, d)| d), Some(energy), "{m}");
                    }
                }
            }
        }
    }

    #[test]
    fn bottom_cells() {
        let r = global_basis_check(0, Sector::Zero);
        assert_eq!(r.cells.len(), 1);
        let c = &r.cells[0];
        assert_eq!((c.count, c.rank, c.kernel_dim), (1, 1, 1));
        assert!(r.holds);
    }
}

use serde::Serialize;

use super::action::{apply_e, apply_lambda, apply_mode};
use super::symbols::{bracket, MatrixSymbol};
use crate::error::Result;
use crate::fock::{ElementaryVector, FockVector, IndexOccupancy};
use crate::scalar::Scalar;
use crate::Coeff;

/// Something that turns symbols into operators on the wedge space.
pub trait Representation<S: Scalar> {
    fn act(&self, sym: &MatrixSymbol, v: &FockVector<S>) -> FockVector<S>;
}

/// The fermionic realization of this crate.
#[derive(Clone, Copy, Debug, Default)]
pub struct Fermionic;

impl<S: Scalar> Representation<S> for Fermionic {
    fn act(&self, sym: &MatrixSymbol, v: &FockVector<S>) -> FockVector<S> {
        apply_mode(sym, v)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationCheck<S> {
    pub holds: bool,
    /// `r(a)r(b)v - r(b)r(a)v - r([a,b])v`.
    pub lhs_minus_rhs: FockVector<S>,
}

/// Diagnostic record for a failed relation.
#[derive(Clone, Debug, Serialize)]
pub struct RelationFailure {
    pub a: MatrixSymbol,
    pub b: MatrixSymbol,
    pub vector: ElementaryVector,
    pub lhs_minus_rhs: FockVector<Coeff>,
}

pub fn verify_relation_with<S, R>(
    rep: &R,
    a: &MatrixSymbol,
    b: &MatrixSymbol,
    v: &FockVector<S>,
) -> Result<RelationCheck<S>>
where
    S: Scalar,
    R: Representation<S> + ?Sized,
{
    let br = bracket(a, b)?;
    let av = rep.act(a, v);
    let bv = rep.act(b, v);
    let mut diff = rep.act(a, &bv) - rep.act(b, &av);
    for (c, sym) in &br.terms {
        diff.add_scaled(&rep.act(sym, v), &S::from_int(-c));
    }
    diff.add_scaled(v, &S::from_int(-br.central));
    Ok(RelationCheck {
        holds: diff.is_zero(),
        lhs_minus_rhs: diff,
    })
}

/// Exact check of `[r(a), r(b)] v = r([a, b]) v` with `c ↦ 1`.
pub fn verify_relation<S: Scalar>(
    a: &MatrixSymbol,
    b: &MatrixSymbol,
    v: &FockVector<S>,
) -> Result<RelationCheck<S>> {
    verify_relation_with(&Fermionic, a, b, v)
}

fn max_even_occupied(occ: &IndexOccupancy) -> i64 {
    let sea_even = occ.sea - occ.sea.rem_euclid(2);
    occ.head
        .iter()
        .copied()
        .find(|h| h.rem_euclid(2) == 0)
        .map_or(sea_even, |h| h.max(sea_even))
}

fn lowest_odd_hole(occ: &IndexOccupancy) -> i64 {
    let mut b = occ.sea + 1;
    loop {
        if b.rem_euclid(2) == 1 && !occ.is_occupied(b) {
            return b;
        }
        b += 1;
    }
}

/// Largest `k` such that some `e_k` can act nontrivially on some term of `v`
/// or on anything reached from it by further `e` modes.
///
/// `e_k` moves an even index down by `2k + 1` onto an odd hole; it never
/// creates even occupied indices or odd holes.
pub fn e_mode_ceiling<S: Scalar>(v: &FockVector<S>) -> Option<i64> {
    v.support()
        .map(|w| {
            let occ = w.occupancy();
            (max_even_occupied(&occ) - 1 - lowest_odd_hole(&occ)).div_euclid(2)
        })
        .max()
}

/// `Σ_{a+b=N} e_a e_b v`, the mode-`N` component of `e(z)^2` applied to `v`.
pub fn esq_mode_sum<S: Scalar>(n: i64, v: &FockVector<S>) -> FockVector<S> {
    let Some(ceiling) = e_mode_ceiling(v) else {
        return FockVector::zero();
    };
    let mut out = FockVector::zero();
    for b in (n - ceiling)..=ceiling {
        let ebv = apply_e(b, v);
        if !ebv.is_zero() {
            out = out + apply_e(n - b, &ebv);
        }
    }
    out
}

/// Which standard module a computation lives in: `L_(0,1)` in charge zero or
/// `L_(1,1)` in charge one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "u8")]
pub enum Sector {
    Zero,
    One,
}

impl From<Sector> for u8 {
    fn from(s: Sector) -> u8 {
        s.index() as u8
    }
}

impl Sector {
    pub fn from_index(s: u8) -> Option<Self> {
        match s {
            0 => Some(Self::Zero),
            1 => Some(Self::One),
            _ => None,
        }
    }

    pub fn index(self) -> i64 {
        match self {
            Self::Zero => 0,
            Self::One => 1,
        }
    }

    pub fn charge(self) -> i64 {
        self.index()
    }

    /// First index of the stabilized tail `e_a e_{a+2} e_{a+4} ...` for the
    /// extremal vector at level `t`.
    pub fn tail_start(self, t: i64) -> i64 {
        -2 * t + 1 - self.index()
    }

    /// Head indices applied on the level-`t` extremal vector must not exceed
    /// this bound.
    pub fn head_bound(self, t: i64) -> i64 {
        self.tail_start(t) - 2
    }
}

/// Extremal vector of `h_0` weight `2t + s` in sector `s`: every odd index
/// `≤ 2t - 1 + 2s` and every even index `≤ -2t` is occupied.
pub fn sector_vacuum(sector: Sector, t: i64) -> ElementaryVector {
    let odd_top = 2 * t - 1 + 2 * sector.index();
    let even_top = -2 * t;
    let sea = odd_top.min(even_top);
    let head: Vec<i64> = (sea + 1..=odd_top.max(even_top))
        .rev()
        .filter(|&b| {
            if b.rem_euclid(2) == 1 {
                b <= odd_top
            } else {
                b <= even_top
            }
        })
        .collect();
    IndexOccupancy { head, sea }.to_elementary()
}

/// `|j√2⟩` in charge zero.
pub fn vacuum_vector(j: i64) -> ElementaryVector {
    sector_vacuum(Sector::Zero, j)
}

/// `Λ_{2k} v = 0` for `1 ≤ k ≤ k_max`.
pub fn lambda_even_kernel_check<S: Scalar>(v: &FockVector<S>, k_max: i64) -> bool {
    (1..=k_max).all(|k| apply_lambda(2 * k, v).is_zero())
}

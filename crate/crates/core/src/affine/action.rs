//! Action of matrix units `E_{ij} ↦ :ψ_i ψ*_{-j}:` and of the infinite sums
//! built from them.
//!
//! Every generator handled here is a sum of matrix units along one diagonal,
//! possibly restricted to a parity class of the source index. Such a sum only
//! sees finitely many sources on a given wedge: the target must be empty, so
//! it lies above the sea, and the source must be filled, so it lies at or
//! below the highest occupied index.

use super::symbols::MatrixSymbol;
use crate::fock::{ElementaryVector, FockVector, IndexOccupancy};
use crate::scalar::Scalar;

/// `coeff · Σ_{b ≡ residue (mod modulus)} E_{b+shift, b}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagonalFamily {
    pub shift: i64,
    pub modulus: i64,
    pub residue: i64,
    pub coeff: i64,
}

impl DiagonalFamily {
    fn all(shift: i64, coeff: i64) -> Self {
        Self { shift, modulus: 1, residue: 0, coeff }
    }

    fn parity(residue: i64, shift: i64, coeff: i64) -> Self {
        Self { shift, modulus: 2, residue, coeff }
    }

    fn admits(&self, b: i64) -> bool {
        b.rem_euclid(self.modulus) == self.residue
    }

    fn act<S: Scalar>(&self, w: &ElementaryVector, occ: &IndexOccupancy, c: &S, out: &mut FockVector<S>) {
        if self.shift == 0 {
            // normal-ordered diagonal: Σ (occupied(b) - [b ≤ 0])
            let lo = occ.sea.min(0);
            let hi = occ.max_occupied().max(0);
            let mut total = 0i64;
            for b in lo + 1..=hi {
                if self.admits(b) {
                    total += occ.is_occupied(b) as i64 - (b <= 0) as i64;
                }
            }
            if total != 0 {
                out.add_term(w.clone(), c.clone() * S::from_int(total * self.coeff));
            }
            return;
        }
        let lo = occ.sea + 1 - self.shift;
        for b in lo..=occ.max_occupied() {
            if !self.admits(b) {
                continue;
            }
            if let Some((t, negative)) = occ.move_index(b, b + self.shift) {
                let k = if negative { -self.coeff } else { self.coeff };
                out.add_term(t, c.clone() * S::from_int(k));
            }
        }
    }
}

/// Finite description of a represented generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Operator {
    Identity,
    Unit { i: i64, j: i64 },
    Families(Vec<DiagonalFamily>),
}

impl Operator {
    pub fn of(sym: &MatrixSymbol) -> Self {
        match *sym {
            MatrixSymbol::K => Self::Identity,
            MatrixSymbol::E { i, j } => Self::Unit { i, j },
            MatrixSymbol::Lambda { j } => Self::Families(vec![DiagonalFamily::all(-j, 1)]),
            // Σ_s E_{2s+1, 2s+2k+2}
            MatrixSymbol::RaiseE { k } => Self::Families(vec![DiagonalFamily::parity(0, -2 * k - 1, 1)]),
            // Σ_s E_{2s+2, 2s+2k+1}
            MatrixSymbol::LowerF { k } => Self::Families(vec![DiagonalFamily::parity(1, 1 - 2 * k, 1)]),
            // Σ_s E_{2s+1, 2s+2k+1} - E_{2s+2, 2s+2k+2}
            MatrixSymbol::CartanH { k } => Self::Families(vec![
                DiagonalFamily::parity(1, -2 * k, 1),
                DiagonalFamily::parity(0, -2 * k, -1),
            ]),
        }
    }

    pub fn apply_elementary<S: Scalar>(&self, w: &ElementaryVector, c: &S, out: &mut FockVector<S>) {
        match self {
            Self::Identity => out.add_term(w.clone(), c.clone()),
            Self::Unit { i, j } => {
                let occ = w.occupancy();
                if i == j {
                    let k = occ.is_occupied(*i) as i64 - (*i <= 0) as i64;
                    out.add_term(w.clone(), c.clone() * S::from_int(k));
                } else if let Some((t, negative)) = occ.move_index(*j, *i) {
                    out.add_term(t, if negative { -c.clone() } else { c.clone() });
                }
            }
            Self::Families(fams) => {
                let occ = w.occupancy();
                for f in fams {
                    f.act(w, &occ, c, out);
                }
            }
        }
    }

    pub fn apply<S: Scalar>(&self, v: &FockVector<S>) -> FockVector<S> {
        v.map_linear(|w, out, c| self.apply_elementary(w, c, out))
    }
}

/// `:ψ_i ψ*_{-j}:`.
#[allow(non_snake_case)]
pub fn apply_E<S: Scalar>(i: i64, j: i64, v: &FockVector<S>) -> FockVector<S> {
    Operator::Unit { i, j }.apply(v)
}

/// `Λ_j = Σ_k E_{k, k+j}`.
pub fn apply_lambda<S: Scalar>(j: i64, v: &FockVector<S>) -> FockVector<S> {
    Operator::of(&MatrixSymbol::lambda(j)).apply(v)
}

pub fn apply_e<S: Scalar>(k: i64, v: &FockVector<S>) -> FockVector<S> {
    Operator::of(&MatrixSymbol::e(k)).apply(v)
}

pub fn apply_f<S: Scalar>(k: i64, v: &FockVector<S>) -> FockVector<S> {
    Operator::of(&MatrixSymbol::f(k)).apply(v)
}

pub fn apply_h<S: Scalar>(k: i64, v: &FockVector<S>) -> FockVector<S> {
    Operator::of(&MatrixSymbol::h(k)).apply(v)
}

/// Level one: `K` and `c` act as the identity.
pub fn apply_mode<S: Scalar>(sym: &MatrixSymbol, v: &FockVector<S>) -> FockVector<S> {
    Operator::of(sym).apply(v)
}

/// `h_0` eigenvalue of a wedge: odd filled slots minus even filled slots,
/// both measured against the charge-zero sea.
pub fn h0_weight(w: &ElementaryVector) -> i64 {
    let occ = w.occupancy();
    let lo = occ.sea.min(0);
    let hi = occ.max_occupied().max(0);
    (lo + 1..=hi)
        .map(|b| {
            let d = occ.is_occupied(b) as i64 - (b <= 0) as i64;
            if b.rem_euclid(2) == 1 {
                d
            } else {
                -d
            }
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Coeff;

    fn vac() -> FockVector<Coeff> {
        FockVector::vacuum()
    }

    #[test]
    fn diagonal_units_on_vacuum() {
        assert!(apply_E(0, 0, &vac()).is_zero());
        assert!(apply_E(5, 5, &vac()).is_zero());
        assert!(apply_E(-3, -3, &vac()).is_zero());
        // ψ_{-2} removed: its diagonal unit gives -1
        let hole = FockVector::<Coeff>::basis(ElementaryVector::new(-1, vec![1, 1]).unwrap());
        assert_eq!(apply_E(-2, -2, &hole), hole.scale(&Coeff::from_int(-1)));
    }

    #[test]
    fn lambda_zero_is_charge() {
        for m in -3..=3 {
            let v = FockVector::<Coeff>::basis(ElementaryVector::new(m, vec![2, 1]).unwrap());
            assert_eq!(apply_lambda(0, &v), v.scale(&Coeff::from_int(m)));
        }
    }

    #[test]
    fn h0_formula_matches_operator() {
        for m in -2..=2 {
            for w in crate::fock::enumerate_elementary(m, crate::fock::minimal_energy(m) + 5) {
                let v = FockVector::<Coeff>::basis(w.clone());
                assert_eq!(apply_h(0, &v), v.scale(&Coeff::from_int(h0_weight(&w))));
            }
        }
    }
}

//! Clifford generators on the wedge space: `ψ_i` wedges in `ψ_i` from the
//! left, `ψ*_i` contracts against `ψ_{-i}`. Inserting or removing at 0-based
//! position `p` costs `(-1)^p`.

use super::elementary::{ElementaryVector, IndexOccupancy};
use super::vector::FockVector;
use crate::scalar::Scalar;

fn position(occ: &IndexOccupancy, index: i64) -> usize {
    occ.head.iter().take_while(|&&h| h > index).count()
}

fn insert(w: &ElementaryVector, index: i64) -> Option<(ElementaryVector, bool)> {
    let occ = w.occupancy();
    if occ.is_occupied(index) {
        return None;
    }
    let p = position(&occ, index);
    let mut head = occ.head.clone();
    head.insert(p, index);
    let out = IndexOccupancy { head, sea: occ.sea }.to_elementary();
    Some((out, p % 2 == 1))
}

fn remove(w: &ElementaryVector, index: i64) -> Option<(ElementaryVector, bool)> {
    let occ = w.occupancy();
    if !occ.is_occupied(index) {
        return None;
    }
    let (head, sea, p) = if index > occ.sea {
        let p = position(&occ, index);
        let mut head = occ.head.clone();
        head.remove(p);
        (head, occ.sea, p)
    } else {
        let p = occ.head.len() + (occ.sea - index) as usize;
        let mut head = occ.head.clone();
        head.extend((index + 1..=occ.sea).rev());
        (head, index - 1, p)
    };
    Some((IndexOccupancy { head, sea }.to_elementary(), p % 2 == 1))
}

fn signed<S: Scalar>(c: &S, negative: bool) -> S {
    if negative {
        -c.clone()
    } else {
        c.clone()
    }
}

/// `ψ_i ∧ v`.
pub fn psi<S: Scalar>(i: i64, v: &FockVector<S>) -> FockVector<S> {
    v.map_linear(|w, out, c| {
        if let Some((t, neg)) = insert(w, i) {
            out.add_term(t, signed(c, neg));
        }
    })
}

/// `ψ*_i v = ∂v/∂ψ_{-i}`.
pub fn psi_star<S: Scalar>(i: i64, v: &FockVector<S>) -> FockVector<S> {
    v.map_linear(|w, out, c| {
        if let Some((t, neg)) = remove(w, -i) {
            out.add_term(t, signed(c, neg));
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Coeff;

    #[test]
    fn psi_one_on_vacuum_is_charge_one_sea() {
        let v: FockVector<Coeff> = FockVector::vacuum();
        assert_eq!(psi(1, &v), FockVector::basis(ElementaryVector::vacuum(1)));
    }

    #[test]
    fn occupied_insert_vanishes() {
        let v: FockVector<Coeff> = FockVector::vacuum();
        assert!(psi(0, &v).is_zero());
        assert!(psi(-5, &v).is_zero());
        assert!(psi_star(-1, &v).is_zero());
    }

    #[test]
    fn remove_from_sea_tracks_position() {
        let v: FockVector<Coeff> = FockVector::vacuum();
        // ψ_{-2} sits at position 2
        let out = psi_star(2, &v);
        let w = ElementaryVector::new(-1, vec![1, 1]).unwrap();
        assert_eq!(w.head(), vec![0, -1]);
        assert_eq!(out, FockVector::basis(w));
    }
}

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::elementary::ElementaryVector;
use crate::scalar::Scalar;

/// Finite linear combination of elementary wedges. Zero coefficients are
/// never stored, so structural equality is vector equality.
#[derive(Clone, Debug, PartialEq)]
pub struct FockVector<S> {
    terms: BTreeMap<ElementaryVector, S>,
}

impl<S: Scalar> Default for FockVector<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> FockVector<S> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(v: ElementaryVector) -> Self {
        let mut out = Self::zero();
        out.terms.insert(v, S::one());
        out
    }

    pub fn vacuum() -> Self {
        Self::basis(ElementaryVector::vacuum(0))
    }

    pub fn from_terms<I: IntoIterator<Item = (ElementaryVector, S)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (v, c) in terms {
            out.add_term(v, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, ElementaryVector, S> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &ElementaryVector> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, v: ElementaryVector, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(v) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &S) {
        for (v, x) in &other.terms {
            self.add_term(v.clone(), x.clone() * c.clone());
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(v, x)| (v.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn coefficient_of(&self, v: &ElementaryVector) -> S {
        self.terms.get(v).cloned().unwrap_or_else(S::zero)
    }

    /// Applies a linear map given on basis wedges.
    pub fn map_linear<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&ElementaryVector, &mut Self, &S),
    {
        let mut out = Self::zero();
        for (v, c) in &self.terms {
            f(v, &mut out, c);
        }
        out
    }

    /// Charge and energy shared by all terms, if any.
    pub fn bidegree(&self) -> Option<(i64, i64)> {
        let mut it = self.terms.keys().map(|v| (v.charge(), v.energy()));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }
}

impl<S: Scalar> Add for FockVector<S> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (v, c) in rhs.terms {
            self.add_term(v, c);
        }
        self
    }
}

impl<S: Scalar> Sub for FockVector<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<S: Scalar> Neg for FockVector<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(v, c)| (v, -c)).collect(),
        }
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for FockVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (v, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·{v}")?;
        }
        Ok(())
    }
}

/// Exact `p/q` string for a rational coefficient.
pub fn rational_string(c: &BigRational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

#[derive(Serialize)]
struct TermRecord<'a> {
    term: &'a ElementaryVector,
    coeff: String,
}

impl Serialize for FockVector<BigRational> {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> Result<Ser::Ok, Ser::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (term, c) in &self.terms {
            seq.serialize_element(&TermRecord {
                term,
                coeff: rational_string(c),
            })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Coeff;
    use num_traits::Zero;

    #[test]
    fn add_and_negate_cancel() {
        let x: FockVector<Coeff> = FockVector::vacuum();
        assert!((x.clone() + x.scale(&Coeff::from_int(-1))).is_zero());
        assert!((x.clone() - x).is_zero());
    }

    #[test]
    fn absent_coefficient_is_zero() {
        let x: FockVector<Coeff> = FockVector::vacuum();
        assert!(x.coefficient_of(&ElementaryVector::vacuum(1)).is_zero());
    }

    #[test]
    fn json_shape() {
        let x: FockVector<Coeff> = FockVector::vacuum().scale(&Coeff::from_int(-2));
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"[{"term":{"charge":0,"partition":[]},"coeff":"-2/1"}]"#);
    }
}

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Polynomial in `q` with exact integer coefficients, ascending powers,
/// trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(power: usize, c: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Drops every power above `max_power`.
    pub fn truncate(&self, max_power: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(max_power + 1).cloned().collect())
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(out)
    }
}

impl fmt::Display for QPolynomial {
    /// Ascending powers: `1 + q + 2q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigInt::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Order of a q-Pochhammer symbol `(q)_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochhammerOrder {
    Finite(u32),
    Infinite,
}

/// `1 / (q)_n` expanded up to `q^{q_max}`.
///
/// For the infinite product only factors with `i ≤ q_max` matter; the rest are
/// `1 + O(q^{q_max+1})`.
pub fn pochhammer_inv(order: PochhammerOrder, q_max: usize) -> QPolynomial {
    let top = match order {
        PochhammerOrder::Finite(n) => (n as usize).min(q_max),
        PochhammerOrder::Infinite => q_max,
    };
    let mut c = vec![BigInt::zero(); q_max + 1];
    c[0] = BigInt::one();
    for i in 1..=top {
        for k in i..=q_max {
            let prev = c[k - i].clone();
            c[k] += prev;
        }
    }
    QPolynomial::from_coeffs(c)
}

/// Gaussian binomial `[a, b]_q`; zero unless `b ≤ a`.
///
/// Built from `[a, b] = [a-1, b-1] + q^b [a-1, b]`, so no division is needed.
pub fn gaussian_binomial(a: u32, b: u32) -> QPolynomial {
    if b > a {
        return QPolynomial::zero();
    }
    let b = b as usize;
    // row[k] = [n, k] for the current n
    let mut row: Vec<QPolynomial> = vec![QPolynomial::one()];
    for n in 1..=a as usize {
        let mut next = Vec::with_capacity(row.len() + 1);
        for k in 0..=n.min(b) {
            let left = if k == 0 { QPolynomial::zero() } else { row[k - 1].clone() };
            let right = if k < row.len() { row[k].shift(k) } else { QPolynomial::zero() };
            next.push(&left + &right);
        }
        row = next;
    }
    row.swap_remove(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_small() {
        assert_eq!(pochhammer_inv(PochhammerOrder::Finite(0), 4), QPolynomial::one());
        assert_eq!(pochhammer_inv(PochhammerOrder::Finite(1), 4), QPolynomial::from_i64s(&[1, 1, 1, 1, 1]));
        assert_eq!(pochhammer_inv(PochhammerOrder::Finite(2), 4), QPolynomial::from_i64s(&[1, 1, 2, 2, 3]));
        assert_eq!(pochhammer_inv(PochhammerOrder::Infinite, 6), QPolynomial::from_i64s(&[1, 1, 2, 3, 5, 7, 11]));
    }

    #[test]
    fn gaussian_small() {
        assert_eq!(gaussian_binomial(5, 0), QPolynomial::one());
        assert_eq!(gaussian_binomial(2, 1), QPolynomial::from_i64s(&[1, 1]));
        assert_eq!(gaussian_binomial(4, 2), QPolynomial::from_i64s(&[1, 1, 2, 1, 1]));
        assert!(gaussian_binomial(2, 3).is_zero());
        assert_eq!(gaussian_binomial(7, 3).degree(), Some(12));
    }

    #[test]
    fn display_ascending() {
        assert_eq!(QPolynomial::from_i64s(&[1, 1, 2]).to_string(), "1 + q + 2q^2");
        assert_eq!(QPolynomial::from_i64s(&[0, -1, 0, 3]).to_string(), "-q + 3q^3");
        assert_eq!(QPolynomial::zero().to_string(), "0");
    }
}

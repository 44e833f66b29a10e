use std::collections::BTreeMap;
use std::io;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::poly::QPolynomial;

/// Box `z_min ≤ z-power ≤ z_max`, `0 ≤ q-power ≤ q_max` on which a truncated
/// series is exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Window {
    pub z_min: i64,
    pub z_max: i64,
    pub q_max: i64,
}

impl Window {
    pub fn new(z_min: i64, z_max: i64, q_max: i64) -> Self {
        Self { z_min, z_max, q_max }
    }

    pub fn contains(&self, z: i64, q: i64) -> bool {
        (self.z_min..=self.z_max).contains(&z) && (0..=self.q_max).contains(&q)
    }

    pub fn intersect(&self, other: &Window) -> Window {
        Window {
            z_min: self.z_min.max(other.z_min),
            z_max: self.z_max.min(other.z_max),
            q_max: self.q_max.min(other.q_max),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.z_min > self.z_max || self.q_max < 0
    }
}

/// Formal series in `z^{±1}` and `q`, known exactly on its window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    window: Window,
    coeffs: BTreeMap<(i64, i64), BigInt>,
}

#[derive(Serialize)]
struct CoeffRecord {
    z: i64,
    q: i64,
    coeff: String,
}

impl BivariateSeries {
    pub fn zero(window: Window) -> Self {
        Self {
            window,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn window(&self) -> Window {
        self.window
    }

    /// `None` outside the window, where the coefficient is unknown.
    pub fn get(&self, z: i64, q: i64) -> Option<BigInt> {
        self.window
            .contains(z, q)
            .then(|| self.coeffs.get(&(z, q)).cloned().unwrap_or_default())
    }

    /// Coefficient inside the window, zero outside.
    pub fn coeff(&self, z: i64, q: i64) -> BigInt {
        self.get(z, q).unwrap_or_default()
    }

    pub fn add_term(&mut self, z: i64, q: i64, c: BigInt) {
        if c.is_zero() || !self.window.contains(z, q) {
            return;
        }
        let slot = self.coeffs.entry((z, q)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&(z, q));
        }
    }

    /// Adds `z^{z_pow} q^{q_shift} p(q)`.
    pub fn add_poly(&mut self, z_pow: i64, q_shift: i64, p: &QPolynomial) {
        for (k, c) in p.coeffs().iter().enumerate() {
            self.add_term(z_pow, q_shift + k as i64, c.clone());
        }
    }

    pub fn restrict(&self, window: Window) -> Self {
        let window = self.window.intersect(&window);
        Self {
            window,
            coeffs: self
                .coeffs
                .iter()
                .filter(|((z, q), _)| window.contains(*z, *q))
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// Sum, exact on the intersection of the two windows.
    pub fn add(&self, other: &Self) -> Self {
        let window = self.window.intersect(&other.window);
        let mut out = self.restrict(window);
        for ((z, q), c) in &other.coeffs {
            out.add_term(*z, *q, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            window: self.window,
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    /// Coefficientwise equality on the shared window.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let w = self.window.intersect(&other.window);
        self.restrict(w).coeffs == other.restrict(w).coeffs
    }

    /// Coefficientwise `self ≤ other` on the shared window.
    pub fn dominated_by(&self, other: &Self) -> bool {
        let w = self.window.intersect(&other.window);
        (w.z_min..=w.z_max).all(|z| (0..=w.q_max).all(|q| self.coeff(z, q) <= other.coeff(z, q)))
    }

    /// Nonzero coefficients in (z, q) order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> {
        self.coeffs.iter().map(|((z, q), c)| (*z, *q, c))
    }

    /// `Σ_z` of the `q^k` coefficients over the window.
    pub fn z_sum(&self, q: i64) -> BigInt {
        self.coeffs
            .iter()
            .filter(|((_, qq), _)| *qq == q)
            .map(|(_, c)| c)
            .sum()
    }

    /// The `z^{z}` row as a polynomial in `q`.
    pub fn row(&self, z: i64) -> QPolynomial {
        let len = (self.window.q_max + 1).max(0) as usize;
        QPolynomial::from_coeffs((0..len).map(|q| self.coeff(z, q as i64)).collect())
    }

    /// CSV rows `z_power,q_power,coeff` for every nonzero coefficient.
    pub fn write_csv<W: io::Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["z_power", "q_power", "coeff"])?;
        for ((z, q), c) in &self.coeffs {
            w.write_record([z.to_string(), q.to_string(), c.to_string()])?;
        }
        w.flush()?;
        Ok(())
    }
}

impl Serialize for BivariateSeries {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            window: &'a Window,
            coeffs: Vec<CoeffRecord>,
        }
        Repr {
            window: &self.window,
            coeffs: self
                .coeffs
                .iter()
                .map(|((z, q), c)| CoeffRecord {
                    z: *z,
                    q: *q,
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

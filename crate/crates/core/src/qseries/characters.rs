//! Truncated characters of the wedge space, the standard modules and the
//! basic subspaces.

use serde::Serialize;

use super::poly::{pochhammer_inv, PochhammerOrder};
use super::series::{BivariateSeries, Window};
use crate::affine::Sector;

fn theta_over_pochhammer(window: Window, q_power: impl Fn(i64) -> i64, order: impl Fn(i64) -> PochhammerOrder) -> BivariateSeries {
    let mut out = BivariateSeries::zero(window);
    for n in window.z_min..=window.z_max {
        let shift = q_power(n);
        if shift < 0 || shift > window.q_max {
            continue;
        }
        let tail = pochhammer_inv(order(n), (window.q_max - shift) as usize);
        out.add_poly(n, shift, &tail);
    }
    out
}

/// `Σ_n z^n q^{n²} / (q)_∞`.
pub fn ch_l01(window: Window) -> BivariateSeries {
    theta_over_pochhammer(window, |n| n * n, |_| PochhammerOrder::Infinite)
}

/// `Σ_n z^n q^{n² + n} / (q)_∞`: the character of `L_(1,1)` with `z^n`
/// standing for `h_0 = 2n + 1` and the `q^{1/4}` offset removed.
pub fn ch_l11(window: Window) -> BivariateSeries {
    theta_over_pochhammer(window, |n| n * n + n, |_| PochhammerOrder::Infinite)
}

pub fn ch_standard(sector: Sector, window: Window) -> BivariateSeries {
    match sector {
        Sector::Zero => ch_l01(window),
        Sector::One => ch_l11(window),
    }
}

/// `Σ_{n ≥ j} z^n q^{n²} / (q)_{n-j}`.
pub fn ch_w(j: i64, window: Window) -> BivariateSeries {
    let mut out = BivariateSeries::zero(window);
    for n in window.z_min.max(j)..=window.z_max {
        let shift = n * n;
        if shift > window.q_max {
            continue;
        }
        let tail = pochhammer_inv(PochhammerOrder::Finite((n - j) as u32), (window.q_max - shift) as usize);
        out.add_poly(n, shift, &tail);
    }
    out
}

/// `Σ_m z^m q^{m(m+1)/2} / (q)_∞`.
pub fn ch_f(window: Window) -> BivariateSeries {
    theta_over_pochhammer(window, |m| m * (m + 1) / 2, |_| PochhammerOrder::Infinite)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizationReport {
    pub holds: bool,
    /// Largest `m` such that `ch W_{m'}` agrees with `ch L_(0,1)` on the
    /// window for every `m' ≤ m`.
    pub m_star: Option<i64>,
}

/// Checks that `ch W_m → ch L_(0,1)` as `m → -∞` on the window.
///
/// Below `z_min - q_max` every `(q)_{n-m}` agrees with `(q)_∞` in all degrees
/// the window sees, so agreement there is checked once and assumed beyond.
pub fn limit_stabilization_check(window: Window) -> StabilizationReport {
    let target = ch_l01(window);
    let floor = window.z_min - window.q_max.max(0) - 1;
    if !ch_w(floor, window).agrees_with(&target) {
        return StabilizationReport { holds: false, m_star: None };
    }
    let mut m_star = floor;
    while m_star < window.z_max && ch_w(m_star + 1, window).agrees_with(&target) {
        m_star += 1;
    }
    StabilizationReport { holds: true, m_star: Some(m_star) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn l01_low_coefficients() {
        let ch = ch_l01(Window::new(-2, 2, 4));
        assert_eq!(ch.coeff(0, 0), BigInt::from(1));
        assert_eq!(ch.coeff(1, 1), BigInt::from(1));
        assert_eq!(ch.coeff(0, 2), BigInt::from(2));
        assert_eq!(ch.coeff(2, 3), BigInt::from(0));
        assert_eq!(ch.coeff(-2, 4), BigInt::from(1));
    }

    #[test]
    fn w0_low_coefficients() {
        let ch = ch_w(0, Window::new(-1, 3, 8));
        assert_eq!(ch.coeff(2, 5), BigInt::from(1));
        assert_eq!(ch.coeff(2, 6), BigInt::from(2));
        assert_eq!(ch.row(0).to_string(), "1");
        assert_eq!(ch.row(-1).to_string(), "0");
    }

    #[test]
    fn fock_rows_start_at_triangular_numbers() {
        let ch = ch_f(Window::new(-2, 2, 6));
        assert_eq!(ch.coeff(1, 0), BigInt::from(0));
        assert_eq!(ch.coeff(1, 1), BigInt::from(1));
        assert_eq!(ch.coeff(-1, 0), BigInt::from(1));
        assert_eq!(ch.coeff(2, 3), BigInt::from(1));
    }

    #[test]
    fn stabilization_small_windows() {
        let r = limit_stabilization_check(Window::new(-2, 2, 6));
        assert!(r.holds);
        assert!(r.m_star.unwrap() <= -2);
        assert!(limit_stabilization_check(Window::new(-2, 2, 0)).holds);
        assert!(limit_stabilization_check(Window::new(0, 0, 3)).holds);
    }
}

use num_bigint::BigInt;
use serde::Serialize;

use super::partitions::restricted_partition_count;
use super::poly::{gaussian_binomial, pochhammer_inv, PochhammerOrder};
use super::series::{BivariateSeries, Window};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub z: i64,
    pub q: i64,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub n: u32,
    pub window: Window,
    pub holds: bool,
    pub mismatches: Vec<Mismatch>,
}

/// `Σ_m z^m q^{m²} [N-m, m]_q` on the window.
pub fn fibonacci_polynomial_character(big_n: u32, window: Window) -> BivariateSeries {
    let mut out = BivariateSeries::zero(window);
    for m in 0..=big_n / 2 {
        out.add_poly(m as i64, (m * m) as i64, &gaussian_binomial(big_n - m, m));
    }
    out
}

/// Compares `Σ_m z^m q^{m²} [N-m, m]_q` against the brute-force generating
/// function of gap-two partitions with parts below `N`, coefficientwise.
/// `q_max = None` covers every degree either side can reach.
pub fn appendix_a_identity_check(big_n: u32, q_max: Option<i64>) -> IdentityReport {
    let full = (big_n as i64) * (big_n as i64);
    let window = Window::new(0, big_n as i64, q_max.unwrap_or(full));
    let lhs = fibonacci_polynomial_character(big_n, window);
    let mut rhs = BivariateSeries::zero(window);
    for m in 0..=big_n as usize {
        for n in 0..=window.q_max {
            let c = restricted_partition_count(n as u64, m, big_n as u64);
            rhs.add_term(m as i64, n, BigInt::from(c));
        }
    }
    let mut mismatches = Vec::new();
    for z in window.z_min..=window.z_max {
        for q in 0..=window.q_max {
            let (a, b) = (lhs.coeff(z, q), rhs.coeff(z, q));
            if a != b {
                mismatches.push(Mismatch { z, q, lhs: a.to_string(), rhs: b.to_string() });
            }
        }
    }
    IdentityReport { n: big_n, window, holds: mismatches.is_empty(), mismatches }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizationPoint {
    pub m: u32,
    pub q_degree: usize,
    /// Smallest `N` from which `[N-m, m]_q` matches `1/(q)_m` through
    /// `q^{q_degree}`, checked up to `checked_through`.
    pub first_n: Option<u32>,
    pub checked_through: u32,
}

/// Finds where the Gaussian binomial `[N-m, m]_q` settles to `1/(q)_m` in
/// degrees `≤ q_degree`. Once `N - 2m > q_degree` the box is wider than any
/// partition that fits in the degree bound, so checking a few steps past that
/// point is enough.
pub fn gaussian_stabilization(m: u32, q_degree: usize) -> StabilizationPoint {
    let target = pochhammer_inv(PochhammerOrder::Finite(m), q_degree);
    let last = 2 * m + q_degree as u32 + 3;
    let mut first_n = None;
    for big_n in 2 * m..=last {
        let ok = gaussian_binomial(big_n - m, m).truncate(q_degree) == target;
        match (ok, first_n) {
            (true, None) => first_n = Some(big_n),
            (false, Some(_)) => first_n = None,
            _ => {}
        }
    }
    StabilizationPoint { m, q_degree, first_n, checked_through: last }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_identities() {
        assert!(appendix_a_identity_check(1, None).holds);
        let r = appendix_a_identity_check(3, None);
        assert!(r.holds);
        let lhs = fibonacci_polynomial_character(3, r.window);
        assert_eq!(lhs.row(1).to_string(), "q + q^2");
        assert_eq!(lhs.row(0).to_string(), "1");
        assert_eq!(lhs.row(2).to_string(), "0");
    }

    #[test]
    fn stabilizes() {
        let p = gaussian_stabilization(2, 6);
        assert_eq!(p.first_n, Some(2 * 2 + 6));
    }
}

//! Truncated q-series against direct counting.

use fockspace::basis::{enumerate_fibonacci, BidegreeCell};
use fockspace::fock::enumerate_elementary;
use fockspace::qseries::{
    appendix_a_identity_check, ch_f, ch_l01, ch_l11, ch_w, fibonacci_polynomial_character, gaussian_binomial,
    gaussian_stabilization, limit_stabilization_check, pochhammer_inv, PochhammerOrder, QPolynomial, Window,
};
use num_bigint::BigInt;

/// Partitions of `n` with at most `parts` parts, each at most `size`.
fn box_partitions(n: i64, parts: i64, size: i64) -> u64 {
    if n == 0 {
        return 1;
    }
    if n < 0 || parts == 0 || size == 0 {
        return 0;
    }
    // largest part equal to `size`, or smaller than `size`
    box_partitions(n - size, parts - 1, size) + box_partitions(n, parts, size - 1)
}

fn p(n: i64) -> u64 {
    box_partitions(n, n.max(0), n.max(0))
}

/// Partitions of `n` into exactly `m` parts from `1..=max_part`, neighbours
/// differing by at least two.
fn gap_two(n: i64, m: i64, max_part: i64) -> u64 {
    if m == 0 {
        return (n == 0) as u64;
    }
    (1..=max_part.min(n)).map(|top| gap_two(n - top, m - 1, top - 2)).sum()
}

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

#[test]
fn gaussian_binomials_count_box_partitions() {
    for a in 0..=9u32 {
        for b in 0..=a {
            let g = gaussian_binomial(a, b);
            let deg = (b * (a - b)) as i64;
            assert_eq!(g.degree(), Some(deg as usize));
            for k in 0..=deg {
                assert_eq!(g.coeff(k as usize), big(box_partitions(k, b as i64, (a - b) as i64)), "[{a},{b}] q^{k}");
            }
        }
    }
}

#[test]
fn pochhammer_inverses_count_partitions() {
    for n in 0..=6u32 {
        let inv = pochhammer_inv(PochhammerOrder::Finite(n), 15);
        for k in 0..=15 {
            assert_eq!(inv.coeff(k as usize), big(box_partitions(k, 15, n as i64)));
        }
    }
    let inf = pochhammer_inv(PochhammerOrder::Infinite, 20);
    for k in 0..=20 {
        assert_eq!(inf.coeff(k as usize), big(p(k)));
    }
    // (q)_3 · 1/(q)_3 = 1 up to the truncation
    let mut q3 = QPolynomial::one();
    for i in 1..=3usize {
        let mut c = vec![BigInt::from(0); i + 1];
        c[0] = BigInt::from(1);
        c[i] = BigInt::from(-1);
        q3 = &q3 * &QPolynomial::from_coeffs(c);
    }
    let prod = &q3 * &pochhammer_inv(PochhammerOrder::Finite(3), 12);
    assert_eq!(prod.truncate(12), QPolynomial::one());
}

#[test]
fn standard_characters() {
    let w = Window::new(-3, 3, 14);
    let l01 = ch_l01(w);
    let l11 = ch_l11(w);
    for z in -3..=3i64 {
        for q in 0..=14 {
            assert_eq!(l01.coeff(z, q), big(if q >= z * z { p(q - z * z) } else { 0 }));
            assert_eq!(l11.coeff(z, q), big(if q >= z * z + z { p(q - z * z - z) } else { 0 }));
        }
    }
    let small = ch_l01(Window::new(-2, 2, 4));
    assert_eq!(small.coeff(0, 0), big(1));
    assert_eq!(small.coeff(1, 1), big(1));
    assert_eq!(small.coeff(0, 1), big(1));
}

#[test]
fn basic_subspace_character_counts_fibonacci_monomials() {
    let w = ch_w(0, Window::new(0, 4, 14));
    for n in 0..=4usize {
        for m in 0..=14 {
            let count = enumerate_fibonacci(&BidegreeCell::new(n, m, 0)).len();
            assert_eq!(w.coeff(n as i64, m), big(count as u64));
            assert_eq!(w.coeff(n as i64, m), big(gap_two(m, n as i64, m.max(1))));
        }
    }
    assert_eq!(ch_w(0, Window::new(0, 0, 6)).row(0), QPolynomial::one());
    // W_{j} sits inside W_{j-1}
    let big_w = Window::new(-3, 3, 12);
    for j in -2..=2 {
        assert!(ch_w(j, big_w).dominated_by(&ch_w(j - 1, big_w)));
        assert!(ch_w(j, big_w).dominated_by(&ch_l01(big_w)));
    }
}

#[test]
fn wedge_space_character() {
    let w = Window::new(-4, 4, 12);
    let f = ch_f(w);
    for m in -4..=4 {
        for d in 0..=12 {
            assert_eq!(f.coeff(m, d), big(enumerate_elementary(m, d).len() as u64));
        }
    }
    // z-summed over |m| ≤ 3 at q^3
    let three = ch_f(Window::new(-3, 3, 3));
    let total: usize = (-3..=3).map(|m| enumerate_elementary(m, 3).len()).sum();
    assert_eq!(three.z_sum(3), big(total as u64));
}

#[test]
fn basic_subspaces_exhaust_the_module() {
    let r = limit_stabilization_check(Window::new(-2, 2, 8));
    assert!(r.holds);
    let m_star = r.m_star.unwrap();
    let w = Window::new(-2, 2, 8);
    assert!(ch_w(m_star, w).agrees_with(&ch_l01(w)));
    assert!(!ch_w(m_star + 1, w).agrees_with(&ch_l01(w)));
    for m in m_star - 5..=m_star {
        assert!(ch_w(m, w).agrees_with(&ch_l01(w)));
    }
}

#[test]
fn gap_two_identity() {
    for n in 1..=10u32 {
        let r = appendix_a_identity_check(n, None);
        assert!(r.holds, "N = {n}: {:?}", r.mismatches);
        let lhs = fibonacci_polynomial_character(n, r.window);
        for m in 0..=n as i64 {
            for q in 0..=r.window.q_max {
                assert_eq!(lhs.coeff(m, q), big(gap_two(q, m, n as i64 - 1)));
            }
        }
    }
}

#[test]
fn gaussian_limits() {
    for m in 0..=5u32 {
        let s = gaussian_stabilization(m, 10);
        let first = s.first_n.unwrap();
        let target = pochhammer_inv(PochhammerOrder::Finite(m), 10);
        for n in first..first + 4 {
            assert_eq!(gaussian_binomial(n - m, m).truncate(10), target);
        }
        if first > 2 * m {
            assert_ne!(gaussian_binomial(first - 1 - m, m).truncate(10), target);
        }
    }
}

//! Symbolic generators and their brackets.
//!
//! `e_k, f_k, h_k, Λ_j, K` are bracketed through the loop algebra of `gl_2`
//! (`Λ_{2k+1} = e_k + f_{k+1}`, `Λ_{2k} = 1 ⊗ t^k`), matrix units `E_{ij}`
//! through the centrally extended `a_∞` rule.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{FockError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum MatrixSymbol {
    E { i: i64, j: i64 },
    Lambda { j: i64 },
    #[serde(rename = "e")]
    RaiseE { k: i64 },
    #[serde(rename = "f")]
    LowerF { k: i64 },
    #[serde(rename = "h")]
    CartanH { k: i64 },
    K,
}

impl MatrixSymbol {
    pub fn e(k: i64) -> Self {
        Self::RaiseE { k }
    }
    pub fn f(k: i64) -> Self {
        Self::LowerF { k }
    }
    pub fn h(k: i64) -> Self {
        Self::CartanH { k }
    }
    pub fn lambda(j: i64) -> Self {
        Self::Lambda { j }
    }
    pub fn matrix_unit(i: i64, j: i64) -> Self {
        Self::E { i, j }
    }

    /// Shift in fermionic energy produced by the operator.
    pub fn energy_shift(&self) -> i64 {
        match *self {
            Self::E { i, j } => i - j,
            Self::Lambda { j } => -j,
            Self::RaiseE { k } => -2 * k - 1,
            Self::LowerF { k } => 1 - 2 * k,
            Self::CartanH { k } => -2 * k,
            Self::K => 0,
        }
    }

    /// Shift in the `h_0` eigenvalue produced by the operator.
    pub fn weight_shift(&self) -> Option<i64> {
        match *self {
            Self::RaiseE { .. } => Some(2),
            Self::LowerF { .. } => Some(-2),
            Self::CartanH { .. } | Self::K => Some(0),
            Self::Lambda { j } if j % 2 == 0 => Some(0),
            Self::Lambda { .. } | Self::E { .. } => None,
        }
    }
}

impl fmt::Display for MatrixSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::E { i, j } => write!(f, "E({i},{j})"),
            Self::Lambda { j } => write!(f, "Lambda({j})"),
            Self::RaiseE { k } => write!(f, "e({k})"),
            Self::LowerF { k } => write!(f, "f({k})"),
            Self::CartanH { k } => write!(f, "h({k})"),
            Self::K => write!(f, "K"),
        }
    }
}

/// `Σ c_s · s + central · c`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BracketResult {
    pub terms: Vec<(i64, MatrixSymbol)>,
    pub central: i64,
}

impl BracketResult {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.central == 0
    }

    fn from_map(map: BTreeMap<MatrixSymbol, i64>, central: i64) -> Self {
        Self {
            terms: map
                .into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|(s, c)| (c, s))
                .collect(),
            central,
        }
    }
}

impl fmt::Display for BracketResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.terms.iter().map(|(c, s)| format!("{c}·{s}")).collect();
        if self.central != 0 {
            parts.push(format!("{}·c", self.central));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Two-cocycle of the central extension on matrix units.
pub fn cocycle(a: &MatrixSymbol, b: &MatrixSymbol) -> Result<i64> {
    let (MatrixSymbol::E { i, j }, MatrixSymbol::E { i: m, j: n }) = (*a, *b) else {
        return Err(FockError::InvalidInput(format!(
            "cocycle is defined on matrix units, got {a} and {b}"
        )));
    };
    if m != j || n != i {
        return Ok(0);
    }
    Ok(if i <= 0 && j >= 1 {
        1
    } else if j <= 0 && i >= 1 {
        -1
    } else {
        0
    })
}

/// `gl_2` loop generator `E_{ab} ⊗ t^k`, `a, b ∈ {1, 2}`.
type LoopUnit = (u8, u8, i64);

fn to_loop(sym: &MatrixSymbol) -> Vec<(i64, LoopUnit)> {
    match *sym {
        MatrixSymbol::RaiseE { k } => vec![(1, (1, 2, k))],
        MatrixSymbol::LowerF { k } => vec![(1, (2, 1, k))],
        MatrixSymbol::CartanH { k } => vec![(1, (1, 1, k)), (-1, (2, 2, k))],
        MatrixSymbol::Lambda { j } if j.rem_euclid(2) == 1 => {
            let k = (j - 1).div_euclid(2);
            vec![(1, (1, 2, k)), (1, (2, 1, k + 1))]
        }
        MatrixSymbol::Lambda { j } => {
            let k = j.div_euclid(2);
            vec![(1, (1, 1, k)), (1, (2, 2, k))]
        }
        MatrixSymbol::K | MatrixSymbol::E { .. } => Vec::new(),
    }
}

/// `[E_ab(m), E_cd(n)] = δ_bc E_ad(m+n) − δ_da E_cb(m+n) + m δ_{m+n,0} tr(E_ab E_cd) K`.
fn loop_bracket(x: LoopUnit, y: LoopUnit, out: &mut BTreeMap<LoopUnit, i64>, central: &mut i64, c: i64) {
    let (a, b, m) = x;
    let (cc, d, n) = y;
    if b == cc {
        *out.entry((a, d, m + n)).or_insert(0) += c;
    }
    if d == a {
        *out.entry((cc, b, m + n)).or_insert(0) -= c;
    }
    if m + n == 0 && b == cc && a == d {
        *central += c * m;
    }
}

fn from_loop(map: BTreeMap<LoopUnit, i64>) -> Result<BTreeMap<MatrixSymbol, i64>> {
    let mut diag: BTreeMap<i64, (i64, i64)> = BTreeMap::new();
    let mut out = BTreeMap::new();
    for ((a, b, k), c) in map {
        if c == 0 {
            continue;
        }
        match (a, b) {
            (1, 2) => *out.entry(MatrixSymbol::e(k)).or_insert(0) += c,
            (2, 1) => *out.entry(MatrixSymbol::f(k)).or_insert(0) += c,
            (1, 1) => diag.entry(k).or_default().0 += c,
            _ => diag.entry(k).or_default().1 += c,
        }
    }
    for (k, (d1, d2)) in diag {
        if (d1 - d2) % 2 != 0 {
            return Err(FockError::NotImplemented(format!(
                "diagonal loop element ({d1}, {d2}) at degree {k} is not integral in h, Λ"
            )));
        }
        *out.entry(MatrixSymbol::h(k)).or_insert(0) += (d1 - d2) / 2;
        *out.entry(MatrixSymbol::lambda(2 * k)).or_insert(0) += (d1 + d2) / 2;
    }
    Ok(out)
}

/// Symbolic `[a, b]`.
pub fn bracket(a: &MatrixSymbol, b: &MatrixSymbol) -> Result<BracketResult> {
    match (*a, *b) {
        (MatrixSymbol::K, _) | (_, MatrixSymbol::K) => Ok(BracketResult::default()),
        (MatrixSymbol::E { i, j }, MatrixSymbol::E { i: m, j: n }) => {
            let mut map = BTreeMap::new();
            if j == m {
                *map.entry(MatrixSymbol::E { i, j: n }).or_insert(0) += 1;
            }
            if n == i {
                *map.entry(MatrixSymbol::E { i: m, j }).or_insert(0) -= 1;
            }
            Ok(BracketResult::from_map(map, cocycle(a, b)?))
        }
        (MatrixSymbol::E { .. }, _) | (_, MatrixSymbol::E { .. }) => Err(FockError::NotImplemented(
            format!("bracket of a matrix unit with a loop generator: [{a}, {b}]"),
        )),
        _ => {
            let mut map = BTreeMap::new();
            let mut central = 0;
            for (ca, x) in to_loop(a) {
                for (cb, y) in to_loop(b) {
                    loop_bracket(x, y, &mut map, &mut central, ca * cb);
                }
            }
            Ok(BracketResult::from_map(from_loop(map)?, central))
        }
    }
}

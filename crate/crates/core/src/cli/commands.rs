use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::args::{ApplyArgs, BasisArgs, CharactersArgs, Family, QbinomArgs, RelationsArgs, Series};
use super::report::{Report, Table};
use crate::affine::{verify_relation_with, Fermionic, MatrixSymbol, RelationFailure, Representation, Sector};
use crate::basis::{
    apply_indices_in, global_basis_check, independence_check, leading_vector_in,
    nonempty_cells, spanning_report, BidegreeCell, FibonacciMonomial, IndependenceReport, SpanningReport,
};
use crate::error::{FockError, Result};
use crate::fock::{enumerate_elementary, minimal_energy, ElementaryVector, FockVector};
use crate::qseries::{
    appendix_a_identity_check, ch_f, ch_l01, ch_l11, ch_w, gaussian_binomial, gaussian_stabilization, BivariateSeries,
    Window,
};
use crate::Coeff;

/// Failures listed individually in a report; the rest are only counted.
pub const MAX_LISTED_FAILURES: usize = 20;

fn family_of(sym: &MatrixSymbol) -> Family {
    match sym {
        MatrixSymbol::RaiseE { .. } => Family::Raise,
        MatrixSymbol::LowerF { .. } => Family::Lower,
        MatrixSymbol::CartanH { .. } => Family::Cartan,
        MatrixSymbol::Lambda { .. } => Family::Lambda,
        MatrixSymbol::K => Family::Central,
        MatrixSymbol::E { .. } => Family::Unit,
    }
}

/// Generators selected by `--symbols` over the mode window, in a fixed order.
pub fn relation_symbols(args: &RelationsArgs) -> Vec<MatrixSymbol> {
    let mut families = args.symbols.clone();
    families.sort();
    families.dedup();
    let mut out = Vec::new();
    for fam in families {
        match fam {
            Family::Raise => out.extend(args.modes.iter().map(MatrixSymbol::e)),
            Family::Lower => out.extend(args.modes.iter().map(MatrixSymbol::f)),
            Family::Cartan => out.extend(args.modes.iter().map(MatrixSymbol::h)),
            Family::Lambda => out.extend(args.modes.iter().map(MatrixSymbol::lambda)),
            Family::Central => out.push(MatrixSymbol::K),
            Family::Unit => {
                for i in args.modes.iter() {
                    out.extend(args.modes.iter().map(|j| MatrixSymbol::matrix_unit(i, j)));
                }
            }
        }
    }
    out
}

/// Every elementary vector with charge in the window and energy up to the bound.
pub fn test_vectors(args: &RelationsArgs) -> Vec<ElementaryVector> {
    let mut out = Vec::new();
    for m in args.charges.iter() {
        for d in minimal_energy(m)..=args.max_energy {
            out.extend(enumerate_elementary(m, d));
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyPairCount {
    pub a: Family,
    pub b: Family,
    pub checks: usize,
    pub failures: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct OddLambdaFailure {
    pub j: i64,
    pub vector: ElementaryVector,
    pub lhs_minus_rhs: FockVector<Coeff>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationsResult {
    pub symbols: usize,
    pub pairs: usize,
    pub vectors: usize,
    pub checks: usize,
    pub failures_total: usize,
    pub failures: Vec<RelationFailure>,
    pub by_family: Vec<FamilyPairCount>,
    /// `Λ_{2k+1} = e_k + f_{k+1}` on every test vector.
    pub odd_lambda_checks: usize,
    pub odd_lambda_failures_total: usize,
    pub odd_lambda_failures: Vec<OddLambdaFailure>,
}

impl RelationsResult {
    pub fn passed(&self) -> bool {
        self.failures_total == 0 && self.odd_lambda_failures_total == 0
    }
}

/// Relation sweep against any realization of the generators.
pub fn relations_sweep<R: Representation<Coeff>>(rep: &R, args: &RelationsArgs) -> Result<RelationsResult> {
    let symbols = relation_symbols(args);
    let vectors: Vec<FockVector<Coeff>> = test_vectors(args).into_iter().map(FockVector::basis).collect();
    let mut pairs = 0;
    let mut checks = 0;
    let mut failures_total = 0;
    let mut failures = Vec::new();
    let mut by_family: BTreeMap<(Family, Family), (usize, usize)> = BTreeMap::new();
    for (ia, a) in symbols.iter().enumerate() {
        for b in &symbols[ia..] {
            let (fa, fb) = (family_of(a), family_of(b));
            if (fa == Family::Unit) != (fb == Family::Unit) {
                continue;
            }
            pairs += 1;
            let slot = by_family.entry((fa.min(fb), fa.max(fb))).or_default();
            for v in &vectors {
                let r = verify_relation_with(rep, a, b, v)?;
                checks += 1;
                slot.0 += 1;
                if !r.holds {
                    failures_total += 1;
                    slot.1 += 1;
                    if failures.len() < MAX_LISTED_FAILURES {
                        failures.push(RelationFailure {
                            a: *a,
                            b: *b,
                            vector: v.support().next().expect("basis vector").clone(),
                            lhs_minus_rhs: r.lhs_minus_rhs,
                        });
                    }
                }
            }
        }
    }

    let mut odd_lambda_checks = 0;
    let mut odd_lambda_failures_total = 0;
    let mut odd_lambda_failures = Vec::new();
    if args.symbols.contains(&Family::Lambda) {
        for j in args.modes.iter().filter(|j| j.rem_euclid(2) == 1) {
            let k = (j - 1) / 2;
            for v in &vectors {
                let lhs = rep.act(&MatrixSymbol::lambda(j), v);
                let rhs = rep.act(&MatrixSymbol::e(k), v) + rep.act(&MatrixSymbol::f(k + 1), v);
                let diff = lhs - rhs;
                odd_lambda_checks += 1;
                if !diff.is_zero() {
                    odd_lambda_failures_total += 1;
                    if odd_lambda_failures.len() < MAX_LISTED_FAILURES {
                        odd_lambda_failures.push(OddLambdaFailure {
                            j,
                            vector: v.support().next().expect("basis vector").clone(),
                            lhs_minus_rhs: diff,
                        });
                    }
                }
            }
        }
    }

    Ok(RelationsResult {
        symbols: symbols.len(),
        pairs,
        vectors: vectors.len(),
        checks,
        failures_total,
        failures,
        by_family: by_family
            .into_iter()
            .map(|((a, b), (checks, failures))| FamilyPairCount { a, b, checks, failures })
            .collect(),
        odd_lambda_checks,
        odd_lambda_failures_total,
        odd_lambda_failures,
    })
}

fn family_name(f: Family) -> String {
    serde_json::to_value(f)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

pub fn cmd_verify_relations_with<R: Representation<Coeff>>(rep: &R, args: &RelationsArgs) -> Result<Report> {
    let res = relations_sweep(rep, args)?;
    let mut fam = Table::new("checks by generator family", &["a", "b", "checks", "failures"]);
    for c in &res.by_family {
        fam.push([family_name(c.a), family_name(c.b), c.checks.to_string(), c.failures.to_string()]);
    }
    let mut report = Report::new("verify-relations", args, res.passed(), &res)
        .with_summary(format!(
            "{} generators, {} pairs, {} vectors: {} checks, {} failures",
            res.symbols, res.pairs, res.vectors, res.checks, res.failures_total
        ))
        .with_summary(format!(
            "odd Lambda = e + f: {} checks, {} failures",
            res.odd_lambda_checks, res.odd_lambda_failures_total
        ))
        .with_table(fam);
    if !res.failures.is_empty() {
        let mut t = Table::new("first failures", &["a", "b", "vector", "lhs - rhs"]);
        for f in &res.failures {
            t.push([f.a.to_string(), f.b.to_string(), f.vector.to_string(), coeff_vector_string(&f.lhs_minus_rhs)]);
        }
        report = report.with_table(t);
    }
    if !res.odd_lambda_failures.is_empty() {
        let mut t = Table::new("first odd Lambda failures", &["j", "vector", "lhs - rhs"]);
        for f in &res.odd_lambda_failures {
            t.push([f.j.to_string(), f.vector.to_string(), coeff_vector_string(&f.lhs_minus_rhs)]);
        }
        report = report.with_table(t);
    }
    Ok(report)
}

pub fn cmd_verify_relations(args: &RelationsArgs) -> Result<Report> {
    cmd_verify_relations_with(&Fermionic, args)
}

fn coeff_vector_string(v: &FockVector<Coeff>) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    v.iter()
        .map(|(w, c)| format!("({c})·{w}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

#[derive(Clone, Debug, Serialize)]
pub struct FibonacciCellResult {
    pub independence: IndependenceReport,
    pub spanning: SpanningReport,
    /// Coefficient of `z^n q^{m - (2j + s) n}` in `Σ z^n q^{n²} / (q)_n`.
    #[serde(serialize_with = "crate::basis::serialize_bigint")]
    pub character_coeff: BigInt,
}

impl FibonacciCellResult {
    pub fn holds(&self) -> bool {
        self.independence.holds()
            && self.spanning.holds()
            && BigInt::from(self.independence.count) == self.character_coeff
    }
}

/// Count predicted by the basic-subspace character for a Fibonacci cell.
pub fn basic_character_count(cell: &BidegreeCell) -> BigInt {
    let shift = -(cell.index_bound() + 1);
    let n = cell.n as i64;
    let q = cell.m - shift * n;
    if q < 0 {
        return BigInt::default();
    }
    ch_w(0, Window::new(n, n, q)).coeff(n, q)
}

/// Fibonacci cells with `deg_q ≤ q_max`, including the empty ones below the
/// largest nonempty length.
pub fn fibonacci_cells(sector: Sector, j: i64, q_max: i64) -> Vec<BidegreeCell> {
    let bound = BidegreeCell::in_sector(0, 0, j, sector).index_bound();
    let mut max_n = 0;
    let mut n = 0usize;
    loop {
        let min = BidegreeCell::in_sector(n, 0, j, sector).min_deg_q();
        if min <= q_max {
            max_n = n;
        } else if n as i64 > bound.max(0) {
            break;
        }
        n += 1;
    }
    nonempty_cells(sector, j, max_n, q_max)
}

pub fn fibonacci_sweep(sector: Sector, j: i64, q_max: i64) -> Result<Vec<FibonacciCellResult>> {
    fibonacci_cells(sector, j, q_max)
        .iter()
        .map(|cell| {
            Ok(FibonacciCellResult {
                independence: independence_check(cell)?,
                spanning: spanning_report(cell)?,
                character_coeff: basic_character_count(cell),
            })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
struct BasisResult {
    global: crate::basis::GlobalReport,
    fibonacci_cells: Vec<FibonacciCellResult>,
}

pub fn cmd_verify_basis(args: &BasisArgs) -> Result<Report> {
    let global = global_basis_check(args.max_energy, args.sector);
    let fib = fibonacci_sweep(args.sector, args.level, args.q_max)?;
    let fib_ok = fib.iter().all(FibonacciCellResult::holds);

    let mut gt = Table::new(
        "semi-infinite monomials against the even Lambda kernel",
        &["sector", "weight", "energy", "count", "rank", "kernel_dim", "in_kernel", "character_coeff"],
    );
    for c in &global.cells {
        gt.push([
            c.sector.index().to_string(),
            c.weight.to_string(),
            c.energy.to_string(),
            c.count.to_string(),
            c.rank.to_string(),
            c.kernel_dim.to_string(),
            c.in_kernel.to_string(),
            c.character_coeff.to_string(),
        ]);
    }
    let mut ft = Table::new(
        "Fibonacci monomials on the extremal vector",
        &["n", "m", "count", "rank", "triangular", "all_rank", "fib_rank", "character_coeff"],
    );
    for c in &fib {
        ft.push([
            c.independence.cell.n.to_string(),
            c.independence.cell.m.to_string(),
            c.independence.count.to_string(),
            c.independence.rank.to_string(),
            c.independence.triangular.to_string(),
            c.spanning.unrestricted_rank.to_string(),
            c.spanning.fibonacci_rank.to_string(),
            c.character_coeff.to_string(),
        ]);
    }
    let global_bad = global.cells.iter().filter(|c| !c.holds()).count();
    let fib_bad = fib.iter().filter(|c| !c.holds()).count();
    let passed = global.holds && fib_ok;
    let result = BasisResult { global, fibonacci_cells: fib };
    Ok(Report::new("verify-basis", args, passed, &result)
        .with_summary(format!(
            "semi-infinite sweep: {} cells, {} disagreeing",
            result.global.cells.len(),
            global_bad
        ))
        .with_summary(format!(
            "Fibonacci cells: {} cells, {} disagreeing",
            result.fibonacci_cells.len(),
            fib_bad
        ))
        .with_table(gt)
        .with_table(ft))
}

#[derive(Clone, Debug, Serialize)]
struct ZSum {
    q: i64,
    coeff: String,
}

#[derive(Clone, Debug, Serialize)]
struct CharactersResult {
    series: BivariateSeries,
    z_sums: Vec<ZSum>,
}

pub fn character_series(args: &CharactersArgs) -> Result<BivariateSeries> {
    if args.z_min > args.z_max {
        return Err(FockError::InvalidInput(format!(
            "empty z window {}..{}",
            args.z_min, args.z_max
        )));
    }
    let window = Window::new(args.z_min, args.z_max, args.q_max);
    Ok(match args.series {
        Series::L01 => ch_l01(window),
        Series::L11 => ch_l11(window),
        Series::W => ch_w(args.level, window),
        Series::F => ch_f(window),
    })
}

pub fn cmd_characters(args: &CharactersArgs) -> Result<Report> {
    let series = character_series(args)?;
    let mut header = vec!["z".to_string()];
    header.extend((0..=args.q_max).map(|q| format!("q^{q}")));
    let mut grid = Table {
        title: "coefficient of z^row q^column".to_string(),
        header,
        rows: Vec::new(),
    };
    for z in args.z_min..=args.z_max {
        let mut row = vec![z.to_string()];
        row.extend((0..=args.q_max).map(|q| series.coeff(z, q).to_string()));
        grid.rows.push(row);
    }
    let mut sums = vec!["sum".to_string()];
    sums.extend((0..=args.q_max).map(|q| series.z_sum(q).to_string()));
    grid.rows.push(sums);

    let mut long = Table::new("coefficients", &["z_power", "q_power", "coeff"]);
    for (z, q, c) in series.terms() {
        long.push([z.to_string(), q.to_string(), c.to_string()]);
    }
    let z_sums = (0..=args.q_max)
        .map(|q| ZSum { q, coeff: series.z_sum(q).to_string() })
        .collect();
    let result = CharactersResult { series, z_sums };
    Ok(Report::new("characters", args, true, &result)
        .with_table(grid)
        .with_csv_table(long))
}

pub fn parse_monomial(s: &str) -> Result<Vec<i64>> {
    let mut out = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|e| FockError::InvalidInput(format!("mode index {t:?}: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_unstable();
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
struct ApplyResult {
    indices: Vec<i64>,
    fibonacci: bool,
    leading: Option<ElementaryVector>,
    terms: usize,
    vector: FockVector<Coeff>,
}

pub fn cmd_apply(args: &ApplyArgs) -> Result<Report> {
    let indices = parse_monomial(&args.monomial)?;
    let vector: FockVector<Coeff> = apply_indices_in(&indices, args.sector, args.level)?;
    let leading = match FibonacciMonomial::new(indices.clone()) {
        Ok(m) => Some(leading_vector_in(&m, args.sector, args.level)?),
        Err(_) => None,
    };
    let passed = leading
        .as_ref()
        .map_or(true, |q| !vector.coefficient_of(q).is_zero());
    let mut t = Table::new("expansion", &["coeff", "charge", "partition", "wedge", "leading"]);
    for (w, c) in vector.iter() {
        let parts: Vec<String> = w.partition().iter().map(u32::to_string).collect();
        t.push([
            c.to_string(),
            w.charge().to_string(),
            format!("({})", parts.join(",")),
            w.to_string(),
            if leading.as_ref() == Some(w) { "Q".to_string() } else { String::new() },
        ]);
    }
    let label = FibonacciMonomial::new(indices.clone()).map_or_else(
        |_| indices.iter().map(|i| format!("e({i})")).collect::<Vec<_>>().join(" "),
        |m| m.to_string(),
    );
    let result = ApplyResult {
        fibonacci: leading.is_some(),
        indices,
        leading,
        terms: vector.len(),
        vector,
    };
    Ok(Report::new("apply", args, passed, &result)
        .with_summary(format!(
            "{label} on the level {} extremal vector of sector {}: {} terms",
            args.level,
            args.sector.index(),
            result.terms
        ))
        .with_table(t))
}

#[derive(Clone, Debug, Serialize)]
struct QbinomResult {
    identity: crate::qseries::IdentityReport,
    stabilization: Vec<crate::qseries::StabilizationPoint>,
}

pub fn cmd_qbinom_identity(args: &QbinomArgs) -> Result<Report> {
    let identity = appendix_a_identity_check(args.n, args.q_max);
    let stabilization: Vec<_> = (0..=args.max_m)
        .map(|m| gaussian_stabilization(m, args.q_degree))
        .collect();
    let passed = identity.holds && stabilization.iter().all(|p| p.first_n.is_some());

    let mut rows = Table::new("q^{m²} [N-m, m]_q", &["m", "polynomial"]);
    for m in 0..=args.n / 2 {
        let p = gaussian_binomial(args.n - m, m).shift((m * m) as usize);
        rows.push([m.to_string(), p.to_string()]);
    }
    let mut stab = Table::new("first N with [N-m, m]_q = 1/(q)_m through the degree bound", &["m", "first_N"]);
    for p in &stabilization {
        stab.push([p.m.to_string(), p.first_n.map_or("none".to_string(), |n| n.to_string())]);
    }
    let mut report = Report::new("qbinom-identity", args, passed, &QbinomResult { identity: identity.clone(), stabilization })
        .with_summary(format!(
            "N = {}: {} coefficients compared, {} mismatches",
            args.n,
            (identity.window.z_max - identity.window.z_min + 1) * (identity.window.q_max + 1),
            identity.mismatches.len()
        ))
        .with_table(rows)
        .with_table(stab);
    if !identity.mismatches.is_empty() {
        let mut t = Table::new("mismatches", &["z", "q", "gaussian", "partitions"]);
        for m in &identity.mismatches {
            t.push([m.z.to_string(), m.q.to_string(), m.lhs.clone(), m.rhs.clone()]);
        }
        report = report.with_table(t);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::enumerate_fibonacci;
    use crate::cli::args::IntRange;

    #[test]
    fn monomial_parsing() {
        assert_eq!(parse_monomial("").unwrap(), Vec::<i64>::new());
        assert_eq!(parse_monomial("-1, -5,-3").unwrap(), vec![-5, -3, -1]);
        assert!(parse_monomial("-1,x").is_err());
    }

    #[test]
    fn symbol_window() {
        let args = RelationsArgs {
            modes: IntRange::new(-1, 1),
            charges: IntRange::new(0, 0),
            max_energy: 2,
            symbols: vec![Family::Central, Family::Raise],
        };
        let syms = relation_symbols(&args);
        assert_eq!(syms.len(), 4);
        assert_eq!(syms[0], MatrixSymbol::e(-1));
        assert_eq!(syms[3], MatrixSymbol::K);
        assert_eq!(test_vectors(&args).len(), 1 + 1 + 2);
    }

    #[test]
    fn character_counts_for_shifted_cells() {
        // e(-5) e(-3) alone on level one
        let cell = BidegreeCell::new(2, 8, 1);
        assert_eq!(basic_character_count(&cell), BigInt::from(1));
        assert_eq!(enumerate_fibonacci(&cell).len(), 1);
    }
}

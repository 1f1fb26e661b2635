//! The published tables, recomputed and laid out row by row.

use habiro::families::FamilySpec;
use habiro::qseries::{transform_g, transform_h};
use habiro::signcheck::{family_n_bound, PositivityVerdict};
use habiro::Error;
use num_bigint::BigInt;
use num_traits::{One, Zero};

struct CoefficientTable {
    title: &'static str,
    label: &'static str,
    /// `true` for `1/(1+q)`, `false` for `(1-q)/(1+q)`.
    inverse: bool,
    rows: &'static [(u32, usize)],
    family: fn(u32) -> FamilySpec,
}

// (parameter, number of printed coefficients)
const T3_ROWS: &[(u32, usize)] = &[(1, 11), (2, 9), (3, 8), (4, 8), (5, 7)];
const T4_ROWS: &[(u32, usize)] = &[(1, 10), (2, 8), (3, 8), (4, 7), (5, 7)];
const X5_ROWS: &[(u32, usize)] = &[(0, 8), (1, 8), (2, 8), (3, 8), (4, 8)];
const T7_ROWS: &[(u32, usize)] = &[(1, 9), (2, 9), (3, 9), (4, 8), (5, 8)];
const T8_ROWS: &[(u32, usize)] = &[(1, 9), (2, 8), (3, 8), (4, 8), (5, 8)];

fn torus32t(t: u32) -> FamilySpec {
    FamilySpec::TorusKnot32t { t }
}

fn x5(ell: u32) -> FamilySpec {
    FamilySpec::TorusKnot2 { m: 5, ell }
}

fn habiro_g(k: u32) -> FamilySpec {
    FamilySpec::HabiroG { k }
}

fn coefficient_table(n: u8) -> CoefficientTable {
    match n {
        3 => CoefficientTable {
            title: "Table 3: F_t(1/(1+q)), 1 <= t <= 5",
            label: "t",
            inverse: true,
            rows: T3_ROWS,
            family: torus32t,
        },
        4 => CoefficientTable {
            title: "Table 4: F_t((1-q)/(1+q)), 1 <= t <= 5",
            label: "t",
            inverse: false,
            rows: T4_ROWS,
            family: torus32t,
        },
        5 => CoefficientTable {
            title: "Table 5: X_5^(l)(1/(1+q)), 0 <= l <= 4",
            label: "l",
            inverse: true,
            rows: X5_ROWS,
            family: x5,
        },
        6 => CoefficientTable {
            title: "Table 6: X_5^(l)((1-q)/(1+q)), 0 <= l <= 4",
            label: "l",
            inverse: false,
            rows: X5_ROWS,
            family: x5,
        },
        7 => CoefficientTable {
            title: "Table 7: G_k(1/(1+q)), 1 <= k <= 5",
            label: "k",
            inverse: true,
            rows: T7_ROWS,
            family: habiro_g,
        },
        8 => CoefficientTable {
            title: "Table 8: G_k((1-q)/(1+q)), 1 <= k <= 5",
            label: "k",
            inverse: false,
            rows: T8_ROWS,
            family: habiro_g,
        },
        _ => unreachable!("coefficient tables are 3-8"),
    }
}

/// `1 + q + 2q^2 + ...` with a trailing ellipsis.
pub fn series_row(coeffs: &[BigInt]) -> String {
    let mut terms = Vec::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let t = match (i, c.is_one()) {
            (0, _) => c.to_string(),
            (1, true) => "q".into(),
            (1, false) => format!("{c}q"),
            (_, true) => format!("q^{i}"),
            (_, false) => format!("{c}q^{i}"),
        };
        terms.push(t);
    }
    terms.push("...".into());
    terms.join(" + ")
}

fn row_line(cells: &[String], label: &str, width: usize) -> String {
    format!("{label:<width$} | {}\n", cells.join(" "))
}

fn render_t1(cap: u32) -> Result<String, Error> {
    let specs: Vec<FamilySpec> = (1..=10).map(torus32t).collect();
    let bounds = specs.iter().map(|s| family_n_bound(s, cap)).collect::<Result<Vec<_>, _>>()?;
    Ok(format!("Table 1: N_t, 1 <= t <= 10\n{}", layout_bounds(&specs, &bounds)))
}

fn render_t2(cap: u32) -> Result<String, Error> {
    let specs: Vec<FamilySpec> = (1..=5u32)
        .flat_map(|m| (0..m).map(move |ell| FamilySpec::TorusKnot2 { m, ell }))
        .collect();
    let bounds = specs.iter().map(|s| family_n_bound(s, cap)).collect::<Result<Vec<_>, _>>()?;
    Ok(format!(
        "Table 2: N_(m,l), 1 <= m <= 5, 0 <= l <= m-1\n{}",
        layout_bounds(&specs, &bounds)
    ))
}

/// Parameter rows above a row of bounds, as in Tables 1 and 2.
fn layout_bounds(specs: &[FamilySpec], bounds: &[u64]) -> String {
    let rank = |k: &str| ["t", "m", "ell", "k"].iter().position(|&n| n == k).unwrap_or(4);
    let mut names: Vec<String> = specs[0].params().keys().cloned().collect();
    names.sort_by_key(|n| rank(n));
    let width = names.iter().map(String::len).max().unwrap_or(0).max(1) + 2;
    let mut out = String::new();
    for name in &names {
        let cells: Vec<String> = specs
            .iter()
            .map(|s| s.params().get(name).map_or_else(|| "-".into(), |v| v.to_string()))
            .collect();
        out += &row_line(&cells, name, width);
    }
    let cells: Vec<String> = bounds.iter().map(u64::to_string).collect();
    out += &row_line(&cells, "N", width);
    out
}

/// The `N` row for a `verify --table` run.
pub fn bound_table(specs: &[FamilySpec], verdicts: &[PositivityVerdict]) -> String {
    let mut out = String::new();
    // group consecutive specs of the same kind
    let mut start = 0;
    while start < specs.len() {
        let end = (start..specs.len())
            .find(|&i| specs[i].name() != specs[start].name())
            .unwrap_or(specs.len());
        let bounds: Vec<u64> = verdicts[start..end].iter().map(|v| v.n_used.unwrap_or(u64::MAX)).collect();
        out += &layout_bounds(&specs[start..end], &bounds).replace(&u64::MAX.to_string(), "?");
        start = end;
    }
    out
}

fn render_coefficients(n: u8) -> Result<String, Error> {
    let t = coefficient_table(n);
    let mut out = format!("{}\n", t.title);
    for &(p, len) in t.rows {
        let xi = (t.family)(p).expand(len - 1)?;
        let c = if t.inverse { transform_g(&xi) } else { transform_h(&xi) };
        out += &format!("{}={p} | {}\n", t.label, series_row(&c.dense()[..len]));
    }
    Ok(out)
}

pub fn render(n: u8, cap: u32) -> Result<String, Error> {
    let body = match n {
        1 => render_t1(cap)?,
        2 => render_t2(cap)?,
        _ => render_coefficients(n)?,
    };
    Ok(body + "\n")
}

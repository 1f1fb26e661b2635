//! One line per acceptance criterion: `criterion N: PASS|FAIL ...`.
//! Runs without the libtest harness so the lines always reach stdout.
//!
//! Criteria that hold are asserted. Two sub-items do not hold and are
//! reported as FAIL without aborting the run: the published 1/(1+q) rows for
//! G_k (criterion 2) and the alpha_1 improvement factor (criterion 8). For
//! those the test asserts the analysed behaviour instead, so a change in
//! either direction is noticed.

mod common;

use std::time::{Duration, Instant};

use common::distance;
use common::tables::*;
use habiro::arith::{interval_eval, Expr};
use habiro::asym::{ratio_diagnostics, AsymptoticProfile, Correction, RatioSample};
use habiro::families::{expand_fishburn, habiro_g_q_series, theta_q_expansion, FamilySpec};
use habiro::qseries::{inverse_g, transform_g, transform_h, Series};
use habiro::signcheck::{family_n_bound, infinite_family_check, verify_positivity, Verdict};
use habiro::thetaside::{
    c_sequence, g_is_zero, g_value, make_chi_k, make_chi_m_ell, make_chi_t, theta_xi, StrangeIdentity,
};
use habiro::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

const CAP: u32 = 4096;

type Row = (u32, &'static [u64]);
/// (table number, published rows, family, at (1-q)/(1+q))
type TableSpec = (&'static str, &'static [Row], fn(u32) -> FamilySpec, bool);

fn report(n: u32, pass: bool, detail: &str) {
    println!("criterion {n}: {} {detail}", if pass { "PASS" } else { "FAIL" });
}

fn ints(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn criterion_1_fishburn_exactness() {
    let start = Instant::now();
    let xi = expand_fishburn(10);
    let g = transform_g(&xi);
    let h = transform_h(&xi);
    let elapsed = start.elapsed();
    let ok_xi = xi.dense()[..6] == ints(&[1, 1, 2, 5, 15, 53])[..];
    let ok_g = g.dense()[..9] == ints(&[1, 1, 1, 2, 5, 16, 61, 271, 1372])[..];
    let ok_h = h.dense()[..9] == ints(&[1, 2, 6, 26, 142, 946, 7446, 67658, 697118])[..];
    let fast = elapsed < Duration::from_secs(1);
    let pass = ok_xi && ok_g && ok_h && fast;
    report(1, pass, &format!("xi={ok_xi} g={ok_g} h={ok_h} in {}", secs(elapsed)));
    assert!(pass);
}

fn criterion_2_table_reproduction() {
    let start = Instant::now();
    let mut exact = 0;
    let mut total = 0;
    let mut failures = Vec::new();
    let tables: [TableSpec; 6] = [
        ("3", TABLE_3_F_T_G, |t| FamilySpec::TorusKnot32t { t }, false),
        ("4", TABLE_4_F_T_H, |t| FamilySpec::TorusKnot32t { t }, true),
        ("5", TABLE_5_X5_G, |l| FamilySpec::TorusKnot2 { m: 5, ell: l }, false),
        ("6", TABLE_6_X5_H, |l| FamilySpec::TorusKnot2 { m: 5, ell: l }, true),
        ("7", TABLE_7_G_K_G, |k| FamilySpec::HabiroG { k }, false),
        ("8", TABLE_8_G_K_H, |k| FamilySpec::HabiroG { k }, true),
    ];
    for (name, rows, family, h) in tables {
        for &(p, published) in rows {
            let xi = family(p).expand(published.len() - 1).unwrap();
            let t = if h { transform_h(&xi) } else { transform_g(&xi) };
            total += 1;
            if t.dense()[..published.len()] == ints(published)[..] {
                exact += 1;
            } else {
                failures.push(format!("T{name}:{}", family(p)));
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = exact == total;
    report(
        2,
        pass,
        &format!(
            "{exact}/{total} rows exact in {}; mismatched: [{}] \
             (published G_k 1/(1+q) rows equal the unsigned binomial transform of xi \
             and contradict the published (1-q)/(1+q) rows of the same series)",
            secs(elapsed),
            failures.join(", ")
        ),
    );
    // Everything outside Table 7 must match.
    assert!(failures.iter().all(|f| f.starts_with("T7:")), "{failures:?}");
    // And Table 7 fails for the analysed reason, every row.
    for &(k, published) in TABLE_7_G_K_G {
        let xi = FamilySpec::HabiroG { k }.expand(published.len() - 1).unwrap();
        assert_eq!(inverse_g(&xi).dense()[..published.len()], ints(published)[..]);
    }
    assert!(elapsed < Duration::from_secs(600));
}

fn criterion_3_dual_route() {
    let mut specs: Vec<FamilySpec> = (1..=3).map(|t| FamilySpec::TorusKnot32t { t }).collect();
    specs.extend((1..=3).flat_map(|m| (0..m).map(move |ell| FamilySpec::TorusKnot2 { m, ell })));
    specs.extend((1..=3).map(|k| FamilySpec::HabiroG { k }));
    let mut bad = Vec::new();
    for s in &specs {
        let direct = s.expand(20).unwrap();
        let theta = theta_xi(&s.identity().unwrap(), 20).unwrap();
        if direct.dense() != theta.dense() {
            bad.push(s.to_string());
        }
    }
    report(3, bad.is_empty(), &format!("{} families, n <= 20, mismatches: {bad:?}", specs.len()));
    assert!(bad.is_empty());
}

/// Bernoulli numbers by the Akiyama-Tanigawa algorithm (B_1 = +1/2), kept
/// separate from the library's table.
fn bernoulli_oracle(n: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(n + 1);
    let mut a: Vec<BigRational> = Vec::new();
    for m in 0..=n {
        a.push(BigRational::new(BigInt::one(), BigInt::from(m + 1)));
        for j in (1..=m).rev() {
            a[j - 1] = BigRational::from_integer(BigInt::from(j)) * (&a[j - 1] - &a[j]);
        }
        out.push(a[0].clone());
    }
    out
}

/// `B_s(x) = sum_j C(s, j) B_j x^(s-j)` with `B_1 = -1/2`.
fn bernoulli_poly_oracle(b: &[BigRational], s: usize, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    let mut c = BigInt::one();
    for j in 0..=s {
        if j > 0 {
            c = c * BigInt::from(s - j + 1) / BigInt::from(j);
        }
        let bj = if j == 1 { -b[1].clone() } else { b[j].clone() };
        acc += BigRational::from_integer(c.clone()) * bj * num_traits::pow(x.clone(), s - j);
    }
    acc
}

fn criterion_4_c_sequence_spot_values() {
    let id = StrangeIdentity::for_family(&FamilySpec::TorusKnot32t { t: 1 }).unwrap();
    let c = c_sequence(&id, 2);
    let b = bernoulli_oracle(8);
    let m = id.f().period();
    let mut oracle = Vec::new();
    for n in 0..=2usize {
        let s = 2 * n + 2;
        let mut sum = BigRational::zero();
        for r in 1..=m {
            sum += id.f().at(r as i64) * bernoulli_poly_oracle(&b, s, &BigRational::new(r.into(), m.into()));
        }
        let v = sum * num_traits::pow(BigRational::from_integer(m.into()), s - 1) / BigRational::from_integer(s.into());
        oracle.push(if n % 2 == 0 { -v } else { v });
    }
    let expect: Vec<BigRational> = [1, 23, 1681].iter().map(|&v| BigRational::from_integer(v.into())).collect();
    let pass = c.values() == &expect[..] && oracle == expect;
    let show = |v: &[BigRational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    report(4, pass, &format!("C = [{}], independent oracle = [{}]", show(c.values()), show(&oracle)));
    assert!(pass);
}

fn criterion_5_bounds_and_positivity() {
    let start = Instant::now();
    let nt: Vec<u64> = (1..=10)
        .map(|t| family_n_bound(&FamilySpec::TorusKnot32t { t }, CAP).unwrap())
        .collect();
    let nml: Vec<u64> = (1..=5u32)
        .flat_map(|m| (0..m).map(move |ell| FamilySpec::TorusKnot2 { m, ell }))
        .map(|s| family_n_bound(&s, CAP).unwrap())
        .collect();
    let t1 = nt == [0, 0, 1, 1, 1, 2, 2, 3, 3, 4];
    let t2 = nml == [0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0];
    let mut specs: Vec<FamilySpec> = (1..=50).map(|t| FamilySpec::TorusKnot32t { t }).collect();
    specs.extend((1..=20).flat_map(|m| (0..m).map(move |ell| FamilySpec::TorusKnot2 { m, ell })));
    specs.extend((1..=50).map(|k| FamilySpec::HabiroG { k }));
    let not_proved: Vec<String> = specs
        .iter()
        .filter(|s| verify_positivity(s, CAP).unwrap().verdict != Verdict::ProvedPositive)
        .map(|s| s.to_string())
        .collect();
    let elapsed = start.elapsed();
    let pass = t1 && t2 && not_proved.is_empty() && elapsed < Duration::from_secs(300);
    report(
        5,
        pass,
        &format!(
            "table 1 {t1}, table 2 {t2}, {} of {} families proved positive in {}",
            specs.len() - not_proved.len(),
            specs.len(),
            secs(elapsed)
        ),
    );
    assert!(pass, "{not_proved:?}");
}

fn criterion_6_actual_identity() {
    let mut ok = true;
    for k in 1..=3 {
        let id = FamilySpec::HabiroG { k }.identity().unwrap();
        let theta = theta_q_expansion(&id, 200).unwrap().to_integer_series().unwrap();
        ok &= habiro_g_q_series(k, 200).unwrap().dense() == theta.dense();
    }
    report(6, ok, "k <= 3 through q^200");
    assert!(ok);
}

fn cos2pi(num: i64, den: i64) -> Expr {
    (Expr::int(2) * Expr::Pi * Expr::ratio(num, den)).cos()
}

fn criterion_7_closed_form_g_values() {
    const PREC: u32 = 128;
    let mut worst: f64 = 0.0;
    for t in 1..=10u32 {
        let g = g_value(&make_chi_t(t).unwrap(), 1, 1, PREC).enclosure;
        let p = 1i64 << (t + 1);
        let d = 3 * p;
        let four = -(Expr::int(1) / Expr::int(d).sqrt())
            * (cos2pi(p - 3, d) + cos2pi(3 + 2 * p, d) - cos2pi(p + 3, d) - cos2pi(2 * p - 3, d));
        let closed = -(Expr::int(1) / Expr::int(1 << (t - 1)).sqrt()) * (Expr::Pi / Expr::int(1 << t)).sin();
        for e in [four, closed] {
            worst = worst.max(distance(&g, &interval_eval(&e, PREC).unwrap()));
        }
    }
    for m in 1..=10i64 {
        for ell in 0..m {
            let g = g_value(&make_chi_m_ell(m as u32, ell as u32).unwrap(), 1, 1, PREC).enclosure;
            let closed = -(Expr::int(2) / Expr::int(2 * m + 1).sqrt()) * (Expr::Pi * Expr::ratio(ell + 1, 2 * m + 1)).sin();
            worst = worst.max(distance(&g, &interval_eval(&closed, PREC).unwrap()));
        }
    }
    let mut zeros = true;
    for k in 1..=10i64 {
        let f = make_chi_k(k as u32).unwrap();
        for l in 1..=(4 * k + 2) {
            if l % 2 == 0 {
                zeros &= g_is_zero(&f, 0, l as u64);
                continue;
            }
            let g = g_value(&f, 0, l as u64, PREC).enclosure;
            let closed = Expr::int(8) / Expr::int(4 * k + 2).sqrt()
                * (Expr::Pi * Expr::ratio(l, 2)).sin()
                * (Expr::Pi * Expr::ratio(l, 2 * (2 * k + 1))).cos();
            worst = worst.max(distance(&g, &interval_eval(&closed, PREC).unwrap()));
        }
    }
    let pass = worst < 1e-30 && zeros;
    report(7, pass, &format!("max deviation {worst:.1e} (tolerance 1e-30), even-l zeros exact: {zeros}"));
    assert!(pass);
}

fn errs(xi: &Series, spec: FamilySpec, ns: &[u64], c: Correction) -> Vec<f64> {
    let p = AsymptoticProfile::for_family(&spec, 128).unwrap();
    ratio_diagnostics(xi, &p, ns, c, 128)
        .into_iter()
        .map(|r: habiro::Result<RatioSample>| r.unwrap().error())
        .collect()
}

fn criterion_8_asymptotic_convergence() {
    let start = Instant::now();
    let fish = FamilySpec::Kontsevich;
    let xi = expand_fishburn(150);
    let e = errs(&xi, fish, &[64, 100, 128, 150], Correction::None);
    let a = e[3] < 0.03;
    let b = e[2] < 0.7 * e[0];
    let alpha = errs(&xi, fish, &[100], Correction::Alpha1)[0];
    let first = errs(&xi, fish, &[100], Correction::FirstOrder)[0];
    let c = alpha * 3.0 <= e[1];
    let mut analogues = Vec::new();
    for spec in [
        FamilySpec::TorusKnot32t { t: 2 },
        FamilySpec::TorusKnot2 { m: 2, ell: 1 },
        FamilySpec::HabiroG { k: 1 },
    ] {
        let xs = theta_xi(&spec.identity().unwrap(), 128).unwrap();
        let v = errs(&xs, spec, &[32, 64, 128], Correction::None);
        analogues.push((spec, v[1] < v[0] && v[2] < v[1]));
    }
    let analog = analogues.iter().all(|(_, ok)| *ok);
    let elapsed = start.elapsed();
    let fast = elapsed < Duration::from_secs(120);
    report(
        8,
        a && b && c && analog && fast,
        &format!(
            "|r(150)-1| = {:.3e} < 0.03: {a}; |r(128)-1| = {:.3e} < 0.7 |r(64)-1| = {:.3e}: {b}; \
             alpha_1 at n=100: {:.3e} vs uncorrected {:.3e}, factor >= 3: {c} \
             (alpha_1 is the first-order term of B_n, not of xi(n); the complete \
             first-order factor gives {:.3e}); analogues {:?}; {}",
            e[3],
            e[2],
            0.7 * e[0],
            alpha,
            e[1],
            first,
            analogues.iter().map(|(s, ok)| format!("{s}:{ok}")).collect::<Vec<_>>(),
            secs(elapsed)
        ),
    );
    assert!(a && b && analog && fast);
    // The alpha_1-only correction overshoots; the full first-order factor
    // improves by far more than 3x.
    assert!(alpha > e[1]);
    assert!(first * 3.0 <= e[1]);
}

fn criterion_9_remark_certificates() {
    let c1 = infinite_family_check(1, -1, 1, 6, CAP);
    let c2 = infinite_family_check(1, -1, 2, 6, CAP);
    let ok1 = c1.as_ref().is_ok_and(|c| c.m0 == 1 && c.samples.iter().all(|&(m, l, n)| l == m - 1 && n == 0));
    let ok2 = c2
        .as_ref()
        .is_ok_and(|c| c.m0 == 1 && c.modulus == 2 && c.samples.iter().all(|&(m, l, _)| m % 2 == 1 && 2 * l == m - 1));
    let rejects = [(1, 0, 3), (4, -1, 3), (1, 0, 4), (3, -2, 2)]
        .iter()
        .all(|&(p1, p2, q1)| matches!(infinite_family_check(p1, p2, q1, 2, CAP), Err(Error::NotCertified(_))));
    let pass = ok1 && ok2 && rejects;
    report(
        9,
        pass,
        &format!("(1,-1): {ok1}; (1/2,-1/2): {ok2}; c in {{1/3, 4/3, 1/4, 3/2}} rejected: {rejects}"),
    );
    assert!(pass);
}

fn main() {
    let criteria: [fn(); 9] = [
        criterion_1_fishburn_exactness,
        criterion_2_table_reproduction,
        criterion_3_dual_route,
        criterion_4_c_sequence_spot_values,
        criterion_5_bounds_and_positivity,
        criterion_6_actual_identity,
        criterion_7_closed_form_g_values,
        criterion_8_asymptotic_convergence,
        criterion_9_remark_certificates,
    ];
    let broken = criteria
        .iter()
        .enumerate()
        .filter(|(_, c)| std::panic::catch_unwind(**c).is_err())
        .map(|(i, _)| i + 1)
        .collect::<Vec<_>>();
    if !broken.is_empty() {
        eprintln!("acceptance assertions failed for criteria {broken:?}");
        std::process::exit(1);
    }
}

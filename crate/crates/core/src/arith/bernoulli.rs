//! Bernoulli numbers and polynomials, and even zeta values.
//!
//! Numbers are produced from tangent numbers with integer-only arithmetic
//! and memoized in a process-wide table guarded by an `RwLock`. The
//! convention is `B_1 = -1/2`.

use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::binomial;
use crate::error::{Error, Result};

static TABLE: RwLock<Option<Arc<Vec<BigRational>>>> = RwLock::new(None);

/// Tangent numbers `T_1..=T_n` (coefficients of `tan x = sum T_k x^(2k-1)/(2k-1)!`).
fn tangent_numbers(n: usize) -> Vec<BigInt> {
    let mut t = vec![BigInt::zero(); n + 1];
    if n == 0 {
        return t;
    }
    t[1] = BigInt::one();
    for k in 2..=n {
        t[k] = &t[k - 1] * BigInt::from(k - 1);
    }
    for k in 2..=n {
        for j in k..=n {
            t[j] = &t[j - 1] * BigInt::from(j - k) + &t[j] * BigInt::from(j - k + 2);
        }
    }
    t
}

fn compute_table(max_index: usize) -> Vec<BigRational> {
    let half = max_index / 2;
    let tangent = tangent_numbers(half);
    let mut out = Vec::with_capacity(max_index + 1);
    for k in 0..=max_index {
        let value = match k {
            0 => BigRational::one(),
            1 => BigRational::new(BigInt::from(-1), BigInt::from(2)),
            _ if k % 2 == 1 => BigRational::zero(),
            _ => {
                // B_2m = (-1)^(m-1) 2m T_m / (4^m (4^m - 1))
                let m = k / 2;
                let four_m = BigInt::one() << (2 * m);
                let num = BigInt::from(2 * m) * &tangent[m];
                let den = &four_m * (&four_m - 1);
                let r = BigRational::new(num, den);
                if m % 2 == 1 {
                    r
                } else {
                    -r
                }
            }
        };
        out.push(value);
    }
    out
}

/// Shared view of `B_0..=B_n` (the table may be longer).
pub fn bernoulli_table(n: usize) -> Arc<Vec<BigRational>> {
    if let Some(t) = TABLE.read().expect("bernoulli table poisoned").as_ref() {
        if t.len() > n {
            return Arc::clone(t);
        }
    }
    let mut guard = TABLE.write().expect("bernoulli table poisoned");
    if let Some(t) = guard.as_ref() {
        if t.len() > n {
            return Arc::clone(t);
        }
    }
    let old = guard.as_ref().map_or(0, |t| t.len());
    let size = n.max(2 * old).max(64);
    let table = Arc::new(compute_table(size));
    *guard = Some(Arc::clone(&table));
    table
}

pub fn bernoulli_number(k: usize) -> BigRational {
    bernoulli_table(k)[k].clone()
}

/// `B_k(x) = sum_j C(k, j) B_j x^(k-j)`.
pub fn bernoulli_poly(k: usize, x: &BigRational) -> BigRational {
    let table = bernoulli_table(k);
    // Horner in x over the coefficients C(k, j) B_j, j = 0..=k.
    let mut acc = BigRational::zero();
    for j in 0..=k {
        let c = &table[j] * BigRational::from_integer(binomial(k as u64, j as u64));
        acc = acc * x + c;
    }
    acc
}

/// `zeta(k) = r * pi^k` for even `k >= 2`; returns `(r, k)`.
pub fn zeta_even(k: u32) -> Result<(BigRational, u32)> {
    if k < 2 || k % 2 == 1 {
        return Err(Error::OddZetaArgument(k));
    }
    let n = k / 2;
    // zeta(2n) = (-1)^(n+1) B_2n (2 pi)^(2n) / (2 (2n)!)
    let b = bernoulli_number(k as usize);
    let mut fact = BigInt::one();
    for i in 2..=k {
        fact *= BigInt::from(i);
    }
    let r = b * BigRational::new(BigInt::one() << k, fact * 2);
    let r = if n % 2 == 1 { r } else { -r };
    Ok((r, k))
}

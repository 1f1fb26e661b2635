//! Truncated power and Laurent series in one variable.

use std::fmt;
use std::ops::{AddAssign, Neg, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficient ring for [`TruncatedSeries`].
pub trait Coeff:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + fmt::Display
    + fmt::Debug
    + Send
    + Sync
{
    fn mul_ref(&self, other: &Self) -> Self;
    fn from_bigint(v: BigInt) -> Self;
    fn to_integer(&self) -> Option<BigInt>;
}

impl Coeff for BigInt {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn from_bigint(v: BigInt) -> Self {
        v
    }
    fn to_integer(&self) -> Option<BigInt> {
        Some(self.clone())
    }
}

impl Coeff for BigRational {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn from_bigint(v: BigInt) -> Self {
        BigRational::from_integer(v)
    }
    fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.to_integer())
    }
}

/// `sum_{e = min_degree}^{order} c_e q^e + O(q^(order+1))`.
///
/// Equality compares truncation orders and coefficients, not storage layout.
#[derive(Clone)]
pub struct TruncatedSeries<T = BigInt> {
    min_degree: i64,
    coeffs: Vec<T>,
    order: i64,
}

pub type Series = TruncatedSeries<BigInt>;
pub type RationalSeries = TruncatedSeries<BigRational>;

impl<T: Coeff> TruncatedSeries<T> {
    /// Coefficients beyond `order` are dropped; missing ones are zero.
    pub fn new(min_degree: i64, mut coeffs: Vec<T>, order: i64) -> Self {
        let len = (order - min_degree + 1).max(0) as usize;
        coeffs.resize(len, T::zero());
        TruncatedSeries {
            min_degree,
            coeffs,
            order,
        }
    }

    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        let order = coeffs.len() as i64 - 1;
        TruncatedSeries::new(0, coeffs, order)
    }

    pub fn zero(order: i64) -> Self {
        TruncatedSeries::new(0, Vec::new(), order)
    }

    pub fn one(order: i64) -> Self {
        TruncatedSeries::monomial(0, T::one(), order)
    }

    /// `c q^e` truncated at `order` (zero if `e > order`).
    pub fn monomial(e: i64, c: T, order: i64) -> Self {
        if e > order {
            return TruncatedSeries::new(order + 1, Vec::new(), order);
        }
        TruncatedSeries::new(e, vec![c], order)
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `q^e`; panics if `e` exceeds the truncation order.
    pub fn coeff(&self, e: i64) -> T {
        assert!(e <= self.order, "coefficient q^{e} beyond order {}", self.order);
        if e < self.min_degree {
            return T::zero();
        }
        self.coeffs[(e - self.min_degree) as usize].clone()
    }

    /// Exponent of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|i| self.min_degree + i as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Valuation for order bookkeeping: a zero series counts as `order + 1`.
    fn effective_valuation(&self) -> i64 {
        self.valuation().unwrap_or(self.order + 1)
    }

    pub fn truncate(&self, order: i64) -> Self {
        assert!(order <= self.order, "cannot extend a truncated series");
        let keep = (order - self.min_degree + 1).max(0) as usize;
        TruncatedSeries::new(self.min_degree, self.coeffs[..keep.min(self.coeffs.len())].to_vec(), order)
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        TruncatedSeries {
            min_degree: self.min_degree + k,
            coeffs: self.coeffs.clone(),
            order: self.order + k,
        }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            min_degree: self.min_degree,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
            order: self.order,
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        TruncatedSeries {
            min_degree: self.min_degree,
            coeffs: self.coeffs.iter().map(|c| c.mul_ref(s)).collect(),
            order: self.order,
        }
    }

    /// In-place `self += other`, truncating to the smaller order.
    pub fn add_assign(&mut self, other: &Self) {
        self.combine(other, false);
    }

    pub fn sub_assign(&mut self, other: &Self) {
        self.combine(other, true);
    }

    fn combine(&mut self, other: &Self, subtract: bool) {
        let order = self.order.min(other.order);
        let min = self.min_degree.min(other.min_degree);
        if min < self.min_degree || order < self.order {
            let mut v = vec![T::zero(); (order - min + 1).max(0) as usize];
            for (i, c) in self.coeffs.iter().enumerate() {
                let e = self.min_degree + i as i64;
                if e <= order {
                    v[(e - min) as usize] = c.clone();
                }
            }
            self.coeffs = v;
            self.min_degree = min;
            self.order = order;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            let e = other.min_degree + i as i64;
            if e > order {
                break;
            }
            if c.is_zero() {
                continue;
            }
            let slot = &mut self.coeffs[(e - min) as usize];
            if subtract {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(other);
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.sub_assign(other);
        r
    }

    pub fn mul(&self, other: &Self) -> Self {
        series_mul(self, other)
    }

    pub fn mul_to(&self, other: &Self, limit: i64) -> Self {
        series_mul_to(self, other, limit)
    }

    /// Multiply by `1 - u` in place (the substitution image of `q`).
    pub fn mul_one_minus_u(&mut self) {
        for i in (1..self.coeffs.len()).rev() {
            let prev = self.coeffs[i - 1].clone();
            self.coeffs[i] -= &prev;
        }
    }

    /// Drop leading zeros so `min_degree` equals the valuation.
    pub fn normalized(mut self) -> Self {
        match self.valuation() {
            Some(v) if v > self.min_degree => {
                let skip = (v - self.min_degree) as usize;
                self.coeffs.drain(..skip);
                self.min_degree = v;
            }
            None => {
                self.coeffs.clear();
                self.min_degree = self.order + 1;
            }
            _ => {}
        }
        self
    }

    /// Coefficients `0..=order` as a dense vector (requires `min_degree >= 0`
    /// or zero negative part).
    pub fn dense(&self) -> Vec<T> {
        assert!(self.order >= 0);
        (0..=self.order).map(|e| self.coeff(e)).collect()
    }
}

impl<T: Coeff> TruncatedSeries<T> {
    /// Exact conversion to integer coefficients, failing at the first non-integer.
    pub fn to_integer_series(&self) -> Result<Series> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            match c.to_integer() {
                Some(v) => out.push(v),
                None => {
                    return Err(Error::NonIntegral {
                        index: (self.min_degree + i as i64).max(0) as usize,
                        value: c.to_string(),
                    })
                }
            }
        }
        Ok(TruncatedSeries::new(self.min_degree, out, self.order))
    }
}

impl Series {
    pub fn to_rational(&self) -> RationalSeries {
        TruncatedSeries::new(
            self.min_degree,
            self.coeffs.iter().cloned().map(BigRational::from_integer).collect(),
            self.order,
        )
    }

    pub fn from_i64s(v: &[i64]) -> Series {
        TruncatedSeries::from_coeffs(v.iter().map(|&x| BigInt::from(x)).collect())
    }
}

/// Product truncated at `min(N_a + v_b, N_b + v_a)`.
pub fn series_mul<T: Coeff>(a: &TruncatedSeries<T>, b: &TruncatedSeries<T>) -> TruncatedSeries<T> {
    series_mul_to(a, b, i64::MAX)
}

/// As [`series_mul`], additionally truncated at `limit`.
pub fn series_mul_to<T: Coeff>(
    a: &TruncatedSeries<T>,
    b: &TruncatedSeries<T>,
    limit: i64,
) -> TruncatedSeries<T> {
    let va = a.effective_valuation();
    let vb = b.effective_valuation();
    let order = (a.order + vb).min(b.order + va).min(limit);
    let min = va + vb;
    if min > order {
        return TruncatedSeries::new(order + 1, Vec::new(), order);
    }
    let mut out = vec![T::zero(); (order - min + 1) as usize];
    let a0 = (va - a.min_degree) as usize;
    let b0 = (vb - b.min_degree) as usize;
    for (i, x) in a.coeffs[a0..].iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let room = out.len() - i.min(out.len());
        if room == 0 {
            break;
        }
        for (j, y) in b.coeffs[b0..].iter().take(room).enumerate() {
            if !y.is_zero() {
                out[i + j] += &x.mul_ref(y);
            }
        }
    }
    TruncatedSeries::new(min, out, order)
}

/// `(1-u; 1-u)_n` expanded in `u` up to `u^order`.
pub fn pochhammer_at_one_minus(n: u64, order: i64) -> Series {
    let mut acc = Series::one(order);
    for k in 1..=n {
        acc = acc.mul(&one_minus_q_power(k, order)).truncate(order);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// `1 - (1-u)^k = sum_{j>=1} (-1)^(j+1) C(k, j) u^j`.
pub fn one_minus_q_power(k: u64, order: i64) -> Series {
    let mut coeffs = vec![BigInt::zero()];
    let mut c = BigInt::one();
    for j in 1..=order.max(0) as u64 {
        if j > k {
            break;
        }
        c = c * BigInt::from(k - j + 1) / BigInt::from(j);
        coeffs.push(if j % 2 == 1 { c.clone() } else { -c.clone() });
    }
    Series::new(0, coeffs, order)
}

impl<T: Coeff> PartialEq for TruncatedSeries<T> {
    fn eq(&self, other: &Self) -> bool {
        if self.order != other.order {
            return false;
        }
        let lo = self.min_degree.min(other.min_degree);
        (lo..=self.order).all(|e| self.coeff(e) == other.coeff(e))
    }
}

impl<T: Coeff> fmt::Debug for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<T: Coeff> fmt::Display for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.min_degree + i as i64;
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})q")?,
                _ => write!(f, "({c})q^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}
